#include <stdio.h>
#include <string.h>
#include "transit.h"

int main(void) {
    TgGraph *g = NULL;
    TgTransit *t = NULL;
    bool geo = false;
    char *json = NULL;

    /* path on four vertices */
    if (tg_graph_parse("Ch", &g) != TG_STATUS_OK) return 1;
    if (tg_build(g, "I", &t) != TG_STATUS_OK) return 2;
    if (tg_is_convex_geometry(t, &geo) != TG_STATUS_OK || !geo) return 3;
    if (tg_axiom_profile_json(t, &json) != TG_STATUS_OK) return 4;
    if (strstr(json, "\"b1\"") == NULL) return 5;
    tg_string_free(json);

    if (tg_build(g, "bogus", &t) != TG_STATUS_UNKNOWN_ID) return 6;
    if (tg_last_error() == NULL) return 7;

    tg_transit_free(t);
    tg_graph_free(g);
    puts("ok");
    return 0;
}
