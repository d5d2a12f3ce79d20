//! Small hand-built transit functions that separate the axioms from each
//! other. Each one is named after the profile it exhibits.

use crate::subset::{GroundSet, Subset};
use crate::transit::TransitFunction;

fn build(labels: &[&str], entries: &[(&str, &str, &str)]) -> TransitFunction {
    let ground = GroundSet::with_labels(labels.iter().copied()).expect("fixture labels");
    let idx = |s: &str| ground.index_of(s).expect("fixture label");
    let triples: Vec<(usize, usize, Subset)> = entries
        .iter()
        .map(|&(u, v, set)| {
            let s: Subset = set.split(',').map(idx).collect();
            (idx(u), idx(v), s)
        })
        .collect();
    TransitFunction::new(ground.clone(), triples).expect("fixture is a transit function")
}

/// Convex geometry satisfying (b1) but neither (J0) nor (m).
pub fn geometry_not_monotone() -> TransitFunction {
    build(
        &["a", "b", "c", "d", "e"],
        &[("a", "c", "a,b,c"), ("a", "d", "a,b,d"), ("a", "e", "a,b,d,e"), ("d", "e", "d,c,e"), ("b", "d", "b,c,d")],
    )
}

/// Monotone, (J0) and (b1), yet anti-exchange fails at `K = {d,e,f}`.
pub fn monotone_b1_j0_not_geometry() -> TransitFunction {
    build(&["a", "b", "c", "d", "e", "f"], &[("a", "f", "a,c,f"), ("c", "e", "c,b,e"), ("b", "d", "b,a,d")])
}

/// (Ch) and (b1) without (J0).
pub fn ch_b1_not_j0() -> TransitFunction {
    build(&["a", "b", "c", "d"], &[("a", "c", "a,b,c"), ("b", "d", "b,c,d")])
}

/// (J0) and (b1) without (Ch).
pub fn j0_b1_not_ch() -> TransitFunction {
    build(&["a", "b", "c", "d", "e"], &[("a", "e", "a,c,d,e"), ("c", "d", "c,b,d"), ("a", "b", "a,e,b")])
}

/// (J0) and (Ch) without (b1).
pub fn j0_ch_not_b1() -> TransitFunction {
    build(&["a", "b", "c"], &[("a", "c", "a,b,c"), ("b", "c", "b,a,c"), ("a", "b", "a,b")])
}

/// (P), (b1) and (J0) hold and the convexity is a geometry, but (Ch) fails.
pub fn peano_not_ch() -> TransitFunction {
    build(
        &["u", "x", "v", "y", "w", "s", "t"],
        &[
            ("u", "v", "u,x,v"),
            ("x", "w", "x,y,w"),
            ("u", "w", "u,s,w"),
            ("v", "w", "v,t,w"),
            ("u", "t", "u,y,t"),
            ("v", "s", "v,y,s"),
        ],
    )
}

/// Monotone with (Ch), (J0), (b1), (a') and (k); its transit sets do not
/// form a convex geometry.
pub fn transit_system_not_geometry() -> TransitFunction {
    build(&["a", "b", "c", "d"], &[("a", "d", "a,b,c,d"), ("b", "d", "b,c,d")])
}

/// (m), (k), (Ch), (J0), (b1) hold; no transit set is the whole ground set.
pub fn no_full_transit_set() -> TransitFunction {
    build(&["a", "b", "c", "d"], &[("a", "c", "a,b,c"), ("a", "d", "a,b,d"), ("c", "d", "c,b,d")])
}

/// (m), (a'), (Ch), (J0), (b1) hold; `R(a,e) ∩ R(c,d)` is not a transit set.
pub fn not_intersection_closed() -> TransitFunction {
    build(
        &["a", "b", "c", "d", "e"],
        &[
            ("a", "e", "a,b,c,e"),
            ("b", "d", "b,a,d"),
            ("b", "e", "b,c,e"),
            ("c", "d", "c,a,b,d"),
            ("d", "e", "a,b,c,d,e"),
        ],
    )
}

/// Every named fixture.
pub fn all() -> Vec<(&'static str, TransitFunction)> {
    vec![
        ("geometry_not_monotone", geometry_not_monotone()),
        ("monotone_b1_j0_not_geometry", monotone_b1_j0_not_geometry()),
        ("ch_b1_not_j0", ch_b1_not_j0()),
        ("j0_b1_not_ch", j0_b1_not_ch()),
        ("j0_ch_not_b1", j0_ch_not_b1()),
        ("peano_not_ch", peano_not_ch()),
        ("transit_system_not_geometry", transit_system_not_geometry()),
        ("no_full_transit_set", no_full_transit_set()),
        ("not_intersection_closed", not_intersection_closed()),
    ]
}

pub fn by_name(name: &str) -> Option<TransitFunction> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, r)| r)
}
