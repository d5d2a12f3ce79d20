//! The forbidden induced subgraphs used by the class characterizations.

use crate::graphs::Graph;

/// A small graph with display labels for its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub name: &'static str,
    pub graph: Graph,
    pub labels: Vec<&'static str>,
}

fn pattern(name: &'static str, labels: &[&'static str], edges: &[(&str, &str)]) -> Pattern {
    let at = |s: &str| labels.iter().position(|l| *l == s).expect("edge label is a vertex label");
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (at(a), at(b))).collect();
    let graph = Graph::from_edges(labels.len(), &pairs).expect("pattern edges are valid");
    Pattern { name, graph, labels: labels.to_vec() }
}

/// Square `v x c d` with apex `u` over the edge `cd`.
pub fn house() -> Pattern {
    pattern(
        "house",
        &["v", "x", "c", "d", "u"],
        &[("v", "x"), ("x", "c"), ("c", "d"), ("d", "v"), ("c", "u"), ("d", "u")],
    )
}

/// Two squares `v x c d` and `d c f u` sharing the edge `cd`.
pub fn domino() -> Pattern {
    pattern(
        "domino",
        &["v", "x", "c", "d", "u", "f"],
        &[("v", "x"), ("x", "c"), ("c", "d"), ("d", "v"), ("c", "f"), ("f", "u"), ("u", "d")],
    )
}

/// Square `c d x y` with a pendant `u` on `d` and a pendant `v` on `c`.
pub fn a_graph() -> Pattern {
    pattern(
        "a_graph",
        &["u", "v", "c", "d", "x", "y"],
        &[("v", "c"), ("c", "d"), ("d", "u"), ("c", "y"), ("y", "x"), ("x", "d")],
    )
}

/// A path `a b c d` plus a vertex `z` adjacent to all of it.
pub fn fan3() -> Pattern {
    pattern(
        "fan3",
        &["a", "b", "c", "d", "z"],
        &[("a", "b"), ("b", "c"), ("c", "d"), ("z", "a"), ("z", "b"), ("z", "c"), ("z", "d")],
    )
}

pub fn claw() -> Pattern {
    pattern("claw", &["c", "u", "x", "v"], &[("c", "u"), ("c", "x"), ("c", "v")])
}

pub fn p4() -> Pattern {
    pattern("p4", &["u", "x", "y", "v"], &[("u", "x"), ("x", "y"), ("y", "v")])
}

pub fn c4() -> Pattern {
    pattern("c4", &["u", "x", "y", "v"], &[("u", "x"), ("x", "y"), ("y", "v"), ("v", "u")])
}

pub fn c3() -> Pattern {
    pattern("c3", &["u", "v", "x"], &[("u", "v"), ("v", "x"), ("x", "u")])
}

/// `K4` minus the edge `xv`.
pub fn k4_minus() -> Pattern {
    pattern("k4_minus", &["u", "x", "y", "v"], &[("u", "x"), ("x", "y"), ("y", "v"), ("u", "y"), ("u", "v")])
}

/// Triangle `u x y` with a pendant `v` on `y`.
pub fn pan3() -> Pattern {
    pattern("pan3", &["u", "x", "y", "v"], &[("u", "x"), ("x", "y"), ("u", "y"), ("y", "v")])
}

/// The twelve graphs on which the P3 function first fails `(Ch)`.
///
/// Every member contains the path `u x v`, the edge `xy` and the edge `yw`
/// (with `y` outside `N(u) ∪ N(v)`), plus a subset of `{uw, vw, xw, uv}`.
pub fn family_a() -> Vec<Pattern> {
    const L: [&str; 5] = ["u", "v", "x", "y", "w"];
    const BASE: [(&str, &str); 4] = [("u", "x"), ("x", "v"), ("x", "y"), ("y", "w")];
    let cases: [(&'static str, &[(&str, &str)]); 12] = [
        ("F", &[]),
        ("P", &[("u", "w")]),
        ("K14+", &[("x", "w")]),
        ("P-bar", &[("u", "v")]),
        ("P+", &[("u", "w"), ("x", "w")]),
        ("H", &[("u", "w"), ("u", "v")]),
        ("M33", &[("x", "w"), ("u", "v")]),
        ("K23", &[("u", "w"), ("v", "w")]),
        ("S23", &[("u", "w"), ("v", "w"), ("x", "w")]),
        ("K23+", &[("u", "w"), ("v", "w"), ("u", "v")]),
        ("F3", &[("u", "w"), ("x", "w"), ("u", "v")]),
        ("S23+", &[("u", "w"), ("v", "w"), ("x", "w"), ("u", "v")]),
    ];
    cases
        .iter()
        .map(|&(name, extra)| {
            let edges: Vec<(&str, &str)> = BASE.iter().chain(extra.iter()).copied().collect();
            pattern(name, &L, &edges)
        })
        .collect()
}

/// Six-vertex graphs that are hole- and A-free, yet the m3 function fails
/// `(J0)` on them with `u`, `v` adjacent. Found by exhaustive search; every
/// failure on up to seven vertices contains one of these.
pub fn m3_j0_obstructions() -> Vec<Pattern> {
    const NAMES: [&str; 8] = ["m3j0_1", "m3j0_2", "m3j0_3", "m3j0_4", "m3j0_5", "m3j0_6", "m3j0_7", "m3j0_8"];
    const G6: [&str; 8] = ["E`]w", "ELvg", "ELv_", "EKNG", "EHfW", "EHUW", "E@vg", "E@Vg"];
    NAMES
        .iter()
        .zip(G6)
        .map(|(&name, g6)| Pattern {
            name,
            graph: crate::graphs::parse_graph6(g6).expect("valid graph6 constant"),
            labels: vec!["0", "1", "2", "3", "4", "5"],
        })
        .collect()
}

/// Every named pattern, family members included.
pub fn library() -> Vec<Pattern> {
    let mut all = vec![house(), domino(), a_graph(), fan3(), claw(), p4(), c4(), c3(), k4_minus(), pan3()];
    all.extend(family_a());
    all.extend(m3_j0_obstructions());
    all
}

pub fn by_name(name: &str) -> Option<Pattern> {
    library().into_iter().find(|p| p.name.eq_ignore_ascii_case(name))
}
