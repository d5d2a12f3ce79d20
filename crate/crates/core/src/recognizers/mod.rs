//! Induced-subgraph search and recognition of the graph classes that the
//! characterizations are phrased in.

pub mod patterns;

use std::fmt;
use std::str::FromStr;

use crate::axioms::AxiomVerdict;
use crate::error::{Error, Result};
use crate::graphs::{blocks, Graph};
use crate::subset::Subset;

pub use patterns::Pattern;

/// Hole and chordless-cycle search is exponential; refuse larger graphs.
pub const MAX_CYCLE_SEARCH_N: usize = 16;

/// First induced embedding of `p` in `g`: `emb[i]` is the image of
/// pattern vertex `i`. Lexicographically least image sequence.
pub fn contains_induced(g: &Graph, p: &Graph) -> Option<Vec<usize>> {
    let k = p.len();
    if k > g.len() {
        return None;
    }
    let mut emb = Vec::with_capacity(k);
    if embed(g, p, &mut emb, Subset::EMPTY) {
        Some(emb)
    } else {
        None
    }
}

fn embed(g: &Graph, p: &Graph, emb: &mut Vec<usize>, used: Subset) -> bool {
    let i = emb.len();
    if i == p.len() {
        return true;
    }
    let mut cand = g.vertices() - used;
    for (j, &w) in emb.iter().enumerate() {
        if p.has_edge(i, j) {
            cand &= g.neighbors(w);
        } else {
            cand = cand - g.neighbors(w);
        }
    }
    let need = p.degree(i);
    for c in cand {
        if g.degree(c) < need {
            continue;
        }
        emb.push(c);
        if embed(g, p, emb, used.with(c)) {
            return true;
        }
        emb.pop();
    }
    false
}

/// Some chordless cycle on at least `min_len` vertices, in cyclic order.
pub fn find_induced_cycle(g: &Graph, min_len: usize) -> Result<Option<Vec<usize>>> {
    if g.len() > MAX_CYCLE_SEARCH_N {
        return Err(Error::GroundTooLarge { n: g.len(), max: MAX_CYCLE_SEARCH_N });
    }
    let min_len = min_len.max(3);
    for s in 0..g.len() {
        // s is the least vertex of the cycle
        let allowed = Subset::full(g.len()) - Subset::full(s + 1);
        for p1 in g.neighbors(s) & allowed {
            let mut path = vec![s, p1];
            if cycle_from(g, s, allowed, &mut path, Subset::singleton(s), min_len) {
                return Ok(Some(path));
            }
        }
    }
    Ok(None)
}

// `blocked` holds s and the closed neighbourhoods of all path vertices
// except the last two; the interior of the cycle must avoid N(s).
fn cycle_from(g: &Graph, s: usize, allowed: Subset, path: &mut Vec<usize>, blocked: Subset, min_len: usize) -> bool {
    let last = *path.last().expect("path starts with two vertices");
    let prev_closed = if path.len() > 2 { g.closed_neighbors(path[path.len() - 2]) } else { Subset::EMPTY };
    let blocked = blocked | prev_closed;
    let on_path: Subset = path.iter().copied().collect();
    let cand = (g.neighbors(last) & allowed) - blocked - on_path;
    for w in cand {
        if g.has_edge(w, s) {
            // w closes the cycle; `blocked` already keeps it off the interior
            if path.len() + 1 >= min_len {
                path.push(w);
                return true;
            }
            continue;
        }
        path.push(w);
        if cycle_from(g, s, allowed, path, blocked, min_len) {
            return true;
        }
        path.pop();
    }
    false
}

/// An induced cycle on five or more vertices.
pub fn has_hole(g: &Graph) -> Result<Option<Subset>> {
    Ok(find_induced_cycle(g, 5)?.map(|c| c.into_iter().collect()))
}

/// Three pairwise nonadjacent vertices, each pair joined by a path that
/// avoids the closed neighbourhood of the third.
pub fn has_asteroidal_triple(g: &Graph) -> Option<(usize, usize, usize)> {
    let n = g.len();
    // comp[z][v]: component label of v in G - N[z], or usize::MAX
    let comp: Vec<Vec<usize>> = (0..n)
        .map(|z| {
            let mut label = vec![usize::MAX; n];
            let mut left = g.vertices() - g.closed_neighbors(z);
            let mut id = 0;
            while let Some(v) = left.first() {
                let c = g.component_within(v, left);
                for x in c {
                    label[x] = id;
                }
                left = left - c;
                id += 1;
            }
            label
        })
        .collect();
    let together = |a: usize, b: usize, z: usize| comp[z][a] != usize::MAX && comp[z][a] == comp[z][b];
    for x in 0..n {
        for y in x + 1..n {
            if g.has_edge(x, y) {
                continue;
            }
            for z in y + 1..n {
                if g.has_edge(x, z) || g.has_edge(y, z) {
                    continue;
                }
                if together(x, y, z) && together(x, z, y) && together(y, z, x) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Maximum-cardinality search order (first visited first).
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.len();
    let mut weight = vec![0usize; n];
    let mut left = g.vertices();
    let mut order = Vec::with_capacity(n);
    while !left.is_empty() {
        let v = left.iter().max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).expect("nonempty");
        order.push(v);
        left.remove(v);
        for w in g.neighbors(v) & left {
            weight[w] += 1;
        }
    }
    order
}

/// A vertex whose earlier-visited neighbours (in MCS order) are not a
/// clique, with two nonadjacent such neighbours; `None` if the reverse
/// MCS order is a perfect elimination ordering.
fn peo_violation(g: &Graph) -> Option<(usize, usize, usize)> {
    let order = mcs_order(g);
    let mut seen = Subset::EMPTY;
    for &v in &order {
        let earlier = g.neighbors(v) & seen;
        for x in earlier {
            if let Some(y) = (earlier - g.closed_neighbors(x)).first() {
                return Some((v, x.min(y), x.max(y)));
            }
        }
        seen.insert(v);
    }
    None
}

pub fn is_chordal(g: &Graph) -> bool {
    peo_violation(g).is_none()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassId {
    Chordal,
    Ptolemaic,
    Interval,
    ProperInterval,
    HhdFree,
    WeakBipolarizable,
    BlockGraph,
    Tree,
    StarForest,
    TriangleFree,
    P3J0Class,
    FamilyAFree,
    ClawFree,
    TwoConnectedOrTreeComponents,
}

impl ClassId {
    pub const ALL: [ClassId; 14] = [
        ClassId::Chordal,
        ClassId::Ptolemaic,
        ClassId::Interval,
        ClassId::ProperInterval,
        ClassId::HhdFree,
        ClassId::WeakBipolarizable,
        ClassId::BlockGraph,
        ClassId::Tree,
        ClassId::StarForest,
        ClassId::TriangleFree,
        ClassId::P3J0Class,
        ClassId::FamilyAFree,
        ClassId::ClawFree,
        ClassId::TwoConnectedOrTreeComponents,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassId::Chordal => "chordal",
            ClassId::Ptolemaic => "ptolemaic",
            ClassId::Interval => "interval",
            ClassId::ProperInterval => "proper_interval",
            ClassId::HhdFree => "hhd_free",
            ClassId::WeakBipolarizable => "weak_bipolarizable",
            ClassId::BlockGraph => "block_graph",
            ClassId::Tree => "tree",
            ClassId::StarForest => "star_forest",
            ClassId::TriangleFree => "triangle_free",
            ClassId::P3J0Class => "p3_j0_class",
            ClassId::FamilyAFree => "family_A_free",
            ClassId::ClawFree => "claw_free",
            ClassId::TwoConnectedOrTreeComponents => "two_connected_or_tree_components",
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

fn embedding_verdict(class: ClassId, p: &Pattern, emb: &[usize]) -> AxiomVerdict {
    let roles: Vec<(String, usize)> =
        p.labels.iter().zip(emb).map(|(l, &v)| (format!("{}.{}", p.name, l), v)).collect();
    let borrowed: Vec<(&str, usize)> = roles.iter().map(|(r, v)| (r.as_str(), *v)).collect();
    AxiomVerdict::fail(class.name(), &borrowed)
}

fn cycle_verdict(class: ClassId, role: &str, cycle: &[usize]) -> AxiomVerdict {
    let roles: Vec<(&str, usize)> = cycle.iter().map(|&v| (role, v)).collect();
    AxiomVerdict::fail(class.name(), &roles)
}

/// First forbidden pattern found, as a failing verdict.
fn forbid(g: &Graph, class: ClassId, pats: &[Pattern]) -> Option<AxiomVerdict> {
    pats.iter().find_map(|p| contains_induced(g, &p.graph).map(|e| embedding_verdict(class, p, &e)))
}

fn chordal_verdict(g: &Graph, class: ClassId) -> Result<Option<AxiomVerdict>> {
    let Some((v, x, y)) = peo_violation(g) else { return Ok(None) };
    if g.len() <= MAX_CYCLE_SEARCH_N {
        let cycle = find_induced_cycle(g, 4)?
            .ok_or_else(|| Error::InternalDisagreement("non-chordal graph without a chordless cycle".into()))?;
        Ok(Some(cycle_verdict(class, "cycle", &cycle)))
    } else {
        Ok(Some(AxiomVerdict::fail(class.name(), &[("v", v), ("x", x), ("y", y)])))
    }
}

fn hole_verdict(g: &Graph, class: ClassId) -> Result<Option<AxiomVerdict>> {
    Ok(find_induced_cycle(g, 5)?.map(|c| cycle_verdict(class, "hole", &c)))
}

pub fn recognize(g: &Graph, class: ClassId) -> Result<AxiomVerdict> {
    use patterns as pt;
    let failure = match class {
        ClassId::Chordal => chordal_verdict(g, class)?,
        ClassId::Ptolemaic => match chordal_verdict(g, class)? {
            Some(v) => Some(v),
            None => forbid(g, class, &[pt::fan3()]),
        },
        ClassId::Interval => match chordal_verdict(g, class)? {
            Some(v) => Some(v),
            None => has_asteroidal_triple(g)
                .map(|(a, b, c)| AxiomVerdict::fail(class.name(), &[("at", a), ("at", b), ("at", c)])),
        },
        ClassId::ProperInterval => match recognize(g, ClassId::Interval)? {
            v if !v.holds => Some(AxiomVerdict { axiom: class.name().into(), ..v }),
            _ => forbid(g, class, &[pt::claw()]),
        },
        ClassId::HhdFree => match forbid(g, class, &[pt::house(), pt::domino()]) {
            Some(v) => Some(v),
            None => hole_verdict(g, class)?,
        },
        ClassId::WeakBipolarizable => match forbid(g, class, &[pt::house(), pt::domino(), pt::a_graph()]) {
            Some(v) => Some(v),
            None => hole_verdict(g, class)?,
        },
        ClassId::BlockGraph => {
            let d = blocks(g);
            d.blocks.iter().find_map(|&b| {
                b.iter().find_map(|x| {
                    (b - g.closed_neighbors(x)).first().map(|y| AxiomVerdict::fail(class.name(), &[("x", x), ("y", y)]))
                })
            })
        }
        ClassId::Tree => {
            if let Some(y) = (g.vertices() - g.component_of(0)).first() {
                Some(AxiomVerdict::fail(class.name(), &[("u", 0), ("v", y)]))
            } else {
                find_cycle(g).map(|c| cycle_verdict(class, "cycle", &c))
            }
        }
        ClassId::StarForest => forbid(g, class, &[pt::c3(), pt::p4(), pt::c4()]),
        ClassId::TriangleFree => forbid(g, class, &[pt::c3()]),
        ClassId::P3J0Class => forbid(g, class, &[pt::p4(), pt::c4(), pt::k4_minus(), pt::pan3()]),
        ClassId::FamilyAFree => forbid(g, class, &pt::family_a()),
        ClassId::ClawFree => forbid(g, class, &[pt::claw()]),
        ClassId::TwoConnectedOrTreeComponents => g.components().into_iter().find_map(|c| {
            let h = g.induced(c);
            let is_tree = h.edge_count() + 1 == h.len();
            let d = blocks(&h);
            if is_tree || d.cut_vertices.is_empty() {
                None
            } else {
                let local = d.cut_vertices.first().expect("nonempty");
                let global = c.iter().nth(local).expect("local index inside component");
                Some(AxiomVerdict::fail(class.name(), &[("cut", global)]))
            }
        }),
    };
    Ok(failure.unwrap_or_else(|| AxiomVerdict::pass(class.name())))
}

/// Some cycle of `g` (not necessarily induced), in order.
pub fn find_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    stack.push(w);
                } else if w != parent[u] && parent[w] != u {
                    // non-tree edge u-w: walk both ends up to their meeting point
                    let (mut a, mut b) = (u, w);
                    let (mut left, mut right) = (vec![a], vec![b]);
                    while a != b {
                        if depth[a] >= depth[b] {
                            a = parent[a];
                            left.push(a);
                        } else {
                            b = parent[b];
                            right.push(b);
                        }
                    }
                    right.pop();
                    right.reverse();
                    left.extend(right);
                    return Some(left);
                }
            }
        }
    }
    None
}

/// `d(u,v)d(w,x) + d(u,x)d(v,w) >= d(u,w)d(v,x)` for all 4-tuples.
pub fn ptolemy_inequality_holds(g: &Graph) -> Result<AxiomVerdict> {
    g.require_connected()?;
    let d = g.distances();
    let n = g.len();
    let dd = |a: usize, b: usize| d.get(a, b) as u64;
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                for x in 0..n {
                    if dd(u, v) * dd(w, x) + dd(u, x) * dd(v, w) < dd(u, w) * dd(v, x) {
                        return Ok(AxiomVerdict::fail("ptolemy", &[("u", u), ("v", v), ("w", w), ("x", x)]));
                    }
                }
            }
        }
    }
    Ok(AxiomVerdict::pass("ptolemy"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use patterns as pt;

    #[test]
    fn embeddings() {
        let h = pt::house();
        assert_eq!(contains_induced(&h.graph, &h.graph), Some(vec![0, 1, 2, 3, 4]));
        assert!(contains_induced(&Graph::cycle(6).unwrap(), &pt::p4().graph).is_some());
        assert!(contains_induced(&Graph::complete(4).unwrap(), &pt::claw().graph).is_none());
        // C4 is not an induced subgraph of K4
        assert!(contains_induced(&Graph::complete(4).unwrap(), &pt::c4().graph).is_none());
    }

    #[test]
    fn holes() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(has_hole(&c5).unwrap(), Some(Subset::full(5)));
        assert_eq!(has_hole(&pt::domino().graph).unwrap(), None);
        assert_eq!(has_hole(&Graph::complete(5).unwrap()).unwrap(), None);
        let c7 = Graph::cycle(7).unwrap();
        assert_eq!(find_induced_cycle(&c7, 4).unwrap().unwrap().len(), 7);
        assert!(find_induced_cycle(&Graph::new(17).unwrap(), 4).is_err());
    }

    #[test]
    fn asteroidal_triples() {
        // spider: centre 0, legs 0-1-2, 0-3-4, 0-5-6
        let spider = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(has_asteroidal_triple(&spider), Some((2, 4, 6)));
        assert_eq!(has_asteroidal_triple(&Graph::path(6).unwrap()), None);
        // every other vertex of a 6-cycle is asteroidal; C5 has no room
        assert_eq!(has_asteroidal_triple(&Graph::cycle(6).unwrap()), Some((0, 2, 4)));
        assert_eq!(has_asteroidal_triple(&Graph::cycle(5).unwrap()), None);
    }

    #[test]
    fn chordality() {
        assert!(is_chordal(&pt::fan3().graph));
        assert!(!is_chordal(&Graph::cycle(4).unwrap()));
        assert!(is_chordal(&Graph::complete(5).unwrap()));
    }

    #[test]
    fn class_examples() {
        let v = recognize(&pt::house().graph, ClassId::HhdFree).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.as_ref().unwrap().len(), 5);
        assert!(v.witness.unwrap()[0].role.starts_with("house."));
        let fan = pt::fan3().graph;
        assert!(!recognize(&fan, ClassId::Ptolemaic).unwrap().holds);
        assert!(recognize(&fan, ClassId::Chordal).unwrap().holds);
        let star = Graph::star(4).unwrap();
        assert!(recognize(&star, ClassId::StarForest).unwrap().holds);
        assert!(recognize(&star, ClassId::Tree).unwrap().holds);
        let c4 = Graph::cycle(4).unwrap();
        let v = recognize(&c4, ClassId::P3J0Class).unwrap();
        assert!(!v.holds);
        assert!(v.witness.unwrap()[0].role.starts_with("c4."));
        assert!(recognize(&c4, ClassId::TwoConnectedOrTreeComponents).unwrap().holds);
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(recognize(&bowtie, ClassId::BlockGraph).unwrap().holds);
        let v = recognize(&bowtie, ClassId::TwoConnectedOrTreeComponents).unwrap();
        assert_eq!(v.role("cut"), Some(2));
        assert!(!recognize(&c4, ClassId::BlockGraph).unwrap().holds);
    }

    #[test]
    fn tree_witnesses() {
        let v = recognize(&Graph::cycle(5).unwrap(), ClassId::Tree).unwrap();
        assert_eq!(v.roles("cycle").len(), 5);
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(recognize(&g, ClassId::Tree).unwrap().role("v"), Some(2));
    }

    #[test]
    fn ptolemy_examples() {
        let tree = Graph::from_edges(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert!(ptolemy_inequality_holds(&tree).unwrap().holds);
        assert!(!ptolemy_inequality_holds(&Graph::cycle(4).unwrap()).unwrap().holds);
        assert!(ptolemy_inequality_holds(&Graph::complete(4).unwrap()).unwrap().holds);
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(ptolemy_inequality_holds(&g), Err(Error::Disconnected));
    }

    #[test]
    fn class_names() {
        for c in ClassId::ALL {
            assert_eq!(c.name().parse::<ClassId>().unwrap(), c);
        }
    }
}
