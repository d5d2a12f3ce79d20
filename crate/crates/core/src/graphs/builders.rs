//! The eight graph transit functions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::transit::TransitFunction;

use super::{blocks, Graph};

/// Induced-path enumeration is exponential; refuse larger graphs.
pub const MAX_PATH_SEARCH_N: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    I,
    J,
    M3,
    A,
    T,
    Wt,
    P3,
    C,
}

impl Model {
    pub const ALL: [Model; 8] = [Model::I, Model::J, Model::M3, Model::A, Model::T, Model::Wt, Model::P3, Model::C];

    pub fn name(self) -> &'static str {
        match self {
            Model::I => "I",
            Model::J => "J",
            Model::M3 => "m3",
            Model::A => "A",
            Model::T => "T",
            Model::Wt => "WT",
            Model::P3 => "P3",
            Model::C => "C",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Model::ALL.into_iter().find(|m| m.name().eq_ignore_ascii_case(s)).ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

pub fn build(model: Model, g: &Graph) -> Result<TransitFunction> {
    match model {
        Model::I => interval_i(g),
        Model::J => induced_j(g),
        Model::M3 => m3(g),
        Model::A => all_paths_a(g),
        Model::T => toll_t(g),
        Model::Wt => weak_toll_wt(g),
        Model::P3 => Ok(p3(g)),
        Model::C => cutvertex_c(g),
    }
}

fn from_pairs(g: &Graph, f: impl FnMut(usize, usize) -> Subset) -> TransitFunction {
    TransitFunction::from_fn(g.ground(), f).expect("builders always include both endpoints")
}

/// Geodesic interval: vertices on some shortest `u,v`-path.
pub fn interval_i(g: &Graph) -> Result<TransitFunction> {
    g.require_connected()?;
    let d = g.distances();
    let n = g.len();
    Ok(from_pairs(g, |u, v| {
        let duv = d.get(u, v);
        (0..n).filter(|&w| d.get(u, w) + d.get(w, v) == duv).collect()
    }))
}

/// Every induced path from each start vertex, reported as
/// `(start, end, vertex set, edge count)`.
fn for_each_induced_path(g: &Graph, mut visit: impl FnMut(usize, usize, Subset, usize)) {
    fn extend(
        g: &Graph,
        start: usize,
        last: usize,
        on_path: Subset,
        blocked: Subset,
        edges: usize,
        visit: &mut dyn FnMut(usize, usize, Subset, usize),
    ) {
        // a new vertex must touch `last` and no earlier path vertex
        for w in g.neighbors(last) - blocked {
            let path = on_path.with(w);
            visit(start, w, path, edges + 1);
            extend(g, start, w, path, blocked | g.closed_neighbors(last), edges + 1, visit);
        }
    }
    for s in 0..g.len() {
        extend(g, s, s, Subset::singleton(s), Subset::singleton(s), 0, &mut visit);
    }
}

fn path_search_guard(g: &Graph) -> Result<()> {
    g.require_connected()?;
    if g.len() > MAX_PATH_SEARCH_N {
        return Err(Error::GroundTooLarge { n: g.len(), max: MAX_PATH_SEARCH_N });
    }
    Ok(())
}

/// Induced-path (monophonic) interval: vertices on some chordless `u,v`-path.
pub fn induced_j(g: &Graph) -> Result<TransitFunction> {
    path_search_guard(g)?;
    let n = g.len();
    let mut table = vec![Subset::EMPTY; n * n];
    for_each_induced_path(g, |s, t, path, _| {
        if s < t {
            table[s * n + t] |= path;
        }
    });
    Ok(from_pairs(g, |u, v| table[u * n + v] | Subset::pair(u, v)))
}

/// `u`, `v` and the vertices on induced `u,v`-paths of length at least three.
pub fn m3(g: &Graph) -> Result<TransitFunction> {
    path_search_guard(g)?;
    let n = g.len();
    let mut table = vec![Subset::EMPTY; n * n];
    for_each_induced_path(g, |s, t, path, edges| {
        if s < t && edges >= 3 {
            table[s * n + t] |= path;
        }
    });
    Ok(from_pairs(g, |u, v| table[u * n + v] | Subset::pair(u, v)))
}

/// All-paths function: vertices on some `u,v`-path, read off the blocks
/// along the block-cut tree.
pub fn all_paths_a(g: &Graph) -> Result<TransitFunction> {
    g.require_connected()?;
    let n = g.len();
    let (on_path, _) = blocks(g).path_unions(n);
    Ok(from_pairs(g, |u, v| on_path[u * n + v] | Subset::pair(u, v)))
}

/// Toll function.
///
/// For nonadjacent `u, v` with `A = N(u) \ N[v]`, `B = N(v) \ N[u]` and
/// `M = V \ (N[u] ∪ N[v])`, a toll walk is `u, a, ..., b, v` with `a ∈ A`,
/// `b ∈ B` and every other vertex in `M`. So `T(u,v)` is `{u, v}`, the
/// common neighbours, every adjacent pair `a ∈ A`, `b ∈ B`, and every
/// component of `G[M]` seen from both `A` and `B` together with the
/// vertices of `A` and `B` that see it.
pub fn toll_t(g: &Graph) -> Result<TransitFunction> {
    g.require_connected()?;
    let full = g.vertices();
    Ok(from_pairs(g, |u, v| {
        let mut t = Subset::pair(u, v);
        if g.has_edge(u, v) {
            return t;
        }
        let (nu, nv) = (g.neighbors(u), g.neighbors(v));
        t |= nu & nv;
        let a_side = nu - g.closed_neighbors(v);
        let b_side = nv - g.closed_neighbors(u);
        for a in a_side {
            let hit = g.neighbors(a) & b_side;
            if !hit.is_empty() {
                t |= hit.with(a);
            }
        }
        let mut middle = full - (g.closed_neighbors(u) | g.closed_neighbors(v));
        while let Some(x) = middle.first() {
            let comp = g.component_within(x, middle);
            middle = middle - comp;
            let around = g.neighbors_of_set(comp);
            let (sa, sb) = (around & a_side, around & b_side);
            if !sa.is_empty() && !sb.is_empty() {
                t |= comp | sa | sb;
            }
        }
        t
    }))
}

/// Weak toll function: walks `u, a, ..., b, v` whose only vertex adjacent
/// to `u` is `a` and whose only vertex adjacent to `v` is `b` (`a = b`
/// allowed).
pub fn weak_toll_wt(g: &Graph) -> Result<TransitFunction> {
    g.require_connected()?;
    let full = g.vertices();
    Ok(from_pairs(g, |u, v| {
        let mut t = Subset::pair(u, v);
        if g.has_edge(u, v) {
            return t;
        }
        let (nu, nv) = (g.neighbors(u), g.neighbors(v));
        let outer = (full - (nu | nv)) - Subset::pair(u, v);
        for a in nu {
            for b in nv {
                if a != b && (nv.contains(a) || nu.contains(b)) {
                    continue;
                }
                let allowed = outer.with(a).with(b);
                let comp = g.component_within(a, allowed);
                if comp.contains(b) {
                    t |= comp;
                }
            }
        }
        t
    }))
}

/// `{u, v}` plus the common neighbours of `u` and `v`.
pub fn p3(g: &Graph) -> TransitFunction {
    from_pairs(g, |u, v| Subset::pair(u, v) | (g.neighbors(u) & g.neighbors(v)))
}

/// `{u, v}` plus the cut vertices separating them.
pub fn cutvertex_c(g: &Graph) -> Result<TransitFunction> {
    g.require_connected()?;
    let n = g.len();
    let (_, cuts) = blocks(g).path_unions(n);
    Ok(from_pairs(g, |u, v| cuts[u * n + v] | Subset::pair(u, v)))
}
