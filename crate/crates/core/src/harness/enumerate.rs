//! Connected graphs up to isomorphism, by vertex augmentation and canonical
//! labeling (colour refinement plus individualization).

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::subset::Subset;

pub const MAX_ENUM_N: usize = 8;

/// Upper-triangle adjacency bits in the canonical order. Fits n ≤ 11.
pub fn canonical_code(g: &Graph) -> u64 {
    canonical_form(g).0
}

/// The canonical code and a relabeling `perm` (vertex `v` becomes `perm[v]`)
/// that realises it.
pub fn canonical_form(g: &Graph) -> (u64, Vec<usize>) {
    let n = g.len();
    assert!(n <= 11, "canonical codes are packed into 64 bits");
    let start = refine(g, vec![(0..n).collect()]);
    let mut best: Option<(u64, Vec<usize>)> = None;
    search(g, start, &mut best);
    best.unwrap_or((0, Vec::new()))
}

fn code_of(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.len();
    let mut inv = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = (code << 1) | g.has_edge(inv[i], inv[j]) as u64;
        }
    }
    code
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<(u64, Vec<usize>)>) {
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let mut perm = vec![0; g.len()];
            for (pos, c) in cells.iter().enumerate() {
                perm[c[0]] = pos;
            }
            let code = code_of(g, &perm);
            if best.as_ref().is_none_or(|(b, _)| code > *b) {
                *best = Some((code, perm));
            }
        }
        Some(i) => {
            for &v in &cells[i] {
                let mut next = cells[..i].to_vec();
                next.push(vec![v]);
                next.push(cells[i].iter().copied().filter(|&w| w != v).collect());
                next.extend_from_slice(&cells[i + 1..]);
                search(g, refine(g, next), best);
            }
        }
    }
}

/// Splits cells by neighbour counts into every cell until stable. Sub-cells
/// are ordered by their count signature, so the result is label-invariant.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<Subset> = cells.iter().map(|c| c.iter().copied().collect()).collect();
        let mut next = Vec::with_capacity(cells.len());
        for c in &cells {
            let mut keyed: Vec<(Vec<usize>, usize)> =
                c.iter().map(|&v| (masks.iter().map(|&m| (g.neighbors(v) & m).len()).collect(), v)).collect();
            keyed.sort();
            let mut i = 0;
            while i < keyed.len() {
                let j = (i..keyed.len()).find(|&j| keyed[j].0 != keyed[i].0).unwrap_or(keyed.len());
                next.push(keyed[i..j].iter().map(|(_, v)| *v).collect());
                i = j;
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, each in canonical labeling, sorted by canonical code.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::EmptyGround);
    }
    if n > MAX_ENUM_N {
        return Err(Error::GroundTooLarge { n, max: MAX_ENUM_N });
    }
    Ok(cached(n).as_ref().clone())
}

fn cached(n: usize) -> Arc<Vec<Graph>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("cache lock").get(&n) {
        return v.clone();
    }
    let built = Arc::new(build(n));
    cache.lock().expect("cache lock").insert(n, built.clone());
    built
}

// Every connected graph has a vertex whose removal leaves it connected, so
// extending each class on n-1 vertices by one vertex reaches every class.
fn build(n: usize) -> Vec<Graph> {
    if n == 1 {
        return vec![Graph::new(1).expect("one vertex")];
    }
    let smaller = cached(n - 1);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for base in smaller.iter() {
        for nbrs in Subset::full(n - 1).subsets().filter(|s| !s.is_empty()) {
            let mut g = Graph::new(n).expect("n within bounds");
            for (u, v) in base.edges() {
                g.add_edge(u, v).expect("in range");
            }
            for v in nbrs {
                g.add_edge(v, n - 1).expect("in range");
            }
            let (code, perm) = canonical_form(&g);
            if seen.insert(code) {
                out.push((code, g.permuted(&perm)));
            }
        }
    }
    out.sort_by_key(|(c, _)| std::cmp::Reverse(*c));
    out.into_iter().map(|(_, g)| g).collect()
}

/// All connected graphs on `1..=n_max` vertices.
pub fn corpus(n_max: usize) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    for n in 1..=n_max {
        all.extend(enumerate_connected_graphs(n)?);
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 6, 21]);
        assert!(matches!(enumerate_connected_graphs(9), Err(Error::GroundTooLarge { .. })));
        assert!(enumerate_connected_graphs(0).is_err());
    }

    #[test]
    fn canonical_code_is_invariant() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        let c = canonical_code(&g);
        for perm in [[5, 4, 3, 2, 1, 0], [1, 2, 3, 4, 5, 0], [2, 0, 4, 1, 5, 3]] {
            assert_eq!(canonical_code(&g.permuted(&perm)), c);
        }
        let h = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (3, 5)]).unwrap();
        assert_ne!(canonical_code(&h), c);
    }

    #[test]
    fn regular_graphs_are_told_apart() {
        // C6 and two disjoint triangles are both 2-regular
        let c6 = Graph::cycle(6).unwrap();
        let tt = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical_code(&c6), canonical_code(&tt));
    }

    #[test]
    fn representatives_are_connected_and_canonical() {
        for g in enumerate_connected_graphs(5).unwrap() {
            assert!(g.is_connected());
            let (code, perm) = canonical_form(&g);
            assert_eq!(code_of(&g.permuted(&perm), &(0..5).collect::<Vec<_>>()), code);
        }
    }
}
