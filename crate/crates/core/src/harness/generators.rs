//! Seeded sample generators and the shared worker pool.

use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::convexity::segment_transit;
use crate::graphs::{interval_i, Graph};
use crate::hypergraph::Hypergraph;
use crate::setsystems::{canonical_transit, SetSystem};
use crate::subset::{GroundSet, Subset};
use crate::transit::TransitFunction;

/// Worker pool sized by `TG_THREADS` when set, else by rayon's default.
pub fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let threads = std::env::var("TG_THREADS").ok().and_then(|s| s.parse::<usize>().ok()).unwrap_or(0);
        rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool")
    })
}

/// Independent stream per `(seed, n, index)`, so results do not depend on
/// how work is split across threads.
pub fn sample_rng(seed: u64, n: usize, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 56));
    rng.set_stream(index);
    rng
}

/// Transit functions drawn from a mix of strategies, so that rare axioms
/// such as (Ch) or (J0) hold on a useful fraction of samples.
pub fn mixed_transit(n: usize, rng: &mut impl Rng) -> TransitFunction {
    let ground = GroundSet::new(n).expect("sample sizes are small");
    match rng.gen_range(0..6) {
        0 => {
            let d = [0.05, 0.15, 0.3, 0.5][rng.gen_range(0..4)];
            TransitFunction::random_with(ground, rng, d)
        }
        1 => sparse(ground, rng),
        2 => segment_transit(&sparse(ground, rng)),
        3 => {
            let d = [0.05, 0.15, 0.3][rng.gen_range(0..3)];
            segment_transit(&TransitFunction::random_with(ground, rng, d))
        }
        4 => intersection_closed(n, rng),
        _ => {
            let g = random_connected_graph(n, rng);
            interval_i(&g).expect("connected by construction")
        }
    }
}

/// A few pairs get one or two extra points; everything else is minimal.
pub fn sparse(ground: GroundSet, rng: &mut impl Rng) -> TransitFunction {
    let n = ground.len();
    let mut sets: Vec<Subset> = Vec::new();
    let mut entries = Vec::new();
    if n >= 3 {
        for _ in 0..rng.gen_range(1..=3) {
            let u = rng.gen_range(0..n);
            let v = (u + rng.gen_range(1..n)) % n;
            let mut s = Subset::pair(u, v);
            for _ in 0..rng.gen_range(1..=2) {
                s.insert(rng.gen_range(0..n));
            }
            sets.push(s);
            entries.push((u.min(v), u.max(v), s));
        }
    }
    entries.sort_by_key(|e| (e.0, e.1));
    entries.dedup_by_key(|e| (e.0, e.1));
    TransitFunction::new(ground, entries).expect("entries contain their endpoints")
}

/// Canonical transit function of a random intersection-closed family that
/// holds every singleton and the ground set.
pub fn intersection_closed(n: usize, rng: &mut impl Rng) -> TransitFunction {
    let full = Subset::full(n);
    let mut family: Vec<Subset> = (0..n).map(Subset::singleton).collect();
    family.push(full);
    for _ in 0..rng.gen_range(1..=n) {
        let s = Subset::from_bits(rng.gen::<u64>() & full.bits());
        if s.len() >= 2 {
            family.push(s);
        }
    }
    let mut i = 0;
    while i < family.len() {
        for j in 0..i {
            let m = family[i] & family[j];
            if !m.is_empty() && !family.contains(&m) {
                family.push(m);
            }
        }
        i += 1;
    }
    let c = SetSystem::new(GroundSet::new(n).expect("small"), family).expect("nonempty members");
    canonical_transit(&c).expect("singletons and V present")
}

/// A random spanning tree plus random extra edges.
pub fn random_connected_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n).expect("small");
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.add_edge(order[i], order[j]).expect("in range");
    }
    let p = rng.gen_range(0.0..0.6);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// A connected hypergraph with mostly small edges, resampled until connected.
pub fn random_hypergraph(n: usize, rng: &mut impl Rng) -> Hypergraph {
    loop {
        let m = rng.gen_range(1..=n.max(2));
        let edges: Vec<Subset> = (0..m)
            .map(|_| {
                let size = rng.gen_range(1..=n.min(4));
                let mut pts: Vec<usize> = (0..n).collect();
                pts.shuffle(rng);
                pts[..size].iter().copied().collect()
            })
            .collect();
        let h = Hypergraph::new(GroundSet::new(n).expect("small"), edges).expect("nonempty edges");
        if h.is_connected() {
            return h;
        }
    }
}

/// Every connected hypergraph on `n` vertices with at most `max_edges`
/// distinct edges, edge lists in increasing order.
pub fn tiny_hypergraphs(n: usize, max_edges: usize) -> Vec<Hypergraph> {
    let candidates: Vec<Subset> = Subset::full(n).subsets().filter(|s| !s.is_empty()).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(n: usize, cand: &[Subset], from: usize, left: usize, chosen: &mut Vec<Subset>, out: &mut Vec<Hypergraph>) {
        let h = Hypergraph::new(GroundSet::new(n).expect("small"), chosen.clone()).expect("nonempty");
        if h.is_connected() {
            out.push(h);
        }
        if left == 0 {
            return;
        }
        for i in from..cand.len() {
            chosen.push(cand[i]);
            rec(n, cand, i + 1, left - 1, chosen, out);
            chosen.pop();
        }
    }
    rec(n, &candidates, 0, max_edges, &mut chosen, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_axiom, AxiomId};

    #[test]
    fn streams_are_reproducible() {
        let a = mixed_transit(5, &mut sample_rng(7, 5, 3));
        let b = mixed_transit(5, &mut sample_rng(7, 5, 3));
        assert_eq!(a, b);
    }

    #[test]
    fn intersection_closed_is_monotone() {
        let mut rng = sample_rng(1, 6, 0);
        for _ in 0..50 {
            assert!(check_axiom(&intersection_closed(6, &mut rng), AxiomId::M).holds);
        }
    }

    #[test]
    fn tiny_counts() {
        // connected hypergraphs on two points: {01}, {0}{01}, {1}{01}, {0}{1}{01}
        assert_eq!(tiny_hypergraphs(2, 4).len(), 4);
        assert_eq!(tiny_hypergraphs(1, 4).len(), 2);
        let mut rng = sample_rng(2, 5, 0);
        assert!(random_hypergraph(5, &mut rng).is_connected());
        assert!(random_connected_graph(7, &mut rng).is_connected());
    }
}
