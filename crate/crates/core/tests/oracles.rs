//! The oracles themselves, on cases small enough to check by hand, and
//! quick agreement runs. The full budgets live in the acceptance runner.

mod common;

use transit_core::graphs::{all_paths_a, parse_graph6, toll_t, weak_toll_wt};
use transit_core::harness::enumerate_connected_graphs;
use transit_core::recognizers::{contains_induced, patterns, recognize, ClassId};
use transit_core::{Graph, TransitFunction};

fn mask(xs: &[usize]) -> u64 {
    xs.iter().fold(0, |m, &x| m | 1 << x)
}

#[test]
fn walk_oracles_on_the_claw() {
    // centre 0, leaves 1, 2, 3
    let claw = Graph::star(3).unwrap();
    assert_eq!(common::toll_oracle(&claw, 1, 2), mask(&[0, 1, 2]));
    // the weak toll walk 1, 0, 3, 0, 2 picks up the third leaf
    assert_eq!(common::weak_toll_oracle(&claw, 1, 2), mask(&[0, 1, 2, 3]));
}

#[test]
fn walk_oracles_on_paths_and_cycles() {
    let p4 = Graph::path(4).unwrap();
    assert_eq!(common::toll_oracle(&p4, 0, 3), mask(&[0, 1, 2, 3]));
    assert_eq!(common::toll_oracle(&p4, 0, 1), mask(&[0, 1]));
    let c4 = Graph::cycle(4).unwrap();
    assert_eq!(common::toll_oracle(&c4, 0, 2), mask(&[0, 1, 2, 3]));
    let k3 = Graph::complete(3).unwrap();
    assert_eq!(common::weak_toll_oracle(&k3, 0, 1), mask(&[0, 1]));
    assert_eq!(common::all_paths_oracle(&p4, 1, 3), mask(&[1, 2, 3]));
    assert_eq!(common::all_paths_oracle(&c4, 0, 1), mask(&[0, 1, 2, 3]));
}

#[test]
fn burnside_counts() {
    let all: Vec<u128> = (1..=5).map(common::unlabeled_graph_count).collect();
    assert_eq!(all, [1, 2, 4, 11, 34]);
    assert_eq!(common::connected_counts(6), [1, 1, 2, 6, 21, 112]);
}

#[test]
fn oracles_agree_up_to_five() {
    for n in 1..=5 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let t = toll_t(&g).unwrap();
            let w = weak_toll_wt(&g).unwrap();
            let a = all_paths_a(&g).unwrap();
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(t.get(u, v).bits(), common::toll_oracle(&g, u, v));
                    assert_eq!(w.get(u, v).bits(), common::weak_toll_oracle(&g, u, v));
                    assert_eq!(a.get(u, v).bits(), common::all_paths_oracle(&g, u, v));
                }
            }
        }
    }
}

#[test]
fn convex_sets_match_the_scan() {
    for seed in 0..20 {
        let r = TransitFunction::random(6, seed, 0.2).unwrap();
        let mut fast: Vec<u64> =
            transit_core::convexity::convex_sets(&r).unwrap().sets().iter().map(|s| s.bits()).collect();
        fast.sort_unstable();
        assert_eq!(fast, common::convex_scan(&r));
    }
}

#[test]
fn ptolemy_and_cycle_scan() {
    let fan = patterns::fan3().graph;
    assert!(!common::ptolemy_holds(&fan));
    assert!(!common::has_long_induced_cycle(&fan));
    assert!(common::ptolemy_holds(&Graph::complete(5).unwrap()));
    assert!(!common::ptolemy_holds(&Graph::cycle(4).unwrap()));
    assert!(common::has_long_induced_cycle(&Graph::cycle(5).unwrap()));
    for g in enumerate_connected_graphs(6).unwrap() {
        assert_eq!(recognize(&g, ClassId::Ptolemaic).unwrap().holds, common::ptolemy_holds(&g));
    }
}

/// Claw-freeness is sufficient for T = W_T but not necessary: from seven
/// vertices on, some graphs with a claw still have T = W_T.
#[test]
fn toll_equals_weak_toll_despite_a_claw() {
    let g = parse_graph6("FSTjw").unwrap();
    assert!(g.is_connected());
    assert!(contains_induced(&g, &patterns::claw().graph).is_some());
    assert!(!recognize(&g, ClassId::ClawFree).unwrap().holds);
    let t = toll_t(&g).unwrap();
    assert_eq!(t, weak_toll_wt(&g).unwrap());
    for u in 0..7 {
        for v in 0..7 {
            assert_eq!(t.get(u, v).bits(), common::weak_toll_oracle(&g, u, v));
        }
    }
}
