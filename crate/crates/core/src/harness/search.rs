//! Counterexample search for registered claims: exhaustive over tiny
//! objects first, then over seeded random samples.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::generators::{mixed_transit, pool, random_hypergraph, sample_rng, tiny_hypergraphs};
use super::theorems::{hypergraph_profile, DEFAULT_SEED, MAX_SAMPLE_N};
use crate::axioms::{check_many, AxiomId};
use crate::convexity::is_convex_geometry;
use crate::error::{Error, Result};
use crate::formats::TransitJson;
use crate::hypergraph::{Hypergraph, HypergraphJson};
use crate::subset::{GroundSet, Subset};
use crate::transit::TransitFunction;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PredicateId {
    /// Hypergraphs with at least three strong cut-vertices have a convex
    /// geometry as C-convexity.
    HyperCut3Cg,
    MJ0B1ImpliesCg,
    ChImpliesB1,
    ChB1ImpliesJ0,
    J0B1ImpliesCh,
    PB1J0ImpliesCh,
    CgImpliesM,
}

impl PredicateId {
    pub const ALL: &'static [PredicateId] = &[
        PredicateId::HyperCut3Cg,
        PredicateId::MJ0B1ImpliesCg,
        PredicateId::ChImpliesB1,
        PredicateId::ChB1ImpliesJ0,
        PredicateId::J0B1ImpliesCh,
        PredicateId::PB1J0ImpliesCh,
        PredicateId::CgImpliesM,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PredicateId::HyperCut3Cg => "hyper_cut3_cg",
            PredicateId::MJ0B1ImpliesCg => "m_j0_b1_implies_cg",
            PredicateId::ChImpliesB1 => "ch_implies_b1",
            PredicateId::ChB1ImpliesJ0 => "ch_b1_implies_j0",
            PredicateId::J0B1ImpliesCh => "j0_b1_implies_ch",
            PredicateId::PB1J0ImpliesCh => "p_b1_j0_implies_ch",
            PredicateId::CgImpliesM => "cg_implies_m",
        }
    }

    /// Hypotheses and conclusion, for the transit-function claims.
    fn claim(self) -> Option<(&'static [AxiomId], Conclusion)> {
        use AxiomId::*;
        Some(match self {
            PredicateId::HyperCut3Cg => return None,
            PredicateId::MJ0B1ImpliesCg => (&[M, J0, B1], Conclusion::Cg),
            PredicateId::ChImpliesB1 => (&[Ch], Conclusion::Axiom(B1)),
            PredicateId::ChB1ImpliesJ0 => (&[Ch, B1], Conclusion::Axiom(J0)),
            PredicateId::J0B1ImpliesCh => (&[J0, B1], Conclusion::Axiom(Ch)),
            PredicateId::PB1J0ImpliesCh => (&[P, B1, J0], Conclusion::Axiom(Ch)),
            PredicateId::CgImpliesM => (&[], Conclusion::CgThenM),
        })
    }
}

impl fmt::Display for PredicateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PredicateId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PredicateId::ALL.iter().copied().find(|p| p.name() == s).ok_or_else(|| Error::UnknownPredicate(s.to_string()))
    }
}

#[derive(Clone, Copy)]
enum Conclusion {
    Cg,
    Axiom(AxiomId),
    CgThenM,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Witness {
    Transit { transit: TransitJson },
    Hypergraph { hypergraph: HypergraphJson, strong_cut_vertices: Vec<usize> },
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub n_max: usize,
    pub seed: u64,
    /// Random samples per ground-set size once exhaustive search is exhausted.
    pub samples: usize,
}

impl SearchConfig {
    pub fn new(n_max: usize) -> Self {
        SearchConfig { n_max, seed: DEFAULT_SEED, samples: 100_000 }
    }
}

pub fn find_counterexample(p: PredicateId, n_max: usize) -> Result<Option<Witness>> {
    find_counterexample_with(p, &SearchConfig::new(n_max))
}

pub fn find_counterexample_with(p: PredicateId, cfg: &SearchConfig) -> Result<Option<Witness>> {
    if cfg.n_max > MAX_SAMPLE_N {
        return Err(Error::GroundTooLarge { n: cfg.n_max, max: MAX_SAMPLE_N });
    }
    match p.claim() {
        None => search_hypergraphs(cfg),
        Some((hyp, concl)) => search_transit(hyp, concl, cfg),
    }
}

fn violates(r: &TransitFunction, hyp: &[AxiomId], concl: Conclusion) -> Result<bool> {
    if !check_many(r, hyp).iter().all(|v| v.holds) {
        return Ok(false);
    }
    let ok = match concl {
        Conclusion::Cg => is_convex_geometry(r)?.is_geometry,
        Conclusion::Axiom(a) => check_many(r, &[a])[0].holds,
        Conclusion::CgThenM => !is_convex_geometry(r)?.is_geometry || check_many(r, &[AxiomId::M])[0].holds,
    };
    Ok(!ok)
}

/// Bits needed to list every transit function on `n` points.
fn exhaustive_bits(n: usize) -> usize {
    n.saturating_sub(2) * n * n.saturating_sub(1) / 2
}

/// The `code`-th transit function: each pair in turn takes the next
/// `n - 2` bits as its interior points.
fn decode(n: usize, code: u64) -> TransitFunction {
    let ground = GroundSet::new(n).expect("small");
    let mut bits = code;
    let mut entries = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let others: Vec<usize> = (0..n).filter(|&x| x != u && x != v).collect();
            let mut s = Subset::pair(u, v);
            for &x in &others {
                if bits & 1 == 1 {
                    s.insert(x);
                }
                bits >>= 1;
            }
            entries.push((u, v, s));
        }
    }
    TransitFunction::new(ground, entries).expect("contains endpoints")
}

fn first_hit<T: Send>(count: u64, make: impl Fn(u64) -> Result<Option<T>> + Sync) -> Result<Option<T>> {
    pool().install(|| {
        (0..count).into_par_iter().map(&make).find_first(|r| !matches!(r, Ok(None))).transpose().map(Option::flatten)
    })
}

fn search_transit(hyp: &[AxiomId], concl: Conclusion, cfg: &SearchConfig) -> Result<Option<Witness>> {
    let wrap = |r: TransitFunction| Witness::Transit { transit: TransitJson::from(&r) };
    for n in 3..=cfg.n_max {
        let bits = exhaustive_bits(n);
        let hit = if bits <= 16 {
            first_hit(1 << bits, |code| {
                let r = decode(n, code);
                Ok(violates(&r, hyp, concl)?.then_some(r))
            })?
        } else {
            first_hit(cfg.samples as u64, |i| {
                let r = mixed_transit(n, &mut sample_rng(cfg.seed, n, i));
                Ok(violates(&r, hyp, concl)?.then_some(r))
            })?
        };
        if let Some(r) = hit {
            return Ok(Some(wrap(r)));
        }
    }
    Ok(None)
}

fn search_hypergraphs(cfg: &SearchConfig) -> Result<Option<Witness>> {
    let check = |h: Hypergraph| -> Result<Option<Witness>> {
        let (cuts, is_cg) = hypergraph_profile(&h)?;
        Ok((cuts >= 3 && !is_cg).then(|| Witness::Hypergraph {
            hypergraph: HypergraphJson::from(&h),
            strong_cut_vertices: h.strong_cut_vertices().expect("connected").to_vec(),
        }))
    };
    for n in 3..=cfg.n_max.min(5) {
        let tiny = tiny_hypergraphs(n, 4);
        if let Some(w) = first_hit(tiny.len() as u64, |i| check(tiny[i as usize].clone()))? {
            return Ok(Some(w));
        }
    }
    for n in 6..=cfg.n_max {
        if let Some(w) =
            first_hit(cfg.samples as u64, |i| check(random_hypergraph(n, &mut sample_rng(cfg.seed, n, i))))?
        {
            return Ok(Some(w));
        }
    }
    Ok(None)
}
