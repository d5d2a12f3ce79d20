//! Set systems, the transit sets of a transit function, and the canonical
//! transit function of a set system.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::axioms::{check_many, AxiomId, AxiomVerdict};
use crate::convexity::{geometry, segment_transit, FamilyClosure, GeometryCertificate};
use crate::error::{Error, Result};
use crate::subset::{GroundSet, Subset};
use crate::transit::TransitFunction;

/// Nonempty subsets of a ground set, deduplicated and sorted by `(size, bits)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    ground: GroundSet,
    members: Vec<Subset>,
}

impl SetSystem {
    pub fn new(ground: GroundSet, members: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let n = ground.len();
        let mut list = Vec::new();
        for (i, m) in members.into_iter().enumerate() {
            if m.is_empty() {
                return Err(Error::EmptyEdge(i));
            }
            if let Some(bad) = m.iter().find(|&x| x >= n) {
                return Err(Error::IndexOutOfRange { index: bad, n });
            }
            list.push(m);
        }
        list.sort_by_key(|s| (s.len(), s.bits()));
        list.dedup();
        Ok(SetSystem { ground, members: list })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.members.binary_search_by_key(&(s.len(), s.bits()), |t| (t.len(), t.bits())).is_ok()
    }

    /// Intersection of all members containing `s`, if any member does.
    pub fn meet_over(&self, s: Subset) -> Option<Subset> {
        self.members
            .iter()
            .filter(|m| s.is_subset(**m))
            .fold(None, |acc: Option<Subset>, &m| Some(acc.map_or(m, |a| a & m)))
    }
}

/// `{"n": 3, "members": [[0], [1], [0, 1, 2]]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SetSystemJson {
    pub n: usize,
    pub members: Vec<Vec<usize>>,
}

impl From<&SetSystem> for SetSystemJson {
    fn from(c: &SetSystem) -> Self {
        SetSystemJson { n: c.len(), members: c.members.iter().map(|m| m.to_vec()).collect() }
    }
}

impl TryFrom<SetSystemJson> for SetSystem {
    type Error = Error;

    fn try_from(j: SetSystemJson) -> Result<Self> {
        let ground = GroundSet::new(j.n)?;
        let members = j.members.iter().map(|m| Subset::from_indices(m, j.n)).collect::<Result<Vec<_>>>()?;
        SetSystem::new(ground, members)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KAxiomReport {
    pub ks: AxiomVerdict,
    pub kr: AxiomVerdict,
    pub kc: AxiomVerdict,
    pub k1: AxiomVerdict,
    pub k2: AxiomVerdict,
}

impl KAxiomReport {
    pub fn is_t_system(&self) -> bool {
        self.ks.holds && self.kr.holds && self.kc.holds
    }
}

fn member_roles(role: &str, m: Subset) -> Vec<(&str, usize)> {
    m.iter().map(|x| (role, x)).collect()
}

pub fn check_k_axioms(c: &SetSystem) -> KAxiomReport {
    let n = c.len();
    let full = Subset::full(n);

    let ks = match (0..n).find(|&x| !c.contains(Subset::singleton(x))) {
        Some(x) => AxiomVerdict::fail("ks", &[("x", x)]),
        None => AxiomVerdict::pass("ks"),
    };

    // every member has points p, q such that every member holding both
    // contains it; p = q is allowed
    let kr = c
        .members
        .iter()
        .find(|&&m| {
            !m.iter().any(|p| {
                m.iter().filter(|&q| q >= p).any(|q| {
                    c.members.iter().all(|&other| !(other.contains(p) && other.contains(q)) || m.is_subset(other))
                })
            })
        })
        .map_or_else(|| AxiomVerdict::pass("kr"), |&m| AxiomVerdict::fail("kr", &member_roles("C", m)));

    let mut kc = AxiomVerdict::pass("kc");
    'pairs: for p in 0..n {
        for q in p..n {
            let ok = c.meet_over(Subset::pair(p, q)).is_some_and(|meet| c.contains(meet));
            if !ok {
                kc = AxiomVerdict::fail("kc", &[("p", p), ("q", q)]);
                break 'pairs;
            }
        }
    }

    let k1 = if c.contains(full) { AxiomVerdict::pass("k1") } else { AxiomVerdict::fail("k1", &[]) };

    // closure under nonempty intersections; ∅ is never stored
    let mut k2 = AxiomVerdict::pass("k2");
    'outer: for (i, &a) in c.members.iter().enumerate() {
        for (j, &b) in c.members.iter().enumerate().skip(i + 1) {
            let meet = a & b;
            if !meet.is_empty() && !c.contains(meet) {
                k2 = AxiomVerdict::fail("k2", &[("A", i), ("B", j)]);
                break 'outer;
            }
        }
    }

    KAxiomReport { ks, kr, kc, k1, k2 }
}

/// `R(x,y)` = intersection of all members containing `x` and `y`.
pub fn canonical_transit(c: &SetSystem) -> Result<TransitFunction> {
    let n = c.len();
    if let Some(x) = (0..n).find(|&x| !c.contains(Subset::singleton(x))) {
        return Err(Error::MissingSingleton { x });
    }
    let mut entries = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let meet = c.meet_over(Subset::pair(x, y)).ok_or(Error::UncoveredPair { x, y })?;
            entries.push((x, y, meet));
        }
    }
    TransitFunction::new(c.ground().clone(), entries)
}

/// The distinct transit sets `R(x,y)`, singletons included.
pub fn transit_set_system(r: &TransitFunction) -> SetSystem {
    SetSystem::new(r.ground().clone(), r.transit_sets()).expect("transit sets are nonempty and in range")
}

/// Whether the canonical transit function of `R`'s transit sets is `R`.
pub fn identifies(r: &TransitFunction) -> AxiomVerdict {
    let c = transit_set_system(r);
    let back = canonical_transit(&c).expect("transit sets contain every singleton and cover every pair");
    let n = r.len();
    for u in 0..n {
        for v in u + 1..n {
            if back.get(u, v) != r.get(u, v) {
                return AxiomVerdict::fail("identifies", &[("u", u), ("v", v)]);
            }
        }
    }
    AxiomVerdict::pass("identifies")
}

/// Whether the transit sets of `R`, with ∅ adjoined, form a convex geometry.
///
/// Requires `R` to be monotone and to satisfy `(a')` and `(k)`, so that the
/// transit sets plus ∅ form a convexity.
pub fn transit_system_is_convex_geometry(r: &TransitFunction) -> Result<GeometryCertificate> {
    let hyp = [AxiomId::M, AxiomId::APrime, AxiomId::K];
    let failed: Vec<String> =
        hyp.iter().zip(check_many(r, &hyp)).filter(|(_, v)| !v.holds).map(|(a, _)| a.name().to_string()).collect();
    if !failed.is_empty() {
        return Err(Error::HypothesesNotMet(failed));
    }
    let mut family: Vec<Subset> = r.transit_sets().into_iter().collect();
    family.push(Subset::EMPTY);
    let closure = FamilyClosure::new(r.len(), family)?;
    geometry(&closure)
}

/// A random monotone transit function: the segment function of a random one.
pub fn random_monotone(n: usize, rng: &mut impl Rng, density: f64) -> Result<TransitFunction> {
    let r = TransitFunction::random_with(GroundSet::new(n)?, rng, density);
    Ok(segment_transit(&r))
}
