//! Convex sets, hulls, extreme points and convex-geometry certificates.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::axioms::AxiomVerdict;
use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::transit::{Betweenness, TransitFunction};

/// Largest ground set for which the convex family is enumerated.
pub const MAX_FAMILY_N: usize = 24;
/// Largest ground set for the brute-force `2^n` scans.
pub const MAX_SCAN_N: usize = 20;
/// Largest ground set for the extreme-point betweenness check.
pub const MAX_EB_N: usize = 16;

/// A closure operator on `{0, .., n-1}`.
pub trait ClosureSystem {
    fn ground_len(&self) -> usize;
    fn closure(&self, s: Subset) -> Subset;

    fn is_closed(&self, s: Subset) -> bool {
        self.closure(s) == s
    }
}

impl ClosureSystem for TransitFunction {
    fn ground_len(&self) -> usize {
        self.len()
    }

    fn closure(&self, s: Subset) -> Subset {
        hull(self, s)
    }

    fn is_closed(&self, s: Subset) -> bool {
        is_convex(self, s)
    }
}

/// Closure given by a family: the intersection of all members containing `S`.
///
/// The family must contain the full ground set, so every `S` has a closure.
#[derive(Clone, Debug)]
pub struct FamilyClosure {
    n: usize,
    members: Vec<Subset>,
}

impl FamilyClosure {
    pub fn new(n: usize, members: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let mut members: Vec<Subset> = members.into_iter().collect();
        members.sort_by_key(|s| (s.len(), s.bits()));
        members.dedup();
        if !members.contains(&Subset::full(n)) {
            return Err(Error::HypothesesNotMet(vec!["k1".into()]));
        }
        Ok(FamilyClosure { n, members })
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }
}

impl ClosureSystem for FamilyClosure {
    fn ground_len(&self) -> usize {
        self.n
    }

    fn closure(&self, s: Subset) -> Subset {
        self.members.iter().filter(|m| s.is_subset(**m)).fold(Subset::full(self.n), |acc, &m| acc & m)
    }
}

pub fn is_convex(r: &TransitFunction, s: Subset) -> bool {
    let items: Vec<usize> = s.to_vec();
    for (i, &u) in items.iter().enumerate() {
        for &v in &items[i + 1..] {
            if !r.get(u, v).is_subset(s) {
                return false;
            }
        }
    }
    true
}

/// Least convex superset of `s`.
pub fn hull(r: &TransitFunction, s: Subset) -> Subset {
    let mut h = s;
    let mut queue: Vec<usize> = s.to_vec();
    let mut done = Subset::EMPTY;
    // each pair is examined once, when its later member leaves the queue
    while let Some(p) = queue.pop() {
        if done.contains(p) {
            continue;
        }
        done.insert(p);
        for q in done {
            for a in r.get(p, q) - h {
                h.insert(a);
                queue.push(a);
            }
        }
    }
    h
}

/// The convex sets of a closure system, deduplicated and sorted by
/// `(size, bits)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvexFamily {
    sets: Vec<Subset>,
}

impl ConvexFamily {
    fn from_unsorted(mut sets: Vec<Subset>) -> Self {
        sets.sort_by_key(|s| (s.len(), s.bits()));
        sets.dedup();
        ConvexFamily { sets }
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.sets.binary_search_by_key(&(s.len(), s.bits()), |t| (t.len(), t.bits())).is_ok()
    }

    pub fn is_intersection_closed(&self) -> bool {
        let set: HashSet<Subset> = self.sets.iter().copied().collect();
        self.sets.iter().enumerate().all(|(i, &a)| self.sets[i + 1..].iter().all(|&b| set.contains(&(a & b))))
    }
}

/// All closed sets, found by closing `K ∪ {p}` outward from the closure of ∅.
pub fn closed_sets<C: ClosureSystem>(c: &C) -> Result<ConvexFamily> {
    let n = c.ground_len();
    if n > MAX_FAMILY_N {
        return Err(Error::GroundTooLarge { n, max: MAX_FAMILY_N });
    }
    let full = Subset::full(n);
    let start = c.closure(Subset::EMPTY);
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(k) = queue.pop_front() {
        for p in full - k {
            let next = c.closure(k.with(p));
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    // the empty set is convex for a transit function, but the closure of ∅
    // in a family closure is the intersection of all members
    if c.is_closed(Subset::EMPTY) {
        seen.insert(Subset::EMPTY);
    }
    Ok(ConvexFamily::from_unsorted(seen.into_iter().collect()))
}

pub fn convex_sets(r: &TransitFunction) -> Result<ConvexFamily> {
    closed_sets(r)
}

/// Slow oracle: tests every subset of the ground set.
pub fn convex_sets_bruteforce(r: &TransitFunction) -> Result<ConvexFamily> {
    let n = r.len();
    if n > MAX_SCAN_N {
        return Err(Error::GroundTooLarge { n, max: MAX_SCAN_N });
    }
    let sets = Subset::full(n).subsets().filter(|&s| is_convex(r, s)).collect();
    Ok(ConvexFamily::from_unsorted(sets))
}

fn extreme_in<C: ClosureSystem>(c: &C, k: Subset) -> Subset {
    k.iter().filter(|&x| c.is_closed(k.without(x))).collect()
}

pub fn extreme_points(r: &TransitFunction, k: Subset) -> Result<Subset> {
    if !is_convex(r, k) {
        return Err(Error::NotConvex);
    }
    Ok(extreme_in(r, k))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MkmVerdict {
    pub holds: bool,
    /// A convex set strictly larger than the hull of its extreme points.
    pub counterexample: Option<Subset>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AntiExchangeWitness {
    pub k: Subset,
    pub p: usize,
    pub q: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntiExchangeVerdict {
    pub holds: bool,
    pub counterexample: Option<AntiExchangeWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionVerdict {
    pub holds: bool,
    /// A proper convex set that no single point extends.
    pub stuck: Option<Subset>,
}

/// Convex-geometry verdict with the object that certifies it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeometryCertificate {
    pub is_geometry: bool,
    pub mkm: MkmVerdict,
    pub anti_exchange: AntiExchangeVerdict,
    pub extension: ExtensionVerdict,
    /// Points `x1..xn` such that `V \ {x1..xi}` is convex for every `i`.
    pub chain: Option<Vec<usize>>,
}

impl GeometryCertificate {
    /// Checks the certificate against a closure system without trusting it.
    pub fn verify<C: ClosureSystem>(&self, c: &C) -> bool {
        let n = c.ground_len();
        match (&self.chain, self.is_geometry) {
            (Some(chain), true) => {
                let mut k = Subset::full(n);
                if !c.is_closed(k) || chain.len() != n {
                    return false;
                }
                for &x in chain {
                    if !k.contains(x) {
                        return false;
                    }
                    k.remove(x);
                    if !c.is_closed(k) {
                        return false;
                    }
                }
                true
            }
            (None, false) => {
                let ae = self.anti_exchange.counterexample.is_some_and(|w| {
                    c.is_closed(w.k)
                        && w.p != w.q
                        && !w.k.contains(w.p)
                        && !w.k.contains(w.q)
                        && c.closure(w.k.with(w.p)).contains(w.q)
                        && c.closure(w.k.with(w.q)).contains(w.p)
                });
                let mkm = self.mkm.counterexample.is_some_and(|k| c.is_closed(k) && c.closure(extreme_in(c, k)) != k);
                let stuck = self.extension.stuck.is_some_and(|k| {
                    c.is_closed(k)
                        && k != Subset::full(n)
                        && (Subset::full(n) - k).iter().all(|p| !c.is_closed(k.with(p)))
                });
                ae && mkm && stuck
            }
            _ => false,
        }
    }
}

/// Runs the three equivalent convex-geometry tests and insists they agree.
pub fn geometry<C: ClosureSystem>(c: &C) -> Result<GeometryCertificate> {
    let n = c.ground_len();
    let full = Subset::full(n);
    if !c.is_closed(Subset::EMPTY) {
        return Err(Error::HypothesesNotMet(vec!["empty set is closed".into()]));
    }
    let family = closed_sets(c)?;

    let mkm_bad = family.sets().iter().copied().find(|&k| c.closure(extreme_in(c, k)) != k);

    let mut ae_bad = None;
    'outer: for &k in family.sets() {
        let outside = full - k;
        for p in outside {
            let hp = c.closure(k.with(p));
            for q in (outside & hp).without(p) {
                if c.closure(k.with(q)).contains(p) {
                    ae_bad = Some(AntiExchangeWitness { k, p: p.min(q), q: p.max(q) });
                    break 'outer;
                }
            }
        }
    }

    let stuck =
        family.sets().iter().copied().find(|&k| k != full && (full - k).iter().all(|p| !family.contains(k.with(p))));

    let verdicts = [mkm_bad.is_none(), ae_bad.is_none(), stuck.is_none()];
    if verdicts.iter().any(|&v| v != verdicts[0]) {
        return Err(Error::InternalDisagreement(format!(
            "mkm={}, anti_exchange={}, extension={}",
            verdicts[0], verdicts[1], verdicts[2]
        )));
    }
    let is_geometry = verdicts[0];

    let chain = if is_geometry {
        // grow from ∅ by the least addable point, then read the additions
        // backwards as successive deletions from V
        let mut k = Subset::EMPTY;
        let mut added: Vec<usize> = Vec::with_capacity(n);
        while k != full {
            let p = (full - k)
                .iter()
                .find(|&p| family.contains(k.with(p)))
                .ok_or_else(|| Error::InternalDisagreement("extension chain stalled".into()))?;
            k.insert(p);
            added.push(p);
        }
        added.reverse();
        Some(added)
    } else {
        None
    };

    Ok(GeometryCertificate {
        is_geometry,
        mkm: MkmVerdict { holds: is_geometry, counterexample: mkm_bad },
        anti_exchange: AntiExchangeVerdict { holds: is_geometry, counterexample: ae_bad },
        extension: ExtensionVerdict { holds: is_geometry, stuck },
        chain,
    })
}

pub fn is_convex_geometry(r: &TransitFunction) -> Result<GeometryCertificate> {
    geometry(r)
}

/// Points of `X` not strictly between two other points of `X`.
pub fn ex_b(b: &Betweenness, x: Subset) -> Subset {
    x.iter()
        .filter(|&p| {
            let rest = x.without(p);
            !rest.iter().any(|u| rest.iter().any(|v| b.get(u, v).contains(p)))
        })
        .collect()
}

/// For every `X` and `x2 ∈ B(x1,x3)` inside it, some pair of extreme points
/// of `X` has `x2` between them.
pub fn check_eb1(b: &Betweenness) -> Result<AxiomVerdict> {
    let n = b.len();
    if n > MAX_EB_N {
        return Err(Error::GroundTooLarge { n, max: MAX_EB_N });
    }
    for x in Subset::full(n).subsets() {
        let mut covered = Subset::EMPTY;
        let ex = ex_b(b, x);
        for u in ex {
            for v in ex {
                covered |= b.get(u, v);
            }
        }
        for x1 in x {
            for x3 in x {
                if let Some(x2) = ((b.get(x1, x3) & x) - covered).first() {
                    let mut roles: Vec<(&str, usize)> = x.iter().map(|i| ("X", i)).collect();
                    roles.extend([("x1", x1), ("x2", x2), ("x3", x3)]);
                    return Ok(AxiomVerdict::fail("eb1", &roles));
                }
            }
        }
    }
    Ok(AxiomVerdict::pass("eb1"))
}

/// Chvátal's condition read literally on strict betweenness:
/// `x ∈ B(u,v)` and `y ∈ B(x,w)` give `y ∈ B(u,w) ∪ B(v,w) ∪ B(u,v)`.
///
/// This is stronger than `(Ch)` on the transit function, which also
/// accepts `y = u` or `y = v`.
pub fn check_eb2(b: &Betweenness) -> AxiomVerdict {
    let n = b.len();
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                let allowed = b.get(u, w) | b.get(v, w) | b.get(u, v);
                for x in b.get(u, v) {
                    if let Some(y) = (b.get(x, w) - allowed).first() {
                        return AxiomVerdict::fail("eb2", &[("u", u), ("v", v), ("w", w), ("x", x), ("y", y)]);
                    }
                }
            }
        }
    }
    AxiomVerdict::pass("eb2")
}

/// `R*(u,v)`: the hull of `R(u,v)`.
pub fn segment_transit(r: &TransitFunction) -> TransitFunction {
    TransitFunction::from_fn(r.ground().clone(), |u, v| hull(r, r.get(u, v))).expect("hull contains the endpoints")
}

/// Join-hull commutativity: `<K ∪ p> = ∪ { <k, p> : k ∈ K }` for every
/// nonempty convex `K` and every point `p`.
pub fn is_jhc(r: &TransitFunction) -> Result<AxiomVerdict> {
    let family = convex_sets(r)?;
    for &k in family.sets() {
        if k.is_empty() {
            continue;
        }
        for p in 0..r.len() {
            let lhs = hull(r, k.with(p));
            let rhs = k.iter().fold(Subset::EMPTY, |acc, x| acc | hull(r, Subset::pair(x, p)));
            if lhs != rhs {
                let mut roles: Vec<(&str, usize)> = k.iter().map(|i| ("K", i)).collect();
                roles.push(("p", p));
                return Ok(AxiomVerdict::fail("jhc", &roles));
            }
        }
    }
    Ok(AxiomVerdict::pass("jhc"))
}
