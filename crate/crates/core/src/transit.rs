//! Transit functions and the strict betweenness they induce.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::subset::{GroundSet, Subset};

#[inline]
fn tri_index(n: usize, u: usize, v: usize) -> usize {
    let (a, b) = if u <= v { (u, v) } else { (v, u) };
    a * n - a * (a + 1) / 2 + b
}

/// A symmetric map `R: V x V -> 2^V` with `u ∈ R(u,v)` and `R(u,u) = {u}`.
///
/// Only unordered pairs are stored, so symmetry holds by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitFunction {
    ground: GroundSet,
    table: Vec<Subset>,
}

impl TransitFunction {
    /// Builds a transit function from explicit transit sets.
    ///
    /// Pairs that are not listed default to `{u, v}`; the diagonal defaults
    /// to `{u}`. A listed diagonal entry must equal `{u}`.
    pub fn new(ground: GroundSet, entries: impl IntoIterator<Item = (usize, usize, Subset)>) -> Result<Self> {
        let n = ground.len();
        let mut table = Self::minimal_table(n);
        let mut seen = HashSet::new();
        for (u, v, set) in entries {
            ground.check_index(u)?;
            ground.check_index(v)?;
            if let Some(bad) = set.iter().find(|&i| i >= n) {
                return Err(Error::IndexOutOfRange { index: bad, n });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicatePair { u, v });
            }
            if u == v {
                if set != Subset::singleton(u) {
                    return Err(Error::AxiomViolation { axiom: "t3", u, v });
                }
            } else if !set.contains(u) || !set.contains(v) {
                return Err(Error::AxiomViolation { axiom: "t1", u, v });
            }
            table[tri_index(n, u, v)] = set;
        }
        Ok(TransitFunction { ground, table })
    }

    /// Builds `R(u,v) = f(u,v)` for every `u < v`; `f` must include both endpoints.
    pub fn from_fn(ground: GroundSet, mut f: impl FnMut(usize, usize) -> Subset) -> Result<Self> {
        let n = ground.len();
        let mut table = Self::minimal_table(n);
        for u in 0..n {
            for v in u + 1..n {
                let set = f(u, v);
                if !set.contains(u) || !set.contains(v) {
                    return Err(Error::AxiomViolation { axiom: "t1", u, v });
                }
                if !set.is_subset(ground.full()) {
                    return Err(Error::IndexOutOfRange { index: set.last().unwrap_or(0), n });
                }
                table[tri_index(n, u, v)] = set;
            }
        }
        Ok(TransitFunction { ground, table })
    }

    /// The transit function with `R(u,v) = {u,v}` everywhere.
    pub fn minimal(ground: GroundSet) -> Self {
        let table = Self::minimal_table(ground.len());
        TransitFunction { ground, table }
    }

    fn minimal_table(n: usize) -> Vec<Subset> {
        let mut table = vec![Subset::EMPTY; n * (n + 1) / 2];
        for u in 0..n {
            for v in u..n {
                table[tri_index(n, u, v)] = Subset::pair(u, v);
            }
        }
        table
    }

    /// Random transit function: every non-endpoint joins each `R(u,v)`,
    /// `u != v`, independently with probability `density`.
    pub fn random(n: usize, seed: u64, density: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&density) {
            return Err(Error::InvalidInput(format!("density {density} not in [0, 1]")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Ok(Self::random_with(GroundSet::new(n)?, &mut rng, density))
    }

    pub(crate) fn random_with(ground: GroundSet, rng: &mut impl Rng, density: f64) -> Self {
        let n = ground.len();
        let mut r = TransitFunction::minimal(ground);
        for u in 0..n {
            for v in u + 1..n {
                let mut set = Subset::pair(u, v);
                for w in 0..n {
                    if w != u && w != v && rng.gen_bool(density) {
                        set.insert(w);
                    }
                }
                r.table[tri_index(n, u, v)] = set;
            }
        }
        r
    }

    #[inline]
    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    // ground sets are nonempty by construction
    #[allow(clippy::len_without_is_empty)]
    #[inline]
    pub fn len(&self) -> usize {
        self.ground.len()
    }

    /// `R(u,v)`. Panics on out-of-range indices; see [`Self::transit_set`].
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Subset {
        self.table[tri_index(self.len(), u, v)]
    }

    /// Checked `R(u,v)`.
    pub fn transit_set(&self, u: usize, v: usize) -> Result<Subset> {
        self.ground.check_index(u)?;
        self.ground.check_index(v)?;
        Ok(self.get(u, v))
    }

    /// Full `n x n` row-major copy of the table for tight loops.
    pub(crate) fn matrix(&self) -> Vec<Subset> {
        let n = self.len();
        let mut m = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                m.push(self.get(u, v));
            }
        }
        m
    }

    /// The triples `(u, v, R(u,v))`, `u < v`, that differ from `{u, v}`.
    pub fn entries(&self) -> Vec<(usize, usize, Subset)> {
        let n = self.len();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let s = self.get(u, v);
                if s != Subset::pair(u, v) {
                    out.push((u, v, s));
                }
            }
        }
        out
    }

    /// Distinct transit sets, including the singletons on the diagonal.
    pub fn transit_sets(&self) -> HashSet<Subset> {
        self.table.iter().copied().collect()
    }

    /// Replaces the ground set labels (same size).
    pub fn with_ground(mut self, ground: GroundSet) -> Result<Self> {
        if ground.len() != self.len() {
            return Err(Error::InvalidInput("ground size mismatch".into()));
        }
        self.ground = ground;
        Ok(self)
    }

    /// The strict betweenness `B(u,v) = R(u,v) \ {u,v}`.
    pub fn to_betweenness(&self) -> Betweenness {
        let n = self.len();
        let mut table = vec![Subset::EMPTY; self.table.len()];
        for u in 0..n {
            for v in u..n {
                table[tri_index(n, u, v)] = self.get(u, v) - Subset::pair(u, v);
            }
        }
        Betweenness { ground: self.ground.clone(), table }
    }
}

/// A symmetric strict betweenness: `u ∉ B(u,v)` for all `u, v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Betweenness {
    ground: GroundSet,
    table: Vec<Subset>,
}

impl Betweenness {
    /// Builds `B(u,v) = f(u,v)` for `u < v`, rejecting sets that contain an endpoint.
    pub fn from_fn(ground: GroundSet, mut f: impl FnMut(usize, usize) -> Subset) -> Result<Self> {
        let n = ground.len();
        let mut table = vec![Subset::EMPTY; n * (n + 1) / 2];
        for u in 0..n {
            for v in u + 1..n {
                let set = f(u, v);
                if set.contains(u) || set.contains(v) {
                    return Err(Error::InvalidInput(format!("B({u},{v}) contains an endpoint")));
                }
                table[tri_index(n, u, v)] = set;
            }
        }
        Ok(Betweenness { ground, table })
    }

    #[inline]
    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    // ground sets are nonempty by construction
    #[allow(clippy::len_without_is_empty)]
    #[inline]
    pub fn len(&self) -> usize {
        self.ground.len()
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Subset {
        self.table[tri_index(self.len(), u, v)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ix: &[usize]) -> Subset {
        ix.iter().copied().collect()
    }

    #[test]
    fn defaults_fill_unlisted_pairs() {
        let g = GroundSet::with_labels(["a", "b", "c", "d", "e"]).unwrap();
        let r = TransitFunction::new(
            g,
            [
                (0, 2, set(&[0, 1, 2])),
                (0, 3, set(&[0, 1, 3])),
                (0, 4, set(&[0, 1, 3, 4])),
                (3, 4, set(&[2, 3, 4])),
                (1, 3, set(&[1, 2, 3])),
            ],
        )
        .unwrap();
        assert_eq!(r.get(4, 0), set(&[0, 1, 3, 4]));
        assert_eq!(r.get(1, 2), set(&[1, 2]));
        assert_eq!(r.get(2, 2), set(&[2]));
        assert_eq!(r.transit_set(0, 4).unwrap(), r.transit_set(4, 0).unwrap());
    }

    #[test]
    fn single_point() {
        let r = TransitFunction::new(GroundSet::new(1).unwrap(), []).unwrap();
        assert_eq!(r.get(0, 0), set(&[0]));
    }

    #[test]
    fn rejects_bad_entries() {
        let g = GroundSet::new(3).unwrap();
        assert_eq!(
            TransitFunction::new(g.clone(), [(0, 2, set(&[1, 2]))]),
            Err(Error::AxiomViolation { axiom: "t1", u: 0, v: 2 })
        );
        assert_eq!(
            TransitFunction::new(g.clone(), [(1, 1, set(&[0, 1]))]),
            Err(Error::AxiomViolation { axiom: "t3", u: 1, v: 1 })
        );
        assert_eq!(
            TransitFunction::new(g.clone(), [(0, 3, set(&[0]))]),
            Err(Error::IndexOutOfRange { index: 3, n: 3 })
        );
        assert_eq!(
            TransitFunction::new(g.clone(), [(0, 1, set(&[0, 1])), (1, 0, set(&[0, 1]))]),
            Err(Error::DuplicatePair { u: 1, v: 0 })
        );
        assert!(matches!(
            TransitFunction::new(g, [(0, 1, set(&[0, 1, 5]))]),
            Err(Error::IndexOutOfRange { index: 5, .. })
        ));
        assert!(matches!(
            TransitFunction::minimal(GroundSet::new(2).unwrap()).transit_set(0, 2),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn betweenness_drops_endpoints() {
        let g = GroundSet::new(4).unwrap();
        let r = TransitFunction::new(g, [(0, 2, set(&[0, 1, 2]))]).unwrap();
        let b = r.to_betweenness();
        assert_eq!(b.get(0, 2), set(&[1]));
        assert_eq!(b.get(0, 1), Subset::EMPTY);
        assert_eq!(b.get(3, 3), Subset::EMPTY);
    }

    #[test]
    fn random_is_deterministic_and_density_zero_is_minimal() {
        let a = TransitFunction::random(5, 7, 0.3).unwrap();
        let b = TransitFunction::random(5, 7, 0.3).unwrap();
        assert_eq!(a, b);
        let z = TransitFunction::random(5, 7, 0.0).unwrap();
        assert_eq!(z, TransitFunction::minimal(GroundSet::new(5).unwrap()));
        let one = TransitFunction::random(1, 99, 0.8).unwrap();
        assert_eq!(one.get(0, 0), set(&[0]));
        assert!(TransitFunction::random(3, 0, 1.5).is_err());
    }

    #[test]
    fn entries_round_trip() {
        let r = TransitFunction::random(6, 3, 0.4).unwrap();
        let again = TransitFunction::new(r.ground().clone(), r.entries()).unwrap();
        assert_eq!(r, again);
    }
}
