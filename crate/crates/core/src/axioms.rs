//! Decision procedures for the betweenness axioms, with witnesses.
//!
//! Every checker evaluates its axiom exhaustively and, on failure, reports
//! the lexicographically first offending tuple in index order.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::transit::TransitFunction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    B1,
    B3,
    M,
    J0,
    Ch,
    P,
    APrime,
    K,
    Cg,
}

impl AxiomId {
    pub const ALL: [AxiomId; 9] = [
        AxiomId::B1,
        AxiomId::B3,
        AxiomId::M,
        AxiomId::J0,
        AxiomId::Ch,
        AxiomId::P,
        AxiomId::APrime,
        AxiomId::K,
        AxiomId::Cg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::B1 => "b1",
            AxiomId::B3 => "b3",
            AxiomId::M => "m",
            AxiomId::J0 => "j0",
            AxiomId::Ch => "ch",
            AxiomId::P => "p",
            AxiomId::APrime => "a_prime",
            AxiomId::K => "k",
            AxiomId::Cg => "cg",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    /// Accepts the snake-case names as well as the usual written forms
    /// such as `(J0)` or `a'`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').to_ascii_lowercase();
        let id = match t.as_str() {
            "b1" => AxiomId::B1,
            "b3" => AxiomId::B3,
            "m" | "monotone" => AxiomId::M,
            "j0" => AxiomId::J0,
            "ch" => AxiomId::Ch,
            "p" => AxiomId::P,
            "a_prime" | "a'" | "aprime" => AxiomId::APrime,
            "k" => AxiomId::K,
            "cg" => AxiomId::Cg,
            _ => return Err(Error::UnknownId(s.to_string())),
        };
        Ok(id)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub role: String,
    pub index: usize,
}

/// Outcome of one axiom (or class, or property) check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomVerdict {
    pub axiom: String,
    pub holds: bool,
    pub witness: Option<Vec<WitnessEntry>>,
}

impl AxiomVerdict {
    pub fn pass(axiom: impl Into<String>) -> Self {
        AxiomVerdict { axiom: axiom.into(), holds: true, witness: None }
    }

    pub fn fail(axiom: impl Into<String>, roles: &[(&str, usize)]) -> Self {
        AxiomVerdict { axiom: axiom.into(), holds: false, witness: Some(entries(roles)) }
    }

    /// A passing verdict that carries the object proving an existential.
    pub fn pass_with(axiom: impl Into<String>, roles: &[(&str, usize)]) -> Self {
        AxiomVerdict { axiom: axiom.into(), holds: true, witness: Some(entries(roles)) }
    }

    /// Index bound to the first witness entry with this role.
    pub fn role(&self, role: &str) -> Option<usize> {
        self.witness.as_ref()?.iter().find(|w| w.role == role).map(|w| w.index)
    }

    /// All indices bound to a role, in order.
    pub fn roles(&self, role: &str) -> Vec<usize> {
        self.witness.iter().flatten().filter(|w| w.role == role).map(|w| w.index).collect()
    }
}

fn entries(roles: &[(&str, usize)]) -> Vec<WitnessEntry> {
    roles.iter().map(|&(r, i)| WitnessEntry { role: r.to_string(), index: i }).collect()
}

/// Verdicts for every axiom, in declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomProfile {
    verdicts: Vec<AxiomVerdict>,
}

impl AxiomProfile {
    pub fn get(&self, a: AxiomId) -> &AxiomVerdict {
        &self.verdicts[a as usize]
    }

    pub fn holds(&self, a: AxiomId) -> bool {
        self.get(a).holds
    }

    pub fn iter(&self) -> impl Iterator<Item = (AxiomId, &AxiomVerdict)> {
        AxiomId::ALL.iter().copied().zip(self.verdicts.iter())
    }
}

impl Serialize for AxiomProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.verdicts.len()))?;
        for (id, v) in self.iter() {
            map.serialize_entry(id.name(), v)?;
        }
        map.end()
    }
}

/// Row-major `n x n` copy of the table, shared by all checkers.
struct Table {
    n: usize,
    m: Vec<Subset>,
}

impl Table {
    fn new(r: &TransitFunction) -> Self {
        Table { n: r.len(), m: r.matrix() }
    }

    #[inline]
    fn r(&self, u: usize, v: usize) -> Subset {
        self.m[u * self.n + v]
    }
}

pub fn check_axiom(r: &TransitFunction, a: AxiomId) -> AxiomVerdict {
    let t = Table::new(r);
    check_with(&t, a)
}

pub fn axiom_profile(r: &TransitFunction) -> AxiomProfile {
    let t = Table::new(r);
    AxiomProfile { verdicts: AxiomId::ALL.iter().map(|&a| check_with(&t, a)).collect() }
}

/// Evaluates only the listed axioms; cheaper than a full profile when the
/// caller needs a few.
pub fn check_many(r: &TransitFunction, axioms: &[AxiomId]) -> Vec<AxiomVerdict> {
    let t = Table::new(r);
    axioms.iter().map(|&a| check_with(&t, a)).collect()
}

fn check_with(t: &Table, a: AxiomId) -> AxiomVerdict {
    match a {
        AxiomId::B1 => b1(t),
        AxiomId::B3 => b3(t),
        AxiomId::M => monotone(t),
        AxiomId::J0 => j0(t),
        AxiomId::Ch => ch(t),
        AxiomId::P => peano(t),
        AxiomId::APrime => a_prime(t),
        AxiomId::K => k(t),
        AxiomId::Cg => cg(t),
    }
}

// x ∈ R(u,v), x ≠ v  ⇒  v ∉ R(u,x)
fn b1(t: &Table) -> AxiomVerdict {
    let n = t.n;
    for u in 0..n {
        for v in 0..n {
            for x in t.r(u, v).without(v) {
                if t.r(u, x).contains(v) {
                    return AxiomVerdict::fail("b1", &[("u", u), ("v", v), ("x", x)]);
                }
            }
        }
    }
    AxiomVerdict::pass("b1")
}

// x ∈ R(u,v), y ∈ R(u,x)  ⇒  x ∈ R(y,v)
fn b3(t: &Table) -> AxiomVerdict {
    let n = t.n;
    for u in 0..n {
        for v in 0..n {
            for x in t.r(u, v) {
                for y in t.r(u, x) {
                    if !t.r(y, v).contains(x) {
                        return AxiomVerdict::fail("b3", &[("u", u), ("v", v), ("x", x), ("y", y)]);
                    }
                }
            }
        }
    }
    AxiomVerdict::pass("b3")
}

// x, y ∈ R(u,v)  ⇒  R(x,y) ⊆ R(u,v)
fn monotone(t: &Table) -> AxiomVerdict {
    let n = t.n;
    for u in 0..n {
        for v in 0..n {
            let ruv = t.r(u, v);
            for x in ruv {
                for y in ruv {
                    let escape = t.r(x, y) - ruv;
                    if let Some(z) = escape.first() {
                        return AxiomVerdict::fail("m", &[("u", u), ("v", v), ("x", x), ("y", y), ("z", z)]);
                    }
                }
            }
        }
    }
    AxiomVerdict::pass("m")
}

// distinct u,v,x,y: x ∈ R(u,y), y ∈ R(x,v)  ⇒  x ∈ R(u,v)
fn j0(t: &Table) -> AxiomVerdict {
    let n = t.n;
    for u in 0..n {
        for v in 0..n {
            if v == u {
                continue;
            }
            let ruv = t.r(u, v);
            for x in 0..n {
                if x == u || x == v || ruv.contains(x) {
                    continue;
                }
                for y in 0..n {
                    if y == u || y == v || y == x {
                        continue;
                    }
                    if t.r(u, y).contains(x) && t.r(x, v).contains(y) {
                        return AxiomVerdict::fail("j0", &[("u", u), ("v", v), ("x", x), ("y", y)]);
                    }
                }
            }
        }
    }
    AxiomVerdict::pass("j0")
}

// x ∈ R(u,v), y ∈ R(x,w)  ⇒  y ∈ R(u,w) ∪ R(v,w) ∪ R(u,v)
fn ch(t: &Table) -> AxiomVerdict {
    let n = t.n;
    for u in 0..n {
        for v in 0..n {
            let ruv = t.r(u, v);
            for w in 0..n {
                let allowed = ruv | t.r(u, w) | t.r(v, w);
                for x in ruv {
                    if let Some(y) = (t.r(x, w) - allowed).first() {
                        return AxiomVerdict::fail("ch", &[("u", u), ("v", v), ("w", w), ("x", x), ("y", y)]);
                    }
                }
            }
        }
    }
    AxiomVerdict::pass("ch")
}

// x ∈ R(u,v), y ∈ R(x,w)  ⇒  ∃ z ∈ R(u,w) with y ∈ R(z,v)
fn peano(t: &Table) -> AxiomVerdict {
    let n = t.n;
    // z_of[y * n + v] = { z : y ∈ R(z, v) }
    let mut z_of = vec![Subset::EMPTY; n * n];
    for z in 0..n {
        for v in 0..n {
            for y in t.r(z, v) {
                z_of[y * n + v].insert(z);
            }
        }
    }
    for u in 0..n {
        for v in 0..n {
            let ruv = t.r(u, v);
            for w in 0..n {
                let ruw = t.r(u, w);
                for x in ruv {
                    for y in t.r(x, w) {
                        if !ruw.intersects(z_of[y * n + v]) {
                            return AxiomVerdict::fail("p", &[("u", u), ("v", v), ("w", w), ("x", x), ("y", y)]);
                        }
                    }
                }
            }
        }
    }
    AxiomVerdict::pass("p")
}

// ∃ u,v with R(u,v) = V
fn a_prime(t: &Table) -> AxiomVerdict {
    let n = t.n;
    let full = Subset::full(n);
    for u in 0..n {
        for v in u..n {
            if t.r(u, v) == full {
                return AxiomVerdict::pass_with("a_prime", &[("u", u), ("v", v)]);
            }
        }
    }
    AxiomVerdict { axiom: "a_prime".into(), holds: false, witness: Some(Vec::new()) }
}

// nonempty R(u,v) ∩ R(x,y) is itself a transit set
fn k(t: &Table) -> AxiomVerdict {
    let n = t.n;
    let sets: HashSet<Subset> = t.m.iter().copied().collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
    for (i, &(u, v)) in pairs.iter().enumerate() {
        let ruv = t.r(u, v);
        for &(x, y) in &pairs[i..] {
            let meet = ruv & t.r(x, y);
            if !meet.is_empty() && !sets.contains(&meet) {
                return AxiomVerdict::fail("k", &[("u", u), ("v", v), ("x", x), ("y", y)]);
            }
        }
    }
    AxiomVerdict::pass("k")
}

// every R(x,y) ≠ V extends: ∃ z ∈ R(x,y), w ∉ R(x,y) with R(w,z) = R(x,y) ∪ {w}
fn cg(t: &Table) -> AxiomVerdict {
    let n = t.n;
    let full = Subset::full(n);
    for x in 0..n {
        for y in x..n {
            let rxy = t.r(x, y);
            if rxy == full {
                continue;
            }
            let ok = rxy.iter().any(|z| (full - rxy).iter().any(|w| t.r(w, z) == rxy.with(w)));
            if !ok {
                return AxiomVerdict::fail("cg", &[("x", x), ("y", y)]);
            }
        }
    }
    AxiomVerdict::pass("cg")
}

/// Re-evaluates a failing verdict's witness against the axiom's defining
/// condition. Returns `true` when the witness really exhibits a failure.
pub fn witness_confirms_failure(r: &TransitFunction, v: &AxiomVerdict) -> bool {
    if v.holds {
        return false;
    }
    let Ok(a) = v.axiom.parse::<AxiomId>() else { return false };
    let g = |role: &str| v.role(role);
    let rr = |a: usize, b: usize| r.get(a, b);
    let n = r.len();
    let full = Subset::full(n);
    match a {
        AxiomId::B1 => (|| {
            let (u, vv, x) = (g("u")?, g("v")?, g("x")?);
            Some(x != vv && rr(u, vv).contains(x) && rr(u, x).contains(vv))
        })()
        .unwrap_or(false),
        AxiomId::B3 => (|| {
            let (u, vv, x, y) = (g("u")?, g("v")?, g("x")?, g("y")?);
            Some(rr(u, vv).contains(x) && rr(u, x).contains(y) && !rr(y, vv).contains(x))
        })()
        .unwrap_or(false),
        AxiomId::M => (|| {
            let (u, vv, x, y) = (g("u")?, g("v")?, g("x")?, g("y")?);
            let ruv = rr(u, vv);
            Some(ruv.contains(x) && ruv.contains(y) && !rr(x, y).is_subset(ruv))
        })()
        .unwrap_or(false),
        AxiomId::J0 => (|| {
            let (u, vv, x, y) = (g("u")?, g("v")?, g("x")?, g("y")?);
            let distinct: Subset = [u, vv, x, y].into_iter().collect();
            Some(distinct.len() == 4 && rr(u, y).contains(x) && rr(x, vv).contains(y) && !rr(u, vv).contains(x))
        })()
        .unwrap_or(false),
        AxiomId::Ch => (|| {
            let (u, vv, w, x, y) = (g("u")?, g("v")?, g("w")?, g("x")?, g("y")?);
            Some(rr(u, vv).contains(x) && rr(x, w).contains(y) && !(rr(u, w) | rr(vv, w) | rr(u, vv)).contains(y))
        })()
        .unwrap_or(false),
        AxiomId::P => (|| {
            let (u, vv, w, x, y) = (g("u")?, g("v")?, g("w")?, g("x")?, g("y")?);
            Some(rr(u, vv).contains(x) && rr(x, w).contains(y) && !rr(u, w).iter().any(|z| rr(z, vv).contains(y)))
        })()
        .unwrap_or(false),
        AxiomId::APrime => (0..n).all(|u| (u..n).all(|w| rr(u, w) != full)),
        AxiomId::K => (|| {
            let (u, vv, x, y) = (g("u")?, g("v")?, g("x")?, g("y")?);
            let meet = rr(u, vv) & rr(x, y);
            Some(!meet.is_empty() && !r.transit_sets().contains(&meet))
        })()
        .unwrap_or(false),
        AxiomId::Cg => (|| {
            let (x, y) = (g("x")?, g("y")?);
            let rxy = rr(x, y);
            Some(rxy != full && !rxy.iter().any(|z| (full - rxy).iter().any(|w| rr(w, z) == rxy.with(w))))
        })()
        .unwrap_or(false),
    }
}
