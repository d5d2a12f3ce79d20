//! Hypergraphs, strong vertex deletion and the cut-vertex transit function.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::subset::{GroundSet, Subset};
use crate::transit::TransitFunction;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    ground: GroundSet,
    edges: Vec<Subset>,
}

impl Hypergraph {
    pub fn new(ground: GroundSet, edges: Vec<Subset>) -> Result<Self> {
        let n = ground.len();
        for (i, e) in edges.iter().enumerate() {
            if e.is_empty() {
                return Err(Error::EmptyEdge(i));
            }
            if let Some(bad) = e.iter().find(|&x| x >= n) {
                return Err(Error::IndexOutOfRange { index: bad, n });
            }
        }
        Ok(Hypergraph { ground, edges })
    }

    pub fn from_graph(g: &Graph) -> Self {
        let edges = g.edges().into_iter().map(|(u, v)| Subset::pair(u, v)).collect();
        Hypergraph { ground: g.ground(), edges }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Subset] {
        &self.edges
    }

    /// Vertices reachable from `start` using only vertices in `alive` and
    /// edges inside `alive`.
    fn reach(&self, start: usize, alive: Subset) -> Subset {
        let mut seen = Subset::singleton(start);
        loop {
            let grown =
                self.edges.iter().filter(|e| e.is_subset(alive) && e.intersects(seen)).fold(seen, |acc, &e| acc | e);
            if grown == seen {
                return seen;
            }
            seen = grown;
        }
    }

    /// Strong deletion of `x` as a mask: the surviving vertices, with every
    /// edge through `x` gone. Connectivity of the rest is then judged by
    /// [`Hypergraph::reach`] restricted to edges inside the mask.
    fn alive_without(&self, x: usize) -> Subset {
        Subset::full(self.len()).without(x)
    }

    pub fn is_connected(&self) -> bool {
        let full = Subset::full(self.len());
        self.reach(0, full) == full
    }

    /// Removes `v` and every edge containing it; later vertices shift down.
    pub fn strong_delete(&self, v: usize) -> Result<Hypergraph> {
        self.ground.check_index(v)?;
        let n = self.len();
        let ground = GroundSet::new(n - 1)?;
        let low = Subset::full(v);
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.contains(v))
            .map(|&e| Subset::from_bits((e & low).bits() | ((e - low).bits() >> 1)))
            .collect();
        Ok(Hypergraph { ground, edges })
    }

    fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::NotConnected)
        }
    }

    /// Vertices whose strong deletion leaves at least two vertices that are
    /// not all connected.
    pub fn strong_cut_vertices(&self) -> Result<Subset> {
        self.require_connected()?;
        let n = self.len();
        if n < 3 {
            return Ok(Subset::EMPTY);
        }
        Ok((0..n)
            .filter(|&x| {
                let alive = self.alive_without(x);
                let start = alive.first().expect("at least two survivors");
                self.reach(start, alive) != alive
            })
            .collect())
    }

    /// `C(u,v)`: `u`, `v` and every `x` whose strong deletion separates them.
    pub fn cutvertex_c(&self) -> Result<TransitFunction> {
        self.require_connected()?;
        let n = self.len();
        // reach_without[x][u]: component of u after deleting x
        let comps: Vec<Vec<Subset>> = (0..n)
            .map(|x| {
                let alive = self.alive_without(x);
                let mut out = vec![Subset::EMPTY; n];
                let mut left = alive;
                while let Some(s) = left.first() {
                    let c = self.reach(s, alive);
                    for v in c {
                        out[v] = c;
                    }
                    left = left - c;
                }
                out
            })
            .collect();
        TransitFunction::from_fn(self.ground.clone(), |u, v| {
            let mut s = Subset::pair(u, v);
            for (x, comp) in comps.iter().enumerate() {
                if x != u && x != v && !comp[u].contains(v) {
                    s.insert(x);
                }
            }
            s
        })
    }
}

/// `{"n": 5, "edges": [[0, 1, 2], [2, 3, 4]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl From<&Hypergraph> for HypergraphJson {
    fn from(h: &Hypergraph) -> Self {
        HypergraphJson { n: h.len(), edges: h.edges.iter().map(|e| e.to_vec()).collect() }
    }
}

impl TryFrom<HypergraphJson> for Hypergraph {
    type Error = Error;

    fn try_from(j: HypergraphJson) -> Result<Self> {
        let ground = GroundSet::new(j.n)?;
        let mut edges = Vec::with_capacity(j.edges.len());
        for (i, e) in j.edges.iter().enumerate() {
            if e.is_empty() {
                return Err(Error::EmptyEdge(i));
            }
            edges.push(Subset::from_indices(e, j.n)?);
        }
        Hypergraph::new(ground, edges)
    }
}
