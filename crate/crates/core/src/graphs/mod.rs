//! Simple undirected graphs and the graph transit functions.

mod blocks;
mod builders;
mod graph6;

pub use blocks::{blocks, BlockCutNode, BlockDecomposition};
pub use builders::{
    all_paths_a, build, cutvertex_c, induced_j, interval_i, m3, p3, toll_t, weak_toll_wt, Model, MAX_PATH_SEARCH_N,
};
pub use graph6::{parse_graph6, to_graph6};

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::{GroundSet, Subset, MAX_ELEMENTS};

/// A simple undirected graph on `{0, .., n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Subset>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGround);
        }
        if n > MAX_ELEMENTS {
            return Err(Error::GroundTooLarge { n, max: MAX_ELEMENTS });
        }
        Ok(Graph { adj: vec![Subset::EMPTY; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<Subset>) -> Self {
        Graph { adj }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.len();
        for x in [u, v] {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, n });
            }
        }
        if u == v {
            return Err(Error::InvalidInput(format!("loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn ground(&self) -> GroundSet {
        GroundSet::new(self.len()).expect("graph size already validated")
    }

    pub fn vertices(&self) -> Subset {
        Subset::full(self.len())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> Subset {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> Subset {
        self.adj[v].with(v)
    }

    /// Open neighbourhood of a set: `N(s) \ s`.
    pub fn neighbors_of_set(&self, s: Subset) -> Subset {
        s.iter().fold(Subset::EMPTY, |acc, v| acc | self.adj[v]) - s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v))).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Vertices reachable from `start` inside `allowed` (`start` must be in it).
    pub fn component_within(&self, start: usize, allowed: Subset) -> Subset {
        let mut seen = Subset::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighbors_of_set(frontier) & allowed;
            frontier = next - seen;
            seen |= frontier;
        }
        seen
    }

    pub fn component_of(&self, start: usize) -> Subset {
        self.component_within(start, self.vertices())
    }

    /// Connected components in order of their least vertex.
    pub fn components(&self) -> Vec<Subset> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.component_within(v, left);
            left = left - c;
            out.push(c);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertices()
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Induced subgraph on `s`, relabelled to `0..|s|` in ascending order.
    pub fn induced(&self, s: Subset) -> Graph {
        let map: Vec<usize> = s.to_vec();
        let adj = map
            .iter()
            .map(|&v| {
                let nb = self.adj[v] & s;
                map.iter().enumerate().filter(|&(_, &w)| nb.contains(w)).map(|(i, _)| i).collect()
            })
            .collect();
        Graph { adj }
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![Subset::EMPTY; self.len()];
        for (u, &pu) in perm.iter().enumerate() {
            adj[pu] = self.adj[u].iter().map(|v| perm[v]).collect();
        }
        Graph { adj }
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        Graph { adj: (0..self.len()).map(|v| (full - self.adj[v]).without(v)).collect() }
    }

    pub fn distances(&self) -> DistanceMatrix {
        let n = self.len();
        let mut d = vec![DistanceMatrix::INF; n * n];
        for s in 0..n {
            d[s * n + s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let du = d[s * n + u];
                for w in self.adj[u] {
                    if d[s * n + w] == DistanceMatrix::INF {
                        d[s * n + w] = du + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceMatrix { n, d }
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidInput(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, &edges)
    }

    /// `K_{1,leaves}` with the centre at vertex 0.
    pub fn star(leaves: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }
}

/// Hop distances; [`DistanceMatrix::INF`] marks unreachable pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub const INF: u32 = u32::MAX;

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}

/// Adjacency-list JSON: `{"n": 4, "adjacency": [[1], [0, 2], [1, 3], [2]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AdjacencyJson {
    pub n: usize,
    pub adjacency: Vec<Vec<usize>>,
}

impl From<&Graph> for AdjacencyJson {
    fn from(g: &Graph) -> Self {
        AdjacencyJson { n: g.len(), adjacency: g.adj.iter().map(|a| a.to_vec()).collect() }
    }
}

impl TryFrom<AdjacencyJson> for Graph {
    type Error = Error;

    fn try_from(j: AdjacencyJson) -> Result<Graph> {
        if j.adjacency.len() != j.n {
            return Err(Error::InvalidInput(format!("adjacency has {} rows for n = {}", j.adjacency.len(), j.n)));
        }
        let mut g = Graph::new(j.n)?;
        for (u, row) in j.adjacency.iter().enumerate() {
            for &v in row {
                g.add_edge(u, v)?;
            }
        }
        // every listed edge must be listed from both ends
        for (u, row) in j.adjacency.iter().enumerate() {
            let listed: Subset = row.iter().copied().collect();
            if listed != g.adj[u] {
                return Err(Error::InvalidInput(format!("adjacency of vertex {u} is not symmetric")));
            }
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_shapes() {
        let p = Graph::path(4).unwrap();
        assert_eq!(p.edge_count(), 3);
        assert!(p.is_connected());
        let d = p.distances();
        assert_eq!(d.get(0, 3), 3);
        let c = Graph::cycle(5).unwrap();
        assert_eq!(c.distances().get(0, 2), 2);
        assert_eq!(Graph::complete(4).unwrap().edge_count(), 6);
        assert_eq!(Graph::star(3).unwrap().degree(0), 3);
        assert!(Graph::cycle(2).is_err());
    }

    #[test]
    fn components_and_distances() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.components().len(), 3);
        assert_eq!(g.distances().get(0, 3), DistanceMatrix::INF);
        assert_eq!(g.require_connected(), Err(Error::Disconnected));
    }

    #[test]
    fn induced_and_permuted() {
        let c = Graph::cycle(5).unwrap();
        let p = c.induced(Subset::from_iter([0, 1, 2, 3]));
        assert_eq!(p.edge_count(), 3);
        let q = c.permuted(&[4, 3, 2, 1, 0]);
        assert_eq!(q.edge_count(), 5);
        assert!(q.has_edge(4, 3));
        assert_eq!(c.complement().edge_count(), 5);
    }

    #[test]
    fn adjacency_json_round_trip() {
        let g = Graph::cycle(4).unwrap();
        let j = AdjacencyJson::from(&g);
        assert_eq!(Graph::try_from(j).unwrap(), g);
        let bad = AdjacencyJson { n: 2, adjacency: vec![vec![1], vec![]] };
        assert!(Graph::try_from(bad).is_err());
        let looped = AdjacencyJson { n: 1, adjacency: vec![vec![0]] };
        assert!(Graph::try_from(looped).is_err());
    }
}
