//! Blocks, cut vertices and the block-cut tree.

use serde::Serialize;

use crate::subset::Subset;

use super::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "id", rename_all = "snake_case")]
pub enum BlockCutNode {
    Block(usize),
    Cut(usize),
}

/// Maximal 2-connected pieces (bridges and isolated vertices included as
/// blocks of their own) and the block-cut forest joining them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Subset>,
    pub cut_vertices: Subset,
    /// Node list of the block-cut forest: blocks first, then cut vertices.
    pub tree_nodes: Vec<BlockCutNode>,
    pub tree_adjacency: Vec<Vec<usize>>,
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<Subset>,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        for v in self.g.neighbors(u) {
            if self.disc[v] == 0 {
                self.stack.push((u, v));
                self.visit(v, Some(u));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    let mut block = Subset::EMPTY;
                    while let Some((a, b)) = self.stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                self.stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.len();
    let mut t = Tarjan { g, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), blocks: Vec::new() };
    for v in 0..n {
        if t.disc[v] == 0 {
            if g.degree(v) == 0 {
                t.disc[v] = usize::MAX;
                t.blocks.push(Subset::singleton(v));
            } else {
                t.visit(v, None);
            }
        }
    }
    let mut blocks = t.blocks;
    blocks.sort_by_key(|b| (b.first(), b.bits()));

    let mut count = vec![0usize; n];
    for b in &blocks {
        for v in *b {
            count[v] += 1;
        }
    }
    let cut_vertices: Subset = (0..n).filter(|&v| count[v] >= 2).collect();

    let mut tree_nodes: Vec<BlockCutNode> = (0..blocks.len()).map(BlockCutNode::Block).collect();
    let mut cut_node = vec![usize::MAX; n];
    for c in cut_vertices {
        cut_node[c] = tree_nodes.len();
        tree_nodes.push(BlockCutNode::Cut(c));
    }
    let mut tree_adjacency = vec![Vec::new(); tree_nodes.len()];
    for (bi, b) in blocks.iter().enumerate() {
        for c in *b & cut_vertices {
            tree_adjacency[bi].push(cut_node[c]);
            tree_adjacency[cut_node[c]].push(bi);
        }
    }
    BlockDecomposition { blocks, cut_vertices, tree_nodes, tree_adjacency }
}

impl BlockDecomposition {
    /// Tree node standing for vertex `v`: its cut node, or its only block.
    pub fn node_of(&self, v: usize) -> usize {
        if self.cut_vertices.contains(v) {
            self.tree_nodes.iter().position(|&x| x == BlockCutNode::Cut(v)).expect("every cut vertex has a node")
        } else {
            self.blocks.iter().position(|b| b.contains(v)).expect("every vertex lies in a block")
        }
    }

    /// Nodes on the tree path between two nodes, endpoints included; `None`
    /// if they lie in different trees of the forest.
    pub fn tree_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let m = self.tree_nodes.len();
        let mut parent = vec![usize::MAX; m];
        parent[from] = from;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                break;
            }
            for &y in &self.tree_adjacency[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[to] == usize::MAX {
            return None;
        }
        let mut path = vec![to];
        let mut x = to;
        while x != from {
            x = parent[x];
            path.push(x);
        }
        path.reverse();
        Some(path)
    }

    /// For each vertex, the union of the blocks and the set of cut vertices
    /// on the tree path to every other vertex: `(blocks[u][v], cuts[u][v])`.
    pub(crate) fn path_unions(&self, n: usize) -> (Vec<Subset>, Vec<Subset>) {
        let nodes: Vec<usize> = (0..n).map(|v| self.node_of(v)).collect();
        let mut blocks_on = vec![Subset::EMPTY; n * n];
        let mut cuts_on = vec![Subset::EMPTY; n * n];
        for u in 0..n {
            for v in u + 1..n {
                let path = self.tree_path(nodes[u], nodes[v]).unwrap_or_default();
                let mut b = Subset::EMPTY;
                let mut c = Subset::EMPTY;
                for x in path {
                    match self.tree_nodes[x] {
                        BlockCutNode::Block(i) => b |= self.blocks[i],
                        BlockCutNode::Cut(w) => c.insert(w),
                    }
                }
                // a vertex that is itself a cut vertex starts the path at its
                // cut node; the block toward the other end is already on it
                blocks_on[u * n + v] = b;
                blocks_on[v * n + u] = b;
                cuts_on[u * n + v] = c;
                cuts_on[v * n + u] = c;
            }
        }
        (blocks_on, cuts_on)
    }
}
