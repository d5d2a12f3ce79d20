//! Brute-force oracles shared by the integration tests. Each one works from
//! the bare definitions with plain adjacency lists and bitmasks, and uses
//! nothing from the library beyond reading a graph's edges.

#![allow(dead_code)]

use std::collections::VecDeque;

use transit_core::{Graph, TransitFunction};

/// Adjacency as bitmasks, straight from the edge list.
pub fn adjacency(g: &Graph) -> Vec<u64> {
    let mut adj = vec![0u64; g.len()];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

pub fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

pub fn connected(adj: &[u64], within: u64) -> bool {
    let Some(start) = bits(within).next() else { return true };
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for y in bits(adj[x] & within & !seen) {
            seen |= 1 << y;
            stack.push(y);
        }
    }
    seen == within
}

pub fn bfs_distances(adj: &[u64]) -> Vec<Vec<u32>> {
    let n = adj.len();
    (0..n)
        .map(|s| {
            let mut d = vec![u32::MAX; n];
            d[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for y in bits(adj[x]) {
                    if d[y] == u32::MAX {
                        d[y] = d[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            d
        })
        .collect()
}

/// Vertices lying on some walk `w_1 .. w_k` (with `k ≤ max_len`) whose
/// position `i` may hold `x` only when `allowed(i, k, x)`. Because every
/// constraint is local to one position, `x` sits at position `i` of a valid
/// walk exactly when a valid prefix reaches it and a valid suffix leaves it.
fn on_constrained_walks(adj: &[u64], max_len: usize, allowed: impl Fn(usize, usize, usize) -> bool) -> u64 {
    let n = adj.len();
    let filter = |i: usize, k: usize, set: u64| bits(set).filter(|&x| allowed(i, k, x)).fold(0u64, |m, x| m | 1 << x);
    let step = |set: u64| bits(set).fold(0u64, |m, x| m | adj[x]);
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut found = 0u64;
    for k in 1..=max_len {
        let mut fwd = vec![0u64; k + 1];
        fwd[1] = filter(1, k, all);
        for i in 2..=k {
            fwd[i] = filter(i, k, step(fwd[i - 1]));
        }
        let mut bwd = vec![0u64; k + 1];
        bwd[k] = fwd[k];
        for i in (1..k).rev() {
            bwd[i] = fwd[i] & step(bwd[i + 1]);
        }
        for b in &bwd[1..] {
            found |= b;
        }
    }
    found
}

/// Toll interval by the walk definition: `w_1 = u`, `w_k = v`, consecutive
/// vertices adjacent, `w_1 w_i ∈ E` iff `i = 2` and `w_k w_i ∈ E` iff
/// `i = k - 1`. Walks have at most `2n` vertices.
pub fn toll_oracle(g: &Graph, u: usize, v: usize) -> u64 {
    if u == v {
        return 1 << u;
    }
    let adj = adjacency(g);
    let adj_to = |a: usize, x: usize| adj[a] >> x & 1 == 1;
    on_constrained_walks(&adj, 2 * g.len(), |i, k, x| {
        let at_ends = (i != 1 || x == u) && (i != k || x == v) && k >= 2;
        at_ends && (i == 1 || adj_to(u, x) == (i == 2)) && (i == k || adj_to(v, x) == (i + 1 == k))
            // the pair (w_1, w_k) itself
            && (!(i == 1 || i == k) || adj_to(u, v) == (k == 2))
    })
}

/// Weak toll interval: walks `u w_1 .. w_m v` with `u w_1`, `w_m v` edges,
/// where an interior vertex adjacent to `u` must be `w_1` and one adjacent
/// to `v` must be `w_m`; `u` and `v` do not recur. "`u` is adjacent only to
/// `w_1` on the walk" covers `v` too, so adjacent ends admit no interior.
pub fn weak_toll_oracle(g: &Graph, u: usize, v: usize) -> u64 {
    if u == v {
        return 1 << u;
    }
    let adj = adjacency(g);
    let adj_to = |a: usize, x: usize| adj[a] >> x & 1 == 1;
    if adj_to(u, v) {
        return (1 << u) | (1 << v);
    }
    let mut found = (1u64 << u) | (1 << v);
    for a in bits(adj[u]) {
        for b in bits(adj[v]) {
            let interior = |x: usize| x != u && x != v && (!adj_to(u, x) || x == a) && (!adj_to(v, x) || x == b);
            found |= on_constrained_walks(&adj, 2 * g.len(), |i, k, x| match i {
                1 => x == u,
                _ if i == k => x == v && k >= 3,
                2 => x == a && (i + 1 != k || x == b) && interior(x),
                _ if i + 1 == k => x == b && interior(x),
                _ => interior(x),
            });
        }
    }
    found
}

/// Union of all simple `u`–`v` paths, by depth-first enumeration. Stops
/// early once every vertex has been seen on some path.
pub fn all_paths_oracle(g: &Graph, u: usize, v: usize) -> u64 {
    let adj = adjacency(g);
    let full = (1u64 << g.len()) - 1;
    let mut found = 1u64 << u;
    fn dfs(adj: &[u64], x: usize, target: usize, path: u64, found: &mut u64, full: u64) {
        if x == target {
            *found |= path;
            return;
        }
        for y in bits(adj[x] & !path) {
            if *found == full {
                return;
            }
            dfs(adj, y, target, path | 1 << y, found, full);
        }
    }
    dfs(&adj, u, v, 1 << u, &mut found, full);
    found
}

/// Every subset `S` with `R(u,v) ⊆ S` for all `u, v ∈ S`, by a full scan.
pub fn convex_scan(r: &TransitFunction) -> Vec<u64> {
    let n = r.len();
    let table: Vec<Vec<u64>> = (0..n).map(|u| (0..n).map(|v| r.get(u, v).bits()).collect()).collect();
    (0..1u64 << n).filter(|&s| bits(s).all(|u| bits(s).all(|v| table[u][v] & !s == 0))).collect()
}

/// Number of unlabeled graphs on `n` vertices, by Burnside over all `n!`
/// permutations: each fixes `2^(orbits on pairs)` labeled graphs.
pub fn unlabeled_graph_count(n: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total: u128 = 0;
    let mut count: u128 = 0;
    loop {
        total += 1u128 << pair_orbits(&perm);
        count += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    total / count
}

fn pair_orbits(perm: &[usize]) -> u32 {
    let n = perm.len();
    let idx = |a: usize, b: usize| if a < b { a * n + b } else { b * n + a };
    let mut seen = vec![false; n * n];
    let mut orbits = 0;
    for a in 0..n {
        for b in a + 1..n {
            if seen[idx(a, b)] {
                continue;
            }
            orbits += 1;
            let (mut x, mut y) = (a, b);
            while !seen[idx(x, y)] {
                seen[idx(x, y)] = true;
                (x, y) = (perm[x], perm[y]);
            }
        }
    }
    orbits
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Connected unlabeled counts for `1..=n_max`, from the Burnside totals by
/// peeling the Euler transform: a graph is a multiset of connected ones.
pub fn connected_counts(n_max: usize) -> Vec<u128> {
    let g: Vec<u128> = (0..=n_max).map(unlabeled_graph_count).collect();
    let mut c = vec![0u128; n_max + 1];
    for n in 1..=n_max {
        // multisets of connected graphs of order < n, by total order
        let mut poly = vec![0u128; n + 1];
        poly[0] = 1;
        for k in 1..n {
            for _ in 0..c[k] {
                // multiply by 1 / (1 - x^k)
                for t in k..=n {
                    poly[t] += poly[t - k];
                }
            }
        }
        c[n] = g[n] - poly[n];
    }
    c[1..].to_vec()
}

/// Lexicographically largest upper-triangle code over all relabelings.
pub fn brute_canonical(adj: &[u64]) -> u64 {
    let n = adj.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = 0u64;
    loop {
        let mut code = 0u64;
        for j in 1..n {
            for i in 0..j {
                code = (code << 1) | (adj[perm[i]] >> perm[j] & 1);
            }
        }
        best = best.max(code);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

/// Ptolemy's inequality on every quadruple of vertices.
pub fn ptolemy_holds(g: &Graph) -> bool {
    let d = bfs_distances(&adjacency(g));
    let n = g.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for e in c + 1..n {
                    let p = [d[a][b] * d[c][e], d[a][c] * d[b][e], d[a][e] * d[b][c]];
                    for i in 0..3 {
                        if p[i] > p[(i + 1) % 3] + p[(i + 2) % 3] {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Some vertex set of size at least four induces a cycle.
pub fn has_long_induced_cycle(g: &Graph) -> bool {
    let adj = adjacency(g);
    (0..1u64 << g.len())
        .filter(|s| s.count_ones() >= 4)
        .any(|s| bits(s).all(|x| (adj[x] & s).count_ones() == 2) && connected(&adj, s))
}
