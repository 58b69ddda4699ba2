#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use blockstable::{parse_graph, LabeledGraph};
use proptest::prelude::*;

pub fn figure_graph() -> LabeledGraph {
    parse_graph("5 5\n1 2\n2 3\n3 4\n4 2\n2 5\n").unwrap()
}

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect()
}

pub fn graph_from_mask(n: usize, mask: u64) -> LabeledGraph {
    let edges = all_pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e);
    LabeledGraph::new(n, edges).unwrap()
}

/// Any graph on `[n]`, `1 <= n <= max_n`, with edge density drawn per graph.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = LabeledGraph> {
    (1..=max_n, 0.0f64..1.0).prop_flat_map(|(n, density)| {
        let m = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(density.max(1e-3)), m).prop_map(move |bits| {
            let edges = all_pairs(n)
                .into_iter()
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e);
            LabeledGraph::new(n, edges).unwrap()
        })
    })
}

/// A connected graph: a random tree on `[n]` plus a few random extra edges.
pub fn arb_connected(min_n: usize, max_n: usize) -> impl Strategy<Value = LabeledGraph> {
    (min_n..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec(0..n, n.saturating_sub(1)),
            proptest::collection::vec((1..=n, 1..=n), 0..n),
        )
            .prop_map(move |(parents, extra)| {
                // vertex i + 2 hangs below a uniformly chosen earlier vertex
                let mut edges: BTreeSet<(usize, usize)> = parents
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| ((p % (i + 1)) + 1, i + 2))
                    .collect();
                for (u, v) in extra {
                    if u != v {
                        edges.insert((u.min(v), u.max(v)));
                    }
                }
                LabeledGraph::new(n, edges).unwrap()
            })
    })
}

fn reachable(g: &LabeledGraph, from: usize, removed: usize) -> Vec<bool> {
    let mut seen = vec![false; g.n() + 1];
    if from == removed {
        return seen;
    }
    seen[from] = true;
    let mut stack = vec![from];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if w != removed && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Brute-force blocks: two edges share a block iff they are equal, or they
/// lie in one component and no single vertex removal separates them.
/// Isolated vertices are their own blocks. Returned as sorted vertex sets.
pub fn brute_blocks(g: &LabeledGraph) -> BTreeSet<Vec<usize>> {
    let edges = g.edges().to_vec();
    let m = edges.len();
    let same = |a: (usize, usize), b: (usize, usize)| -> bool {
        if a == b {
            return true;
        }
        if !reachable(g, a.0, 0)[b.0] {
            return false;
        }
        for w in 0..=g.n() {
            let pa = if a.0 == w { a.1 } else { a.0 };
            let pb = if b.0 == w { b.1 } else { b.0 };
            if w != 0 && (pa == w || pb == w) {
                continue;
            }
            if !reachable(g, pa, w)[pb] {
                return false;
            }
        }
        true
    };
    let mut class = vec![usize::MAX; m];
    for i in 0..m {
        if class[i] != usize::MAX {
            continue;
        }
        class[i] = i;
        for j in i + 1..m {
            if class[j] == usize::MAX && same(edges[i], edges[j]) {
                class[j] = i;
            }
        }
    }
    let mut blocks = BTreeSet::new();
    for i in 0..m {
        if class[i] == i {
            let mut vs: Vec<usize> = (0..m)
                .filter(|&j| class[j] == i)
                .flat_map(|j| [edges[j].0, edges[j].1])
                .collect();
            vs.sort_unstable();
            vs.dedup();
            blocks.insert(vs);
        }
    }
    for v in 1..=g.n() {
        if g.degree(v) == 0 {
            blocks.insert(vec![v]);
        }
    }
    blocks
}

/// Brute-force cut vertices: removal increases the number of components.
pub fn brute_cut_vertices(g: &LabeledGraph) -> Vec<usize> {
    let comps = |removed: usize| {
        let mut seen = vec![false; g.n() + 1];
        let mut count = 0;
        for v in 1..=g.n() {
            if v != removed && !seen[v] {
                count += 1;
                for (w, r) in reachable(g, v, removed).into_iter().enumerate() {
                    seen[w] |= r;
                }
            }
        }
        count
    };
    let base = comps(0);
    (1..=g.n()).filter(|&v| comps(v) > base).collect()
}

/// Brute force over all simple paths: the largest number of distinct blocks
/// met by the edges of one path.
pub fn brute_max_blocks_on_path(g: &LabeledGraph) -> usize {
    let blocks: Vec<Vec<usize>> = brute_blocks(g).into_iter().collect();
    let block_of = |u: usize, v: usize| {
        blocks
            .iter()
            .position(|b| b.len() >= 2 && b.contains(&u) && b.contains(&v))
            .unwrap()
    };
    fn walk(
        g: &LabeledGraph,
        u: usize,
        on_path: &mut Vec<bool>,
        used: u64,
        block_of: &dyn Fn(usize, usize) -> usize,
        best: &mut usize,
    ) {
        *best = (*best).max(used.count_ones() as usize);
        for &w in g.neighbors(u) {
            if !on_path[w] {
                on_path[w] = true;
                walk(g, w, on_path, used | 1 << block_of(u, w), block_of, best);
                on_path[w] = false;
            }
        }
    }
    let mut best = 0;
    for s in 1..=g.n() {
        let mut on_path = vec![false; g.n() + 1];
        on_path[s] = true;
        walk(g, s, &mut on_path, 0, &block_of, &mut best);
    }
    best
}

/// Longest simple path length (in edges), by brute force.
pub fn brute_longest_path(g: &LabeledGraph) -> usize {
    fn walk(g: &LabeledGraph, u: usize, on_path: &mut Vec<bool>, len: usize, best: &mut usize) {
        *best = (*best).max(len);
        for &w in g.neighbors(u) {
            if !on_path[w] {
                on_path[w] = true;
                walk(g, w, on_path, len + 1, best);
                on_path[w] = false;
            }
        }
    }
    let mut best = 0;
    for s in 1..=g.n() {
        let mut on_path = vec![false; g.n() + 1];
        on_path[s] = true;
        walk(g, s, &mut on_path, 0, &mut best);
    }
    best
}

/// All trees on `[m]` as connected `(m-1)`-edge subsets of the complete graph.
pub fn trees_by_edge_subsets(m: usize) -> HashSet<LabeledGraph> {
    let pairs = all_pairs(m);
    let mut out = HashSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        if mask.count_ones() as usize + 1 == m || (m == 1 && mask == 0) {
            let g = graph_from_mask(m, mask);
            if g.is_connected() {
                out.insert(g);
            }
        }
    }
    out
}

/// Normal-approximation half-width for a frequency estimate.
pub fn sigma(p: f64, n: usize) -> f64 {
    (p * (1.0 - p) / n as f64).sqrt()
}
