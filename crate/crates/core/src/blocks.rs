//! Blocks (biconnected components, bridges and isolated vertices), the
//! block forest, block-degrees and block counts along paths.

use std::collections::VecDeque;

use serde::Serialize;

use crate::csr::Csr;
use crate::graph::LabeledGraph;

/// One block: its sorted vertex set and the sorted edges it induces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    pub fn is_isolated_vertex(&self) -> bool {
        self.vertices.len() == 1
    }

    /// The block as a standalone graph on `1..=|B|` (order-preserving relabel).
    pub fn to_graph(&self) -> LabeledGraph {
        let index = |v: usize| self.vertices.binary_search(&v).unwrap() + 1;
        let edges = self.edges.iter().map(|&(u, v)| (index(u), index(v))).collect();
        LabeledGraph::from_sorted(self.vertices.len(), edges)
    }

    fn order_key(&self) -> (usize, usize) {
        match self.edges.first() {
            Some(&e) => e,
            None => (self.vertices[0], self.vertices[0]),
        }
    }
}

/// The block structure of a graph.
///
/// Blocks are ordered by their smallest edge; an isolated vertex `v` sorts as
/// if its smallest edge were `(v, v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    n: usize,
    blocks: Vec<Block>,
    cut_vertices: Vec<usize>,
    // sorted by edge
    block_of_edge: Vec<((usize, usize), usize)>,
    // row v: indices of the blocks containing v
    blocks_of_vertex: Csr,
}

#[derive(Serialize)]
struct BlockDecompositionJson<'a> {
    blocks: Vec<&'a [usize]>,
    cut_vertices: &'a [usize],
}

impl BlockDecomposition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Sorted cut vertices.
    pub fn cut_vertices(&self) -> &[usize] {
        &self.cut_vertices
    }

    /// Index of the block holding edge `{u, v}`, if that edge exists.
    pub fn block_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.block_of_edge
            .binary_search_by_key(&key, |&(e, _)| e)
            .ok()
            .map(|i| self.block_of_edge[i].1)
    }

    /// Indices of the blocks containing `v`, ascending.
    pub fn blocks_of_vertex(&self, v: usize) -> &[usize] {
        self.blocks_of_vertex.row(v)
    }

    /// Block-degrees `d(1), ..., d(n)`.
    pub fn block_degrees(&self) -> Vec<usize> {
        (1..=self.n).map(|v| self.blocks_of_vertex.row_len(v)).collect()
    }

    pub fn max_block_degree(&self) -> usize {
        (1..=self.n).map(|v| self.blocks_of_vertex.row_len(v)).max().unwrap_or(0)
    }

    pub fn forest(&self) -> BlockForest {
        BlockForest::new(self)
    }

    /// `{"blocks": [[v, ...], ...], "cut_vertices": [v, ...]}`
    pub fn to_json(&self) -> String {
        let view = BlockDecompositionJson {
            blocks: self.blocks.iter().map(|b| b.vertices.as_slice()).collect(),
            cut_vertices: &self.cut_vertices,
        };
        serde_json::to_string(&view).expect("block decomposition is always serialisable")
    }
}

/// Biconnected decomposition by depth-first search with an edge stack.
pub fn decompose_blocks(g: &LabeledGraph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![0usize; n + 1];
    let mut low = vec![0usize; n + 1];
    let mut time = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut raw_blocks: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut isolated = Vec::new();
    // (vertex, parent, next neighbour index)
    let mut frames: Vec<(usize, usize, usize)> = Vec::new();

    for root in 1..=n {
        if disc[root] != 0 {
            continue;
        }
        if g.degree(root) == 0 {
            time += 1;
            disc[root] = time;
            isolated.push(root);
            continue;
        }
        time += 1;
        disc[root] = time;
        low[root] = time;
        frames.push((root, 0, 0));
        while let Some(frame) = frames.last_mut() {
            let (u, parent, i) = *frame;
            let nbrs = g.neighbors(u);
            if i < nbrs.len() {
                frame.2 += 1;
                let w = nbrs[i];
                if disc[w] == 0 {
                    edge_stack.push((u, w));
                    time += 1;
                    disc[w] = time;
                    low[w] = time;
                    frames.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                frames.pop();
                if parent != 0 {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (parent, u) {
                                break;
                            }
                        }
                        raw_blocks.push(block);
                    }
                }
            }
        }
    }

    let mut blocks: Vec<Block> = raw_blocks
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            let mut vertices: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            vertices.sort_unstable();
            vertices.dedup();
            Block { vertices, edges }
        })
        .chain(isolated.into_iter().map(|v| Block {
            vertices: vec![v],
            edges: Vec::new(),
        }))
        .collect();
    blocks.sort_by_key(Block::order_key);

    let mut block_of_edge = Vec::with_capacity(g.edge_count());
    for (b, block) in blocks.iter().enumerate() {
        for &e in &block.edges {
            block_of_edge.push((e, b));
        }
    }
    let blocks_of_vertex = Csr::from_entries(
        n + 1,
        blocks
            .iter()
            .enumerate()
            .flat_map(|(b, block)| block.vertices.iter().map(move |&v| (v, b))),
    );
    block_of_edge.sort_unstable();
    let cut_vertices = (1..=n).filter(|&v| blocks_of_vertex.row_len(v) >= 2).collect();

    BlockDecomposition {
        n,
        blocks,
        cut_vertices,
        block_of_edge,
        blocks_of_vertex,
    }
}

/// A node of the block forest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ForestNode {
    /// `x_v` for vertex `v`.
    Vertex(usize),
    /// `y_B` for the block with this index.
    Block(usize),
}

/// The bipartite vertex/block forest. Node `v - 1` is `x_v`, node `n + b` is
/// `y_B` for block index `b`.
#[derive(Clone, Debug)]
pub struct BlockForest {
    n: usize,
    adj: Csr,
}

impl BlockForest {
    fn new(dec: &BlockDecomposition) -> Self {
        let n = dec.n;
        let adj = Csr::from_entries(
            n + dec.blocks.len(),
            dec.blocks.iter().enumerate().flat_map(move |(b, block)| {
                block
                    .vertices
                    .iter()
                    .flat_map(move |&v| [(v - 1, n + b), (n + b, v - 1)])
            }),
        );
        Self { n, adj }
    }

    pub fn node_count(&self) -> usize {
        self.adj.rows()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.entries() / 2
    }

    pub fn node(&self, index: usize) -> ForestNode {
        if index < self.n {
            ForestNode::Vertex(index + 1)
        } else {
            ForestNode::Block(index - self.n)
        }
    }

    pub fn index_of(&self, node: ForestNode) -> usize {
        match node {
            ForestNode::Vertex(v) => v - 1,
            ForestNode::Block(b) => self.n + b,
        }
    }

    pub fn neighbors(&self, index: usize) -> &[usize] {
        self.adj.row(index)
    }

    pub fn degree(&self, node: ForestNode) -> usize {
        self.adj.row_len(self.index_of(node))
    }

    /// Breadth-first distances from `source`; `usize::MAX` marks other trees.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.adj.rows()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &w in self.adj.row(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Returns the node of maximum distance from `source` among those accepted
    /// by `keep`, with that distance.
    fn farthest(&self, source: usize, keep: impl Fn(usize) -> bool) -> (usize, usize, Vec<usize>) {
        let dist = self.distances_from(source);
        let (mut best, mut best_d) = (source, 0);
        for (i, &d) in dist.iter().enumerate() {
            if d != usize::MAX && keep(i) && d > best_d {
                best = i;
                best_d = d;
            }
        }
        (best, best_d, dist)
    }

    /// Per tree: double traversal, maximised over trees.
    pub fn diameter(&self) -> usize {
        self.tree_maxima(|_| true)
    }

    /// Longest distance between two vertex nodes in one tree.
    pub fn max_vertex_distance(&self) -> usize {
        let n = self.n;
        self.tree_maxima(move |i| i < n)
    }

    // Double traversal per tree restricted to endpoints accepted by `keep`.
    // Valid because every leaf of a tree is either kept or is the only other
    // node of a two-node tree.
    fn tree_maxima(&self, keep: impl Fn(usize) -> bool + Copy) -> usize {
        let mut visited = vec![false; self.adj.rows()];
        let mut best = 0;
        for start in 0..self.n {
            if visited[start] {
                continue;
            }
            let (far, _, dist) = self.farthest(start, keep);
            for (i, &d) in dist.iter().enumerate() {
                if d != usize::MAX {
                    visited[i] = true;
                }
            }
            let (_, d, _) = self.farthest(far, keep);
            best = best.max(d);
        }
        best
    }
}

pub fn block_forest(g: &LabeledGraph) -> BlockForest {
    decompose_blocks(g).forest()
}

/// `d(v)` for `v = 1..=n`: the number of blocks containing `v`.
pub fn block_degree_sequence(g: &LabeledGraph) -> Vec<usize> {
    decompose_blocks(g).block_degrees()
}

pub fn btf_diameter(g: &LabeledGraph) -> usize {
    block_forest(g).diameter()
}

/// Maximum number of distinct blocks met by the edges of a simple path.
///
/// Within a block any two distinct vertices are joined by a path using at
/// least one of its edges, so this is the largest number of block nodes on a
/// block-forest path between two vertex nodes, i.e. half that distance.
pub fn max_blocks_on_path(g: &LabeledGraph) -> usize {
    block_forest(g).max_vertex_distance() / 2
}

/// Membership in the class of graphs having a path with edges in at least
/// `t` different blocks.
pub fn in_q(g: &LabeledGraph, t: usize) -> bool {
    max_blocks_on_path(g) >= t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn figure_h() -> LabeledGraph {
        parse_graph("5 5\n1 2\n2 3\n3 4\n4 2\n2 5\n").unwrap()
    }

    fn triangle() -> LabeledGraph {
        LabeledGraph::new(3, [(1, 2), (2, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn figure_h_blocks() {
        let d = decompose_blocks(&figure_h());
        let sets: Vec<&[usize]> = d.blocks().iter().map(|b| b.vertices.as_slice()).collect();
        assert_eq!(sets, vec![&[1, 2][..], &[2, 3, 4], &[2, 5]]);
        assert_eq!(d.cut_vertices(), &[2]);
        assert_eq!(d.block_of_edge(4, 3), Some(1));
        assert_eq!(d.block_of_edge(1, 3), None);
        assert_eq!(d.to_json(), r#"{"blocks":[[1,2],[2,3,4],[2,5]],"cut_vertices":[2]}"#);
    }

    #[test]
    fn triangle_and_path_blocks() {
        let d = decompose_blocks(&triangle());
        assert_eq!(d.block_count(), 1);
        assert!(d.cut_vertices().is_empty());

        let p = LabeledGraph::path(3).unwrap();
        let d = decompose_blocks(&p);
        let sets: Vec<&[usize]> = d.blocks().iter().map(|b| b.vertices.as_slice()).collect();
        assert_eq!(sets, vec![&[1, 2][..], &[2, 3]]);
        assert_eq!(d.cut_vertices(), &[2]);
    }

    #[test]
    fn isolated_vertices_are_blocks() {
        let g = LabeledGraph::new(4, [(2, 3)]).unwrap();
        let d = decompose_blocks(&g);
        let sets: Vec<&[usize]> = d.blocks().iter().map(|b| b.vertices.as_slice()).collect();
        assert_eq!(sets, vec![&[1][..], &[2, 3], &[4]]);
        assert_eq!(d.block_degrees(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn forest_shapes() {
        let f = block_forest(&figure_h());
        assert_eq!(f.node_count(), 8);
        assert_eq!(f.edge_count(), 7);
        assert_eq!(f.degree(ForestNode::Vertex(2)), 3);

        let single = block_forest(&LabeledGraph::empty(1).unwrap());
        assert_eq!(single.node_count(), 2);
        assert_eq!(single.edge_count(), 1);

        let two_edges = block_forest(&LabeledGraph::new(4, [(1, 2), (3, 4)]).unwrap());
        assert_eq!(two_edges.node_count(), 6);
        assert_eq!(two_edges.edge_count(), 4);
        assert_eq!(two_edges.diameter(), 2);
    }

    #[test]
    fn block_degrees() {
        assert_eq!(block_degree_sequence(&figure_h()), vec![1, 3, 1, 1, 1]);
        assert_eq!(block_degree_sequence(&LabeledGraph::path(3).unwrap()), vec![1, 2, 1]);
        assert_eq!(block_degree_sequence(&triangle()), vec![1, 1, 1]);
    }

    #[test]
    fn diameters() {
        assert_eq!(btf_diameter(&figure_h()), 4);
        assert_eq!(btf_diameter(&LabeledGraph::new(2, [(1, 2)]).unwrap()), 2);
        assert_eq!(btf_diameter(&LabeledGraph::empty(1).unwrap()), 1);
    }

    #[test]
    fn blocks_on_paths() {
        assert_eq!(max_blocks_on_path(&figure_h()), 2);
        for n in 1..8 {
            assert_eq!(max_blocks_on_path(&LabeledGraph::path(n).unwrap()), n - 1);
        }
        assert_eq!(max_blocks_on_path(&triangle()), 1);
        assert_eq!(max_blocks_on_path(&LabeledGraph::empty(3).unwrap()), 0);
        assert!(in_q(&figure_h(), 2));
        assert!(!in_q(&figure_h(), 3));
    }
}
