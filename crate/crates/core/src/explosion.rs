//! Exploding a connected graph into vertex-disjoint block copies joined by
//! ghost bridges, the skeleton tree of that structure, and the explosion
//! neighbourhood descriptor shared by every graph with the same parts.
//!
//! The construction is rooted at vertex `n`. For each block `B`, `v_B` is `n`
//! when `n` lies in `B` and otherwise the cut vertex of `B` on the way to `n`;
//! `Q_B = V(B) \ {v_B}`. Blocks are numbered `1..=k` by increasing `max(Q_B)`.
//! Part `P_i` holds `Q_i` plus a ghost `g_i = n + i` standing in for `v_i`, and
//! `P_{k+1} = {n}`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::blocks::{decompose_blocks, ForestNode};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::prufer::Tree;

/// The exploded graph. Labels `1..=n` are original vertices, `n + i` is the
/// ghost of part `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplodedGraph {
    base_n: usize,
    k: usize,
    parts: Vec<Vec<usize>>,
    within_part_edges: Vec<(usize, usize)>,
    /// `(g_i, v_i)` for `i = 1..=k`, in part order.
    attachments: Vec<(usize, usize)>,
}

impl ExplodedGraph {
    pub fn base_n(&self) -> usize {
        self.base_n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `P_1, ..., P_{k+1}`, each sorted (the ghost, being the largest label, is last).
    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn within_part_edges(&self) -> &[(usize, usize)] {
        &self.within_part_edges
    }

    pub fn attachments(&self) -> &[(usize, usize)] {
        &self.attachments
    }

    pub fn ghost(&self, part: usize) -> usize {
        self.base_n + part
    }

    /// `v_i` for `i = 1..=k`.
    pub fn attachment_vertices(&self) -> Vec<usize> {
        self.attachments.iter().map(|&(_, v)| v).collect()
    }

    /// Part index (1-based) of every label `1..=n+k`; slot 0 unused.
    pub fn part_of_labels(&self) -> Vec<usize> {
        let mut part_of = vec![0; self.base_n + self.k + 1];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                part_of[v] = i + 1;
            }
        }
        part_of
    }

    /// All edges of the exploded graph on `n + k` labels.
    pub fn to_graph(&self) -> LabeledGraph {
        let mut edges = self.within_part_edges.clone();
        edges.extend(self.attachments.iter().map(|&(g, v)| (v.min(g), v.max(g))));
        edges.sort_unstable();
        LabeledGraph::from_sorted(self.base_n + self.k, edges)
    }

    pub fn descriptor(&self) -> ExplosionNeighborhood {
        let n = self.base_n;
        let mut parts = Vec::with_capacity(self.k + 1);
        for (i, members) in self.parts.iter().enumerate() {
            let ghost = (i < self.k).then_some(n + i + 1);
            let edges = self
                .within_part_edges
                .iter()
                .copied()
                .filter(|&(u, _)| members.binary_search(&u).is_ok())
                .collect();
            parts.push(PartTemplate {
                members: members.clone(),
                ghost,
                edges,
            });
        }
        let part_of = self.part_of_labels();
        let f = (1..=n).map(|v| part_of[v]).collect();
        let mut weights: Vec<u64> = self.parts[..self.k]
            .iter()
            .map(|p| (p.len() - 1) as u64)
            .collect();
        weights.push(1);
        ExplosionNeighborhood {
            n,
            k: self.k,
            parts,
            f,
            weights,
        }
    }
}

/// Explodes a connected graph.
pub fn explode(g: &LabeledGraph) -> Result<ExplodedGraph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let dec = decompose_blocks(g);
    let forest = dec.forest();

    // Breadth-first search from x_n: the parent of y_B is x_{v_B}.
    let root = forest.index_of(ForestNode::Vertex(n));
    let mut parent = vec![usize::MAX; forest.node_count()];
    parent[root] = root;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in forest.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }

    struct Pending {
        v: usize,
        q: Vec<usize>,
        edges: Vec<(usize, usize)>,
    }
    let mut pending: Vec<Pending> = dec
        .blocks()
        .iter()
        .enumerate()
        .map(|(b, block)| {
            let ForestNode::Vertex(v) = forest.node(parent[forest.index_of(ForestNode::Block(b))])
            else {
                unreachable!("block nodes have vertex parents")
            };
            Pending {
                v,
                q: block.vertices.iter().copied().filter(|&u| u != v).collect(),
                edges: block.edges.clone(),
            }
        })
        .collect();
    // The sets Q_B partition [n - 1], so their maxima are distinct. The
    // single-vertex graph has one block with empty Q.
    pending.sort_by_key(|p| p.q.last().copied().unwrap_or(0));

    let k = pending.len();
    let mut parts = Vec::with_capacity(k + 1);
    let mut within = Vec::new();
    let mut attachments = Vec::with_capacity(k);
    for (idx, p) in pending.into_iter().enumerate() {
        let ghost = n + idx + 1;
        let swap = |u: usize| if u == p.v { ghost } else { u };
        within.extend(p.edges.iter().map(|&(a, b)| {
            let (a, b) = (swap(a), swap(b));
            (a.min(b), a.max(b))
        }));
        let mut members = p.q;
        members.push(ghost);
        parts.push(members);
        attachments.push((ghost, p.v));
    }
    parts.push(vec![n]);
    within.sort_unstable();

    Ok(ExplodedGraph {
        base_n: n,
        k,
        parts,
        within_part_edges: within,
        attachments,
    })
}

/// The tree on `[k+1]` obtained by contracting every part to a node.
pub fn skeleton_tree(x: &ExplodedGraph) -> Tree {
    let part_of = x.part_of_labels();
    let edges = x
        .attachments
        .iter()
        .enumerate()
        .map(|(i, &(_, v))| (i + 1, part_of[v]))
        .collect();
    Tree::from_edges_unchecked(x.k + 1, edges)
}

/// Contracts every attachment edge `g_i v_i`, recovering a graph on `[n]`.
pub fn contract(x: &ExplodedGraph) -> Result<LabeledGraph> {
    let n = x.base_n;
    let mut target = vec![0usize; x.k + 1];
    for &(g, v) in &x.attachments {
        if g <= n || g > n + x.k {
            return Err(Error::InvalidExplosion(format!("{g} is not a ghost label")));
        }
        if v == 0 || v > n {
            return Err(Error::InvalidExplosion(format!(
                "ghost {g} attached to non-original vertex {v}"
            )));
        }
        if target[g - n] != 0 {
            return Err(Error::InvalidExplosion(format!(
                "ghost {g} has more than one attachment edge"
            )));
        }
        target[g - n] = v;
    }
    if let Some(i) = (1..=x.k).find(|&i| target[i] == 0) {
        return Err(Error::InvalidExplosion(format!(
            "ghost {} has no attachment edge",
            n + i
        )));
    }
    let resolve = |u: usize| if u > n { target[u - n] } else { u };
    let edges = x
        .within_part_edges
        .iter()
        .map(|&(a, b)| (resolve(a), resolve(b)));
    LabeledGraph::new(n, edges).map_err(|e| Error::InvalidExplosion(e.to_string()))
}

/// One part of a descriptor: its labelled members, ghost, and the edges it
/// induces in the exploded graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartTemplate {
    pub members: Vec<usize>,
    pub ghost: Option<usize>,
    pub edges: Vec<(usize, usize)>,
}

/// Everything shared by the graphs of one explosion neighbourhood: the parts
/// with their labelled block templates, the part map `f` (stored as
/// `f[v - 1]`) and the weights `w_j = |Q_j|`, `w_{k+1} = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExplosionNeighborhood {
    pub n: usize,
    pub k: usize,
    pub parts: Vec<PartTemplate>,
    pub f: Vec<usize>,
    pub weights: Vec<u64>,
}

impl ExplosionNeighborhood {
    /// `f(v)` for a vertex `v` in `[n]`.
    pub fn part_of(&self, v: usize) -> usize {
        self.f[v - 1]
    }

    /// Checks every structural invariant; used on descriptors read from disk.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidDescriptor(msg));
        let (n, k) = (self.n, self.k);
        if n == 0 || k == 0 {
            return bad("n and k must be positive".into());
        }
        if self.parts.len() != k + 1 || self.weights.len() != k + 1 || self.f.len() != n {
            return bad(format!(
                "expected {} parts and weights and {n} entries of f",
                k + 1
            ));
        }
        let root = &self.parts[k];
        if root.members != [n] || root.ghost.is_some() || !root.edges.is_empty() {
            return bad(format!("last part must be {{{n}}} with no ghost or edges"));
        }
        if self.weights[k] != 1 {
            return bad("root weight must be 1".into());
        }
        let mut seen = vec![false; n + k + 1];
        for (idx, part) in self.parts[..k].iter().enumerate() {
            let i = idx + 1;
            if part.ghost != Some(n + i) {
                return bad(format!("part {i} must have ghost {}", n + i));
            }
            if part.members.last() != Some(&(n + i)) || !part.members.windows(2).all(|w| w[0] < w[1]) {
                return bad(format!("members of part {i} must be sorted and end with the ghost"));
            }
            for &v in &part.members[..part.members.len() - 1] {
                if v == 0 || v >= n || seen[v] {
                    return bad(format!("vertex {v} misplaced in part {i}"));
                }
                seen[v] = true;
                if self.f[v - 1] != i {
                    return bad(format!("f({v}) disagrees with part {i}"));
                }
            }
            if self.weights[idx] != (part.members.len() - 1) as u64 {
                return bad(format!("weight of part {i} must be |Q_{i}|"));
            }
            for &(u, v) in &part.edges {
                if u >= v
                    || part.members.binary_search(&u).is_err()
                    || part.members.binary_search(&v).is_err()
                {
                    return bad(format!("edge {u} {v} leaves part {i}"));
                }
            }
            if !part.edges.windows(2).all(|w| w[0] < w[1]) {
                return bad(format!("edges of part {i} must be sorted and distinct"));
            }
        }
        if let Some(v) = (1..n).find(|&v| !seen[v]) {
            return bad(format!("vertex {v} lies in no part"));
        }
        if self.f[n - 1] != k + 1 {
            return bad("f(n) must be k + 1".into());
        }
        if n > 1 && self.weights[..k].contains(&0) {
            return bad("every part below the root needs a vertex".into());
        }
        Ok(())
    }

    /// Builds the exploded graph whose ghost `g_i` attaches to `attach[i-1]`.
    pub fn assemble(&self, attach: &[usize]) -> ExplodedGraph {
        debug_assert_eq!(attach.len(), self.k);
        let mut within: Vec<(usize, usize)> = self
            .parts
            .iter()
            .flat_map(|p| p.edges.iter().copied())
            .collect();
        within.sort_unstable();
        ExplodedGraph {
            base_n: self.n,
            k: self.k,
            parts: self.parts.iter().map(|p| p.members.clone()).collect(),
            within_part_edges: within,
            attachments: attach
                .iter()
                .enumerate()
                .map(|(i, &v)| (self.n + i + 1, v))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptor is always serialisable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let d: Self =
            serde_json::from_str(text).map_err(|e| Error::InvalidDescriptor(e.to_string()))?;
        d.validate()?;
        Ok(d)
    }
}

/// Descriptor of the explosion neighbourhood of a connected graph.
pub fn descriptor_of(g: &LabeledGraph) -> Result<ExplosionNeighborhood> {
    explode(g).map(|x| x.descriptor())
}

/// One connected component, relabelled onto `1..=|vertices|` in increasing
/// order so that its largest label becomes the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentExplosion {
    pub vertices: Vec<usize>,
    pub exploded: ExplodedGraph,
}

/// Explodes each component separately, rooted at its largest vertex.
pub fn explode_components(g: &LabeledGraph) -> Vec<ComponentExplosion> {
    g.components()
        .into_parts()
        .into_iter()
        .map(|vertices| {
            let sub = g.induced_relabeled(&vertices);
            let exploded = explode(&sub).expect("components are connected");
            ComponentExplosion { vertices, exploded }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn figure_h() -> LabeledGraph {
        parse_graph("5 5\n1 2\n2 3\n3 4\n4 2\n2 5\n").unwrap()
    }

    #[test]
    fn figure_h_explosion() {
        let x = explode(&figure_h()).unwrap();
        assert_eq!(x.k(), 3);
        // ghosts g_1, g_2, g_3 are 6, 7, 8
        assert_eq!(x.parts(), &[vec![1, 6], vec![2, 7], vec![3, 4, 8], vec![5]]);
        assert_eq!(x.attachment_vertices(), vec![2, 5, 2]);
        assert_eq!(x.within_part_edges(), &[(1, 6), (2, 7), (3, 4), (3, 8), (4, 8)]);
        assert_eq!(contract(&x).unwrap(), figure_h());
        assert_eq!(skeleton_tree(&x).edges(), &[(1, 2), (2, 3), (2, 4)]);
    }

    #[test]
    fn exploded_graph_has_bridge_attachments() {
        let x = explode(&figure_h()).unwrap();
        let whole = x.to_graph();
        let dec = decompose_blocks(&whole);
        for &(g, v) in x.attachments() {
            let b = dec.block_of_edge(g, v).unwrap();
            assert_eq!(dec.blocks()[b].edges.len(), 1, "attachment {g}-{v} is a bridge");
        }
        let without = LabeledGraph::new(whole.n(), x.within_part_edges().iter().copied()).unwrap();
        assert_eq!(without.components().parts(), &[vec![1, 6], vec![2, 7], vec![3, 4, 8], vec![5]]);
    }

    #[test]
    fn triangle_explosion() {
        let t = LabeledGraph::new(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        let x = explode(&t).unwrap();
        assert_eq!(x.k(), 1);
        assert_eq!(x.parts(), &[vec![1, 2, 4], vec![3]]);
        assert_eq!(x.within_part_edges(), &[(1, 2), (1, 4), (2, 4)]);
        assert_eq!(x.attachments(), &[(4, 3)]);
        assert_eq!(skeleton_tree(&x).edges(), &[(1, 2)]);
        assert_eq!(contract(&x).unwrap(), t);
    }

    #[test]
    fn single_vertex_explosion() {
        let g = LabeledGraph::empty(1).unwrap();
        let x = explode(&g).unwrap();
        assert_eq!(x.k(), 1);
        assert_eq!(x.parts(), &[vec![2], vec![1]]);
        assert_eq!(contract(&x).unwrap(), g);
        let d = x.descriptor();
        assert_eq!(d.weights, vec![0, 1]);
        d.validate().unwrap();
    }

    #[test]
    fn path_skeleton_is_a_path() {
        let p = LabeledGraph::path(6).unwrap();
        let x = explode(&p).unwrap();
        // block {i, i+1} has v = i + 1 and Q = {i}
        assert_eq!(x.parts()[..5], [vec![1, 7], vec![2, 8], vec![3, 9], vec![4, 10], vec![5, 11]]);
        let t = skeleton_tree(&x);
        assert!(t.is_path());
        assert_eq!(t.edges(), &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]);
    }

    #[test]
    fn descriptors() {
        let d = descriptor_of(&figure_h()).unwrap();
        assert_eq!(d.weights, vec![1, 1, 2, 1]);
        assert_eq!(d.f, vec![1, 2, 3, 3, 4]);
        assert_eq!(d.weights.iter().sum::<u64>(), 5);
        d.validate().unwrap();
        assert_eq!(ExplosionNeighborhood::from_json(&d.to_json()).unwrap(), d);

        let p = descriptor_of(&LabeledGraph::path(5).unwrap()).unwrap();
        assert_eq!(p.weights, vec![1, 1, 1, 1, 1]);

        let disconnected = LabeledGraph::new(3, [(1, 2)]).unwrap();
        assert_eq!(descriptor_of(&disconnected), Err(Error::Disconnected));
    }

    #[test]
    fn invalid_descriptors_are_rejected() {
        let d = descriptor_of(&figure_h()).unwrap();
        let mut bad = d.clone();
        bad.weights[2] = 3;
        assert!(bad.validate().is_err());
        let mut bad = d.clone();
        bad.f[0] = 2;
        assert!(bad.validate().is_err());
        let mut bad = d.clone();
        bad.parts[2].edges.push((1, 3));
        assert!(bad.validate().is_err());
        let mut bad = d;
        bad.parts[3].members = vec![4];
        assert!(bad.validate().is_err());
        assert!(ExplosionNeighborhood::from_json("{").is_err());
    }

    #[test]
    fn contract_rejects_broken_attachments() {
        let x = explode(&figure_h()).unwrap();
        let mut broken = x.clone();
        broken.attachments[1] = (6, 5);
        assert!(matches!(contract(&broken), Err(Error::InvalidExplosion(_))));
        let mut broken = x;
        broken.attachments[0] = (6, 7);
        assert!(contract(&broken).is_err());
    }

    #[test]
    fn components_explode_separately() {
        let g = LabeledGraph::new(6, [(1, 4), (4, 6), (2, 3), (3, 5)]).unwrap();
        let parts = explode_components(&g);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].vertices, vec![1, 4, 6]);
        assert_eq!(parts[0].exploded.k(), 2);
        assert_eq!(parts[1].vertices, vec![2, 3, 5]);
    }
}
