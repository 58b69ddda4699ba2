//! Labelled trees, Prüfer coding and the weighted random tree model.
//!
//! Encoding repeatedly removes the leaf with the smallest label and records
//! its neighbour until two nodes remain. Both directions run in linear time
//! using the usual moving-pointer trick; the largest label `m` is never
//! removed.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};

/// A labelled tree on `[m]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tree {
    m: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Tree {
    /// Validates that the edges form a spanning tree of `[m]`.
    pub fn new(m: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidTree("a tree needs at least one node".into()));
        }
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u == v || u == 0 || v == 0 || u > m || v > m {
                return Err(Error::InvalidTree(format!("bad edge {u} {v} on [{m}]")));
            }
            list.push((u.min(v), u.max(v)));
        }
        if list.len() != m - 1 {
            return Err(Error::InvalidTree(format!(
                "{} edges on {m} nodes, expected {}",
                list.len(),
                m - 1
            )));
        }
        let tree = Self::from_edges_unchecked(m, list);
        if tree.distances_from(1).contains(&usize::MAX) {
            return Err(Error::InvalidTree("edges do not connect every node".into()));
        }
        Ok(tree)
    }

    pub(crate) fn from_edges_unchecked(m: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut edges: Vec<(usize, usize)> =
            edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        let mut adj = vec![Vec::new(); m + 1];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { m, edges, adj }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (1..=self.m).map(|v| self.adj[v].len()).collect()
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.m).map(|v| self.adj[v].len()).max().unwrap_or(0)
    }

    pub fn is_path(&self) -> bool {
        self.max_degree() <= 2
    }

    /// Distances (in edges) from `source`, indexed by label; slot 0 unused.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.m + 1];
        dist[0] = 0;
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn to_graph(&self) -> crate::graph::LabeledGraph {
        crate::graph::LabeledGraph::from_sorted(self.m, self.edges.clone())
    }
}

/// An integer word over the alphabet `[alphabet]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    alphabet: usize,
    symbols: Vec<usize>,
}

impl Codeword {
    pub fn new(alphabet: usize, symbols: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s == 0 || s > alphabet) {
            return Err(Error::InvalidCodeword(format!(
                "symbol {bad} outside [1, {alphabet}]"
            )));
        }
        Ok(Self { alphabet, symbols })
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of coordinates equal to `j`.
    pub fn appearances(&self, j: usize) -> usize {
        self.symbols.iter().filter(|&&s| s == j).count()
    }

    /// Appearance counts for every letter, indexed by letter; slot 0 unused.
    pub fn appearance_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.alphabet + 1];
        for &s in &self.symbols {
            counts[s] += 1;
        }
        counts
    }

    /// Parses space-separated decimal symbols.
    pub fn parse(alphabet: usize, text: &str) -> Result<Self> {
        let symbols = text
            .split_whitespace()
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::InvalidCodeword(format!("not an integer: {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(alphabet, symbols)
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Result of encoding: the word and the labels of the removed leaves in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PruferEncoding {
    pub word: Codeword,
    pub removal_order: Vec<usize>,
}

/// Parent of every node when the tree is rooted at `m`; the root maps to 0.
fn parents_towards_max(tree: &Tree) -> Vec<usize> {
    let m = tree.m;
    let mut parent = vec![0; m + 1];
    let mut seen = vec![false; m + 1];
    seen[m] = true;
    let mut queue = VecDeque::from([m]);
    while let Some(u) = queue.pop_front() {
        for &w in &tree.adj[u] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    parent
}

pub fn prufer_encode(tree: &Tree) -> Result<Codeword> {
    prufer_encode_with_order(tree).map(|e| e.word)
}

pub fn prufer_encode_with_order(tree: &Tree) -> Result<PruferEncoding> {
    let m = tree.m;
    if m < 2 {
        return Err(Error::InvalidTree("Prüfer coding needs at least two nodes".into()));
    }
    // Rooted at m, the remaining neighbour of any removable leaf is its parent.
    let parent = parents_towards_max(tree);
    let mut degree: Vec<usize> = (0..=m).map(|v| tree.adj[v].len()).collect();
    let mut word = Vec::with_capacity(m - 2);
    let mut order = Vec::with_capacity(m - 2);

    let mut ptr = (1..=m).find(|&v| degree[v] == 1).expect("a tree has leaves");
    let mut leaf = ptr;
    for _ in 0..m - 2 {
        let next = parent[leaf];
        word.push(next);
        order.push(leaf);
        degree[leaf] = 0;
        degree[next] -= 1;
        if degree[next] == 1 && next < ptr {
            leaf = next;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    Ok(PruferEncoding {
        word: Codeword {
            alphabet: m,
            symbols: word,
        },
        removal_order: order,
    })
}

/// Result of decoding, with per-step bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PruferDecoding {
    pub tree: Tree,
    /// `(removed leaf, recorded neighbour)` for each letter of the word.
    pub steps: Vec<(usize, usize)>,
    /// The two surviving nodes; the second is always `m`.
    pub last_pair: (usize, usize),
}

pub fn prufer_decode(word: &Codeword) -> Result<Tree> {
    prufer_decode_steps(word).map(|d| d.tree)
}

/// Decodes a word over `[m]` of length `m - 2`.
pub fn prufer_decode_steps(word: &Codeword) -> Result<PruferDecoding> {
    let m = word.alphabet;
    if m < 2 || word.symbols.len() != m - 2 {
        return Err(Error::InvalidCodeword(format!(
            "length {} over [{m}], expected {}",
            word.symbols.len(),
            m.saturating_sub(2)
        )));
    }
    let mut degree = vec![1usize; m + 1];
    degree[0] = 0;
    for &s in &word.symbols {
        degree[s] += 1;
    }
    let mut steps = Vec::with_capacity(m - 2);
    let mut edges = Vec::with_capacity(m - 1);

    let mut ptr = (1..=m).find(|&v| degree[v] == 1).expect("some letter is absent");
    let mut leaf = ptr;
    for &next in &word.symbols {
        steps.push((leaf, next));
        edges.push((leaf.min(next), leaf.max(next)));
        degree[leaf] = 0;
        degree[next] -= 1;
        if degree[next] == 1 && next < ptr {
            leaf = next;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    // The only other node still of degree one is m, which has never been a
    // removal candidate because a smaller leaf always exists before the end.
    debug_assert!(leaf < m && degree[m] == 1);
    edges.push((leaf, m));
    Ok(PruferDecoding {
        tree: Tree::from_edges_unchecked(m, edges),
        steps,
        last_pair: (leaf, m),
    })
}

/// Uniform labelled tree on `[m]`: decode of a uniform word.
pub fn sample_uniform_tree<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Tree {
    assert!(m >= 1, "tree size must be positive");
    if m == 1 {
        return Tree::from_edges_unchecked(1, Vec::new());
    }
    let symbols = (0..m - 2).map(|_| rng.gen_range(1..=m)).collect();
    prufer_decode(&Codeword {
        alphabet: m,
        symbols,
    })
    .expect("uniform word has the right shape")
}

#[derive(Clone, Debug, PartialEq)]
enum Weights {
    Integer { weights: Vec<u64>, cumulative: Vec<u64> },
    Real { weights: Vec<f64>, cumulative: Vec<f64> },
}

/// Letter weights `w_1, ..., w_m`; each letter `j` is drawn with probability
/// `w_j / sum(w)`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightModel {
    weights: Weights,
}

impl WeightModel {
    /// Exact integer weights, sampled without floating point.
    pub fn integer(weights: Vec<u64>) -> Result<Self> {
        if weights.is_empty() || weights.contains(&0) {
            return Err(Error::InvalidDistribution("weights must be positive".into()));
        }
        let cumulative = weights
            .iter()
            .scan(0u64, |acc, &w| {
                *acc += w;
                Some(*acc)
            })
            .collect();
        Ok(Self {
            weights: Weights::Integer { weights, cumulative },
        })
    }

    pub fn real(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() || weights.iter().any(|&w| !(w > 0.0 && w.is_finite())) {
            return Err(Error::InvalidDistribution(
                "weights must be positive and finite".into(),
            ));
        }
        let cumulative = weights
            .iter()
            .scan(0f64, |acc, &w| {
                *acc += w;
                Some(*acc)
            })
            .collect();
        Ok(Self {
            weights: Weights::Real { weights, cumulative },
        })
    }

    pub fn uniform(m: usize) -> Result<Self> {
        Self::integer(vec![1; m])
    }

    pub fn m(&self) -> usize {
        match &self.weights {
            Weights::Integer { weights, .. } => weights.len(),
            Weights::Real { weights, .. } => weights.len(),
        }
    }

    /// The integer weights, when the model was built from integers.
    pub fn integer_weights(&self) -> Option<&[u64]> {
        match &self.weights {
            Weights::Integer { weights, .. } => Some(weights),
            Weights::Real { .. } => None,
        }
    }

    pub fn weight(&self, j: usize) -> f64 {
        match &self.weights {
            Weights::Integer { weights, .. } => weights[j - 1] as f64,
            Weights::Real { weights, .. } => weights[j - 1],
        }
    }

    /// Draws one letter in `[m]` by cumulative-sum inversion.
    pub fn sample_letter<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        match &self.weights {
            Weights::Integer { cumulative, .. } => {
                let u = rng.gen_range(0..*cumulative.last().unwrap());
                cumulative.partition_point(|&c| c <= u) + 1
            }
            Weights::Real { cumulative, .. } => {
                let total = *cumulative.last().unwrap();
                let u = rng.gen::<f64>() * total;
                (cumulative.partition_point(|&c| c <= u) + 1).min(cumulative.len())
            }
        }
    }
}

/// `T(X)` for `X_1, ..., X_{m-2}` i.i.d. from the weight model.
pub fn sample_weighted_tree<R: Rng + ?Sized>(model: &WeightModel, rng: &mut R) -> Tree {
    let m = model.m();
    assert!(m >= 2, "weighted tree model needs at least two letters");
    let symbols = (0..m - 2).map(|_| model.sample_letter(rng)).collect();
    prufer_decode(&Codeword {
        alphabet: m,
        symbols,
    })
    .expect("sampled word has the right shape")
}

pub fn tree_distance(tree: &Tree, i: usize, j: usize) -> Result<usize> {
    for v in [i, j] {
        if v == 0 || v > tree.m {
            return Err(Error::OutOfRange(format!("node {v} not in [{}]", tree.m)));
        }
    }
    Ok(tree.distances_from(i)[j])
}

/// Diameter by double breadth-first traversal.
pub fn tree_diameter(tree: &Tree) -> usize {
    let farthest = |src: usize| {
        tree.distances_from(src)
            .iter()
            .enumerate()
            .skip(1)
            .max_by_key(|&(v, &d)| (d, std::cmp::Reverse(v)))
            .map(|(v, &d)| (v, d))
            .unwrap()
    };
    let (a, _) = farthest(1);
    farthest(a).1
}

impl FromStr for Tree {
    type Err = Error;

    /// Reads the edge-list graph format and checks that it is a tree.
    fn from_str(s: &str) -> Result<Self> {
        let g = crate::graph::parse_graph(s)?;
        Tree::new(g.n(), g.edges().iter().copied())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn star_at_2() -> Tree {
        Tree::new(4, [(1, 2), (2, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn encode_examples() {
        assert_eq!(prufer_encode(&star_at_2()).unwrap().symbols(), &[2, 2]);
        let p3 = Tree::new(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(prufer_encode(&p3).unwrap().symbols(), &[2]);
        let edge = Tree::new(2, [(1, 2)]).unwrap();
        assert!(prufer_encode(&edge).unwrap().is_empty());
        assert!(prufer_encode(&Tree::new(1, []).unwrap()).is_err());
    }

    #[test]
    fn encode_reports_removal_order() {
        // 5-4-1-2-3: leaves 3 and 5; remove 3, then 2, then 1
        let t = Tree::new(5, [(5, 4), (4, 1), (1, 2), (2, 3)]).unwrap();
        let e = prufer_encode_with_order(&t).unwrap();
        assert_eq!(e.word.symbols(), &[2, 1, 4]);
        assert_eq!(e.removal_order, vec![3, 2, 1]);
    }

    #[test]
    fn decode_examples() {
        let w = Codeword::new(4, vec![2, 2]).unwrap();
        let d = prufer_decode_steps(&w).unwrap();
        assert_eq!(d.tree, star_at_2());
        assert_eq!(d.steps, vec![(1, 2), (3, 2)]);
        assert_eq!(d.last_pair, (2, 4));

        let empty = Codeword::new(2, vec![]).unwrap();
        assert_eq!(prufer_decode(&empty).unwrap().edges(), &[(1, 2)]);

        assert!(prufer_decode(&Codeword::new(4, vec![2]).unwrap()).is_err());
        assert!(Codeword::new(4, vec![5, 1]).is_err());
        assert!(Codeword::new(4, vec![0, 1]).is_err());
    }

    #[test]
    fn tree_validation() {
        assert!(Tree::new(3, [(1, 2)]).is_err());
        assert!(Tree::new(4, [(1, 2), (2, 1), (3, 4)]).is_err());
        assert!(Tree::new(3, [(1, 1), (2, 3)]).is_err());
        assert!(Tree::new(3, [(1, 4), (2, 3)]).is_err());
        assert!(Tree::new(1, []).is_ok());
    }

    #[test]
    fn distances() {
        let s = star_at_2();
        assert_eq!(tree_distance(&s, 1, 3).unwrap(), 2);
        assert_eq!(tree_diameter(&s), 2);
        let p = Tree::new(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(tree_distance(&p, 1, 4).unwrap(), 3);
        assert_eq!(tree_diameter(&p), 3);
        assert!(tree_distance(&p, 0, 4).is_err());
        assert!(tree_distance(&p, 1, 5).is_err());
        assert_eq!(tree_diameter(&Tree::new(1, []).unwrap()), 0);
    }

    #[test]
    fn codeword_text() {
        let w = Codeword::parse(5, " 2  2 ").unwrap();
        assert_eq!(w.to_string(), "2 2");
        assert_eq!(w.appearances(2), 2);
        assert_eq!(w.appearance_counts(), vec![0, 0, 2, 0, 0, 0]);
        assert!(Codeword::parse(5, "2 x").is_err());
        assert!(Codeword::parse(5, "6").is_err());
    }

    #[test]
    fn samplers_are_deterministic() {
        let a = sample_uniform_tree(50, &mut ChaCha8Rng::seed_from_u64(9));
        let b = sample_uniform_tree(50, &mut ChaCha8Rng::seed_from_u64(9));
        assert_eq!(a, b);
        let two = sample_uniform_tree(2, &mut ChaCha8Rng::seed_from_u64(1));
        assert_eq!(two.edges(), &[(1, 2)]);
        assert_eq!(sample_uniform_tree(1, &mut ChaCha8Rng::seed_from_u64(1)).m(), 1);
    }

    #[test]
    fn weighted_letters_follow_weights() {
        let wm = WeightModel::integer(vec![1, 1, 2, 1]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let n = 100_000;
        let mut counts = [0usize; 5];
        for _ in 0..n {
            counts[wm.sample_letter(&mut rng)] += 1;
        }
        for (j, &w) in [1.0, 1.0, 2.0, 1.0].iter().enumerate() {
            let p = w / 5.0;
            let sigma = (p * (1.0 - p) / n as f64).sqrt();
            let freq = counts[j + 1] as f64 / n as f64;
            assert!((freq - p).abs() < 4.0 * sigma, "letter {} freq {freq}", j + 1);
        }
        assert!(WeightModel::integer(vec![1, 0]).is_err());
        assert!(WeightModel::real(vec![1.0, f64::NAN]).is_err());
        let real = WeightModel::real(vec![0.5, 1.5]).unwrap();
        assert!((1..=2).contains(&real.sample_letter(&mut rng)));
    }
}
