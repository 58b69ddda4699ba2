//! Brute-force ground truth for small instances.
//!
//! Every value here is exact: integer counts or arbitrary-precision
//! rationals. Comparisons against bounds of the form `c * exp(-x)` use the
//! rigorous enclosures in [`crate::exact`].

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::blocks::decompose_blocks;
use crate::codec::{count_with_tree, decode_extended, neighborhood_size};
use crate::error::{Error, Result};
use crate::exact::{falling_factorial, from_biguint, ratio, render, to_f64};
use crate::explosion::ExplosionNeighborhood;
use crate::graph::LabeledGraph;
use crate::prufer::{prufer_decode, Codeword, Tree, WeightModel};

/// Size limits for exhaustive work. These are configuration so that callers
/// can tighten or loosen them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Maximum number of codewords any single enumeration may visit.
    pub enumeration_cap: u64,
    /// Largest tree size for exact weighted-tree distributions.
    pub max_tree_nodes: usize,
    /// Largest block handled by brute-force canonical labelling.
    pub max_block_size: usize,
    /// Largest `n` for edge-subset enumeration of graph classes.
    pub max_class_n: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self {
            enumeration_cap: 1_000_000,
            max_tree_nodes: 8,
            max_block_size: 8,
            max_class_n: 7,
        }
    }
}

/// A finite distribution with exact probabilities summing to one.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactDistribution<T> {
    support: Vec<T>,
    probabilities: Vec<BigRational>,
}

impl<T> ExactDistribution<T> {
    pub fn new(support: Vec<T>, probabilities: Vec<BigRational>) -> Result<Self> {
        if support.len() != probabilities.len() {
            return Err(Error::InvalidDistribution("support and probabilities differ in length".into()));
        }
        if probabilities.iter().any(|p| p < &BigRational::zero()) {
            return Err(Error::InvalidDistribution("negative probability".into()));
        }
        let total: BigRational = probabilities.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidDistribution(format!("probabilities sum to {}", render(&total))));
        }
        Ok(Self { support, probabilities })
    }

    pub fn support(&self) -> &[T] {
        &self.support
    }

    pub fn probabilities(&self) -> &[BigRational] {
        &self.probabilities
    }

    /// Exact probability of the event `pred`.
    pub fn probability(&self, pred: impl Fn(&T) -> bool) -> BigRational {
        self.support
            .iter()
            .zip(&self.probabilities)
            .filter(|(x, _)| pred(x))
            .map(|(_, p)| p.clone())
            .sum()
    }
}

/// All words of length `len` over `[alphabet]` in lexicographic order.
pub fn all_words(alphabet: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = (alphabet > 0 || len == 0).then(|| vec![1; len]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        for i in (0..len).rev() {
            if succ[i] < alphabet {
                succ[i] += 1;
                next = Some(succ);
                break;
            }
            succ[i] = 1;
        }
        Some(current)
    })
}

fn check_cap(count: &BigUint, cap: u64) -> Result<()> {
    if count > &BigUint::from(cap) {
        return Err(Error::CapExceeded {
            required: count.to_string(),
            cap,
        });
    }
    Ok(())
}

/// Every graph of the neighbourhood, in lexicographic codeword order.
pub fn enumerate_neighborhood(d: &ExplosionNeighborhood, cap: u64) -> Result<Vec<LabeledGraph>> {
    check_cap(&neighborhood_size(d), cap)?;
    if d.k < 2 {
        return Ok(vec![crate::codec::sole_member(d)?]);
    }
    all_words(d.n, d.k - 1)
        .map(|w| decode_extended(&Codeword::new(d.n, w)?, d))
        .collect()
}

/// All labelled trees on `[m]`, in Prüfer-word order.
pub fn enumerate_trees(m: usize, cap: u64) -> Result<Vec<Tree>> {
    if m <= 1 {
        return Ok(vec![Tree::new(1, [])?]);
    }
    check_cap(&num_traits::Pow::pow(BigUint::from(m), (m - 2) as u32), cap)?;
    all_words(m, m - 2)
        .map(|w| prufer_decode(&Codeword::new(m, w)?))
        .collect()
}

/// Ready-made block-stable classes for small enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockClass {
    /// Every block is an edge or an isolated vertex: the forests.
    Forests,
    /// Every block is a triangle or an isolated vertex.
    Triangles,
}

impl BlockClass {
    pub fn admits(self, block: &LabeledGraph) -> bool {
        matches!(
            (self, block.n(), block.edge_count()),
            (_, 1, 0) | (BlockClass::Forests, 2, 1) | (BlockClass::Triangles, 3, 3)
        )
    }
}

/// All graphs on `[n]` (by edge-subset enumeration) whose every block,
/// relabelled onto `1..=|B|`, satisfies `admits`.
pub fn enumerate_class_small(
    n: usize,
    limits: &OracleLimits,
    admits: impl Fn(&LabeledGraph) -> bool,
) -> Result<Vec<LabeledGraph>> {
    if n == 0 || n > limits.max_class_n {
        return Err(Error::OutOfRange(format!(
            "class enumeration supports 1 <= n <= {}, got {n}",
            limits.max_class_n
        )));
    }
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = LabeledGraph::from_sorted(n, edges);
        if decompose_blocks(&g).blocks().iter().all(|b| admits(&b.to_graph())) {
            out.push(g);
        }
    }
    out.sort();
    Ok(out)
}

/// All graphs on `[n]` by edge-subset enumeration.
pub fn enumerate_all_graphs(n: usize, limits: &OracleLimits) -> Result<Vec<LabeledGraph>> {
    enumerate_class_small(n, limits, |_| true)
}

/// Canonical code of a small graph: the lexicographically smallest
/// upper-triangle adjacency bit string over all vertex orders.
pub fn canonical_form(g: &LabeledGraph, max_size: usize) -> Result<(usize, u64)> {
    let n = g.n();
    if n > max_size || n > 11 {
        return Err(Error::OutOfRange(format!(
            "canonical labelling limited to {} vertices, got {n}",
            max_size.min(11)
        )));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut code = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                code <<= 1;
                if g.has_edge(perm[i] + 1, perm[j] + 1) {
                    code |= 1;
                }
            }
        }
        best = best.min(code);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok((n, best))
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// A component's vertex set and the sorted multiset of its block types.
type ComponentKey = (Vec<usize>, Vec<(usize, u64)>);

/// One key per component.
fn equivalence_key(g: &LabeledGraph, max_block: usize) -> Result<Vec<ComponentKey>> {
    let dec = decompose_blocks(g);
    let mut keys = Vec::new();
    for part in g.components().into_parts() {
        let mut types = Vec::new();
        for block in dec.blocks() {
            if part.binary_search(&block.vertices[0]).is_ok() {
                types.push(canonical_form(&block.to_graph(), max_block)?);
            }
        }
        types.sort_unstable();
        keys.push((part, types));
    }
    keys.sort();
    Ok(keys)
}

/// Per component, the sorted block types; vertex sets are forgotten.
fn block_type_key(g: &LabeledGraph, max_block: usize) -> Result<Vec<Vec<(usize, u64)>>> {
    let mut key: Vec<_> = equivalence_key(g, max_block)?.into_iter().map(|(_, t)| t).collect();
    key.sort();
    Ok(key)
}

/// `g ~ h`: the components can be matched so that matched components share
/// a vertex set and the same multiset of block isomorphism types.
pub fn graphs_equivalent(g: &LabeledGraph, h: &LabeledGraph, limits: &OracleLimits) -> Result<bool> {
    if g.n() != h.n() {
        return Ok(false);
    }
    Ok(equivalence_key(g, limits.max_block_size)? == equivalence_key(h, limits.max_block_size)?)
}

/// Exact probabilities for i.i.d. draws `X_1..X_j` from `p` on `[n]`:
/// `(P(X_1 not repeated), P(all distinct))`, both by direct enumeration.
pub fn distinct_prob_exact(p: &[BigRational], j: usize) -> Result<(BigRational, BigRational)> {
    let n = p.len();
    if j < 2 || j > n {
        return Err(Error::OutOfRange(format!("need 2 <= j <= n, got j = {j}, n = {n}")));
    }
    if p.iter().any(|x| x < &BigRational::zero()) || !p.iter().sum::<BigRational>().is_one() {
        return Err(Error::InvalidDistribution("probabilities must be non-negative and sum to 1".into()));
    }
    let not_repeated = p
        .iter()
        .map(|pi| pi * num_traits::Pow::pow(BigRational::one() - pi, (j - 1) as u32))
        .sum();

    // sum over injective j-tuples of the product of probabilities
    fn walk(p: &[BigRational], left: usize, used: &mut Vec<bool>, acc: BigRational, total: &mut BigRational) {
        if left == 0 {
            *total += acc;
            return;
        }
        for i in 0..p.len() {
            if !used[i] && !p[i].is_zero() {
                used[i] = true;
                walk(p, left - 1, used, &acc * &p[i], total);
                used[i] = false;
            }
        }
    }
    let mut all_distinct = BigRational::zero();
    walk(p, j, &mut vec![false; n], BigRational::one(), &mut all_distinct);
    Ok((not_repeated, all_distinct))
}

/// The two upper bounds `((1 - 1/n)^(j-1), (n)_j / n^j)`.
pub fn distinct_prob_bounds(n: usize, j: usize) -> (BigRational, BigRational) {
    let a = num_traits::Pow::pow(ratio(n as i64 - 1, n as i64), (j - 1) as u32);
    let b = from_biguint(
        &falling_factorial(n as u64, j as u64),
        &num_traits::Pow::pow(BigUint::from(n), j as u32),
    );
    (a, b)
}

/// Exact pairwise distance laws of the weighted random tree `T(X)`.
///
/// Every codeword `x` in `[m]^(m-2)` has probability `prod w_{x_s} / W^(m-2)`,
/// so all probabilities share the denominator `W^(m-2)` and the numerators
/// are accumulated as integers.
#[derive(Clone, Debug)]
pub struct DistanceLaw {
    m: usize,
    denominator: u128,
    // tail[(i, j)][d] = numerator of P(dist(i, j) >= d), i < j
    tails: HashMap<(usize, usize), Vec<u128>>,
}

impl DistanceLaw {
    pub fn new(model: &WeightModel, limits: &OracleLimits) -> Result<Self> {
        let m = model.m();
        if m < 2 || m > limits.max_tree_nodes {
            return Err(Error::OutOfRange(format!(
                "exact tree laws need 2 <= m <= {}, got {m}",
                limits.max_tree_nodes
            )));
        }
        let weights = model
            .integer_weights()
            .ok_or_else(|| Error::InvalidDistribution("exact laws need integer weights".into()))?;
        let total: u128 = weights.iter().map(|&w| w as u128).sum();
        let denominator = total
            .checked_pow((m - 2) as u32)
            .ok_or_else(|| Error::OutOfRange("weights too large for exact accumulation".into()))?;

        let mut exact: HashMap<(usize, usize), Vec<u128>> = HashMap::new();
        for i in 1..=m {
            for j in i + 1..=m {
                exact.insert((i, j), vec![0; m]);
            }
        }
        for word in all_words(m, m - 2) {
            let numer: u128 = word.iter().map(|&s| weights[s - 1] as u128).product();
            let tree = prufer_decode(&Codeword::new(m, word)?)?;
            for i in 1..=m {
                let dist = tree.distances_from(i);
                for (j, &d) in dist.iter().enumerate().skip(i + 1) {
                    exact.get_mut(&(i, j)).unwrap()[d] += numer;
                }
            }
        }
        Ok(Self::from_masses(m, denominator, exact))
    }

    // converts exact-distance masses into tails P(dist >= d)
    fn from_masses(m: usize, denominator: u128, exact: HashMap<(usize, usize), Vec<u128>>) -> Self {
        let tails = exact
            .into_iter()
            .map(|(pair, masses)| {
                let mut tail = vec![0u128; m + 1];
                for d in (0..m).rev() {
                    tail[d] = tail[d + 1] + masses[d];
                }
                (pair, tail)
            })
            .collect();
        Self { m, denominator, tails }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Exact `P(dist(i, j; T(X)) >= d)`.
    pub fn tail(&self, i: usize, j: usize, d: usize) -> BigRational {
        let key = (i.min(j), i.max(j));
        let numer = self.tails[&key].get(d).copied().unwrap_or(0);
        BigRational::new(BigInt::from(numer), BigInt::from(self.denominator))
    }

    /// Expected number of pairs at distance at least `t + 1`.
    pub fn expected_long_paths(&self, t: usize) -> BigRational {
        self.tails
            .keys()
            .map(|&(i, j)| self.tail(i, j, t + 1))
            .sum()
    }
}

/// Tree distances on `[m]` grouped by the letter counts of the Prüfer word.
///
/// A word's probability depends only on how often each letter occurs, so one
/// enumeration serves every integer weight model on `[m]`.
#[derive(Clone, Debug)]
pub struct DistanceProfile {
    m: usize,
    // (letter counts, number of words with dist(pair) = d at [pair * m + d])
    groups: Vec<(Vec<u32>, Vec<u64>)>,
}

impl DistanceProfile {
    pub fn new(m: usize, limits: &OracleLimits) -> Result<Self> {
        if m < 2 || m > limits.max_tree_nodes {
            return Err(Error::OutOfRange(format!(
                "exact tree laws need 2 <= m <= {}, got {m}",
                limits.max_tree_nodes
            )));
        }
        let pairs = m * (m - 1) / 2;
        let mut groups: HashMap<Vec<u32>, Vec<u64>> = HashMap::new();
        for word in all_words(m, m - 2) {
            let mut counts = vec![0u32; m];
            for &s in &word {
                counts[s - 1] += 1;
            }
            let tree = prufer_decode(&Codeword::new(m, word)?)?;
            let slot = groups.entry(counts).or_insert_with(|| vec![0; pairs * m]);
            let mut pair = 0;
            for i in 1..=m {
                let dist = tree.distances_from(i);
                for &d in &dist[i + 1..=m] {
                    slot[pair * m + d] += 1;
                    pair += 1;
                }
            }
        }
        let mut groups: Vec<_> = groups.into_iter().collect();
        groups.sort();
        Ok(Self { m, groups })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The exact law under integer weights; agrees with [`DistanceLaw::new`].
    pub fn law(&self, model: &WeightModel) -> Result<DistanceLaw> {
        let m = self.m;
        if model.m() != m {
            return Err(Error::OutOfRange(format!("profile is for m = {m}, model has m = {}", model.m())));
        }
        let weights = model
            .integer_weights()
            .ok_or_else(|| Error::InvalidDistribution("exact laws need integer weights".into()))?;
        let total: u128 = weights.iter().map(|&w| w as u128).sum();
        let denominator = total
            .checked_pow((m - 2) as u32)
            .ok_or_else(|| Error::OutOfRange("weights too large for exact accumulation".into()))?;
        let pairs = m * (m - 1) / 2;
        let mut flat = vec![0u128; pairs * m];
        for (counts, slot) in &self.groups {
            let numer: u128 = counts
                .iter()
                .zip(weights)
                .map(|(&c, &w)| (w as u128).pow(c))
                .product();
            if numer == 0 {
                continue;
            }
            for (acc, &c) in flat.iter_mut().zip(slot) {
                *acc += numer * c as u128;
            }
        }
        let mut exact = HashMap::new();
        let mut pair = 0;
        for i in 1..=m {
            for j in i + 1..=m {
                exact.insert((i, j), flat[pair * m..(pair + 1) * m].to_vec());
                pair += 1;
            }
        }
        Ok(DistanceLaw::from_masses(m, denominator, exact))
    }
}

/// Exact `P(dist(m-1, m; T(X)) >= t + 1)`.
pub fn distance_tail_exact(model: &WeightModel, t: usize, limits: &OracleLimits) -> Result<BigRational> {
    let law = DistanceLaw::new(model, limits)?;
    Ok(law.tail(law.m - 1, law.m, t + 1))
}

/// `C(t, 2) / m`, the exponent of the distance-tail bound.
pub fn distance_bound_exponent(t: usize, m: usize) -> BigRational {
    ratio((t * t.saturating_sub(1) / 2) as i64, m as i64)
}

/// Counts of labelled trees on `[n]` with maximum degree at least `s`,
/// indexed by `s = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeMaxDegreeTail {
    n: usize,
    total: BigUint,
    at_least: Vec<BigUint>,
}

impl TreeMaxDegreeTail {
    pub fn new(n: usize, cap: u64) -> Result<Self> {
        let trees = enumerate_trees(n, cap)?;
        let mut at_least = vec![BigUint::zero(); n + 2];
        for t in &trees {
            for slot in at_least.iter_mut().take(t.max_degree() + 1) {
                *slot += 1u32;
            }
        }
        Ok(Self {
            n,
            total: BigUint::from(trees.len()),
            at_least,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn probability(&self, s: usize) -> BigRational {
        let count = self.at_least.get(s).cloned().unwrap_or_default();
        from_biguint(&count, &self.total)
    }
}

/// Outcome of comparing `P(max block-degree >= s)` over a neighbourhood with
/// `P(max degree of a uniform tree >= s)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DominanceCheck {
    pub pass: bool,
    pub first_violation: Option<usize>,
    /// `P(max block-degree of R >= s)` for `s = 0..=n`.
    pub graph_tail: Vec<BigRational>,
    /// `P(max degree of T_n >= s)` for `s = 0..=n`.
    pub tree_tail: Vec<BigRational>,
}

pub fn check_marginal_dominance(d: &ExplosionNeighborhood, cap: u64) -> Result<DominanceCheck> {
    let trees = TreeMaxDegreeTail::new(d.n, cap)?;
    check_marginal_dominance_against(d, &trees, cap)
}

/// As [`check_marginal_dominance`] with a precomputed tree side.
pub fn check_marginal_dominance_against(
    d: &ExplosionNeighborhood,
    trees: &TreeMaxDegreeTail,
    cap: u64,
) -> Result<DominanceCheck> {
    if trees.n != d.n {
        return Err(Error::OutOfRange("tree tail computed for a different n".into()));
    }
    let graphs = enumerate_neighborhood(d, cap)?;
    let mut at_least = vec![0u64; d.n + 2];
    for g in &graphs {
        let max = decompose_blocks(g).max_block_degree();
        for slot in at_least.iter_mut().take(max + 1) {
            *slot += 1;
        }
    }
    let total = graphs.len() as i64;
    let graph_tail: Vec<BigRational> = (0..=d.n).map(|s| ratio(at_least[s] as i64, total)).collect();
    let tree_tail: Vec<BigRational> = (0..=d.n).map(|s| trees.probability(s)).collect();
    let first_violation = (0..=d.n).find(|&s| graph_tail[s] > tree_tail[s]);
    Ok(DominanceCheck {
        pass: first_violation.is_none(),
        first_violation,
        graph_tail,
        tree_tail,
    })
}

/// Exhaustive verification of the codeword bijection for one neighbourhood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionCheck {
    pub words: usize,
    pub distinct_graphs: usize,
    pub round_trip: bool,
    pub same_descriptor: bool,
    pub degree_law: bool,
    pub skeleton_counts: bool,
}

impl BijectionCheck {
    pub fn pass(&self) -> bool {
        self.words == self.distinct_graphs
            && self.round_trip
            && self.same_descriptor
            && self.degree_law
            && self.skeleton_counts
    }
}

/// Decodes every word, then checks injectivity, `encode(decode(x)) = x`,
/// membership (same descriptor), `d(v) = 1 + a(v, x)`, and that the number
/// of graphs per skeleton tree matches [`count_with_tree`].
pub fn verify_neighborhood_bijection(d: &ExplosionNeighborhood, cap: u64) -> Result<BijectionCheck> {
    check_cap(&neighborhood_size(d), cap)?;
    if d.k < 2 {
        return Err(Error::OutOfRange("bijection needs k >= 2".into()));
    }
    let mut seen = std::collections::HashSet::new();
    let mut per_tree: HashMap<Tree, u64> = HashMap::new();
    let (mut words, mut round_trip, mut same_descriptor, mut degree_law) = (0, true, true, true);
    for w in all_words(d.n, d.k - 1) {
        words += 1;
        let x = Codeword::new(d.n, w)?;
        let g = decode_extended(&x, d)?;
        let exploded = crate::explosion::explode(&g)?;
        same_descriptor &= &exploded.descriptor() == d;
        round_trip &= crate::codec::encode_extended(&g, d).ok().as_ref() == Some(&x);
        let counts = x.appearance_counts();
        degree_law &= decompose_blocks(&g)
            .block_degrees()
            .iter()
            .enumerate()
            .all(|(i, &deg)| deg == counts[i + 1] + 1);
        *per_tree.entry(crate::explosion::skeleton_tree(&exploded)).or_default() += 1;
        seen.insert(g);
    }
    // every tree on [k+1] must appear with exactly the predicted multiplicity
    let mut skeleton_counts = true;
    let mut predicted_total = BigUint::zero();
    for t in enumerate_trees(d.k + 1, cap)? {
        let predicted = count_with_tree(d, &t)?;
        let observed = BigUint::from(per_tree.get(&t).copied().unwrap_or(0));
        skeleton_counts &= predicted == observed;
        predicted_total += predicted;
    }
    skeleton_counts &= predicted_total == neighborhood_size(d);
    Ok(BijectionCheck {
        words,
        distinct_graphs: seen.len(),
        round_trip,
        same_descriptor,
        degree_law,
        skeleton_counts,
    })
}

/// The increasing set of degree vectors on six coordinates that split into
/// two triples each summing to at least 4.
pub fn in_split_set(x: &[usize]) -> bool {
    assert_eq!(x.len(), 6);
    let total: usize = x.iter().sum();
    (0..6).any(|a| {
        (a + 1..6).any(|b| {
            (b + 1..6).any(|c| {
                let s = x[a] + x[b] + x[c];
                s >= 4 && total - s >= 4
            })
        })
    })
}

/// Exact outcome of the two-components non-dominance example on `[6]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitCounterexample {
    /// `|[G]|` for `G = {1-2-3, 4-5-6}`: the components keep their vertex sets.
    pub class_size: usize,
    pub graph_probability: BigRational,
    /// Forests on `[6]` made of two 2-edge paths on any bipartition into
    /// 3-sets: the union of `[G']` over all relabellings `G'` of `G`.
    pub orbit_size: usize,
    pub orbit_probability: BigRational,
    pub tree_count: usize,
    pub tree_probability: BigRational,
    pub star_in_set: bool,
}

fn split_fraction(graphs: &[LabeledGraph]) -> BigRational {
    let hits = graphs
        .iter()
        .filter(|g| in_split_set(&decompose_blocks(g).block_degrees()))
        .count();
    ratio(hits as i64, graphs.len().max(1) as i64)
}

pub fn counterexample_two_paths(limits: &OracleLimits) -> Result<SplitCounterexample> {
    let base = LabeledGraph::new(6, [(1, 2), (2, 3), (4, 5), (5, 6)])?;
    let base_types = block_type_key(&base, limits.max_block_size)?;
    let forests = enumerate_class_small(6, limits, |b| BlockClass::Forests.admits(b))?;
    let (mut class, mut orbit) = (Vec::new(), Vec::new());
    for g in forests {
        if graphs_equivalent(&g, &base, limits)? {
            class.push(g.clone());
        }
        if block_type_key(&g, limits.max_block_size)? == base_types {
            orbit.push(g);
        }
    }
    let trees = enumerate_trees(6, limits.enumeration_cap)?;
    let tree_in_set = trees.iter().filter(|t| in_split_set(&t.degrees())).count();
    let star = Tree::new(6, (2..=6).map(|v| (1, v)))?;
    Ok(SplitCounterexample {
        class_size: class.len(),
        graph_probability: split_fraction(&class),
        orbit_size: orbit.len(),
        orbit_probability: split_fraction(&orbit),
        tree_count: trees.len(),
        tree_probability: ratio(tree_in_set as i64, trees.len() as i64),
        star_in_set: in_split_set(&star.degrees()),
    })
}

/// One line of oracle output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleReport {
    pub check: String,
    pub parameters: String,
    pub exact_value: String,
    pub decimal: f64,
    pub bound: String,
    pub pass: bool,
}

impl OracleReport {
    pub fn new(check: &str, parameters: String, value: &BigRational, bound: String, pass: bool) -> Self {
        Self {
            check: check.into(),
            parameters,
            exact_value: render(value),
            decimal: to_f64(value),
            bound,
            pass,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report is always serialisable")
    }
}

/// Compositions of `total` into `parts` positive integers.
pub fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    fn rec(left: u64, parts: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 1 {
            if left >= 1 {
                prefix.push(left);
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        for first in 1..left {
            if left - first < (parts - 1) as u64 {
                break;
            }
            prefix.push(first);
            rec(left - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        rec(total, parts, &mut Vec::new(), &mut out);
    }
    out
}
