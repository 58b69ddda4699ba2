//! The exact verification suite: exhaustive checks of the codeword
//! bijection and per-skeleton counts, the reduction to ordinary Prüfer
//! coding, block-degree dominance, the distinct-draw and tree-distance
//! bounds, and the two-paths non-dominance example.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::codec::{decode_extended, encode_extended, neighborhood_size};
use crate::error::Result;
use crate::exact::{exp_neg_enclosure, le_scaled_exp_neg, ratio, render};
use crate::explosion::{descriptor_of, ExplosionNeighborhood};
use crate::graph::{parse_graph, LabeledGraph};
use crate::oracle::{
    all_words, check_marginal_dominance_against, compositions, counterexample_two_paths,
    distance_bound_exponent, distinct_prob_bounds, distinct_prob_exact, enumerate_all_graphs,
    enumerate_neighborhood, enumerate_trees, verify_neighborhood_bijection, DistanceProfile,
    OracleLimits, OracleReport, TreeMaxDegreeTail,
};
use crate::prufer::{prufer_decode, Codeword, WeightModel};

/// The five-vertex running example: a triangle on `{2, 3, 4}` with pendant
/// edges `1-2` and `2-5`.
pub fn figure_graph() -> LabeledGraph {
    parse_graph("5 5\n1 2\n2 3\n3 4\n4 2\n2 5\n").expect("fixed graph")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest `n` for the sweeps over graphs on `[n]`.
    pub max_n: usize,
    /// Largest tree size for the weighted distance sweep.
    pub max_m: usize,
    /// Largest total weight in the weighted distance sweep.
    pub max_weight_sum: u64,
    /// Random distributions per `(n, j)` on top of the uniform one.
    pub random_distributions: usize,
    pub seed: u64,
    pub limits: OracleLimits,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            max_n: 6,
            max_m: 7,
            max_weight_sum: 12,
            random_distributions: 100,
            seed: 20_240_601,
            limits: OracleLimits::default(),
        }
    }
}

fn count(x: usize) -> BigRational {
    ratio(x as i64, 1)
}

pub fn check_figure_bijection(limits: &OracleLimits) -> Result<OracleReport> {
    let d = descriptor_of(&figure_graph())?;
    let check = verify_neighborhood_bijection(&d, limits.enumeration_cap)?;
    Ok(OracleReport::new(
        "bijection_figure",
        "n=5, k=3".into(),
        &count(check.distinct_graphs),
        format!("{} words", check.words),
        check.pass() && check.words == 25,
    ))
}

/// Connected graphs on `[n]` with at least two blocks, and their distinct
/// descriptors.
pub fn connected_neighborhoods(
    n: usize,
    limits: &OracleLimits,
) -> Result<(Vec<LabeledGraph>, Vec<ExplosionNeighborhood>)> {
    let mut graphs = Vec::new();
    let mut seen = HashSet::new();
    let mut descriptors = Vec::new();
    for g in enumerate_all_graphs(n, limits)? {
        if !g.is_connected() {
            continue;
        }
        let d = descriptor_of(&g)?;
        if d.k < 2 {
            continue;
        }
        if seen.insert(d.clone()) {
            descriptors.push(d);
        }
        graphs.push(g);
    }
    Ok((graphs, descriptors))
}

/// Bijection and per-skeleton counts for every neighbourhood of a connected
/// graph on `[n]`, every such graph recovered from its own codeword, and the
/// neighbourhoods partitioning the graphs (sizes sum to the graph count).
pub fn check_connected_bijections(n: usize, limits: &OracleLimits) -> Result<OracleReport> {
    let (graphs, descriptors) = connected_neighborhoods(n, limits)?;
    let per_descriptor: Vec<bool> = descriptors
        .par_iter()
        .map(|d| verify_neighborhood_bijection(d, limits.enumeration_cap).map(|c| c.pass()))
        .collect::<Result<_>>()?;
    let failures = per_descriptor.iter().filter(|&&ok| !ok).count();
    let self_coded = graphs
        .par_iter()
        .filter(|g| {
            let d = descriptor_of(g).expect("connected");
            encode_extended(g, &d)
                .and_then(|x| decode_extended(&x, &d))
                .is_ok_and(|h| &h == *g)
        })
        .count();
    let covered: BigUint = descriptors.iter().map(neighborhood_size).sum();
    let pass = failures == 0 && self_coded == graphs.len() && covered == BigUint::from(graphs.len());
    Ok(OracleReport::new(
        "bijection_all_connected",
        format!("n={n}, neighbourhoods={}", descriptors.len()),
        &count(graphs.len()),
        format!("sum of n^(k-1) = {covered}; failing neighbourhoods = {failures}"),
        pass,
    ))
}

/// For the path on `[n]`: extended decoding equals ordinary Prüfer decoding
/// word by word, and the neighbourhood is the set of all trees on `[n]`.
pub fn check_prufer_reduction(n: usize, limits: &OracleLimits) -> Result<OracleReport> {
    let path = LabeledGraph::path(n)?;
    let d = descriptor_of(&path)?;
    let mut agree = true;
    let mut graphs = HashSet::new();
    if d.k < 2 {
        graphs.extend(enumerate_neighborhood(&d, limits.enumeration_cap)?);
    } else {
        for w in all_words(n, n - 2) {
            let x = Codeword::new(n, w)?;
            let g = decode_extended(&x, &d)?;
            agree &= g == prufer_decode(&x)?.to_graph();
            graphs.insert(g);
        }
    }
    let trees: HashSet<LabeledGraph> = enumerate_trees(n, limits.enumeration_cap)?
        .iter()
        .map(|t| t.to_graph())
        .collect();
    let cayley = n.pow(n.saturating_sub(2) as u32);
    Ok(OracleReport::new(
        "prufer_reduction",
        format!("n={n}"),
        &count(graphs.len()),
        format!("{cayley} labelled trees"),
        agree && graphs == trees && trees.len() == cayley,
    ))
}

/// `P(max block-degree >= s) <= P(max degree of T_n >= s)` for every `s`
/// and every neighbourhood of a connected graph on `[n]` with `k >= 2`.
pub fn check_connected_dominance(n: usize, limits: &OracleLimits) -> Result<OracleReport> {
    let (_, descriptors) = connected_neighborhoods(n, limits)?;
    let trees = TreeMaxDegreeTail::new(n, limits.enumeration_cap)?;
    let violations = descriptors
        .par_iter()
        .map(|d| check_marginal_dominance_against(d, &trees, limits.enumeration_cap).map(|c| !c.pass))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .filter(|&v| v)
        .count();
    Ok(OracleReport::new(
        "dominance_all_connected",
        format!("n={n}, neighbourhoods={}", descriptors.len()),
        &count(violations),
        "0 violations".into(),
        violations == 0,
    ))
}

fn random_distribution(n: usize, rng: &mut ChaCha8Rng) -> Vec<BigRational> {
    loop {
        let w: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=20)).collect();
        let total: i64 = w.iter().sum();
        if total > 0 {
            return w.iter().map(|&x| ratio(x, total)).collect();
        }
    }
}

/// Both distinct-draw bounds for the uniform distribution (where they are
/// equalities) and `samples` random rational distributions on `[n]`.
pub fn check_distinct_probabilities(n: usize, j: usize, samples: usize, seed: u64) -> Result<OracleReport> {
    let (not_repeated_bound, distinct_bound) = distinct_prob_bounds(n, j);
    let uniform = vec![ratio(1, n as i64); n];
    let (a, b) = distinct_prob_exact(&uniform, j)?;
    let mut pass = a == not_repeated_bound && b == distinct_bound;
    let mut worst = BigRational::zero();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32 | j as u64));
    for _ in 0..samples {
        let p = random_distribution(n, &mut rng);
        let (a, b) = distinct_prob_exact(&p, j)?;
        pass &= a <= not_repeated_bound && b <= distinct_bound;
        let r = a / &not_repeated_bound;
        if r > worst {
            worst = r;
        }
    }
    Ok(OracleReport::new(
        "distinct_draws",
        format!("n={n}, j={j}, distributions={}", samples + 1),
        &distinct_bound,
        format!(
            "(1-1/n)^(j-1) = {}; uniform attains (n)_j/n^j; largest random not-repeated/bound {}",
            render(&not_repeated_bound),
            render(&worst)
        ),
        pass,
    ))
}

/// Rigorous `value <= scale * exp(-x)` with a cached enclosure.
struct ExpBound {
    x: BigRational,
    lo: BigRational,
    hi: BigRational,
}

impl ExpBound {
    fn new(x: BigRational) -> Self {
        let (lo, hi) = exp_neg_enclosure(&x, 48);
        Self { x, lo, hi }
    }

    fn admits(&self, value: &BigRational, scale: &BigRational) -> bool {
        if value <= &(scale * &self.lo) {
            true
        } else if value > &(scale * &self.hi) {
            false
        } else {
            le_scaled_exp_neg(value, scale, &self.x)
        }
    }
}

/// For every integer weight model on `[m]` with positive weights summing to
/// at most `max_sum`, and every `t`:
/// `P(dist(m-1, m) >= t + 1) <= exp(-C(t,2)/m)` and the expected number of
/// pairs at distance `>= t + 1` is at most `C(m,2) exp(-C(t,2)/m)`.
pub fn check_distance_tails(m: usize, max_sum: u64, limits: &OracleLimits) -> Result<OracleReport> {
    let profile = DistanceProfile::new(m, limits)?;
    let models: Vec<Vec<u64>> = (m as u64..=max_sum)
        .flat_map(|total| compositions(total, m))
        .collect();
    let bounds: Vec<ExpBound> = (0..=m).map(|t| ExpBound::new(distance_bound_exponent(t, m))).collect();
    let pairs = ratio((m * (m - 1) / 2) as i64, 1);
    let one = BigRational::one();
    let violations: usize = models
        .par_iter()
        .map(|w| -> Result<usize> {
            let law = profile.law(&WeightModel::integer(w.clone())?)?;
            Ok((0..=m)
                .filter(|&t| {
                    !bounds[t].admits(&law.tail(m - 1, m, t + 1), &one)
                        || !bounds[t].admits(&law.expected_long_paths(t), &pairs)
                })
                .count())
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .sum();
    Ok(OracleReport::new(
        "tree_distance_tails",
        format!("m={m}, weight sum<={max_sum}, models={}, t=0..={m}", models.len()),
        &count(violations),
        "0 violations".into(),
        violations == 0,
    ))
}

/// Two disjoint 2-edge paths on `[6]`: every graph of the class (9 graphs),
/// and of its union over the 10 vertex bipartitions (90 graphs), has its
/// block-degree sequence in the split set, while uniform trees miss it.
pub fn check_counterexample(limits: &OracleLimits) -> Result<OracleReport> {
    let c = counterexample_two_paths(limits)?;
    let pass = c.class_size == 9
        && c.orbit_size == 90
        && c.graph_probability.is_one()
        && c.orbit_probability.is_one()
        && c.tree_probability < BigRational::one()
        && !c.star_in_set
        && c.tree_count == 1296;
    Ok(OracleReport::new(
        "two_paths_counterexample",
        format!(
            "class size={}, all bipartitions={}, trees={}",
            c.class_size, c.orbit_size, c.tree_count
        ),
        &c.graph_probability,
        format!("tree-side probability {}", render(&c.tree_probability)),
        pass,
    ))
}

/// Runs every check. Sweeps over `[n]` start at the smallest size with two
/// blocks.
pub fn run_suite(opts: &VerifyOptions) -> Result<Vec<OracleReport>> {
    let limits = &opts.limits;
    let mut out = vec![check_figure_bijection(limits)?];
    for n in 3..=opts.max_n {
        out.push(check_connected_bijections(n, limits)?);
    }
    for n in 2..=opts.max_n {
        out.push(check_prufer_reduction(n, limits)?);
    }
    for n in 3..=opts.max_n {
        out.push(check_connected_dominance(n, limits)?);
    }
    for n in 2..=opts.max_n {
        for j in 2..=n {
            out.push(check_distinct_probabilities(n, j, opts.random_distributions, opts.seed)?);
        }
    }
    for m in 2..=opts.max_m {
        out.push(check_distance_tails(m, opts.max_weight_sum, limits)?);
    }
    out.push(check_counterexample(limits)?);
    Ok(out)
}

/// `P(Bin(k-1, 1/n) >= s)` exactly.
pub fn binomial_tail_exact(trials: usize, n: usize, s: usize) -> BigRational {
    let p = ratio(1, n as i64);
    let q = BigRational::one() - &p;
    let mut total = BigRational::zero();
    for i in s..=trials {
        let choose = (0..i).fold(BigUint::one(), |acc, r| acc * (trials - r) / (r + 1));
        total += crate::exact::from_biguint(&choose, &BigUint::one())
            * Pow::pow(&p, i as u32)
            * Pow::pow(&q, (trials - i) as u32);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_checks() {
        let limits = OracleLimits::default();
        assert!(check_figure_bijection(&limits).unwrap().pass);
        assert!(check_counterexample(&limits).unwrap().pass);
    }

    #[test]
    fn small_sweeps() {
        let limits = OracleLimits::default();
        for n in 3..=4 {
            assert!(check_connected_bijections(n, &limits).unwrap().pass);
            assert!(check_connected_dominance(n, &limits).unwrap().pass);
            assert!(check_prufer_reduction(n, &limits).unwrap().pass);
        }
        // triangle-free connected graphs on [3] with two blocks: the 3 paths
        let (graphs, descriptors) = connected_neighborhoods(3, &limits).unwrap();
        assert_eq!(graphs.len(), 3);
        assert_eq!(descriptors.len(), 1);
    }

    #[test]
    fn distinct_and_distance() {
        assert!(check_distinct_probabilities(4, 3, 20, 1).unwrap().pass);
        assert!(check_distance_tails(4, 8, &OracleLimits::default()).unwrap().pass);
    }

    #[test]
    fn exact_binomial() {
        assert_eq!(binomial_tail_exact(2, 5, 1), ratio(9, 25));
        assert_eq!(binomial_tail_exact(2, 5, 0), ratio(1, 1));
        assert_eq!(binomial_tail_exact(2, 5, 3), ratio(0, 1));
    }
}
