//! The extended Prüfer bijection between an explosion neighbourhood and
//! `[n]^(k-1)`, per-skeleton counting, and uniform sampling.
//!
//! A codeword records, for each smallest-leaf removal from the skeleton tree,
//! the actual vertex that the removed part's ghost attaches to. Mapping the
//! word through `f` gives the ordinary Prüfer word of the skeleton.

use num_bigint::BigUint;
use num_traits::{One, Pow};
use rand::Rng;

use crate::error::{Error, Result};
use crate::explosion::{
    contract, explode, explode_components, skeleton_tree, ExplodedGraph, ExplosionNeighborhood,
};
use crate::graph::LabeledGraph;
use crate::prufer::{prufer_decode_steps, prufer_encode_with_order, Codeword, Tree};

fn require_k_at_least_two(d: &ExplosionNeighborhood) -> Result<()> {
    if d.k < 2 {
        return Err(Error::InvalidCodeword(format!(
            "codewords need at least two blocks, descriptor has k = {}",
            d.k
        )));
    }
    Ok(())
}

/// The codeword `x_h` of a graph `h` in the neighbourhood described by `d`.
pub fn encode_extended(h: &LabeledGraph, d: &ExplosionNeighborhood) -> Result<Codeword> {
    require_k_at_least_two(d)?;
    let x = explode(h)?;
    let own = x.descriptor();
    if &own != d {
        return Err(Error::DescriptorMismatch(describe_mismatch(&own, d)));
    }
    let enc = prufer_encode_with_order(&skeleton_tree(&x))?;
    let attach = x.attachment_vertices();
    let symbols: Vec<usize> = enc.removal_order.iter().map(|&i| attach[i - 1]).collect();
    debug_assert!(symbols
        .iter()
        .zip(enc.word.symbols())
        .all(|(&v, &t)| d.part_of(v) == t));
    Codeword::new(d.n, symbols)
}

fn describe_mismatch(own: &ExplosionNeighborhood, d: &ExplosionNeighborhood) -> String {
    if own.n != d.n {
        format!("graph has {} vertices, descriptor {}", own.n, d.n)
    } else if own.k != d.k {
        format!("graph has {} blocks, descriptor {}", own.k, d.k)
    } else if own.f != d.f {
        "parts differ".into()
    } else {
        "labelled part templates differ".into()
    }
}

/// Decodes a word into the exploded graph it describes.
pub fn decode_to_explosion(x: &Codeword, d: &ExplosionNeighborhood) -> Result<ExplodedGraph> {
    require_k_at_least_two(d)?;
    let (n, k) = (d.n, d.k);
    if x.len() != k - 1 {
        return Err(Error::InvalidCodeword(format!(
            "length {} but the neighbourhood needs {}",
            x.len(),
            k - 1
        )));
    }
    if let Some(&bad) = x.symbols().iter().find(|&&s| s == 0 || s > n) {
        return Err(Error::InvalidCodeword(format!("symbol {bad} outside [1, {n}]")));
    }
    let skeleton_word = Codeword::new(k + 1, x.symbols().iter().map(|&v| d.part_of(v)).collect())?;
    let steps = prufer_decode_steps(&skeleton_word)?;

    let mut attach = vec![0usize; k];
    for (&(leaf, _), &vertex) in steps.steps.iter().zip(x.symbols()) {
        assert!(leaf <= k, "the root part is never removed");
        attach[leaf - 1] = vertex;
    }
    let (last, root) = steps.last_pair;
    // Q_{k+1} = {n}, so the surviving part can only attach to n.
    assert_eq!(root, k + 1, "the root part survives to the end");
    attach[last - 1] = n;
    Ok(d.assemble(&attach))
}

/// The unique graph of the neighbourhood with codeword `x`.
pub fn decode_extended(x: &Codeword, d: &ExplosionNeighborhood) -> Result<LabeledGraph> {
    contract(&decode_to_explosion(x, d)?)
}

/// Number of graphs in the neighbourhood whose skeleton tree is `t`:
/// the product of `w_j^(d_t(j) - 1)`.
pub fn count_with_tree(d: &ExplosionNeighborhood, t: &Tree) -> Result<BigUint> {
    if t.m() != d.k + 1 {
        return Err(Error::InvalidTree(format!(
            "skeleton trees live on [{}], got [{}]",
            d.k + 1,
            t.m()
        )));
    }
    Ok((1..=t.m()).fold(BigUint::one(), |acc, j| {
        acc * Pow::pow(BigUint::from(d.weights[j - 1]), (t.degree(j) - 1) as u32)
    }))
}

/// `|G_G| = n^(k-1)`.
pub fn neighborhood_size(d: &ExplosionNeighborhood) -> BigUint {
    if d.k < 2 {
        return BigUint::one();
    }
    Pow::pow(BigUint::from(d.n), (d.k - 1) as u32)
}

/// The only graph of a neighbourhood with a single block.
pub fn sole_member(d: &ExplosionNeighborhood) -> Result<LabeledGraph> {
    if d.k >= 2 {
        return Err(Error::OutOfRange(format!("neighbourhood with k = {} has many members", d.k)));
    }
    contract(&d.assemble(&vec![d.n; d.k]))
}

/// Uniform element of the neighbourhood.
pub fn sample_neighborhood_uniform<R: Rng + ?Sized>(
    d: &ExplosionNeighborhood,
    rng: &mut R,
) -> LabeledGraph {
    if d.k < 2 {
        return sole_member(d).expect("descriptor is valid");
    }
    let symbols = (0..d.k - 1).map(|_| rng.gen_range(1..=d.n)).collect();
    let word = Codeword::new(d.n, symbols).expect("symbols are in range");
    decode_extended(&word, d).expect("uniform word decodes")
}

/// Independent explosion neighbourhoods of the components of a graph, each
/// on its own relabelled vertex set. Sampling them independently and taking
/// the union gives a uniform element of their product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentNeighborhoods {
    n: usize,
    components: Vec<(Vec<usize>, ExplosionNeighborhood)>,
}

impl ComponentNeighborhoods {
    pub fn of_graph(g: &LabeledGraph) -> Self {
        let components = explode_components(g)
            .into_iter()
            .map(|c| (c.vertices, c.exploded.descriptor()))
            .collect();
        Self { n: g.n(), components }
    }

    /// A connected neighbourhood viewed as a single component.
    pub fn single(d: ExplosionNeighborhood) -> Self {
        Self {
            n: d.n,
            components: vec![((1..=d.n).collect(), d)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total number of blocks over all components.
    pub fn total_blocks(&self) -> usize {
        self.components.iter().map(|(_, d)| d.k).sum()
    }

    pub fn components(&self) -> &[(Vec<usize>, ExplosionNeighborhood)] {
        &self.components
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> LabeledGraph {
        if let [(labels, d)] = self.components.as_slice() {
            if labels.len() == self.n {
                // a single component spans [n] with identity labels
                return sample_neighborhood_uniform(d, rng);
            }
        }
        let mut edges = Vec::new();
        for (labels, d) in &self.components {
            let part = sample_neighborhood_uniform(d, rng);
            edges.extend(
                part.edges()
                    .iter()
                    .map(|&(u, v)| (labels[u - 1], labels[v - 1])),
            );
        }
        LabeledGraph::new(self.n, edges).expect("components are vertex-disjoint")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::explosion::descriptor_of;
    use crate::graph::parse_graph;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn figure_h() -> LabeledGraph {
        parse_graph("5 5\n1 2\n2 3\n3 4\n4 2\n2 5\n").unwrap()
    }

    #[test]
    fn figure_h_codeword() {
        let h = figure_h();
        let d = descriptor_of(&h).unwrap();
        let x = encode_extended(&h, &d).unwrap();
        assert_eq!(x.symbols(), &[2, 2]);
        assert_eq!(decode_extended(&x, &d).unwrap(), h);
    }

    #[test]
    fn decode_3_4() {
        let d = descriptor_of(&figure_h()).unwrap();
        let g = decode_extended(&Codeword::new(5, vec![3, 4]).unwrap(), &d).unwrap();
        let expected = LabeledGraph::new(5, [(1, 3), (2, 4), (3, 4), (3, 5), (4, 5)]).unwrap();
        assert_eq!(g, expected);
        assert_eq!(encode_extended(&g, &d).unwrap().symbols(), &[3, 4]);
    }

    #[test]
    fn two_block_path() {
        let p = LabeledGraph::path(3).unwrap();
        let d = descriptor_of(&p).unwrap();
        let x = encode_extended(&p, &d).unwrap();
        assert_eq!(x.len(), 1);
        assert_eq!(decode_extended(&x, &d).unwrap(), p);
    }

    #[test]
    fn errors() {
        let h = figure_h();
        let d = descriptor_of(&h).unwrap();
        let path = LabeledGraph::path(5).unwrap();
        assert!(matches!(encode_extended(&path, &d), Err(Error::DescriptorMismatch(_))));
        assert!(decode_extended(&Codeword::new(5, vec![2]).unwrap(), &d).is_err());
        assert!(decode_extended(&Codeword::new(9, vec![2, 9]).unwrap(), &d).is_err());

        let tri = LabeledGraph::new(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        let td = descriptor_of(&tri).unwrap();
        assert!(encode_extended(&tri, &td).is_err());
        assert!(decode_extended(&Codeword::new(3, vec![]).unwrap(), &td).is_err());
    }

    #[test]
    fn counts_per_skeleton() {
        let d = descriptor_of(&figure_h()).unwrap();
        let star2 = Tree::new(4, [(1, 2), (2, 3), (2, 4)]).unwrap();
        let star3 = Tree::new(4, [(1, 3), (2, 3), (3, 4)]).unwrap();
        assert_eq!(count_with_tree(&d, &star2).unwrap(), BigUint::from(1u32));
        assert_eq!(count_with_tree(&d, &star3).unwrap(), BigUint::from(4u32));
        assert!(count_with_tree(&d, &Tree::new(3, [(1, 2), (2, 3)]).unwrap()).is_err());
        assert_eq!(neighborhood_size(&d), BigUint::from(25u32));
    }

    #[test]
    fn k1_sampling_returns_the_graph() {
        let tri = LabeledGraph::new(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        let d = descriptor_of(&tri).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..3 {
            assert_eq!(sample_neighborhood_uniform(&d, &mut rng), tri);
        }
        let one = LabeledGraph::empty(1).unwrap();
        let d1 = descriptor_of(&one).unwrap();
        assert_eq!(sample_neighborhood_uniform(&d1, &mut rng), one);
    }

    #[test]
    fn component_products_keep_components() {
        let g = LabeledGraph::new(6, [(1, 4), (4, 6), (2, 3), (3, 5)]).unwrap();
        let prod = ComponentNeighborhoods::of_graph(&g);
        assert_eq!(prod.total_blocks(), 4);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let s = prod.sample(&mut rng);
            assert_eq!(s.components().parts(), g.components().parts());
            assert_eq!(s.edge_count(), 4);
        }
    }
}
