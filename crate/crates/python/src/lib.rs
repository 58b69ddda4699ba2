//! Python bindings: graphs, block decompositions, explosion neighbourhoods,
//! extended codewords, seeded sampling, the exact verification suite and
//! experiments.

use blockstable as bs;
use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn err(e: bs::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A simple undirected graph on the vertices `1..=n`.
#[pyclass(name = "Graph", module = "blockstable_py", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph(bs::LabeledGraph);

#[pymethods]
impl Graph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        bs::LabeledGraph::new(n, edges).map(Graph).map_err(err)
    }

    /// Parses the edge-list format (`n m` header, then `m` lines `u v`).
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        bs::parse_graph(text).map(Graph).map_err(err)
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        bs::LabeledGraph::path(n).map(Graph).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn components(&self) -> Vec<Vec<usize>> {
        self.0.components().into_parts()
    }

    /// Blocks as sorted vertex lists, in canonical order.
    fn blocks(&self) -> Vec<Vec<usize>> {
        bs::decompose_blocks(&self.0)
            .blocks()
            .iter()
            .map(|b| b.vertices.clone())
            .collect()
    }

    fn cut_vertices(&self) -> Vec<usize> {
        bs::decompose_blocks(&self.0).cut_vertices().to_vec()
    }

    /// Number of blocks containing each vertex, for vertices `1..=n`.
    fn block_degrees(&self) -> Vec<usize> {
        bs::block_degree_sequence(&self.0)
    }

    fn btf_diameter(&self) -> usize {
        bs::btf_diameter(&self.0)
    }

    fn max_blocks_on_path(&self) -> usize {
        bs::max_blocks_on_path(&self.0)
    }

    /// The decomposition as JSON.
    fn decompose_json(&self) -> String {
        bs::decompose_blocks(&self.0).to_json()
    }

    fn __str__(&self) -> String {
        self.0.to_edge_list()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={:?})", self.0.n(), self.0.edges())
    }
}

/// The explosion neighbourhood of a connected graph.
#[pyclass(name = "Neighborhood", module = "blockstable_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Neighborhood(bs::ExplosionNeighborhood);

#[pymethods]
impl Neighborhood {
    #[staticmethod]
    fn of(graph: &Graph) -> PyResult<Self> {
        bs::descriptor_of(&graph.0).map(Neighborhood).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        bs::ExplosionNeighborhood::from_json(text).map(Neighborhood).map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k
    }

    #[getter]
    fn weights(&self) -> Vec<u64> {
        self.0.weights.clone()
    }

    /// `n^(k-1)`.
    fn size(&self) -> BigUint {
        bs::neighborhood_size(&self.0)
    }

    fn encode(&self, graph: &Graph) -> PyResult<Vec<usize>> {
        bs::encode_extended(&graph.0, &self.0)
            .map(|w| w.symbols().to_vec())
            .map_err(err)
    }

    fn decode(&self, word: Vec<usize>) -> PyResult<Graph> {
        let x = bs::Codeword::new(self.0.n, word).map_err(err)?;
        bs::decode_extended(&x, &self.0).map(Graph).map_err(err)
    }

    /// Number of members whose skeleton tree has the given edges on `[k+1]`.
    fn count_with_tree(&self, tree_edges: Vec<(usize, usize)>) -> PyResult<BigUint> {
        let t = bs::Tree::new(self.0.k + 1, tree_edges).map_err(err)?;
        bs::count_with_tree(&self.0, &t).map_err(err)
    }

    /// `count` uniform members, reproducible from `seed`.
    #[pyo3(signature = (seed, count = 1))]
    fn sample(&self, seed: u64, count: usize) -> Vec<Graph> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| Graph(bs::sample_neighborhood_uniform(&self.0, &mut rng)))
            .collect()
    }
}

/// Prüfer word of a tree on `[m]`, given as a graph.
#[pyfunction]
fn prufer_encode(tree: &Graph) -> PyResult<Vec<usize>> {
    let t = bs::Tree::new(tree.0.n(), tree.0.edges().iter().copied()).map_err(err)?;
    bs::prufer_encode(&t).map(|w| w.symbols().to_vec()).map_err(err)
}

#[pyfunction]
fn prufer_decode(m: usize, word: Vec<usize>) -> PyResult<Graph> {
    let w = bs::Codeword::new(m, word).map_err(err)?;
    bs::prufer_decode(&w).map(|t| Graph(t.to_graph())).map_err(err)
}

/// Samples from the product of the neighbourhoods of the components of `graph`.
#[pyfunction]
#[pyo3(signature = (graph, seed, count = 1))]
fn sample_like(graph: &Graph, seed: u64, count: usize) -> Vec<Graph> {
    let product = bs::ComponentNeighborhoods::of_graph(&graph.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| Graph(product.sample(&mut rng))).collect()
}

/// Runs the exact verification suite; one dict per check.
#[pyfunction]
#[pyo3(signature = (max_n = 4))]
fn verify<'py>(py: Python<'py>, max_n: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let opts = bs::VerifyOptions {
        max_n,
        ..bs::VerifyOptions::default()
    };
    let reports = bs::run_suite(&opts).map_err(err)?;
    reports
        .into_iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("check", r.check)?;
            d.set_item("parameters", r.parameters)?;
            d.set_item("exact_value", r.exact_value)?;
            d.set_item("decimal", r.decimal)?;
            d.set_item("bound", r.bound)?;
            d.set_item("pass", r.pass)?;
            Ok(d)
        })
        .collect()
}

/// Runs an experiment from a JSON config; returns `(csv, metadata_json)`.
#[pyfunction]
fn run_experiment(config_json: &str) -> PyResult<(String, String)> {
    let cfg = bs::ExperimentConfig::from_json(config_json).map_err(err)?;
    let report = bs::run_experiment(&cfg).map_err(err)?;
    Ok((report.csv().map_err(err)?, report.metadata_json()))
}

#[pymodule]
fn blockstable_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<Neighborhood>()?;
    m.add_function(wrap_pyfunction!(prufer_encode, m)?)?;
    m.add_function(wrap_pyfunction!(prufer_decode, m)?)?;
    m.add_function(wrap_pyfunction!(sample_like, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(run_experiment, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_round_trip() {
        let g = Graph::parse("5 5\n1 2\n2 3\n3 4\n4 2\n2 5\n").unwrap();
        let d = Neighborhood::of(&g).unwrap();
        assert_eq!(d.size(), BigUint::from(25u32));
        assert_eq!(d.encode(&g).unwrap(), vec![2, 2]);
        assert_eq!(d.decode(vec![2, 2]).unwrap(), g);
        assert_eq!(d.sample(3, 4), d.sample(3, 4));
        let star = prufer_decode(4, vec![1, 1]).unwrap();
        assert_eq!(prufer_encode(&star).unwrap(), vec![1, 1]);
    }
}
