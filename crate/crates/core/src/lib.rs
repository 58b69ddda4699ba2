//! Block decompositions, explosion neighbourhoods and extended Prüfer coding
//! for random graphs from block-stable classes, together with exact
//! small-instance oracles and Monte Carlo bound checks.

pub mod blocks;
pub mod cli;
pub mod codec;
mod csr;
pub mod error;
pub mod exact;
pub mod experiments;
pub mod explosion;
pub mod graph;
pub mod oracle;
pub mod prufer;
pub mod verify;

pub use blocks::{
    block_degree_sequence, block_forest, btf_diameter, decompose_blocks, max_blocks_on_path, Block,
    BlockDecomposition, BlockForest, ForestNode,
};
pub use codec::{
    count_with_tree, decode_extended, encode_extended, neighborhood_size,
    sample_neighborhood_uniform, ComponentNeighborhoods,
};
pub use error::{Error, Result};
pub use explosion::{
    contract, descriptor_of, explode, skeleton_tree, ExplodedGraph, ExplosionNeighborhood,
    PartTemplate,
};
pub use graph::{parse_graph, LabeledGraph, VertexPartition};
pub use prufer::{
    prufer_decode, prufer_encode, sample_uniform_tree, sample_weighted_tree, tree_diameter,
    tree_distance, Codeword, Tree, WeightModel,
};
pub use experiments::{
    run_block_degree_experiment, run_experiment, run_path_length_experiment,
    run_tree_baseline_experiment, write_report, ExperimentConfig, ExperimentReport,
};
pub use oracle::{OracleLimits, OracleReport};
pub use verify::{run_suite, VerifyOptions};
