//! Braid clusters, contracted decompositions and the contraction operators.

mod cluster;
mod decomposition;
mod pi;

pub use cluster::{
    cluster_graph, is_braid_cluster, is_normalized, normalize_cluster, BraidCluster, ClusterGraph, ClusterShape,
};
pub use decomposition::{
    contracted_decomposition, find_contracted_decomposition, find_contracted_expression, ContractedDecomposition,
};
pub use pi::{pi, pi_first, pi_full};
