//! Linear-time 2-connectivity analysis for undirected simple graphs.
//!
//! The pipeline: one depth-first search classifies every edge as tree or
//! back ([`dfs`]), the back edges spawn a chain decomposition
//! ([`chains`]), and the chains answer everything else. Edges outside
//! every chain are the bridges, a repeated cycle among the chains
//! betrays a cut vertex ([`connectivity`]), and grouping chains yields
//! the blocks and the block-cut tree ([`components`]). Brute-force
//! reference implementations and graph generators live in [`oracle`] so
//! the fast path can be checked wholesale.

pub mod chains;
pub mod components;
pub mod connectivity;
pub mod dfs;
pub mod graph;
pub mod oracle;
pub mod report;

pub use chains::{decompose, Chain, ChainDecomposition, ChainKind, DecomposeError};
pub use components::{
    block_cut_tree, blocks, certify_ear_decomposition, two_edge_connected_components, BctNode,
    BlockCutTree, ComponentsError, EarCertificate, EarKind, EdgePartition, TwoEdgeComponents,
};
pub use connectivity::{
    analyze, analyze_from, check, check_from, decompose_checked, find_bridges, find_cut_vertices,
    is_two_connected_via_min_degree, ChainStats, ConnectivityError, ConnectivityReport, Verdict,
};
pub use dfs::{run_dfs, DfsResult, EdgeKind};
pub use graph::{Edge, EdgeId, Graph, GraphError, GraphFormat, VertexId};
pub use report::{build_report, Report};
