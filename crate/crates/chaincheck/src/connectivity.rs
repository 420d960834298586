//! Verdicts, bridges, and cut vertices from a chain decomposition.

use serde::Serialize;
use thiserror::Error;

use crate::chains::{decompose, ChainDecomposition, ChainKind, DecomposeError};
use crate::dfs::run_dfs;
use crate::graph::{EdgeId, Graph, VertexId};

/// How strongly connected a graph is. Ordered weakest to strongest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Verdict {
    NotConnected,
    NotTwoEdgeConnected,
    TwoEdgeConnectedOnly,
    TwoConnected,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NotConnected => "NOT CONNECTED",
            Verdict::NotTwoEdgeConnected => "NOT 2-EDGE-CONNECTED",
            Verdict::TwoEdgeConnectedOnly => "2-EDGE-CONNECTED BUT NOT 2-CONNECTED",
            Verdict::TwoConnected => "2-CONNECTED",
        }
    }

    /// Process exit code used by the command-line tool.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::TwoConnected => 0,
            Verdict::TwoEdgeConnectedOnly => 1,
            Verdict::NotTwoEdgeConnected => 2,
            Verdict::NotConnected => 3,
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConnectivityError {
    #[error("graph is not connected")]
    NotConnected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainStats {
    pub chains: usize,
    pub cycles: usize,
    pub paths: usize,
}

/// Verdict plus the structures that witness it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub verdict: Verdict,
    pub bridges: Vec<EdgeId>,
    pub cut_vertices: Vec<VertexId>,
    pub chain_stats: ChainStats,
}

/// Classifies the graph, searching from vertex 0.
pub fn check(g: &Graph) -> Verdict {
    check_from(g, 0)
}

/// Classifies the graph, searching from `root`.
///
/// The decomposition drives the verdict: an edge in no chain is a bridge,
/// and a second cycle among the chains marks a cut vertex. Graphs with
/// fewer than 3 vertices are decided directly: a single vertex or a
/// single edge is connected but not 2-edge-connected.
pub fn check_from(g: &Graph, root: VertexId) -> Verdict {
    let n = g.vertex_count();
    if n == 0 {
        return Verdict::NotConnected;
    }
    let d = run_dfs(g, root);
    if !d.is_connected() {
        return Verdict::NotConnected;
    }
    if n < 3 {
        return Verdict::NotTwoEdgeConnected;
    }
    let c = decompose(g, &d).expect("connected graph with n >= 3 decomposes");
    verdict_from_chains(g, &c)
}

fn verdict_from_chains(g: &Graph, c: &ChainDecomposition) -> Verdict {
    let covered: usize = c.chains().iter().map(|ch| ch.edge_ids.len()).sum();
    if covered < g.edge_count() {
        return Verdict::NotTwoEdgeConnected;
    }
    if c.cycle_count() > 1 {
        return Verdict::TwoEdgeConnectedOnly;
    }
    Verdict::TwoConnected
}

/// Independent 2-connectivity test: connected, minimum degree at least 2,
/// and exactly one cycle among the chains. Exercises a different decision
/// route than [`check`] for cross-validation.
pub fn is_two_connected_via_min_degree(g: &Graph, root: VertexId) -> Result<bool, ConnectivityError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(ConnectivityError::NotConnected);
    }
    let d = run_dfs(g, root);
    if !d.is_connected() {
        return Err(ConnectivityError::NotConnected);
    }
    if n < 3 {
        return Ok(false);
    }
    if g.min_degree().expect("graph is non-empty") < 2 {
        return Ok(false);
    }
    // Minimum degree 2 forces m >= n, so at least one chain exists.
    let c = decompose(g, &d).expect("connected graph with n >= 3 decomposes");
    Ok(c.cycle_count() == 1 && c.unvisited_edges().is_empty())
}

/// Bridges are exactly the edges no chain covers, in id order.
pub fn find_bridges(_g: &Graph, c: &ChainDecomposition) -> Vec<EdgeId> {
    c.unvisited_edges()
}

/// Cut vertices, ascending. A vertex separates the graph exactly when it
/// is the first vertex of a cycle chain other than the first chain, or a
/// bridge endpoint with another incident edge.
pub fn find_cut_vertices(g: &Graph, c: &ChainDecomposition, bridges: &[EdgeId]) -> Vec<VertexId> {
    let mut cut = vec![false; g.vertex_count()];
    for &e in bridges {
        let edge = g.edge(e);
        for x in [edge.u, edge.v] {
            if g.degree(x) >= 2 {
                cut[x] = true;
            }
        }
    }
    for chain in c.chains().iter().skip(1) {
        if chain.kind == ChainKind::Cycle {
            cut[chain.vertices[0]] = true;
        }
    }
    cut.iter().enumerate().filter_map(|(v, &is_cut)| is_cut.then_some(v)).collect()
}

/// Full connectivity analysis from vertex 0.
pub fn analyze(g: &Graph) -> ConnectivityReport {
    analyze_from(g, 0)
}

/// Full connectivity analysis from `root`: verdict, bridges, cut
/// vertices, and chain counts in one pass. Handles every graph size;
/// graphs too small to decompose get empty chain stats.
pub fn analyze_from(g: &Graph, root: VertexId) -> ConnectivityReport {
    let n = g.vertex_count();
    let empty = ChainStats { chains: 0, cycles: 0, paths: 0 };
    if n == 0 {
        return ConnectivityReport {
            verdict: Verdict::NotConnected,
            bridges: Vec::new(),
            cut_vertices: Vec::new(),
            chain_stats: empty,
        };
    }
    let d = run_dfs(g, root);
    if !d.is_connected() {
        return ConnectivityReport {
            verdict: Verdict::NotConnected,
            bridges: Vec::new(),
            cut_vertices: Vec::new(),
            chain_stats: empty,
        };
    }
    if n < 3 {
        // A lone vertex has no bridge; a single edge is one.
        let bridges: Vec<EdgeId> = (0..g.edge_count()).collect();
        return ConnectivityReport {
            verdict: Verdict::NotTwoEdgeConnected,
            bridges,
            cut_vertices: Vec::new(),
            chain_stats: empty,
        };
    }
    let c = decompose(g, &d).expect("connected graph with n >= 3 decomposes");
    let bridges = find_bridges(g, &c);
    let cut_vertices = find_cut_vertices(g, &c, &bridges);
    let verdict = verdict_from_chains(g, &c);
    ConnectivityReport {
        verdict,
        bridges,
        cut_vertices,
        chain_stats: ChainStats {
            chains: c.chain_count(),
            cycles: c.cycle_count(),
            paths: c.path_count(),
        },
    }
}

/// Decomposes after checking applicability, for callers that need the
/// chains themselves.
pub fn decompose_checked(g: &Graph, root: VertexId) -> Result<ChainDecomposition, DecomposeError> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(DecomposeError::TooSmall { vertices: n });
    }
    let d = run_dfs(g, root);
    decompose(g, &d)
}
