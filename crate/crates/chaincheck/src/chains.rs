//! Chain decomposition of a connected graph.
//!
//! Vertices are processed in DFS order; each back edge starting at the
//! current vertex opens a chain that walks parent pointers from the far
//! endpoint until it hits a vertex some earlier chain already marked.
//! Every edge lands in at most one chain, and the edges left over are
//! exactly the bridges.

use thiserror::Error;

use crate::dfs::DfsResult;
use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainKind {
    /// First and last vertex coincide.
    Cycle,
    /// Distinct endpoints.
    Path,
}

/// One chain. `vertices` starts at the back edge's ancestor endpoint and
/// ends at the first previously
/// marked vertex; `edge_ids` lists the back edge first, then the tree
/// edges in walk order, so `edge_ids.len() == vertices.len() - 1`.
#[derive(Debug, Clone)]
pub struct Chain {
    /// 1-based position in the decomposition.
    pub index: usize,
    pub vertices: Vec<VertexId>,
    pub edge_ids: Vec<EdgeId>,
    pub kind: ChainKind,
    pub source_backedge: EdgeId,
}

#[derive(Debug, Clone)]
pub struct ChainDecomposition {
    chains: Vec<Chain>,
    /// 1-based chain index per edge; None for edges in no chain.
    edge_to_chain: Vec<Option<usize>>,
    /// 1-based index of the chain that first marked each vertex.
    vertex_first_chain: Vec<Option<usize>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("graph has {vertices} vertices; decomposition needs at least 3")]
    TooSmall { vertices: usize },
    #[error("graph is not connected ({reached} of {total} vertices reachable)")]
    NotConnected { reached: usize, total: usize },
}

/// Decomposes the graph into chains, given a DFS of it. Produces exactly
/// `m - n + 1` chains; if the first chain exists it is a cycle.
pub fn decompose(g: &Graph, d: &DfsResult) -> Result<ChainDecomposition, DecomposeError> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(DecomposeError::TooSmall { vertices: n });
    }
    if !d.is_connected() {
        return Err(DecomposeError::NotConnected { reached: d.reached_count(), total: n });
    }

    let mut c = ChainDecomposition {
        chains: Vec::with_capacity(g.edge_count() + 1 - n),
        edge_to_chain: vec![None; g.edge_count()],
        vertex_first_chain: vec![None; n],
    };
    let mut marked = vec![false; n];

    for &v in d.order() {
        for &e in d.backedges_from(v) {
            let index = c.chains.len() + 1;
            let mut vertices = vec![v];
            let mut edge_ids = vec![e];
            if !marked[v] {
                marked[v] = true;
                c.vertex_first_chain[v] = Some(index);
            }
            // Walk from the descendant endpoint toward the root until a
            // marked vertex stops us; it becomes the last chain vertex.
            let mut x = g.edge(e).other(v);
            while !marked[x] {
                marked[x] = true;
                c.vertex_first_chain[x] = Some(index);
                vertices.push(x);
                let up = d.parent_edge(x).expect("walk stays below the root");
                edge_ids.push(up);
                x = d.parent(x).expect("walk stays below the root");
            }
            vertices.push(x);

            for &id in &edge_ids {
                debug_assert!(c.edge_to_chain[id].is_none(), "edge {id} claimed twice");
                c.edge_to_chain[id] = Some(index);
            }
            let kind = if vertices[0] == *vertices.last().expect("chain has vertices") {
                ChainKind::Cycle
            } else {
                ChainKind::Path
            };
            c.chains.push(Chain { index, vertices, edge_ids, kind, source_backedge: e });
        }
    }

    assert_eq!(
        c.chains.len(),
        g.edge_count() + 1 - n,
        "chain count must equal m - n + 1"
    );
    // The first chain closes on its own start vertex: when it runs, the
    // only marked vertex is the start, and the walk ascends through it.
    if let Some(first) = c.chains.first() {
        assert_eq!(first.kind, ChainKind::Cycle, "the first chain is a cycle");
    }

    Ok(c)
}

impl ChainDecomposition {
    pub fn chains(&self) -> &[Chain] {
        &self.chains
    }

    pub fn chain_count(&self) -> usize {
        self.chains.len()
    }

    /// Chain with 1-based index `i`.
    pub fn chain(&self, index: usize) -> &Chain {
        &self.chains[index - 1]
    }

    pub fn cycle_count(&self) -> usize {
        self.chains.iter().filter(|c| c.kind == ChainKind::Cycle).count()
    }

    pub fn path_count(&self) -> usize {
        self.chains.iter().filter(|c| c.kind == ChainKind::Path).count()
    }

    /// 1-based index of the chain containing edge `e`, if any.
    pub fn chain_of_edge(&self, e: EdgeId) -> Option<usize> {
        self.edge_to_chain[e]
    }

    /// 1-based index of the chain that first visited `v`, if any.
    pub fn first_chain_of_vertex(&self, v: VertexId) -> Option<usize> {
        self.vertex_first_chain[v]
    }

    /// Edges belonging to no chain, in id order.
    pub fn unvisited_edges(&self) -> Vec<EdgeId> {
        self.edge_to_chain
            .iter()
            .enumerate()
            .filter_map(|(e, c)| c.is_none().then_some(e))
            .collect()
    }
}
