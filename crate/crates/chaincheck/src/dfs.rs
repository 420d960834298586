//! Depth-first search with edge classification.
//!
//! Tree edges point from child to parent; every non-tree edge of an
//! undirected graph connects an ancestor/descendant pair, and we treat it
//! as starting at the ancestor (the endpoint with the smaller index).

use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Tree,
    Back,
}

/// Result of one DFS run. Indices (`dfi`) number vertices 0.. in visit
/// order; only vertices in the root's component are reached.
#[derive(Debug, Clone)]
pub struct DfsResult {
    root: VertexId,
    dfi: Vec<usize>,
    order: Vec<VertexId>,
    parent: Vec<Option<VertexId>>,
    parent_edge: Vec<Option<EdgeId>>,
    edge_kind: Vec<Option<EdgeKind>>,
    visited: Vec<bool>,
    subtree_max: Vec<usize>,
    backedge_from: Vec<Vec<EdgeId>>,
    n: usize,
}

/// Runs a DFS from `root`, classifying every edge of the root's component
/// as tree or back. Iterative, so recursion depth is not a limit.
///
/// Panics if the graph is empty or `root` is out of range.
pub fn run_dfs(g: &Graph, root: VertexId) -> DfsResult {
    let n = g.vertex_count();
    assert!(n >= 1, "DFS needs at least one vertex");
    assert!(root < n, "root {root} out of range 0..{n}");

    let mut d = DfsResult {
        root,
        dfi: vec![usize::MAX; n],
        order: Vec::new(),
        parent: vec![None; n],
        parent_edge: vec![None; n],
        edge_kind: vec![None; g.edge_count()],
        visited: vec![false; n],
        subtree_max: vec![0; n],
        backedge_from: vec![Vec::new(); n],
        n,
    };

    d.visited[root] = true;
    d.dfi[root] = 0;
    d.order.push(root);
    // (vertex, position of the next adjacency entry to inspect)
    let mut stack: Vec<(VertexId, usize)> = vec![(root, 0)];
    while let Some(frame) = stack.last_mut() {
        let u = frame.0;
        match g.adjacency(u).get(frame.1) {
            Some(&(w, e)) => {
                frame.1 += 1;
                if !d.visited[w] {
                    d.visited[w] = true;
                    d.dfi[w] = d.order.len();
                    d.subtree_max[w] = d.dfi[w];
                    d.order.push(w);
                    d.parent[w] = Some(u);
                    d.parent_edge[w] = Some(e);
                    d.edge_kind[e] = Some(EdgeKind::Tree);
                    stack.push((w, 0));
                } else if d.edge_kind[e].is_none() {
                    d.edge_kind[e] = Some(EdgeKind::Back);
                }
            }
            None => {
                stack.pop();
                if let Some(p) = d.parent[u] {
                    d.subtree_max[p] = d.subtree_max[p].max(d.subtree_max[u]);
                }
            }
        }
    }

    // Back edges grouped by their start (ancestor) vertex, in adjacency
    // order, which fixes the chain traversal order downstream.
    let mut tree_edges = 0usize;
    for e in 0..g.edge_count() {
        match d.edge_kind[e] {
            Some(EdgeKind::Tree) => tree_edges += 1,
            Some(EdgeKind::Back) => {
                let edge = g.edge(e);
                let (start, end) = if d.dfi[edge.u] < d.dfi[edge.v] {
                    (edge.u, edge.v)
                } else {
                    (edge.v, edge.u)
                };
                assert!(
                    d.is_in_subtree(start, end),
                    "back edge ({}, {}) does not join an ancestor to a descendant",
                    edge.u,
                    edge.v
                );
            }
            None => {}
        }
    }
    for &v in &d.order {
        for &(w, e) in g.adjacency(v) {
            if d.edge_kind[e] == Some(EdgeKind::Back) && d.dfi[v] < d.dfi[w] {
                d.backedge_from[v].push(e);
            }
        }
    }
    assert_eq!(tree_edges, d.order.len() - 1, "spanning tree edge count");

    d
}

impl DfsResult {
    pub fn root(&self) -> VertexId {
        self.root
    }

    /// Depth-first index of `v`, or None if the DFS never reached it.
    pub fn dfi(&self, v: VertexId) -> Option<usize> {
        self.visited[v].then(|| self.dfi[v])
    }

    /// Vertices in visit order; `order()[i]` has dfi `i`.
    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v]
    }

    pub fn parent_edge(&self, v: VertexId) -> Option<EdgeId> {
        self.parent_edge[v]
    }

    /// Classification of edge `e`, or None if `e` lies outside the root's
    /// component.
    pub fn edge_kind(&self, e: EdgeId) -> Option<EdgeKind> {
        self.edge_kind[e]
    }

    pub fn is_visited(&self, v: VertexId) -> bool {
        self.visited[v]
    }

    /// Back edges starting (ancestor side) at `v`, in adjacency order.
    pub fn backedges_from(&self, v: VertexId) -> &[EdgeId] {
        &self.backedge_from[v]
    }

    pub fn reached_count(&self) -> usize {
        self.order.len()
    }

    pub fn is_connected(&self) -> bool {
        self.order.len() == self.n
    }

    /// True iff `y` lies in the DFS subtree rooted at `x` (including
    /// `x == y`). Both vertices must have been reached.
    pub fn is_in_subtree(&self, x: VertexId, y: VertexId) -> bool {
        assert!(self.visited[x] && self.visited[y], "subtree query on unreached vertex");
        self.dfi[x] <= self.dfi[y] && self.dfi[y] <= self.subtree_max[x]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn triangle_tail() -> Graph {
        // 0-1-2 triangle plus pendant 3 on vertex 2.
        Graph::build(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap()
    }

    #[test]
    fn classifies_tree_and_back_edges() {
        let g = triangle_tail();
        let d = run_dfs(&g, 0);
        assert!(d.is_connected());
        assert_eq!(d.order(), &[0, 1, 2, 3]);
        assert_eq!(d.edge_kind(0), Some(EdgeKind::Tree));
        assert_eq!(d.edge_kind(1), Some(EdgeKind::Tree));
        assert_eq!(d.edge_kind(2), Some(EdgeKind::Back));
        assert_eq!(d.edge_kind(3), Some(EdgeKind::Tree));
        assert_eq!(d.parent(3), Some(2));
        assert_eq!(d.parent_edge(3), Some(3));
        assert_eq!(d.parent(0), None);
    }

    #[test]
    fn backedges_start_at_the_ancestor() {
        let g = triangle_tail();
        let d = run_dfs(&g, 0);
        // Edge 2 joins vertices 0 and 2; the ancestor is the root.
        assert_eq!(d.backedges_from(0), &[2]);
        assert!(d.backedges_from(2).is_empty());
    }

    #[test]
    fn dfi_is_a_bijection_on_reached_vertices() {
        let g = triangle_tail();
        let d = run_dfs(&g, 3);
        let mut seen = vec![false; 4];
        for v in 0..4 {
            let i = d.dfi(v).unwrap();
            assert!(!seen[i]);
            seen[i] = true;
        }
        assert!(seen.iter().all(|&b| b));
    }

    #[test]
    fn unreached_component_stays_unclassified() {
        let g = Graph::build(5, &[(0, 1), (2, 3), (3, 4), (4, 2)]).unwrap();
        let d = run_dfs(&g, 0);
        assert!(!d.is_connected());
        assert_eq!(d.reached_count(), 2);
        assert_eq!(d.dfi(2), None);
        assert_eq!(d.edge_kind(1), None);
        assert_eq!(d.edge_kind(3), None);
    }

    #[test]
    fn subtree_intervals_match_tree_shape() {
        // Star centered at 0: each leaf is its own subtree.
        let g = Graph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let d = run_dfs(&g, 0);
        assert!(d.is_in_subtree(0, 2));
        assert!(!d.is_in_subtree(1, 2));
        assert!(d.is_in_subtree(3, 3));
    }

    #[test]
    fn deep_path_does_not_overflow() {
        let n = 200_000;
        let pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let g = Graph::build(n, &pairs).unwrap();
        let d = run_dfs(&g, 0);
        assert!(d.is_connected());
        assert_eq!(d.dfi(n - 1), Some(n - 1));
    }

    #[test]
    fn single_vertex() {
        let g = Graph::build(1, &[]).unwrap();
        let d = run_dfs(&g, 0);
        assert!(d.is_connected());
        assert_eq!(d.order(), &[0]);
    }
}
