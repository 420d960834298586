//! Undirected simple graphs with stable vertex and edge ids.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

/// Undirected edge. Endpoints are stored in insertion order; the pair is
/// treated as unordered for simplicity checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    /// The endpoint that is not `x`.
    ///
    /// Panics if `x` is not an endpoint of this edge.
    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            assert_eq!(x, self.v, "vertex {x} is not an endpoint of ({}, {})", self.u, self.v);
            self.u
        }
    }

    fn key(&self) -> (VertexId, VertexId) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("parallel edge between {0} and {1}")]
    ParallelEdge(VertexId, VertexId),
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: VertexId, v: VertexId, n: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// Input syntax accepted by [`Graph::parse`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    /// First significant line is the vertex count, then one `u v` pair per
    /// line, 0-based. `#` starts a comment; blank lines are ignored.
    EdgeList,
    /// `p edge <n> <m>` header, then `e <u> <v>` lines, 1-based. `c` lines
    /// are comments. The declared edge count must match.
    Dimacs,
}

/// Undirected simple graph. Vertices are `0..n`. Edge ids are assigned in
/// insertion order and every adjacency list preserves that order, so all
/// traversals are deterministic for a given construction sequence.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, parallel
    /// edges, and out-of-range endpoints.
    pub fn build(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Graph, GraphError> {
        let mut g = Graph {
            n,
            edges: Vec::with_capacity(pairs.len()),
            adjacency: vec![Vec::new(); n],
            labels: None,
        };
        let mut seen: HashSet<(VertexId, VertexId)> = HashSet::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let e = Edge { u, v };
            if !seen.insert(e.key()) {
                return Err(GraphError::ParallelEdge(u, v));
            }
            g.push_edge(e);
        }
        Ok(g)
    }

    /// Like [`Graph::build`] but drops self-loops and duplicate edges
    /// instead of rejecting them. Out-of-range endpoints still error.
    pub fn build_simplified(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Graph, GraphError> {
        let mut g = Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
            labels: None,
        };
        let mut seen: HashSet<(VertexId, VertexId)> = HashSet::new();
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                continue;
            }
            let e = Edge { u, v };
            if seen.insert(e.key()) {
                g.push_edge(e);
            }
        }
        Ok(g)
    }

    fn push_edge(&mut self, e: Edge) {
        let id = self.edges.len();
        self.adjacency[e.u].push((e.v, id));
        self.adjacency[e.v].push((e.u, id));
        self.edges.push(e);
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `v` paired with the connecting edge id, in insertion
    /// order.
    pub fn adjacency(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    /// Minimum degree over all vertices. Errors on the empty graph.
    pub fn min_degree(&self) -> Result<usize, GraphError> {
        (0..self.n)
            .map(|v| self.degree(v))
            .min()
            .ok_or(GraphError::EmptyGraph)
    }

    /// Display label for a vertex. DIMACS input keeps its original 1-based
    /// names; everything else uses the numeric id.
    pub fn label(&self, v: VertexId) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn parse(text: &str, format: GraphFormat) -> Result<Graph, GraphError> {
        match format {
            GraphFormat::EdgeList => parse_edge_list(text),
            GraphFormat::Dimacs => parse_dimacs(text),
        }
    }

    /// Serializes in the edge-list syntax: vertex count, then one `u v`
    /// line per edge in id order. `parse` of the output reproduces the
    /// graph exactly.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.n);
        for e in &self.edges {
            let _ = writeln!(out, "{} {}", e.u, e.v);
        }
        out
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = strip_comment(raw).trim();
        if body.is_empty() {
            continue;
        }
        let mut fields = body.split_whitespace();
        if n.is_none() {
            let count = fields.next().expect("non-empty line has a first field");
            if fields.next().is_some() {
                return Err(GraphError::Parse {
                    line,
                    reason: "expected a single vertex count".into(),
                });
            }
            n = Some(count.parse().map_err(|_| GraphError::Parse {
                line,
                reason: format!("invalid vertex count {count:?}"),
            })?);
            continue;
        }
        let (u, v) = parse_pair(&mut fields, line)?;
        pairs.push((u, v));
    }
    let n = n.ok_or(GraphError::Parse {
        line: text.lines().count().max(1),
        reason: "missing vertex count".into(),
    })?;
    Graph::build(n, &pairs)
}

fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('c') {
            continue;
        }
        let mut fields = body.split_whitespace();
        let tag = fields.next().expect("non-empty line has a first field");
        match tag {
            "p" => {
                if header.is_some() {
                    return Err(GraphError::Parse {
                        line,
                        reason: "duplicate problem line".into(),
                    });
                }
                if fields.next() != Some("edge") {
                    return Err(GraphError::Parse {
                        line,
                        reason: "expected `p edge <n> <m>`".into(),
                    });
                }
                let (n, m) = parse_pair(&mut fields, line)?;
                header = Some((n, m));
            }
            "e" => {
                if header.is_none() {
                    return Err(GraphError::Parse {
                        line,
                        reason: "edge before problem line".into(),
                    });
                }
                let (u, v) = parse_pair(&mut fields, line)?;
                if u == 0 || v == 0 {
                    return Err(GraphError::Parse {
                        line,
                        reason: "vertices are 1-based".into(),
                    });
                }
                pairs.push((u - 1, v - 1));
            }
            other => {
                return Err(GraphError::Parse {
                    line,
                    reason: format!("unknown line type {other:?}"),
                });
            }
        }
    }
    let (n, m) = header.ok_or(GraphError::Parse {
        line: text.lines().count().max(1),
        reason: "missing problem line".into(),
    })?;
    if pairs.len() != m {
        return Err(GraphError::Parse {
            line: text.lines().count().max(1),
            reason: format!("problem line declares {m} edges, found {}", pairs.len()),
        });
    }
    let mut g = Graph::build(n, &pairs)?;
    g.labels = Some((1..=n).map(|v| v.to_string()).collect());
    Ok(g)
}

fn parse_pair(
    fields: &mut std::str::SplitWhitespace<'_>,
    line: usize,
) -> Result<(usize, usize), GraphError> {
    let mut next = |what: &str| -> Result<usize, GraphError> {
        let tok = fields.next().ok_or_else(|| GraphError::Parse {
            line,
            reason: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| GraphError::Parse {
            line,
            reason: format!("invalid {what} {tok:?}"),
        })
    };
    let a = next("first number")?;
    let b = next("second number")?;
    if fields.next().is_some() {
        return Err(GraphError::Parse {
            line,
            reason: "trailing fields".into(),
        });
    }
    Ok((a, b))
}
