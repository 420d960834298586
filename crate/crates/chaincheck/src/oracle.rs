//! Brute-force reference implementations and graph generators.
//!
//! Everything here works from first principles (breadth-first reachability
//! plus deletion retests) and shares no traversal code with the fast path,
//! so the two sides can check each other.

use std::collections::{HashMap, HashSet, VecDeque};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::components::EdgePartition;
use crate::connectivity::Verdict;
use crate::graph::{EdgeId, Graph, VertexId};

/// BFS reachability, optionally skipping one edge and one vertex.
/// Returns how many vertices were reached.
fn bfs_count(g: &Graph, start: VertexId, skip_edge: Option<EdgeId>, skip_vertex: Option<VertexId>) -> usize {
    let mut seen = vec![false; g.vertex_count()];
    let mut queue = VecDeque::new();
    seen[start] = true;
    queue.push_back(start);
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &(w, e) in g.adjacency(u) {
            if Some(e) == skip_edge || Some(w) == skip_vertex || seen[w] {
                continue;
            }
            seen[w] = true;
            count += 1;
            queue.push_back(w);
        }
    }
    count
}

/// Connectivity by plain BFS. The graph must have at least one vertex.
pub fn brute_is_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    assert!(n >= 1, "connectivity of the empty graph is undefined here");
    bfs_count(g, 0, None, None) == n
}

/// Bridges by deleting each edge in turn and retesting reachability
/// between its endpoints. Quadratic; expects a connected graph.
pub fn brute_bridges(g: &Graph) -> Vec<EdgeId> {
    (0..g.edge_count())
        .filter(|&e| {
            let edge = g.edge(e);
            bfs_count(g, edge.u, Some(e), None) < g.vertex_count()
        })
        .collect()
}

/// Cut vertices by deleting each vertex in turn and retesting
/// reachability among the rest. Expects a connected graph with n >= 2.
pub fn brute_cut_vertices(g: &Graph) -> Vec<VertexId> {
    let n = g.vertex_count();
    assert!(n >= 2, "cut vertices need at least two vertices");
    (0..n)
        .filter(|&v| {
            let start = if v == 0 { 1 } else { 0 };
            bfs_count(g, start, None, Some(v)) < n - 1
        })
        .collect()
}

/// Classifies a graph straight from the definitions: a graph is
/// 2-edge-connected if it is connected, has at least 2 vertices, and has
/// no bridge; 2-connected if additionally it has at least 3 vertices and
/// no cut vertex.
pub fn brute_classify(g: &Graph) -> Verdict {
    let n = g.vertex_count();
    if n == 0 || !brute_is_connected(g) {
        return Verdict::NotConnected;
    }
    if n < 2 || !brute_bridges(g).is_empty() {
        return Verdict::NotTwoEdgeConnected;
    }
    if n < 3 || !brute_cut_vertices(g).is_empty() {
        return Verdict::TwoEdgeConnectedOnly;
    }
    Verdict::TwoConnected
}

/// Component label for every vertex of `g` with `skip` deleted;
/// `usize::MAX` marks `skip` itself.
fn component_labels(g: &Graph, skip: Option<VertexId>) -> Vec<usize> {
    let n = g.vertex_count();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if Some(s) == skip || label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &(w, _) in g.adjacency(u) {
                if Some(w) == skip || label[w] != usize::MAX {
                    continue;
                }
                label[w] = next;
                queue.push_back(w);
            }
        }
        next += 1;
    }
    label
}

/// Blocks by refinement: two edges share a block exactly when no single
/// vertex deletion leaves them in different components. Each edge gets a
/// signature listing, per deleted vertex, the component of its surviving
/// endpoint; equal signatures mean equal blocks. Expects a connected
/// graph. Groups are ordered by smallest edge id.
pub fn brute_blocks(g: &Graph) -> EdgePartition {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut signature: Vec<Vec<usize>> = vec![Vec::with_capacity(n); m];
    for v in 0..n {
        let label = component_labels(g, Some(v));
        for e in 0..m {
            let edge = g.edge(e);
            let anchor = if edge.u == v { edge.v } else { edge.u };
            if edge.u != v && edge.v != v {
                debug_assert_eq!(label[edge.u], label[edge.v], "edge endpoints split by deletion");
            }
            signature[e].push(label[anchor]);
        }
    }

    let mut group_index: HashMap<&[usize], usize> = HashMap::new();
    let mut groups: Vec<Vec<EdgeId>> = Vec::new();
    let mut group_of = vec![None; m];
    for e in 0..m {
        let idx = *group_index.entry(signature[e].as_slice()).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[idx].push(e);
        group_of[e] = Some(idx);
    }
    EdgePartition { groups, group_of }
}

/// Whether some simple cycle passes through both edges. Exponential
/// search over simple paths; only for cross-checking on tiny graphs.
pub fn edges_on_common_cycle(g: &Graph, e: EdgeId, f: EdgeId) -> bool {
    if e == f {
        return true;
    }
    // A simple cycle through both edges exists iff two vertex-disjoint
    // paths join their endpoint pairs in the graph without e and f, in
    // one of the two pairings.
    let (a, b) = (g.edge(e).u, g.edge(e).v);
    let (c, d) = (g.edge(f).u, g.edge(f).v);
    disjoint_paths_exist(g, (a, c), (b, d), &[e, f]) || disjoint_paths_exist(g, (a, d), (b, c), &[e, f])
}

fn disjoint_paths_exist(
    g: &Graph,
    first: (VertexId, VertexId),
    second: (VertexId, VertexId),
    banned: &[EdgeId],
) -> bool {
    // Enumerate simple paths for the first pair, then BFS for the second
    // pair avoiding the used vertices.
    let mut used = vec![false; g.vertex_count()];
    let mut path = vec![first.0];
    used[first.0] = true;
    search_paths(g, first.1, second, banned, &mut used, &mut path)
}

fn search_paths(
    g: &Graph,
    goal: VertexId,
    second: (VertexId, VertexId),
    banned: &[EdgeId],
    used: &mut Vec<bool>,
    path: &mut Vec<VertexId>,
) -> bool {
    let here = *path.last().expect("path is never empty");
    if here == goal {
        if second.0 == second.1 {
            return !used[second.0];
        }
        if used[second.0] || used[second.1] {
            return false;
        }
        // BFS for the second path through unused vertices only.
        let mut seen = used.clone();
        let mut queue = VecDeque::from([second.0]);
        seen[second.0] = true;
        while let Some(u) = queue.pop_front() {
            for &(w, edge) in g.adjacency(u) {
                if banned.contains(&edge) || seen[w] {
                    continue;
                }
                if w == second.1 {
                    return true;
                }
                seen[w] = true;
                queue.push_back(w);
            }
        }
        return false;
    }
    for &(w, edge) in g.adjacency(here) {
        if banned.contains(&edge) || used[w] {
            continue;
        }
        used[w] = true;
        path.push(w);
        if search_paths(g, goal, second, banned, used, path) {
            return true;
        }
        path.pop();
        used[w] = false;
    }
    false
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenerateError {
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
}

/// Families of test graphs.
#[derive(Debug, Clone)]
pub enum GraphFamily {
    /// Every labeled graph on `n` vertices, connected or not, in a fixed
    /// order. Capped at n = 6 to keep enumeration tractable.
    ExhaustiveLabeled { n: usize },
    /// Uniform random graphs with exactly `m` distinct edges.
    RandomGnm { n: usize, m: usize, seed: u64 },
    /// A spanning cycle plus `extra_chords` distinct random chords;
    /// always 2-connected, with `n + extra_chords` edges.
    RandomTwoConnected { n: usize, extra_chords: usize, seed: u64 },
    /// One of the built-in named graphs; see [`FIXTURES`].
    NamedFixture { name: String },
}

pub struct GraphStream {
    inner: StreamInner,
}

enum StreamInner {
    Exhaustive { n: usize, mask: u64, end: u64 },
    Gnm { n: usize, m: usize, rng: ChaCha8Rng },
    TwoConnected { n: usize, extra_chords: usize, rng: ChaCha8Rng },
    Single(Option<Graph>),
}

/// All unordered vertex pairs on `n` vertices, in a fixed order.
fn all_pairs(n: usize) -> Vec<(VertexId, VertexId)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for v in 1..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Extends `pairs` with `count` distinct random pairs not already in
/// `taken`, by rejection sampling. Never materializes the pair pool, so
/// it stays cheap for sparse draws on large vertex sets.
fn sample_new_pairs(
    rng: &mut ChaCha8Rng,
    n: usize,
    count: usize,
    taken: &mut HashSet<(VertexId, VertexId)>,
    pairs: &mut Vec<(VertexId, VertexId)>,
) {
    let mut remaining = count;
    while remaining > 0 {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if taken.insert(key) {
            pairs.push(key);
            remaining -= 1;
        }
    }
}

pub fn generate(family: &GraphFamily) -> Result<GraphStream, GenerateError> {
    let inner = match family {
        GraphFamily::ExhaustiveLabeled { n } => {
            if *n > 6 {
                return Err(GenerateError::InvalidParams(format!(
                    "exhaustive enumeration is capped at 6 vertices, got {n}"
                )));
            }
            let slots = n * n.saturating_sub(1) / 2;
            StreamInner::Exhaustive { n: *n, mask: 0, end: 1u64 << slots }
        }
        GraphFamily::RandomGnm { n, m, seed } => {
            let pool = n * n.saturating_sub(1) / 2;
            if *m > pool {
                return Err(GenerateError::InvalidParams(format!(
                    "{m} edges requested but only {pool} distinct pairs exist on {n} vertices"
                )));
            }
            StreamInner::Gnm { n: *n, m: *m, rng: ChaCha8Rng::seed_from_u64(*seed) }
        }
        GraphFamily::RandomTwoConnected { n, extra_chords, seed } => {
            if *n < 3 {
                return Err(GenerateError::InvalidParams(format!(
                    "a spanning cycle needs at least 3 vertices, got {n}"
                )));
            }
            let pool = n * (n - 1) / 2 - n;
            if *extra_chords > pool {
                return Err(GenerateError::InvalidParams(format!(
                    "{extra_chords} chords requested but only {pool} non-cycle pairs exist"
                )));
            }
            StreamInner::TwoConnected {
                n: *n,
                extra_chords: *extra_chords,
                rng: ChaCha8Rng::seed_from_u64(*seed),
            }
        }
        GraphFamily::NamedFixture { name } => {
            let g = fixture(name).ok_or_else(|| {
                GenerateError::InvalidParams(format!("unknown fixture {name:?}"))
            })?;
            StreamInner::Single(Some(g))
        }
    };
    Ok(GraphStream { inner })
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match &mut self.inner {
            StreamInner::Exhaustive { n, mask, end } => {
                if mask == end {
                    return None;
                }
                let pairs = all_pairs(*n);
                let chosen: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| (*mask >> i) & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                *mask += 1;
                Some(Graph::build(*n, &chosen).expect("enumerated pairs are simple"))
            }
            StreamInner::Gnm { n, m, rng } => {
                let mut taken = HashSet::with_capacity(*m);
                let mut pairs = Vec::with_capacity(*m);
                sample_new_pairs(rng, *n, *m, &mut taken, &mut pairs);
                Some(Graph::build(*n, &pairs).expect("sampled pairs are distinct"))
            }
            StreamInner::TwoConnected { n, extra_chords, rng } => {
                let n = *n;
                let mut pairs: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
                // Seeding the taken-set with the cycle edges makes the
                // chord draws skip them automatically.
                let mut taken: HashSet<_> =
                    pairs.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
                sample_new_pairs(rng, n, *extra_chords, &mut taken, &mut pairs);
                Some(Graph::build(n, &pairs).expect("cycle plus distinct chords is simple"))
            }
            StreamInner::Single(slot) => slot.take(),
        }
    }
}

pub const FIXTURES: &[&str] = &[
    "triangle",
    "path3",
    "bowtie",
    "k4",
    "c5",
    "star",
    "triangle_pendant",
    "petersen",
];

/// A named example graph, or None if the name is unknown.
pub fn fixture(name: &str) -> Option<Graph> {
    let (n, pairs): (usize, Vec<(usize, usize)>) = match name {
        "triangle" => (3, vec![(0, 1), (1, 2), (2, 0)]),
        "path3" => (3, vec![(0, 1), (1, 2)]),
        "bowtie" => (5, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]),
        "k4" => (4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        "c5" => (5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
        "star" => (5, vec![(0, 1), (0, 2), (0, 3), (0, 4)]),
        "triangle_pendant" => (4, vec![(0, 1), (1, 2), (2, 0), (2, 3)]),
        "petersen" => (
            10,
            vec![
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        ),
        _ => return None,
    };
    Some(Graph::build(n, &pairs).expect("fixtures are simple graphs"))
}
