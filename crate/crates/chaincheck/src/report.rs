//! Full analysis bundled for serialization.

use std::time::Instant;

use serde::Serialize;

use crate::chains::{decompose, ChainKind};
use crate::components::{
    block_cut_tree, blocks, certify_ear_decomposition, two_edge_connected_components, BctNode,
    EarKind,
};
use crate::connectivity::{find_bridges, find_cut_vertices, ChainStats, Verdict};
use crate::dfs::run_dfs;
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Serialize)]
pub struct InputMeta {
    pub n: usize,
    pub m: usize,
    pub source: String,
    pub root: VertexId,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainJson {
    pub index: usize,
    pub kind: &'static str,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentJson {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BlockJson {
    pub edges: Vec<usize>,
    pub trivial: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BctNodeJson {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BctJson {
    pub nodes: Vec<BctNodeJson>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ViolationJson {
    pub chain: usize,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct EarJson {
    pub valid: bool,
    pub kind: &'static str,
    pub violations: Vec<ViolationJson>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Timing {
    pub parse_ms: f64,
    pub dfs_ms: f64,
    pub chains_ms: f64,
    pub total_ms: f64,
}

/// Everything one analysis produced. Sections that do not apply (chains
/// of a disconnected graph, ears of a graph with bridges) are None and
/// stay out of the JSON.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub input: InputMeta,
    pub verdict: String,
    pub bridges: Vec<usize>,
    pub cut_vertices: Vec<usize>,
    pub chain_stats: ChainStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chains: Option<Vec<ChainJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_edge_components: Option<Vec<ComponentJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<BlockJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block_cut_tree: Option<BctJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ear_decomposition: Option<EarJson>,
    pub timing: Timing,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs the whole pipeline on `g` and packages the results. `source`
/// names where the graph came from (path, fixture, "stdin");
/// `include_chains` controls whether every chain is listed in full.
/// `parse_ms` and `total_ms` start at zero for the caller to fill.
pub fn build_report(g: &Graph, source: &str, root: VertexId, include_chains: bool) -> Report {
    let n = g.vertex_count();
    let meta = InputMeta { n, m: g.edge_count(), source: source.to_string(), root };
    let mut timing = Timing { parse_ms: 0.0, dfs_ms: 0.0, chains_ms: 0.0, total_ms: 0.0 };

    let mut report = Report {
        input: meta,
        verdict: Verdict::NotConnected.as_str().to_string(),
        bridges: Vec::new(),
        cut_vertices: Vec::new(),
        chain_stats: ChainStats { chains: 0, cycles: 0, paths: 0 },
        chains: None,
        two_edge_components: None,
        blocks: None,
        block_cut_tree: None,
        ear_decomposition: None,
        timing,
    };
    if n == 0 {
        return report;
    }

    let t0 = Instant::now();
    let d = run_dfs(g, root);
    timing.dfs_ms = ms_since(t0);
    if !d.is_connected() {
        report.timing = timing;
        return report;
    }

    if n < 3 {
        let bridges: Vec<usize> = (0..g.edge_count()).collect();
        let parts = two_edge_connected_components(g, &bridges);
        let block_partition = crate::components::EdgePartition {
            groups: bridges.iter().map(|&e| vec![e]).collect(),
            group_of: bridges.iter().map(|&e| Some(e)).collect(),
        };
        report.verdict = Verdict::NotTwoEdgeConnected.as_str().to_string();
        report.two_edge_components = Some(components_json(&parts));
        report.block_cut_tree = Some(bct_json(&block_cut_tree(g, &block_partition, &[])));
        report.blocks = Some(blocks_json(&block_partition, &bridges));
        report.bridges = bridges;
        report.timing = timing;
        return report;
    }

    let t1 = Instant::now();
    let c = decompose(g, &d).expect("connected graph with n >= 3 decomposes");
    timing.chains_ms = ms_since(t1);

    let bridges = find_bridges(g, &c);
    let cut_vertices = find_cut_vertices(g, &c, &bridges);
    let verdict = if !bridges.is_empty() {
        Verdict::NotTwoEdgeConnected
    } else if c.cycle_count() > 1 {
        Verdict::TwoEdgeConnectedOnly
    } else {
        Verdict::TwoConnected
    };

    let parts = two_edge_connected_components(g, &bridges);
    let block_partition = blocks(g, &c, &bridges, &cut_vertices);
    let tree = block_cut_tree(g, &block_partition, &cut_vertices);

    report.verdict = verdict.as_str().to_string();
    report.chain_stats =
        ChainStats { chains: c.chain_count(), cycles: c.cycle_count(), paths: c.path_count() };
    if include_chains {
        report.chains = Some(
            c.chains()
                .iter()
                .map(|ch| ChainJson {
                    index: ch.index,
                    kind: match ch.kind {
                        ChainKind::Cycle => "cycle",
                        ChainKind::Path => "path",
                    },
                    vertices: ch.vertices.clone(),
                    edges: ch.edge_ids.clone(),
                })
                .collect(),
        );
    }
    report.two_edge_components = Some(components_json(&parts));
    report.blocks = Some(blocks_json(&block_partition, &bridges));
    report.block_cut_tree = Some(bct_json(&tree));
    if verdict >= Verdict::TwoEdgeConnectedOnly {
        let cert = certify_ear_decomposition(g, &c, verdict).expect("verdict qualifies");
        report.ear_decomposition = Some(EarJson {
            valid: cert.valid,
            kind: match cert.kind {
                EarKind::OpenEarDecomposition => "open_ear_decomposition",
                EarKind::EarDecomposition => "ear_decomposition",
            },
            violations: cert
                .violations
                .into_iter()
                .map(|(chain, reason)| ViolationJson { chain, reason })
                .collect(),
        });
    }
    report.bridges = bridges;
    report.cut_vertices = cut_vertices;
    report.timing = timing;
    report
}

fn ms_since(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn components_json(parts: &crate::components::TwoEdgeComponents) -> Vec<ComponentJson> {
    parts
        .vertex_groups
        .iter()
        .zip(&parts.edges.groups)
        .map(|(vs, es)| ComponentJson { vertices: vs.clone(), edges: es.clone() })
        .collect()
}

fn blocks_json(partition: &crate::components::EdgePartition, bridges: &[usize]) -> Vec<BlockJson> {
    let mut is_bridge = vec![false; partition.group_of.len()];
    for &e in bridges {
        is_bridge[e] = true;
    }
    partition
        .groups
        .iter()
        .map(|grp| BlockJson {
            edges: grp.clone(),
            trivial: grp.len() == 1 && is_bridge[grp[0]],
        })
        .collect()
}

fn bct_json(tree: &crate::components::BlockCutTree) -> BctJson {
    BctJson {
        nodes: tree
            .nodes
            .iter()
            .map(|node| match node {
                BctNode::Block(b) => {
                    BctNodeJson { kind: "block", block: Some(*b), vertex: None }
                }
                BctNode::Cut(v) => BctNodeJson { kind: "cut", block: None, vertex: Some(*v) },
            })
            .collect(),
        edges: tree.edges.clone(),
    }
}
