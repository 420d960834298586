//! chaincheck: connectivity analysis for undirected simple graphs.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use chaincheck::oracle::{
    brute_bridges, brute_classify, brute_cut_vertices, brute_is_connected, fixture, generate,
    GraphFamily, FIXTURES,
};
use chaincheck::{
    analyze_from, build_report, check, check_from, decompose_checked, ChainKind, Graph,
    GraphFormat, Verdict,
};

/// Exit code for unusable input or bad arguments.
const EX_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "chaincheck", version, about = "2-connectivity analysis via chain decompositions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a graph: 2-connected, 2-edge-connected, or neither.
    ///
    /// Exit code encodes the verdict: 0 = 2-connected, 1 = 2-edge-
    /// connected only, 2 = not 2-edge-connected, 3 = not connected.
    Check {
        #[command(flatten)]
        input: InputArgs,
        /// Emit the full JSON report instead of text.
        #[arg(long)]
        json: bool,
        /// List every chain in the JSON report.
        #[arg(long)]
        chains: bool,
    },
    /// Dump the chain decomposition.
    Chains {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Dump 2-edge-connected components, blocks, and the block-cut tree.
    Components {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Sweep generated graphs, comparing the fast path against the
    /// brute-force oracle.
    Verify {
        /// Largest vertex count to draw (exact count with --exhaustive).
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Number of random graphs to try.
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Enumerate every labeled graph on exactly n vertices instead
        /// of sampling.
        #[arg(long)]
        exhaustive: bool,
        /// Self-test: falsify one verdict to prove mismatches surface.
        #[arg(long)]
        inject_fault: bool,
    },
    /// Time the check pipeline on generated graphs.
    Bench {
        /// Vertex count; repeat the flag for several sizes.
        #[arg(long = "n", num_args = 1)]
        sizes: Vec<usize>,
        /// Chords added on top of the spanning cycle (default: n,
        /// giving 2n edges).
        #[arg(long)]
        chords: Option<usize>,
        #[arg(long, default_value_t = 9)]
        seed: u64,
        /// Timed runs per size; the median is reported.
        #[arg(long, default_value_t = 5)]
        repeat: usize,
        /// Emit CSV instead of a table.
        #[arg(long)]
        csv: bool,
        /// Bench a named fixture instead of generated graphs.
        #[arg(long)]
        fixture: Option<String>,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Graph file; "-" reads from stdin.
    path: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
    /// Use a built-in graph instead of a file.
    #[arg(long, conflicts_with = "path")]
    fixture: Option<String>,
    /// DFS start vertex.
    #[arg(long, default_value_t = 0)]
    root: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Dimacs,
}

struct Input {
    graph: Graph,
    source: String,
    parse_ms: f64,
    root: usize,
}

fn load(args: &InputArgs) -> Result<Input, String> {
    let t0 = Instant::now();
    let (graph, source) = if let Some(name) = &args.fixture {
        let g = fixture(name).ok_or_else(|| {
            format!("unknown fixture {name:?}; known: {}", FIXTURES.join(", "))
        })?;
        (g, format!("fixture:{name}"))
    } else {
        let path = args.path.as_ref().ok_or("no input: give a path, \"-\", or --fixture")?;
        let format = match args.format {
            Format::Edgelist => GraphFormat::EdgeList,
            Format::Dimacs => GraphFormat::Dimacs,
        };
        if path.as_os_str() == "-" {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| format!("reading stdin: {e}"))?;
            (Graph::parse(&text, format).map_err(|e| e.to_string())?, "stdin".to_string())
        } else {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("{}: {e}", path.display()))?;
            (
                Graph::parse(&text, format).map_err(|e| format!("{}: {e}", path.display()))?,
                path.display().to_string(),
            )
        }
    };
    let parse_ms = t0.elapsed().as_secs_f64() * 1e3;
    if graph.vertex_count() > 0 && args.root >= graph.vertex_count() {
        return Err(format!(
            "--root {} is out of range for {} vertices",
            args.root,
            graph.vertex_count()
        ));
    }
    Ok(Input { graph, source, parse_ms, root: args.root })
}

/// Pretty list of edges as endpoint pairs, truncated when long.
fn edge_list(g: &Graph, ids: &[usize]) -> String {
    const SHOW: usize = 32;
    let mut parts: Vec<String> = ids
        .iter()
        .take(SHOW)
        .map(|&e| {
            let edge = g.edge(e);
            format!("{}-{}", g.label(edge.u), g.label(edge.v))
        })
        .collect();
    if ids.len() > SHOW {
        parts.push(format!("... ({} more)", ids.len() - SHOW));
    }
    parts.join(", ")
}

fn vertex_list(g: &Graph, ids: &[usize]) -> String {
    const SHOW: usize = 32;
    let mut parts: Vec<String> = ids.iter().take(SHOW).map(|&v| g.label(v)).collect();
    if ids.len() > SHOW {
        parts.push(format!("... ({} more)", ids.len() - SHOW));
    }
    parts.join(", ")
}

fn cmd_check(input: Input, json: bool, chains: bool) -> u8 {
    let started = Instant::now();
    let g = &input.graph;
    let verdict = if g.vertex_count() == 0 {
        Verdict::NotConnected
    } else {
        check_from(g, input.root)
    };

    if json {
        let mut report = build_report(g, &input.source, input.root, chains);
        report.timing.parse_ms = input.parse_ms;
        report.timing.total_ms = input.parse_ms + started.elapsed().as_secs_f64() * 1e3;
        println!("{}", report.to_json());
    } else {
        let r = analyze_from(g, input.root);
        println!("{}", r.verdict);
        println!("n={} m={} source={}", g.vertex_count(), g.edge_count(), input.source);
        if r.verdict != Verdict::NotConnected {
            if r.bridges.is_empty() {
                println!("bridges: none");
            } else {
                println!("bridges ({}): {}", r.bridges.len(), edge_list(g, &r.bridges));
            }
            if r.cut_vertices.is_empty() {
                println!("cut vertices: none");
            } else {
                println!(
                    "cut vertices ({}): {}",
                    r.cut_vertices.len(),
                    vertex_list(g, &r.cut_vertices)
                );
            }
            println!(
                "chains: {} ({} cycles, {} paths)",
                r.chain_stats.chains, r.chain_stats.cycles, r.chain_stats.paths
            );
        }
    }
    verdict.exit_code() as u8
}

fn cmd_chains(input: Input, json: bool) -> Result<u8, String> {
    let g = &input.graph;
    let c = decompose_checked(g, input.root).map_err(|e| e.to_string())?;
    if json {
        let report = build_report(g, &input.source, input.root, true);
        let value = serde_json::json!({
            "input": { "n": g.vertex_count(), "m": g.edge_count(), "source": input.source },
            "chains": report.chains,
            "unvisited_edges": c.unvisited_edges(),
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("chain dump serializes"));
        return Ok(0);
    }
    for chain in c.chains() {
        let kind = match chain.kind {
            ChainKind::Cycle => "cycle",
            ChainKind::Path => "path",
        };
        let walk: Vec<String> = chain.vertices.iter().map(|&v| g.label(v)).collect();
        println!("chain {} ({kind}): {}", chain.index, walk.join(" "));
    }
    let left = c.unvisited_edges();
    if left.is_empty() {
        println!("all edges covered");
    } else {
        println!("uncovered edges ({}): {}", left.len(), edge_list(g, &left));
    }
    Ok(0)
}

fn cmd_components(input: Input, json: bool) -> Result<u8, String> {
    let g = &input.graph;
    let report = build_report(g, &input.source, input.root, false);
    if json {
        println!("{}", report.to_json());
        return Ok(0);
    }
    println!("{}", report.verdict);
    match &report.two_edge_components {
        Some(comps) => {
            println!("2-edge-connected components: {}", comps.len());
            for (i, comp) in comps.iter().enumerate() {
                println!("  component {}: vertices [{}]", i, vertex_list(g, &comp.vertices));
            }
        }
        None => println!("2-edge-connected components: not applicable"),
    }
    if let Some(blocks) = &report.blocks {
        println!("blocks: {}", blocks.len());
        for (i, b) in blocks.iter().enumerate() {
            let tag = if b.trivial { " (bridge)" } else { "" };
            println!("  block {}{}: edges [{}]", i, tag, edge_list(g, &b.edges));
        }
    }
    if let Some(tree) = &report.block_cut_tree {
        println!(
            "block-cut tree: {} nodes, {} edges",
            tree.nodes.len(),
            tree.edges.len()
        );
    }
    if let Some(ear) = &report.ear_decomposition {
        let state = if ear.valid { "valid" } else { "INVALID" };
        println!("ear decomposition: {state} {}", ear.kind);
    }
    Ok(0)
}

/// One verdict notch off, for the verify self-test.
fn falsify(v: Verdict) -> Verdict {
    match v {
        Verdict::NotConnected => Verdict::NotTwoEdgeConnected,
        Verdict::NotTwoEdgeConnected => Verdict::TwoEdgeConnectedOnly,
        Verdict::TwoEdgeConnectedOnly => Verdict::TwoConnected,
        Verdict::TwoConnected => Verdict::NotConnected,
    }
}

fn cmd_verify(n: usize, count: usize, seed: u64, exhaustive: bool, inject_fault: bool) -> Result<u8, String> {
    let mut total = 0usize;
    let mut mismatches = 0usize;
    let mut first: Option<Graph> = None;

    let mut inspect = |g: Graph, falsify_this: bool| {
        total += 1;
        let mut fast = check(&g);
        if falsify_this {
            fast = falsify(fast);
        }
        let mut bad = fast != brute_classify(&g);
        if !bad && g.vertex_count() >= 1 && brute_is_connected(&g) {
            let r = chaincheck::analyze(&g);
            bad = r.bridges != brute_bridges(&g)
                || (g.vertex_count() >= 2 && r.cut_vertices != brute_cut_vertices(&g));
        }
        if bad {
            mismatches += 1;
            if first.is_none() {
                first = Some(g);
            }
        }
    };

    if exhaustive {
        let stream =
            generate(&GraphFamily::ExhaustiveLabeled { n }).map_err(|e| e.to_string())?;
        for (i, g) in stream.enumerate() {
            inspect(g, inject_fault && i == 0);
        }
    } else {
        if n < 2 {
            return Err("--n must be at least 2 for random sweeps".into());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in 0..count {
            let nv = rng.random_range(2..=n);
            let full = nv * (nv - 1) / 2;
            let m = if rng.random_bool(0.5) {
                rng.random_range(nv - 1..=full.min(nv + 3))
            } else {
                rng.random_range(0..=full)
            };
            let g = generate(&GraphFamily::RandomGnm { n: nv, m, seed: rng.random() })
                .map_err(|e| e.to_string())?
                .next()
                .expect("random streams are endless");
            inspect(g, inject_fault && i == 0);
        }
    }

    println!("{total} graphs, {mismatches} mismatches");
    if let Some(g) = first {
        println!("first counterexample:");
        print!("{}", g.to_edge_list());
    }
    Ok(if mismatches == 0 { 0 } else { 1 })
}

fn cmd_bench(
    sizes: Vec<usize>,
    chords: Option<usize>,
    seed: u64,
    repeat: usize,
    csv: bool,
    fixture_name: Option<String>,
) -> Result<u8, String> {
    if repeat == 0 {
        return Err("--repeat must be at least 1".into());
    }

    let time_graph = |g: &Graph| -> (usize, usize, f64, f64) {
        let mut runs: Vec<f64> = (0..repeat)
            .map(|_| {
                let t = Instant::now();
                std::hint::black_box(check(g));
                t.elapsed().as_secs_f64() * 1e3
            })
            .collect();
        runs.sort_by(|a, b| a.partial_cmp(b).expect("timings are finite"));
        let median = runs[runs.len() / 2];
        let m = g.edge_count().max(1);
        (g.vertex_count(), g.edge_count(), median, median * 1e6 / m as f64)
    };

    let mut rows: Vec<(usize, usize, f64, f64)> = Vec::new();
    if let Some(name) = fixture_name {
        let g = fixture(&name).ok_or_else(|| format!("unknown fixture {name:?}"))?;
        rows.push(time_graph(&g));
    } else {
        let sizes = if sizes.is_empty() { vec![100_000] } else { sizes };
        for n in sizes {
            let extra = chords.unwrap_or(n);
            let g = generate(&GraphFamily::RandomTwoConnected { n, extra_chords: extra, seed })
                .map_err(|e| e.to_string())?
                .next()
                .expect("random streams are endless");
            rows.push(time_graph(&g));
        }
    }

    if csv {
        println!("n,m,median_ms,per_edge_ns");
        for (n, m, median, per_edge) in rows {
            println!("{n},{m},{median:.3},{per_edge:.1}");
        }
    } else {
        println!("{:>10} {:>10} {:>12} {:>12}", "n", "m", "median_ms", "per_edge_ns");
        for (n, m, median, per_edge) in rows {
            println!("{n:>10} {m:>10} {median:>12.3} {per_edge:>12.1}");
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    // Die quietly when output feeds a closed pipe (`chaincheck ... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result: Result<u8, String> = match cli.cmd {
        Cmd::Check { input, json, chains } => {
            load(&input).map(|input| cmd_check(input, json, chains))
        }
        Cmd::Chains { input, json } => load(&input).and_then(|input| cmd_chains(input, json)),
        Cmd::Components { input, json } => {
            load(&input).and_then(|input| cmd_components(input, json))
        }
        Cmd::Verify { n, count, seed, exhaustive, inject_fault } => {
            cmd_verify(n, count, seed, exhaustive, inject_fault)
        }
        Cmd::Bench { sizes, chords, seed, repeat, csv, fixture } => {
            cmd_bench(sizes, chords, seed, repeat, csv, fixture)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(why) => {
            eprintln!("chaincheck: {why}");
            ExitCode::from(EX_USAGE)
        }
    }
}
