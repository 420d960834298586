//! Randomized properties pitting the chain pipeline against the
//! brute-force oracles.

use proptest::prelude::*;

use chaincheck::oracle::{
    brute_blocks, brute_bridges, brute_classify, brute_cut_vertices, brute_is_connected,
};
use chaincheck::{
    analyze, analyze_from, blocks, check, check_from, decompose, is_two_connected_via_min_degree,
    run_dfs, Graph, GraphFormat, Verdict,
};

/// Graph on `n` vertices whose edge set is the `mask`-selected subset of
/// all vertex pairs in a fixed order.
fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut pairs = Vec::new();
    let mut slot = 0;
    for v in 1..n {
        for u in 0..v {
            if (mask >> slot) & 1 == 1 {
                pairs.push((u, v));
            }
            slot += 1;
        }
    }
    Graph::build(n, &pairs).expect("mask subsets are simple")
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (0usize..=8, any::<u64>()).prop_map(|(n, mask)| graph_from_mask(n, mask))
}

fn arb_connected_graph() -> impl Strategy<Value = Graph> {
    arb_graph().prop_filter("connected", |g| g.vertex_count() >= 1 && brute_is_connected(g))
}

proptest! {
    #[test]
    fn serialization_round_trips(g in arb_graph()) {
        let text = g.to_edge_list();
        let back = Graph::parse(&text, GraphFormat::EdgeList).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn degree_sum_is_twice_edge_count(g in arb_graph()) {
        let sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn verdict_matches_oracle(g in arb_graph()) {
        prop_assert_eq!(check(&g), brute_classify(&g));
    }

    #[test]
    fn verdict_is_root_invariant(g in arb_connected_graph()) {
        let expect = check(&g);
        for root in 0..g.vertex_count() {
            prop_assert_eq!(check_from(&g, root), expect);
        }
    }

    #[test]
    fn chains_partition_the_non_bridge_edges(
        g in arb_connected_graph().prop_filter("n >= 3", |g| g.vertex_count() >= 3),
        root_pick in any::<prop::sample::Index>(),
    ) {
        let root = root_pick.index(g.vertex_count());
        let d = run_dfs(&g, root);
        let c = decompose(&g, &d).unwrap();
        // Every edge is in exactly one chain or in none; the leftovers
        // are the bridges.
        let mut hits = vec![0usize; g.edge_count()];
        for chain in c.chains() {
            prop_assert_eq!(chain.edge_ids.len(), chain.vertices.len() - 1);
            for &e in &chain.edge_ids {
                hits[e] += 1;
            }
        }
        for (e, &h) in hits.iter().enumerate() {
            prop_assert!(h <= 1, "edge {} in {} chains", e, h);
            prop_assert_eq!(h == 0, c.chain_of_edge(e).is_none());
        }
        prop_assert_eq!(c.chain_count(), g.edge_count() + 1 - g.vertex_count());
        prop_assert_eq!(c.unvisited_edges(), brute_bridges(&g));
    }

    #[test]
    fn bridges_and_cuts_match_oracle(g in arb_connected_graph()) {
        let r = analyze(&g);
        prop_assert_eq!(r.bridges, brute_bridges(&g));
        if g.vertex_count() >= 2 {
            prop_assert_eq!(r.cut_vertices, brute_cut_vertices(&g));
        } else {
            prop_assert!(r.cut_vertices.is_empty());
        }
    }

    #[test]
    fn min_degree_route_agrees(g in arb_connected_graph()) {
        let expect = check(&g) == Verdict::TwoConnected;
        prop_assert_eq!(is_two_connected_via_min_degree(&g, 0), Ok(expect));
    }

    #[test]
    fn blocks_match_oracle(
        g in arb_connected_graph().prop_filter("n >= 3", |g| g.vertex_count() >= 3),
    ) {
        let d = run_dfs(&g, 0);
        let c = decompose(&g, &d).unwrap();
        let r = analyze(&g);
        let fast = blocks(&g, &c, &r.bridges, &r.cut_vertices);
        prop_assert_eq!(fast, brute_blocks(&g));
    }

    #[test]
    fn analysis_is_deterministic(g in arb_graph(), root_pick in any::<prop::sample::Index>()) {
        if g.vertex_count() == 0 {
            return Ok(());
        }
        let root = root_pick.index(g.vertex_count());
        let first = analyze_from(&g, root);
        let second = analyze_from(&g, root);
        prop_assert_eq!(first, second);
        if g.vertex_count() >= 3 && brute_is_connected(&g) {
            let a = decompose(&g, &run_dfs(&g, root)).unwrap();
            let b = decompose(&g, &run_dfs(&g, root)).unwrap();
            for (x, y) in a.chains().iter().zip(b.chains()) {
                prop_assert_eq!(&x.vertices, &y.vertices);
                prop_assert_eq!(&x.edge_ids, &y.edge_ids);
            }
        }
    }

    #[test]
    fn dimacs_round_trips(g in arb_graph().prop_filter("n >= 1", |g| g.vertex_count() >= 1)) {
        let mut text = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
        for e in g.edges() {
            text.push_str(&format!("e {} {}\n", e.u + 1, e.v + 1));
        }
        let back = Graph::parse(&text, GraphFormat::Dimacs).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges(), g.edges());
    }
}
