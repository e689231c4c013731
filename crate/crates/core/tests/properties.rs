mod common;

use std::collections::BTreeSet;

use itkit::certify::{verify_certificate, Certificate};
use itkit::construct::{
    check_block_sum_condition, edge_delete, join, join_dissolving_host, CertifiedBuilder, Distribution, EdgeDeletePlan,
};
use itkit::graph::PartitionedGraph;
use itkit::listcover::{cover_graph, it_to_coloring, ListInstance};
use itkit::transversal::{
    count_its, find_it, is_block_minimal, max_partial_it, ItOutcome, PartialItQuery, SearchBudget,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn budget() -> SearchBudget {
    SearchBudget::default()
}

/// Small graph: `n` vertices, every block nonempty, arbitrary edges.
fn arb_graph(max_n: usize, max_r: usize) -> impl Strategy<Value = PartitionedGraph> {
    (1..=max_n)
        .prop_flat_map(move |n| (Just(n), 1..=n.min(max_r)))
        .prop_flat_map(|(n, r)| {
            (
                Just(n),
                Just(r),
                prop::collection::vec(any::<bool>(), n * (n - 1) / 2),
                prop::collection::vec(0..r, n - r),
            )
        })
        .prop_map(|(n, r, bits, extra)| {
            let mut blocks: Vec<Vec<usize>> = (0..r).map(|i| vec![i]).collect();
            for (k, b) in extra.into_iter().enumerate() {
                blocks[b].push(r + k);
            }
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, on)| *on).map(|(e, _)| e).collect();
            PartitionedGraph::new(n, edges, blocks).unwrap()
        })
}

fn no_it_graph(seed: u64, max_n: usize) -> PartitionedGraph {
    common::random_no_it(&mut StdRng::seed_from_u64(seed), max_n)
}

fn random_dist(rng: &mut StdRng, block: &[usize], targets: usize) -> Distribution {
    block.iter().map(|&v| (v, rng.gen_range(0..targets))).collect()
}

/// Largest independent partial transversal by enumerating one-or-none
/// per block.
fn brute_max_partial(g: &PartitionedGraph, forbidden: &BTreeSet<usize>) -> usize {
    let choices: Vec<Vec<Option<usize>>> = g
        .blocks()
        .iter()
        .map(|b| std::iter::once(None).chain(b.iter().filter(|v| !forbidden.contains(v)).map(|&v| Some(v))).collect())
        .collect();
    let total: usize = choices.iter().map(Vec::len).product();
    (0..total)
        .filter_map(|mut k| {
            let pick: Vec<usize> = choices
                .iter()
                .filter_map(|c| {
                    let x = c[k % c.len()];
                    k /= c.len();
                    x
                })
                .collect();
            common::independent(g, &pick).then_some(pick.len())
        })
        .max()
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn search_matches_enumeration(g in arb_graph(8, 4)) {
        let want = common::brute_count_its(&g);
        prop_assert_eq!(count_its(&g, &budget()).unwrap(), want);
        match find_it(&g, &budget()) {
            ItOutcome::Found(t) => {
                prop_assert!(want > 0);
                prop_assert!(t.is_full(&g) && t.is_valid(&g));
            }
            ItOutcome::NoneExists { .. } => prop_assert_eq!(want, 0),
            ItOutcome::BudgetExceeded { .. } => prop_assert!(false, "budget"),
        }
        prop_assert_eq!(is_block_minimal(&g, &budget()).unwrap(), common::brute_block_minimal(&g));
    }

    #[test]
    fn max_partial_is_maximum(g in arb_graph(7, 4), mask in any::<u8>()) {
        let forbidden: BTreeSet<usize> = (0..g.n()).filter(|v| mask >> (v % 8) & 1 == 1 && v % 3 == 0).collect();
        let query = PartialItQuery { forbidden: forbidden.clone(), ..Default::default() };
        let t = max_partial_it(&g, &query, &budget()).unwrap();
        prop_assert!(t.is_valid(&g));
        prop_assert!(t.vertices().is_disjoint(&forbidden));
        prop_assert_eq!(t.len(), brute_max_partial(&g, &forbidden));
    }

    #[test]
    fn join_keeps_no_it(a in any::<u64>(), b in any::<u64>(), pick in any::<u64>()) {
        let (host, added) = (no_it_graph(a, 6), no_it_graph(b, 6));
        let mut rng = StdRng::seed_from_u64(pick);
        let s = rng.gen_range(0..added.r());
        let dist = random_dist(&mut rng, added.block(s), host.r());
        let out = join(&host, &added, s, &dist).unwrap();
        prop_assert_eq!(out.r(), host.r() + added.r() - 1);
        prop_assert!(!common::brute_has_it(&out));

        let s = rng.gen_range(0..host.r());
        let dist = random_dist(&mut rng, host.block(s), added.r());
        let out = join_dissolving_host(&host, s, &added, &dist).unwrap();
        prop_assert!(!common::brute_has_it(&out));
        if common::brute_block_minimal(&host) && common::brute_block_minimal(&added) {
            prop_assert!(common::brute_block_minimal(&out));
        }
    }

    #[test]
    fn edge_delete_keeps_no_it(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = loop {
            let n = rng.gen_range(3..=7);
            let g = common::random_graph(&mut rng, n, 3, 0.7);
            if !common::brute_has_it(&g) {
                break g;
            }
        };
        let cross: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| g.block_of(u) != g.block_of(v)).collect();
        prop_assume!(!cross.is_empty());
        let (u, v) = cross[rng.gen_range(0..cross.len())];
        let k = 3 - g.block_of(u) - g.block_of(v);
        let f = g.block(k).iter().map(|&x| (if rng.gen_bool(0.5) { u } else { v }, x)).collect();
        let out = edge_delete(&g, &EdgeDeletePlan { u, v, k, f }).unwrap();
        prop_assert!(!out.has_edge(u, v));
        prop_assert!(!common::brute_has_it(&out));
    }

    #[test]
    fn certificates_replay_and_round_trip(a in any::<u64>(), b in any::<u64>(), pick in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(pick);
        let mut builder = CertifiedBuilder::new(no_it_graph(a, 5));
        let added = no_it_graph(b, 5);
        let s = rng.gen_range(0..added.r());
        let dist = random_dist(&mut rng, added.block(s), builder.graph().r());
        builder.join(&added, s, dist).unwrap();
        let host_block = rng.gen_range(0..builder.graph().r());
        let block = builder.graph().block(host_block).to_vec();
        let dist = random_dist(&mut rng, &block, added.r());
        builder.join_host(host_block, &added, dist).unwrap();
        let c = builder.finish();

        let text = c.certificate.to_json_string();
        let parsed = Certificate::from_json_str(&text).unwrap();
        prop_assert_eq!(&parsed, &c.certificate);
        let (first, _) = verify_certificate(&parsed, &budget()).unwrap();
        let (second, _) = verify_certificate(&c.certificate, &budget()).unwrap();
        prop_assert_eq!(&first, &second);
        prop_assert_eq!(&first, &c.graph);
        prop_assert!(!common::brute_has_it(&first));
    }

    #[test]
    fn graph_json_round_trip(g in arb_graph(9, 5)) {
        let g = g.with_label_prefix("v");
        prop_assert_eq!(PartitionedGraph::from_json_str(&g.to_json_string()).unwrap(), g);
    }

    #[test]
    fn block_sum_matches_subsets(sizes in prop::collection::vec(1usize..6, 1..7), n in 1usize..5) {
        let mut next = 0;
        let blocks: Vec<Vec<usize>> = sizes
            .iter()
            .map(|&s| {
                next += s;
                (next - s..next).collect()
            })
            .collect();
        let g = PartitionedGraph::new(next, Vec::<(usize, usize)>::new(), blocks).unwrap();
        let r = sizes.len();
        let brute = (1u32..1 << r).all(|mask| {
            let chosen: Vec<usize> = (0..r).filter(|i| mask >> i & 1 == 1).collect();
            let total: usize = chosen.iter().map(|&i| sizes[i]).sum();
            total > n * (chosen.len() - 1)
        });
        prop_assert_eq!(check_block_sum_condition(&g, n), brute);
    }

    #[test]
    fn cover_its_are_colourings(
        n in 1usize..6,
        bits in prop::collection::vec(any::<bool>(), 15),
        lists in prop::collection::vec(prop::collection::btree_set(0u64..5, 1..4), 6),
    ) {
        let pairs = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y)));
        let edges: Vec<_> = pairs.zip(bits).filter(|(_, on)| *on).map(|(e, _)| e).collect();
        let lists: Vec<Vec<u64>> = lists.into_iter().take(n).map(|l| l.into_iter().collect()).collect();
        let inst = ListInstance::new(n, edges, lists).unwrap();
        let g = cover_graph(&inst).unwrap();
        let want = common::brute_count_colorings(n, &inst.edges, &inst.lists);
        prop_assert_eq!(count_its(&g, &budget()).unwrap(), want);
        if let ItOutcome::Found(t) = find_it(&g, &budget()) {
            let colouring = it_to_coloring(&inst, &t).unwrap();
            prop_assert!(inst.is_proper(&colouring));
        }
    }
}
