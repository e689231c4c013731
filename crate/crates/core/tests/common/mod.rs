//! Independent brute-force oracles and random instance builders shared by
//! the integration suites. Nothing here calls the search engine.

#![allow(dead_code)]

use std::collections::BTreeMap;

use itkit::graph::PartitionedGraph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

/// Every choice of one vertex per block, in odometer order.
pub fn transversals(g: &PartitionedGraph) -> impl Iterator<Item = Vec<usize>> + '_ {
    let blocks = g.blocks();
    let total: usize = blocks.iter().map(Vec::len).product();
    (0..total).map(move |mut k| {
        blocks
            .iter()
            .map(|b| {
                let v = b[k % b.len()];
                k /= b.len();
                v
            })
            .collect()
    })
}

pub fn independent(g: &PartitionedGraph, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

pub fn brute_count_its(g: &PartitionedGraph) -> u128 {
    transversals(g).filter(|t| independent(g, t)).count() as u128
}

pub fn brute_has_it(g: &PartitionedGraph) -> bool {
    transversals(g).any(|t| independent(g, &t))
}

/// Some IT after deleting any one block, none before.
pub fn brute_block_minimal(g: &PartitionedGraph) -> bool {
    if brute_has_it(g) {
        return false;
    }
    (0..g.r()).all(|skip| {
        let keep: Vec<usize> = (0..g.r()).filter(|&i| i != skip).collect();
        let blocks = g.blocks();
        let total: usize = keep.iter().map(|&i| blocks[i].len()).product();
        (0..total).any(|mut k| {
            let pick: Vec<usize> = keep
                .iter()
                .map(|&i| {
                    let v = blocks[i][k % blocks[i].len()];
                    k /= blocks[i].len();
                    v
                })
                .collect();
            independent(g, &pick)
        })
    })
}

/// Random graph on `n` vertices split into `r` nonempty blocks.
pub fn random_graph(rng: &mut StdRng, n: usize, r: usize, p: f64) -> PartitionedGraph {
    assert!(n >= r && r >= 1);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut blocks: Vec<Vec<usize>> = order[..r].iter().map(|&v| vec![v]).collect();
    for &v in &order[r..] {
        blocks[rng.gen_range(0..r)].push(v);
    }
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    PartitionedGraph::new(n, edges, blocks).unwrap()
}

/// Rejection-samples a small graph with no IT.
pub fn random_no_it(rng: &mut StdRng, max_n: usize) -> PartitionedGraph {
    loop {
        let r = rng.gen_range(2..=3);
        let n = rng.gen_range(r..=max_n);
        let g = random_graph(rng, n, r, 0.75);
        if !brute_has_it(&g) {
            return g;
        }
    }
}

/// Random graph with maximum degree at most `d` and every block of size `size`.
pub fn random_bounded_degree(rng: &mut StdRng, d: usize, r: usize, size: usize) -> PartitionedGraph {
    let n = r * size;
    let blocks: Vec<Vec<usize>> = (0..r).map(|i| (i * size..(i + 1) * size).collect()).collect();
    let mut deg = vec![0; n];
    let mut edges = std::collections::BTreeSet::new();
    for _ in 0..n * d * 2 {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && deg[u] < d && deg[v] < d && edges.insert((u.min(v), u.max(v))) {
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    PartitionedGraph::new(n, edges, blocks).unwrap()
}

/// Proper list colourings by enumeration.
pub fn brute_count_colorings(n: usize, edges: &[[usize; 2]], lists: &[Vec<u64>]) -> u128 {
    let total: usize = lists.iter().map(Vec::len).product();
    (0..total)
        .filter(|&k| {
            let mut k = k;
            let phi: BTreeMap<usize, u64> = (0..n)
                .map(|x| {
                    let c = lists[x][k % lists[x].len()];
                    k /= lists[x].len();
                    (x, c)
                })
                .collect();
            edges.iter().all(|&[x, y]| phi[&x] != phi[&y])
        })
        .count() as u128
}
