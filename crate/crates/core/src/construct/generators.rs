//! Named constructions. Each one drives a [`CertifiedBuilder`], so the
//! returned certificate replays to exactly the returned graph. All
//! choices are deterministic: ties go to the lowest block index and the
//! lowest vertex ids.

use std::collections::{BTreeMap, BTreeSet};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use super::{check_block_sum_condition, CertifiedBuilder, Construction, Distribution, EdgeDeletePlan};
use crate::error::{BudgetExceeded, ConstructError};
use crate::graph::{PartitionedGraph, Vertex};
use crate::transversal::{find_it, ItOutcome, SearchBudget};

fn invalid<T>(msg: impl Into<String>) -> Result<T, ConstructError> {
    Err(ConstructError::InvalidParameter(msg.into()))
}

fn broken<T>(msg: impl Into<String>) -> Result<T, ConstructError> {
    Err(ConstructError::InvariantViolated(msg.into()))
}

/// `K_{a,b}` with its two sides as blocks; side `A` is `0..a`.
pub fn gen_complete_bipartite(a: usize, b: usize) -> Result<PartitionedGraph, ConstructError> {
    if a == 0 || b == 0 {
        return invalid("both sides of K_{a,b} need at least one vertex");
    }
    let edges = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)));
    let g = PartitionedGraph::new(a + b, edges, vec![(0..a).collect(), (a..a + b).collect()])?;
    let labels = (0..a + b)
        .map(|v| {
            let side = if v < a { format!("left/{v}") } else { format!("right/{}", v - a) };
            (v, format!("K{a},{b}/{side}"))
        })
        .collect();
    Ok(g.with_labels(labels)?)
}

/// `r - 1` disjoint copies of `K_r(m)` with the standard `r`-partition.
/// Vertex `c*r*m + i*m + t` is the `t`-th vertex of part `i` in copy `c`.
pub fn gen_multipartite_base(r: usize, m: usize) -> Result<PartitionedGraph, ConstructError> {
    if r < 2 || m == 0 {
        return invalid("K_r(m) needs r >= 2 and m >= 1");
    }
    let id = |c: usize, i: usize, t: usize| c * r * m + i * m + t;
    let mut edges = Vec::new();
    for c in 0..r - 1 {
        for i in 0..r {
            for j in i + 1..r {
                for t in 0..m {
                    edges.extend((0..m).map(|u| (id(c, i, t), id(c, j, u))));
                }
            }
        }
    }
    let blocks = (0..r).map(|i| (0..r - 1).flat_map(|c| (0..m).map(move |t| id(c, i, t))).collect()).collect();
    let g = PartitionedGraph::new((r - 1) * r * m, edges, blocks)?;
    let labels = (0..g.n())
        .map(|v| {
            let (c, i, t) = (v / (r * m), v % (r * m) / m, v % m);
            (v, format!("copy{c}/K{r}({m})/part{i}/{t}"))
        })
        .collect();
    Ok(g.with_labels(labels)?)
}

fn kdd_copy(d: usize, copy: usize) -> Result<PartitionedGraph, ConstructError> {
    Ok(gen_complete_bipartite(d, d)?.with_label_prefix(&format!("copy{copy}")))
}

/// Grows the block containing `rep` to `2d - 1` by absorbing `d - 1` new
/// copies of `K_{d,d}`. At step `k` the block meets `k` components; one
/// lowest-id vertex of each goes to side `k_side` of the new copy and the
/// rest to the other side. The `k_side` block becomes the new small block.
fn szabo_tardos_side(
    b: &mut CertifiedBuilder,
    rep: Vertex,
    d: usize,
    k_side: usize,
    first_copy: usize,
) -> Result<(), ConstructError> {
    let mut rep = rep;
    for k in 1..d {
        let g = b.graph();
        let s = g.block_of(rep);
        let comp = g.component_index();
        let mut met = BTreeSet::new();
        let picked: BTreeSet<Vertex> = g.block(s).iter().copied().filter(|&v| met.insert(comp[v])).collect();
        if picked.len() != k || g.block(s).len() != d + k - 1 {
            return broken(format!("small block at step {k} meets {} components", picked.len()));
        }
        let dist = g.block(s).iter().map(|&v| (v, if picked.contains(&v) { k_side } else { 1 - k_side })).collect();
        let off = g.n();
        b.join_host(s, &kdd_copy(d, first_copy + k - 1)?, dist)?;
        rep = off + k_side * d;
    }
    Ok(())
}

fn szabo_tardos_builder(d: usize) -> Result<CertifiedBuilder, ConstructError> {
    if d == 0 {
        return invalid("d must be at least 1");
    }
    let mut b = CertifiedBuilder::new(kdd_copy(d, 0)?);
    szabo_tardos_side(&mut b, 0, d, 0, 1)?;
    szabo_tardos_side(&mut b, d, d, 1, d)?;
    Ok(b)
}

/// `2d - 1` copies of `K_{d,d}` with `2d` blocks of size `2d - 1`.
pub fn gen_szabo_tardos(d: usize) -> Result<Construction, ConstructError> {
    Ok(szabo_tardos_builder(d)?.finish())
}

/// The same graph as [`gen_szabo_tardos`] with the equitable-halving
/// partition: always dissolve a smallest block, half into each side.
pub fn gen_yuster(d: usize) -> Result<Construction, ConstructError> {
    if !d.is_power_of_two() {
        return Err(ConstructError::NotPowerOfTwo(d));
    }
    let target = 2 * d - 1;
    let mut b = CertifiedBuilder::new(kdd_copy(d, 0)?);
    let mut copy = 1;
    loop {
        let g = b.graph();
        let Some(s) = (0..g.r()).filter(|&i| g.block(i).len() < target).min_by_key(|&i| (g.block(i).len(), i)) else {
            break;
        };
        if copy > 2 * d - 2 {
            return broken("equitable halving needs more than 2d - 2 joins");
        }
        let half = g.block(s).len().div_ceil(2);
        let dist = g.block(s).iter().enumerate().map(|(t, &v)| (v, usize::from(t >= half))).collect();
        b.join_host(s, &kdd_copy(d, copy)?, dist)?;
        copy += 1;
    }
    Ok(b.finish())
}

fn cycle_builder(r: usize) -> Result<CertifiedBuilder, ConstructError> {
    if r == 0 {
        return invalid("r must be at least 1");
    }
    let c4 = PartitionedGraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)], vec![vec![0, 2], vec![1, 3]])?;
    let path = PartitionedGraph::new(3, [(0, 2), (1, 2)], vec![vec![0, 1], vec![2]])?;
    let mut b = CertifiedBuilder::new(c4);
    for _ in 1..r {
        let g = b.graph();
        let n0 = g.n();
        let Some(target) = (0..g.r()).find(|&i| g.block(i).len() == 2) else {
            return broken("cycle partition lost its size-2 blocks");
        };
        b.join(&path, 1, Distribution::from([(2, target)]))?;
        let g = b.graph();
        let Some((u, v)) = g.edges().find(|&(u, v)| v < n0 && g.block_of(u) != g.block_of(v)) else {
            return broken("cycle has no cross-block edge");
        };
        let plan = EdgeDeletePlan { u, v, k: g.block_of(n0), f: vec![(u, n0), (v, n0 + 1)] };
        b.edge_delete(plan)?;
    }
    Ok(b)
}

/// `C_{3r+1}` with `r - 1` blocks of size 3 and two of size 2, no IT.
pub fn gen_cycle_partition(r: usize) -> Result<Construction, ConstructError> {
    Ok(cycle_builder(r)?.finish())
}

fn size_two_blocks(g: &PartitionedGraph) -> Vec<usize> {
    (0..g.r()).filter(|&i| g.block(i).len() == 2).collect()
}

/// `C_{l1} ⊔ C_{l2} ⊔ C_{l3}` with every block of size 3 and no IT.
pub fn gen_three_cycles(l1: usize, l2: usize, l3: usize) -> Result<Construction, ConstructError> {
    for l in [l1, l2, l3] {
        if l < 4 || l % 3 != 1 {
            return Err(ConstructError::BadLength(l));
        }
    }
    let mut b = cycle_builder((l1 - 1) / 3)?;
    let xs = size_two_blocks(b.graph());
    let reps = [b.graph().block(xs[0])[0], b.graph().block(xs[1])[0]];
    for (rep, l) in reps.into_iter().zip([l2, l3]) {
        let cycle = gen_cycle_partition((l - 1) / 3)?.graph;
        let ys = size_two_blocks(&cycle);
        let s = b.graph().block_of(rep);
        let x = b.graph().block(s);
        let dist = Distribution::from([(x[0], ys[0]), (x[1], ys[1])]);
        b.join_host(s, &cycle, dist)?;
    }
    Ok(b.finish())
}

/// Dissolves the block containing `rep` into `payload`, dealing its
/// vertices round-robin in (component, id) order so that no component
/// sends more than its fair share to one target.
fn deal_by_component(b: &mut CertifiedBuilder, rep: Vertex, payload: &PartitionedGraph) -> Result<(), ConstructError> {
    let g = b.graph();
    let s = g.block_of(rep);
    let comp = g.component_index();
    let mut order = g.block(s).to_vec();
    order.sort_by_key(|&v| (comp[v], v));
    let dist = order.iter().enumerate().map(|(t, &v)| (v, t % payload.r())).collect();
    b.join_host(s, payload, dist)
}

fn block_reps(g: &PartitionedGraph) -> Vec<Vertex> {
    g.blocks().iter().map(|blk| blk[0]).collect()
}

/// Local degree and multiplicity `m`, maximum degree `d`, and blocks of
/// size at least `d + 2m - ceil((2m^2 + m) / (d + m))`.
pub fn gen_locally_sparse(d: usize, m: usize) -> Result<Construction, ConstructError> {
    if m == 0 || d < m {
        return invalid("need d >= m >= 1");
    }
    if !d.is_multiple_of(m) {
        return Err(ConstructError::NotDivisible(d, m));
    }
    let mut b = szabo_tardos_builder(d)?;
    for (idx, rep) in block_reps(b.graph()).into_iter().enumerate() {
        let payload = gen_multipartite_base(d / m + 1, m)?.with_label_prefix(&format!("sparse{idx}"));
        deal_by_component(&mut b, rep, &payload)?;
    }
    Ok(b.finish())
}

/// Lower bound on block sizes in [`gen_locally_sparse`].
pub fn locally_sparse_bound(d: usize, m: usize) -> usize {
    d + 2 * m - (2 * m * m + m).div_ceil(d + m)
}

/// A list cover graph with `4(d+1)^2` blocks of size `d + 1`, maximum
/// degree `d` and no IT.
pub fn gen_list_coloring_cx(d: usize) -> Result<Construction, ConstructError> {
    if d < 2 {
        return invalid("d must be at least 2");
    }
    let mut b = CertifiedBuilder::new(gen_complete_bipartite(2, 2)?.with_label_prefix("seed0"));
    for (copy, pair) in [(1, [0, 1]), (2, [2, 3])] {
        let s = b.graph().block_of(pair[0]);
        let payload = gen_complete_bipartite(d, d)?.with_label_prefix(&format!("seed{copy}"));
        b.join_host(s, &payload, Distribution::from([(pair[0], 0), (pair[1], 1)]))?;
    }
    let doomed: BTreeSet<Vertex> = b.graph().blocks().iter().flat_map(|blk| blk.iter().skip(d + 1).copied()).collect();
    if !doomed.is_empty() {
        b.delete_vertices(doomed)?;
    }
    let cliques = |tag: String| -> Result<PartitionedGraph, ConstructError> {
        Ok(gen_multipartite_base(d + 1, 1)?.with_label_prefix(&tag))
    };
    for (idx, rep) in block_reps(b.graph()).into_iter().enumerate() {
        deal_by_component(&mut b, rep, &cliques(format!("sparse{idx}"))?)?;
    }
    for (idx, rep) in block_reps(b.graph()).into_iter().enumerate() {
        let s = b.graph().block_of(rep);
        let dist = b.graph().block(s).iter().enumerate().map(|(t, &v)| (v, t)).collect();
        b.join_host(s, &cliques(format!("cover{idx}"))?, dist)?;
    }
    Ok(b.finish())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarFreeReport {
    pub k: usize,
    pub m: usize,
    pub d: usize,
    pub block_size: usize,
    pub conjecture_bound: usize,
    pub counterexample: bool,
}

/// Szabó-Tardos on `K_{m,m}` plus `k - 1` disjoint cliques of size
/// `m/(k-1)` on each side of every component. The result is
/// `K_{1,k}`-free with maximum degree `km/(k-1) - 1`.
pub fn gen_star_free_cx(k: usize, m: usize) -> Result<(Construction, StarFreeReport), ConstructError> {
    if k < 3 || m == 0 {
        return invalid("need k >= 3 and m >= 1");
    }
    if !m.is_multiple_of(k - 1) {
        return Err(ConstructError::NotDivisible(m, k - 1));
    }
    let mut b = szabo_tardos_builder(m)?;
    let size = m / (k - 1);
    let mut extra = Vec::new();
    for comp in b.graph().components() {
        let (left, right) = comp.sides.expect("Szabó-Tardos components are complete bipartite");
        for side in [left, right] {
            for chunk in side.chunks(size) {
                for (i, &x) in chunk.iter().enumerate() {
                    extra.extend(chunk[i + 1..].iter().map(|&y| (x, y)));
                }
            }
        }
    }
    b.add_edges(extra)?;
    let d = k * m / (k - 1) - 1;
    let report = StarFreeReport {
        k,
        m,
        d,
        block_size: 2 * m - 1,
        conjecture_bound: d + k - 1,
        counterexample: 2 * m - 1 > d + k - 1,
    };
    Ok((b.finish(), report))
}

/// Szabó-Tardos followed by one `K_{d,d-1}` join per original block, so
/// that every `K_{d,d}` component meets at least four blocks.
pub fn gen_ahhs_cx(d: usize) -> Result<Construction, ConstructError> {
    if d < 2 {
        return invalid("d must be at least 2");
    }
    let mut b = szabo_tardos_builder(d)?;
    for (idx, rep) in block_reps(b.graph()).into_iter().enumerate() {
        let g = b.graph();
        let s = g.block_of(rep);
        let comp = g.component_index();
        let mut per_comp: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
        for &v in g.block(s) {
            per_comp.entry(comp[v]).or_default().push(v);
        }
        let full: Vec<&Vec<Vertex>> = per_comp.values().filter(|vs| vs.len() == d).collect();
        let [inside] = full.as_slice() else {
            return broken(format!("block {s} meets {} components in d vertices", full.len()));
        };
        let to_a: BTreeSet<Vertex> = inside.iter().take(d - 1).copied().collect();
        let dist = g.block(s).iter().map(|&v| (v, usize::from(!to_a.contains(&v)))).collect();
        let payload = gen_complete_bipartite(d, d - 1)?.with_label_prefix(&format!("ahhs{idx}"));
        b.join_host(s, &payload, dist)?;
    }
    Ok(b.finish())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinPowerReport {
    /// Copies of the seed used before any padding.
    pub copies: usize,
    /// The copy count predicted by the block-sum bound.
    pub formula_copies: usize,
    pub matches_formula: bool,
    pub padding: usize,
}

/// Copy count `1 + sum_{i in J} ceil((n - |V_i|) / (|V(G_J)| - n(|J|-1)))`.
pub fn join_power_formula(seed: &PartitionedGraph, n: usize) -> usize {
    let small: Vec<usize> = seed.block_sizes().into_iter().filter(|&s| s < n).collect();
    if small.is_empty() {
        return 1;
    }
    let denom = small.iter().sum::<usize>() - n * (small.len() - 1);
    1 + small.iter().map(|&s| (n - s).div_ceil(denom)).sum::<usize>()
}

/// Joins copies of `seed` to itself until every block has at least `n`
/// vertices. Each step dissolves the one small block left by the previous
/// step (or a smallest small block), topping up every small block of the
/// new copy to `n` and sending the rest to a smallest one. With
/// `copies = Some(k)` the result is padded to exactly `k` copies.
pub fn gen_join_power(
    seed: &PartitionedGraph,
    n: usize,
    copies: Option<usize>,
    budget: &SearchBudget,
) -> Result<(Construction, JoinPowerReport), ConstructError> {
    if n == 0 {
        return invalid("n must be at least 1");
    }
    if !check_block_sum_condition(seed, n) {
        return Err(ConstructError::ConditionFails(n));
    }
    match find_it(seed, budget) {
        ItOutcome::Found(_) => return Err(ConstructError::SeedHasIT),
        ItOutcome::BudgetExceeded { nodes } => return Err(BudgetExceeded { nodes }.into()),
        ItOutcome::NoneExists { .. } => {}
    }
    let sizes = seed.block_sizes();
    let small: Vec<usize> = (0..seed.r()).filter(|&i| sizes[i] < n).collect();
    let j = small.iter().copied().min_by_key(|&i| (sizes[i], i));
    let copy = |c: usize| seed.clone().with_label_prefix(&format!("copy{c}"));

    let mut b = CertifiedBuilder::new(copy(0));
    let mut count = 1;
    let mut last: Option<Vertex> = None;
    let limit = join_power_formula(seed, n) + seed.n() + 1;
    while let Some(j) = j {
        let g = b.graph();
        let s = match last.map(|v| g.block_of(v)).filter(|&s| g.block(s).len() < n) {
            Some(s) => s,
            None => match (0..g.r()).filter(|&i| g.block(i).len() < n).min_by_key(|&i| (g.block(i).len(), i)) {
                Some(s) => s,
                None => break,
            },
        };
        if count >= limit {
            return broken("join power does not terminate");
        }
        let mut pool = g.block(s).iter().copied();
        let mut dist = Distribution::new();
        for &i in small.iter().filter(|&&i| i != j) {
            for _ in sizes[i]..n {
                let Some(v) = pool.next() else {
                    return broken(format!("block {s} is too small to top up the new copy"));
                };
                dist.insert(v, i);
            }
        }
        let rest: Vec<Vertex> = pool.collect();
        if rest.is_empty() {
            return broken(format!("block {s} leaves nothing for the smallest block"));
        }
        dist.extend(rest.into_iter().map(|v| (v, j)));
        let off = g.n();
        b.join_host(s, &copy(count), dist)?;
        last = Some(off + seed.block(j)[0]);
        count += 1;
    }

    let natural = count;
    let formula = join_power_formula(seed, n);
    if let Some(target) = copies {
        if target < natural {
            return invalid(format!("{natural} copies are needed, more than the requested {target}"));
        }
        while count < target {
            let g = b.graph();
            let s = (0..g.r()).max_by_key(|&i| (g.block(i).len(), std::cmp::Reverse(i))).expect("r >= 1");
            let mut pool = g.block(s).iter().copied();
            let mut dist = Distribution::new();
            for &i in &small {
                for _ in sizes[i]..n {
                    let Some(v) = pool.next() else {
                        return broken(format!("block {s} is too small to pad with another copy"));
                    };
                    dist.insert(v, i);
                }
            }
            let sink = j.unwrap_or(0);
            dist.extend(pool.map(|v| (v, sink)));
            b.join_host(s, &copy(count), dist)?;
            count += 1;
        }
    }
    let report = JoinPowerReport {
        copies: natural,
        formula_copies: formula,
        matches_formula: natural == formula,
        padding: count - natural,
    };
    Ok((b.finish(), report))
}

/// `r - 1` copies of `K_{d,d}` with `d = ceil(rn / (2(r-1)))` and `r`
/// blocks of size at least `n`.
pub fn gen_general_szabo_tardos(n: usize, r: usize) -> Result<Construction, ConstructError> {
    if n == 0 || r < 2 || !r.is_multiple_of(2) {
        return invalid("need n >= 1 and r even, r >= 2");
    }
    let d = (r * n).div_ceil(2 * (r - 1));
    let seed = gen_complete_bipartite(d, d)?;
    Ok(gen_join_power(&seed, n, Some(r - 1), &SearchBudget::default())?.0)
}

/// Components meeting every block in exactly one vertex.
pub fn colorful_components(g: &PartitionedGraph) -> Vec<usize> {
    g.components()
        .iter()
        .enumerate()
        .filter(|(_, c)| {
            let blocks: BTreeSet<usize> = c.vertices.iter().map(|&v| g.block_of(v)).collect();
            c.vertices.len() == g.r() && blocks.len() == g.r()
        })
        .map(|(i, _)| i)
        .collect()
}

/// A uniformly random distribution of `block` over `targets` blocks.
pub fn random_distribution(block: &[Vertex], targets: usize, seed: u64) -> Distribution {
    let mut rng = StdRng::seed_from_u64(seed);
    block.iter().map(|&v| (v, rng.gen_range(0..targets))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::verify_certificate;
    use crate::transversal::is_block_minimal;

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    fn replays(c: &Construction) {
        let (g, _) = verify_certificate(&c.certificate, &budget()).unwrap();
        assert_eq!(g.to_json_string(), c.graph.to_json_string());
    }

    #[test]
    fn complete_bipartite_shapes() {
        let k = gen_complete_bipartite(3, 3).unwrap();
        assert_eq!((k.n(), k.edge_count(), k.block_sizes()), (6, 9, vec![3, 3]));
        let e = gen_complete_bipartite(1, 1).unwrap();
        assert_eq!(e.block_sizes(), vec![1, 1]);
        let k43 = gen_complete_bipartite(4, 3).unwrap();
        assert_eq!(k43.block_sizes(), vec![4, 3]);
        assert_eq!(k43.label(0), Some("K4,3/left/0"));
    }

    #[test]
    fn szabo_tardos_small() {
        let c = gen_szabo_tardos(2).unwrap();
        assert_eq!(c.graph.n(), 12);
        assert_eq!(c.graph.block_sizes(), vec![3; 4]);
        let s = c.graph.stats();
        assert_eq!((s.max_degree, s.component_count), (2, 3));
        replays(&c);
        let one = gen_szabo_tardos(1).unwrap().graph;
        assert_eq!((one.n(), one.block_sizes()), (2, vec![1, 1]));
        let three = gen_szabo_tardos(3).unwrap().graph;
        assert_eq!(three.block_sizes(), vec![5; 6]);
        assert!(three.is_cb_union());
    }

    #[test]
    fn yuster_family() {
        let y = gen_yuster(2).unwrap();
        assert_eq!(y.graph.block_sizes(), vec![3; 4]);
        assert!(find_it(&y.graph, &budget()).is_none_exists());
        replays(&y);
        let y4 = gen_yuster(4).unwrap().graph;
        assert_eq!(y4.block_sizes(), vec![7; 8]);
        assert_eq!(y4.components().len(), 7);
        assert_eq!(gen_yuster(3).unwrap_err(), ConstructError::NotPowerOfTwo(3));
    }

    #[test]
    fn cycle_partitions() {
        let c1 = gen_cycle_partition(1).unwrap().graph;
        assert_eq!(c1.block_sizes(), vec![2, 2]);
        let c2 = gen_cycle_partition(2).unwrap();
        assert_eq!(c2.graph.block_sizes(), vec![3, 2, 2]);
        replays(&c2);
        let c3 = gen_cycle_partition(3).unwrap().graph;
        assert_eq!(c3.block_sizes(), vec![3, 3, 2, 2]);
        assert!(find_it(&c3, &budget()).is_none_exists());
        assert_eq!(c3.components().len(), 1);
    }

    #[test]
    fn three_cycles() {
        let c = gen_three_cycles(4, 4, 4).unwrap();
        assert_eq!(c.graph.block_sizes(), vec![3; 4]);
        let c = gen_three_cycles(4, 7, 10).unwrap();
        assert_eq!((c.graph.n(), c.graph.block_sizes()), (21, vec![3; 7]));
        assert!(find_it(&c.graph, &budget()).is_none_exists());
        replays(&c);
        assert_eq!(gen_three_cycles(5, 4, 4).unwrap_err(), ConstructError::BadLength(5));
    }

    #[test]
    fn multipartite_base() {
        let k33 = gen_multipartite_base(2, 3).unwrap();
        assert_eq!(k33.to_json_string(), {
            let mut j = gen_complete_bipartite(3, 3).unwrap().to_json();
            j.labels = k33.labels().clone();
            serde_json::to_string(&j).unwrap()
        });
        let tri = gen_multipartite_base(3, 1).unwrap();
        assert_eq!((tri.block_sizes(), tri.stats().max_degree), (vec![2; 3], 2));
        let k32 = gen_multipartite_base(3, 2).unwrap();
        assert_eq!((k32.block_sizes(), k32.stats().max_degree), (vec![4; 3], 4));
        assert!(find_it(&k32, &budget()).is_none_exists());
    }

    #[test]
    fn locally_sparse_two_one() {
        let c = gen_locally_sparse(2, 1).unwrap();
        let s = c.graph.stats();
        assert_eq!((c.graph.n(), c.graph.r()), (36, 12));
        assert_eq!((s.max_degree, s.local_degree, s.multiplicity), (2, 1, 1));
        assert!(s.block_sizes.iter().all(|&x| x == 3));
        replays(&c);
        assert_eq!(locally_sparse_bound(2, 2), 3);
        assert_eq!(locally_sparse_bound(4, 1), 5);
        assert_eq!(gen_locally_sparse(3, 2).unwrap_err(), ConstructError::NotDivisible(3, 2));
    }

    #[test]
    fn list_coloring_shape() {
        let c = gen_list_coloring_cx(2).unwrap();
        assert_eq!((c.graph.n(), c.graph.r()), (108, 36));
        assert!(c.graph.block_sizes().iter().all(|&s| s == 3));
        assert_eq!(c.graph.stats().max_degree, 2);
        replays(&c);
    }

    #[test]
    fn star_free_reports() {
        let (c, rep) = gen_star_free_cx(3, 6).unwrap();
        assert_eq!((rep.d, rep.block_size, rep.conjecture_bound, rep.counterexample), (8, 11, 10, true));
        assert_eq!(c.graph.stats().max_degree, 8);
        assert!(c.graph.is_star_free(3));
        assert!(!c.graph.is_cb_union());
        let (_, rep) = gen_star_free_cx(3, 2).unwrap();
        assert_eq!((rep.d, rep.block_size, rep.counterexample), (2, 3, false));
        let (_, rep) = gen_star_free_cx(4, 6).unwrap();
        assert_eq!((rep.d, rep.block_size, rep.conjecture_bound, rep.counterexample), (7, 11, 10, true));
        assert_eq!(gen_star_free_cx(3, 5).unwrap_err(), ConstructError::NotDivisible(5, 2));
    }

    #[test]
    fn ahhs_shape() {
        let c = gen_ahhs_cx(2).unwrap();
        assert_eq!((c.graph.n(), c.graph.block_sizes()), (24, vec![3; 8]));
        assert!(find_it(&c.graph, &budget()).is_none_exists());
        let c3 = gen_ahhs_cx(3).unwrap().graph;
        assert_eq!((c3.n(), c3.block_sizes()), (60, vec![5; 12]));
    }

    #[test]
    fn join_power_cases() {
        let k22 = gen_complete_bipartite(2, 2).unwrap();
        let (c, rep) = gen_join_power(&k22, 3, None, &budget()).unwrap();
        assert_eq!((rep.copies, rep.formula_copies, rep.matches_formula), (3, 3, true));
        assert_eq!(c.graph.block_sizes(), vec![3; 4]);
        replays(&c);
        let base = gen_multipartite_base(3, 2).unwrap();
        let (c, rep) = gen_join_power(&base, 5, None, &budget()).unwrap();
        assert_eq!(rep.copies, 4);
        assert_eq!(c.graph.components().len(), 8);
        assert_eq!(c.graph.r(), 4 * 2 + 1);
        assert!(c.graph.block_sizes().iter().all(|&s| s >= 5));
        let e = gen_complete_bipartite(1, 1).unwrap();
        assert_eq!(gen_join_power(&e, 2, None, &budget()).unwrap_err(), ConstructError::ConditionFails(2));
        let free = PartitionedGraph::new(2, [], vec![vec![0], vec![1]]).unwrap();
        assert_eq!(gen_join_power(&free, 1, None, &budget()).unwrap_err(), ConstructError::SeedHasIT);
    }

    #[test]
    fn general_szabo_tardos() {
        let g = gen_general_szabo_tardos(3, 4).unwrap().graph;
        assert_eq!((g.components().len(), g.r(), g.stats().max_degree), (3, 4, 2));
        let g = gen_general_szabo_tardos(5, 6).unwrap();
        assert_eq!((g.graph.components().len(), g.graph.r(), g.graph.stats().max_degree), (5, 6, 3));
        assert!(g.graph.block_sizes().iter().all(|&s| s >= 5));
        replays(&g);
        let e = gen_general_szabo_tardos(1, 2).unwrap().graph;
        assert_eq!((e.n(), e.edge_count()), (2, 1));
        // padding beyond the natural copy count
        let p = gen_general_szabo_tardos(2, 4).unwrap().graph;
        assert_eq!((p.components().len(), p.r()), (3, 4));
        assert!(p.block_sizes().iter().all(|&s| s >= 2));
        assert!(find_it(&p, &budget()).is_none_exists());
        assert!(is_block_minimal(&p, &budget()).is_ok());
    }

    #[test]
    fn colorful_checker() {
        let e = gen_complete_bipartite(1, 1).unwrap();
        assert_eq!(colorful_components(&e), vec![0]);
        assert!(colorful_components(&gen_complete_bipartite(2, 2).unwrap()).is_empty());
        let two = PartitionedGraph::new(4, [(0, 1), (2, 3)], vec![vec![0, 2], vec![1, 3]]).unwrap();
        assert_eq!(colorful_components(&two), vec![0, 1]);
    }

    #[test]
    fn random_distribution_is_seeded() {
        let a = random_distribution(&[3, 4, 5, 6], 3, 7);
        assert_eq!(a, random_distribution(&[3, 4, 5, 6], 3, 7));
        assert!(a.values().all(|&t| t < 3));
    }
}
