//! Feasible pairs, induced matching configurations, and the recursive
//! decomposition of block-minimal unions of complete bipartite graphs
//! into join certificates.
//!
//! The three hypotheses used throughout are
//! (a) the graph is block-minimal with no IT,
//! (b) every component is complete bipartite,
//! (c) there are exactly `r - 1` components.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::certify::Certificate;
use crate::construct::{CertifiedBuilder, Distribution};
use crate::error::{BudgetExceeded, DecomposeError};
use crate::graph::{PartitionedGraph, Vertex};
use crate::transversal::{
    find_it_without_block, is_block_minimal, max_partial_it, ItOutcome, PartialItQuery, SearchBudget, Transversal,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Abc {
    pub a: bool,
    pub b: bool,
    pub c: bool,
}

impl Abc {
    pub fn all(&self) -> bool {
        self.a && self.b && self.c
    }
}

pub fn check_abc(g: &PartitionedGraph, budget: &SearchBudget) -> Result<Abc, BudgetExceeded> {
    let b = g.is_cb_union();
    let c = g.components().len() + 1 == g.r();
    let a = is_block_minimal(g, budget)?;
    Ok(Abc { a, b, c })
}

fn cheap_preconditions(g: &PartitionedGraph) -> Result<(), DecomposeError> {
    if !g.is_cb_union() {
        return Err(DecomposeError::PreconditionFailed("a component is not complete bipartite".into()));
    }
    if g.components().len() + 1 != g.r() {
        return Err(DecomposeError::PreconditionFailed("component count is not r - 1".into()));
    }
    Ok(())
}

/// A complete bipartite component with one side in each of two blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoBlockComponent {
    pub component: usize,
    pub i: usize,
    pub j: usize,
    pub a: Vec<Vertex>,
    pub b: Vec<Vertex>,
}

fn single_block(g: &PartitionedGraph, side: &[Vertex]) -> Option<usize> {
    let first = g.block_of(side[0]);
    side.iter().all(|&v| g.block_of(v) == first).then_some(first)
}

/// Direct scan: the first component whose sides lie in two distinct blocks.
pub fn find_two_block_component(g: &PartitionedGraph) -> Option<TwoBlockComponent> {
    g.components().into_iter().enumerate().find_map(|(c, comp)| {
        let (a, b) = comp.sides?;
        let (i, j) = (single_block(g, &a)?, single_block(g, &b)?);
        (i != j).then_some(TwoBlockComponent { component: c, i, j, a, b })
    })
}

/// A complete bipartite component `K_{A,B}` with `A` inside a given block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SideInBlock {
    pub component: usize,
    pub a: Vec<Vertex>,
    pub b: Vec<Vertex>,
    /// Block-graph degree of the target block before each swap.
    pub degree_trace: Vec<usize>,
}

/// Oracle for [`find_side_in_block`]: scans components directly.
pub fn scan_side_in_block(g: &PartitionedGraph, i: usize) -> Option<SideInBlock> {
    g.components().into_iter().enumerate().find_map(|(c, comp)| {
        let (x, y) = comp.sides?;
        let inside = |s: &[Vertex]| s.iter().all(|&v| g.block_of(v) == i);
        if inside(&x) {
            Some(SideInBlock { component: c, a: x, b: y, degree_trace: Vec::new() })
        } else if inside(&y) {
            Some(SideInBlock { component: c, a: y, b: x, degree_trace: Vec::new() })
        } else {
            None
        }
    })
}

/// A pair `(I, T)`: `T` a maximum partial independent transversal and
/// `G[I]` a union of stars centred at the vertices of `I \ T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeasiblePair {
    pub i: BTreeSet<Vertex>,
    pub t: Transversal,
}

impl FeasiblePair {
    pub fn w(&self) -> BTreeSet<Vertex> {
        let t = self.t.vertices();
        self.i.difference(&t).copied().collect()
    }

    /// `C(w, T)` for every `w` in `I \ T`.
    pub fn stars(&self, g: &PartitionedGraph) -> BTreeMap<Vertex, BTreeSet<Vertex>> {
        let t = self.t.vertices();
        self.w()
            .into_iter()
            .map(|w| {
                let mut star: BTreeSet<Vertex> = g.neighbors(w).iter().copied().filter(|v| t.contains(v)).collect();
                star.insert(w);
                (w, star)
            })
            .collect()
    }

    /// Feasibility conditions (ii) and (iii); (i) is the caller's job.
    pub fn check(&self, g: &PartitionedGraph) -> Result<(), String> {
        self.t.validate(g)?;
        let stars = self.stars(g);
        let mut covered = BTreeSet::new();
        for (w, star) in &stars {
            if star.len() < 2 {
                return Err(format!("star at {w} is trivial"));
            }
            if !star.is_subset(&self.i) {
                return Err(format!("star at {w} leaves I"));
            }
            if let Some(v) = star.iter().find(|v| covered.contains(*v)) {
                return Err(format!("stars overlap at {v}"));
            }
            covered.extend(star.iter().copied());
        }
        if covered != self.i {
            return Err("I is not the union of the stars".into());
        }
        let edges: usize = self.i.iter().map(|&u| g.neighbors(u).iter().filter(|v| self.i.contains(v)).count()).sum();
        let star_edges: usize = stars.values().map(|s| s.len() - 1).sum();
        if edges / 2 != star_edges {
            return Err("G[I] has edges outside the stars".into());
        }
        if !g.block_graph(&self.i).is_tree() {
            return Err("block graph of I is not a tree".into());
        }
        Ok(())
    }
}

/// An induced matching configuration rooted at a block missed by `T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImcWitness {
    pub pair: FeasiblePair,
    pub root: usize,
    /// `|I|` after each iteration.
    pub growth: Vec<usize>,
}

fn invariant(ok: bool, what: impl FnOnce() -> String) -> Result<(), DecomposeError> {
    if ok {
        Ok(())
    } else {
        Err(DecomposeError::InvariantViolated(what()))
    }
}

fn neighborhood(g: &PartitionedGraph, set: &BTreeSet<Vertex>) -> BTreeSet<Vertex> {
    set.iter().flat_map(|&u| g.neighbors(u).iter().copied()).collect()
}

/// Grows a feasible pair from `(∅, T_0)` until it is an IMC, checking the
/// intermediate claims as it goes.
pub fn build_imc(g: &PartitionedGraph, root: usize, budget: &SearchBudget) -> Result<ImcWitness, DecomposeError> {
    if root >= g.r() {
        return Err(DecomposeError::PreconditionFailed(format!("block {root} out of range")));
    }
    cheap_preconditions(g)?;
    let mut t = match find_it_without_block(g, root, budget) {
        ItOutcome::Found(t) => t,
        ItOutcome::NoneExists { .. } => {
            return Err(DecomposeError::PreconditionFailed(format!("G - V_{root} has no IT")));
        }
        ItOutcome::BudgetExceeded { nodes } => return Err(BudgetExceeded { nodes }.into()),
    };
    let r = g.r();
    let mut i_set: BTreeSet<Vertex> = BTreeSet::new();
    let mut growth = Vec::new();
    loop {
        let active: BTreeSet<usize> = i_set.iter().map(|&v| g.block_of(v)).collect();
        let n_i = neighborhood(g, &i_set);
        let w = if i_set.is_empty() {
            g.block(root)[0]
        } else {
            match (0..g.n()).find(|v| active.contains(&g.block_of(*v)) && !i_set.contains(v) && !n_i.contains(v)) {
                Some(w) => w,
                None => break,
            }
        };
        invariant(!t.vertices().contains(&w), || format!("chosen vertex {w} already lies in T"))?;
        let forced = Transversal {
            assignment: t.assignment.iter().filter(|(b, _)| active.contains(b)).map(|(&b, &v)| (b, v)).collect(),
        };
        let mut forbidden: BTreeSet<Vertex> = n_i.difference(&i_set).copied().collect();
        // agreeing with T on S(I) includes leaving T's empty blocks empty
        for b in active.iter().copied().chain([g.block_of(w)]) {
            if t.get(b).is_none() {
                forbidden.extend(g.block(b).iter().copied());
            }
        }
        let query = PartialItQuery { forced, forbidden, minimize_degree_of: Some(w) };
        let next = max_partial_it(g, &query, budget)?;
        invariant(next.len() == r - 1, || format!("partial IT of size {} is not maximum", next.len()))?;
        let star: Vec<Vertex> = g.neighbors(w).iter().copied().filter(|v| next.vertices().contains(v)).collect();
        invariant(!star.is_empty(), || format!("C({w}, T') is a trivial star"))?;
        let before = i_set.len();
        i_set.insert(w);
        i_set.extend(star);
        invariant(i_set.len() > before, || "I did not grow".into())?;
        t = next;
        growth.push(i_set.len());
        let pair = FeasiblePair { i: i_set.clone(), t: t.clone() };
        pair.check(g).map_err(|e| DecomposeError::InvariantViolated(format!("feasible pair: {e}")))?;
    }
    let pair = FeasiblePair { i: i_set, t };
    check_imc_claims(g, &pair, root)?;
    Ok(ImcWitness { pair, root, growth })
}

fn check_imc_claims(g: &PartitionedGraph, pair: &FeasiblePair, root: usize) -> Result<(), DecomposeError> {
    let comp = g.component_index();
    let t = pair.t.vertices();
    let touched: BTreeSet<usize> = pair.i.iter().map(|&v| comp[v]).collect();
    let active: BTreeSet<usize> = pair.i.iter().map(|&v| g.block_of(v)).collect();
    for v in (0..g.n()).filter(|v| active.contains(&g.block_of(*v))) {
        invariant(touched.contains(&comp[v]), || format!("{v} lies in a component missing I"))?;
    }
    for &v in t.difference(&pair.i) {
        invariant(!touched.contains(&comp[v]), || format!("{v} in T \\ I meets a component of I"))?;
    }
    invariant(active.len() == g.r(), || format!("only {} of {} blocks are active", active.len(), g.r()))?;
    invariant(t.is_subset(&pair.i), || "T is not inside I".into())?;
    let w = pair.w();
    invariant(w.len() + 1 == g.r(), || format!("|I \\ T| = {}", w.len()))?;
    for &x in &w {
        let deg = g.neighbors(x).iter().filter(|v| t.contains(v)).count();
        invariant(deg == 1, || format!("deg_T({x}) = {deg}"))?;
    }
    check_matching(g, &pair.i).map_err(|e| DecomposeError::InvariantViolated(format!("induced matching: {e}")))?;
    for v in 0..g.n() {
        let k = g.neighbors(v).iter().filter(|u| pair.i.contains(u)).count();
        invariant(k == 1, || format!("{v} has {k} neighbors in I"))?;
    }
    invariant(pair.t.get(root).is_none(), || format!("root block {root} meets T"))
}

/// `G[I]` a perfect matching and its block graph a tree on every block.
fn check_matching(g: &PartitionedGraph, i_set: &BTreeSet<Vertex>) -> Result<(), String> {
    for &v in i_set {
        let k = g.neighbors(v).iter().filter(|u| i_set.contains(u)).count();
        if k != 1 {
            return Err(format!("{v} has {k} neighbors inside I"));
        }
    }
    let bg = g.block_graph(i_set);
    if bg.node_count() != g.r() || !bg.is_tree() {
        return Err("block graph is not a spanning tree".into());
    }
    Ok(())
}

fn partner(g: &PartitionedGraph, i_set: &BTreeSet<Vertex>, v: Vertex) -> Vertex {
    *g.neighbors(v).iter().find(|u| i_set.contains(u)).expect("perfect matching")
}

/// Finds `K_{A,B}` with `A` inside block `i` by repeatedly lowering the
/// degree of `V_i` in the block graph of an IMC rooted at `V_i`.
pub fn find_side_in_block(
    g: &PartitionedGraph,
    i: usize,
    budget: &SearchBudget,
) -> Result<SideInBlock, DecomposeError> {
    let imc = build_imc(g, i, budget)?;
    let t = imc.pair.t.vertices();
    let mut i_set = imc.pair.i;
    let mut trace = Vec::new();
    loop {
        let deg = g.block_graph(&i_set).degree(i);
        if let Some(&last) = trace.last() {
            invariant(deg + 1 == last, || format!("swap moved the degree of V_{i} from {last} to {deg}"))?;
        }
        trace.push(deg);
        let w = *g.block(i).iter().find(|v| i_set.contains(v)).ok_or(DecomposeError::NotFound)?;
        let v = partner(g, &i_set, w);
        invariant(t.contains(&v), || format!("partner {v} of {w} is not in T"))?;
        let outside = g.neighbors(v).iter().copied().find(|&x| g.block_of(x) != i);
        let Some(x) = outside else {
            let comp = g.component_index()[v];
            let a = g.neighbors(v).to_vec();
            let mut b: Vec<Vertex> = g.neighbors(a[0]).to_vec();
            b.sort_unstable();
            return Ok(SideInBlock { component: comp, a, b, degree_trace: trace });
        };
        invariant(deg > 1, || format!("V_{i} is a leaf but N({v}) leaves it"))?;
        invariant(g.block_of(x) != g.block_of(v), || format!("{x} shares a block with {v}, giving an IT"))?;
        i_set.remove(&w);
        i_set.insert(x);
        check_matching(g, &i_set).map_err(|e| DecomposeError::InvariantViolated(format!("after swap: {e}")))?;
    }
}

/// The same search as [`find_two_block_component`], driven by IMCs: a
/// component is found for every block, and by pigeonhole two blocks share
/// one.
pub fn find_two_block_component_imc(
    g: &PartitionedGraph,
    budget: &SearchBudget,
) -> Result<TwoBlockComponent, DecomposeError> {
    let mut seen: BTreeMap<usize, (usize, SideInBlock)> = BTreeMap::new();
    for i in 0..g.r() {
        let found = find_side_in_block(g, i, budget)?;
        if let Some((j, other)) = seen.get(&found.component) {
            return Ok(TwoBlockComponent { component: found.component, i: *j, j: i, a: other.a.clone(), b: found.a });
        }
        seen.insert(found.component, (i, found));
    }
    Err(DecomposeError::InvariantViolated("no component serves two blocks".into()))
}

/// A certificate together with the map from replayed vertex ids to the
/// input's ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub certificate: Certificate,
    pub relabel: Vec<Vertex>,
}

impl Decomposition {
    /// Maps a replayed graph back onto the input's vertex ids.
    pub fn apply(&self, replayed: &PartitionedGraph) -> Result<PartitionedGraph, crate::error::GraphError> {
        replayed.relabeled(&self.relabel)
    }
}

struct Peeled {
    a: Vec<Vertex>,
    b: Vec<Vertex>,
    from_i: Vec<Vertex>,
    from_j: Vec<Vertex>,
}

/// Removes `A ∪ B` and merges the rest of `V_i ∪ V_j` into one block.
fn peel(
    cur: &PartitionedGraph,
    orig: &[Vertex],
    tb: &TwoBlockComponent,
) -> Result<(PartitionedGraph, Vec<Vertex>, Peeled), DecomposeError> {
    let doomed: BTreeSet<Vertex> = tb.a.iter().chain(&tb.b).copied().collect();
    let from_i: Vec<Vertex> = cur.block(tb.i).iter().copied().filter(|v| !doomed.contains(v)).collect();
    let from_j: Vec<Vertex> = cur.block(tb.j).iter().copied().filter(|v| !doomed.contains(v)).collect();
    invariant(!from_i.is_empty() || !from_j.is_empty(), || format!("merging blocks {} and {} leaves nothing", tb.i, tb.j))?;
    let mut map = vec![None; cur.n()];
    let mut next_orig = Vec::new();
    for v in (0..cur.n()).filter(|v| !doomed.contains(v)) {
        map[v] = Some(next_orig.len());
        next_orig.push(orig[v]);
    }
    let edges = cur.edges().filter_map(|(u, v)| Some((map[u]?, map[v]?)));
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    for (k, blk) in cur.blocks().iter().enumerate() {
        if k == tb.j {
            continue;
        }
        let mut nb: Vec<Vertex> = blk.iter().filter_map(|&v| map[v]).collect();
        if k == tb.i {
            nb.extend(from_j.iter().map(|&v| map[v].expect("kept")));
        }
        blocks.push(nb);
    }
    let labels = cur.labels().iter().filter_map(|(&v, l)| Some((map[v]?, l.clone()))).collect();
    let next = PartitionedGraph::new(next_orig.len(), edges, blocks)
        .and_then(|g| g.with_labels(labels))
        .map_err(|e| DecomposeError::InvariantViolated(e.to_string()))?;
    let to_orig = |vs: &[Vertex]| vs.iter().map(|&v| orig[v]).collect();
    let peeled = Peeled { a: to_orig(&tb.a), b: to_orig(&tb.b), from_i: to_orig(&from_i), from_j: to_orig(&from_j) };
    Ok((next, next_orig, peeled))
}

/// How [`decompose_to_certificate_with`] locates each two-block component.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ComponentSearch {
    #[default]
    Scan,
    Imc,
}

/// Peels off two-block components until two blocks remain, then replays
/// the peeling backwards as joins.
pub fn decompose_to_certificate(g: &PartitionedGraph, budget: &SearchBudget) -> Result<Decomposition, DecomposeError> {
    decompose_to_certificate_with(g, budget, ComponentSearch::Scan)
}

pub fn decompose_to_certificate_with(
    g: &PartitionedGraph,
    budget: &SearchBudget,
    search: ComponentSearch,
) -> Result<Decomposition, DecomposeError> {
    cheap_preconditions(g)?;
    if g.r() < 2 {
        return Err(DecomposeError::PreconditionFailed("fewer than two blocks".into()));
    }
    if !is_block_minimal(g, budget)? {
        return Err(DecomposeError::PreconditionFailed("not block-minimal with no IT".into()));
    }
    let mut cur = g.clone();
    let mut orig: Vec<Vertex> = (0..g.n()).collect();
    let mut peeled = Vec::new();
    while cur.r() > 2 {
        let tb = match search {
            ComponentSearch::Scan => find_two_block_component(&cur).ok_or_else(|| {
                DecomposeError::InvariantViolated(format!("no two-block component at r = {}", cur.r()))
            })?,
            ComponentSearch::Imc => find_two_block_component_imc(&cur, budget)?,
        };
        let (next, next_orig, p) = peel(&cur, &orig, &tb)?;
        peeled.push(p);
        cur = next;
        orig = next_orig;
    }

    let mut builder_of: BTreeMap<Vertex, Vertex> = orig.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let mut relabel = orig;
    let mut builder = CertifiedBuilder::new(cur);
    for p in peeled.into_iter().rev() {
        let (na, nb) = (p.a.len(), p.b.len());
        let edges = (0..na).flat_map(|x| (na..na + nb).map(move |y| (x, y)));
        let payload_orig: Vec<Vertex> = p.a.iter().chain(&p.b).copied().collect();
        let labels = payload_orig.iter().enumerate().filter_map(|(k, v)| Some((k, g.label(*v)?.to_string()))).collect();
        let payload = PartitionedGraph::new(na + nb, edges, vec![(0..na).collect(), (na..na + nb).collect()])
            .and_then(|k| k.with_labels(labels))
            .map_err(|e| DecomposeError::InvariantViolated(e.to_string()))?;
        let merged: Vec<Vertex> = p.from_i.iter().chain(&p.from_j).map(|v| builder_of[v]).collect();
        let s = builder.graph().block_of(merged[0]);
        let dist: Distribution =
            p.from_i.iter().map(|v| (builder_of[v], 0)).chain(p.from_j.iter().map(|v| (builder_of[v], 1))).collect();
        let off = builder.graph().n();
        builder.join_host(s, &payload, dist).map_err(|e| DecomposeError::InvariantViolated(e.to_string()))?;
        for (k, v) in payload_orig.into_iter().enumerate() {
            builder_of.insert(v, off + k);
            relabel.push(v);
        }
    }
    Ok(Decomposition { certificate: builder.finish().certificate, relabel })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::verify_certificate;
    use crate::construct::{gen_ahhs_cx, gen_complete_bipartite, gen_star_free_cx, gen_szabo_tardos, gen_three_cycles};

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn abc_examples() {
        let st = gen_szabo_tardos(2).unwrap().graph;
        assert!(check_abc(&st, &budget()).unwrap().all());
        let ahhs = gen_ahhs_cx(2).unwrap().graph;
        assert!(check_abc(&ahhs, &budget()).unwrap().all());
        assert_eq!((ahhs.r(), ahhs.components().len()), (8, 7));
        let (sf, _) = gen_star_free_cx(3, 6).unwrap();
        assert!(!sf.graph.is_cb_union());
    }

    #[test]
    fn two_block_scan() {
        let k = gen_complete_bipartite(3, 3).unwrap();
        let tb = find_two_block_component(&k).unwrap();
        assert_eq!((tb.component, tb.i, tb.j), (0, 0, 1));
        assert!(find_two_block_component(&gen_szabo_tardos(3).unwrap().graph).is_some());
        let ahhs = gen_ahhs_cx(2).unwrap().graph;
        let tb = find_two_block_component(&ahhs).unwrap();
        assert_eq!(tb.a.len() + tb.b.len(), 3);
    }

    #[test]
    fn imc_on_k22() {
        let k = gen_complete_bipartite(2, 2).unwrap();
        let imc = build_imc(&k, 0, &budget()).unwrap();
        assert_eq!(imc.pair.i.len(), 2);
        assert_eq!(imc.pair.t.len(), 1);
        assert_eq!(imc.pair.w(), BTreeSet::from([0]));
    }

    #[test]
    fn imc_on_szabo_tardos_and_cycles() {
        let st = gen_szabo_tardos(2).unwrap().graph;
        for root in 0..st.r() {
            let imc = build_imc(&st, root, &budget()).unwrap();
            assert_eq!((imc.pair.i.len(), imc.pair.t.len()), (6, 3));
            assert!(imc.growth.windows(2).all(|w| w[0] < w[1]));
        }
        let cycles = gen_three_cycles(4, 4, 4).unwrap().graph;
        for root in 0..cycles.r() {
            assert_eq!(build_imc(&cycles, root, &budget()).unwrap().pair.i.len(), 6);
        }
    }

    #[test]
    fn side_in_block_matches_scan() {
        let k = gen_complete_bipartite(2, 2).unwrap();
        assert_eq!(find_side_in_block(&k, 0, &budget()).unwrap().a, vec![0, 1]);
        for g in [gen_szabo_tardos(2).unwrap().graph, gen_three_cycles(4, 4, 4).unwrap().graph] {
            for i in 0..g.r() {
                let found = find_side_in_block(&g, i, &budget()).unwrap();
                assert!(found.a.iter().all(|&v| g.block_of(v) == i));
                assert!(scan_side_in_block(&g, i).is_some());
                assert!(found.degree_trace.windows(2).all(|w| w[0] == w[1] + 1));
            }
        }
        let tb = find_two_block_component_imc(&gen_szabo_tardos(2).unwrap().graph, &budget()).unwrap();
        assert_ne!(tb.i, tb.j);
    }

    #[test]
    fn decompose_round_trip() {
        let st = gen_szabo_tardos(3).unwrap().graph;
        let d = decompose_to_certificate(&st, &budget()).unwrap();
        assert_eq!((d.certificate.base_count(), d.certificate.join_count()), (5, 4));
        let (replayed, _) = verify_certificate(&d.certificate, &budget()).unwrap();
        assert_eq!(d.apply(&replayed).unwrap(), st);
        let imc = decompose_to_certificate_with(&st, &budget(), ComponentSearch::Imc).unwrap();
        let (replayed, _) = verify_certificate(&imc.certificate, &budget()).unwrap();
        assert_eq!(imc.apply(&replayed).unwrap(), st);
        let k = gen_complete_bipartite(2, 3).unwrap();
        let d = decompose_to_certificate(&k, &budget()).unwrap();
        assert_eq!(d.certificate.steps.len(), 1);
    }

    #[test]
    fn decompose_rejects_non_cb() {
        let (sf, _) = gen_star_free_cx(3, 2).unwrap();
        let c = gen_three_cycles(4, 7, 4).unwrap().graph;
        assert!(matches!(decompose_to_certificate(&c, &budget()), Err(DecomposeError::PreconditionFailed(_))));
        assert!(decompose_to_certificate(&sf.graph, &budget()).is_ok());
    }
}
