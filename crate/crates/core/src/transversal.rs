//! Exact search for independent transversals.
//!
//! The decision engine is a backtracking search over blocks with forward
//! checking: choosing a vertex blocks all of its neighbors, the next block
//! is the unassigned one with the fewest live candidates (lowest index on
//! ties), and a block whose candidates run out fails immediately. At every
//! node the unassigned blocks are split into groups that share no live
//! edge, and each group is solved on its own.
//!
//! A [`ItOutcome::NoneExists`] answer is an exhaustive proof. Callers must
//! branch on all three outcomes; a budget hit proves nothing.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{BudgetExceeded, TransversalError};
use crate::graph::{PartitionedGraph, Vertex};
use crate::matching::BlockMatching;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_millis: Option<u64>,
}

impl SearchBudget {
    pub const DEFAULT_NODES: u64 = 100_000_000;

    pub fn nodes(max_nodes: u64) -> Self {
        Self { max_nodes: max_nodes.max(1), max_millis: None }
    }

    pub fn with_millis(mut self, millis: u64) -> Self {
        self.max_millis = Some(millis.max(1));
        self
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::nodes(Self::DEFAULT_NODES)
    }
}

/// A partial assignment of blocks to vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transversal {
    pub assignment: BTreeMap<usize, Vertex>,
}

impl Transversal {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vertices(g: &PartitionedGraph, vertices: impl IntoIterator<Item = Vertex>) -> Self {
        Self { assignment: vertices.into_iter().map(|v| (g.block_of(v), v)).collect() }
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn get(&self, block: usize) -> Option<Vertex> {
        self.assignment.get(&block).copied()
    }

    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.assignment.values().copied().collect()
    }

    pub fn is_full(&self, g: &PartitionedGraph) -> bool {
        self.assignment.len() == g.r()
    }

    /// Checks block membership and pairwise nonadjacency.
    pub fn validate(&self, g: &PartitionedGraph) -> Result<(), String> {
        for (&b, &v) in &self.assignment {
            if b >= g.r() || v >= g.n() {
                return Err(format!("block {b} or vertex {v} out of range"));
            }
            if g.block_of(v) != b {
                return Err(format!("vertex {v} is not in block {b}"));
            }
        }
        let vs: Vec<Vertex> = self.assignment.values().copied().collect();
        for (i, &u) in vs.iter().enumerate() {
            if let Some(&w) = vs[i + 1..].iter().find(|&&w| g.has_edge(u, w)) {
                return Err(format!("vertices {u} and {w} are adjacent"));
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, g: &PartitionedGraph) -> bool {
        self.validate(g).is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ItOutcome {
    Found(Transversal),
    NoneExists { nodes: u64 },
    BudgetExceeded { nodes: u64 },
}

impl ItOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, ItOutcome::Found(_))
    }

    pub fn is_none_exists(&self) -> bool {
        matches!(self, ItOutcome::NoneExists { .. })
    }
}

struct Clock {
    budget: SearchBudget,
    start: Instant,
    nodes: u64,
}

impl Clock {
    fn new(budget: &SearchBudget) -> Self {
        Self { budget: *budget, start: Instant::now(), nodes: 0 }
    }

    fn tick(&mut self) -> Result<(), BudgetExceeded> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(BudgetExceeded { nodes: self.nodes - 1 });
        }
        if let Some(ms) = self.budget.max_millis {
            if self.nodes.is_multiple_of(1024) && self.start.elapsed() > Duration::from_millis(ms) {
                return Err(BudgetExceeded { nodes: self.nodes });
            }
        }
        Ok(())
    }
}

/// Forward-checking state shared by the decision and counting searches.
struct Engine<'a> {
    g: &'a PartitionedGraph,
    blocked: Vec<u32>,
    excluded: Vec<bool>,
    live: Vec<usize>,
    chosen: Vec<Option<Vertex>>,
    trail: Vec<Vertex>,
    stamp: Vec<u64>,
    epoch: u64,
    clock: Clock,
}

impl<'a> Engine<'a> {
    fn new(g: &'a PartitionedGraph, budget: &SearchBudget) -> Self {
        Self {
            g,
            blocked: vec![0; g.n()],
            excluded: vec![false; g.n()],
            live: g.block_sizes(),
            chosen: vec![None; g.r()],
            trail: Vec::new(),
            stamp: vec![0; g.r()],
            epoch: 0,
            clock: Clock::new(budget),
        }
    }

    fn exclude(&mut self, v: Vertex) {
        if !self.excluded[v] {
            self.excluded[v] = true;
            if self.blocked[v] == 0 {
                self.live[self.g.block_of(v)] -= 1;
            }
        }
    }

    fn is_live(&self, v: Vertex) -> bool {
        self.blocked[v] == 0 && !self.excluded[v]
    }

    fn assign(&mut self, x: Vertex) {
        self.chosen[self.g.block_of(x)] = Some(x);
        self.trail.push(x);
        for &y in self.g.neighbors(x) {
            self.blocked[y] += 1;
            if self.blocked[y] == 1 && !self.excluded[y] {
                self.live[self.g.block_of(y)] -= 1;
            }
        }
    }

    fn unassign(&mut self) {
        let x = self.trail.pop().expect("trail nonempty");
        self.chosen[self.g.block_of(x)] = None;
        for &y in self.g.neighbors(x) {
            self.blocked[y] -= 1;
            if self.blocked[y] == 0 && !self.excluded[y] {
                self.live[self.g.block_of(y)] += 1;
            }
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            self.unassign();
        }
    }

    fn candidates(&self, b: usize) -> Vec<Vertex> {
        self.g.block(b).iter().copied().filter(|&v| self.is_live(v)).collect()
    }

    /// Splits `group` into classes of blocks connected by live edges,
    /// ordered by (size, smallest block).
    fn split(&mut self, group: &[usize]) -> Vec<Vec<usize>> {
        if group.len() <= 1 {
            return vec![group.to_vec()];
        }
        self.epoch += 1;
        for &b in group {
            self.stamp[b] = self.epoch;
        }
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut parts = Vec::new();
        for &root in group {
            if !seen.insert(root) {
                continue;
            }
            let mut part = vec![root];
            let mut stack = vec![root];
            while let Some(b) = stack.pop() {
                for &x in self.g.block(b) {
                    if !self.is_live(x) {
                        continue;
                    }
                    for &y in self.g.neighbors(x) {
                        let c = self.g.block_of(y);
                        if c != b && self.stamp[c] == self.epoch && self.is_live(y) && seen.insert(c) {
                            part.push(c);
                            stack.push(c);
                        }
                    }
                }
            }
            parts.push(part);
        }
        for part in &mut parts {
            part.sort_unstable();
        }
        parts.sort_by_key(|p| (p.len(), p[0]));
        parts
    }

    fn pick_block(&self, part: &[usize]) -> (usize, Vec<usize>) {
        let pos = (0..part.len()).min_by_key(|&i| (self.live[part[i]], part[i])).expect("part nonempty");
        let mut rest = part.to_vec();
        rest.remove(pos);
        (part[pos], rest)
    }

    fn solve_group(&mut self, group: &[usize]) -> Result<bool, BudgetExceeded> {
        if group.is_empty() {
            return Ok(true);
        }
        if group.iter().any(|&b| self.live[b] == 0) {
            return Ok(false);
        }
        let mark = self.trail.len();
        for part in self.split(group) {
            if !self.solve_connected(&part)? {
                self.undo_to(mark);
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn solve_connected(&mut self, part: &[usize]) -> Result<bool, BudgetExceeded> {
        let (b, rest) = self.pick_block(part);
        for x in self.candidates(b) {
            self.clock.tick()?;
            self.assign(x);
            if rest.iter().all(|&c| self.live[c] > 0) && self.solve_group(&rest)? {
                return Ok(true);
            }
            self.unassign();
        }
        Ok(false)
    }

    fn count_group(&mut self, group: &[usize]) -> Result<u128, BudgetExceeded> {
        if group.is_empty() {
            return Ok(1);
        }
        if group.iter().any(|&b| self.live[b] == 0) {
            return Ok(0);
        }
        let mut total: u128 = 1;
        for part in self.split(group) {
            let (b, rest) = self.pick_block(&part);
            let mut sub: u128 = 0;
            for x in self.candidates(b) {
                self.clock.tick()?;
                self.assign(x);
                let c = self.count_group(&rest);
                self.unassign();
                sub = sub.saturating_add(c?);
            }
            if sub == 0 {
                return Ok(0);
            }
            total = total.saturating_mul(sub);
        }
        Ok(total)
    }

    fn transversal(&self) -> Transversal {
        Transversal { assignment: self.chosen.iter().enumerate().filter_map(|(b, v)| v.map(|v| (b, v))).collect() }
    }
}

fn decide(g: &PartitionedGraph, skip_block: Option<usize>, budget: &SearchBudget) -> ItOutcome {
    let mut engine = Engine::new(g, budget);
    let group: Vec<usize> = (0..g.r()).filter(|&b| Some(b) != skip_block).collect();
    match engine.solve_group(&group) {
        Ok(true) => {
            let t = engine.transversal();
            debug_assert!(t.is_valid(g));
            ItOutcome::Found(t)
        }
        Ok(false) => ItOutcome::NoneExists { nodes: engine.clock.nodes },
        Err(e) => ItOutcome::BudgetExceeded { nodes: e.nodes },
    }
}

/// Decides whether `g` has an independent transversal.
pub fn find_it(g: &PartitionedGraph, budget: &SearchBudget) -> ItOutcome {
    decide(g, None, budget)
}

/// Decides whether `g - V_block` has an independent transversal with
/// respect to the remaining blocks.
pub fn find_it_without_block(g: &PartitionedGraph, block: usize, budget: &SearchBudget) -> ItOutcome {
    decide(g, Some(block), budget)
}

/// Exact number of independent transversals.
pub fn count_its(g: &PartitionedGraph, budget: &SearchBudget) -> Result<u128, BudgetExceeded> {
    let mut engine = Engine::new(g, budget);
    let group: Vec<usize> = (0..g.r()).collect();
    engine.count_group(&group)
}

/// No IT, but deleting any one block leaves a graph with an IT. Each of
/// the `r + 1` searches runs under its own copy of `budget`.
pub fn is_block_minimal(g: &PartitionedGraph, budget: &SearchBudget) -> Result<bool, BudgetExceeded> {
    match find_it(g, budget) {
        ItOutcome::Found(_) => return Ok(false),
        ItOutcome::BudgetExceeded { nodes } => return Err(BudgetExceeded { nodes }),
        ItOutcome::NoneExists { .. } => {}
    }
    for b in 0..g.r() {
        match find_it_without_block(g, b, budget) {
            ItOutcome::Found(_) => {}
            ItOutcome::NoneExists { .. } => return Ok(false),
            ItOutcome::BudgetExceeded { nodes } => return Err(BudgetExceeded { nodes }),
        }
    }
    Ok(true)
}

/// Constraints for [`max_partial_it`].
#[derive(Clone, Debug, Default)]
pub struct PartialItQuery {
    pub forced: Transversal,
    pub forbidden: BTreeSet<Vertex>,
    pub minimize_degree_of: Option<Vertex>,
}

/// A maximum partial independent transversal extending `forced` and
/// avoiding `forbidden`; among maximum ones, one with the fewest neighbors
/// of `minimize_degree_of`.
pub fn max_partial_it(
    g: &PartitionedGraph,
    query: &PartialItQuery,
    budget: &SearchBudget,
) -> Result<Transversal, TransversalError> {
    query.forced.validate(g).map_err(TransversalError::InvalidConstraint)?;
    if let Some(v) = query.forced.vertices().intersection(&query.forbidden).next() {
        return Err(TransversalError::InvalidConstraint(format!("forced vertex {v} is forbidden")));
    }
    if let Some(w) = query.minimize_degree_of {
        if w >= g.n() {
            return Err(TransversalError::InvalidConstraint(format!("vertex {w} out of range")));
        }
    }
    let mut clock = Clock::new(budget);
    let components = g.components();
    if components.iter().all(|c| c.is_complete_bipartite()) {
        if let Some(t) = max_partial_cb(g, &components, query, &mut clock)? {
            return Ok(t);
        }
    }
    max_partial_generic(g, query, &mut clock)
}

const MAX_SIDE_BRANCHES: usize = 20;

/// `(block, vertex)` pairs.
type Assignment = Vec<(usize, Vertex)>;

/// Disjoint union of complete bipartite graphs: an independent set uses
/// at most one side of each component, so enumerate side choices and
/// solve a block-vertex matching for each. Returns `None` when there are
/// too many branching components for enumeration.
fn max_partial_cb(
    g: &PartitionedGraph,
    components: &[crate::graph::Component],
    query: &PartialItQuery,
    clock: &mut Clock,
) -> Result<Option<Transversal>, BudgetExceeded> {
    let n = g.n();
    let mut comp_of = vec![0; n];
    let mut side_of = vec![0u8; n];
    for (c, comp) in components.iter().enumerate() {
        let (a, b) = comp.sides.as_ref().expect("complete bipartite");
        for &v in a {
            comp_of[v] = c;
        }
        for &v in b {
            comp_of[v] = c;
            side_of[v] = 1;
        }
    }
    let forced = query.forced.vertices();
    let mut fixed_side: Vec<Option<u8>> = vec![None; components.len()];
    for &v in &forced {
        fixed_side[comp_of[v]] = Some(side_of[v]);
    }
    let allowed: Vec<bool> = (0..n)
        .map(|v| {
            !query.forbidden.contains(&v)
                && query.forced.get(g.block_of(v)).is_none()
                && fixed_side[comp_of[v]].is_none_or(|s| s == side_of[v])
        })
        .collect();
    let mut has_side = vec![[false; 2]; components.len()];
    for v in (0..n).filter(|&v| allowed[v]) {
        has_side[comp_of[v]][side_of[v] as usize] = true;
    }
    let mut branching = Vec::new();
    for (c, sides) in has_side.iter().enumerate() {
        if fixed_side[c].is_none() {
            match sides {
                [true, true] => branching.push(c),
                [false, true] => fixed_side[c] = Some(1),
                _ => fixed_side[c] = Some(0),
            }
        }
    }
    if branching.len() > MAX_SIDE_BRANCHES {
        return Ok(None);
    }
    let free_blocks: Vec<usize> = (0..g.r()).filter(|&b| query.forced.get(b).is_none()).collect();
    let w_nbrs: BTreeSet<Vertex> =
        query.minimize_degree_of.map(|w| g.neighbors(w).iter().copied().collect()).unwrap_or_default();
    let forced_deg = forced.intersection(&w_nbrs).count();

    let mut best: Option<(usize, usize, Assignment)> = None;
    let mut side = fixed_side.clone();
    for mask in 0u64..(1u64 << branching.len()) {
        clock.tick()?;
        for (bit, &c) in branching.iter().enumerate() {
            side[c] = Some(((mask >> bit) & 1) as u8);
        }
        let candidates: Vec<Vec<Vertex>> = free_blocks
            .iter()
            .map(|&b| {
                g.block(b).iter().copied().filter(|&v| allowed[v] && side[comp_of[v]] == Some(side_of[v])).collect()
            })
            .collect();
        let mut matching = BlockMatching::new(free_blocks.len(), n);
        matching.grow(&candidates, |v| !w_nbrs.contains(&v));
        matching.grow(&candidates, |_| true);
        let pairs: Vec<(usize, Vertex)> = matching.pairs().map(|(l, v)| (free_blocks[l], v)).collect();
        let size = forced.len() + pairs.len();
        let deg = forced_deg + pairs.iter().filter(|(_, v)| w_nbrs.contains(v)).count();
        let better = match &best {
            None => true,
            Some((s, d, _)) => size > *s || (size == *s && deg < *d),
        };
        if better {
            best = Some((size, deg, pairs));
        }
    }
    let (_, _, pairs) = best.expect("at least one side choice");
    let mut t = query.forced.clone();
    t.assignment.extend(pairs);
    Ok(Some(t))
}

/// Branch and bound over blocks in index order: cardinality first, then
/// the degree of the distinguished vertex, tried as caps 0, 1, 2, ...
fn max_partial_generic(
    g: &PartitionedGraph,
    query: &PartialItQuery,
    clock: &mut Clock,
) -> Result<Transversal, TransversalError> {
    let mut engine = Engine::new(g, &clock.budget);
    engine.clock.nodes = clock.nodes;
    for &v in &query.forbidden {
        if v < g.n() {
            engine.exclude(v);
        }
    }
    for &v in query.forced.assignment.values() {
        engine.assign(v);
    }
    let free: Vec<usize> = (0..g.r()).filter(|&b| query.forced.get(b).is_none()).collect();
    let w = query.minimize_degree_of;

    let mut search = PartialSearch { engine, free, w, best: None };
    let forced_deg = w.map_or(0, |w| query.forced.vertices().iter().filter(|&&v| g.has_edge(v, w)).count());
    search.maximize(0, query.forced.len(), forced_deg)?;
    let (size, deg, found) = search.best.clone().expect("empty extension always exists");
    if w.is_some() {
        for cap in 0..deg {
            if let Some(t) = search.reach(0, query.forced.len(), forced_deg, size, cap)? {
                return Ok(t);
            }
        }
    }
    Ok(found)
}

struct PartialSearch<'a> {
    engine: Engine<'a>,
    free: Vec<usize>,
    w: Option<Vertex>,
    best: Option<(usize, usize, Transversal)>,
}

impl PartialSearch<'_> {
    fn degree_step(&self, x: Vertex) -> usize {
        self.w.is_some_and(|w| self.engine.g.has_edge(x, w)) as usize
    }

    fn upper_bound(&self, pos: usize) -> usize {
        self.free[pos..].iter().filter(|&&b| self.engine.live[b] > 0).count()
    }

    fn maximize(&mut self, pos: usize, size: usize, deg: usize) -> Result<(), BudgetExceeded> {
        let best_size = self.best.as_ref().map(|(s, _, _)| *s);
        if best_size.is_some_and(|s| size + self.upper_bound(pos) <= s) {
            return Ok(());
        }
        if pos == self.free.len() {
            self.best = Some((size, deg, self.engine.transversal()));
            return Ok(());
        }
        let b = self.free[pos];
        for x in self.engine.candidates(b) {
            self.engine.clock.tick()?;
            let step = self.degree_step(x);
            self.engine.assign(x);
            let r = self.maximize(pos + 1, size + 1, deg + step);
            self.engine.unassign();
            r?;
            if self.best.as_ref().is_some_and(|(s, _, _)| *s == size + 1 + self.free.len() - pos - 1) {
                return Ok(());
            }
        }
        self.maximize(pos + 1, size, deg)
    }

    /// First transversal in search order with exactly `target` vertices
    /// and degree at most `cap`.
    fn reach(
        &mut self,
        pos: usize,
        size: usize,
        deg: usize,
        target: usize,
        cap: usize,
    ) -> Result<Option<Transversal>, BudgetExceeded> {
        if deg > cap || size + self.upper_bound(pos) < target {
            return Ok(None);
        }
        if size == target {
            return Ok(Some(self.engine.transversal()));
        }
        let b = self.free[pos];
        for x in self.engine.candidates(b) {
            self.engine.clock.tick()?;
            let step = self.degree_step(x);
            self.engine.assign(x);
            let r = self.reach(pos + 1, size + 1, deg + step, target, cap);
            self.engine.unassign();
            if let Some(t) = r? {
                return Ok(Some(t));
            }
        }
        self.reach(pos + 1, size, deg, target, cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(a: usize, b: usize) -> PartitionedGraph {
        let edges = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)));
        PartitionedGraph::new(a + b, edges, vec![(0..a).collect(), (a..a + b).collect()]).unwrap()
    }

    /// C_4 a-b-c-d-a as 0-1-2-3-0 with blocks {a,b}, {c,d}.
    fn c4_split() -> PartitionedGraph {
        PartitionedGraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)], vec![vec![0, 1], vec![2, 3]]).unwrap()
    }

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn k33_has_no_it() {
        assert!(find_it(&k(3, 3), &budget()).is_none_exists());
    }

    #[test]
    fn c4_with_split_blocks_has_it() {
        match find_it(&c4_split(), &budget()) {
            ItOutcome::Found(t) => {
                assert!(t.is_full(&c4_split()) && t.is_valid(&c4_split()));
                assert_eq!(t.vertices(), BTreeSet::from([0, 2]));
            }
            other => panic!("expected an IT, got {other:?}"),
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_its(&c4_split(), &budget()), Ok(2));
        assert_eq!(count_its(&k(2, 2), &budget()), Ok(0));
        let two = PartitionedGraph::new(2, [], vec![vec![0], vec![1]]).unwrap();
        assert_eq!(count_its(&two, &budget()), Ok(1));
    }

    #[test]
    fn budget_is_reported() {
        let g = k(3, 3);
        match find_it(&g, &SearchBudget::nodes(1)) {
            ItOutcome::BudgetExceeded { nodes } => assert_eq!(nodes, 1),
            other => panic!("{other:?}"),
        }
        assert!(count_its(&g, &SearchBudget::nodes(2)).is_err());
    }

    #[test]
    fn block_minimality() {
        assert_eq!(is_block_minimal(&k(2, 2), &budget()), Ok(true));
        // copy 1 standard, copy 2 entirely inside a third block: copy 1
        // alone already blocks every IT, so the third block is redundant
        let edges = [(0, 2), (0, 3), (1, 2), (1, 3), (4, 6), (4, 7), (5, 6), (5, 7)];
        let g = PartitionedGraph::new(8, edges, vec![vec![0, 1], vec![2, 3], vec![4, 5, 6, 7]]).unwrap();
        assert!(find_it(&g, &budget()).is_none_exists());
        assert_eq!(is_block_minimal(&g, &budget()), Ok(false));
        let single = PartitionedGraph::new(1, [], vec![vec![0]]).unwrap();
        assert_eq!(is_block_minimal(&single, &budget()), Ok(false));
    }

    #[test]
    fn max_partial_on_k33_is_one() {
        let t = max_partial_it(&k(3, 3), &PartialItQuery::default(), &budget()).unwrap();
        assert_eq!(t.len(), 1);
    }

    #[test]
    fn max_partial_rejects_bad_forced() {
        let g = k(2, 2);
        let q = PartialItQuery { forced: Transversal::from_vertices(&g, [0, 2]), ..Default::default() };
        assert!(matches!(max_partial_it(&g, &q, &budget()), Err(TransversalError::InvalidConstraint(_))));
        let q = PartialItQuery {
            forced: Transversal::from_vertices(&g, [0]),
            forbidden: BTreeSet::from([0]),
            ..Default::default()
        };
        assert!(matches!(max_partial_it(&g, &q, &budget()), Err(TransversalError::InvalidConstraint(_))));
    }

    #[test]
    fn degree_minimization_prefers_non_neighbors() {
        // path 0-1-2, blocks {1,2} and {0}; w = 0. Both {1} and {2} are
        // maximal for block 0 excluded; minimizing deg(0) must pick 2.
        let g = PartitionedGraph::new(3, [(0, 1), (1, 2)], vec![vec![0], vec![1, 2]]).unwrap();
        let q = PartialItQuery { forbidden: BTreeSet::from([0]), minimize_degree_of: Some(0), ..Default::default() };
        let t = max_partial_it(&g, &q, &budget()).unwrap();
        assert_eq!(t.vertices(), BTreeSet::from([2]));
        // same on a non-bipartite graph through the generic path
        let tri = PartitionedGraph::new(4, [(0, 1), (1, 2), (2, 0)], vec![vec![0], vec![1, 3], vec![2]]).unwrap();
        let q = PartialItQuery { forbidden: BTreeSet::from([0, 2]), minimize_degree_of: Some(0), ..Default::default() };
        let t = max_partial_it(&tri, &q, &budget()).unwrap();
        assert_eq!(t.vertices(), BTreeSet::from([3]));
    }
}
