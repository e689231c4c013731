//! No-IT-preserving transforms and the named constructions built from them.
//!
//! Every transform here maps graphs with no independent transversal to
//! graphs with no independent transversal: [`join`] and
//! [`join_dissolving_host`] are the two orientations of the join step,
//! [`edge_delete`] trades one cross edge for a fan into a third block, and
//! [`add_edges`], [`delete_vertices`] and [`blow_up`] are sound because
//! independence is monotone (an IT of the result projects to an IT of the
//! input).

mod generators;

use std::collections::{BTreeMap, BTreeSet};

use crate::certify::{CertStep, Certificate, Dissolve};
use crate::error::ConstructError;
use crate::graph::{PartitionedGraph, Vertex};

pub use generators::*;

/// Target block for each vertex of the dissolved block.
pub type Distribution = BTreeMap<Vertex, usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeDeletePlan {
    pub u: Vertex,
    pub v: Vertex,
    pub k: usize,
    pub f: Vec<(Vertex, Vertex)>,
}

fn check_distribution(block: &[Vertex], dist: &Distribution, targets: usize) -> Result<(), ConstructError> {
    if let Some(v) = block.iter().find(|v| !dist.contains_key(v)) {
        return Err(ConstructError::InvalidDistribution(format!("vertex {v} has no target")));
    }
    if dist.len() != block.len() {
        let stray = dist.keys().find(|v| block.binary_search(v).is_err()).expect("extra key");
        return Err(ConstructError::InvalidDistribution(format!("vertex {stray} is not in the dissolved block")));
    }
    if let Some((v, t)) = dist.iter().find(|(_, &t)| t >= targets) {
        return Err(ConstructError::InvalidDistribution(format!(
            "vertex {v} targets block {t}, but there are only {targets}"
        )));
    }
    Ok(())
}

fn union_parts(first: &PartitionedGraph, second: &PartitionedGraph) -> (Vec<Vec<Vertex>>, BTreeMap<Vertex, String>) {
    let off = first.n();
    let mut adj = first.adjacency().to_vec();
    adj.extend(second.adjacency().iter().map(|nb| nb.iter().map(|&w| w + off).collect()));
    let mut labels = first.labels().clone();
    labels.extend(second.labels().iter().map(|(&v, l)| (v + off, l.clone())));
    (adj, labels)
}

/// Disjoint union in which block `s` of `added` is dissolved into the
/// blocks of `host` according to `dist` (keys are vertices of `added`).
/// Vertices of `added` are shifted by `host.n()`.
pub fn join(
    host: &PartitionedGraph,
    added: &PartitionedGraph,
    s: usize,
    dist: &Distribution,
) -> Result<PartitionedGraph, ConstructError> {
    if s >= added.r() {
        return Err(ConstructError::InvalidDistribution(format!("block {s} out of range")));
    }
    check_distribution(added.block(s), dist, host.r())?;
    let off = host.n();
    let (adj, labels) = union_parts(host, added);
    let mut blocks = host.blocks().to_vec();
    for (&v, &t) in dist {
        blocks[t].push(v + off);
    }
    for (i, b) in added.blocks().iter().enumerate() {
        if i != s {
            blocks.push(b.iter().map(|&v| v + off).collect());
        }
    }
    Ok(PartitionedGraph::from_parts(off + added.n(), adj, blocks, labels)?)
}

/// The other orientation: block `s` of `host` is dissolved into the
/// blocks of `added` (keys of `dist` are vertices of `host`). Host vertex
/// ids are kept and `added` is shifted by `host.n()`.
pub fn join_dissolving_host(
    host: &PartitionedGraph,
    s: usize,
    added: &PartitionedGraph,
    dist: &Distribution,
) -> Result<PartitionedGraph, ConstructError> {
    if s >= host.r() {
        return Err(ConstructError::InvalidDistribution(format!("block {s} out of range")));
    }
    check_distribution(host.block(s), dist, added.r())?;
    let off = host.n();
    let (adj, labels) = union_parts(host, added);
    let mut grown: Vec<Vec<Vertex>> = added.blocks().iter().map(|b| b.iter().map(|&v| v + off).collect()).collect();
    for (&v, &t) in dist {
        grown[t].push(v);
    }
    let mut blocks: Vec<Vec<Vertex>> =
        host.blocks().iter().enumerate().filter(|(i, _)| *i != s).map(|(_, b)| b.clone()).collect();
    blocks.extend(grown);
    Ok(PartitionedGraph::from_parts(off + added.n(), adj, blocks, labels)?)
}

/// Removes the cross edge `uv` and adds `F`, which joins every vertex of
/// block `k` to `u` or `v`.
pub fn edge_delete(g: &PartitionedGraph, plan: &EdgeDeletePlan) -> Result<PartitionedGraph, ConstructError> {
    let EdgeDeletePlan { u, v, k, ref f } = *plan;
    let bad = |msg: String| Err(ConstructError::InvalidPlan(msg));
    if u >= g.n() || v >= g.n() {
        return bad(format!("edge {u}-{v} out of range"));
    }
    if !g.has_edge(u, v) {
        return Err(ConstructError::EdgeAbsent(u, v));
    }
    let (i, j) = (g.block_of(u), g.block_of(v));
    if i == j {
        return bad(format!("{u} and {v} lie in the same block {i}"));
    }
    if k >= g.r() || k == i || k == j {
        return bad(format!("block {k} must differ from blocks {i} and {j}"));
    }
    let mut covered = BTreeSet::new();
    for &(a, b) in f {
        let x = match (a, b) {
            (a, x) if a == u || a == v => x,
            (x, b) if b == u || b == v => x,
            _ => return bad(format!("edge {a}-{b} does not meet {u} or {v}")),
        };
        if x >= g.n() || g.block_of(x) != k {
            return bad(format!("edge {a}-{b} does not reach block {k}"));
        }
        covered.insert(x);
    }
    if let Some(x) = g.block(k).iter().find(|x| !covered.contains(x)) {
        return bad(format!("vertex {x} of block {k} is not covered"));
    }
    let mut adj = g.adjacency().to_vec();
    adj[u].retain(|&w| w != v);
    adj[v].retain(|&w| w != u);
    for &(a, b) in f {
        insert_edge(&mut adj, a, b);
    }
    Ok(PartitionedGraph::from_parts(g.n(), adj, g.blocks().to_vec(), g.labels().clone())?)
}

fn insert_edge(adj: &mut [Vec<Vertex>], a: Vertex, b: Vertex) {
    if let Err(pos) = adj[a].binary_search(&b) {
        adj[a].insert(pos, b);
    }
    if let Err(pos) = adj[b].binary_search(&a) {
        adj[b].insert(pos, a);
    }
}

pub fn add_edges(g: &PartitionedGraph, extra: &[(Vertex, Vertex)]) -> Result<PartitionedGraph, ConstructError> {
    let mut adj = g.adjacency().to_vec();
    for &(a, b) in extra {
        if a >= g.n() || b >= g.n() {
            return Err(crate::error::GraphError::VertexOutOfRange { vertex: a.max(b), n: g.n() }.into());
        }
        if a == b {
            return Err(ConstructError::LoopEdge(a));
        }
        insert_edge(&mut adj, a, b);
    }
    Ok(PartitionedGraph::from_parts(g.n(), adj, g.blocks().to_vec(), g.labels().clone())?)
}

/// Induced subgraph without `doomed`, renumbered densely in ascending
/// order. The second value maps old ids to new ones.
pub fn delete_vertices(
    g: &PartitionedGraph,
    doomed: &BTreeSet<Vertex>,
) -> Result<(PartitionedGraph, Vec<Option<Vertex>>), ConstructError> {
    if let Some(&v) = doomed.iter().find(|&&v| v >= g.n()) {
        return Err(crate::error::GraphError::VertexOutOfRange { vertex: v, n: g.n() }.into());
    }
    if let Some(i) = (0..g.r()).find(|&i| g.block(i).iter().all(|v| doomed.contains(v))) {
        return Err(ConstructError::EmptiesBlock(i));
    }
    Ok(g.induced_without(doomed))
}

/// Replaces every vertex by `m` independent copies (`v` becomes
/// `v*m .. v*m+m`) and every edge by `K_{m,m}`.
pub fn blow_up(g: &PartitionedGraph, m: usize) -> Result<PartitionedGraph, ConstructError> {
    if m == 0 {
        return Err(ConstructError::InvalidParameter("blow-up factor must be at least 1".into()));
    }
    let adj = (0..g.n() * m)
        .map(|x| {
            let v = x / m;
            g.neighbors(v).iter().flat_map(|&w| w * m..w * m + m).collect()
        })
        .collect();
    let blocks = g.blocks().iter().map(|b| b.iter().flat_map(|&v| v * m..v * m + m).collect()).collect();
    let labels = g.labels().iter().flat_map(|(&v, l)| (0..m).map(move |i| (v * m + i, format!("{l}#{i}")))).collect();
    Ok(PartitionedGraph::from_parts(g.n() * m, adj, blocks, labels)?)
}

/// Whether every set of `t` blocks has total size at least `n(t-1)+1`.
/// The smallest `t` blocks are the binding set for each `t`.
pub fn check_block_sum_condition(g: &PartitionedGraph, n: usize) -> bool {
    let mut sizes = g.block_sizes();
    sizes.sort_unstable();
    let mut sum = 0;
    sizes.iter().enumerate().all(|(t, &s)| {
        sum += s;
        sum > n * t
    })
}

/// A generated graph with a certificate that replays to it.
#[derive(Clone, Debug)]
pub struct Construction {
    pub graph: PartitionedGraph,
    pub certificate: Certificate,
}

/// Applies transforms to a running graph and records each as a
/// certificate step.
#[derive(Clone, Debug)]
pub struct CertifiedBuilder {
    state: PartitionedGraph,
    steps: Vec<CertStep>,
}

impl CertifiedBuilder {
    pub fn new(base: PartitionedGraph) -> Self {
        let steps = vec![CertStep::Base { graph: base.to_json() }];
        Self { state: base, steps }
    }

    pub fn graph(&self) -> &PartitionedGraph {
        &self.state
    }

    pub fn join(&mut self, added: &PartitionedGraph, s: usize, dist: Distribution) -> Result<(), ConstructError> {
        self.state = join(&self.state, added, s, &dist)?;
        self.steps.push(CertStep::Join { added: added.to_json(), s, dist, dissolve: Dissolve::Added });
        Ok(())
    }

    /// Dissolves block `s` of the current graph into the blocks of `added`.
    pub fn join_host(&mut self, s: usize, added: &PartitionedGraph, dist: Distribution) -> Result<(), ConstructError> {
        self.state = join_dissolving_host(&self.state, s, added, &dist)?;
        self.steps.push(CertStep::Join { added: added.to_json(), s, dist, dissolve: Dissolve::Host });
        Ok(())
    }

    pub fn edge_delete(&mut self, plan: EdgeDeletePlan) -> Result<(), ConstructError> {
        self.state = edge_delete(&self.state, &plan)?;
        self.steps.push(CertStep::EdgeDelete {
            u: plan.u,
            v: plan.v,
            k: plan.k,
            f: plan.f.iter().map(|&(a, b)| [a, b]).collect(),
        });
        Ok(())
    }

    pub fn add_edges(&mut self, extra: Vec<(Vertex, Vertex)>) -> Result<(), ConstructError> {
        self.state = add_edges(&self.state, &extra)?;
        self.steps.push(CertStep::AddEdges { extra: extra.iter().map(|&(a, b)| [a, b]).collect() });
        Ok(())
    }

    pub fn delete_vertices(&mut self, doomed: BTreeSet<Vertex>) -> Result<Vec<Option<Vertex>>, ConstructError> {
        let (g, map) = delete_vertices(&self.state, &doomed)?;
        self.state = g;
        self.steps.push(CertStep::DeleteVertices { doomed: doomed.into_iter().collect() });
        Ok(map)
    }

    pub fn blow_up(&mut self, m: usize) -> Result<(), ConstructError> {
        self.state = blow_up(&self.state, m)?;
        self.steps.push(CertStep::BlowUp { m });
        Ok(())
    }

    pub fn finish(self) -> Construction {
        Construction { graph: self.state, certificate: Certificate { version: 1, steps: self.steps } }
    }
}
