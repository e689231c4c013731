//! Vertex-partitioned graphs and the structural queries built on them.
//!
//! A [`PartitionedGraph`] is a simple undirected graph on the dense vertex
//! set `0..n` together with a partition of the vertices into nonempty
//! blocks. The representation is canonical: neighbor lists and blocks are
//! sorted ascending and blocks are ordered by their minimum member, so two
//! graphs compare equal exactly when their canonical JSON forms agree.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionedGraph {
    adj: Vec<Vec<Vertex>>,
    blocks: Vec<Vec<Vertex>>,
    block_of: Vec<usize>,
    labels: BTreeMap<Vertex, String>,
}

impl PartitionedGraph {
    /// Builds a partitioned graph, validating the partition and dropping
    /// duplicate edges. Blocks are re-ordered canonically.
    pub fn new<E>(n: usize, edges: E, blocks: Vec<Vec<Vertex>>) -> Result<Self, GraphError>
    where
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let adj = adj.into_iter().map(|s| s.into_iter().collect()).collect();
        Self::from_parts(n, adj, blocks, BTreeMap::new())
    }

    pub(crate) fn from_parts(
        n: usize,
        adj: Vec<Vec<Vertex>>,
        mut blocks: Vec<Vec<Vertex>>,
        labels: BTreeMap<Vertex, String>,
    ) -> Result<Self, GraphError> {
        if blocks.is_empty() {
            return Err(GraphError::NoBlocks);
        }
        let mut block_of = vec![usize::MAX; n];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(GraphError::EmptyBlock);
            }
            block.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        for (i, block) in blocks.iter().enumerate() {
            for &v in block {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
                if block_of[v] != usize::MAX {
                    return Err(GraphError::OverlappingBlocks(v));
                }
                block_of[v] = i;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(GraphError::UncoveredVertex(v));
        }
        if let Some((&v, _)) = labels.iter().find(|(&v, _)| v >= n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n });
        }
        Ok(Self { adj, blocks, block_of, labels })
    }

    pub fn with_labels(mut self, labels: BTreeMap<Vertex, String>) -> Result<Self, GraphError> {
        if let Some((&v, _)) = labels.iter().find(|(&v, _)| v >= self.n()) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() });
        }
        self.labels = labels;
        Ok(self)
    }

    /// Prefixes every existing label, and labels unlabeled vertices by id.
    pub fn with_label_prefix(mut self, prefix: &str) -> Self {
        let labels = (0..self.n())
            .map(|v| {
                let base = self.labels.get(&v).cloned().unwrap_or_else(|| v.to_string());
                (v, format!("{prefix}/{base}"))
            })
            .collect();
        self.labels = labels;
        self
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of blocks.
    pub fn r(&self) -> usize {
        self.blocks.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[Vertex] {
        &self.blocks[i]
    }

    pub fn block_of(&self, v: Vertex) -> usize {
        self.block_of[v]
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub(crate) fn adjacency(&self) -> &[Vec<Vertex>] {
        &self.adj
    }

    /// Applies a vertex bijection `old -> perm[old]`, keeping the block
    /// structure.
    pub fn relabeled(&self, perm: &[Vertex]) -> Result<Self, GraphError> {
        let n = self.n();
        if perm.len() != n {
            return Err(GraphError::BadPermutation);
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::BadPermutation);
            }
        }
        let edges = self.edges().map(|(u, v)| (perm[u], perm[v]));
        let blocks = self.blocks.iter().map(|b| b.iter().map(|&v| perm[v]).collect()).collect();
        let labels = self.labels.iter().map(|(&v, l)| (perm[v], l.clone())).collect();
        Self::new(n, edges, blocks)?.with_labels(labels)
    }

    /// Connected components in order of their minimum vertex, with exact
    /// complete-bipartite detection.
    pub fn components(&self) -> Vec<Component> {
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            let mut vertices = Vec::new();
            let mut bipartite = true;
            while let Some(u) = queue.pop_front() {
                vertices.push(u);
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        bipartite = false;
                    }
                }
            }
            vertices.sort_unstable();
            let sides = if bipartite {
                let (a, b): (Vec<_>, Vec<_>) = vertices.iter().partition(|&&v| side[v] == 0);
                let edge_count: usize = vertices.iter().map(|&v| self.adj[v].len()).sum::<usize>() / 2;
                (edge_count == a.len() * b.len()).then_some((a, b))
            } else {
                None
            };
            out.push(Component { vertices, sides });
        }
        out
    }

    /// Component index of every vertex, consistent with [`Self::components`].
    pub fn component_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n()];
        for (c, comp) in self.components().iter().enumerate() {
            for &v in &comp.vertices {
                idx[v] = c;
            }
        }
        idx
    }

    pub fn stats(&self) -> GraphStats {
        let max_degree = self.adj.iter().map(Vec::len).max().unwrap_or(0);
        let mut local_degree = 0;
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for v in 0..self.n() {
            counts.clear();
            for &w in &self.adj[v] {
                let b = self.block_of[w];
                if b != self.block_of[v] {
                    *counts.entry(b).or_default() += 1;
                }
            }
            local_degree = local_degree.max(counts.values().copied().max().unwrap_or(0));
        }
        let components = self.components();
        let mut multiplicity = 0;
        for comp in &components {
            counts.clear();
            for &v in &comp.vertices {
                *counts.entry(self.block_of[v]).or_default() += 1;
            }
            multiplicity = multiplicity.max(counts.values().copied().max().unwrap_or(0));
        }
        GraphStats {
            max_degree,
            local_degree,
            multiplicity,
            component_count: components.len(),
            block_sizes: self.block_sizes(),
        }
    }

    /// True iff every component is complete bipartite.
    pub fn is_cb_union(&self) -> bool {
        self.components().iter().all(Component::is_complete_bipartite)
    }

    /// True iff no vertex has `k` pairwise nonadjacent neighbors, i.e. the
    /// graph has no induced `K_{1,k}`.
    pub fn is_star_free(&self, k: usize) -> bool {
        (0..self.n()).all(|v| !self.has_independent_subset(&self.adj[v], k))
    }

    fn has_independent_subset(&self, pool: &[Vertex], k: usize) -> bool {
        fn extend(g: &PartitionedGraph, pool: &[Vertex], chosen: &mut Vec<Vertex>, k: usize) -> bool {
            if chosen.len() == k {
                return true;
            }
            for (i, &x) in pool.iter().enumerate() {
                if pool.len() - i < k - chosen.len() {
                    break;
                }
                if chosen.iter().all(|&c| !g.has_edge(c, x)) {
                    chosen.push(x);
                    if extend(g, &pool[i + 1..], chosen, k) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        pool.len() >= k && extend(self, pool, &mut Vec::with_capacity(k), k)
    }

    pub fn block_graph(&self, subset: &BTreeSet<Vertex>) -> BlockGraph {
        let active: BTreeSet<usize> = subset.iter().map(|&v| self.block_of[v]).collect();
        let mut edges: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut loops = 0;
        for &u in subset {
            for &v in &self.adj[u] {
                if u < v && subset.contains(&v) {
                    let (a, b) = (self.block_of[u], self.block_of[v]);
                    if a == b {
                        loops += 1;
                    } else {
                        *edges.entry((a.min(b), a.max(b))).or_default() += 1;
                    }
                }
            }
        }
        let covered = active.iter().flat_map(|&b| self.blocks[b].iter().copied()).collect();
        BlockGraph { active, edges, loops, covered }
    }

    /// True iff the complement graph is connected.
    pub fn complement_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let mut unvisited: BTreeSet<Vertex> = (1..n).collect();
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            let next: Vec<Vertex> =
                unvisited.iter().copied().filter(|&w| self.adj[u].binary_search(&w).is_err()).collect();
            for w in next {
                unvisited.remove(&w);
                queue.push_back(w);
            }
        }
        unvisited.is_empty()
    }

    /// Induced subgraph on the complement of `doomed`, re-densified in
    /// ascending order. Returns the old-to-new map alongside. Blocks that
    /// become empty are dropped.
    pub(crate) fn induced_without(&self, doomed: &BTreeSet<Vertex>) -> (Self, Vec<Option<Vertex>>) {
        let mut map = vec![None; self.n()];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !doomed.contains(&v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let adj = (0..self.n())
            .filter(|v| map[*v].is_some())
            .map(|v| self.adj[v].iter().filter_map(|&w| map[w]).collect())
            .collect();
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().filter_map(|&v| map[v]).collect::<Vec<_>>())
            .filter(|b| !b.is_empty())
            .collect();
        let labels = self.labels.iter().filter_map(|(&v, l)| map[v].map(|nv| (nv, l.clone()))).collect();
        let g = Self::from_parts(next, adj, blocks, labels).expect("induced subgraph stays valid");
        (g, map)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            version: 1,
            n: self.n(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
            blocks: self.blocks.clone(),
            labels: self.labels.clone(),
        }
    }

    /// Canonical compact JSON text.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("graph serializes")
    }

    pub fn from_json_str(text: &str) -> Result<Self, GraphError> {
        let json: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        Self::try_from(json)
    }
}

/// Serialized form of a [`PartitionedGraph`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub version: u32,
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    pub blocks: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<Vertex, String>,
}

impl TryFrom<GraphJson> for PartitionedGraph {
    type Error = GraphError;

    fn try_from(json: GraphJson) -> Result<Self, GraphError> {
        if json.version != 1 {
            return Err(GraphError::Version(json.version));
        }
        PartitionedGraph::new(json.n, json.edges.into_iter().map(|[u, v]| (u, v)), json.blocks)?
            .with_labels(json.labels)
    }
}

impl From<&PartitionedGraph> for GraphJson {
    fn from(g: &PartitionedGraph) -> Self {
        g.to_json()
    }
}

/// A connected component. `sides` is set iff the component induces a
/// complete bipartite graph; side `A` holds the minimum vertex. An isolated
/// vertex counts as `K_{1,0}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub vertices: Vec<Vertex>,
    pub sides: Option<(Vec<Vertex>, Vec<Vertex>)>,
}

impl Component {
    pub fn is_complete_bipartite(&self) -> bool {
        self.sides.is_some()
    }

    pub fn side_a(&self) -> Option<&[Vertex]> {
        self.sides.as_ref().map(|(a, _)| a.as_slice())
    }

    pub fn side_b(&self) -> Option<&[Vertex]> {
        self.sides.as_ref().map(|(_, b)| b.as_slice())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub max_degree: usize,
    pub local_degree: usize,
    pub multiplicity: usize,
    pub component_count: usize,
    pub block_sizes: Vec<usize>,
}

/// The contraction of `G[I]` onto its active blocks. Parallel edges and
/// loops produced by the contraction are counted, not merged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockGraph {
    pub active: BTreeSet<usize>,
    pub edges: BTreeMap<(usize, usize), usize>,
    pub loops: usize,
    pub covered: BTreeSet<Vertex>,
}

impl BlockGraph {
    pub fn node_count(&self) -> usize {
        self.active.len()
    }

    /// Number of contracted edges, counting multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.values().sum()
    }

    pub fn neighbors(&self, block: usize) -> Vec<usize> {
        self.edges
            .keys()
            .filter_map(|&(a, b)| {
                if a == block {
                    Some(b)
                } else if b == block {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, block: usize) -> usize {
        self.edges.iter().filter(|((a, b), _)| *a == block || *b == block).map(|(_, m)| m).sum()
    }

    /// A tree on the active blocks. The empty block graph counts as a tree.
    pub fn is_tree(&self) -> bool {
        if self.active.is_empty() {
            return true;
        }
        if self.loops > 0 || self.edge_count() + 1 != self.node_count() {
            return false;
        }
        let start = *self.active.iter().next().expect("nonempty");
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(b) = stack.pop() {
            for nb in self.neighbors(b) {
                if seen.insert(nb) {
                    stack.push(nb);
                }
            }
        }
        seen.len() == self.node_count()
    }
}
