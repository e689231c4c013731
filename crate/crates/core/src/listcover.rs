//! List colouring instances and their list cover graphs.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::ListError;
use crate::graph::{PartitionedGraph, Vertex};
use crate::transversal::Transversal;

pub type Color = u64;

/// A graph `H` with a list of allowed colours per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListInstance {
    pub version: u32,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub lists: Vec<Vec<Color>>,
}

impl ListInstance {
    /// Lists are sorted and deduplicated; edges are normalised.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        lists: Vec<Vec<Color>>,
    ) -> Result<Self, ListError> {
        let edges: BTreeSet<[usize; 2]> = edges.into_iter().map(|(x, y)| [x.min(y), x.max(y)]).collect();
        let lists = lists
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        let inst = Self { version: 1, n, edges: edges.into_iter().collect(), lists };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<(), ListError> {
        let bad = |m: String| Err(ListError::Malformed(m));
        if self.version != 1 {
            return bad(format!("unsupported version {}", self.version));
        }
        if self.lists.len() != self.n {
            return bad(format!("{} lists for {} vertices", self.lists.len(), self.n));
        }
        for (x, l) in self.lists.iter().enumerate() {
            if l.is_empty() {
                return bad(format!("list of {x} is empty"));
            }
            if l.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("list of {x} is not strictly increasing"));
            }
        }
        for &[x, y] in &self.edges {
            if x >= self.n || y >= self.n || x == y {
                return bad(format!("bad edge [{x}, {y}]"));
            }
        }
        Ok(())
    }

    pub fn from_json_str(text: &str) -> Result<Self, ListError> {
        let raw: Self = serde_json::from_str(text).map_err(|e| ListError::Malformed(e.to_string()))?;
        Self::new(raw.n, raw.edges.iter().map(|e| (e[0], e[1])), raw.lists).and_then(|inst| {
            if raw.version == 1 {
                Ok(inst)
            } else {
                Err(ListError::Malformed(format!("unsupported version {}", raw.version)))
            }
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("instance serializes")
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &[x, y] in &self.edges {
            adj[x].push(y);
            adj[y].push(x);
        }
        adj
    }

    /// Id of the cover vertex `(x, c)`: vertices are numbered by `x`, then
    /// by colour.
    fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.n + 1);
        off.push(0);
        for l in &self.lists {
            off.push(off.last().unwrap() + l.len());
        }
        off
    }

    pub fn is_proper(&self, coloring: &BTreeMap<usize, Color>) -> bool {
        coloring.len() == self.n
            && coloring.iter().all(|(&x, c)| x < self.n && self.lists[x].contains(c))
            && self.edges.iter().all(|&[x, y]| coloring[&x] != coloring[&y])
    }
}

/// Maximum over `(x, c)` of the number of neighbours `y` of `x` with `c`
/// in `L(y)`.
pub fn max_color_degree(inst: &ListInstance) -> usize {
    let adj = inst.adjacency();
    (0..inst.n)
        .flat_map(|x| inst.lists[x].iter().map(move |c| (x, c)))
        .map(|(x, c)| adj[x].iter().filter(|&&y| inst.lists[y].binary_search(c).is_ok()).count())
        .max()
        .unwrap_or(0)
}

/// The list cover graph: vertices `(x, c)`, blocks `V_x`, and
/// `(x, c) ~ (y, c)` whenever `xy` is an edge of `H`.
pub fn cover_graph(inst: &ListInstance) -> Result<PartitionedGraph, ListError> {
    inst.validate()?;
    let off = inst.offsets();
    let id = |x: usize, c: &Color| off[x] + inst.lists[x].binary_search(c).expect("colour in list");
    let mut edges = Vec::new();
    for &[x, y] in &inst.edges {
        for c in &inst.lists[x] {
            if inst.lists[y].binary_search(c).is_ok() {
                edges.push((id(x, c), id(y, c)));
            }
        }
    }
    let blocks = (0..inst.n).map(|x| (off[x]..off[x + 1]).collect()).collect();
    let labels = (0..inst.n)
        .flat_map(|x| inst.lists[x].iter().map(move |c| (x, c)))
        .map(|(x, c)| (id(x, c), format!("{x}:{c}")))
        .collect();
    let g = PartitionedGraph::new(off[inst.n], edges, blocks).map_err(|e| ListError::Malformed(e.to_string()))?;
    g.with_labels(labels).map_err(|e| ListError::Malformed(e.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoverConditions {
    pub a: bool,
    pub b: bool,
}

/// (a) multiplicity one; (b) any two components induce the same
/// adjacency on the blocks they share.
pub fn check_list_cover_conditions(g: &PartitionedGraph) -> CoverConditions {
    let comps = g.components();
    let a = g.stats().multiplicity <= 1;
    // for each component, block -> its vertices there
    let per_comp: Vec<BTreeMap<usize, Vec<Vertex>>> = comps
        .iter()
        .map(|c| {
            let mut m: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
            for &v in &c.vertices {
                m.entry(g.block_of(v)).or_default().push(v);
            }
            m
        })
        .collect();
    // block pair -> adjacency seen so far (one vertex pair per component)
    let mut seen: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    let mut b = true;
    'outer: for m in &per_comp {
        let blocks: Vec<(&usize, &Vec<Vertex>)> = m.iter().collect();
        for (p, (bi, vi)) in blocks.iter().enumerate() {
            for (bj, vj) in &blocks[p + 1..] {
                for &v in vi.iter() {
                    for &w in vj.iter() {
                        let adj = g.has_edge(v, w);
                        if *seen.entry((**bi, **bj)).or_insert(adj) != adj {
                            b = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    CoverConditions { a, b }
}

/// The instance whose cover graph is `g`: `H` on the blocks, one colour per
/// component (its index). The second value maps each vertex of `g` to its
/// vertex in the cover graph of the instance.
pub fn recover_instance_with_map(g: &PartitionedGraph) -> Result<(ListInstance, Vec<Vertex>), ListError> {
    let cond = check_list_cover_conditions(g);
    if !(cond.a && cond.b) {
        return Err(ListError::NotCoverGraph { a: cond.a, b: cond.b });
    }
    let comp = g.component_index();
    let edges: BTreeSet<(usize, usize)> = g
        .edges()
        .map(|(u, v)| {
            let (x, y) = (g.block_of(u), g.block_of(v));
            (x.min(y), x.max(y))
        })
        .collect();
    let lists: Vec<Vec<Color>> = g.blocks().iter().map(|blk| blk.iter().map(|&v| comp[v] as Color).collect()).collect();
    let inst = ListInstance::new(g.r(), edges, lists)?;
    let off = inst.offsets();
    let map = (0..g.n())
        .map(|v| {
            let x = g.block_of(v);
            off[x] + inst.lists[x].binary_search(&(comp[v] as Color)).expect("own colour")
        })
        .collect();
    Ok((inst, map))
}

pub fn recover_instance(g: &PartitionedGraph) -> Result<ListInstance, ListError> {
    recover_instance_with_map(g).map(|(inst, _)| inst)
}

/// Reads a proper colouring off an IT of the cover graph.
pub fn it_to_coloring(inst: &ListInstance, t: &Transversal) -> Result<BTreeMap<usize, Color>, ListError> {
    let g = cover_graph(inst)?;
    t.validate(&g).map_err(ListError::Invalid)?;
    if !t.is_full(&g) {
        return Err(ListError::Invalid(format!("transversal covers {} of {} blocks", t.len(), g.r())));
    }
    let off = inst.offsets();
    let coloring: BTreeMap<usize, Color> = t.assignment.iter().map(|(&x, &v)| (x, inst.lists[x][v - off[x]])).collect();
    if !inst.is_proper(&coloring) {
        return Err(ListError::Invalid("colouring is not proper".into()));
    }
    Ok(coloring)
}

/// A component's shape: the blocks it meets and the block pairs it joins.
type Signature = (Vec<usize>, Vec<(usize, usize)>);

fn signatures(g: &PartitionedGraph) -> Vec<Signature> {
    let comp = g.component_index();
    let mut sig: Vec<Signature> = vec![(Vec::new(), Vec::new()); g.components().len()];
    for v in 0..g.n() {
        sig[comp[v]].0.push(g.block_of(v));
    }
    for (u, v) in g.edges() {
        let (x, y) = (g.block_of(u), g.block_of(v));
        sig[comp[u]].1.push((x.min(y), x.max(y)));
    }
    for s in &mut sig {
        s.0.sort_unstable();
        s.1.sort_unstable();
    }
    sig.sort();
    sig
}

/// Whether two multiplicity-one graphs on the same blocks are isomorphic
/// by a map fixing every block. Such a graph is determined by the
/// multiset of its component shapes.
pub fn block_isomorphic(g: &PartitionedGraph, h: &PartitionedGraph) -> bool {
    g.block_sizes() == h.block_sizes()
        && g.stats().multiplicity <= 1
        && h.stats().multiplicity <= 1
        && signatures(g) == signatures(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{blow_up, gen_complete_bipartite, gen_list_coloring_cx, gen_locally_sparse};
    use crate::transversal::{count_its, find_it, SearchBudget};

    fn complete(n: usize) -> Vec<(usize, usize)> {
        (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect()
    }

    #[test]
    fn triangle_two_colors() {
        let inst = ListInstance::new(3, complete(3), vec![vec![1, 2]; 3]).unwrap();
        let g = cover_graph(&inst).unwrap();
        assert_eq!((g.components().len(), g.block_sizes()), (2, vec![2; 3]));
        assert!(find_it(&g, &SearchBudget::default()).is_none_exists());
        assert_eq!(check_list_cover_conditions(&g), CoverConditions { a: true, b: true });
        assert_eq!(max_color_degree(&inst), g.stats().max_degree);
    }

    #[test]
    fn edge_with_distinct_lists() {
        let inst = ListInstance::new(2, [(0, 1)], vec![vec![1], vec![2]]).unwrap();
        let g = cover_graph(&inst).unwrap();
        assert_eq!(g.edge_count(), 0);
        let t = Transversal::from_vertices(&g, [0, 1]);
        assert_eq!(it_to_coloring(&inst, &t).unwrap(), BTreeMap::from([(0, 1), (1, 2)]));
    }

    #[test]
    fn path_coloring_and_invalid() {
        let inst = ListInstance::new(3, [(0, 1), (1, 2)], vec![vec![1, 2]; 3]).unwrap();
        let g = cover_graph(&inst).unwrap();
        let t = find_it(&g, &SearchBudget::default());
        let crate::transversal::ItOutcome::Found(t) = t else { panic!("path is 2-colourable") };
        assert!(inst.is_proper(&it_to_coloring(&inst, &t).unwrap()));
        // (0,1) and (1,1) are adjacent
        let bad = Transversal::from_vertices(&g, [0, 2, 5]);
        assert!(matches!(it_to_coloring(&inst, &bad), Err(ListError::Invalid(_))));
    }

    #[test]
    fn complete_graph_lists_too_short() {
        let inst = ListInstance::new(4, complete(4), vec![vec![1, 2, 3]; 4]).unwrap();
        let g = cover_graph(&inst).unwrap();
        assert_eq!(count_its(&g, &SearchBudget::default()).unwrap(), 0);
    }

    #[test]
    fn conditions_on_constructions() {
        let ls = gen_locally_sparse(2, 1).unwrap().graph;
        assert_eq!(check_list_cover_conditions(&ls), CoverConditions { a: true, b: false });
        let cx = gen_list_coloring_cx(2).unwrap().graph;
        assert_eq!(check_list_cover_conditions(&cx), CoverConditions { a: true, b: true });
        let blown = blow_up(&cx, 2).unwrap();
        assert_eq!(check_list_cover_conditions(&blown), CoverConditions { a: false, b: true });
    }

    #[test]
    fn recover_round_trip() {
        let inst = ListInstance::new(3, complete(3), vec![vec![1, 2]; 3]).unwrap();
        let g = cover_graph(&inst).unwrap();
        let (back, map) = recover_instance_with_map(&g).unwrap();
        assert_eq!(back.edges, inst.edges);
        assert!(back.lists.iter().all(|l| l.len() == 2));
        let cover = cover_graph(&back).unwrap();
        assert!(block_isomorphic(&g, &cover));
        assert!(g.edges().all(|(u, v)| cover.has_edge(map[u], map[v])));

        let cx = gen_list_coloring_cx(2).unwrap().graph;
        let rec = recover_instance(&cx).unwrap();
        assert!(rec.lists.iter().all(|l| l.len() == 3));
        assert_eq!(max_color_degree(&rec), 2);
        assert!(block_isomorphic(&cx, &cover_graph(&rec).unwrap()));

        let k = gen_complete_bipartite(2, 2).unwrap();
        assert_eq!(recover_instance(&k).unwrap_err(), ListError::NotCoverGraph { a: false, b: true });
    }

    #[test]
    fn json_round_trip() {
        let inst = ListInstance::new(2, [(1, 0)], vec![vec![3, 1], vec![2]]).unwrap();
        let text = inst.to_json_string();
        assert_eq!(text, r#"{"version":1,"n":2,"edges":[[0,1]],"lists":[[1,3],[2]]}"#);
        assert_eq!(ListInstance::from_json_str(&text).unwrap(), inst);
        assert!(ListInstance::from_json_str(r#"{"version":1,"n":1,"edges":[],"lists":[[]]}"#).is_err());
    }
}
