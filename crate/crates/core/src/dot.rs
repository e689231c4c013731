//! Graphviz export: blocks become clusters, vertices are filled by
//! component.

use std::fmt::Write;

use crate::graph::PartitionedGraph;

const PALETTE: [&str; 12] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd",
    "#ccebc5", "#ffed6f",
];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot(g: &PartitionedGraph) -> String {
    let comp = g.component_index();
    let mut out = String::from("graph G {\n  node [style=filled, shape=circle];\n");
    for (i, block) in g.blocks().iter().enumerate() {
        writeln!(out, "  subgraph cluster_{i} {{\n    label=\"V{i}\";").unwrap();
        for &v in block {
            let label = g.label(v).map_or_else(|| v.to_string(), str::to_string);
            let color = PALETTE[comp[v] % PALETTE.len()];
            writeln!(out, "    {v} [label={}, fillcolor=\"{color}\"];", quote(&label)).unwrap();
        }
        out.push_str("  }\n");
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
