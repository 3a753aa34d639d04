use std::fmt::Write;

use quiver_hh_core::digraph::Digraph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Plain `digraph` text with one node per vertex and edges labelled by id.
pub fn to_dot(d: &Digraph, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    for v in d.vertex_names() {
        writeln!(out, "  {};", quote(v)).unwrap();
    }
    for e in d.edge_ids() {
        writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(d.vertex_name(d.src(e))),
            quote(d.vertex_name(d.tgt(e))),
            quote(d.edge_name(e))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
