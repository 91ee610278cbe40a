use std::fmt::Write;

use crate::graph_json::GraphDocument;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Graphviz rendering: nodes named by id and labeled by their symbol string.
/// Root and leaf, when known, are drawn with a double border.
pub fn to_dot(doc: &GraphDocument, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for v in &doc.vertices {
        let ends = [&doc.meta.root, &doc.meta.leaf];
        let extra = if ends.iter().any(|m| m.as_deref() == Some(v.id.as_str())) { ", peripheries=2" } else { "" };
        writeln!(out, "  {} [label={}, tooltip={}{extra}];", quote(&v.id), quote(&v.label), quote(&v.id)).unwrap();
    }
    for e in &doc.edges {
        writeln!(out, "  {} -> {} [label={}];", quote(&e.from), quote(&e.to), quote(&e.label)).unwrap();
    }
    out.push_str("}\n");
    out
}
