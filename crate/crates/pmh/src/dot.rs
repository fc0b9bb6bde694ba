//! Graphviz export. Output depends only on the graph and the highlighted
//! sets, so identical inputs give identical bytes.

use std::fmt::Write;

use pmh_core::{EdgeClass, EdgeSet, Graph};

#[derive(Clone, Copy, Debug, Default)]
pub struct Highlight<'a> {
    /// Drawn with `style=bold`.
    pub matching: Option<&'a EdgeSet>,
    /// Drawn with `color=red`.
    pub cut: Option<&'a EdgeSet>,
}

pub fn to_dot(g: &Graph, name: &str, highlight: Highlight<'_>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{name}\" {{");
    out.push_str("  node [shape=circle];\n");
    for v in 0..g.order() {
        let _ = writeln!(out, "  {};", g.label(v));
    }
    for (e, edge) in g.edges().iter().enumerate() {
        let (x, y) = g.edge_labels(e);
        let mut attrs = Vec::new();
        if highlight.matching.is_some_and(|m| m.contains(e)) {
            attrs.push("style=bold".to_owned());
        }
        if highlight.cut.is_some_and(|c| c.contains(e)) {
            attrs.push("color=red".to_owned());
        }
        if edge.class != EdgeClass::Generic {
            attrs.push(format!("class={}", edge.class.as_str()));
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {x} -- {y};");
        } else {
            let _ = writeln!(out, "  {x} -- {y} [{}];", attrs.join(", "));
        }
    }
    out.push_str("}\n");
    out
}
