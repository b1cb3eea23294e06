//! Graphviz rendering of an assignment on P(n, 2).
//!
//! `V_2` is filled black, `V_1` grey, `V_0` white.

use std::fmt::Write;

use crate::assignment::{is_valid_rdf, RomanAssignment};
use crate::error::{Error, Result};
use crate::graph::{PetersenGraph, Ring};

fn fill(label: u8) -> &'static str {
    match label {
        2 => "black",
        1 => "grey",
        _ => "white",
    }
}

/// Renders `f` as an undirected DOT graph. Nodes are emitted `v0 .. v{n-1}`
/// then `u0 .. u{n-1}`; edges in [`PetersenGraph::edges`] order.
pub fn render_dot(g: &PetersenGraph, f: &RomanAssignment) -> Result<String> {
    let report = is_valid_rdf(g, f)?;
    if !report.valid {
        return Err(Error::InvalidRdf(report.violations));
    }
    let n = g.n();
    let mut out = String::new();
    writeln!(out, "graph P_{n}_{} {{", g.k()).unwrap();
    writeln!(out, "  layout=neato;").unwrap();
    writeln!(out, "  node [shape=circle, style=filled, fontsize=10];").unwrap();
    for w in g.vertices() {
        let label = f.label(w);
        let (radius, fontcolor) = match (w.ring, label) {
            (Ring::Outer, 2) => (2.0, "white"),
            (Ring::Outer, _) => (2.0, "black"),
            (Ring::Inner, 2) => (1.0, "white"),
            (Ring::Inner, _) => (1.0, "black"),
        };
        let angle = std::f64::consts::TAU * w.index as f64 / n as f64;
        writeln!(
            out,
            "  {w} [label=\"{w}\", fillcolor={}, fontcolor={fontcolor}, pos=\"{:.3},{:.3}!\"];",
            fill(label),
            radius * angle.sin(),
            radius * angle.cos(),
        )
        .unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
