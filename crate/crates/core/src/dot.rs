// SPDX-License-Identifier: Apache-2.0

//! Graphviz export of a benchmark report.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pipeline::{BenchReport, ModeReport};
use crate::witness::WitnessSubject;

/// Fill color for a vertex with stabilizer expectation `s`: blue at `⟨S⟩ = 1`,
/// red at `⟨S⟩ = −1`.
fn fill(s: f64) -> String {
    let t = ((1.0 - s.clamp(-1.0, 1.0)) / 2.0).clamp(0.0, 1.0);
    let r = (40.0 + 215.0 * t).round() as u8;
    let b = (255.0 - 215.0 * t).round() as u8;
    format!("#{r:02x}60{b:02x}")
}

/// DOT document: nodes colored by `−⟨S_i⟩`, edges bold and red when the
/// bipartite witness is detected, unit cells as labeled clusters. Uses the
/// mitigated results when the report has them.
pub fn export_dot(report: &BenchReport, g: &Graph) -> Result<String> {
    let graph_edges: Vec<[usize; 2]> = g.edges().iter().map(|&(a, b)| [a, b]).collect();
    if report.graph.n != g.n() || report.graph.edges != graph_edges {
        return Err(Error::InvalidArgument(format!(
            "report describes a graph with {} vertices and {} edges, not the given one with {} and {}",
            report.graph.n,
            report.graph.edges.len(),
            g.n(),
            g.edges().len()
        )));
    }
    let mode: Option<&ModeReport> = report.mode(true).or_else(|| report.mode(false));
    if let Some(m) = mode {
        if m.stabilizers.len() != g.n() {
            return Err(Error::InvalidArgument("report has stabilizers for a different vertex count".into()));
        }
    }
    let name = report.graph.name.as_deref().unwrap_or("G");
    let mut out = String::new();
    writeln!(out, "graph {name:?} {{").unwrap();
    writeln!(out, "  node [shape=circle, style=filled, fontsize=10];").unwrap();
    for v in 0..g.n() {
        match mode {
            Some(m) => {
                let s = m.stabilizers[v].point;
                writeln!(out, "  {v} [fillcolor=\"{}\", tooltip=\"<S>={s:.4}\"];", fill(s)).unwrap();
            }
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    let detected: BTreeSet<[usize; 2]> = mode
        .and_then(|m| m.bipartite.as_ref())
        .map(|b| {
            b.edges
                .iter()
                .filter(|v| v.detected)
                .filter_map(|v| match v.subject {
                    WitnessSubject::Edge(e) => Some(e),
                    WitnessSubject::Subgraph(_) => None,
                })
                .collect()
        })
        .unwrap_or_default();
    for &(a, b) in g.edges() {
        if detected.contains(&[a, b]) {
            writeln!(out, "  {a} -- {b} [color=red, penwidth=3, style=bold];").unwrap();
        } else {
            writeln!(out, "  {a} -- {b} [color=gray, style=dashed];").unwrap();
        }
    }
    if let Some(cells) = mode.and_then(|m| m.unit_cells.as_ref()) {
        // a node can sit in only one cluster, so shared vertices stay with the first cell
        let mut placed = BTreeSet::new();
        for (i, cell) in cells.cells.iter().enumerate() {
            let WitnessSubject::Subgraph(sub) = &cell.subject else { continue };
            let label = if cell.detected { "detected" } else { "not detected" };
            writeln!(out, "  subgraph cluster_cell_{i} {{").unwrap();
            writeln!(out, "    label=\"cell {i}: SSW {:.3} ({label})\";", cell.point).unwrap();
            writeln!(out, "    color={};", if cell.detected { "red" } else { "gray" }).unwrap();
            let own: Vec<String> = sub.vertices.iter().filter(|v| placed.insert(**v)).map(|v| v.to_string()).collect();
            if !own.is_empty() {
                writeln!(out, "    {};", own.join("; ")).unwrap();
            }
            writeln!(out, "  }}").unwrap();
        }
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}
