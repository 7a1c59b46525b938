//! End-to-end benchmark from a JSON configuration: simulate, analyze, write
//! the report, counts and a Graphviz rendering.
//!
//! ```text
//! cargo run --release --example pipeline [OUTPUT_DIR]
//! ```

use std::path::PathBuf;

use gsbench::dot::export_dot;
use gsbench::{run_pipeline, Graph, RunConfig};

const CONFIG: &str = r#"{
    "graph": {"preset": "heavy-hex-127"},
    "shots": 30000,
    "noise": {
        "white_noise_p": 0.02,
        "cz_depolarizing_p": 0.004,
        "readout": {"random": {"min": 0.005, "max": 0.04}}
    },
    "analyses": {"ssw_paths": {"min": 2, "max": 30}},
    "seed": 2024
}"#;

fn main() -> gsbench::Result<()> {
    let dir: PathBuf =
        std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("gsbench-pipeline"));
    let mut config = RunConfig::from_json(CONFIG)?;
    config.output_dir = Some(dir.clone());
    let report = run_pipeline(&config)?;

    for mode in &report.modes {
        let label = if mode.qrem { "mitigated" } else { "raw" };
        let b = mode.bipartite.as_ref().expect("bipartite enabled");
        let cells = mode.unit_cells.as_ref().expect("unit cells enabled");
        let longest_gme = mode
            .paths
            .iter()
            .flatten()
            .filter(|p| [&p.ssw, &p.cbw, &p.cbw_refined].iter().any(|v| v.as_ref().is_some_and(|v| v.detected)))
            .map(|p| p.n)
            .max();
        println!(
            "{label:>9}: {} edges detected, largest region {}, {}/{} unit cells, longest certified path {:?}",
            b.detected_edges,
            b.regions.largest,
            cells.detected,
            cells.cells.len(),
            longest_gme
        );
    }
    println!("timing: {:?}", report.timing);

    let g = Graph::new(report.graph.n, report.graph.edges.iter().map(|e| (e[0], e[1])))?;
    std::fs::write(dir.join("report.dot"), export_dot(&report, &g)?)?;
    println!("wrote report.json, counts and report.dot to {}", dir.display());
    Ok(())
}
