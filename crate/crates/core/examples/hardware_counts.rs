//! Analyzing counts recorded elsewhere: provider-style bit order, a
//! calibration file, and a report built from the files alone.
//!
//! ```text
//! cargo run --example hardware_counts
//! ```

use std::collections::BTreeMap;

use gsbench::counts::{BitOrder, CountsDocument};
use gsbench::pipeline::{AnalysisToggles, GraphSource, PathRange, ReadoutSpec};
use gsbench::{sample_counts, two_color, CalibrationSet, Graph, NoiseConfig, RunConfig};

fn main() -> gsbench::Result<()> {
    let dir = std::env::temp_dir().join("gsbench-hardware");
    std::fs::create_dir_all(&dir)?;
    let g = Graph::cycle(12).with_name("ring12");
    std::fs::write(dir.join("ring12.json"), serde_json::to_string(&g.to_document())?)?;

    // stand-in for device output: simulate, then store with vertex 0 rightmost
    let coloring = two_color(&g);
    let cal = CalibrationSet::uniform(12, 0.03, 0.05)?;
    let noise = NoiseConfig { white_noise_p: 0.05, readout: Some(cal.clone()), seed: 12, ..NoiseConfig::default() };
    let mut files = Vec::new();
    for c in 0..2 {
        let t = sample_counts(&g, &coloring, c, 8192, &noise)?;
        let counts: BTreeMap<String, u64> = t.counts().iter().map(|(b, n)| (b.reversed().to_string(), *n)).collect();
        let doc =
            CountsDocument { schema_version: 1, setting: c, shots: t.shots(), bit_order: BitOrder::Reversed, counts };
        let path = dir.join(format!("device_setting_{c}.json"));
        std::fs::write(&path, serde_json::to_string_pretty(&doc)?)?;
        files.push(path);
    }
    std::fs::write(dir.join("calibration.json"), cal.to_json()?)?;

    let config = RunConfig {
        graph: GraphSource::File(dir.join("ring12.json")),
        noise: gsbench::pipeline::NoiseSpec {
            readout: ReadoutSpec::File(dir.join("calibration.json")),
            ..Default::default()
        },
        analyses: AnalysisToggles { ssw_paths: Some(PathRange { min: 2, max: 11 }), ..AnalysisToggles::default() },
        counts: Some(files),
        bootstrap: 500,
        ..RunConfig::default()
    };
    let report = gsbench::run_pipeline(&config)?;
    for mode in &report.modes {
        let cells = mode.unit_cells.as_ref().expect("enabled");
        println!(
            "{:>9}: ring SSW {:.4} [{:.4}, {:.4}], detected={}",
            if mode.qrem { "mitigated" } else { "raw" },
            cells.cells[0].point,
            cells.cells[0].ci_low,
            cells.cells[0].ci_high,
            cells.cells[0].detected
        );
    }
    Ok(())
}
