//! Unit-cell scan: the stabilizer sum witness of every 12-qubit cell, with
//! bootstrap intervals, raw and mitigated.
//!
//! ```text
//! cargo run --release --example unit_cells
//! ```

use gsbench::analysis::unit_cell_scan;
use gsbench::distribution::normalize_counts;
use gsbench::witness::WitnessSubject;
use gsbench::{sample_counts, two_color, CalibrationSet, CountsTable, Graph, NoiseConfig, WitnessInputs};

fn main() -> gsbench::Result<()> {
    let g = Graph::preset("heavy-hex-127")?;
    let coloring = two_color(&g);
    let cal = CalibrationSet::uniform(g.n(), 0.01, 0.02)?;
    let noise = NoiseConfig { white_noise_p: 0.05, readout: Some(cal.clone()), seed: 5, ..NoiseConfig::default() };
    let counts: Vec<CountsTable> =
        (0..2).map(|c| sample_counts(&g, &coloring, c, 30_000, &noise)).collect::<gsbench::Result<_>>()?;
    let dists = counts.iter().map(normalize_counts).collect::<gsbench::Result<Vec<_>>>()?;
    let inputs = WitnessInputs::new(&g, &coloring, &dists).with_calibration(&cal);

    for qrem in [false, true] {
        let cells = unit_cell_scan(&inputs, &counts, qrem, 1000, 5)?;
        println!(
            "{} ({} of {} detected)",
            if qrem { "mitigated" } else { "raw" },
            cells.iter().filter(|c| c.detected).count(),
            cells.len()
        );
        for c in cells.iter().take(4) {
            let WitnessSubject::Subgraph(cell) = &c.subject else { continue };
            println!(
                "  cell from {:>3}: SSW {:>7.4}  95% CI [{:>7.4}, {:>7.4}]",
                cell.vertices[0], c.point, c.ci_low, c.ci_high
            );
        }
    }
    Ok(())
}
