//! Bipartite witnesses on every coupler and the regions they connect.
//!
//! ```text
//! cargo run --release --example bipartite_regions
//! ```

use gsbench::analysis::{bipartite_regions, edge_verdicts};
use gsbench::distribution::normalize_counts;
use gsbench::{sample_counts, two_color, CalibrationSet, CountsTable, Graph, NoiseConfig, WitnessInputs};

fn main() -> gsbench::Result<()> {
    let g = Graph::preset("heavy-hex-127")?;
    let coloring = two_color(&g);
    for readout in [0.03, 0.12, 0.2] {
        let cal = CalibrationSet::uniform(g.n(), readout, readout)?;
        let noise = NoiseConfig { white_noise_p: 0.02, readout: Some(cal.clone()), seed: 9, ..NoiseConfig::default() };
        let counts: Vec<CountsTable> =
            (0..2).map(|c| sample_counts(&g, &coloring, c, 30_000, &noise)).collect::<gsbench::Result<_>>()?;
        let dists = counts.iter().map(normalize_counts).collect::<gsbench::Result<Vec<_>>>()?;
        let inputs = WitnessInputs::new(&g, &coloring, &dists).with_calibration(&cal);
        for qrem in [false, true] {
            let verdicts = edge_verdicts(&inputs, &counts, qrem, 500, 9)?;
            let regions = bipartite_regions(&g, &verdicts)?;
            println!(
                "readout {readout:.2} {:>9}: {:>3}/{} edges detected, {:>3} regions, largest {:>3}",
                if qrem { "mitigated" } else { "raw" },
                verdicts.iter().filter(|v| v.detected).count(),
                verdicts.len(),
                regions.components.len(),
                regions.largest
            );
        }
    }
    Ok(())
}
