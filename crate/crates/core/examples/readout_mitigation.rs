//! Readout error mitigation: raw and mitigated stabilizer expectations, and
//! the size limit on mitigated cells.
//!
//! ```text
//! cargo run --example readout_mitigation
//! ```

use gsbench::distribution::{normalize_counts, QubitCalibration};
use gsbench::witness::{coloring_witness, stabilizer_expectations};
use gsbench::{sample_counts, two_color, CalibrationSet, Graph, NoiseConfig, SubgraphRef, WitnessInputs};

fn main() -> gsbench::Result<()> {
    let g = Graph::cycle(6);
    let coloring = two_color(&g);
    // asymmetric, qubit-dependent readout errors
    let cal = CalibrationSet::new((0..6).map(|q| (q, QubitCalibration::new(0.01 + 0.01 * q as f64, 0.04))).collect())?;
    let noise = NoiseConfig { readout: Some(cal.clone()), seed: 3, ..NoiseConfig::default() };
    let dists = (0..2)
        .map(|c| normalize_counts(&sample_counts(&g, &coloring, c, 100_000, &noise)?))
        .collect::<gsbench::Result<Vec<_>>>()?;
    let inputs = WitnessInputs::new(&g, &coloring, &dists).with_calibration(&cal);

    let raw = stabilizer_expectations(&inputs, false)?;
    let fixed = stabilizer_expectations(&inputs, true)?;
    println!("vertex  raw <S>  mitigated <S>");
    for v in 0..g.n() {
        println!("{v:>6}  {:>7.4}  {:>13.4}", raw[v], fixed[v]);
    }

    let whole = SubgraphRef::generic((0..6).collect());
    println!(
        "\nCBW raw {:.4}, mitigated {:.4}",
        coloring_witness(&inputs, &whole, false)?.value,
        coloring_witness(&inputs, &whole, true)?.value
    );

    // each mitigated cell touches its neighbors too; a limit of 4 is too small here
    match coloring_witness(&inputs.with_mitigation_limit(4), &whole, true) {
        Ok(w) => println!("unexpected: {}", w.value),
        Err(e) => println!("with a 4-qubit limit: {e}"),
    }
    Ok(())
}
