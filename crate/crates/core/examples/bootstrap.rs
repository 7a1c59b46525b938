//! Bootstrap intervals for arbitrary statistics of the counts, and how they
//! narrow with more shots.
//!
//! ```text
//! cargo run --example bootstrap
//! ```

use gsbench::analysis::{bootstrap_ci, bootstrap_linear, vertex_projector_functionals};
use gsbench::distribution::normalize_counts;
use gsbench::witness::{coloring_witness, WitnessSubject};
use gsbench::{sample_counts, two_color, CountsTable, Graph, NoiseConfig, SubgraphRef, WitnessInputs};

fn main() -> gsbench::Result<()> {
    let g = Graph::path(6);
    let coloring = two_color(&g);
    let path = SubgraphRef::path((0..6).collect());
    let noise = NoiseConfig { white_noise_p: 0.2, seed: 1, ..NoiseConfig::default() };

    for shots in [200, 2_000, 20_000] {
        let counts: Vec<CountsTable> =
            (0..2).map(|c| sample_counts(&g, &coloring, c, shots, &noise)).collect::<gsbench::Result<_>>()?;

        // generic route: re-evaluate the witness on every resample
        let cbw = |tables: &[CountsTable]| -> gsbench::Result<f64> {
            let dists = tables.iter().map(normalize_counts).collect::<gsbench::Result<Vec<_>>>()?;
            Ok(coloring_witness(&WitnessInputs::new(&g, &coloring, &dists), &path, false)?.value)
        };
        let v = bootstrap_ci(&counts, cbw, 1000, 7, WitnessSubject::Subgraph(path.clone()))?;

        // linear route: per-vertex projectors, combined into the mean <S_i>
        let dists = counts.iter().map(normalize_counts).collect::<gsbench::Result<Vec<_>>>()?;
        let functionals = vertex_projector_functionals(&WitnessInputs::new(&g, &coloring, &dists), &counts, false)?;
        let mean_s = bootstrap_linear(
            &counts,
            &functionals,
            |p| vec![p.iter().map(|x| 2.0 * x - 1.0).sum::<f64>() / p.len() as f64],
            1000,
            7,
        )?;

        println!(
            "{shots:>6} shots: CBW {:>7.4} [{:>7.4}, {:>7.4}] detected={:<5}  mean <S> {:.4} [{:.4}, {:.4}]",
            v.point, v.ci_low, v.ci_high, v.detected, mean_s[0].point, mean_s[0].low, mean_s[0].high
        );
    }
    Ok(())
}
