//! Witness values on an 8-qubit path as white noise grows, from exact outcome weights.
//!
//! ```text
//! cargo run --example witness_values
//! ```

use gsbench::sim::exact_setting_weights;
use gsbench::tolerance::white_noise_tolerance;
use gsbench::witness::{
    coloring_witness, refined_cbw_path, refined_path_partition, stabilizer_expectations, stabilizer_sum_witness,
};
use gsbench::{two_color, Graph, NoiseConfig, SubgraphRef, WitnessInputs};

fn main() -> gsbench::Result<()> {
    let g = Graph::path(8);
    let coloring = two_color(&g);
    let path = SubgraphRef::path((0..8).collect());

    println!("{:>5}  {:>8}  {:>8}  {:>8}", "p", "SSW", "CBW", "refined");
    for step in 0..=10 {
        let p = 0.05 * step as f64;
        let noise = NoiseConfig { white_noise_p: p, ..NoiseConfig::default() };
        let dists =
            (0..2).map(|c| exact_setting_weights(&g, &coloring, c, &noise)).collect::<gsbench::Result<Vec<_>>>()?;
        let inputs = WitnessInputs::new(&g, &coloring, &dists);
        let stab = stabilizer_expectations(&inputs, false)?;
        println!(
            "{p:>5.2}  {:>8.4}  {:>8.4}  {:>8.4}",
            stabilizer_sum_witness(&path, &stab)?.value,
            coloring_witness(&inputs, &path, false)?.value,
            refined_cbw_path(&inputs, &path, false)?.value,
        );
    }

    let refined = refined_path_partition(&path.vertices, &coloring);
    println!(
        "\ntolerances: SSW {:.4}, CBW {:.4}, refined CBW {:.4} (cells {:?})",
        1.0 / 8.0,
        white_noise_tolerance(&[4, 4])?,
        white_noise_tolerance(&refined.cell_sizes())?,
        refined.cells(),
    );
    Ok(())
}
