//! Sampling the two measurement settings of a noisy 127-qubit graph state.
//!
//! ```text
//! cargo run --release --example sample_graph_state
//! ```

use std::time::Instant;

use gsbench::distribution::normalize_counts;
use gsbench::sim::MeasurementSetting;
use gsbench::witness::stabilizer_expectations;
use gsbench::{sample_counts, two_color, CalibrationSet, Distribution, Graph, NoiseConfig, WitnessInputs};

fn main() -> gsbench::Result<()> {
    let g = Graph::preset("heavy-hex-127")?;
    let coloring = two_color(&g);
    let noise = NoiseConfig {
        white_noise_p: 0.02,
        cz_depolarizing_p: 0.005,
        readout: Some(CalibrationSet::uniform(g.n(), 0.02, 0.03)?),
        seed: 42,
    };

    let mut dists = Vec::new();
    for color in 0..coloring.k() {
        let start = Instant::now();
        let counts = sample_counts(&g, &coloring, color, 30_000, &noise)?;
        let setting = MeasurementSetting::new(&coloring, color)?;
        println!(
            "setting {color}: X on {} qubits, {} shots, {} distinct outcomes, {:.2} s",
            setting.x_set.len(),
            counts.shots(),
            counts.counts().len(),
            start.elapsed().as_secs_f64()
        );
        dists.push(normalize_counts(&counts)?);
    }

    let stab = stabilizer_expectations(&WitnessInputs::new(&g, &coloring, &dists as &[Distribution]), false)?;
    let mean = stab.iter().sum::<f64>() / stab.len() as f64;
    let (lo, hi) = stab.iter().fold((f64::MAX, f64::MIN), |(a, b), &s| (a.min(s), b.max(s)));
    println!("raw <S_i>: mean {mean:.4}, range [{lo:.4}, {hi:.4}]");
    Ok(())
}
