//! Search for the induced paths with the lowest stabilizer sum witness on the
//! 127-qubit map.
//!
//! ```text
//! cargo run --release --example path_search
//! ```

use gsbench::analysis::min_ssw_path_search;
use gsbench::distribution::normalize_counts;
use gsbench::witness::stabilizer_expectations;
use gsbench::{sample_counts, two_color, Graph, NoiseConfig, WitnessInputs};

fn main() -> gsbench::Result<()> {
    let g = Graph::preset("heavy-hex-127")?;
    let coloring = two_color(&g);
    let noise = NoiseConfig { white_noise_p: 0.04, cz_depolarizing_p: 0.01, seed: 11, ..NoiseConfig::default() };
    let dists = (0..2)
        .map(|c| normalize_counts(&sample_counts(&g, &coloring, c, 30_000, &noise)?))
        .collect::<gsbench::Result<Vec<_>>>()?;
    let stab = stabilizer_expectations(&WitnessInputs::new(&g, &coloring, &dists), false)?;

    let lengths: Vec<usize> = (2..=40).collect();
    let mut largest = None;
    for r in min_ssw_path_search(&g, &stab, &lengths)? {
        let (Some(v), Some(path)) = (r.value, &r.best) else { continue };
        if v < 0.0 {
            largest = Some(r.n);
        }
        if r.n % 5 == 0 || v >= 0.0 && largest == Some(r.n - 1) {
            println!("n={:>2}  min SSW {v:>8.4}  path starts {:?}", r.n, &path.vertices[..4]);
        }
    }
    println!("longest path with negative SSW: {largest:?}");
    Ok(())
}
