// SPDX-License-Identifier: Apache-2.0

//! White-noise tolerances of projector witnesses.
//!
//! Under `ρ = (1 − p)|G⟩⟨G| + p I/2^n` each projector has expectation
//! `(1 − p) + p 2^{−n_l}`, so the witness value is
//! `−1/2 + p (k − Σ_l 2^{−n_l})` and vanishes at
//! `p_tol = 1/2 (k − Σ_l 2^{−n_l})^{−1}`.

use crate::error::{Error, Result};
use crate::witness::REFINED_GROUP;

/// `p_tol` for a partition with the given cell sizes.
///
/// An empty cell adds 1 to `k` and `2^0 = 1` to the sum, so it has no effect.
pub fn white_noise_tolerance(sizes: &[usize]) -> Result<f64> {
    if sizes.is_empty() {
        return Err(Error::InvalidArgument("tolerance needs at least one cell".into()));
    }
    let denom: f64 = sizes.iter().map(|&s| 1.0 - 0.5f64.powi(s as i32)).sum();
    if denom <= 0.0 {
        return Err(Error::InvalidArgument("every cell is empty".into()));
    }
    Ok(0.5 / denom)
}

/// `p_tol = 1/n` of the stabilizer sum witness on `n` qubits.
pub fn ssw_tolerance(n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    Ok(1.0 / n as f64)
}

/// Cell sizes of the refined coloring witness on an `n`-vertex path: groups
/// of five consecutive vertices, a group of `m` splitting into `⌈m/2⌉` and `⌊m/2⌋`.
pub fn refined_path_cell_sizes(n: usize) -> Vec<usize> {
    let mut sizes = Vec::new();
    let mut left = n;
    while left > 0 {
        let m = left.min(REFINED_GROUP);
        sizes.push(m.div_ceil(2));
        if m / 2 > 0 {
            sizes.push(m / 2);
        }
        left -= m;
    }
    sizes
}

/// `c(n) = n p_tol` of the refined coloring witness on an `n`-vertex path.
pub fn c_factor(n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    Ok(n as f64 * white_noise_tolerance(&refined_path_cell_sizes(n))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        for n in 1..40 {
            let singletons = vec![1; n];
            assert!((white_noise_tolerance(&singletons).unwrap() - 1.0 / n as f64).abs() < 1e-12);
        }
        assert!((white_noise_tolerance(&[2, 2]).unwrap() - 1.0 / 3.0).abs() < 1e-12);
        assert!((white_noise_tolerance(&[2, 0, 2]).unwrap() - 1.0 / 3.0).abs() < 1e-12);
        assert!(white_noise_tolerance(&[]).is_err());
        assert!(white_noise_tolerance(&[0]).is_err());
        for n in (5..=60).step_by(5) {
            assert!((c_factor(n).unwrap() - 20.0 / 13.0).abs() < 1e-12);
        }
        assert_eq!(refined_path_cell_sizes(7), vec![3, 2, 1, 1]);
        assert!(c_factor(0).is_err());
    }

    #[test]
    fn bounds_between_half_k_and_k() {
        for sizes in [vec![1, 5, 9], vec![3, 3, 2, 17], vec![40]] {
            let k = sizes.len() as f64;
            let p = white_noise_tolerance(&sizes).unwrap();
            assert!(p > 0.5 / k && p <= 1.0 / k);
        }
    }
}
