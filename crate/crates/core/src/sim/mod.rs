// SPDX-License-Identifier: Apache-2.0

//! Noisy graph-state preparation and sampling.
//!
//! The circuit is a Hadamard layer, the CZ gates of the graph grouped into
//! edge-colored layers, and a final Hadamard on the X-measured color class.
//! The ideal outcome space comes from a stabilizer tableau. Gate faults are
//! tracked as a Pauli frame, white noise as a per-shot switch to a uniform
//! outcome, and readout error as independent per-bit flips.

pub mod tableau;

use std::collections::BTreeMap;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::counts::CountsTable;
use crate::dense;
use crate::distribution::{apply_confusion, CalibrationSet, Distribution};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexColoring};
use crate::seed::stream_rng;

pub use tableau::{OutcomeSpace, Tableau};

/// Shots per setting used when nothing else is configured.
pub const DEFAULT_SHOTS: u64 = 30_000;
/// Qubit limit for [`exact_setting_weights`].
pub const EXACT_WEIGHTS_LIMIT: usize = 16;

const SHOT_CHUNK: u64 = 1024;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct NoiseConfig {
    /// Probability of replacing the state by the maximally mixed state.
    pub white_noise_p: f64,
    /// Probability of a uniformly random nontrivial two-qubit Pauli after each CZ.
    pub cz_depolarizing_p: f64,
    /// Ground-truth readout error applied to every measured bit.
    pub readout: Option<CalibrationSet>,
    pub seed: u64,
}

impl NoiseConfig {
    pub fn noiseless(seed: u64) -> Self {
        Self { seed, ..Self::default() }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        for (name, p) in [("white_noise_p", self.white_noise_p), ("cz_depolarizing_p", self.cz_depolarizing_p)] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidArgument(format!("{name} = {p} is not a probability")));
            }
        }
        if let Some(cal) = &self.readout {
            cal.covers(n)?;
        }
        Ok(())
    }
}

/// One color class measured in X, every other qubit in Z.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasurementSetting {
    pub color: usize,
    pub x_set: Vec<usize>,
    pub z_set: Vec<usize>,
}

impl MeasurementSetting {
    pub fn new(coloring: &VertexColoring, color: usize) -> Result<Self> {
        if color >= coloring.k() {
            return Err(Error::InvalidArgument(format!(
                "setting {color} does not exist for a {}-coloring",
                coloring.k()
            )));
        }
        let (x_set, z_set) = (0..coloring.colors().len()).partition(|&v| coloring.color(v) == color);
        Ok(Self { color, x_set, z_set })
    }

    pub fn all(coloring: &VertexColoring) -> Vec<Self> {
        (0..coloring.k()).map(|c| Self::new(coloring, c).expect("color in range")).collect()
    }
}

/// Greedy proper edge coloring; each layer holds pairwise disjoint edges.
///
/// Edges are visited in ascending order and placed in the first layer free at
/// both endpoints. Bipartite graphs of maximum degree `Δ` get an optimal
/// schedule through a Kempe-chain repair when the greedy pass overflows.
pub fn compile_layers(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    // color_at[v][c] = neighbor joined to v by an edge of color c
    let mut color_at: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    let bipartite = g.is_bipartite();
    let delta = g.max_degree();
    let free = |m: &BTreeMap<usize, usize>| (0..).find(|c| !m.contains_key(c)).unwrap();
    for &(a, b) in g.edges() {
        let mut c = (0..).find(|c| !color_at[a].contains_key(c) && !color_at[b].contains_key(c)).unwrap();
        if bipartite && c >= delta {
            // flip the alternating (ca, cb) path starting at b so that ca becomes free there
            let ca = free(&color_at[a]);
            let cb = free(&color_at[b]);
            let mut path = vec![b];
            let mut want = ca;
            let mut v = b;
            while let Some(&w) = color_at[v].get(&want) {
                path.push(w);
                v = w;
                want = if want == ca { cb } else { ca };
            }
            let mut colors = Vec::new();
            for pair in path.windows(2) {
                let (u, w) = (pair[0], pair[1]);
                let col = *color_at[u].iter().find(|(_, &x)| x == w).unwrap().0;
                colors.push(col);
            }
            for (pair, &col) in path.windows(2).zip(&colors) {
                color_at[pair[0]].remove(&col);
                color_at[pair[1]].remove(&col);
            }
            for (pair, &col) in path.windows(2).zip(&colors) {
                let swapped = if col == ca { cb } else { ca };
                color_at[pair[0]].insert(swapped, pair[1]);
                color_at[pair[1]].insert(swapped, pair[0]);
            }
            c = ca;
        }
        color_at[a].insert(c, b);
        color_at[b].insert(c, a);
    }
    let layers = color_at.iter().flat_map(|m| m.keys().copied()).max().map_or(0, |m| m + 1);
    let mut out = vec![Vec::new(); layers];
    for (a, m) in color_at.iter().enumerate() {
        for (&c, &b) in m {
            if a < b {
                out[c].push((a, b));
            }
        }
    }
    out.iter_mut().for_each(|l| l.sort_unstable());
    out
}

/// Precomputed circuit for repeated sampling of one setting.
#[derive(Clone, Debug)]
pub struct SettingSampler {
    n: usize,
    setting: MeasurementSetting,
    space: OutcomeSpace,
    layers: Vec<Vec<(usize, usize)>>,
    rotated: Vec<bool>,
}

impl SettingSampler {
    pub fn new(g: &Graph, coloring: &VertexColoring, color: usize) -> Result<Self> {
        let setting = MeasurementSetting::new(coloring, color)?;
        let layers = compile_layers(g);
        let mut t = Tableau::zero_state(g.n());
        for q in 0..g.n() {
            t.h(q);
        }
        for layer in &layers {
            for &(a, b) in layer {
                t.cz(a, b);
            }
        }
        for &q in &setting.x_set {
            t.h(q);
        }
        let rotated = g.membership(&setting.x_set);
        Ok(Self { n: g.n(), setting, space: t.outcome_space(), layers, rotated })
    }

    pub fn setting(&self) -> &MeasurementSetting {
        &self.setting
    }

    pub fn outcome_space(&self) -> &OutcomeSpace {
        &self.space
    }

    fn shot(&self, noise: &NoiseConfig, rng: &mut impl Rng) -> BitString {
        let mut x = if noise.white_noise_p > 0.0 && rng.random_bool(noise.white_noise_p) {
            let mut u = BitString::zeros(self.n);
            for q in 0..self.n {
                if rng.random::<bool>() {
                    u.set(q, true);
                }
            }
            u
        } else {
            let mut x = self.space.sample(rng);
            if noise.cz_depolarizing_p > 0.0 {
                x.xor_assign(&self.fault_flips(noise.cz_depolarizing_p, rng));
            }
            x
        };
        if let Some(cal) = &noise.readout {
            for q in 0..self.n {
                let c = cal.get(q).expect("calibration coverage checked");
                let p = c.flip_probability(x.get(q));
                if p > 0.0 && rng.random_bool(p) {
                    x.flip(q);
                }
            }
        }
        x
    }

    /// Propagates random CZ faults to the measurement and returns the bit flips.
    fn fault_flips(&self, p: f64, rng: &mut impl Rng) -> BitString {
        let mut fx = BitString::zeros(self.n);
        let mut fz = BitString::zeros(self.n);
        for layer in &self.layers {
            for &(a, b) in layer {
                if fx.get(a) {
                    fz.flip(b);
                }
                if fx.get(b) {
                    fz.flip(a);
                }
                if rng.random_bool(p) {
                    let r: u8 = rng.random_range(1..16);
                    if r & 1 != 0 {
                        fx.flip(a);
                    }
                    if r & 2 != 0 {
                        fz.flip(a);
                    }
                    if r & 4 != 0 {
                        fx.flip(b);
                    }
                    if r & 8 != 0 {
                        fz.flip(b);
                    }
                }
            }
        }
        // the final Hadamards exchange X and Z on rotated qubits
        let mut flips = BitString::zeros(self.n);
        for q in 0..self.n {
            if if self.rotated[q] { fz.get(q) } else { fx.get(q) } {
                flips.set(q, true);
            }
        }
        flips
    }

    /// Samples `shots` outcomes; shot `i` draws from its own stream so the
    /// result does not depend on how the work is split across threads.
    pub fn sample(&self, shots: u64, noise: &NoiseConfig) -> Result<CountsTable> {
        if shots == 0 {
            return Err(Error::InvalidArgument("shots must be at least 1".into()));
        }
        noise.validate(self.n)?;
        let color = self.setting.color as u64;
        let chunks: Vec<u64> = (0..shots.div_ceil(SHOT_CHUNK)).collect();
        let partial: Vec<BTreeMap<BitString, u64>> = chunks
            .par_iter()
            .map(|&c| {
                let mut m = BTreeMap::new();
                for shot in c * SHOT_CHUNK..((c + 1) * SHOT_CHUNK).min(shots) {
                    let mut rng = stream_rng(noise.seed, "sample", color, shot);
                    *m.entry(self.shot(noise, &mut rng)).or_insert(0) += 1;
                }
                m
            })
            .collect();
        let mut counts = BTreeMap::new();
        for m in partial {
            for (b, c) in m {
                *counts.entry(b).or_insert(0) += c;
            }
        }
        CountsTable::new(self.setting.color, self.n, counts)
    }
}

/// Samples the noisy graph state in the setting that measures color `color` in X.
pub fn sample_counts(
    g: &Graph,
    coloring: &VertexColoring,
    color: usize,
    shots: u64,
    noise: &NoiseConfig,
) -> Result<CountsTable> {
    SettingSampler::new(g, coloring, color)?.sample(shots, noise)
}

/// Exact outcome distribution with white noise and readout error only.
pub fn exact_setting_weights(
    g: &Graph,
    coloring: &VertexColoring,
    color: usize,
    noise: &NoiseConfig,
) -> Result<Distribution> {
    if noise.cz_depolarizing_p != 0.0 {
        return Err(Error::InvalidArgument("exact weights model white noise and readout error only".into()));
    }
    noise.validate(g.n())?;
    let setting = MeasurementSetting::new(coloring, color)?;
    let state = dense::graph_state_vector(g, EXACT_WEIGHTS_LIMIT)?;
    let ideal = dense::measurement_distribution(g.n(), &state, &setting.x_set)?;
    let n = g.n();
    let p = noise.white_noise_p;
    let mut weights = vec![p / (1u64 << n) as f64; 1 << n];
    for (b, w) in ideal.entries() {
        weights[b.to_index() as usize] += (1.0 - p) * w;
    }
    let mixed = Distribution::from_dense(n, &weights)?;
    match &noise.readout {
        Some(cal) => apply_confusion(&mixed, &cal.at(&(0..n).collect::<Vec<_>>())?),
        None => Ok(mixed),
    }
}
