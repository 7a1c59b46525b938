// SPDX-License-Identifier: Apache-2.0

//! Outcome distributions, marginals and tensor-product readout mitigation.
//!
//! Calibration entries follow the convention `P_{i,j}` = probability of reading
//! `i` when `j` was prepared, so the per-qubit confusion matrix is
//!
//! ```text
//!     A = | 1 - p10    p01   |
//!         |   p10    1 - p01 |
//! ```
//!
//! with columns indexed by the prepared value. Input files are taken at face
//! value under this convention.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::counts::CountsTable;
use crate::error::{Error, Result};

pub const DEFAULT_MITIGATION_LIMIT: usize = 16;
const SUM_TOLERANCE: f64 = 1e-6;
const SINGULAR_TOLERANCE: f64 = 1e-9;

/// Signed weights over fixed-length bitstrings, summing to one.
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution {
    len: usize,
    entries: Vec<(BitString, f64)>,
    quasi: bool,
}

impl Distribution {
    /// Builds a distribution; duplicate keys are summed and exact zeros dropped.
    pub fn from_weights(len: usize, weights: impl IntoIterator<Item = (BitString, f64)>) -> Result<Self> {
        let mut map: BTreeMap<BitString, f64> = BTreeMap::new();
        for (b, w) in weights {
            if b.len() != len {
                return Err(Error::InvalidDistribution(format!(
                    "outcome {b} has length {} in a distribution over {len} bits",
                    b.len()
                )));
            }
            if !w.is_finite() {
                return Err(Error::InvalidDistribution(format!("weight of {b} is not finite")));
            }
            *map.entry(b).or_insert(0.0) += w;
        }
        let entries: Vec<(BitString, f64)> = map.into_iter().filter(|&(_, w)| w != 0.0).collect();
        let total: f64 = entries.iter().map(|e| e.1).sum();
        if (total - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::InvalidDistribution(format!("weights sum to {total}, not 1")));
        }
        let quasi = entries.iter().any(|e| e.1 < 0.0);
        Ok(Self { len, entries, quasi })
    }

    /// Dense vector form: entry `x` is the weight of the outcome whose bit `j` is bit `j` of `x`.
    pub fn from_dense(len: usize, weights: &[f64]) -> Result<Self> {
        debug_assert_eq!(weights.len(), 1usize << len);
        Self::from_weights(len, weights.iter().enumerate().map(|(x, &w)| (BitString::from_index(len, x as u64), w)))
    }

    pub fn to_dense(&self) -> Result<Vec<f64>> {
        if self.len > 30 {
            return Err(Error::InvalidArgument(format!("cannot materialize a dense vector over {} bits", self.len)));
        }
        let mut v = vec![0.0; 1usize << self.len];
        for (b, w) in &self.entries {
            v[b.to_index() as usize] += w;
        }
        Ok(v)
    }

    pub fn uniform(len: usize) -> Result<Self> {
        let dim = 1usize << len;
        Self::from_dense(len, &vec![1.0 / dim as f64; dim])
    }

    pub fn len(&self) -> usize {
        self.len
    }

    /// True when the distribution is over zero bits.
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn entries(&self) -> &[(BitString, f64)] {
        &self.entries
    }

    pub fn weight(&self, outcome: &BitString) -> f64 {
        self.entries.binary_search_by(|e| e.0.cmp(outcome)).map_or(0.0, |i| self.entries[i].1)
    }

    pub fn is_quasi(&self) -> bool {
        self.quasi
    }

    pub fn total(&self) -> f64 {
        self.entries.iter().map(|e| e.1).sum()
    }

    /// Total variation distance `1/2 Σ |p - q|`.
    pub fn tv_distance(&self, other: &Distribution) -> f64 {
        let mut diff: BTreeMap<&BitString, f64> = BTreeMap::new();
        for (b, w) in &self.entries {
            *diff.entry(b).or_insert(0.0) += w;
        }
        for (b, w) in &other.entries {
            *diff.entry(b).or_insert(0.0) -= w;
        }
        0.5 * diff.values().map(|d| d.abs()).sum::<f64>()
    }

    /// Sums out every bit not listed; output index `j` is input bit `positions[j]`.
    pub fn marginal(&self, positions: &[usize]) -> Result<Distribution> {
        check_positions(positions, self.len)?;
        if positions.len() == self.len {
            return Ok(self.clone());
        }
        let mut map: BTreeMap<BitString, f64> = BTreeMap::new();
        for (b, w) in &self.entries {
            *map.entry(b.select(positions)).or_insert(0.0) += w;
        }
        let entries: Vec<(BitString, f64)> = map.into_iter().filter(|&(_, w)| w != 0.0).collect();
        let quasi = entries.iter().any(|e| e.1 < 0.0);
        Ok(Distribution { len: positions.len(), entries, quasi })
    }

    /// Expectation of a real function of the outcome.
    pub fn expectation(&self, f: impl Fn(&BitString) -> f64) -> f64 {
        self.entries.iter().map(|(b, w)| w * f(b)).sum()
    }
}

fn check_positions(positions: &[usize], len: usize) -> Result<()> {
    for w in positions.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::InvalidArgument(format!("positions {positions:?} are not strictly increasing")));
        }
    }
    if let Some(&p) = positions.last() {
        if p >= len {
            return Err(Error::InvalidArgument(format!("position {p} out of range for {len} bits")));
        }
    }
    Ok(())
}

/// Counts divided by the shot total.
pub fn normalize_counts(c: &CountsTable) -> Result<Distribution> {
    if c.shots() == 0 {
        return Err(Error::InvalidArgument("counts table has zero shots".into()));
    }
    let shots = c.shots() as f64;
    let entries: Vec<(BitString, f64)> = c.counts().iter().map(|(b, &k)| (b.clone(), k as f64 / shots)).collect();
    Ok(Distribution { len: c.n(), entries, quasi: false })
}

/// Readout error rates of one qubit.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QubitCalibration {
    /// Probability of reading 1 when 0 was prepared.
    pub p10: f64,
    /// Probability of reading 0 when 1 was prepared.
    pub p01: f64,
}

impl QubitCalibration {
    pub const IDEAL: QubitCalibration = QubitCalibration { p10: 0.0, p01: 0.0 };

    pub fn new(p10: f64, p01: f64) -> Self {
        Self { p10, p01 }
    }

    /// Column-stochastic confusion matrix, `[row][column]` with column = prepared value.
    pub fn matrix(&self) -> [[f64; 2]; 2] {
        [[1.0 - self.p10, self.p01], [self.p10, 1.0 - self.p01]]
    }

    pub fn determinant(&self) -> f64 {
        1.0 - self.p10 - self.p01
    }

    pub fn inverse(&self) -> [[f64; 2]; 2] {
        let d = self.determinant();
        [[(1.0 - self.p01) / d, -self.p01 / d], [-self.p10 / d, (1.0 - self.p10) / d]]
    }

    /// Probability of reading `read` when `prepared` was prepared.
    pub fn flip_probability(&self, prepared: bool) -> f64 {
        if prepared {
            self.p01
        } else {
            self.p10
        }
    }

    fn validate(&self, qubit: usize) -> Result<()> {
        let in_range = |p: f64| (0.0..=1.0).contains(&p);
        if !in_range(self.p10) || !in_range(self.p01) {
            return Err(Error::Calibration { qubit, reason: "error rates must lie in [0, 1]".into() });
        }
        if self.determinant().abs() <= SINGULAR_TOLERANCE {
            return Err(Error::Calibration { qubit, reason: "confusion matrix is singular".into() });
        }
        Ok(())
    }
}

/// Per-qubit confusion matrices keyed by vertex id.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CalibrationSet {
    qubits: BTreeMap<usize, QubitCalibration>,
}

#[derive(Serialize, Deserialize)]
struct CalibrationDocument {
    qubits: BTreeMap<String, QubitCalibration>,
}

impl CalibrationSet {
    pub fn new(qubits: BTreeMap<usize, QubitCalibration>) -> Result<Self> {
        for (&q, c) in &qubits {
            c.validate(q)?;
        }
        Ok(Self { qubits })
    }

    /// The same rates on each of `n` qubits.
    pub fn uniform(n: usize, p10: f64, p01: f64) -> Result<Self> {
        Self::new((0..n).map(|q| (q, QubitCalibration::new(p10, p01))).collect())
    }

    pub fn get(&self, q: usize) -> Option<&QubitCalibration> {
        self.qubits.get(&q)
    }

    pub fn require(&self, q: usize) -> Result<QubitCalibration> {
        self.get(q).copied().ok_or_else(|| Error::Calibration { qubit: q, reason: "no calibration entry".into() })
    }

    /// Calibrations for `positions`, in order.
    pub fn at(&self, positions: &[usize]) -> Result<Vec<QubitCalibration>> {
        positions.iter().map(|&q| self.require(q)).collect()
    }

    pub fn covers(&self, n: usize) -> Result<()> {
        (0..n).try_for_each(|q| self.require(q).map(|_| ()))
    }

    pub fn qubits(&self) -> &BTreeMap<usize, QubitCalibration> {
        &self.qubits
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: CalibrationDocument = serde_json::from_str(text)?;
        let mut qubits = BTreeMap::new();
        for (k, c) in doc.qubits {
            let q: usize =
                k.parse().map_err(|_| Error::InvalidArgument(format!("calibration key {k:?} is not a vertex id")))?;
            qubits.insert(q, c);
        }
        Self::new(qubits)
    }

    pub fn to_json(&self) -> Result<String> {
        let doc = CalibrationDocument { qubits: self.qubits.iter().map(|(q, c)| (q.to_string(), *c)).collect() };
        Ok(serde_json::to_string_pretty(&doc)?)
    }
}

fn apply_axiswise(v: &mut [f64], matrices: &[[[f64; 2]; 2]]) {
    for (axis, m) in matrices.iter().enumerate() {
        let bit = 1usize << axis;
        for x in 0..v.len() {
            if x & bit == 0 {
                let (a0, a1) = (v[x], v[x | bit]);
                v[x] = m[0][0] * a0 + m[0][1] * a1;
                v[x | bit] = m[1][0] * a0 + m[1][1] * a1;
            }
        }
    }
}

fn check_region(d: &Distribution, calibs: &[QubitCalibration], limit: usize) -> Result<()> {
    if calibs.len() != d.len() {
        return Err(Error::InvalidArgument(format!(
            "{} calibrations for a distribution over {} bits",
            calibs.len(),
            d.len()
        )));
    }
    if d.len() > limit {
        return Err(Error::MitigationLimit { size: d.len(), limit, context: "distribution".into() });
    }
    for (j, c) in calibs.iter().enumerate() {
        c.validate(j)?;
    }
    Ok(())
}

/// Applies `⊗_j A^(j)` to `d`, bit `j` of the outcome seeing calibration `j`.
pub fn apply_confusion(d: &Distribution, calibs: &[QubitCalibration]) -> Result<Distribution> {
    check_region(d, calibs, DEFAULT_MITIGATION_LIMIT.max(d.len()))?;
    let mut v = d.to_dense()?;
    let mats: Vec<_> = calibs.iter().map(QubitCalibration::matrix).collect();
    apply_axiswise(&mut v, &mats);
    Distribution::from_dense(d.len(), &v)
}

/// Solves `p_noisy = (⊗ A) p_ideal` for `p_ideal` by applying each 2x2 inverse
/// along its bit axis. The result may carry negative weights.
pub fn mitigate(d: &Distribution, calibs: &[QubitCalibration], limit: usize) -> Result<Distribution> {
    check_region(d, calibs, limit)?;
    let mut v = d.to_dense()?;
    let mats: Vec<_> = calibs.iter().map(QubitCalibration::inverse).collect();
    apply_axiswise(&mut v, &mats);
    Distribution::from_dense(d.len(), &v)
}

/// Pulls an observable back through mitigation: returns `h` with
/// `Σ_x d(x) h(x) = Σ_y mitigate(d)(y) f(y)` for every `d` over the same bits.
/// `f` is indexed like [`Distribution::to_dense`].
pub fn mitigated_observable(f: &[f64], calibs: &[QubitCalibration], limit: usize) -> Result<Vec<f64>> {
    if calibs.len() > limit {
        return Err(Error::MitigationLimit { size: calibs.len(), limit, context: "observable".into() });
    }
    if f.len() != 1usize << calibs.len() {
        return Err(Error::InvalidArgument(format!(
            "observable of length {} does not match {} calibrations",
            f.len(),
            calibs.len()
        )));
    }
    for (j, c) in calibs.iter().enumerate() {
        c.validate(j)?;
    }
    let mats: Vec<_> = calibs
        .iter()
        .map(|c| {
            let m = c.inverse();
            [[m[0][0], m[1][0]], [m[0][1], m[1][1]]]
        })
        .collect();
    let mut h = f.to_vec();
    apply_axiswise(&mut h, &mats);
    Ok(h)
}
