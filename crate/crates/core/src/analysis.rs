// SPDX-License-Identifier: Apache-2.0

//! Benchmark analyses over a whole device: minimum-SSW path search,
//! unit-cell scans, bipartite entangled regions and bootstrap intervals.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::counts::CountsTable;
use crate::enumerate::{enumerate_unit_cells, for_each_induced_path_from};
use crate::error::{Error, Result};
use crate::graph::{Graph, SubgraphRef};
use crate::seed::stream_rng;
use crate::witness::{cell_observable, WitnessInputs, WitnessSubject};

/// Resamples used when none are configured.
pub const DEFAULT_BOOTSTRAP: usize = 1000;
/// Fewest resamples accepted.
pub const MIN_BOOTSTRAP: usize = 100;
/// Two-sided confidence level of reported intervals.
pub const CONFIDENCE: f64 = 0.95;

/// Point estimate with a percentile bootstrap interval.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub point: f64,
    pub low: f64,
    pub high: f64,
}

impl Interval {
    pub fn exact(point: f64) -> Self {
        Self { point, low: point, high: point }
    }

    /// Percentile interval of `samples`, widened if needed to contain `point`.
    pub fn from_samples(point: f64, samples: &mut [f64]) -> Self {
        samples.sort_by(f64::total_cmp);
        let alpha = (1.0 - CONFIDENCE) / 2.0;
        let low = percentile(samples, alpha).min(point);
        let high = percentile(samples, 1.0 - alpha).max(point);
        Self { point, low, high }
    }

    pub fn width(&self) -> f64 {
        self.high - self.low
    }
}

/// Linear interpolation between order statistics of sorted data.
fn percentile(sorted: &[f64], q: f64) -> f64 {
    let h = (sorted.len() - 1) as f64 * q;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

/// Verdict on one witness: negative with confidence when the interval lies below 0.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DetectionVerdict {
    pub point: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub detected: bool,
    pub subject: WitnessSubject,
}

impl DetectionVerdict {
    pub fn new(interval: Interval, subject: WitnessSubject) -> Self {
        Self {
            point: interval.point,
            ci_low: interval.low,
            ci_high: interval.high,
            detected: interval.high < 0.0,
            subject,
        }
    }
}

/// Connected components of the graph restricted to certified edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionReport {
    pub components: Vec<Vec<usize>>,
    pub largest: usize,
}

impl RegionReport {
    fn new(components: Vec<Vec<usize>>) -> Self {
        let largest = components.iter().map(Vec::len).max().unwrap_or(0);
        Self { components, largest }
    }
}

fn edge_flags(
    g: &Graph,
    verdicts: &[DetectionVerdict],
    flag: impl Fn(&DetectionVerdict) -> bool,
) -> Result<BTreeSet<(usize, usize)>> {
    let mut by_edge = BTreeMap::new();
    for v in verdicts {
        if let WitnessSubject::Edge([a, b]) = v.subject {
            by_edge.insert((a.min(b), a.max(b)), flag(v));
        }
    }
    let mut kept = BTreeSet::new();
    for &e in g.edges() {
        match by_edge.get(&e) {
            Some(true) => {
                kept.insert(e);
            }
            Some(false) => {}
            None => return Err(Error::InvalidArgument(format!("no verdict for edge ({}, {})", e.0, e.1))),
        }
    }
    Ok(kept)
}

/// Regions joined by edges whose bipartite witness is detected with confidence.
pub fn bipartite_regions(g: &Graph, verdicts: &[DetectionVerdict]) -> Result<RegionReport> {
    let kept = edge_flags(g, verdicts, |v| v.detected)?;
    Ok(RegionReport::new(g.connected_components(|a, b| kept.contains(&(a, b)))))
}

/// Regions joined by edges whose bipartite witness has a negative point value.
pub fn bipartite_regions_by_point(g: &Graph, verdicts: &[DetectionVerdict]) -> Result<RegionReport> {
    let kept = edge_flags(g, verdicts, |v| v.point < 0.0)?;
    Ok(RegionReport::new(g.connected_components(|a, b| kept.contains(&(a, b)))))
}

/// Lowest stabilizer sum witness over the induced paths of one length.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathSearchResult {
    pub n: usize,
    pub best: Option<SubgraphRef>,
    pub value: Option<f64>,
}

/// For each `n` in `lengths`, the induced path on `n` vertices minimizing
/// `(n − 1) − Σ⟨S_l⟩`. Ties go to the lexicographically smallest path.
pub fn min_ssw_path_search(g: &Graph, stab: &[f64], lengths: &[usize]) -> Result<Vec<PathSearchResult>> {
    if stab.len() < g.n() {
        return Err(Error::MissingExpectation(stab.len()));
    }
    let max_len = lengths.iter().copied().max().unwrap_or(0).min(g.n());
    type Best = BTreeMap<usize, (f64, Vec<usize>)>;
    let better = |a: &(f64, Vec<usize>), b: &(f64, Vec<usize>)| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)).is_lt();
    let merge = |mut acc: Best, other: Best| {
        for (n, cand) in other {
            match acc.get(&n) {
                Some(cur) if !better(&cand, cur) => {}
                _ => {
                    acc.insert(n, cand);
                }
            }
        }
        acc
    };
    let wanted: BTreeSet<usize> = lengths.iter().copied().filter(|&n| n >= 2).collect();
    let found: Best = (0..g.n())
        .into_par_iter()
        .map(|s| {
            let mut best = Best::new();
            let mut sums: Vec<f64> = Vec::new();
            for_each_induced_path_from(g, s, max_len, |p| {
                let len = p.len();
                sums.truncate(len - 1);
                let prev = sums.last().copied().unwrap_or(0.0);
                sums.push(prev + stab[p[len - 1]]);
                if wanted.contains(&len) && p[0] < p[len - 1] {
                    let value = (len as f64 - 1.0) - sums[len - 1];
                    let replace = match best.get(&len) {
                        Some(cur) => better(&(value, p.to_vec()), cur),
                        None => true,
                    };
                    if replace {
                        best.insert(len, (value, p.to_vec()));
                    }
                }
            });
            best
        })
        .reduce(Best::new, merge);
    Ok(lengths
        .iter()
        .map(|&n| match found.get(&n) {
            Some((value, path)) => {
                PathSearchResult { n, best: Some(SubgraphRef::path(path.clone())), value: Some(*value) }
            }
            None => PathSearchResult { n, best: None, value: None },
        })
        .collect())
}

/// Multinomial resample of a counts table with the same shot total.
pub fn resample_counts(table: &CountsTable, rng: &mut impl Rng) -> Result<CountsTable> {
    let (outcomes, cumulative) = cumulative_counts(table)?;
    let mut counts = BTreeMap::new();
    for _ in 0..table.shots() {
        let idx = draw(&cumulative, rng);
        *counts.entry(outcomes[idx].clone()).or_insert(0) += 1;
    }
    CountsTable::new(table.setting, table.n(), counts)
}

fn cumulative_counts(table: &CountsTable) -> Result<(Vec<BitString>, Vec<u64>)> {
    if table.shots() == 0 {
        return Err(Error::InvalidArgument(format!("setting {} has zero shots", table.setting)));
    }
    let mut acc = 0;
    let mut outcomes = Vec::with_capacity(table.counts().len());
    let mut cumulative = Vec::with_capacity(table.counts().len());
    for (b, &c) in table.counts() {
        acc += c;
        outcomes.push(b.clone());
        cumulative.push(acc);
    }
    Ok((outcomes, cumulative))
}

fn draw(cumulative: &[u64], rng: &mut impl Rng) -> usize {
    let r = rng.random_range(0..*cumulative.last().unwrap());
    cumulative.partition_point(|&c| c <= r)
}

fn check_resamples(b: usize) -> Result<()> {
    if b < MIN_BOOTSTRAP {
        return Err(Error::InvalidArgument(format!("bootstrap needs at least {MIN_BOOTSTRAP} resamples, got {b}")));
    }
    Ok(())
}

/// Percentile bootstrap of an arbitrary functional of the counts.
///
/// Every table is resampled independently per replicate; replicate `r` of
/// setting `s` draws from its own seeded stream.
pub fn bootstrap_ci<F>(
    counts: &[CountsTable],
    functional: F,
    b: usize,
    seed: u64,
    subject: WitnessSubject,
) -> Result<DetectionVerdict>
where
    F: Fn(&[CountsTable]) -> Result<f64> + Sync,
{
    check_resamples(b)?;
    let point = functional(counts)?;
    let mut samples = (0..b as u64)
        .into_par_iter()
        .map(|r| {
            let tables = counts
                .iter()
                .enumerate()
                .map(|(s, t)| resample_counts(t, &mut stream_rng(seed, "bootstrap", s as u64, r)))
                .collect::<Result<Vec<_>>>()?;
            functional(&tables)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(DetectionVerdict::new(Interval::from_samples(point, &mut samples), subject))
}

/// A quantity `Σ_x c(x) h(x) / N` over one setting's counts.
///
/// `h` is stored as its most common value plus the outcomes where it differs,
/// which makes near-ideal data cheap to resample.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearFunctional {
    pub setting: usize,
    outcomes: usize,
    base: f64,
    deltas: Vec<(usize, f64)>,
}

impl LinearFunctional {
    /// Tabulates `h` over the distinct outcomes of `table`, in table order.
    pub fn new(table: &CountsTable, h: impl Fn(&BitString) -> f64) -> Self {
        let values: Vec<f64> = table.counts().keys().map(h).collect();
        let mut freq: BTreeMap<u64, usize> = BTreeMap::new();
        for v in &values {
            *freq.entry(v.to_bits()).or_insert(0) += 1;
        }
        let base = freq.iter().max_by_key(|(_, &c)| c).map_or(0.0, |(&b, _)| f64::from_bits(b));
        let deltas = values.iter().enumerate().filter(|(_, &v)| v != base).map(|(i, &v)| (i, v - base)).collect();
        Self { setting: table.setting, outcomes: values.len(), base, deltas }
    }

    fn mean(&self, multiplicities: &[f64], shots: f64) -> f64 {
        self.base + self.deltas.iter().map(|&(i, d)| d * multiplicities[i]).sum::<f64>() / shots
    }

    /// Value on the tables the functional was built from.
    pub fn point(&self, counts: &[CountsTable]) -> Result<f64> {
        let t = counts.get(self.setting).ok_or(Error::MissingDistribution(self.setting))?;
        if t.counts().len() != self.outcomes {
            return Err(Error::InvalidArgument(format!(
                "functional does not match the counts of setting {}",
                self.setting
            )));
        }
        let m: Vec<f64> = t.counts().values().map(|&c| c as f64).collect();
        Ok(self.mean(&m, t.shots() as f64))
    }
}

/// Projector functionals `⟨P({i})⟩` for every vertex, in vertex order.
pub fn vertex_projector_functionals(
    inputs: &WitnessInputs<'_>,
    counts: &[CountsTable],
    qrem: bool,
) -> Result<Vec<LinearFunctional>> {
    (0..inputs.graph.n()).map(|i| cell_functional(inputs, counts, &[i], qrem)).collect()
}

/// The projector functional of one monochromatic cell.
pub fn cell_functional(
    inputs: &WitnessInputs<'_>,
    counts: &[CountsTable],
    cell: &[usize],
    qrem: bool,
) -> Result<LinearFunctional> {
    let (setting, obs) = cell_observable(inputs, cell, qrem)?;
    let table = counts.get(setting).ok_or(Error::MissingDistribution(setting))?;
    Ok(LinearFunctional::new(table, |x| obs.value(x)))
}

/// Bootstraps many statistics at once. Each replicate resamples every
/// setting, evaluates all `functionals` on the resampled counts and maps them
/// through `stats`; intervals come back in the order `stats` returns them.
/// Statistics that share a setting stay correlated across replicates.
pub fn bootstrap_linear<S>(
    counts: &[CountsTable],
    functionals: &[LinearFunctional],
    stats: S,
    b: usize,
    seed: u64,
) -> Result<Vec<Interval>>
where
    S: Fn(&[f64]) -> Vec<f64> + Sync,
{
    check_resamples(b)?;
    let prepared: Vec<(Vec<u64>, f64)> =
        counts.iter().map(|t| cumulative_counts(t).map(|(_, c)| (c, t.shots() as f64))).collect::<Result<_>>()?;
    for f in functionals {
        let (cum, _) = prepared.get(f.setting).ok_or(Error::MissingDistribution(f.setting))?;
        if cum.len() != f.outcomes {
            return Err(Error::InvalidArgument(format!(
                "functional does not match the counts of setting {}",
                f.setting
            )));
        }
    }
    let evaluate = |mult: &[Vec<f64>]| -> Vec<f64> {
        let values: Vec<f64> = functionals.iter().map(|f| f.mean(&mult[f.setting], prepared[f.setting].1)).collect();
        stats(&values)
    };
    let original: Vec<Vec<f64>> = counts.iter().map(|t| t.counts().values().map(|&c| c as f64).collect()).collect();
    let point = evaluate(&original);
    let replicates: Vec<Vec<f64>> = (0..b as u64)
        .into_par_iter()
        .map(|r| {
            let mult: Vec<Vec<f64>> = prepared
                .iter()
                .enumerate()
                .map(|(s, (cum, shots))| {
                    let mut rng = stream_rng(seed, "bootstrap", s as u64, r);
                    let mut m = vec![0.0; cum.len()];
                    for _ in 0..*shots as u64 {
                        m[draw(cum, &mut rng)] += 1.0;
                    }
                    m
                })
                .collect();
            evaluate(&mult)
        })
        .collect();
    Ok((0..point.len())
        .map(|j| {
            let mut column: Vec<f64> = replicates.iter().map(|r| r[j]).collect();
            Interval::from_samples(point[j], &mut column)
        })
        .collect())
}

/// `⟨S_i⟩` from projector values.
pub fn stabilizers_from_projectors(projectors: &[f64]) -> Vec<f64> {
    projectors.iter().map(|p| 2.0 * p.min(1.0) - 1.0).collect()
}

/// Stabilizer sum witness of every 12-vertex unit cell, with bootstrap intervals.
pub fn unit_cell_scan(
    inputs: &WitnessInputs<'_>,
    counts: &[CountsTable],
    qrem: bool,
    b: usize,
    seed: u64,
) -> Result<Vec<DetectionVerdict>> {
    let cells = enumerate_unit_cells(inputs.graph);
    if cells.is_empty() {
        return Ok(Vec::new());
    }
    let functionals = vertex_projector_functionals(inputs, counts, qrem)?;
    let intervals = bootstrap_linear(
        counts,
        &functionals,
        |p| {
            let stab = stabilizers_from_projectors(p);
            cells.iter().map(|c| ssw_value(&c.vertices, &stab)).collect()
        },
        b,
        seed,
    )?;
    Ok(intervals.into_iter().zip(cells).map(|(i, c)| DetectionVerdict::new(i, WitnessSubject::Subgraph(c))).collect())
}

/// `(n − 1) − Σ_{l∈vertices} stab[l]`, summed in the given order.
pub fn ssw_value(vertices: &[usize], stab: &[f64]) -> f64 {
    let sum: f64 = vertices.iter().map(|&v| stab[v]).fold(0.0, |a, s| a + s);
    (vertices.len() as f64 - 1.0) - sum
}

/// Bipartite witness of every edge, with bootstrap intervals.
pub fn edge_verdicts(
    inputs: &WitnessInputs<'_>,
    counts: &[CountsTable],
    qrem: bool,
    b: usize,
    seed: u64,
) -> Result<Vec<DetectionVerdict>> {
    let g = inputs.graph;
    let functionals = vertex_projector_functionals(inputs, counts, qrem)?;
    let intervals = bootstrap_linear(
        counts,
        &functionals,
        |p| {
            let stab = stabilizers_from_projectors(p);
            g.edges().iter().map(|&(i, j)| 1.0 - stab[i] - stab[j]).collect()
        },
        b,
        seed,
    )?;
    Ok(intervals
        .into_iter()
        .zip(g.edges())
        .map(|(i, &(a, b))| DetectionVerdict::new(i, WitnessSubject::Edge([a, b])))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distribution::normalize_counts;
    use crate::graph::{build_heavy_hex, two_color};
    use crate::sim::{sample_counts, NoiseConfig};
    use crate::witness::{stabilizer_expectations, stabilizer_sum_witness};

    fn edge_verdict(e: (usize, usize), point: f64, high: f64) -> DetectionVerdict {
        DetectionVerdict::new(Interval { point, low: point - 0.1, high }, WitnessSubject::Edge([e.0, e.1]))
    }

    #[test]
    fn region_examples() {
        let g = Graph::path(4);
        let all: Vec<_> = g.edges().iter().map(|&e| edge_verdict(e, -0.5, -0.1)).collect();
        assert_eq!(bipartite_regions(&g, &all).unwrap().largest, 4);
        let none: Vec<_> = g.edges().iter().map(|&e| edge_verdict(e, 0.5, 0.6)).collect();
        let r = bipartite_regions(&g, &none).unwrap();
        assert_eq!(r.components.len(), 4);
        assert_eq!(r.largest, 1);
        let one: Vec<_> = g
            .edges()
            .iter()
            .map(|&e| if e == (1, 2) { edge_verdict(e, -0.5, -0.1) } else { edge_verdict(e, -0.1, 0.2) })
            .collect();
        assert_eq!(bipartite_regions(&g, &one).unwrap().largest, 2);
        assert_eq!(bipartite_regions_by_point(&g, &one).unwrap().largest, 4);
        assert!(bipartite_regions(&g, &one[..2]).is_err());
    }

    #[test]
    fn path_search_examples() {
        let g = Graph::grid(3, 3);
        let ideal = vec![1.0; 9];
        let res = min_ssw_path_search(&g, &ideal, &[2, 5, 9, 10]).unwrap();
        for r in &res[..2] {
            assert_eq!(r.value, Some(-1.0));
        }
        // the grid has no induced 9-vertex path
        assert!(res[2].best.is_none());
        assert!(res[3].best.is_none());
        assert_eq!(res[0].best.as_ref().unwrap().vertices, vec![0, 1]);

        let mut dip = ideal.clone();
        dip[4] = 0.0;
        let res = min_ssw_path_search(&g, &dip, &[3]).unwrap();
        assert!(!res[0].best.as_ref().unwrap().vertices.contains(&4));
        assert_eq!(res[0].value, Some(-1.0));
    }

    #[test]
    fn path_search_matches_enumeration() {
        let g = build_heavy_hex(3).unwrap();
        let stab: Vec<f64> = (0..g.n()).map(|i| 1.0 - 0.01 * ((i * 7) % 11) as f64).collect();
        let lengths: Vec<usize> = (2..=12).collect();
        let res = min_ssw_path_search(&g, &stab, &lengths).unwrap();
        for r in res {
            let paths = crate::enumerate::enumerate_path_subgraphs(&g, r.n);
            let best = paths
                .iter()
                .map(|p| (stabilizer_sum_witness(p, &stab).unwrap().value, p.clone()))
                .min_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.vertices.cmp(&b.1.vertices)));
            assert_eq!(r.value, best.as_ref().map(|b| b.0));
            assert_eq!(r.best, best.map(|b| b.1));
        }
    }

    #[test]
    fn uniform_expectations_give_monotone_values() {
        let g = build_heavy_hex(5).unwrap();
        let stab = vec![0.93; g.n()];
        let res = min_ssw_path_search(&g, &stab, &(2..=20).collect::<Vec<_>>()).unwrap();
        for w in res.windows(2) {
            assert!(w[1].value.unwrap() >= w[0].value.unwrap());
        }
    }

    #[test]
    fn bootstrap_degenerate_and_deterministic() {
        let g = Graph::path(2);
        let c = two_color(&g);
        let counts: Vec<CountsTable> =
            (0..2).map(|s| CountsTable::new(s, 2, [("00".parse().unwrap(), 500)].into()).unwrap()).collect();
        let v = bootstrap_ci(
            &counts,
            |t| Ok(t[0].get(&"00".parse().unwrap()) as f64),
            100,
            1,
            WitnessSubject::Edge([0, 1]),
        )
        .unwrap();
        assert_eq!((v.ci_low, v.point, v.ci_high), (500.0, 500.0, 500.0));
        let noisy: Vec<CountsTable> = (0..2)
            .map(|s| {
                sample_counts(&g, &c, s, 2000, &NoiseConfig { white_noise_p: 0.3, ..NoiseConfig::noiseless(4) })
                    .unwrap()
            })
            .collect();
        let d: Vec<_> = noisy.iter().map(|t| normalize_counts(t).unwrap()).collect();
        let inputs = WitnessInputs::new(&g, &c, &d);
        let a = edge_verdicts(&inputs, &noisy, false, 200, 9).unwrap();
        let b = edge_verdicts(&inputs, &noisy, false, 200, 9).unwrap();
        assert_eq!(a, b);
        let stab = stabilizer_expectations(&inputs, false).unwrap();
        assert!((a[0].point - (1.0 - stab[0] - stab[1])).abs() < 1e-12);
        assert!(a[0].ci_low < a[0].point && a[0].point < a[0].ci_high);
        assert!(bootstrap_ci(&counts, |_| Ok(0.0), 10, 1, WitnessSubject::Edge([0, 1])).is_err());
    }

    #[test]
    fn generic_and_linear_bootstrap_agree_on_point() {
        let g = Graph::cycle(4);
        let c = two_color(&g);
        let noise = NoiseConfig { white_noise_p: 0.2, ..NoiseConfig::noiseless(2) };
        let counts: Vec<CountsTable> = (0..2).map(|s| sample_counts(&g, &c, s, 3000, &noise).unwrap()).collect();
        let d: Vec<_> = counts.iter().map(|t| normalize_counts(t).unwrap()).collect();
        let inputs = WitnessInputs::new(&g, &c, &d);
        let generic = bootstrap_ci(
            &counts,
            |t| {
                let d: Vec<_> = t.iter().map(normalize_counts).collect::<Result<_>>()?;
                let stab = stabilizer_expectations(&WitnessInputs::new(&g, &c, &d), false)?;
                Ok(ssw_value(&[0, 1, 2, 3], &stab))
            },
            300,
            5,
            WitnessSubject::Edge([0, 1]),
        )
        .unwrap();
        let f = vertex_projector_functionals(&inputs, &counts, false).unwrap();
        let linear =
            bootstrap_linear(&counts, &f, |p| vec![ssw_value(&[0, 1, 2, 3], &stabilizers_from_projectors(p))], 300, 5)
                .unwrap();
        assert!((generic.point - linear[0].point).abs() < 1e-12);
        assert!((generic.ci_high - linear[0].high).abs() < 0.05);
        assert!((generic.ci_low - linear[0].low).abs() < 0.05);
    }

    #[test]
    fn unit_cell_scan_examples() {
        let g = build_heavy_hex(3).unwrap();
        let c = two_color(&g);
        let counts: Vec<CountsTable> =
            (0..2).map(|s| sample_counts(&g, &c, s, 2000, &NoiseConfig::noiseless(8)).unwrap()).collect();
        let d: Vec<_> = counts.iter().map(|t| normalize_counts(t).unwrap()).collect();
        let scan = unit_cell_scan(&WitnessInputs::new(&g, &c, &d), &counts, false, 100, 3).unwrap();
        assert_eq!(scan.len(), 2);
        assert!(scan.iter().all(|v| v.detected && (v.point + 1.0).abs() < 1e-12));

        let p = Graph::path(5);
        let pc = two_color(&p);
        let counts: Vec<CountsTable> =
            (0..2).map(|s| sample_counts(&p, &pc, s, 100, &NoiseConfig::noiseless(8)).unwrap()).collect();
        let d: Vec<_> = counts.iter().map(|t| normalize_counts(t).unwrap()).collect();
        assert!(unit_cell_scan(&WitnessInputs::new(&p, &pc, &d), &counts, false, 100, 3).unwrap().is_empty());
    }
}
