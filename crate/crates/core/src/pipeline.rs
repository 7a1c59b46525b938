// SPDX-License-Identifier: Apache-2.0

//! End-to-end benchmark runs: sample or ingest counts, evaluate every enabled
//! analysis with and without readout mitigation, and assemble a report.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::analysis::{
    bipartite_regions, bipartite_regions_by_point, bootstrap_linear, cell_functional, min_ssw_path_search, ssw_value,
    stabilizers_from_projectors, DetectionVerdict, Interval, LinearFunctional, RegionReport, DEFAULT_BOOTSTRAP,
};
use crate::counts::CountsTable;
use crate::distribution::{normalize_counts, CalibrationSet, QubitCalibration, DEFAULT_MITIGATION_LIMIT};
use crate::enumerate::enumerate_unit_cells;
use crate::error::{Error, Result};
use crate::graph::{two_color, Graph, Partition, SubgraphRef, VertexColoring};
use crate::seed::stream_rng;
use crate::sim::{NoiseConfig, SettingSampler, DEFAULT_SHOTS};
use crate::witness::{combine_projectors, refined_path_partition, WitnessInputs, WitnessSubject};

/// Version of the report layout written by [`run_pipeline`].
pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphSource {
    Preset(String),
    File(PathBuf),
}

impl GraphSource {
    pub fn load(&self) -> Result<Graph> {
        match self {
            GraphSource::Preset(name) => Graph::preset(name),
            GraphSource::File(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Error::from(e).context(format!("reading {}", path.display())))?;
                Graph::from_json(&text).map_err(|e| e.context(format!("parsing {}", path.display())))
            }
        }
    }
}

/// Readout error model; also the calibration used for mitigation.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReadoutSpec {
    #[default]
    None,
    Uniform {
        p10: f64,
        p01: f64,
    },
    /// Independent rates per qubit drawn uniformly from `[min, max]`.
    Random {
        min: f64,
        max: f64,
    },
    File(PathBuf),
}

impl ReadoutSpec {
    pub fn resolve(&self, n: usize, seed: u64) -> Result<Option<CalibrationSet>> {
        match self {
            ReadoutSpec::None => Ok(None),
            ReadoutSpec::Uniform { p10, p01 } => CalibrationSet::uniform(n, *p10, *p01).map(Some),
            ReadoutSpec::Random { min, max } => {
                if !(0.0 <= *min && min <= max && *max <= 1.0) {
                    return Err(Error::InvalidArgument(format!("readout range [{min}, {max}] is not within [0, 1]")));
                }
                let qubits = (0..n)
                    .map(|q| {
                        let mut rng = stream_rng(seed, "readout", q as u64, 0);
                        let mut draw = || if max > min { rng.random_range(*min..=*max) } else { *min };
                        (q, QubitCalibration::new(draw(), draw()))
                    })
                    .collect();
                CalibrationSet::new(qubits).map(Some)
            }
            ReadoutSpec::File(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Error::from(e).context(format!("reading {}", path.display())))?;
                CalibrationSet::from_json(&text).map(Some).map_err(|e| e.context(format!("parsing {}", path.display())))
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct NoiseSpec {
    pub white_noise_p: f64,
    pub cz_depolarizing_p: f64,
    pub readout: ReadoutSpec,
}

/// Inclusive range of path lengths searched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRange {
    pub min: usize,
    pub max: usize,
}

impl PathRange {
    pub fn lengths(&self) -> Vec<usize> {
        (self.min..=self.max).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AnalysisToggles {
    pub bipartite: bool,
    /// `None` disables the path search.
    pub ssw_paths: Option<PathRange>,
    pub unit_cells: bool,
    pub cbw: bool,
    pub cbw_refined: bool,
}

impl Default for AnalysisToggles {
    fn default() -> Self {
        Self {
            bipartite: true,
            ssw_paths: Some(PathRange { min: 2, max: 30 }),
            unit_cells: true,
            cbw: true,
            cbw_refined: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub graph: GraphSource,
    pub shots: u64,
    pub noise: NoiseSpec,
    pub qrem: bool,
    pub analyses: AnalysisToggles,
    pub bootstrap: usize,
    pub mitigation_limit: usize,
    pub output_dir: Option<PathBuf>,
    pub seed: u64,
    /// Counts files to analyze instead of simulating, one per setting.
    pub counts: Option<Vec<PathBuf>>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            graph: GraphSource::Preset("heavy-hex-127".into()),
            shots: DEFAULT_SHOTS,
            noise: NoiseSpec::default(),
            qrem: true,
            analyses: AnalysisToggles::default(),
            bootstrap: DEFAULT_BOOTSTRAP,
            mitigation_limit: DEFAULT_MITIGATION_LIMIT,
            output_dir: None,
            seed: 0,
            counts: None,
        }
    }
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.shots == 0 {
            return Err(Error::InvalidArgument("shots must be at least 1".into()));
        }
        if let Some(r) = self.analyses.ssw_paths {
            if r.min < 2 || r.min > r.max || r.max > g.n() {
                return Err(Error::InvalidArgument(format!(
                    "path range {}..={} must lie within 2..={}",
                    r.min,
                    r.max,
                    g.n()
                )));
            }
        }
        Ok(())
    }

    fn noise(&self, readout: Option<CalibrationSet>) -> NoiseConfig {
        NoiseConfig {
            white_noise_p: self.noise.white_noise_p,
            cz_depolarizing_p: self.noise.cz_depolarizing_p,
            readout,
            seed: self.seed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub name: Option<String>,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SettingSummary {
    pub setting: usize,
    pub shots: u64,
    pub distinct_outcomes: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BipartiteSection {
    pub edges: Vec<DetectionVerdict>,
    pub detected_edges: usize,
    pub regions: RegionReport,
    /// Regions from negative point values, ignoring the intervals.
    pub point_regions: RegionReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathEntry {
    pub n: usize,
    pub path: Option<SubgraphRef>,
    pub ssw: Option<DetectionVerdict>,
    pub cbw: Option<DetectionVerdict>,
    pub cbw_refined: Option<DetectionVerdict>,
    /// Witnesses that were enabled but could not be evaluated, with reasons.
    pub skipped: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellSection {
    pub cells: Vec<DetectionVerdict>,
    pub detected: usize,
}

/// Results of one evaluation mode.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModeReport {
    pub qrem: bool,
    /// `⟨S_i⟩` per vertex.
    pub stabilizers: Vec<Interval>,
    pub bipartite: Option<BipartiteSection>,
    pub paths: Option<Vec<PathEntry>>,
    pub unit_cells: Option<CellSection>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub schema_version: u32,
    pub config: RunConfig,
    pub graph: GraphSummary,
    pub coloring: Vec<usize>,
    pub settings: Vec<SettingSummary>,
    pub modes: Vec<ModeReport>,
    /// Wall-clock seconds per stage; the only field that varies between identical runs.
    pub timing: BTreeMap<String, f64>,
}

impl BenchReport {
    pub fn mode(&self, qrem: bool) -> Option<&ModeReport> {
        self.modes.iter().find(|m| m.qrem == qrem)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// The report with timing removed, for reproducibility comparisons.
    pub fn without_timing(&self) -> Self {
        Self { timing: BTreeMap::new(), ..self.clone() }
    }
}

/// Samples one counts table per color class.
pub fn simulate_counts(
    g: &Graph,
    coloring: &VertexColoring,
    shots: u64,
    noise: &NoiseConfig,
) -> Result<Vec<CountsTable>> {
    (0..coloring.k())
        .map(|c| {
            SettingSampler::new(g, coloring, c)?
                .sample(shots, noise)
                .map_err(|e| e.context(format!("sampling setting {c}")))
        })
        .collect()
}

/// Counts file name used for setting `s`.
pub fn counts_file_name(setting: usize) -> String {
    format!("counts_setting_{setting}.json")
}

pub fn write_counts(dir: &Path, counts: &[CountsTable]) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    counts
        .iter()
        .map(|t| {
            let path = dir.join(counts_file_name(t.setting));
            fs::write(&path, t.to_json()?)?;
            Ok(path)
        })
        .collect()
}

/// Reads counts files and orders them by setting; settings must be `0..k`.
pub fn read_counts(paths: &[PathBuf], n: usize, k: usize) -> Result<Vec<CountsTable>> {
    let mut tables = paths
        .iter()
        .map(|p| {
            let text = fs::read_to_string(p).map_err(|e| Error::from(e).context(format!("reading {}", p.display())))?;
            CountsTable::from_json(&text).map_err(|e| e.context(format!("parsing {}", p.display())))
        })
        .collect::<Result<Vec<_>>>()?;
    tables.sort_by_key(|t| t.setting);
    let settings: Vec<usize> = tables.iter().map(|t| t.setting).collect();
    if settings != (0..k).collect::<Vec<_>>() {
        return Err(Error::InvalidArgument(format!("expected counts for settings 0..{k}, found {settings:?}")));
    }
    if let Some(t) = tables.iter().find(|t| t.n() != n) {
        return Err(Error::InvalidArgument(format!(
            "counts for setting {} have {} bits, graph has {n} vertices",
            t.setting,
            t.n()
        )));
    }
    Ok(tables)
}

/// Simulates or ingests counts, then evaluates and (optionally) persists the report.
pub fn run_pipeline(config: &RunConfig) -> Result<BenchReport> {
    let mut timing = BTreeMap::new();
    let start = Instant::now();
    let g = config.graph.load()?;
    config.validate(&g)?;
    let coloring = two_color(&g);
    let calibration = config.noise.readout.resolve(g.n(), config.seed)?;
    let counts = match &config.counts {
        Some(paths) => read_counts(paths, g.n(), coloring.k())?,
        None => simulate_counts(&g, &coloring, config.shots, &config.noise(calibration.clone()))?,
    };
    timing.insert("counts".to_string(), start.elapsed().as_secs_f64());
    if let (Some(dir), None) = (&config.output_dir, &config.counts) {
        write_counts(dir, &counts)?;
    }
    let mut report = analyze(config, &g, &coloring, &counts, calibration.as_ref())?;
    report.timing.extend(timing);
    report.timing.insert("total".to_string(), start.elapsed().as_secs_f64());
    if let Some(dir) = &config.output_dir {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("report.json"), report.to_json()?)?;
    }
    Ok(report)
}

/// Every statistic is a function of projector functionals.
enum Recipe {
    Stabilizer(usize),
    Bipartite(usize, usize),
    Ssw(Vec<usize>),
    Partition { k: usize, empty: usize, cells: Vec<usize> },
    Min(Vec<Recipe>),
}

impl Recipe {
    fn eval(&self, p: &[f64]) -> f64 {
        let stab = |f: usize| 2.0 * p[f].min(1.0) - 1.0;
        match self {
            Recipe::Stabilizer(f) => stab(*f),
            Recipe::Bipartite(a, b) => 1.0 - stab(*a) - stab(*b),
            Recipe::Ssw(fs) => {
                let sum = fs.iter().map(|&f| stab(f)).fold(0.0, |a, s| a + s);
                (fs.len() as f64 - 1.0) - sum
            }
            Recipe::Partition { k, empty, cells } => {
                let values: Vec<f64> = cells.iter().map(|&f| p[f]).collect();
                combine_projectors(*k, *empty, &values).0
            }
            Recipe::Min(rs) => rs.iter().map(|r| r.eval(p)).fold(f64::INFINITY, f64::min),
        }
    }
}

struct Plan<'a> {
    inputs: WitnessInputs<'a>,
    counts: &'a [CountsTable],
    functionals: Vec<LinearFunctional>,
    index: HashMap<(bool, Vec<usize>), usize>,
    recipes: Vec<Recipe>,
}

impl<'a> Plan<'a> {
    fn functional(&mut self, cell: &[usize], qrem: bool) -> Result<usize> {
        let key = (qrem, cell.to_vec());
        if let Some(&i) = self.index.get(&key) {
            return Ok(i);
        }
        let f = cell_functional(&self.inputs, self.counts, cell, qrem)?;
        self.functionals.push(f);
        self.index.insert(key, self.functionals.len() - 1);
        Ok(self.functionals.len() - 1)
    }

    fn partition(&mut self, p: &Partition, qrem: bool) -> Result<Recipe> {
        let cells = p.cells().iter().map(|c| self.functional(c, qrem)).collect::<Result<_>>()?;
        Ok(Recipe::Partition { k: p.k(), empty: p.empty_cells(), cells })
    }

    fn push(&mut self, r: Recipe) -> usize {
        self.recipes.push(r);
        self.recipes.len() - 1
    }
}

struct ModePlan {
    qrem: bool,
    stabilizers: Vec<usize>,
    edges: Vec<usize>,
    paths: Vec<PathPlan>,
    cells: Vec<(SubgraphRef, usize)>,
}

struct PathPlan {
    n: usize,
    path: Option<SubgraphRef>,
    ssw: Option<usize>,
    cbw: Option<usize>,
    cbw_refined: Option<usize>,
    skipped: Vec<String>,
}

/// Evaluates all enabled analyses on given counts.
pub fn analyze(
    config: &RunConfig,
    g: &Graph,
    coloring: &VertexColoring,
    counts: &[CountsTable],
    calibration: Option<&CalibrationSet>,
) -> Result<BenchReport> {
    let start = Instant::now();
    config.validate(g)?;
    let distributions = counts.iter().map(normalize_counts).collect::<Result<Vec<_>>>()?;
    let ideal;
    let calibration = match calibration {
        Some(c) => c,
        None => {
            ideal = CalibrationSet::uniform(g.n(), 0.0, 0.0)?;
            &ideal
        }
    };
    let inputs = WitnessInputs::new(g, coloring, &distributions)
        .with_calibration(calibration)
        .with_mitigation_limit(config.mitigation_limit);
    let mut plan = Plan { inputs, counts, functionals: Vec::new(), index: HashMap::new(), recipes: Vec::new() };
    let cells = if config.analyses.unit_cells { enumerate_unit_cells(g) } else { Vec::new() };
    let modes: Vec<bool> = if config.qrem { vec![false, true] } else { vec![false] };
    let mut mode_plans = Vec::new();
    for &qrem in &modes {
        let ctx = |what: &'static str| {
            move |e: Error| e.context(format!("{what} ({})", if qrem { "mitigated" } else { "raw" }))
        };
        let vertex_f: Vec<usize> =
            (0..g.n()).map(|i| plan.functional(&[i], qrem)).collect::<Result<_>>().map_err(ctx("stabilizers"))?;
        let stabilizers = vertex_f.iter().map(|&f| plan.push(Recipe::Stabilizer(f))).collect();
        let edges = if config.analyses.bipartite {
            g.edges().iter().map(|&(a, b)| plan.push(Recipe::Bipartite(vertex_f[a], vertex_f[b]))).collect()
        } else {
            Vec::new()
        };
        let cell_plans = cells
            .iter()
            .map(|c| {
                let fs = c.vertices.iter().map(|&v| vertex_f[v]).collect();
                (c.clone(), plan.push(Recipe::Ssw(fs)))
            })
            .collect();
        let mut paths = Vec::new();
        if let Some(range) = config.analyses.ssw_paths {
            let points = vertex_f.iter().map(|&f| plan.functionals[f].point(counts)).collect::<Result<Vec<_>>>()?;
            let stab = stabilizers_from_projectors(&points);
            for res in min_ssw_path_search(g, &stab, &range.lengths())? {
                let mut entry = PathPlan {
                    n: res.n,
                    path: res.best.clone(),
                    ssw: None,
                    cbw: None,
                    cbw_refined: None,
                    skipped: Vec::new(),
                };
                if let Some(path) = &res.best {
                    debug_assert_eq!(res.value, Some(ssw_value(&path.vertices, &stab)));
                    entry.ssw = Some(plan.push(Recipe::Ssw(path.vertices.iter().map(|&v| vertex_f[v]).collect())));
                    if config.analyses.cbw {
                        match plan.partition(&Partition::by_color(&path.sorted(), coloring), qrem) {
                            Ok(r) => entry.cbw = Some(plan.push(r)),
                            Err(e @ Error::MitigationLimit { .. }) => entry.skipped.push(format!("cbw: {e}")),
                            Err(e) => return Err(ctx("coloring witness")(e)),
                        }
                    }
                    if config.analyses.cbw_refined {
                        let reversed: Vec<usize> = path.vertices.iter().rev().copied().collect();
                        let both = [
                            refined_path_partition(&path.vertices, coloring),
                            refined_path_partition(&reversed, coloring),
                        ];
                        let rs = both.iter().map(|p| plan.partition(p, qrem)).collect::<Result<Vec<_>>>();
                        match rs {
                            Ok(rs) => entry.cbw_refined = Some(plan.push(Recipe::Min(rs))),
                            Err(e @ Error::MitigationLimit { .. }) => entry.skipped.push(format!("cbw-refined: {e}")),
                            Err(e) => return Err(ctx("refined coloring witness")(e)),
                        }
                    }
                }
                paths.push(entry);
            }
        }
        mode_plans.push(ModePlan { qrem, stabilizers, edges, paths, cells: cell_plans });
    }
    let planned = start.elapsed().as_secs_f64();
    let recipes = &plan.recipes;
    let intervals = bootstrap_linear(
        counts,
        &plan.functionals,
        |p| recipes.iter().map(|r| r.eval(p)).collect(),
        config.bootstrap,
        config.seed,
    )
    .map_err(|e| e.context("bootstrap"))?;
    let verdict = |i: usize, subject: WitnessSubject| DetectionVerdict::new(intervals[i], subject);
    let mut mode_reports = Vec::new();
    for mp in mode_plans {
        let bipartite = if config.analyses.bipartite {
            let edges: Vec<DetectionVerdict> =
                mp.edges.iter().zip(g.edges()).map(|(&i, &(a, b))| verdict(i, WitnessSubject::Edge([a, b]))).collect();
            Some(BipartiteSection {
                detected_edges: edges.iter().filter(|v| v.detected).count(),
                regions: bipartite_regions(g, &edges)?,
                point_regions: bipartite_regions_by_point(g, &edges)?,
                edges,
            })
        } else {
            None
        };
        let paths = config.analyses.ssw_paths.map(|_| {
            mp.paths
                .into_iter()
                .map(|pp| {
                    let subject = || WitnessSubject::Subgraph(pp.path.clone().expect("path present"));
                    PathEntry {
                        n: pp.n,
                        ssw: pp.ssw.map(|i| verdict(i, subject())),
                        cbw: pp.cbw.map(|i| verdict(i, subject())),
                        cbw_refined: pp.cbw_refined.map(|i| verdict(i, subject())),
                        path: pp.path.clone(),
                        skipped: pp.skipped,
                    }
                })
                .collect()
        });
        let unit_cells = config.analyses.unit_cells.then(|| {
            let cells: Vec<DetectionVerdict> =
                mp.cells.into_iter().map(|(c, i)| verdict(i, WitnessSubject::Subgraph(c))).collect();
            CellSection { detected: cells.iter().filter(|v| v.detected).count(), cells }
        });
        mode_reports.push(ModeReport {
            qrem: mp.qrem,
            stabilizers: mp.stabilizers.iter().map(|&i| intervals[i]).collect(),
            bipartite,
            paths,
            unit_cells,
        });
    }
    let mut timing = BTreeMap::new();
    timing.insert("plan".to_string(), planned);
    timing.insert("analysis".to_string(), start.elapsed().as_secs_f64());
    Ok(BenchReport {
        schema_version: REPORT_SCHEMA_VERSION,
        config: config.clone(),
        graph: GraphSummary {
            name: g.name().map(str::to_string),
            n: g.n(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        },
        coloring: coloring.colors().to_vec(),
        settings: counts
            .iter()
            .map(|t| SettingSummary { setting: t.setting, shots: t.shots(), distinct_outcomes: t.counts().len() })
            .collect(),
        modes: mode_reports,
        timing,
    })
}
