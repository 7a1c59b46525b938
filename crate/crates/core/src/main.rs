// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gsbench::analysis::{min_ssw_path_search, unit_cell_scan};
use gsbench::distribution::normalize_counts;
use gsbench::dot::export_dot;
use gsbench::pipeline::{
    read_counts, simulate_counts, write_counts, AnalysisToggles, BenchReport, GraphSource, NoiseSpec, PathRange,
    ReadoutSpec, RunConfig,
};
use gsbench::tolerance::{c_factor, refined_path_cell_sizes, ssw_tolerance, white_noise_tolerance};
use gsbench::witness::{
    bipartite_witness, coloring_witness, evaluate_witness, refined_cbw_path, stabilizer_expectations,
    stabilizer_sum_witness, WitnessInputs,
};
use gsbench::{build_heavy_hex, run_pipeline, two_color, CountsTable, Error, Graph, Partition, Result, SubgraphRef};

#[derive(Parser)]
#[command(name = "gsbench", version, about = "Graph-state entanglement benchmarks on coupling maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a coupling graph as an edge-list document.
    GenerateGraph(GenerateArgs),
    /// Sample counts for every measurement setting.
    Simulate(RunArgs),
    /// Evaluate one witness on counts.
    Evaluate(EvaluateArgs),
    /// Find the induced paths with the lowest stabilizer sum witness.
    SearchPaths(RunArgs),
    /// Stabilizer sum witness of every 12-vertex unit cell.
    ScanCells(RunArgs),
    /// White-noise tolerances of the stabilizer and refined coloring witnesses.
    Tolerance(ToleranceArgs),
    /// Run the full benchmark and write a report.
    Report(RunArgs),
    /// Convert a report to Graphviz DOT.
    ExportDot(DotArgs),
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    preset: Option<String>,
    /// Heavy-hex lattice of the given odd distance.
    #[arg(long)]
    heavy_hex: Option<usize>,
    /// Grid as ROWSxCOLS.
    #[arg(long)]
    grid: Option<String>,
    #[arg(long)]
    path: Option<usize>,
    #[arg(long)]
    cycle: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct RunArgs {
    /// JSON run configuration; its fields override the flags.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    preset: Option<String>,
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    shots: Option<u64>,
    #[arg(long)]
    white_noise: Option<f64>,
    #[arg(long)]
    cz_noise: Option<f64>,
    /// Uniform readout error, P(1|0).
    #[arg(long)]
    readout_p10: Option<f64>,
    /// Uniform readout error, P(0|1).
    #[arg(long)]
    readout_p01: Option<f64>,
    /// Per-qubit readout errors drawn uniformly from [min, max].
    #[arg(long, num_args = 2, value_names = ["MIN", "MAX"])]
    readout_random: Option<Vec<f64>>,
    /// Calibration document; used as readout model and for mitigation.
    #[arg(long)]
    calibration: Option<PathBuf>,
    #[arg(long)]
    no_qrem: bool,
    #[arg(long)]
    min_path: Option<usize>,
    #[arg(long)]
    max_path: Option<usize>,
    #[arg(long)]
    no_bipartite: bool,
    #[arg(long)]
    no_paths: bool,
    #[arg(long)]
    no_unit_cells: bool,
    #[arg(long)]
    no_cbw: bool,
    #[arg(long)]
    no_cbw_refined: bool,
    #[arg(long)]
    bootstrap: Option<usize>,
    #[arg(long)]
    mitigation_limit: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    output_dir: Option<PathBuf>,
    /// Counts files to analyze instead of simulating.
    #[arg(long, num_args = 1..)]
    counts: Option<Vec<PathBuf>>,
    /// Write the result here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum WitnessChoice {
    Stabilizers,
    Ssw,
    Cbw,
    CbwRefined,
    Bipartite,
    Singletons,
}

#[derive(Args)]
struct EvaluateArgs {
    #[command(flatten)]
    run: RunArgs,
    #[arg(long, value_enum)]
    witness: WitnessChoice,
    /// Comma-separated vertex list; a path for cbw-refined, an edge for bipartite.
    #[arg(long, value_delimiter = ',')]
    vertices: Vec<usize>,
    /// Evaluate with readout mitigation.
    #[arg(long)]
    qrem: bool,
}

#[derive(Args)]
struct ToleranceArgs {
    /// Tabulate n = 1..=MAX_N.
    #[arg(long, default_value_t = 30)]
    max_n: usize,
    /// Tolerance of a single partition with these cell sizes.
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DotArgs {
    #[arg(long)]
    report: PathBuf,
    /// Graph document; defaults to the graph recorded in the report.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Recursive object merge; tagged enums are replaced whole.
fn merge(base: &mut Value, over: Value) {
    match (base, over) {
        (Value::Object(b), Value::Object(o)) => {
            for (k, v) in o {
                match b.get_mut(&k) {
                    Some(slot) if slot.is_object() && v.is_object() && !["graph", "readout"].contains(&k.as_str()) => {
                        merge(slot, v)
                    }
                    _ => {
                        b.insert(k, v);
                    }
                }
            }
        }
        (b, o) => *b = o,
    }
}

impl RunArgs {
    fn to_config(&self) -> Result<RunConfig> {
        let mut c = RunConfig::default();
        if let Some(p) = &self.preset {
            c.graph = GraphSource::Preset(p.clone());
        }
        if let Some(g) = &self.graph {
            c.graph = GraphSource::File(g.clone());
        }
        c.shots = self.shots.unwrap_or(c.shots);
        c.noise = NoiseSpec {
            white_noise_p: self.white_noise.unwrap_or(0.0),
            cz_depolarizing_p: self.cz_noise.unwrap_or(0.0),
            readout: match (&self.calibration, &self.readout_random, self.readout_p10, self.readout_p01) {
                (Some(f), _, _, _) => ReadoutSpec::File(f.clone()),
                (None, Some(r), _, _) => ReadoutSpec::Random { min: r[0], max: r[1] },
                (None, None, None, None) => ReadoutSpec::None,
                (None, None, p10, p01) => ReadoutSpec::Uniform { p10: p10.unwrap_or(0.0), p01: p01.unwrap_or(0.0) },
            },
        };
        c.qrem = !self.no_qrem;
        let defaults = AnalysisToggles::default();
        let range = defaults.ssw_paths.expect("default path range");
        c.analyses = AnalysisToggles {
            bipartite: !self.no_bipartite,
            ssw_paths: (!self.no_paths).then(|| PathRange {
                min: self.min_path.unwrap_or(range.min),
                max: self.max_path.unwrap_or(range.max),
            }),
            unit_cells: !self.no_unit_cells,
            cbw: !self.no_cbw,
            cbw_refined: !self.no_cbw_refined,
        };
        c.bootstrap = self.bootstrap.unwrap_or(c.bootstrap);
        c.mitigation_limit = self.mitigation_limit.unwrap_or(c.mitigation_limit);
        c.seed = self.seed.unwrap_or(c.seed);
        c.output_dir = self.output_dir.clone();
        c.counts = self.counts.clone();
        if let Some(path) = &self.config {
            let text =
                fs::read_to_string(path).map_err(|e| Error::from(e).context(format!("reading {}", path.display())))?;
            let file: Value = serde_json::from_str(&text)
                .map_err(|e| Error::from(e).context(format!("parsing {}", path.display())))?;
            let mut value = serde_json::to_value(&c)?;
            merge(&mut value, file);
            c = serde_json::from_value(value)
                .map_err(|e| Error::from(e).context(format!("applying {}", path.display())))?;
        }
        Ok(c)
    }
}

struct Loaded {
    graph: Graph,
    counts: Vec<CountsTable>,
    calibration: Option<gsbench::CalibrationSet>,
    config: RunConfig,
}

fn load(run: &RunArgs) -> Result<Loaded> {
    let config = run.to_config()?;
    let graph = config.graph.load()?;
    let coloring = two_color(&graph);
    let calibration = config.noise.readout.resolve(graph.n(), config.seed)?;
    let counts = match &config.counts {
        Some(paths) => read_counts(paths, graph.n(), coloring.k())?,
        None => {
            let noise = gsbench::NoiseConfig {
                white_noise_p: config.noise.white_noise_p,
                cz_depolarizing_p: config.noise.cz_depolarizing_p,
                readout: calibration.clone(),
                seed: config.seed,
            };
            if config.shots == 0 {
                return Err(Error::InvalidArgument("shots must be at least 1".into()));
            }
            simulate_counts(&graph, &coloring, config.shots, &noise)?
        }
    };
    Ok(Loaded { graph, counts, calibration, config })
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Error::from(e).context(format!("writing {}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
                _ => Ok(()),
            }
        }
    }
}

fn generate(args: &GenerateArgs) -> Result<()> {
    let g = match (&args.preset, args.heavy_hex, &args.grid, args.path, args.cycle) {
        (Some(p), None, None, None, None) => Graph::preset(p)?,
        (None, Some(d), None, None, None) => build_heavy_hex(d)?,
        (None, None, Some(spec), None, None) => {
            let (r, c) = spec
                .split_once('x')
                .and_then(|(r, c)| Some((r.parse().ok()?, c.parse().ok()?)))
                .ok_or_else(|| Error::InvalidArgument(format!("grid must look like 3x4, got {spec:?}")))?;
            Graph::grid(r, c)
        }
        (None, None, None, Some(n), None) => Graph::path(n),
        (None, None, None, None, Some(n)) => Graph::cycle(n),
        _ => {
            return Err(Error::InvalidArgument(
                "pass exactly one of --preset, --heavy-hex, --grid, --path, --cycle".into(),
            ))
        }
    };
    emit(args.output.as_ref(), &serde_json::to_string_pretty(&g.to_document())?)
}

fn simulate(run: &RunArgs) -> Result<()> {
    let l = load(run)?;
    let files = match &l.config.output_dir {
        Some(dir) => write_counts(dir, &l.counts)?,
        None => Vec::new(),
    };
    let summary = json!({
        "graph": l.graph.name(),
        "n": l.graph.n(),
        "settings": l.counts.iter().map(|t| json!({
            "setting": t.setting,
            "shots": t.shots(),
            "distinct_outcomes": t.counts().len(),
        })).collect::<Vec<_>>(),
        "files": files,
    });
    emit(run.output.as_ref(), &serde_json::to_string_pretty(&summary)?)
}

fn evaluate(args: &EvaluateArgs) -> Result<()> {
    let l = load(&args.run)?;
    let g = &l.graph;
    let coloring = two_color(g);
    let dists = l.counts.iter().map(normalize_counts).collect::<Result<Vec<_>>>()?;
    let mut inputs = WitnessInputs::new(g, &coloring, &dists).with_mitigation_limit(l.config.mitigation_limit);
    let ideal = gsbench::CalibrationSet::uniform(g.n(), 0.0, 0.0)?;
    inputs = inputs.with_calibration(l.calibration.as_ref().unwrap_or(&ideal));
    let vertices = if args.vertices.is_empty() { (0..g.n()).collect() } else { args.vertices.clone() };
    for &v in &vertices {
        g.check_vertex(v)?;
    }
    let value = match args.witness {
        WitnessChoice::Stabilizers => {
            let stab = stabilizer_expectations(&inputs, args.qrem)?;
            serde_json::to_value(
                vertices.iter().map(|&v| json!({"vertex": v, "expectation": stab[v]})).collect::<Vec<_>>(),
            )?
        }
        WitnessChoice::Ssw => {
            let stab = stabilizer_expectations(&inputs, args.qrem)?;
            let mut w = stabilizer_sum_witness(&SubgraphRef::generic(vertices), &stab)?;
            w.qrem_applied = args.qrem;
            serde_json::to_value(w)?
        }
        WitnessChoice::Cbw => {
            serde_json::to_value(coloring_witness(&inputs, &SubgraphRef::generic(vertices), args.qrem)?)?
        }
        WitnessChoice::CbwRefined => {
            serde_json::to_value(refined_cbw_path(&inputs, &SubgraphRef::path(vertices), args.qrem)?)?
        }
        WitnessChoice::Singletons => {
            serde_json::to_value(evaluate_witness(&inputs, &Partition::singletons(&vertices), args.qrem)?)?
        }
        WitnessChoice::Bipartite => {
            let [i, j] = vertices[..] else {
                return Err(Error::InvalidArgument("bipartite witness needs --vertices I,J".into()));
            };
            let stab = stabilizer_expectations(&inputs, args.qrem)?;
            let mut w = bipartite_witness(g, (i, j), &stab)?;
            w.qrem_applied = args.qrem;
            serde_json::to_value(w)?
        }
    };
    emit(args.run.output.as_ref(), &serde_json::to_string_pretty(&value)?)
}

fn search_paths(run: &RunArgs) -> Result<()> {
    let l = load(run)?;
    let coloring = two_color(&l.graph);
    let dists = l.counts.iter().map(normalize_counts).collect::<Result<Vec<_>>>()?;
    let ideal = gsbench::CalibrationSet::uniform(l.graph.n(), 0.0, 0.0)?;
    let inputs = WitnessInputs::new(&l.graph, &coloring, &dists)
        .with_calibration(l.calibration.as_ref().unwrap_or(&ideal))
        .with_mitigation_limit(l.config.mitigation_limit);
    let range = l.config.analyses.ssw_paths.unwrap_or(PathRange { min: 2, max: 30 });
    l.config.validate(&l.graph)?;
    let mut out = serde_json::Map::new();
    let modes: &[bool] = if l.config.qrem { &[false, true] } else { &[false] };
    for &qrem in modes {
        let stab = stabilizer_expectations(&inputs, qrem)?;
        let res = min_ssw_path_search(&l.graph, &stab, &range.lengths())?;
        out.insert(if qrem { "mitigated" } else { "raw" }.into(), serde_json::to_value(res)?);
    }
    emit(run.output.as_ref(), &serde_json::to_string_pretty(&out)?)
}

fn scan_cells(run: &RunArgs) -> Result<()> {
    let l = load(run)?;
    let coloring = two_color(&l.graph);
    let dists = l.counts.iter().map(normalize_counts).collect::<Result<Vec<_>>>()?;
    let ideal = gsbench::CalibrationSet::uniform(l.graph.n(), 0.0, 0.0)?;
    let inputs = WitnessInputs::new(&l.graph, &coloring, &dists)
        .with_calibration(l.calibration.as_ref().unwrap_or(&ideal))
        .with_mitigation_limit(l.config.mitigation_limit);
    let mut out = serde_json::Map::new();
    let modes: &[bool] = if l.config.qrem { &[false, true] } else { &[false] };
    for &qrem in modes {
        let cells = unit_cell_scan(&inputs, &l.counts, qrem, l.config.bootstrap, l.config.seed)?;
        let detected = cells.iter().filter(|c| c.detected).count();
        out.insert(if qrem { "mitigated" } else { "raw" }.into(), json!({"detected": detected, "cells": cells}));
    }
    emit(run.output.as_ref(), &serde_json::to_string_pretty(&out)?)
}

fn tolerance(args: &ToleranceArgs) -> Result<()> {
    if let Some(sizes) = &args.sizes {
        let p = white_noise_tolerance(sizes)?;
        let text = if args.json { json!({"sizes": sizes, "p_tol": p}).to_string() } else { format!("{p:.6}") };
        return emit(None, &text);
    }
    let mut rows = Vec::new();
    for n in 1..=args.max_n {
        let c = c_factor(n)?;
        rows.push(json!({
            "n": n,
            "c": c,
            "p_tol_refined": c / n as f64,
            "p_tol_ssw": ssw_tolerance(n)?,
            "cells": refined_path_cell_sizes(n),
        }));
    }
    if args.json {
        return emit(None, &serde_json::to_string_pretty(&rows)?);
    }
    let mut text = format!("{:>3}  {:>5}  {:>10}  {:>10}", "n", "c(n)", "p_tol", "p_tol_ssw");
    for r in rows {
        text += &format!(
            "\n{:>3}  {:>5.2}  {:>10.6}  {:>10.6}",
            r["n"],
            r["c"].as_f64().unwrap(),
            r["p_tol_refined"].as_f64().unwrap(),
            r["p_tol_ssw"].as_f64().unwrap()
        );
    }
    emit(None, &text)
}

fn report(run: &RunArgs) -> Result<()> {
    let config = run.to_config()?;
    let report = run_pipeline(&config)?;
    emit(run.output.as_ref(), &report.to_json()?)
}

fn export(args: &DotArgs) -> Result<()> {
    let text = fs::read_to_string(&args.report)
        .map_err(|e| Error::from(e).context(format!("reading {}", args.report.display())))?;
    let report = BenchReport::from_json(&text)?;
    let g = match &args.graph {
        Some(p) => GraphSource::File(p.clone()).load()?,
        None => Graph::new(report.graph.n, report.graph.edges.iter().map(|e| (e[0], e[1])))?,
    };
    emit(args.output.as_ref(), &export_dot(&report, &g)?)
}

fn run(cli: Cli) -> Result<()> {
    match &cli.command {
        Command::GenerateGraph(a) => generate(a),
        Command::Simulate(a) => simulate(a),
        Command::Evaluate(a) => evaluate(a),
        Command::SearchPaths(a) => search_paths(a),
        Command::ScanCells(a) => scan_cells(a),
        Command::Tolerance(a) => tolerance(a),
        Command::Report(a) => report(a),
        Command::ExportDot(a) => export(a),
    }
}

fn error_chain(e: &Error) -> Vec<String> {
    let mut chain = vec![e.to_string()];
    let mut cur: Option<&dyn std::error::Error> = std::error::Error::source(e);
    while let Some(s) = cur {
        chain.push(s.to_string());
        cur = s.source();
    }
    chain
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let doc = json!({"error": {"kind": "usage", "message": e.to_string().trim_end()}});
            eprintln!("{doc}");
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let doc = json!({"error": {"kind": e.kind(), "message": e.to_string(), "chain": error_chain(&e)}});
            eprintln!("{doc}");
            ExitCode::FAILURE
        }
    }
}
