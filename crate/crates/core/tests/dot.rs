// SPDX-License-Identifier: Apache-2.0

use gsbench::dot::export_dot;
use gsbench::pipeline::{AnalysisToggles, GraphSource, PathRange};
use gsbench::{build_heavy_hex, run_pipeline, Graph, RunConfig};

fn small_config(graph: &std::path::Path) -> RunConfig {
    RunConfig {
        graph: GraphSource::File(graph.to_path_buf()),
        shots: 2000,
        bootstrap: 100,
        analyses: AnalysisToggles { ssw_paths: Some(PathRange { min: 2, max: 4 }), ..AnalysisToggles::default() },
        ..RunConfig::default()
    }
}

fn write_graph(dir: &tempfile::TempDir, g: &Graph) -> std::path::PathBuf {
    let path = dir.path().join("graph.json");
    std::fs::write(&path, serde_json::to_string(&g.to_document()).unwrap()).unwrap();
    path
}

#[test]
fn detected_edge_is_bold() {
    let dir = tempfile::tempdir().unwrap();
    let g = Graph::path(2);
    let report = run_pipeline(&RunConfig {
        analyses: AnalysisToggles { ssw_paths: Some(PathRange { min: 2, max: 2 }), ..AnalysisToggles::default() },
        ..small_config(&write_graph(&dir, &g))
    })
    .unwrap();
    let dot = export_dot(&report, &g).unwrap();
    let edges: Vec<&str> = dot.lines().filter(|l| l.contains(" -- ")).collect();
    assert_eq!(edges, vec!["  0 -- 1 [color=red, penwidth=3, style=bold];"]);
    assert!(!dot.contains("cluster"));
    assert!(dot.trim_end().ends_with('}'));
}

#[test]
fn white_noise_hides_edges() {
    let dir = tempfile::tempdir().unwrap();
    let g = Graph::path(3);
    let mut config = small_config(&write_graph(&dir, &g));
    config.noise.white_noise_p = 0.9;
    config.analyses.ssw_paths = Some(PathRange { min: 2, max: 3 });
    let report = run_pipeline(&config).unwrap();
    let dot = export_dot(&report, &g).unwrap();
    assert_eq!(dot.matches("style=dashed").count(), 2);
    assert_eq!(dot.matches("style=bold").count(), 0);
}

#[test]
fn heavy_hex_clusters_place_each_vertex_once() {
    let dir = tempfile::tempdir().unwrap();
    let g = build_heavy_hex(3).unwrap();
    let report = run_pipeline(&small_config(&write_graph(&dir, &g))).unwrap();
    let dot = export_dot(&report, &g).unwrap();
    assert_eq!(dot.matches("subgraph cluster_cell_").count(), 2);
    assert_eq!(dot.matches(" -- ").count(), g.edges().len());
    assert_eq!(dot.matches("fillcolor=").count(), g.n());

    // the two cells share vertices, yet no vertex is listed in both clusters
    let mut seen = std::collections::BTreeSet::new();
    let mut in_cluster = false;
    for line in dot.lines() {
        let t = line.trim();
        if t.starts_with("subgraph") {
            in_cluster = true;
        } else if t == "}" {
            in_cluster = false;
        } else if in_cluster && !t.contains('=') {
            for v in t.trim_end_matches(';').split("; ") {
                assert!(seen.insert(v.to_string()), "vertex {v} in two clusters");
            }
        }
    }
    assert_eq!(seen.len(), 24 - 3);
}

#[test]
fn mismatched_graph_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let report = run_pipeline(&small_config(&write_graph(&dir, &Graph::path(4)))).unwrap();
    assert!(export_dot(&report, &Graph::cycle(4)).is_err());
    assert!(export_dot(&report, &Graph::path(5)).is_err());
}
