// SPDX-License-Identifier: Apache-2.0

mod common;

use std::collections::BTreeMap;

use gsbench::analysis::{
    bootstrap_linear, min_ssw_path_search, resample_counts, ssw_value, vertex_projector_functionals, Interval,
};
use gsbench::distribution::{apply_confusion, mitigate, mitigated_observable, normalize_counts, QubitCalibration};
use gsbench::enumerate::{enumerate_chordless_cycles, enumerate_path_subgraphs};
use gsbench::witness::{
    bipartite_witness, coloring_witness, combine_projectors, evaluate_witness, refined_cbw_path,
    stabilizer_expectations, stabilizer_sum_witness,
};
use gsbench::{two_color, BitString, CountsTable, Distribution, Graph, Partition, SubgraphRef, WitnessInputs};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, 0.1f64..0.7, any::<u64>()).prop_map(|(n, p, seed)| common::random_graph(n, p, seed))
}

fn connected_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, 0.0f64..0.4, any::<u64>()).prop_map(|(n, p, seed)| common::random_connected_graph(n, p, seed))
}

fn distribution_strategy(n: usize) -> impl Strategy<Value = Distribution> {
    proptest::collection::vec((0..1u64 << n, 0.001f64..1.0), 1..40).prop_map(move |entries| {
        let total: f64 = entries.iter().map(|e| e.1).sum();
        let mut merged = BTreeMap::new();
        for (x, w) in entries {
            *merged.entry(BitString::from_index(n, x)).or_insert(0.0) += w / total;
        }
        Distribution::from_weights(n, merged).unwrap()
    })
}

/// Connected graph with one random distribution per color.
fn instance(max_n: usize) -> impl Strategy<Value = (Graph, Vec<Distribution>)> {
    connected_strategy(max_n).prop_flat_map(|g| {
        let k = two_color(&g).k();
        let n = g.n();
        (Just(g), proptest::collection::vec(distribution_strategy(n), k))
    })
}

fn calib_strategy(n: usize) -> impl Strategy<Value = Vec<QubitCalibration>> {
    proptest::collection::vec((0.0f64..0.3, 0.0f64..0.3), n)
        .prop_map(|v| v.into_iter().map(|(a, b)| QubitCalibration::new(a, b)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn paths_and_cycles_match_brute_force(g in graph_strategy(9)) {
        for len in 2..=g.n() {
            let got: Vec<Vec<usize>> = enumerate_path_subgraphs(&g, len).into_iter().map(|p| p.vertices).collect();
            prop_assert_eq!(got, common::brute_force_paths(&g, len));
        }
        for len in 3..=g.n() {
            prop_assert_eq!(enumerate_chordless_cycles(&g, len), common::brute_force_cycles(&g, len));
        }
    }

    #[test]
    fn generic_witness_range_on_probabilities((g, dists) in instance(8)) {
        let coloring = two_color(&g);
        let inputs = WitnessInputs::new(&g, &coloring, &dists);
        let all: Vec<usize> = (0..g.n()).collect();
        for partition in [Partition::by_color(&all, &coloring), Partition::singletons(&all)] {
            let w = evaluate_witness(&inputs, &partition, false).unwrap();
            let k = partition.k() as f64;
            prop_assert!(w.value >= -0.5 - 1e-12 && w.value <= k - 0.5 + 1e-12);
            prop_assert_eq!(w.capped_cells, 0);
        }
    }

    #[test]
    fn single_vertex_identity((g, dists) in instance(8)) {
        let coloring = two_color(&g);
        let inputs = WitnessInputs::new(&g, &coloring, &dists);
        let stab = stabilizer_expectations(&inputs, false).unwrap();
        for (i, s) in stab.iter().enumerate() {
            let w = evaluate_witness(&inputs, &Partition::singletons(&[i]), false).unwrap();
            prop_assert_eq!(-2.0 * w.value, *s);
        }
    }

    #[test]
    fn witness_ordering_on_paths((g, dists) in instance(9)) {
        // the singleton partition gives SSW/2, so SSW/2 >= refined CBW >= CBW by refinement
        let coloring = two_color(&g);
        let inputs = WitnessInputs::new(&g, &coloring, &dists);
        let stab = stabilizer_expectations(&inputs, false).unwrap();
        for len in 2..=g.n().min(7) {
            for path in enumerate_path_subgraphs(&g, len) {
                let ssw = stabilizer_sum_witness(&path, &stab).unwrap().value;
                let refined = refined_cbw_path(&inputs, &path, false).unwrap().value;
                let cbw = coloring_witness(&inputs, &path, false).unwrap().value;
                prop_assert!(ssw / 2.0 >= refined - 1e-12, "ssw/2 {} < refined {}", ssw / 2.0, refined);
                prop_assert!(refined >= cbw - 1e-12, "refined {} < cbw {}", refined, cbw);
            }
        }
    }

    #[test]
    fn bipartite_witness_is_affine(a in -1.0f64..1.0, b in -1.0f64..1.0) {
        let g = Graph::path(2);
        let w = bipartite_witness(&g, (0, 1), &[a, b]).unwrap();
        prop_assert_eq!(w.value, 1.0 - a - b);
        prop_assert!(bipartite_witness(&g, (1, 0), &[a, b]).is_ok());
    }

    #[test]
    fn cap_never_increases_value(ps in proptest::collection::vec(-0.5f64..1.5, 1..10), empty in 0usize..3) {
        let (capped, count) = combine_projectors(ps.len() + empty, empty, &ps);
        let raw = (ps.len() + empty) as f64 - 0.5 - empty as f64 - ps.iter().sum::<f64>();
        prop_assert!(capped >= raw - 1e-12);
        prop_assert_eq!(count, ps.iter().filter(|&&p| p > 1.0).count());
    }

    #[test]
    fn confusion_then_mitigation_is_identity(
        (d, calibs) in (1usize..7).prop_flat_map(|n| (distribution_strategy(n), calib_strategy(n)))
    ) {
        let noisy = apply_confusion(&d, &calibs).unwrap();
        prop_assert!((noisy.total() - 1.0).abs() < 1e-12);
        let back = mitigate(&noisy, &calibs, 16).unwrap();
        for (b, w) in d.entries() {
            prop_assert!((back.weight(b) - w).abs() < 1e-10);
        }
        prop_assert!(back.entries().iter().all(|(b, w)| d.weight(b) != 0.0 || w.abs() < 1e-10));
    }

    #[test]
    fn mitigated_observable_is_the_adjoint(
        (d, calibs, f) in (1usize..6).prop_flat_map(|n| (
            distribution_strategy(n),
            calib_strategy(n),
            proptest::collection::vec(-1.0f64..1.0, 1 << n),
        ))
    ) {
        let n = d.len();
        let h = mitigated_observable(&f, &calibs, 16).unwrap();
        let lhs: f64 = d.entries().iter().map(|(b, w)| w * h[b.to_index() as usize]).sum();
        let m = mitigate(&d, &calibs, 16).unwrap();
        let rhs: f64 = m.entries().iter().map(|(b, w)| w * f[b.to_index() as usize]).sum();
        prop_assert!((lhs - rhs).abs() < 1e-10, "n={} {} vs {}", n, lhs, rhs);
    }

    #[test]
    fn resampling_preserves_shots(counts in proptest::collection::btree_map(0u64..64, 1u64..500, 1..20), seed: u64) {
        let table = CountsTable::new(0, 6, counts.into_iter().map(|(x, c)| (BitString::from_index(6, x), c)).collect()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let again = resample_counts(&table, &mut rng).unwrap();
        prop_assert_eq!(again.shots(), table.shots());
        prop_assert!(again.counts().keys().all(|k| table.get(k) > 0));
    }

    #[test]
    fn counts_json_round_trip(counts in proptest::collection::btree_map(0u64..1024, 1u64..1000, 1..30), setting in 0usize..3) {
        let table = CountsTable::new(setting, 10, counts.into_iter().map(|(x, c)| (BitString::from_index(10, x), c)).collect()).unwrap();
        let back = CountsTable::from_json(&table.to_json().unwrap()).unwrap();
        prop_assert_eq!(back, table);
    }

    #[test]
    fn interval_contains_point(point in -2.0f64..2.0, mut samples in proptest::collection::vec(-2.0f64..2.0, 1..200)) {
        let iv = Interval::from_samples(point, &mut samples);
        prop_assert!(iv.low <= iv.point && iv.point <= iv.high);
    }

    #[test]
    fn path_search_finds_the_minimum(g in connected_strategy(8), seed: u64) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let stab: Vec<f64> = (0..g.n()).map(|_| rng.random_range(-1.0..1.0)).collect();
        let lengths: Vec<usize> = (2..=g.n()).collect();
        for r in min_ssw_path_search(&g, &stab, &lengths).unwrap() {
            let all = enumerate_path_subgraphs(&g, r.n);
            let best = all.iter().map(|p| ssw_value(&p.vertices, &stab)).fold(f64::INFINITY, f64::min);
            match r.value {
                Some(v) => prop_assert!((v - best).abs() < 1e-12),
                None => prop_assert!(all.is_empty()),
            }
        }
    }
}

#[test]
fn bootstrap_width_shrinks_with_shots() {
    let g = Graph::path(4);
    let coloring = two_color(&g);
    let noise = gsbench::NoiseConfig { white_noise_p: 0.3, seed: 4, ..Default::default() };
    let mut widths = Vec::new();
    for shots in [500, 50_000] {
        let counts: Vec<CountsTable> =
            (0..2).map(|c| gsbench::sample_counts(&g, &coloring, c, shots, &noise).unwrap()).collect();
        let dists: Vec<Distribution> = counts.iter().map(|t| normalize_counts(t).unwrap()).collect();
        let inputs = WitnessInputs::new(&g, &coloring, &dists);
        let functionals = vertex_projector_functionals(&inputs, &counts, false).unwrap();
        let iv = bootstrap_linear(&counts, &functionals, |p| p.to_vec(), 400, 1).unwrap();
        widths.push(iv[0].width());
    }
    // standard error scales as 1/sqrt(shots): a factor of 10 here
    assert!(widths[1] < widths[0] / 5.0, "{widths:?}");
}

#[test]
fn subgraph_witnesses_reject_bad_subjects() {
    let g = Graph::cycle(5);
    let coloring = two_color(&g);
    let dists: Vec<Distribution> = (0..coloring.k()).map(|_| Distribution::uniform(5).unwrap()).collect();
    let inputs = WitnessInputs::new(&g, &coloring, &dists);
    // 0-2 is not an induced path
    assert!(refined_cbw_path(&inputs, &SubgraphRef::path(vec![0, 2]), false).is_err());
    assert!(stabilizer_sum_witness(&SubgraphRef::generic(vec![0, 9]), &[1.0; 5]).is_err());
}
