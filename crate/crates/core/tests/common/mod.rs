// SPDX-License-Identifier: Apache-2.0

//! Shared fixtures and independent reference implementations for the
//! integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use gsbench::{BitString, CountsTable, Distribution, Graph};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Mat = DMatrix<Complex64>;

fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::new(10, outer.chain(spokes).chain(inner).collect::<Vec<_>>()).unwrap()
}

/// Erdős–Rényi graph; may be disconnected.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Random connected graph: a random spanning tree plus extra edges.
pub fn random_connected_graph(n: usize, extra: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = BTreeSet::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        edges.insert((u, v));
    }
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(extra) {
                edges.insert((a, b));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Fixed test set of graphs with at most `max_n` vertices.
pub fn graph_set(max_n: usize) -> Vec<(String, Graph)> {
    let mut set: Vec<(String, Graph)> = Vec::new();
    for n in 2..=max_n {
        set.push((format!("P{n}"), Graph::path(n)));
    }
    for n in 3..=max_n {
        set.push((format!("C{n}"), Graph::cycle(n)));
    }
    for leaves in 2..max_n {
        set.push((format!("star{leaves}"), Graph::star(leaves)));
    }
    for n in 3..=max_n.min(6) {
        set.push((format!("K{n}"), Graph::complete(n)));
    }
    for (r, c) in [(2, 2), (2, 3), (2, 4), (3, 3), (2, 5)] {
        if r * c <= max_n {
            set.push((format!("grid{r}x{c}"), Graph::grid(r, c)));
        }
    }
    if max_n >= 10 {
        set.push(("petersen".into(), petersen()));
    }
    for seed in 0..6u64 {
        let n = 4 + (seed as usize % (max_n.saturating_sub(3)).max(1));
        if n <= max_n {
            set.push((format!("tree+{seed}"), random_connected_graph(n, 0.2, seed)));
        }
    }
    set
}

pub fn connected_set(max_n: usize) -> Vec<(String, Graph)> {
    graph_set(max_n).into_iter().filter(|(_, g)| g.is_connected()).collect()
}

fn induced_degrees(g: &Graph, set: &[usize]) -> Vec<usize> {
    set.iter().map(|&v| g.neighbors(v).iter().filter(|w| set.contains(w)).count()).collect()
}

fn subset_connected(g: &Graph, set: &[usize]) -> bool {
    let mut seen = BTreeSet::from([set[0]]);
    let mut stack = vec![set[0]];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if set.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == set.len()
}

/// Walks an induced path or cycle from `start`, following unvisited neighbors inside `set`.
fn walk(g: &Graph, set: &[usize], start: usize) -> Vec<usize> {
    let mut order = vec![start];
    loop {
        let last = *order.last().unwrap();
        match g.neighbors(last).iter().find(|w| set.contains(w) && !order.contains(w)) {
            Some(&w) => order.push(w),
            None => return order,
        }
    }
}

fn subsets(n: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n)
        .filter(move |m| m.count_ones() as usize == len)
        .map(move |m| (0..n).filter(|i| m >> i & 1 == 1).collect())
}

/// Induced paths on `len` vertices by checking every vertex subset.
pub fn brute_force_paths(g: &Graph, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if len < 2 {
        return out;
    }
    for set in subsets(g.n(), len) {
        let deg = induced_degrees(g, &set);
        let edges: usize = deg.iter().sum::<usize>() / 2;
        if edges == len - 1 && deg.iter().all(|&d| d <= 2) && subset_connected(g, &set) {
            let ends: Vec<usize> = set.iter().zip(&deg).filter(|(_, &d)| d == 1).map(|(&v, _)| v).collect();
            out.push(walk(g, &set, ends[0].min(ends[1])));
        }
    }
    out.sort();
    out
}

/// Chordless cycles on `len` vertices by checking every vertex subset, in the
/// enumerator's orientation: smallest vertex first, second vertex below last.
pub fn brute_force_cycles(g: &Graph, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if len < 3 {
        return out;
    }
    for set in subsets(g.n(), len) {
        let deg = induced_degrees(g, &set);
        if deg.iter().all(|&d| d == 2) && subset_connected(g, &set) {
            let mut c = walk(g, &set, set[0]);
            if c[1] > c[len - 1] {
                c[1..].reverse();
            }
            out.push(c);
        }
    }
    out.sort();
    out
}

/// Distinct vertex sets of 12-vertex chordless cycles found by walking simple
/// paths between the endpoints of every edge.
pub fn unit_cells_by_edge_walks(g: &Graph) -> BTreeSet<Vec<usize>> {
    fn dfs(g: &Graph, target: usize, banned: (usize, usize), path: &mut Vec<usize>, found: &mut BTreeSet<Vec<usize>>) {
        let last = *path.last().unwrap();
        if path.len() == 12 {
            if last == target {
                let mut set = path.clone();
                set.sort_unstable();
                if g.induced_edges(&set).len() == 12 {
                    found.insert(set);
                }
            }
            return;
        }
        for &w in g.neighbors(last) {
            if (last, w) == banned || (w, last) == banned || path.contains(&w) {
                continue;
            }
            if w == target && path.len() < 11 {
                continue;
            }
            path.push(w);
            dfs(g, target, banned, path, found);
            path.pop();
        }
    }
    let mut found = BTreeSet::new();
    for &(a, b) in g.edges() {
        dfs(g, b, (a, b), &mut vec![a], &mut found);
    }
    found
}

pub fn tv_counts(counts: &CountsTable, exact: &Distribution) -> f64 {
    let shots = counts.shots() as f64;
    let mut keys: BTreeSet<BitString> = counts.counts().keys().cloned().collect();
    keys.extend(exact.entries().iter().map(|(b, _)| b.clone()));
    0.5 * keys.iter().map(|b| (counts.get(b) as f64 / shots - exact.weight(b)).abs()).sum::<f64>()
}

// Reference density-matrix simulator built from explicit Kronecker products.
// Qubit 0 is the most significant factor.

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn single(which: char) -> Mat {
    let i = Complex64::i();
    match which {
        'I' => Mat::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(1.0)]),
        'X' => Mat::from_row_slice(2, 2, &[c(0.0), c(1.0), c(1.0), c(0.0)]),
        'Y' => Mat::from_row_slice(2, 2, &[c(0.0), -i, i, c(0.0)]),
        'Z' => Mat::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(-1.0)]),
        'H' => Mat::from_row_slice(2, 2, &[c(1.0), c(1.0), c(1.0), c(-1.0)]) * c(std::f64::consts::FRAC_1_SQRT_2),
        _ => unreachable!(),
    }
}

/// `⊗_q ops[q]`.
pub fn kron_all(ops: &[Mat]) -> Mat {
    ops.iter().skip(1).fold(ops[0].clone(), |acc, m| acc.kronecker(m))
}

pub fn on_qubits(n: usize, placed: &[(usize, char)]) -> Mat {
    let ops: Vec<Mat> =
        (0..n).map(|q| placed.iter().find(|(p, _)| *p == q).map_or_else(|| single('I'), |(_, w)| single(*w))).collect();
    kron_all(&ops)
}

pub fn cz_matrix(n: usize, a: usize, b: usize) -> Mat {
    let p0 = Mat::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(0.0)]);
    let p1 = Mat::from_row_slice(2, 2, &[c(0.0), c(0.0), c(0.0), c(1.0)]);
    let mut ops0: Vec<Mat> = (0..n).map(|_| single('I')).collect();
    ops0[a] = p0;
    let mut ops1: Vec<Mat> = (0..n).map(|_| single('I')).collect();
    ops1[a] = p1;
    ops1[b] = single('Z');
    kron_all(&ops0) + kron_all(&ops1)
}

/// Outcome distribution of the noisy circuit: `|+⟩^n`, each CZ in `layers`
/// followed by two-qubit depolarizing noise of strength `p_cz`, a Hadamard on
/// `x_set`, then computational-basis measurement.
pub fn dense_noisy_distribution(g: &Graph, layers: &[Vec<(usize, usize)>], x_set: &[usize], p_cz: f64) -> Distribution {
    let n = g.n();
    let dim = 1usize << n;
    let h_all = kron_all(&vec![single('H'); n]);
    let mut zero = Mat::zeros(dim, dim);
    zero[(0, 0)] = c(1.0);
    let mut rho = &h_all * zero * h_all.adjoint();
    let paulis = ['I', 'X', 'Y', 'Z'];
    for layer in layers {
        for &(a, b) in layer {
            let u = cz_matrix(n, a, b);
            rho = &u * rho * u.adjoint();
            let mut noisy = &rho * c(1.0 - p_cz);
            for pa in paulis {
                for pb in paulis {
                    if pa == 'I' && pb == 'I' {
                        continue;
                    }
                    let p = on_qubits(n, &[(a, pa), (b, pb)]);
                    noisy += (&p * &rho * p.adjoint()) * c(p_cz / 15.0);
                }
            }
            rho = noisy;
        }
    }
    let placed: Vec<(usize, char)> = x_set.iter().map(|&q| (q, 'H')).collect();
    let h = on_qubits(n, &placed);
    rho = &h * rho * h.adjoint();
    let weights = (0..dim).map(|x| {
        let mut b = BitString::zeros(n);
        for q in 0..n {
            b.set(q, x >> (n - 1 - q) & 1 == 1);
        }
        (b, rho[(x, x)].re)
    });
    Distribution::from_weights(n, weights.filter(|(_, w)| w.abs() > 1e-15)).unwrap()
}
