// SPDX-License-Identifier: Apache-2.0

//! Brute-force reference over `2^n` amplitudes for small registers.
//!
//! Basis index bit `n - 1 - q` holds qubit `q`, so the binary expansion of an
//! index reads left to right in vertex order, matching the bitstring convention.

use std::io::Write;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::bits::BitString;
use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pauli::{Pauli, PauliString};

/// Default qubit limit for dense computations.
pub const DENSE_LIMIT: usize = 12;
/// Tolerance for identities that hold in exact arithmetic.
pub const EXACT_TOL: f64 = 1e-12;
/// Tolerance for bounds checked over random states.
pub const PROPERTY_TOL: f64 = 1e-9;

pub type CVector = DVector<Complex64>;
pub type CMatrix = DMatrix<Complex64>;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Clone, Debug, PartialEq)]
pub enum DenseState {
    Pure { n: usize, amplitudes: CVector },
    Mixed { n: usize, rho: CMatrix },
}

/// Something whose expectation can be taken on a [`DenseState`].
#[derive(Clone, Copy, Debug)]
pub enum Observable<'a> {
    Pauli(&'a PauliString),
    /// The stabilizer projector `P(U, G)`.
    Projector {
        graph: &'a Graph,
        cell: &'a [usize],
    },
    Matrix(&'a CMatrix),
}

#[inline]
fn bit_of(n: usize, q: usize) -> usize {
    1usize << (n - 1 - q)
}

fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::DenseLimit { n, limit })
    } else {
        Ok(())
    }
}

impl DenseState {
    pub fn n(&self) -> usize {
        match self {
            DenseState::Pure { n, .. } | DenseState::Mixed { n, .. } => *n,
        }
    }

    pub fn dim(&self) -> usize {
        1 << self.n()
    }

    pub fn maximally_mixed(n: usize) -> Result<Self> {
        check_limit(n, DENSE_LIMIT)?;
        let dim = 1usize << n;
        Ok(DenseState::Mixed { n, rho: CMatrix::identity(dim, dim) / Complex64::from(dim as f64) })
    }

    /// The computational basis state `|b⟩`.
    pub fn basis(bits: &BitString) -> Self {
        let n = bits.len();
        let mut amplitudes = CVector::zeros(1 << n);
        let index: usize = bits.ones().map(|q| bit_of(n, q)).sum();
        amplitudes[index] = ONE;
        DenseState::Pure { n, amplitudes }
    }

    pub fn density_matrix(&self) -> CMatrix {
        match self {
            DenseState::Pure { amplitudes, .. } => amplitudes * amplitudes.adjoint(),
            DenseState::Mixed { rho, .. } => rho.clone(),
        }
    }

    pub fn to_mixed(&self) -> Self {
        DenseState::Mixed { n: self.n(), rho: self.density_matrix() }
    }

    /// Checks unit norm, or trace one, Hermiticity and positivity within 1e-10.
    pub fn validate(&self) -> Result<()> {
        let tol = 1e-10;
        match self {
            DenseState::Pure { amplitudes, .. } => {
                if (amplitudes.norm() - 1.0).abs() > tol {
                    return Err(Error::InvalidArgument("state vector is not normalized".into()));
                }
            }
            DenseState::Mixed { rho, .. } => {
                if (rho.trace() - ONE).norm() > tol {
                    return Err(Error::InvalidArgument("density matrix trace is not 1".into()));
                }
                if (rho - rho.adjoint()).norm() > tol {
                    return Err(Error::InvalidArgument("density matrix is not Hermitian".into()));
                }
                if min_eigenvalue(rho) < -tol {
                    return Err(Error::InvalidArgument("density matrix is not positive".into()));
                }
            }
        }
        Ok(())
    }

    /// Convex combination `Σ w_k ρ_k`.
    pub fn mixture(terms: &[(f64, DenseState)]) -> Result<Self> {
        let n = terms.first().map(|t| t.1.n()).ok_or_else(|| Error::InvalidArgument("empty mixture".into()))?;
        let dim = 1usize << n;
        let mut rho = CMatrix::zeros(dim, dim);
        for (w, s) in terms {
            if s.n() != n {
                return Err(Error::InvalidArgument("mixture terms act on different registers".into()));
            }
            rho += s.density_matrix() * Complex64::from(*w);
        }
        Ok(DenseState::Mixed { n, rho })
    }

    /// Writes the raw amplitudes or matrix entries as little-endian `f64` pairs.
    pub fn write_raw(&self, mut out: impl Write) -> Result<()> {
        let values: Vec<Complex64> = match self {
            DenseState::Pure { amplitudes, .. } => amplitudes.iter().copied().collect(),
            DenseState::Mixed { rho, .. } => rho.iter().copied().collect(),
        };
        for c in values {
            out.write_all(&c.re.to_le_bytes())?;
            out.write_all(&c.im.to_le_bytes())?;
        }
        Ok(())
    }
}

/// Applies a Pauli string to a state vector in place (no phase convention other than `Y = iXZ`).
pub fn apply_pauli(n: usize, p: &PauliString, v: &mut CVector) {
    let mut flip = 0usize;
    for (q, f) in p.factors() {
        if matches!(f, Pauli::X | Pauli::Y) {
            flip |= bit_of(n, q);
        }
    }
    let mut out = CVector::zeros(v.len());
    for x in 0..v.len() {
        let mut phase = ONE;
        for (q, f) in p.factors() {
            let set = x & bit_of(n, q) != 0;
            match f {
                Pauli::X => {}
                Pauli::Z => {
                    if set {
                        phase = -phase;
                    }
                }
                // Y|0> = i|1>, Y|1> = -i|0>
                Pauli::Y => phase *= if set { Complex64::new(0.0, -1.0) } else { Complex64::new(0.0, 1.0) },
            }
        }
        out[x ^ flip] += phase * v[x];
    }
    *v = out;
}

pub fn pauli_matrix(n: usize, p: &PauliString) -> CMatrix {
    let dim = 1usize << n;
    let mut m = CMatrix::zeros(dim, dim);
    for col in 0..dim {
        let mut e = CVector::zeros(dim);
        e[col] = ONE;
        apply_pauli(n, p, &mut e);
        m.set_column(col, &e);
    }
    m
}

/// Dense `P(U, G) = Π_{i∈U} (I + S_i)/2`.
pub fn projector_matrix(g: &Graph, cell: &[usize]) -> Result<CMatrix> {
    let n = g.n();
    check_limit(n, DENSE_LIMIT)?;
    let dim = 1usize << n;
    let mut p = CMatrix::identity(dim, dim);
    for &i in cell {
        let s = pauli_matrix(n, &PauliString::stabilizer(g, i)?);
        p = &p * (CMatrix::identity(dim, dim) + s) * Complex64::from(0.5);
    }
    Ok(p)
}

pub fn hadamard(n: usize, q: usize, v: &mut CVector) {
    let b = bit_of(n, q);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    for x in 0..v.len() {
        if x & b == 0 {
            let (a0, a1) = (v[x], v[x | b]);
            v[x] = (a0 + a1) * s;
            v[x | b] = (a0 - a1) * s;
        }
    }
}

pub fn cz(n: usize, a: usize, b: usize, v: &mut CVector) {
    let mask = bit_of(n, a) | bit_of(n, b);
    for x in 0..v.len() {
        if x & mask == mask {
            v[x] = -v[x];
        }
    }
}

fn cz_diagonal(n: usize, edges: &[(usize, usize)]) -> Vec<f64> {
    (0..1usize << n)
        .map(|x| {
            let flips = edges.iter().filter(|&&(a, b)| x & bit_of(n, a) != 0 && x & bit_of(n, b) != 0).count();
            if flips % 2 == 0 {
                1.0
            } else {
                -1.0
            }
        })
        .collect()
}

/// Amplitude vector of `Π CZ |+⟩^n`, within a custom size limit.
pub fn graph_state_vector(g: &Graph, limit: usize) -> Result<CVector> {
    let n = g.n();
    check_limit(n, limit)?;
    let dim = 1usize << n;
    let amp = Complex64::from(1.0 / (dim as f64).sqrt());
    let signs = cz_diagonal(n, g.edges());
    Ok(CVector::from_iterator(dim, signs.into_iter().map(|s| amp * s)))
}

/// `|G⟩` as a pure dense state.
pub fn graph_state_dense(g: &Graph) -> Result<DenseState> {
    Ok(DenseState::Pure { n: g.n(), amplitudes: graph_state_vector(g, DENSE_LIMIT)? })
}

/// Outcome probabilities of measuring `state` after a Hadamard on each qubit in `x_set`.
pub fn measurement_distribution(n: usize, amplitudes: &CVector, x_set: &[usize]) -> Result<Distribution> {
    let mut v = amplitudes.clone();
    for &q in x_set {
        hadamard(n, q, &mut v);
    }
    let weights = (0..v.len()).map(|x| {
        let bits = BitString::from_ones(n, (0..n).filter(|&q| x & bit_of(n, q) != 0));
        (bits, v[x].norm_sqr())
    });
    let cleaned: Vec<(BitString, f64)> = weights.filter(|(_, w)| *w > 1e-15).collect();
    let total: f64 = cleaned.iter().map(|e| e.1).sum();
    Distribution::from_weights(n, cleaned.into_iter().map(|(b, w)| (b, w / total)))
}

/// `tr(O ρ)`.
pub fn expectation(state: &DenseState, obs: Observable<'_>) -> Result<f64> {
    let n = state.n();
    match obs {
        Observable::Pauli(p) => {
            if p.support().any(|q| q >= n) {
                return Err(Error::InvalidArgument(format!("{p} acts outside {n} qubits")));
            }
            match state {
                DenseState::Pure { amplitudes, .. } => {
                    let mut v = amplitudes.clone();
                    apply_pauli(n, p, &mut v);
                    Ok(amplitudes.dotc(&v).re)
                }
                DenseState::Mixed { rho, .. } => Ok((pauli_matrix(n, p) * rho).trace().re),
            }
        }
        Observable::Projector { graph, cell } => {
            if graph.n() != n {
                return Err(Error::InvalidArgument(format!(
                    "projector over {} qubits on a {n}-qubit state",
                    graph.n()
                )));
            }
            match state {
                DenseState::Pure { amplitudes, .. } => {
                    let mut v = amplitudes.clone();
                    for &i in cell {
                        let mut sv = v.clone();
                        apply_pauli(n, &PauliString::stabilizer(graph, i)?, &mut sv);
                        v = (v + sv) * Complex64::from(0.5);
                    }
                    Ok(amplitudes.dotc(&v).re)
                }
                DenseState::Mixed { rho, .. } => Ok((projector_matrix(graph, cell)? * rho).trace().re),
            }
        }
        Observable::Matrix(m) => {
            if m.nrows() != state.dim() || m.ncols() != state.dim() {
                return Err(Error::InvalidArgument(format!(
                    "{}x{} operator on a {n}-qubit state",
                    m.nrows(),
                    m.ncols()
                )));
            }
            Ok((m * state.density_matrix()).trace().re)
        }
    }
}

/// `Π CZ ρ Π CZ` over the boundary edges of `vprime`.
pub fn conjugate_boundary_cz(state: &DenseState, g: &Graph, vprime: &[usize]) -> Result<DenseState> {
    let n = state.n();
    if g.n() != n {
        return Err(Error::InvalidArgument("graph and state sizes differ".into()));
    }
    let diag = cz_diagonal(n, &g.boundary_edges(vprime));
    Ok(match state {
        DenseState::Pure { amplitudes, .. } => DenseState::Pure {
            n,
            amplitudes: CVector::from_iterator(amplitudes.len(), amplitudes.iter().zip(&diag).map(|(a, s)| a * s)),
        },
        DenseState::Mixed { rho, .. } => {
            let dim = rho.nrows();
            DenseState::Mixed { n, rho: CMatrix::from_fn(dim, dim, |r, c| rho[(r, c)] * diag[r] * diag[c]) }
        }
    })
}

/// Reduced density matrix on `keep` (any order; output qubit `j` is `keep[j]`).
pub fn partial_trace(state: &DenseState, keep: &[usize]) -> CMatrix {
    let n = state.n();
    let rho = state.density_matrix();
    let m = keep.len();
    let traced: Vec<usize> = (0..n).filter(|q| !keep.contains(q)).collect();
    let dim_out = 1usize << m;
    let embed = |sub: usize, env: usize| -> usize {
        let mut x = 0usize;
        for (j, &q) in keep.iter().enumerate() {
            if sub & (1 << (m - 1 - j)) != 0 {
                x |= bit_of(n, q);
            }
        }
        for (j, &q) in traced.iter().enumerate() {
            if env & (1 << j) != 0 {
                x |= bit_of(n, q);
            }
        }
        x
    };
    let mut out = CMatrix::zeros(dim_out, dim_out);
    for env in 0..1usize << traced.len() {
        for r in 0..dim_out {
            let xr = embed(r, env);
            for c in 0..dim_out {
                out[(r, c)] += rho[(xr, embed(c, env))];
            }
        }
    }
    out
}

pub fn min_eigenvalue(h: &CMatrix) -> f64 {
    let sym = (h + h.adjoint()) * Complex64::from(0.5);
    sym.symmetric_eigenvalues().iter().copied().fold(f64::INFINITY, f64::min)
}

/// Minimum eigenvalue of `Π P_l − Σ P_l + (k−1) I` for commuting projectors.
pub fn operator_inequality_check(projectors: &[CMatrix]) -> Result<f64> {
    let first = projectors.first().ok_or_else(|| Error::InvalidArgument("no projectors".into()))?;
    let dim = first.nrows();
    for p in projectors {
        if p.nrows() != dim || p.ncols() != dim {
            return Err(Error::InvalidArgument("projectors differ in dimension".into()));
        }
        if (p * p - p).norm() > 1e-9 || (p - p.adjoint()).norm() > 1e-9 {
            return Err(Error::InvalidArgument("operator is not an orthogonal projector".into()));
        }
    }
    for (a, p) in projectors.iter().enumerate() {
        for q in &projectors[a + 1..] {
            if (p * q - q * p).norm() > 1e-9 {
                return Err(Error::InvalidArgument("projectors do not commute".into()));
            }
        }
    }
    let k = projectors.len() as f64;
    let mut product = CMatrix::identity(dim, dim);
    let mut sum = CMatrix::zeros(dim, dim);
    for p in projectors {
        product = &product * p;
        sum += p;
    }
    Ok(min_eigenvalue(&(product - sum + CMatrix::identity(dim, dim) * Complex64::from(k - 1.0))))
}

/// Haar-random pure state on `n` qubits (normalized complex Gaussian vector).
pub fn random_pure_vector(n: usize, rng: &mut impl Rng) -> CVector {
    let v = CVector::from_fn(1 << n, |_, _| {
        Complex64::new(rng.sample::<f64, _>(StandardNormal), rng.sample::<f64, _>(StandardNormal))
    });
    let norm = v.norm();
    v / Complex64::from(norm)
}

/// Random full-rank density matrix `G G† / tr(G G†)` with Gaussian `G`.
pub fn random_density_matrix(n: usize, rng: &mut impl Rng) -> DenseState {
    let dim = 1usize << n;
    let g = CMatrix::from_fn(dim, dim, |_, _| {
        Complex64::new(rng.sample::<f64, _>(StandardNormal), rng.sample::<f64, _>(StandardNormal))
    });
    let rho = &g * g.adjoint();
    let tr = rho.trace();
    DenseState::Mixed { n, rho: rho / tr }
}

fn product_vector(n: usize, a: &[usize], b: &[usize], rng: &mut impl Rng) -> CVector {
    let psi_a = random_pure_vector(a.len(), rng);
    let psi_b = random_pure_vector(b.len(), rng);
    let local = |x: usize, part: &[usize]| -> usize {
        part.iter().enumerate().fold(
            0,
            |acc, (j, &q)| {
                if x & bit_of(n, q) != 0 {
                    acc | (1 << (part.len() - 1 - j))
                } else {
                    acc
                }
            },
        )
    };
    CVector::from_fn(1 << n, |x, _| psi_a[local(x, a)] * psi_b[local(x, b)])
}

fn check_bipartition(a: &[usize], b: &[usize]) -> Result<usize> {
    let n = a.len() + b.len();
    let mut seen = vec![false; n];
    for &q in a.iter().chain(b) {
        if q >= n || seen[q] {
            return Err(Error::InvalidArgument("parts do not partition the register".into()));
        }
        seen[q] = true;
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::InvalidArgument("both parts of a bipartition must be nonempty".into()));
    }
    check_limit(n, DENSE_LIMIT)?;
    Ok(n)
}

/// Pure product `|ψ_A⟩ ⊗ |ψ_B⟩` of Haar-random factors.
pub fn random_bipartite_product_state(a: &[usize], b: &[usize], seed: u64) -> Result<DenseState> {
    let n = check_bipartition(a, b)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(DenseState::Pure { n, amplitudes: product_vector(n, a, b, &mut rng) })
}

/// Convex mixture of up to `max_terms` random products, each over its own random bipartition.
pub fn random_biseparable_mixture(n: usize, max_terms: usize, seed: u64) -> Result<DenseState> {
    if n < 2 {
        return Err(Error::InvalidArgument("biseparable states need at least two qubits".into()));
    }
    check_limit(n, DENSE_LIMIT)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let terms = rng.random_range(1..=max_terms.max(1));
    let mut weights: Vec<f64> = (0..terms).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    weights.iter_mut().for_each(|w| *w /= total);
    let dim = 1usize << n;
    let mut rho = CMatrix::zeros(dim, dim);
    for w in weights {
        // random nontrivial bipartition
        let mask = rng.random_range(1..(1u64 << n) - 1);
        let a: Vec<usize> = (0..n).filter(|q| mask >> q & 1 == 1).collect();
        let b: Vec<usize> = (0..n).filter(|q| mask >> q & 1 == 0).collect();
        let v = product_vector(n, &a, &b, &mut rng);
        rho += (&v * v.adjoint()) * Complex64::from(w);
    }
    Ok(DenseState::Mixed { n, rho })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() < tol
    }

    #[test]
    fn graph_state_examples() {
        let plus = graph_state_dense(&Graph::new(1, []).unwrap()).unwrap();
        let DenseState::Pure { amplitudes, .. } = &plus else { panic!() };
        assert!(close(amplitudes[0].re, std::f64::consts::FRAC_1_SQRT_2, 1e-15));
        assert!(close(amplitudes[1].re, std::f64::consts::FRAC_1_SQRT_2, 1e-15));

        let k2 = graph_state_dense(&Graph::path(2)).unwrap();
        let DenseState::Pure { amplitudes, .. } = &k2 else { panic!() };
        let got: Vec<f64> = amplitudes.iter().map(|a| a.re).collect();
        assert_eq!(got, vec![0.5, 0.5, 0.5, -0.5]);

        assert!(matches!(graph_state_dense(&Graph::path(13)), Err(Error::DenseLimit { n: 13, limit: 12 })));
    }

    #[test]
    fn hadamards_and_czs_reproduce_closed_form() {
        let g = Graph::cycle(5);
        let mut v = CVector::zeros(32);
        v[0] = ONE;
        for q in 0..5 {
            hadamard(5, q, &mut v);
        }
        for &(a, b) in g.edges() {
            cz(5, a, b, &mut v);
        }
        assert!((v - graph_state_vector(&g, 12).unwrap()).norm() < 1e-14);
    }

    #[test]
    fn stabilizers_have_unit_expectation() {
        for g in [Graph::path(4), Graph::cycle(5), Graph::complete(4), Graph::grid(2, 3)] {
            let s = graph_state_dense(&g).unwrap();
            for i in 0..g.n() {
                let e = expectation(&s, Observable::Pauli(&PauliString::stabilizer(&g, i).unwrap())).unwrap();
                assert!(close(e, 1.0, EXACT_TOL));
            }
            // every subset projector
            for mask in 0..1u32 << g.n() {
                let u: Vec<usize> = (0..g.n()).filter(|q| mask >> q & 1 == 1).collect();
                let e = expectation(&s, Observable::Projector { graph: &g, cell: &u }).unwrap();
                assert!(close(e, 1.0, EXACT_TOL));
            }
        }
    }

    #[test]
    fn maximally_mixed_stabilizers_vanish() {
        let g = Graph::path(4);
        let m = DenseState::maximally_mixed(4).unwrap();
        for i in 0..4 {
            let e = expectation(&m, Observable::Pauli(&PauliString::stabilizer(&g, i).unwrap())).unwrap();
            assert!(close(e, 0.0, EXACT_TOL));
        }
    }

    #[test]
    fn middle_of_cluster_is_maximally_mixed() {
        let g = Graph::path(4);
        let s = graph_state_dense(&g).unwrap();
        let full = expectation(&s, Observable::Projector { graph: &g, cell: &[0, 1, 2, 3] }).unwrap();
        assert!(close(full, 1.0, EXACT_TOL));
        let reduced = partial_trace(&s, &[1, 2]);
        let target = CMatrix::identity(4, 4) * Complex64::from(0.25);
        assert!((reduced - target).norm() < EXACT_TOL);
    }

    #[test]
    fn boundary_conjugation_splits_graph_state() {
        let g = Graph::grid(2, 3);
        let s = graph_state_dense(&g).unwrap();
        assert_eq!(conjugate_boundary_cz(&s, &g, &[]).unwrap(), s);
        let vp = [0, 1, 3];
        let rest = [2, 4, 5];
        let hat = conjugate_boundary_cz(&s, &g, &vp).unwrap();
        let g1 = g.induced_subgraph(&vp).unwrap();
        let g2 = g.induced_subgraph(&rest).unwrap();
        // fidelity of each side with its own graph state
        let p1 = partial_trace(&hat, &vp);
        let p2 = partial_trace(&hat, &rest);
        let f1 = expectation(&graph_state_dense(&g1).unwrap().to_mixed(), Observable::Matrix(&p1)).unwrap();
        let f2 = expectation(&graph_state_dense(&g2).unwrap().to_mixed(), Observable::Matrix(&p2)).unwrap();
        assert!(close(f1, 1.0, EXACT_TOL) && close(f2, 1.0, EXACT_TOL));
    }

    #[test]
    fn product_states_are_unentangled_across_the_cut() {
        let s = random_bipartite_product_state(&[0, 2], &[1, 3], 7).unwrap();
        s.validate().unwrap();
        // pure product => reduced state on A is pure
        let ra = partial_trace(&s, &[0, 2]);
        assert!(close((&ra * &ra).trace().re, 1.0, 1e-12));
        assert!(random_bipartite_product_state(&[0], &[0, 1], 1).is_err());
        assert!(random_bipartite_product_state(&[], &[0, 1], 1).is_err());
        let zero = DenseState::basis(&"0000".parse().unwrap());
        assert!(close((partial_trace(&zero, &[0, 1]) * partial_trace(&zero, &[0, 1])).trace().re, 1.0, 1e-15));
    }

    #[test]
    fn operator_inequality_examples() {
        let g = Graph::path(4);
        let p = projector_matrix(&g, &[0, 2]).unwrap();
        assert!(operator_inequality_check(std::slice::from_ref(&p)).unwrap().abs() < EXACT_TOL);
        let q = projector_matrix(&g, &[1, 3]).unwrap();
        assert!(operator_inequality_check(&[p.clone(), q]).unwrap() >= -EXACT_TOL);
        let id = CMatrix::identity(16, 16);
        assert!(operator_inequality_check(&[id.clone(), id.clone(), id]).unwrap().abs() < EXACT_TOL);
        let x = pauli_matrix(1, &PauliString::from_factors([(0, Pauli::X)]));
        let z = pauli_matrix(1, &PauliString::from_factors([(0, Pauli::Z)]));
        let half = Complex64::from(0.5);
        let px = (CMatrix::identity(2, 2) + x) * half;
        let pz = (CMatrix::identity(2, 2) + z) * half;
        assert!(operator_inequality_check(&[px, pz]).is_err());
    }

    #[test]
    fn measurement_distribution_of_k2() {
        let g = Graph::path(2);
        let v = graph_state_vector(&g, 16).unwrap();
        let d = measurement_distribution(2, &v, &[0]).unwrap();
        assert!(close(d.weight(&"00".parse().unwrap()), 0.5, 1e-12));
        assert!(close(d.weight(&"11".parse().unwrap()), 0.5, 1e-12));
        assert_eq!(d.entries().len(), 2);
    }

    #[test]
    fn random_states_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        random_density_matrix(3, &mut rng).validate().unwrap();
        random_biseparable_mixture(4, 8, 11).unwrap().validate().unwrap();
        let mut buf = Vec::new();
        graph_state_dense(&Graph::path(2)).unwrap().write_raw(&mut buf).unwrap();
        assert_eq!(buf.len(), 4 * 16);
    }
}
