// SPDX-License-Identifier: Apache-2.0

//! Bit-packed stabilizer tableau restricted to what graph-state preparation
//! needs: Hadamard and controlled-Z gates, followed by extraction of the
//! computational-basis outcome space.
//!
//! Rows hold the `n` stabilizer generators as `(x | z)` bit rows with a sign
//! bit, packed 64 qubits per word. The outcome distribution of a stabilizer
//! state is uniform over an affine subspace; [`Tableau::outcome_space`] finds
//! it by eliminating the X part of the generators and solving the Z-only
//! constraints, after which each sample costs `O(rank · n / 64)`.

use rand::Rng;

use crate::bits::BitString;

#[derive(Clone, Debug)]
pub struct Tableau {
    n: usize,
    words: usize,
    x: Vec<Vec<u64>>,
    z: Vec<Vec<u64>>,
    sign: Vec<bool>,
}

#[inline]
fn get(row: &[u64], q: usize) -> bool {
    row[q >> 6] >> (q & 63) & 1 == 1
}

#[inline]
fn flip(row: &mut [u64], q: usize) {
    row[q >> 6] ^= 1 << (q & 63);
}

impl Tableau {
    /// `|0…0⟩`, stabilized by every `Z_q`.
    pub fn zero_state(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        let x = vec![vec![0u64; words]; n];
        let mut z = vec![vec![0u64; words]; n];
        for (q, row) in z.iter_mut().enumerate() {
            flip(row, q);
        }
        Self { n, words, x, z, sign: vec![false; n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&mut self, q: usize) {
        let (w, m) = (q >> 6, 1u64 << (q & 63));
        for r in 0..self.n {
            let xb = self.x[r][w] & m;
            let zb = self.z[r][w] & m;
            if xb != 0 && zb != 0 {
                self.sign[r] ^= true;
            }
            self.x[r][w] = (self.x[r][w] & !m) | zb;
            self.z[r][w] = (self.z[r][w] & !m) | xb;
        }
    }

    /// Controlled-Z: `X_a → X_a Z_b`, `X_b → Z_a X_b`, with a sign flip when
    /// both X bits are set and exactly one Z bit is.
    pub fn cz(&mut self, a: usize, b: usize) {
        for r in 0..self.n {
            let (xa, za) = (get(&self.x[r], a), get(&self.z[r], a));
            let (xb, zb) = (get(&self.x[r], b), get(&self.z[r], b));
            if xa && xb && (za ^ zb) {
                self.sign[r] ^= true;
            }
            if xb {
                flip(&mut self.z[r], a);
            }
            if xa {
                flip(&mut self.z[r], b);
            }
        }
    }

    /// Row `target` ← row `source` · row `target`, tracking the sign.
    fn rowsum(&mut self, target: usize, source: usize) {
        let mut plus = 0u32;
        let mut minus = 0u32;
        for w in 0..self.words {
            let (x1, z1) = (self.x[source][w], self.z[source][w]);
            let (x2, z2) = (self.x[target][w], self.z[target][w]);
            let y1 = x1 & z1;
            let xo = x1 & !z1;
            let zo = !x1 & z1;
            plus += ((y1 & z2 & !x2) | (xo & z2 & x2) | (zo & x2 & !z2)).count_ones();
            minus += ((y1 & x2 & !z2) | (xo & z2 & !x2) | (zo & x2 & z2)).count_ones();
        }
        let total = 2 * (self.sign[target] as i64 + self.sign[source] as i64) + plus as i64 - minus as i64;
        debug_assert!(total.rem_euclid(2) == 0, "stabilizer rows must commute");
        self.sign[target] = total.rem_euclid(4) == 2;
        for w in 0..self.words {
            let (sx, sz) = (self.x[source][w], self.z[source][w]);
            self.x[target][w] ^= sx;
            self.z[target][w] ^= sz;
        }
    }

    /// The affine space of computational-basis outcomes.
    pub fn outcome_space(&self) -> OutcomeSpace {
        let mut t = self.clone();
        // eliminate the X part
        let mut rank_x = 0;
        for q in 0..t.n {
            let Some(p) = (rank_x..t.n).find(|&r| get(&t.x[r], q)) else { continue };
            t.x.swap(p, rank_x);
            t.z.swap(p, rank_x);
            t.sign.swap(p, rank_x);
            for r in 0..t.n {
                if r != rank_x && get(&t.x[r], q) {
                    t.rowsum(r, rank_x);
                }
            }
            rank_x += 1;
        }
        // Z-only rows: constraint z·x = sign
        let mut rows: Vec<(Vec<u64>, bool)> = (rank_x..t.n).map(|r| (t.z[r].clone(), t.sign[r])).collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for q in 0..t.n {
            let Some(p) = (rank..rows.len()).find(|&r| get(&rows[r].0, q)) else { continue };
            rows.swap(p, rank);
            let (pivot_row, pivot_sign) = rows[rank].clone();
            for (r, (row, s)) in rows.iter_mut().enumerate() {
                if r != rank && get(row, q) {
                    for (a, b) in row.iter_mut().zip(&pivot_row) {
                        *a ^= b;
                    }
                    *s ^= pivot_sign;
                }
            }
            pivots.push(q);
            rank += 1;
        }
        rows.truncate(rank);
        let mut free = BitString::from_ones(t.n, 0..t.n);
        for &p in &pivots {
            free.set(p, false);
        }
        let constraints = rows
            .into_iter()
            .zip(pivots)
            .map(|((row, sign), pivot)| {
                let mut mask = BitString::from_ones(t.n, (0..t.n).filter(|&q| get(&row, q)));
                mask.set(pivot, false);
                Constraint { pivot, mask, sign }
            })
            .collect();
        OutcomeSpace { n: t.n, free, constraints }
    }
}

#[derive(Clone, Debug)]
struct Constraint {
    pivot: usize,
    /// Free-variable support of the row (pivot excluded).
    mask: BitString,
    sign: bool,
}

/// Outcomes `x` with `x_pivot = sign ⊕ (mask · x)` for each constraint, free bits uniform.
#[derive(Clone, Debug)]
pub struct OutcomeSpace {
    n: usize,
    free: BitString,
    constraints: Vec<Constraint>,
}

impl OutcomeSpace {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of uniformly random bits per outcome.
    pub fn dimension(&self) -> usize {
        self.free.count_ones()
    }

    pub fn sample(&self, rng: &mut impl Rng) -> BitString {
        let mut x = BitString::zeros(self.n);
        let words: Vec<u64> = self.free.words().iter().map(|&m| rng.random::<u64>() & m).collect();
        for q in self.free.ones() {
            if words[q >> 6] >> (q & 63) & 1 == 1 {
                x.set(q, true);
            }
        }
        self.complete(x)
    }

    fn complete(&self, mut x: BitString) -> BitString {
        for c in &self.constraints {
            x.set(c.pivot, c.sign ^ x.masked_parity(&c.mask));
        }
        x
    }

    /// Every outcome in the support; only for small dimensions.
    pub fn enumerate(&self) -> Vec<BitString> {
        let free: Vec<usize> = self.free.ones().collect();
        assert!(free.len() <= 24, "outcome space too large to enumerate");
        (0..1u64 << free.len())
            .map(|m| {
                let x = BitString::from_ones(
                    self.n,
                    free.iter().enumerate().filter(|(j, _)| m >> j & 1 == 1).map(|p| *p.1),
                );
                self.complete(x)
            })
            .collect()
    }
}
