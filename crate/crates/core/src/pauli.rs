// SPDX-License-Identifier: Apache-2.0

//! Signless Pauli strings over indexed qubits.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pauli {
    X,
    Y,
    Z,
}

impl Pauli {
    fn has_x(self) -> bool {
        matches!(self, Pauli::X | Pauli::Y)
    }

    fn has_z(self) -> bool {
        matches!(self, Pauli::Z | Pauli::Y)
    }
}

/// Tensor product of single-qubit Paulis with sign +1; identity factors are implicit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PauliString {
    support: BTreeMap<usize, Pauli>,
}

impl PauliString {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (usize, Pauli)>) -> Self {
        Self { support: factors.into_iter().collect() }
    }

    /// The graph-state stabilizer `X_i` times `Z_j` for every neighbor `j` of `i`.
    pub fn stabilizer(g: &Graph, i: usize) -> Result<Self> {
        g.check_vertex(i)?;
        let mut support = BTreeMap::new();
        support.insert(i, Pauli::X);
        for &j in g.neighbors(i) {
            support.insert(j, Pauli::Z);
        }
        Ok(Self { support })
    }

    pub fn get(&self, q: usize) -> Option<Pauli> {
        self.support.get(&q).copied()
    }

    pub fn weight(&self) -> usize {
        self.support.len()
    }

    pub fn is_identity(&self) -> bool {
        self.support.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (usize, Pauli)> + '_ {
        self.support.iter().map(|(&q, &p)| (q, p))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.support.keys().copied()
    }

    /// Reindexes onto `positions`, so the qubit `positions[j]` becomes qubit `j`.
    pub fn reduce(&self, positions: &[usize]) -> Result<Self> {
        let mut support = BTreeMap::new();
        for (&q, &p) in &self.support {
            let j = positions.iter().position(|&x| x == q).ok_or_else(|| {
                Error::InvalidArgument(format!("qubit {q} of {self} is outside the positions {positions:?}"))
            })?;
            support.insert(j, p);
        }
        Ok(Self { support })
    }

    /// Keeps only the factors on qubits accepted by `keep`.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Self {
        Self { support: self.support.iter().filter(|(q, _)| keep(**q)).map(|(&q, &p)| (q, p)).collect() }
    }

    pub fn commutes_with(&self, other: &PauliString) -> bool {
        let mut anti = 0usize;
        for (q, &p) in &self.support {
            if let Some(&r) = other.support.get(q) {
                if p != r {
                    anti += 1;
                }
            }
        }
        anti.is_multiple_of(2)
    }

    /// Mask of the qubits on which the string acts as `Z` after a Hadamard on
    /// every qubit in `rotated`. Fails if any factor is not diagonal in that basis.
    pub fn diagonal_mask(&self, len: usize, rotated: impl Fn(usize) -> bool) -> Result<BitString> {
        let mut mask = BitString::zeros(len);
        for (&q, &p) in &self.support {
            if q >= len {
                return Err(Error::InvalidArgument(format!("{self} acts on qubit {q} beyond outcome length {len}")));
            }
            let diagonal = if rotated(q) { p == Pauli::X } else { p == Pauli::Z };
            if !diagonal {
                return Err(Error::InvalidArgument(format!(
                    "{self} is not diagonal in the measurement basis at qubit {q}"
                )));
            }
            mask.set(q, true);
        }
        Ok(mask)
    }

    /// Symplectic form: x bits and z bits over `n` qubits.
    pub fn symplectic(&self, n: usize) -> (BitString, BitString) {
        let mut x = BitString::zeros(n);
        let mut z = BitString::zeros(n);
        for (&q, &p) in &self.support {
            if p.has_x() {
                x.set(q, true);
            }
            if p.has_z() {
                z.set(q, true);
            }
        }
        (x, z)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return f.write_str("I");
        }
        for (q, p) in &self.support {
            write!(f, "{p:?}{q}")?;
        }
        Ok(())
    }
}
