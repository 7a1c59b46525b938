// SPDX-License-Identifier: Apache-2.0

//! Per-setting measurement counts and their JSON document form.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::error::{Error, Result};

pub const COUNTS_SCHEMA_VERSION: u32 = 1;

/// Outcome histogram for one measurement setting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountsTable {
    /// Color index of the setting: that class is measured in X, the rest in Z.
    pub setting: usize,
    n: usize,
    shots: u64,
    counts: BTreeMap<BitString, u64>,
}

impl CountsTable {
    /// Validates uniform outcome length and that counts sum to `shots`.
    pub fn new(setting: usize, n: usize, counts: BTreeMap<BitString, u64>) -> Result<Self> {
        let mut shots = 0u64;
        for (b, &c) in &counts {
            if b.len() != n {
                return Err(Error::InvalidDistribution(format!(
                    "outcome {b} has length {} but the register has {n} qubits",
                    b.len()
                )));
            }
            shots += c;
        }
        let counts = counts.into_iter().filter(|&(_, c)| c > 0).collect();
        Ok(Self { setting, n, shots, counts })
    }

    pub fn from_outcomes(setting: usize, n: usize, outcomes: impl IntoIterator<Item = BitString>) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for o in outcomes {
            *counts.entry(o).or_insert(0) += 1;
        }
        Self::new(setting, n, counts)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shots(&self) -> u64 {
        self.shots
    }

    pub fn counts(&self) -> &BTreeMap<BitString, u64> {
        &self.counts
    }

    pub fn get(&self, outcome: &BitString) -> u64 {
        self.counts.get(outcome).copied().unwrap_or(0)
    }

    /// Merges another table of the same setting.
    pub fn merge(&mut self, other: &CountsTable) -> Result<()> {
        if other.setting != self.setting || other.n != self.n {
            return Err(Error::InvalidArgument("cannot merge counts of different settings".into()));
        }
        for (b, &c) in &other.counts {
            *self.counts.entry(b.clone()).or_insert(0) += c;
        }
        self.shots += other.shots;
        Ok(())
    }

    pub fn to_document(&self) -> CountsDocument {
        CountsDocument {
            schema_version: COUNTS_SCHEMA_VERSION,
            setting: self.setting,
            shots: self.shots,
            bit_order: BitOrder::VertexAscending,
            counts: self.counts.iter().map(|(b, &c)| (b.to_string(), c)).collect(),
        }
    }

    /// Parses a document, normalizing reversed bit order to vertex-ascending.
    pub fn from_document(doc: &CountsDocument) -> Result<Self> {
        let mut counts = BTreeMap::new();
        let mut n = None;
        for (s, &c) in &doc.counts {
            let mut b: BitString = s.parse()?;
            if doc.bit_order == BitOrder::Reversed {
                b = b.reversed();
            }
            match n {
                None => n = Some(b.len()),
                Some(len) if len != b.len() => {
                    return Err(Error::InvalidDistribution(format!(
                        "outcome {s:?} has length {} but earlier outcomes have {len}",
                        b.len()
                    )))
                }
                _ => {}
            }
            *counts.entry(b).or_insert(0) += c;
        }
        let table = Self::new(doc.setting, n.unwrap_or(0), counts)?;
        if table.shots != doc.shots {
            return Err(Error::InvalidDistribution(format!(
                "counts sum to {} but the document declares {} shots",
                table.shots, doc.shots
            )));
        }
        Ok(table)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_document(&serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_document())?)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BitOrder {
    /// Leftmost character is vertex 0.
    #[default]
    VertexAscending,
    /// Provider style: vertex 0 is the rightmost character.
    Reversed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsDocument {
    #[serde(default = "default_schema")]
    pub schema_version: u32,
    pub setting: usize,
    pub shots: u64,
    #[serde(default)]
    pub bit_order: BitOrder,
    pub counts: BTreeMap<String, u64>,
}

fn default_schema() -> u32 {
    COUNTS_SCHEMA_VERSION
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reversed_documents_are_normalized() {
        let doc = r#"{"setting": 1, "shots": 3, "bit_order": "reversed", "counts": {"001": 2, "110": 1}}"#;
        let t = CountsTable::from_json(doc).unwrap();
        assert_eq!(t.get(&"100".parse().unwrap()), 2);
        assert_eq!(t.get(&"011".parse().unwrap()), 1);
        assert_eq!(t.to_document().bit_order, BitOrder::VertexAscending);
    }

    #[test]
    fn rejects_inconsistent_documents() {
        let bad_total = r#"{"setting": 0, "shots": 4, "counts": {"01": 2, "10": 1}}"#;
        assert!(CountsTable::from_json(bad_total).is_err());
        let bad_len = r#"{"setting": 0, "shots": 3, "counts": {"01": 2, "1": 1}}"#;
        assert!(CountsTable::from_json(bad_len).is_err());
    }

    #[test]
    fn document_round_trip() {
        let t = CountsTable::from_outcomes(0, 2, ["00".parse().unwrap(), "11".parse().unwrap(), "11".parse().unwrap()])
            .unwrap();
        let back = CountsTable::from_json(&t.to_json().unwrap()).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.shots(), 3);
    }
}
