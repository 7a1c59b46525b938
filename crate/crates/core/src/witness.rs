// SPDX-License-Identifier: Apache-2.0

//! Entanglement witnesses evaluated from measured outcome distributions.
//!
//! Every witness reduces to stabilizer projector expectations
//! `⟨P(U,G)⟩ = Σ_x q(x) ∏_{i∈U} (1 + ε_i(x))/2`, where `ε_i(x) = ±1` is the
//! parity of outcome `x` on the support of `S_i`. A cell `U` is evaluated in
//! the setting that measures its color class in X.

use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::distribution::{mitigate, mitigated_observable, CalibrationSet, Distribution, DEFAULT_MITIGATION_LIMIT};
use crate::error::{Error, Result};
use crate::graph::{Graph, Partition, SubgraphRef, VertexColoring};
use crate::pauli::PauliString;

/// Consecutive path vertices grouped together by the refined coloring witness.
pub const REFINED_GROUP: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    Bipartite,
    Ssw,
    Cbw,
    CbwRefined,
    GenericPartition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessSubject {
    Subgraph(SubgraphRef),
    Edge([usize; 2]),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessValue {
    pub value: f64,
    pub kind: WitnessKind,
    pub subject: WitnessSubject,
    pub qrem_applied: bool,
    /// Projector expectations that exceeded 1 and were capped.
    pub capped_cells: usize,
}

impl WitnessValue {
    /// A negative value certifies the entanglement the witness targets.
    pub fn is_negative(&self) -> bool {
        self.value < 0.0
    }
}

/// Measured data and readout calibration shared by all evaluations.
#[derive(Clone, Copy, Debug)]
pub struct WitnessInputs<'a> {
    pub graph: &'a Graph,
    pub coloring: &'a VertexColoring,
    /// One distribution per color; entry `c` measured color `c` in X.
    pub distributions: &'a [Distribution],
    pub calibration: Option<&'a CalibrationSet>,
    pub mitigation_limit: usize,
}

impl<'a> WitnessInputs<'a> {
    pub fn new(graph: &'a Graph, coloring: &'a VertexColoring, distributions: &'a [Distribution]) -> Self {
        Self { graph, coloring, distributions, calibration: None, mitigation_limit: DEFAULT_MITIGATION_LIMIT }
    }

    pub fn with_calibration(mut self, calibration: &'a CalibrationSet) -> Self {
        self.calibration = Some(calibration);
        self
    }

    pub fn with_mitigation_limit(mut self, limit: usize) -> Self {
        self.mitigation_limit = limit;
        self
    }

    pub fn distribution(&self, color: usize) -> Result<&'a Distribution> {
        let d = self.distributions.get(color).ok_or(Error::MissingDistribution(color))?;
        if d.len() != self.graph.n() {
            return Err(Error::InvalidArgument(format!(
                "distribution for setting {color} has {} bits, graph has {} vertices",
                d.len(),
                self.graph.n()
            )));
        }
        Ok(d)
    }

    fn calibration(&self) -> Result<&'a CalibrationSet> {
        self.calibration
            .ok_or_else(|| Error::InvalidArgument("readout mitigation requested without calibration data".into()))
    }

    fn cell_color(&self, cell: &[usize]) -> Result<usize> {
        let c = self.coloring.color(cell[0]);
        if let Some(&v) = cell.iter().find(|&&v| self.coloring.color(v) != c) {
            return Err(Error::InvalidArgument(format!(
                "cell {cell:?} mixes colors {c} and {}",
                self.coloring.color(v)
            )));
        }
        Ok(c)
    }
}

/// Support of `S_i` as an outcome mask: vertex `i` and its neighbors.
pub fn stabilizer_mask(g: &Graph, i: usize) -> BitString {
    BitString::from_ones(g.n(), std::iter::once(i).chain(g.neighbors(i).iter().copied()))
}

/// `Σ_x q(x) ∏_l (1 + ε_l(x))/2`: the weight of outcomes with even parity on
/// every mask. No masks gives 1.
pub fn projector_expectation(d: &Distribution, masks: &[BitString]) -> Result<f64> {
    if let Some(m) = masks.iter().find(|m| m.len() != d.len()) {
        return Err(Error::InvalidArgument(format!(
            "stabilizer mask over {} bits applied to outcomes of {} bits",
            m.len(),
            d.len()
        )));
    }
    if masks.is_empty() {
        return Ok(1.0);
    }
    Ok(d.entries().iter().filter(|(x, _)| masks.iter().all(|m| !x.masked_parity(m))).map(|(_, w)| w).sum())
}

/// A cell after readout mitigation on its local region.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedCell {
    pub cell: Vec<usize>,
    /// Sorted `cell ∪ N(cell)`; bit `j` of the reduced outcomes is vertex `positions[j]`.
    pub positions: Vec<usize>,
    pub stabilizers: Vec<PauliString>,
    pub masks: Vec<BitString>,
    pub distribution: Distribution,
}

/// Restricts each nonempty cell's distribution to `cell ∪ N(cell)`, mitigates
/// it with the calibration at those qubits and reduces the cell stabilizers.
pub fn qrem_reduce(inputs: &WitnessInputs<'_>, partition: &Partition) -> Result<Vec<ReducedCell>> {
    let cal = inputs.calibration()?;
    let g = inputs.graph;
    partition
        .cells()
        .iter()
        .map(|cell| {
            let color = inputs.cell_color(cell)?;
            let mut positions: Vec<usize> = g.neighborhood(cell).into_iter().chain(cell.iter().copied()).collect();
            positions.sort_unstable();
            if positions.len() > inputs.mitigation_limit {
                return Err(Error::MitigationLimit {
                    size: positions.len(),
                    limit: inputs.mitigation_limit,
                    context: format!("cell {cell:?}"),
                });
            }
            let marginal = inputs.distribution(color)?.marginal(&positions)?;
            let distribution = mitigate(&marginal, &cal.at(&positions)?, inputs.mitigation_limit)
                .map_err(|e| e.context(format!("mitigating cell {cell:?}")))?;
            let rotated = |p: usize| inputs.coloring.color(positions[p]) == color;
            let mut stabilizers = Vec::with_capacity(cell.len());
            let mut masks = Vec::with_capacity(cell.len());
            for &i in cell {
                let s = PauliString::stabilizer(g, i)?.reduce(&positions)?;
                masks.push(s.diagonal_mask(positions.len(), rotated)?);
                stabilizers.push(s);
            }
            Ok(ReducedCell { cell: cell.clone(), positions, stabilizers, masks, distribution })
        })
        .collect()
}

/// Uncapped projector expectations for every nonempty cell, in cell order.
pub fn cell_projectors(inputs: &WitnessInputs<'_>, partition: &Partition, qrem: bool) -> Result<Vec<f64>> {
    if qrem {
        return qrem_reduce(inputs, partition)?
            .iter()
            .map(|r| projector_expectation(&r.distribution, &r.masks))
            .collect();
    }
    partition
        .cells()
        .iter()
        .map(|cell| {
            for &v in cell {
                inputs.graph.check_vertex(v)?;
            }
            let d = inputs.distribution(inputs.cell_color(cell)?)?;
            let masks: Vec<BitString> = cell.iter().map(|&i| stabilizer_mask(inputs.graph, i)).collect();
            projector_expectation(d, &masks)
        })
        .collect()
}

/// A cell projector written as a per-outcome function `h` of its setting's
/// raw outcomes, so that `⟨P⟩ = Σ_x q(x) h(x)`. With mitigation `h` folds the
/// inverse confusion matrices in, which keeps the estimate linear in the counts.
#[derive(Clone, Debug, PartialEq)]
pub enum CellObservable {
    Parity { masks: Vec<BitString> },
    Mitigated { positions: Vec<usize>, table: Vec<f64> },
}

impl CellObservable {
    pub fn value(&self, x: &BitString) -> f64 {
        match self {
            CellObservable::Parity { masks } => {
                if masks.iter().all(|m| !x.masked_parity(m)) {
                    1.0
                } else {
                    0.0
                }
            }
            CellObservable::Mitigated { positions, table } => table[x.select(positions).to_index() as usize],
        }
    }
}

/// The setting that measures `cell` and the observable whose mean is its projector.
pub fn cell_observable(inputs: &WitnessInputs<'_>, cell: &[usize], qrem: bool) -> Result<(usize, CellObservable)> {
    if cell.is_empty() {
        return Err(Error::InvalidArgument("cell observable of an empty cell".into()));
    }
    for &v in cell {
        inputs.graph.check_vertex(v)?;
    }
    let color = inputs.cell_color(cell)?;
    if !qrem {
        let masks = cell.iter().map(|&i| stabilizer_mask(inputs.graph, i)).collect();
        return Ok((color, CellObservable::Parity { masks }));
    }
    let cal = inputs.calibration()?;
    let g = inputs.graph;
    let mut positions: Vec<usize> = g.neighborhood(cell).into_iter().chain(cell.iter().copied()).collect();
    positions.sort_unstable();
    if positions.len() > inputs.mitigation_limit {
        return Err(Error::MitigationLimit {
            size: positions.len(),
            limit: inputs.mitigation_limit,
            context: format!("cell {cell:?}"),
        });
    }
    let masks: Vec<u64> = cell
        .iter()
        .map(|&i| {
            let mut m = 1u64 << positions.binary_search(&i).unwrap();
            for &j in g.neighbors(i) {
                m |= 1 << positions.binary_search(&j).unwrap();
            }
            m
        })
        .collect();
    let indicator: Vec<f64> = (0..1u64 << positions.len())
        .map(|y| if masks.iter().all(|m| (y & m).count_ones() % 2 == 0) { 1.0 } else { 0.0 })
        .collect();
    let table = mitigated_observable(&indicator, &cal.at(&positions)?, inputs.mitigation_limit)?;
    Ok((color, CellObservable::Mitigated { positions, table }))
}

/// `(k − 1/2) − Σ_l min(P_l, 1)`, empty cells contributing 1 each.
/// Returns the value and the number of caps that fired.
pub fn combine_projectors(k: usize, empty: usize, projectors: &[f64]) -> (f64, usize) {
    let mut sum = 0.0;
    let mut capped = 0;
    for &p in projectors {
        if p > 1.0 {
            capped += 1;
        }
        sum += p.min(1.0);
    }
    sum += empty as f64;
    (k as f64 - 0.5 - sum, capped)
}

fn partition_value(
    inputs: &WitnessInputs<'_>,
    partition: &Partition,
    qrem: bool,
    kind: WitnessKind,
    subject: SubgraphRef,
) -> Result<WitnessValue> {
    let projectors = cell_projectors(inputs, partition, qrem)?;
    let (value, capped_cells) = combine_projectors(partition.k(), partition.empty_cells(), &projectors);
    Ok(WitnessValue { value, kind, subject: WitnessSubject::Subgraph(subject), qrem_applied: qrem, capped_cells })
}

/// Witness for an arbitrary partition into monochromatic cells.
pub fn evaluate_witness(inputs: &WitnessInputs<'_>, partition: &Partition, qrem: bool) -> Result<WitnessValue> {
    partition_value(inputs, partition, qrem, WitnessKind::GenericPartition, SubgraphRef::generic(partition.support()))
}

/// `⟨S_i⟩ = 2 min(⟨P({i})⟩, 1) − 1` for every vertex, in vertex order.
pub fn stabilizer_expectations(inputs: &WitnessInputs<'_>, qrem: bool) -> Result<Vec<f64>> {
    (0..inputs.graph.n())
        .map(|i| {
            let p = cell_projectors(inputs, &Partition::singletons(&[i]), qrem)?[0];
            Ok(2.0 * p.min(1.0) - 1.0)
        })
        .collect()
}

fn expectation_at(stab: &[f64], v: usize) -> Result<f64> {
    stab.get(v).copied().ok_or(Error::MissingExpectation(v))
}

/// `(n′ − 1) − Σ_{l∈V′} ⟨S_l⟩`.
pub fn stabilizer_sum_witness(subgraph: &SubgraphRef, stab: &[f64]) -> Result<WitnessValue> {
    let mut sum = 0.0;
    for &v in &subgraph.vertices {
        sum += expectation_at(stab, v)?;
    }
    Ok(WitnessValue {
        value: (subgraph.len() as f64 - 1.0) - sum,
        kind: WitnessKind::Ssw,
        subject: WitnessSubject::Subgraph(subgraph.clone()),
        qrem_applied: false,
        capped_cells: 0,
    })
}

/// Coloring witness of `V′`: one cell per color class of the coloring.
pub fn coloring_witness(inputs: &WitnessInputs<'_>, subgraph: &SubgraphRef, qrem: bool) -> Result<WitnessValue> {
    let partition = Partition::by_color(&subgraph.sorted(), inputs.coloring);
    partition_value(inputs, &partition, qrem, WitnessKind::Cbw, subgraph.clone())
}

/// Groups of [`REFINED_GROUP`] consecutive vertices, each split by color.
pub fn refined_path_partition(vertices: &[usize], coloring: &VertexColoring) -> Partition {
    let mut cells = Vec::new();
    for group in vertices.chunks(REFINED_GROUP) {
        let mut split = vec![Vec::new(); coloring.k()];
        for &v in group {
            split[coloring.color(v)].push(v);
        }
        cells.extend(split.into_iter().filter(|c| !c.is_empty()));
    }
    Partition::new(vertices, cells).expect("groups partition the path")
}

/// Refined coloring witness of a path: the smaller of the two orientations.
pub fn refined_cbw_path(inputs: &WitnessInputs<'_>, path: &SubgraphRef, qrem: bool) -> Result<WitnessValue> {
    if path.len() < 2 {
        return Err(Error::InvalidArgument("refined witness needs a path of at least 2 vertices".into()));
    }
    path.validate(inputs.graph)?;
    let forward = refined_path_partition(&path.vertices, inputs.coloring);
    let reversed: Vec<usize> = path.vertices.iter().rev().copied().collect();
    let backward = refined_path_partition(&reversed, inputs.coloring);
    let a = partition_value(inputs, &forward, qrem, WitnessKind::CbwRefined, path.clone())?;
    let b = partition_value(inputs, &backward, qrem, WitnessKind::CbwRefined, path.clone())?;
    Ok(if b.value < a.value { b } else { a })
}

/// `1 − ⟨S_i⟩ − ⟨S_j⟩` for an edge `(i, j)`.
pub fn bipartite_witness(g: &Graph, edge: (usize, usize), stab: &[f64]) -> Result<WitnessValue> {
    let (i, j) = edge;
    g.check_vertex(i)?;
    g.check_vertex(j)?;
    if !g.has_edge(i, j) {
        return Err(Error::NotAnEdge(i, j));
    }
    Ok(WitnessValue {
        value: 1.0 - expectation_at(stab, i)? - expectation_at(stab, j)?,
        kind: WitnessKind::Bipartite,
        subject: WitnessSubject::Edge([i.min(j), i.max(j)]),
        qrem_applied: false,
        capped_cells: 0,
    })
}
