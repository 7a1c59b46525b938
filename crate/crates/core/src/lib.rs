// SPDX-License-Identifier: Apache-2.0

//! Benchmarking multipartite entanglement of graph states on hardware
//! coupling maps.
//!
//! The crate prepares graph states on a coupling graph, samples them in the
//! two-setting coloring scheme (one color class in X, the rest in Z), and
//! evaluates stabilizer-based witnesses on the resulting counts:
//!
//! - [`graph`], [`enumerate`]: coupling maps, colorings, partitions, induced
//!   paths and unit cells.
//! - [`sim`]: stabilizer-tableau sampling with white, gate and readout noise.
//! - [`dense`]: a small dense-matrix oracle for exact checks.
//! - [`counts`], [`distribution`]: counts tables, distributions and readout
//!   mitigation.
//! - [`witness`], [`tolerance`]: witness values and white-noise tolerances.
//! - [`analysis`], [`pipeline`], [`dot`]: device-wide analyses, bootstrap
//!   intervals, reports and Graphviz export.
//!
//! Every capability has a runnable program under `examples/`, for instance
//! `cargo run --release --example pipeline`.

pub mod analysis;
pub mod bits;
pub mod counts;
pub mod dense;
pub mod distribution;
pub mod dot;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod pauli;
pub mod pipeline;
pub mod seed;
pub mod sim;
pub mod tolerance;
pub mod witness;

pub use bits::BitString;
pub use counts::CountsTable;
pub use distribution::{CalibrationSet, Distribution, QubitCalibration};
pub use error::{Error, Result};
pub use graph::{build_heavy_hex, two_color, Graph, Partition, SubgraphRef, VertexColoring};
pub use pauli::PauliString;
pub use pipeline::{run_pipeline, BenchReport, RunConfig};
pub use sim::{sample_counts, NoiseConfig};
pub use witness::{WitnessInputs, WitnessValue};
