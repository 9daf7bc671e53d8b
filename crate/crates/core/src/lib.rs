//! Graph energy and energy lower bounds for small simple graphs.
//!
//! The energy of a graph is the sum of the absolute values of its adjacency
//! eigenvalues. For a non-singular graph (non-zero determinant) on `n >= 5`
//! vertices with average degree `d`, the energy is conjectured to be at least
//! `n - 1 + d`. This crate computes energies and exact determinants, the
//! lower bounds and sufficient conditions that certify the inequality for
//! particular graphs, and checks it exhaustively over every graph of a given
//! order.
//!
//! * [`graph`]: adjacency-row graphs, graph6, chromatic number, planarity.
//! * [`spectra`]: eigenvalues, energy, exact determinant, characteristic
//!   polynomial.
//! * [`bounds`]: bound formulas, sufficient conditions, verdicts,
//!   [`bounds::BoundReport`] and the coverage classifier.
//! * [`enumerate`]: isomorph-free generation, canonical forms, corpus
//!   ingestion and parallel scans.
//! * [`verify`]: the batch property suite.
//! * [`cli`]: the `graph-energy` command-line frontend.
//!
//! ```
//! use graph_energy::graph::from_graph6;
//! use graph_energy::bounds::{BoundReport, Verdict};
//!
//! let k4 = from_graph6("C~").unwrap();
//! let r = BoundReport::from_graph(&k4).unwrap();
//! assert!((r.energy() - 6.0).abs() < 1e-9);
//! assert_eq!(r.det.to_string(), "-3");
//! assert_eq!(r.conjecture2, Verdict::Pass);
//! ```

// Negated float comparisons reject NaN along with out-of-range values.
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub mod bounds;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
