//! Generalized graph colorings where every color class only has to keep a
//! graph parameter `f` below a threshold `p`.
//!
//! The crate is organised the way the computations layer on top of each
//! other:
//!
//! * [`graph`]: bitset-backed simple graphs, ingestion (edge lists, graph6)
//!   and elementary invariants.
//! * [`parameters`]: the pluggable [`GraphParameter`] trait and exact
//!   evaluators for maximum degree, component order, maximum average degree,
//!   fans and the chromatic number.
//! * [`solvers`]: `(f,p)`-proper colorings, list colorings, choosability,
//!   islands and the island coloring number `col_{f,p}`, all with
//!   certificates.
//! * [`constructions`]: explicit graph families, the path-power block
//!   coloring and the randomized adversarial list pipeline.
//! * [`report`] and [`suites`]: JSON reports, certificate re-verification
//!   and the reproducible check suites driven by the `gencol` binary.

pub mod constructions;
pub mod error;
pub mod flow;
pub mod graph;
pub mod parameters;
pub mod report;
pub mod rng;
pub mod solvers;
pub mod suites;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use parameters::{Builtin, GraphParameter, ParamFlags, ParamValue};
pub use solvers::{Coloring, ListAssignment};

/// Exact rational used for densities and average degrees.
pub type Rational = num::rational::Ratio<i64>;

/// Arbitrary precision rational, for products whose terms grow with the input.
pub type BigRational = num::BigRational;

/// A color is a small nonnegative integer.
pub type Color = usize;
