//! Certified large independent sets in graphs with no triangle sharing an
//! edge with a 4-cycle.
//!
//! For such a graph `G` and constants `a, b > 0` satisfying nine linear
//! conditions, `α(G) ≥ n − (a·n + b·m + b·λ(G))`, where `λ(G)` counts the
//! components that are a triangle or two triangles joined by an edge.
//! [`reduce`] turns the inductive argument behind that bound into an
//! algorithm and returns a [`Certificate`] that [`verify_certificate`] can
//! re-check from scratch.
//!
//! Exact arithmetic is generic over [`ExactScalar`]; [`Rational`] is the
//! default and [`BigRational`] is available when `i64` may overflow.

pub mod bounds;
pub mod cli;
pub mod constants;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod reducer;
pub mod scalar;
pub mod structure;

pub use bounds::{check_density, ratio_bound_for, DensityReport};
pub use constants::{check_constants, guarantee, optimize_for_density, ConstantsPair, ConstraintSystem};
pub use error::{Error, Result};
pub use gen::{cylinder_grid, figure1_graph, random_valid_graph, GenSpec};
pub use graph::{Deletion, Graph, VertexSet};
pub use oracle::{is_independent_set, max_independent_set_exact, OracleResult};
pub use reducer::{brooks_three_coloring, extend_local, reduce, verify_certificate, Certificate, ReductionStep, Rule};
pub use scalar::ExactScalar;
pub use structure::{
    difficult_components, edge_on_cycle, enumerate_triangles, find_forbidden, phi, DifficultReport,
    ForbiddenWitness, GraphClass,
};

/// Exact rationals over `i64`.
pub type Rational = num_rational::Ratio<i64>;

/// Arbitrary-precision rationals.
pub type BigRational = num_rational::BigRational;

/// Constants over [`Rational`].
pub type Constants = ConstantsPair<Rational>;
