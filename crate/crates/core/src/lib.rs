//! Exact computations for the prolongation of the nodal family
//! `x1 * x2 = t` into the monster (Semple) tower.
//!
//! - [`kernel`]: rationals, sparse polynomials, truncated power series.
//! - [`tower`]: chart strings, chart frames, points and transitions.
//! - [`nodal`]: node binomials, ideal generators, the twig chain,
//!   multiplicities, and the flat-limit check.
//! - [`strata`]: code words, intersection loci, node and twig words.
//! - [`prolong`]: lifting parametrized curves and implicit differentiation.
//! - [`parse`]: polynomial expressions and curve-spec files.

pub mod kernel;
pub mod nodal;
pub mod parse;
pub mod prolong;
pub mod strata;
pub mod tower;

pub use kernel::{Polynomial, Rational, TruncatedSeries, VarName};
pub use tower::{ChartString, StepKind, Symbol};
