//! Lifting parametrized curves through the tower, and the implicit
//! differentiation system of a plane curve `f(x, y) = 0`.
//!
//! Jet variables `y', y'', ...` are kept distinct from tower coordinates;
//! [`ImplicitSystem::in_regular_chart`] renames `y^(j)` to `x2(1^j)`.

mod curve;
mod implicit;

use thiserror::Error;

use crate::kernel::KernelError;
use crate::tower::TowerError;

pub use curve::{
    check_identification, default_truncation_order, lift_once, prolong, LiftStep,
    ParametricCurve, Prolongation,
};
pub use implicit::{implicit_system, jet_coordinate, total_derivative, ImplicitSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProlongError {
    #[error("truncation order too short to lift the curve in {chart}")]
    OrderExhausted { chart: String },
    #[error("both active coordinates are constant to known order in {chart}; no tangent line")]
    BothDerivativesZero { chart: String },
    #[error("chart {chart} has {expected} coordinates, got {got}")]
    WrongCoordinateCount {
        chart: String,
        expected: usize,
        got: usize,
    },
    #[error("{coord} is not a polynomial in s")]
    NotASeries { coord: String },
    #[error("no dictionary entry for {coord}")]
    MissingDictionaryEntry { coord: String },
    #[error("dictionary uses {coord}, which is not a coordinate of chart {chart}")]
    UnknownCoordinate { coord: String, chart: String },
    #[error("no coefficient of {coord} is known on both sides")]
    TruncationTooShort { coord: String },
    #[error(transparent)]
    Tower(#[from] TowerError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}
