//! Exact-arithmetic foundation: rationals, sparse polynomials over named
//! variables, truncated power series, and the one linear elimination step
//! the flat-limit computation needs.

mod poly;
mod series;
mod var;

pub use poly::{Monomial, Polynomial};
pub use series::TruncatedSeries;
pub use var::{Coord, VarName};

use num_traits::Zero;
use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("relation has degree {degree} in {var}, expected 1")]
    NotLinear { var: String, degree: u32 },
    #[error("coefficient of {var} is {coefficient}, not a nonzero constant")]
    NonConstantCoefficient { var: String, coefficient: String },
    #[error("series division leaves no guaranteed coefficients")]
    DivisionOrderLoss,
    #[error("division by a series that vanishes to its known order")]
    ZeroDivisor,
    #[error("quotient is not a power series: divisor valuation {divisor} exceeds dividend valuation {dividend}")]
    NegativeValuation { dividend: usize, divisor: usize },
}

/// Solve `relation = 0` for `target` and substitute the solution into `p`.
///
/// The relation must be `c * target + rest` with `c` a nonzero rational and
/// `rest` free of `target`.
pub fn solve_linear_and_eliminate(
    relation: &Polynomial,
    target: &VarName,
    p: &Polynomial,
) -> Result<Polynomial, KernelError> {
    let (lead, rest) = relation.linear_split(target)?;
    let c = lead.constant_term();
    if lead.num_terms() != 1 || c.is_zero() {
        return Err(KernelError::NonConstantCoefficient {
            var: target.to_string(),
            coefficient: lead.to_string(),
        });
    }
    let solved = rest.scale(&(-c.recip()));
    Ok(p.substitute(target, &solved))
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[cfg(test)]
pub(crate) mod testing {
    use super::*;

    pub fn p(s: &str) -> Polynomial {
        crate::parse::parse_polynomial(s).unwrap()
    }

    pub fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }
}
