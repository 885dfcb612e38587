use super::{ideal_generators, node_binomial, FamilyError};
use crate::kernel::{solve_linear_and_eliminate, Monomial, Polynomial, Rational, VarName};
use crate::tower::{chart_frame, ChartString};

/// The family near `N(chart)` after eliminating every inactive coordinate:
/// `unit * n^exp_new * r^exp_retained - t = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatLimit {
    pub chart: ChartString,
    pub unit: Rational,
    pub exp_new: u32,
    pub exp_retained: u32,
    pub equation: Polynomial,
}

/// Eliminate the deactivated coordinate of each prefix from `B(∅) - t`,
/// using the generator of that prefix, and check the two-term result
/// against the multiplicities `(alpha + beta, alpha)` of `B(chart)`.
pub fn verify_flat_limit(chart: &ChartString) -> Result<FlatLimit, FamilyError> {
    let gens = ideal_generators(chart).generators;
    let mut current = gens[0].clone();
    for (len, g) in gens.iter().enumerate().skip(1) {
        let d = chart_frame(&chart.prefix(len)).deactivated_coord.unwrap();
        current = solve_linear_and_eliminate(g, &d, &current)?;
    }
    let frame = chart_frame(chart);
    let fail = || FamilyError::EliminationFailed {
        chart: chart.to_string(),
        residual: current.to_string(),
    };
    let t_term = Monomial::var(VarName::T);
    if current.num_terms() != 2 || current.coefficient(&t_term) != -Rational::from_integer(1.into()) {
        return Err(fail());
    }
    let (m, unit) = current
        .terms()
        .find(|(m, _)| **m != t_term)
        .map(|(m, c)| (m.clone(), c.clone()))
        .unwrap();
    let exp_new = m.exponent(&frame.new_coord);
    let exp_retained = m.exponent(&frame.retained_coord);
    if m.degree() != exp_new + exp_retained {
        return Err(fail());
    }
    let b = node_binomial(chart);
    let expected = if chart.is_empty() {
        (1, 1)
    } else {
        (b.alpha as u32, (b.alpha + b.beta) as u32)
    };
    if (exp_new, exp_retained) != expected {
        return Err(fail());
    }
    Ok(FlatLimit {
        chart: chart.clone(),
        unit,
        exp_new,
        exp_retained,
        equation: current,
    })
}
