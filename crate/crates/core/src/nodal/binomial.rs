use std::fmt;

use num_traits::Signed;

use super::FamilyError;
use crate::kernel::{integer, Polynomial, VarName};
use crate::tower::{chart_frame, ChartString, StepKind};

/// The node binomial `B(chart) = alpha * n * r + beta * d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NodeBinomial {
    pub chart: ChartString,
    pub alpha: u64,
    pub beta: u64,
}

impl NodeBinomial {
    /// Multiplicity of the retained twig at the node.
    pub fn retained_multiplicity(&self) -> u64 {
        self.alpha
    }

    /// Multiplicity of the emergent twig at the node.
    pub fn emergent_multiplicity(&self) -> u64 {
        self.alpha + self.beta
    }

    /// The binomial as a polynomial in the chart's coordinates.
    pub fn polynomial(&self) -> Polynomial {
        let frame = chart_frame(&self.chart);
        let nr = Polynomial::var(frame.new_coord) * Polynomial::var(frame.retained_coord);
        let mut p = nr.scale(&integer(self.alpha as i64));
        if let Some(d) = frame.deactivated_coord {
            p = p + Polynomial::var(d).scale(&integer(self.beta as i64));
        }
        p
    }
}

impl fmt::Display for NodeBinomial {
    /// Compact form, e.g. `3x1(212)x2(21)+2x1(2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.polynomial().to_compact_string())
    }
}

/// `B(chart)` by the `(alpha, beta)` recursion starting from `(1, 0)`:
/// a regular step gives `(alpha, alpha + beta)`, a critical step
/// `(alpha + beta, alpha)`.
///
/// Panics if the coefficients overflow `u64` (charts longer than ~90).
pub fn node_binomial(chart: &ChartString) -> NodeBinomial {
    let (mut alpha, mut beta) = (1u64, 0u64);
    for len in 1..=chart.len() {
        let sum = alpha.checked_add(beta).expect("node binomial overflow");
        (alpha, beta) = match crate::tower::step_kind(&chart.prefix(len)).unwrap() {
            StepKind::Regular => (alpha, sum),
            StepKind::Critical => (sum, alpha),
        };
    }
    NodeBinomial {
        chart: chart.clone(),
        alpha,
        beta,
    }
}

/// Generators of the ideal of the prolonged family in one chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    pub chart: ChartString,
    /// `B(∅) - t, B(p1), B(p1p2), ..., B(p1...pk)`.
    pub generators: Vec<Polynomial>,
}

pub fn ideal_generators(chart: &ChartString) -> IdealPresentation {
    let generators = chart
        .prefixes()
        .map(|prefix| {
            let b = node_binomial(&prefix).polynomial();
            if prefix.is_empty() {
                b - Polynomial::var(VarName::T)
            } else {
                b
            }
        })
        .collect();
    IdealPresentation {
        chart: chart.clone(),
        generators,
    }
}

/// One implicit differentiation of `equation` (in the parent chart's
/// coordinates) with respect to the child's retained coordinate.
///
/// The chain rule needs `dv/dw` for each variable `v`: the retained
/// coordinate maps to 1, the other parent active coordinate to the child's
/// new coordinate, and the parent's deactivated coordinate `d` to
/// `n_parent * d(r_parent)/dw`, since `dd/dr = n` one level down.
fn differentiate_into(
    equation: &Polynomial,
    parent: &ChartString,
    child: &ChartString,
) -> Result<Polynomial, FamilyError> {
    let up = chart_frame(parent);
    let down = chart_frame(child);
    let w = &down.retained_coord;
    let rate = |v: &VarName| -> Option<Polynomial> {
        if v == w {
            Some(Polynomial::one())
        } else if *v == up.new_coord || *v == up.retained_coord {
            Some(Polynomial::var(down.new_coord.clone()))
        } else {
            None
        }
    };
    let mut out = Polynomial::zero();
    for v in equation.variables() {
        let dv = if Some(&v) == up.deactivated_coord.as_ref() {
            let dr = rate(&up.retained_coord).unwrap();
            Polynomial::var(up.new_coord.clone()) * dr
        } else {
            rate(&v).ok_or_else(|| FamilyError::UnexpectedVariable {
                chart: child.to_string(),
                var: v.to_string(),
            })?
        };
        out = out + equation.derivative(&v) * dv;
    }
    Ok(out)
}

/// Re-derive `B(∅), B(p1), ..., B(chart)` by repeated implicit
/// differentiation, and check each against [`node_binomial`] up to a
/// positive constant factor.
pub fn binomials_by_differentiation(chart: &ChartString) -> Result<Vec<Polynomial>, FamilyError> {
    let mut current = Polynomial::var(VarName::x1()) * Polynomial::var(VarName::x2());
    let mut out = vec![current.clone()];
    for len in 1..=chart.len() {
        let child = chart.prefix(len);
        current = differentiate_into(&current, &chart.prefix(len - 1), &child)?;
        let expected = node_binomial(&child).polynomial();
        if !same_up_to_positive_factor(&current, &expected) {
            return Err(FamilyError::MismatchWithRecursion {
                chart: child.to_string(),
                recursion: expected.to_compact_string(),
                differentiation: current.to_compact_string(),
            });
        }
        out.push(current.clone());
    }
    Ok(out)
}

/// `a = c * b` for some positive rational `c`.
fn same_up_to_positive_factor(a: &Polynomial, b: &Polynomial) -> bool {
    a.primitive_part() == b.primitive_part() && (a.content() / b.content()).is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::testing::p;

    fn cs(s: &str) -> ChartString {
        s.parse().unwrap()
    }

    #[test]
    fn binomials_up_to_level_three() {
        assert_eq!(node_binomial(&cs("212")).to_string(), "3x1(212)x2(21)+2x1(2)");
        assert_eq!(node_binomial(&cs("")).to_string(), "x1x2");
        assert_eq!(node_binomial(&cs("111")).to_string(), "x1x2(111)+3x2(11)");
    }

    #[test]
    fn generator_stacks() {
        let text = |c: &str| -> Vec<String> {
            ideal_generators(&cs(c))
                .generators
                .iter()
                .map(|g| g.to_compact_string())
                .collect()
        };
        assert_eq!(
            text("212"),
            ["x1x2-t", "x1(2)x2+x1", "2x1(2)x2(21)+x2", "3x1(212)x2(21)+2x1(2)"]
        );
        assert_eq!(text(""), ["x1x2-t"]);
        assert_eq!(text("11"), ["x1x2-t", "x1x2(1)+x2", "x1x2(11)+2x2(1)"]);
    }

    #[test]
    fn differentiation_route() {
        let b = binomials_by_differentiation(&cs("21")).unwrap();
        assert_eq!(b[2], p("2*x1(2)*x2(21) + x2"));
        let b = binomials_by_differentiation(&cs("1")).unwrap();
        assert_eq!(b[1], p("x1*x2(1) + x2"));
        for c in ChartString::all_of_length(3) {
            let routes = binomials_by_differentiation(&c).unwrap();
            assert_eq!(routes.last().unwrap().primitive_part(), node_binomial(&c).polynomial().primitive_part());
        }
    }
}
