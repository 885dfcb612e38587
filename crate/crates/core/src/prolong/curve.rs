use std::collections::BTreeMap;

use super::ProlongError;
use crate::kernel::{KernelError, Polynomial, TruncatedSeries, VarName};
use crate::parse::CurveSpec;
use crate::tower::{chart_coordinates, chart_frame, child_chart, ChartString, StepKind, Symbol};

/// A parametrized curve germ in one chart: one truncated series in `s` per
/// chart coordinate, in [`chart_coordinates`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametricCurve {
    chart: ChartString,
    coords: Vec<TruncatedSeries>,
}

impl ParametricCurve {
    pub fn new(chart: ChartString, coords: Vec<TruncatedSeries>) -> Result<Self, ProlongError> {
        let expected = chart.len() + 2;
        if coords.len() != expected {
            return Err(ProlongError::WrongCoordinateCount {
                chart: chart.to_string(),
                expected,
                got: coords.len(),
            });
        }
        Ok(ParametricCurve { chart, coords })
    }

    /// Expand a parsed curve spec to `order` terms.
    pub fn from_spec(spec: &CurveSpec, order: usize) -> Result<Self, ProlongError> {
        let coords = spec
            .coordinates
            .iter()
            .map(|(v, p)| {
                TruncatedSeries::from_polynomial(p, order)
                    .ok_or_else(|| ProlongError::NotASeries { coord: v.to_string() })
            })
            .collect::<Result<_, _>>()?;
        ParametricCurve::new(spec.chart.clone(), coords)
    }

    pub fn chart(&self) -> &ChartString {
        &self.chart
    }

    pub fn coords(&self) -> &[TruncatedSeries] {
        &self.coords
    }

    /// `(name, series)` pairs in chart order.
    pub fn named_coords(&self) -> impl Iterator<Item = (VarName, &TruncatedSeries)> {
        chart_coordinates(&self.chart).into_iter().zip(&self.coords)
    }

    pub fn coordinate(&self, v: &VarName) -> Option<&TruncatedSeries> {
        self.named_coords().find(|(w, _)| w == v).map(|(_, s)| s)
    }

    /// Image under `levels` projections.
    pub fn project(&self, levels: usize) -> Result<ParametricCurve, ProlongError> {
        let chart = self.chart.project(levels)?;
        let keep = chart.len() + 2;
        Ok(ParametricCurve {
            chart,
            coords: self.coords[..keep].to_vec(),
        })
    }
}

/// One lift: the chart reached and its step kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftStep {
    pub chart: ChartString,
    pub kind: StepKind,
    /// True when the new coordinate is `dn/dr`, false for `dr/dn`.
    pub regular_choice: bool,
    /// The coordinate introduced by the lift.
    pub new_coord: VarName,
}

/// Lift a curve one level.
///
/// With `v_n = val(dn/ds)` and `v_r = val(dr/ds)` the new coordinate is
/// `dn/dr` when `v_r <= v_n` (ties go to the regular choice) and `dr/dn`
/// otherwise. A series vanishing to its known order only gives a lower
/// bound on its valuation; the choice is made only when the bounds decide it.
pub fn lift_once(curve: &ParametricCurve) -> Result<(ParametricCurve, LiftStep), ProlongError> {
    let chart = &curve.chart;
    let frame = chart_frame(chart);
    let series = |v: &VarName| curve.coordinate(v).cloned().unwrap();
    let dn = series(&frame.new_coord).derivative();
    let dr = series(&frame.retained_coord).derivative();
    let exhausted = || ProlongError::OrderExhausted {
        chart: chart.chart_label(),
    };
    let regular = match (dr.valuation(), dn.valuation()) {
        (Some(vr), Some(vn)) => vr <= vn,
        (Some(vr), None) if vr <= dn.order() => true,
        (None, Some(vn)) if vn < dr.order() => false,
        (None, None) if dn.order() > 0 && dr.order() > 0 => {
            return Err(ProlongError::BothDerivativesZero {
                chart: chart.chart_label(),
            })
        }
        _ => return Err(exhausted()),
    };
    let quotient = if regular {
        dn.checked_div(&dr)
    } else {
        dr.checked_div(&dn)
    };
    let new_series = quotient.map_err(|e| match e {
        KernelError::DivisionOrderLoss => exhausted(),
        other => ProlongError::Kernel(other),
    })?;
    let q = match chart.last() {
        None if regular => Symbol::One,
        None => Symbol::Two,
        Some(last) if regular => last,
        Some(last) => last.opposite(),
    };
    let (child, kind) = child_chart(chart, q);
    let new_coord = chart_frame(&child).new_coord;
    let mut coords = curve.coords.clone();
    coords.push(new_series);
    Ok((
        ParametricCurve {
            chart: child.clone(),
            coords,
        },
        LiftStep {
            chart: child,
            kind,
            regular_choice: regular,
            new_coord,
        },
    ))
}

/// A curve lifted through several levels, with the step taken at each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prolongation {
    pub curve: ParametricCurve,
    pub steps: Vec<LiftStep>,
}

pub fn prolong(curve: &ParametricCurve, levels: usize) -> Result<Prolongation, ProlongError> {
    let mut current = curve.clone();
    let mut steps = Vec::with_capacity(levels);
    for _ in 0..levels {
        let (next, step) = lift_once(&current)?;
        current = next;
        steps.push(step);
    }
    Ok(Prolongation {
        curve: current,
        steps,
    })
}

/// Truncation order used when none is given: `2 * levels + 4`.
pub fn default_truncation_order(levels: usize) -> usize {
    2 * levels + 4
}

/// Do `a` and `b` agree once every coordinate `v` of `a` is replaced by
/// `dictionary[v]` evaluated on `b`? The parametrizations are matched
/// as given, with no reparametrization.
pub fn check_identification(
    a: &ParametricCurve,
    b: &ParametricCurve,
    dictionary: &BTreeMap<VarName, Polynomial>,
) -> Result<bool, ProlongError> {
    let order = b.coords.iter().map(TruncatedSeries::order).max().unwrap_or(0);
    let mut agree = true;
    for (v, series) in a.named_coords() {
        let image = dictionary
            .get(&v)
            .ok_or_else(|| ProlongError::MissingDictionaryEntry { coord: v.to_string() })?;
        let mut unknown = None;
        let value = TruncatedSeries::evaluate(image, order, |w| {
            let s = b.coordinate(w).cloned();
            if s.is_none() {
                unknown = Some(w.to_string());
            }
            s
        });
        let value = value.ok_or_else(|| ProlongError::UnknownCoordinate {
            coord: unknown.unwrap_or_default(),
            chart: b.chart.to_string(),
        })?;
        if value.order().min(series.order()) == 0 {
            return Err(ProlongError::TruncationTooShort { coord: v.to_string() });
        }
        agree &= value.agrees_with(series);
    }
    Ok(agree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::testing::p;
    use crate::kernel::{rational, Rational};
    use crate::parse::parse_curve_spec;

    fn curve(src: &str, order: usize) -> ParametricCurve {
        ParametricCurve::from_spec(&parse_curve_spec(src).unwrap(), order).unwrap()
    }

    fn poly(s: &TruncatedSeries) -> Polynomial {
        s.to_polynomial()
    }

    #[test]
    fn cusp_first_lift() {
        let c = curve("x1 = s^2; x2 = s^3", 6);
        let (lifted, step) = lift_once(&c).unwrap();
        assert_eq!(lifted.chart(), &"1".parse::<ChartString>().unwrap());
        assert_eq!(step.kind, StepKind::Regular);
        assert!(step.regular_choice);
        assert_eq!(step.new_coord.to_string(), "x2(1)");
        assert_eq!(poly(&lifted.coords()[2]), p("(3/2)*s"));
        assert_eq!(lifted.coords()[2].order(), 4);
    }

    #[test]
    fn cusp_second_lift_is_critical() {
        let c = curve("x1 = s^2; x2 = s^3", 8);
        let out = prolong(&c, 2).unwrap();
        assert_eq!(out.curve.chart().to_string(), "12");
        assert_eq!(out.steps[1].kind, StepKind::Critical);
        assert_eq!(out.steps[1].new_coord.to_string(), "x1(12)");
        // d(s^2)/d((3/2) s) = 2s / (3/2)
        assert_eq!(poly(&out.curve.coords()[3]), p("(4/3)*s"));
    }

    #[test]
    fn line_lifts_to_zero() {
        let c = curve("x1 = s; x2 = 0", 8);
        let out = prolong(&c, 3).unwrap();
        assert_eq!(out.curve.chart().to_string(), "111");
        for s in &out.curve.coords()[2..] {
            assert_eq!(s.valuation(), None);
        }
    }

    #[test]
    fn vertical_curve_goes_critical() {
        let c = curve("chart = 1; x1 = 0; x2 = 0; x2(1) = s", 6);
        let (lifted, step) = lift_once(&c).unwrap();
        assert_eq!(lifted.chart().to_string(), "12");
        assert_eq!(step.kind, StepKind::Critical);
        assert_eq!(lifted.coords()[3].valuation(), None);
    }

    #[test]
    fn errors() {
        let c = curve("x1 = 1; x2 = 2", 6);
        assert!(matches!(lift_once(&c), Err(ProlongError::BothDerivativesZero { .. })));
        let short = ParametricCurve::new(
            ChartString::empty(),
            vec![TruncatedSeries::new(vec![]), TruncatedSeries::new(vec![])],
        )
        .unwrap();
        assert!(matches!(lift_once(&short), Err(ProlongError::OrderExhausted { .. })));
        let deep = curve("x1 = s^5; x2 = s^7", 4);
        assert!(lift_once(&deep).is_err());
        assert!(ParametricCurve::new(ChartString::empty(), vec![]).is_err());
    }

    #[test]
    fn identification_dictionary() {
        let a = prolong(&curve("x1 = s^2; x2 = s^3", 8), 1).unwrap().curve;
        let b = prolong(&curve("x1 = (3/2)*s; x2 = s^3", 8), 1).unwrap().curve;
        let dict: BTreeMap<VarName, Polynomial> = [
            ("x1", "(1/2)*x2(1)"),
            ("x2", "x2"),
            ("x2(1)", "x1"),
        ]
        .into_iter()
        .map(|(k, v)| (p(k).variables()[0].clone(), p(v)))
        .collect();
        assert!(check_identification(&a, &b, &dict).unwrap());
        let other = prolong(&curve("x1 = s; x2 = s^2", 8), 1).unwrap().curve;
        assert!(!check_identification(&a, &other, &dict).unwrap());

        let identity: BTreeMap<VarName, Polynomial> = a
            .named_coords()
            .map(|(v, _)| (v.clone(), Polynomial::var(v)))
            .collect();
        assert!(check_identification(&a, &a, &identity).unwrap());
        let mut partial = identity.clone();
        partial.remove(&VarName::x1());
        assert!(matches!(
            check_identification(&a, &a, &partial),
            Err(ProlongError::MissingDictionaryEntry { .. })
        ));
    }

    #[test]
    fn projection_recovers_curve() {
        let c = curve("x1 = s + s^2; x2 = 3*s^2 - s^4", 7);
        let lifted = prolong(&c, 1).unwrap().curve;
        assert_eq!(lifted.project(1).unwrap(), c);
        let expected: Rational = rational(6, 1);
        assert_eq!(lifted.coords()[2].coefficient(1), Some(&expected));
    }
}
