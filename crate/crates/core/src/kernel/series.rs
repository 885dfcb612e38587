//! Power series in the curve parameter `s`, known up to a truncation order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{KernelError, Monomial, Polynomial, Rational, VarName};

/// `c_0 + c_1 s + ... + c_{order-1} s^{order-1} + O(s^order)`.
///
/// Coefficients at or beyond `order` are unknown, not zero. Every operation
/// returns the largest order it can guarantee.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Series with the given known coefficients; the order is their count.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order],
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// `c * s^power`.
    pub fn monomial(c: Rational, power: usize, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if power < order {
            s.coeffs[power] = c;
        }
        s
    }

    /// Expansion of a polynomial in `s`; `None` if another variable occurs.
    pub fn from_polynomial(p: &Polynomial, order: usize) -> Option<Self> {
        let mut s = TruncatedSeries::zero(order);
        for (m, c) in p.terms() {
            let e = match m.powers() {
                [] => 0,
                [(VarName::S, e)] => *e as usize,
                _ => return None,
            };
            if e < order {
                s.coeffs[e] += c;
            }
        }
        Some(s)
    }

    /// The known part as a polynomial in `s`.
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(self.coeffs.iter().enumerate().map(|(i, c)| {
            (
                Monomial::from_powers([(VarName::S, i as u32)]),
                c.clone(),
            )
        }))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> Option<&Rational> {
        self.coeffs.get(i)
    }

    /// Index of the first nonzero known coefficient; `None` if the series
    /// vanishes to its known order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Exact valuation, or the known order as a lower bound.
    fn valuation_bound(&self) -> usize {
        self.valuation().unwrap_or(self.order())
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs[..order.min(self.order())].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `d/ds`, losing one order.
    pub fn derivative(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        }
    }

    /// `self / divisor`. Requires `val(divisor) <= val(self)`.
    ///
    /// Dividing by a series of valuation `v` loses `v` orders.
    pub fn checked_div(&self, divisor: &TruncatedSeries) -> Result<Self, KernelError> {
        let v = divisor.valuation().ok_or(KernelError::ZeroDivisor)?;
        let w = self.valuation_bound();
        if w < v {
            return Err(KernelError::NegativeValuation {
                dividend: w,
                divisor: v,
            });
        }
        // shift both by v; the divisor then has a unit constant term
        let num = &self.coeffs[v..];
        let den = &divisor.coeffs[v..];
        let order = num.len().min(den.len() + (w - v));
        if order == 0 {
            return Err(KernelError::DivisionOrderLoss);
        }
        let inv_lead = den[0].recip();
        let mut quot: Vec<Rational> = Vec::with_capacity(order);
        for n in 0..order {
            let mut acc = num[n].clone();
            for (i, q) in quot.iter().enumerate().take(n) {
                if let Some(d) = den.get(n - i) {
                    acc -= q * d;
                }
            }
            quot.push(acc * &inv_lead);
        }
        Ok(TruncatedSeries { coeffs: quot })
    }

    /// True when the two series agree on all jointly known coefficients.
    pub fn agrees_with(&self, other: &TruncatedSeries) -> bool {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| a == b)
    }

    /// Integer power.
    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return TruncatedSeries::constant(Rational::one(), self.order());
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute series for the variables of `p`.
    ///
    /// Constants are taken to order `order`; returns `None` when `value`
    /// does not cover a variable of `p`.
    pub fn evaluate<F>(p: &Polynomial, order: usize, mut value: F) -> Option<TruncatedSeries>
    where
        F: FnMut(&VarName) -> Option<TruncatedSeries>,
    {
        let mut acc = TruncatedSeries::zero(order);
        for (m, c) in p.terms() {
            let mut t = TruncatedSeries::constant(c.clone(), order);
            for (v, e) in m.powers() {
                t = &t * &value(v)?.pow(*e);
            }
            acc = &acc + &t;
        }
        Some(acc)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.to_polynomial();
        if p.is_zero() {
            write!(f, "O(s^{})", self.order())
        } else {
            write!(f, "{p} + O(s^{})", self.order())
        }
    }
}

impl Add<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self + &(-rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// The product is known up to `min(order_a + val_b, order_b + val_a)`.
impl Mul<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = (self.order() + rhs.valuation_bound())
            .min(rhs.order() + self.valuation_bound());
        // unknown coefficients only ever meet known zeros below `order`
        let coeffs = (0..order)
            .map(|n| {
                let mut acc = Rational::zero();
                for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
                    if let Some(b) = rhs.coeffs.get(n - i) {
                        if !a.is_zero() && !b.is_zero() {
                            acc += a * b;
                        }
                    }
                }
                acc
            })
            .collect();
        TruncatedSeries { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational;

    fn series(coeffs: &[(i64, i64)]) -> TruncatedSeries {
        TruncatedSeries::new(coeffs.iter().map(|&(n, d)| rational(n, d)).collect())
    }

    #[test]
    fn cusp_slope() {
        let x = TruncatedSeries::monomial(rational(1, 1), 2, 6);
        let y = TruncatedSeries::monomial(rational(1, 1), 3, 6);
        let slope = y.derivative().checked_div(&x.derivative()).unwrap();
        assert_eq!(slope.to_polynomial(), crate::kernel::testing::p("(3/2)*s"));
        assert_eq!(slope.order(), 4);
    }

    #[test]
    fn additive_identity() {
        let a = TruncatedSeries::monomial(rational(1, 1), 2, 6);
        assert_eq!(&a + &TruncatedSeries::zero(6), a);
    }

    #[test]
    fn second_lift_ratio() {
        // d(2 s^2)/ds / d((3/2) s)/ds = 4s / (3/2) = (8/3) s
        let a = TruncatedSeries::monomial(rational(2, 1), 2, 6);
        let b = TruncatedSeries::monomial(rational(3, 2), 1, 6);
        let q = a.derivative().checked_div(&b.derivative()).unwrap();
        assert_eq!(q.coefficients()[..2], [rational(0, 1), rational(8, 3)]);
        assert_eq!(q.order(), 5);
    }

    #[test]
    fn division_errors() {
        let z = TruncatedSeries::zero(4);
        let one = TruncatedSeries::constant(rational(1, 1), 4);
        assert_eq!(one.checked_div(&z), Err(KernelError::ZeroDivisor));
        let s = TruncatedSeries::monomial(rational(1, 1), 1, 4);
        assert!(matches!(
            one.checked_div(&s),
            Err(KernelError::NegativeValuation { .. })
        ));
        let short = series(&[(0, 1), (1, 1)]);
        let tiny = series(&[(0, 1), (1, 1)]);
        // s/s with both known to order 2: one coefficient survives
        assert_eq!(short.checked_div(&tiny).unwrap().order(), 1);
        let s3 = series(&[(0, 1), (0, 1), (0, 1), (1, 1)]);
        let s2 = series(&[(0, 1), (0, 1), (0, 1), (1, 1)]);
        assert_eq!(s3.checked_div(&s2).unwrap().order(), 1);
        // O(s^3) / (s^2 + O(s^3)) = O(s)
        let vanishing = series(&[(0, 1), (0, 1), (0, 1)]);
        let q = vanishing.checked_div(&series(&[(0, 1), (0, 1), (1, 1)])).unwrap();
        assert_eq!(q, series(&[(0, 1)]));
        // O(s^2) / (s^2 + O(s^3)): nothing is known
        assert_eq!(
            series(&[(0, 1), (0, 1)]).checked_div(&series(&[(0, 1), (0, 1), (1, 1)])),
            Err(KernelError::DivisionOrderLoss)
        );
    }

    #[test]
    fn product_order_tracks_valuations() {
        let a = series(&[(0, 1), (1, 1), (2, 1)]); // s + 2s^2 + O(s^3)
        let b = series(&[(1, 1), (1, 1)]); // 1 + s + O(s^2)
        let c = &a * &b;
        // min(3 + 0, 2 + 1) = 3
        assert_eq!(c, series(&[(0, 1), (1, 1), (3, 1)]));
    }

    #[test]
    fn evaluate_polynomial_on_series() {
        let p = crate::kernel::testing::p("x1^2 + 3");
        let s = TruncatedSeries::monomial(rational(1, 1), 1, 5);
        let out = TruncatedSeries::evaluate(&p, 5, |_| Some(s.clone())).unwrap();
        assert_eq!(out, series(&[(3, 1), (0, 1), (1, 1), (0, 1), (0, 1)]));
    }
}
