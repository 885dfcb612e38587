//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{KernelError, Rational, VarName};

/// A monomial: variables in canonical order, each with a positive exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(VarName, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VarName) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (VarName, u32)>) -> Self {
        let mut map: BTreeMap<VarName, u32> = BTreeMap::new();
        for (v, e) in powers {
            *map.entry(v).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn powers(&self) -> &[(VarName, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: &VarName) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(v))
            .map_or(0, |i| self.0[i].1)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// The monomial with `v` removed, together with its former exponent.
    fn split_off(&self, v: &VarName) -> (Monomial, u32) {
        let mut rest = Vec::with_capacity(self.0.len());
        let mut exp = 0;
        for (w, e) in &self.0 {
            if w == v {
                exp = *e;
            } else {
                rest.push((w.clone(), *e));
            }
        }
        (Monomial(rest), exp)
    }

    fn display_order(&self) -> Vec<&(VarName, u32)> {
        let mut vars: Vec<_> = self.0.iter().collect();
        vars.sort_by(|a, b| a.0.display_cmp(&b.0));
        vars
    }
}

/// A polynomial, stored as a map from monomials to nonzero coefficients.
///
/// The map is kept canonical (no zero coefficients, monomials normalized), so
/// derived equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn integer(n: i64) -> Self {
        Polynomial::constant(Rational::from_integer(n.into()))
    }

    pub fn var(v: VarName) -> Self {
        Polynomial::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Highest power of `v` that occurs.
    pub fn degree_in(&self, v: &VarName) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Every variable that occurs, in canonical order.
    pub fn variables(&self) -> Vec<VarName> {
        let mut vars: Vec<VarName> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| v.clone()))
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: &VarName) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let (rest, e) = m.split_off(v);
            if e == 0 {
                continue;
            }
            let m = rest.mul(&Monomial::from_powers([(v.clone(), e - 1)]));
            out.add_term(m, c * Rational::from_integer(e.into()));
        }
        out
    }

    /// Replace every occurrence of `v` by `q`, fully expanded.
    pub fn substitute(&self, v: &VarName, q: &Polynomial) -> Polynomial {
        // group terms by the exponent of v so each power of q is formed once
        let mut by_power: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (rest, e) = m.split_off(v);
            by_power.entry(e).or_default().add_term(rest, c.clone());
        }
        let mut out = Polynomial::zero();
        for (e, coeff) in by_power {
            out = out + &coeff * &q.pow(e);
        }
        out
    }

    /// Apply a renaming to every variable simultaneously.
    pub fn rename(&self, f: impl Fn(&VarName) -> VarName) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| {
            (
                Monomial::from_powers(m.powers().iter().map(|(v, e)| (f(v), *e))),
                c.clone(),
            )
        }))
    }

    /// Write `self = a * v + b` where `a`, `b` are free of `v`.
    ///
    /// Fails with [`KernelError::NotLinear`] when the degree in `v` is not 1.
    pub fn linear_split(&self, v: &VarName) -> Result<(Polynomial, Polynomial), KernelError> {
        let degree = self.degree_in(v);
        if degree != 1 {
            return Err(KernelError::NotLinear {
                var: v.to_string(),
                degree,
            });
        }
        let mut a = Polynomial::zero();
        let mut b = Polynomial::zero();
        for (m, c) in &self.terms {
            let (rest, e) = m.split_off(v);
            if e == 1 {
                a.add_term(rest, c.clone());
            } else {
                b.add_term(rest, c.clone());
            }
        }
        Ok((a, b))
    }

    /// Positive gcd of the numerators over the lcm of denominators, so that
    /// `self / content()` has coprime integer coefficients and a positive
    /// leading (first canonical) coefficient.
    pub fn content(&self) -> Rational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Rational::one();
        }
        let mut content = Rational::new(num, den);
        if let Some(lead) = self.terms.values().next() {
            if lead.is_negative() {
                content = -content;
            }
        }
        content
    }

    /// `self` divided by its content.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        self.scale(&self.content().recip())
    }

    /// Terms in printing order: decreasing total degree, then canonical.
    fn display_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            b.0.degree()
                .cmp(&a.0.degree())
                .then_with(|| a.0.display_order().cmp_by(b.0.display_order()))
        });
        terms
    }

    /// Compact rendering with juxtaposed factors, e.g.
    /// `3x1(212)x2(21)+2x1(2)` or `x1x2-t`.
    pub fn to_compact_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.display_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let abs = c.abs();
            if m.is_one() || !abs.is_one() {
                if abs.is_integer() || m.is_one() {
                    out.push_str(&abs.to_string());
                } else {
                    out.push_str(&format!("({abs})"));
                }
            }
            for (v, e) in m.display_order() {
                out.push_str(&v.to_string());
                if *e > 1 {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
        out
    }
}

trait CmpBy {
    fn cmp_by(self, other: Self) -> std::cmp::Ordering;
}

impl CmpBy for Vec<&(VarName, u32)> {
    fn cmp_by(self, other: Self) -> std::cmp::Ordering {
        for (a, b) in self.iter().zip(other.iter()) {
            let ord = a.0.display_cmp(&b.0).then(b.1.cmp(&a.1));
            if ord.is_ne() {
                return ord;
            }
        }
        self.len().cmp(&other.len())
    }
}

/// Parseable rendering: `(3/2)*s^2 + x1*x2 - t`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.display_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if m.is_one() || !abs.is_one() {
                factors.push(if abs.is_integer() {
                    abs.to_string()
                } else {
                    format!("({abs})")
                });
            }
            for (v, e) in m.display_order() {
                factors.push(if *e > 1 {
                    format!("{v}^{e}")
                } else {
                    v.to_string()
                });
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl From<VarName> for Polynomial {
    fn from(v: VarName) -> Self {
        Polynomial::var(v)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::testing::{p, q};

    #[test]
    fn ring_examples() {
        assert_eq!(p("x1*x2") + p("0"), p("x1*x2"));
        assert_eq!(p("x1 + x2") * p("x1 - x2"), p("x1^2 - x2^2"));
        // term-map oracle: exponent vectors {x1(2):1, x2:1} with coefficient 2
        // plus {x1:1} with coefficient 1
        let expected = Polynomial::from_terms([
            (
                Monomial::from_powers([(p_var("x1(2)"), 1), (VarName::x2(), 1)]),
                q("2"),
            ),
            (Monomial::var(VarName::x1()), q("1")),
        ]);
        assert_eq!(p("2") * p("x1(2)*x2") + p("x1"), expected);
    }

    fn p_var(s: &str) -> VarName {
        p(s).variables().pop().unwrap()
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p("x1*x2").derivative(&VarName::x1()), p("x2"));
        assert_eq!(p("x2^3").derivative(&VarName::x2()), p("3*x2^2"));
        assert_eq!(
            p("x1*x2(1) + x2").derivative(&p_var("x2(1)")),
            p("x1")
        );
        assert!(p("5").derivative(&VarName::x1()).is_zero());
    }

    #[test]
    fn substitute_examples() {
        let x1 = VarName::x1();
        assert_eq!(p("x1*x2").substitute(&x1, &p("x1")), p("x1*x2"));
        let d = VarName::named("D");
        assert_eq!(p("D*R^2").substitute(&d, &p("-N*R")), p("-N*R^3"));
        // alpha = beta = 1: D^1 R^2 - t with D = -(1/2) N R
        assert_eq!(
            p("D*R^2 - t").substitute(&d, &p("-(1/2)*N*R")),
            p("-(1/2)*N*R^3 - t")
        );
    }

    #[test]
    fn compact_rendering() {
        assert_eq!(p("3*x1(212)*x2(21) + 2*x1(2)").to_compact_string(), "3x1(212)x2(21)+2x1(2)");
        assert_eq!(p("x2*x1(2) + x1").to_compact_string(), "x1(2)x2+x1");
        assert_eq!(p("x1*x2 - t").to_compact_string(), "x1x2-t");
        assert_eq!(p("0").to_compact_string(), "0");
        assert_eq!(p("-(3/2)*s").to_compact_string(), "-(3/2)s");
    }

    #[test]
    fn display_rendering() {
        assert_eq!(p("(3/2)*s").to_string(), "(3/2)*s");
        assert_eq!(p("s^2 - 1 + 2*s").to_string(), "s^2 + 2*s - 1");
        assert_eq!(p("-x1*x2 + t").to_string(), "-x1*x2 + t");
    }

    #[test]
    fn content_and_primitive_part() {
        let b = p("6*x1*x2(1) + 4*x2");
        assert_eq!(b.content(), q("2"));
        assert_eq!(b.primitive_part(), p("3*x1*x2(1) + 2*x2"));
        assert_eq!(p("-(1/2)*x1 - (3/4)*x2").primitive_part(), p("2*x1 + 3*x2"));
    }

    #[test]
    fn linear_split_rejects_nonlinear() {
        let d = VarName::named("D");
        let (a, b) = p("2*N*R + 3*D").linear_split(&d).unwrap();
        assert_eq!(a, p("3"));
        assert_eq!(b, p("2*N*R"));
        assert!(matches!(
            p("D^2 + N").linear_split(&d),
            Err(KernelError::NotLinear { degree: 2, .. })
        ));
    }
}
