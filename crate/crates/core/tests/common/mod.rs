//! Strategies and property checks shared by the property tests and the
//! acceptance runner.

#![allow(dead_code)]

use monster_core::kernel::{rational, Monomial, Polynomial, Rational, VarName};
use monster_core::nodal::build_chain;
use monster_core::strata::{enumerate_code_words, locus_contains, node_word_explicit};
use monster_core::tower::TowerPoint;
use monster_core::{ChartString, Symbol};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn cs(s: &str) -> ChartString {
    s.parse().unwrap()
}

pub fn arb_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| rational(n, d))
}

pub fn arb_nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=12, 1i64..=5, any::<bool>())
        .prop_map(|(n, d, neg)| rational(if neg { -n } else { n }, d))
}

pub fn vars() -> Vec<VarName> {
    vec![
        VarName::T,
        VarName::x1(),
        VarName::x2(),
        VarName::coord(Symbol::One, &cs("2")),
        VarName::coord(Symbol::Two, &cs("21")),
    ]
}

pub fn arb_var() -> impl Strategy<Value = VarName> {
    prop::sample::select(vars())
}

pub fn arb_poly() -> impl Strategy<Value = Polynomial> {
    let term = (
        arb_rational(),
        prop::collection::vec((arb_var(), 1u32..=3), 0..=3),
    )
        .prop_map(|(c, powers)| Polynomial::term(c, Monomial::from_powers(powers)));
    prop::collection::vec(term, 0..=4)
        .prop_map(|ts| ts.into_iter().fold(Polynomial::zero(), |a, t| a + t))
}

pub fn arb_chart(min: usize, max: usize) -> impl Strategy<Value = ChartString> {
    prop::collection::vec(any::<bool>(), min..=max).prop_map(|bits| {
        ChartString::from_symbols(
            bits.into_iter()
                .map(|b| if b { Symbol::Two } else { Symbol::One })
                .collect(),
        )
    })
}

/// A point whose last coordinate is nonzero, so it has a sibling chart.
pub fn arb_fiber_point() -> impl Strategy<Value = TowerPoint> {
    arb_chart(1, 6).prop_flat_map(|chart| {
        let n = chart.len() + 1;
        (
            Just(chart),
            prop::collection::vec(arb_rational(), n),
            arb_nonzero_rational(),
        )
            .prop_map(|(chart, mut coords, last)| {
                coords.push(last);
                TowerPoint::new(chart, coords).unwrap()
            })
    })
}

/// Level plus three indices into the code words of that level.
pub fn arb_word_triple() -> impl Strategy<Value = (usize, usize, usize, usize)> {
    (1usize..=7, any::<usize>(), any::<usize>(), any::<usize>())
}

pub fn check_ring_axioms(a: &Polynomial, b: &Polynomial, c: &Polynomial) -> Result<(), TestCaseError> {
    prop_assert_eq!(a + b, b + a);
    prop_assert_eq!(&(a + b) + c, a + &(b + c));
    prop_assert_eq!(a * b, b * a);
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    prop_assert_eq!(a + &Polynomial::zero(), a.clone());
    prop_assert_eq!(a * &Polynomial::one(), a.clone());
    prop_assert!((a - a).is_zero());
    prop_assert_eq!(-&(-a), a.clone());
    Ok(())
}

pub fn check_leibniz(a: &Polynomial, b: &Polynomial, v: &VarName) -> Result<(), TestCaseError> {
    let lhs = (a * b).derivative(v);
    let rhs = &a.derivative(v) * b + a * &b.derivative(v);
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn check_transition_involution(p: &TowerPoint) -> Result<(), TestCaseError> {
    let q = p.transition_last().unwrap();
    prop_assert_eq!(q.chart(), &p.chart().sibling().unwrap());
    prop_assert_eq!(&q.coords()[..q.coords().len() - 1], &p.coords()[..p.coords().len() - 1]);
    prop_assert_eq!(&q.transition_last().unwrap(), p);
    Ok(())
}

pub fn check_locus_order(k: usize, i: usize, j: usize, l: usize) -> Result<(), TestCaseError> {
    let words = enumerate_code_words(k);
    let (a, b, c) = (&words[i % words.len()], &words[j % words.len()], &words[l % words.len()]);
    let contains = |x, y| locus_contains(x, y).unwrap();
    prop_assert!(contains(a, a));
    if contains(a, b) && contains(b, a) {
        prop_assert_eq!(a.signature(), b.signature());
    }
    if contains(a, b) && contains(b, c) {
        prop_assert!(contains(a, c));
    }
    Ok(())
}

/// The chain read right to left with 1 and 2 swapped is the same chain,
/// and swapping a label leaves its node word unchanged.
pub fn check_chain_symmetry(k: usize, label: &ChartString) -> Result<(), TestCaseError> {
    let chain = build_chain(k).unwrap();
    let forward: Vec<_> = chain
        .twigs
        .iter()
        .map(|t| (t.label.clone(), t.multiplicity))
        .collect();
    let mirrored: Vec<_> = chain
        .twigs
        .iter()
        .rev()
        .map(|t| (t.label.swapped(), t.multiplicity))
        .collect();
    prop_assert_eq!(forward, mirrored);
    let swapped_nodes: Vec<_> = chain.nodes.iter().rev().map(|n| n.swapped()).collect();
    prop_assert_eq!(&swapped_nodes, &chain.nodes);
    prop_assert_eq!(node_word_explicit(label), node_word_explicit(&label.swapped()));
    Ok(())
}
