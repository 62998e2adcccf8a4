#![allow(dead_code)]

use std::sync::Arc;

use chow_core::{GeneratorSet, Monomial, Polynomial, Rational};
use proptest::prelude::*;

/// Terms as (numerator, denominator, exponent vector); exponents beyond the
/// ring's generator count are ignored.
#[derive(Debug, Clone)]
pub struct RawPoly(pub Vec<(i64, i64, Vec<u32>)>);

/// Terms as (monomial selector, numerator, denominator) in one degree.
#[derive(Debug, Clone)]
pub struct RawHomogeneous {
    pub degree: u32,
    pub terms: Vec<(usize, i64, i64)>,
}

pub fn raw_poly(max_exp: u32, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((-30i64..=30, 1i64..=12, prop::collection::vec(0..=max_exp, 6)), 0..=max_terms).prop_map(RawPoly)
}

pub fn raw_homogeneous(max_degree: u32, max_terms: usize) -> impl Strategy<Value = RawHomogeneous> {
    (0..=max_degree, prop::collection::vec((any::<usize>(), -30i64..=30, 1i64..=12), 1..=max_terms))
        .prop_map(|(degree, terms)| RawHomogeneous { degree, terms })
}

pub fn build(raw: &RawPoly, gens: &Arc<GeneratorSet>) -> Polynomial {
    let weights = gens.weights();
    Polynomial::from_terms(
        gens,
        raw.0.iter().map(|(n, d, e)| (Monomial::from_exponents(e[..weights.len()].to_vec(), &weights), Rational::new(*n, *d))),
    )
}

pub fn build_homogeneous(raw: &RawHomogeneous, gens: &Arc<GeneratorSet>) -> Polynomial {
    let monomials = gens.monomials_of_degree(raw.degree);
    if monomials.is_empty() {
        return Polynomial::zero(gens);
    }
    Polynomial::from_terms(gens, raw.terms.iter().map(|(i, n, d)| (monomials[i % monomials.len()].clone(), Rational::new(*n, *d))))
}
