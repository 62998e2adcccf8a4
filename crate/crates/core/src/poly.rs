//! Sparse multivariate polynomials over [`Rational`] with a weighted grading.
//!
//! Every polynomial carries a shared [`GeneratorSet`]. Monomials are dense
//! exponent vectors, and their `Ord` is the single monomial order used by
//! the whole crate: weighted degree first, then lexicographic on exponents
//! in generator order (an earlier generator with a larger exponent wins).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub weight: u32,
}

/// Ordered generator names with positive weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    gens: Vec<Generator>,
}

impl GeneratorSet {
    pub fn new<S: Into<String>>(gens: impl IntoIterator<Item = (S, u32)>) -> Result<Arc<Self>> {
        let mut out: Vec<Generator> = Vec::new();
        for (name, weight) in gens {
            let name = name.into();
            if !is_identifier(&name) {
                return Err(Error::InvalidGeneratorName(name));
            }
            if weight == 0 {
                return Err(Error::ZeroWeight(name));
            }
            if out.iter().any(|g| g.name == name) {
                return Err(Error::DuplicateGenerator(name));
            }
            out.push(Generator { name, weight });
        }
        Ok(Arc::new(GeneratorSet { gens: out }))
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Generator> {
        self.gens.iter()
    }

    pub fn get(&self, index: usize) -> &Generator {
        &self.gens[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn weights(&self) -> Vec<u32> {
        self.gens.iter().map(|g| g.weight).collect()
    }

    pub fn names(&self) -> Vec<&str> {
        self.gens.iter().map(|g| g.name.as_str()).collect()
    }

    pub fn max_weight(&self) -> u32 {
        self.gens.iter().map(|g| g.weight).max().unwrap_or(1)
    }

    /// All monomials of weighted degree `degree`, ascending in the monomial order.
    pub fn monomials_of_degree(&self, degree: u32) -> Vec<Monomial> {
        let weights = self.weights();
        let mut out = Vec::new();
        let mut exps = vec![0u32; weights.len()];
        fill_exponents(&weights, 0, degree, &mut exps, &mut out);
        out.sort();
        out
    }
}

fn fill_exponents(weights: &[u32], at: usize, remaining: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if at == weights.len() {
        if remaining == 0 {
            out.push(Monomial::from_exponents(exps.clone(), weights));
        }
        return;
    }
    for e in 0..=remaining / weights[at] {
        exps[at] = e;
        fill_exponents(weights, at + 1, remaining - e * weights[at], exps, out);
    }
    exps[at] = 0;
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut bytes = name.bytes();
    match bytes.next() {
        Some(b) if b.is_ascii_alphabetic() || b == b'_' => {}
        _ => return false,
    }
    bytes.all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// Exponent vector with its cached weighted degree.
///
/// Field order matters: the derived `Ord` compares the degree first and then
/// the exponents lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn from_exponents(exps: Vec<u32>, weights: &[u32]) -> Self {
        debug_assert_eq!(exps.len(), weights.len());
        let degree = exps.iter().zip(weights).map(|(e, w)| e * w).sum();
        Monomial { degree, exps }
    }

    pub fn one(len: usize) -> Self {
        Monomial { degree: 0, exps: vec![0; len] }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { degree: self.degree + other.degree, exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial { degree: other.degree - self.degree, exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect() }
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps: Vec<u32> = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial::from_exponents(exps, weights)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn render(&self, gens: &GeneratorSet) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(gens.get(i).name.clone()),
                _ => parts.push(format!("{}^{}", gens.get(i).name, e)),
            }
        }
        parts.join("*")
    }
}

/// Sparse polynomial: monomial → nonzero coefficient, iterated in ascending
/// monomial order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    gens: Arc<GeneratorSet>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(gens: &Arc<GeneratorSet>) -> Self {
        Polynomial { gens: gens.clone(), terms: BTreeMap::new() }
    }

    pub fn one(gens: &Arc<GeneratorSet>) -> Self {
        Self::constant(gens, Rational::one())
    }

    pub fn constant(gens: &Arc<GeneratorSet>, c: Rational) -> Self {
        Self::from_term(gens, Monomial::one(gens.len()), c)
    }

    pub fn from_term(gens: &Arc<GeneratorSet>, monomial: Monomial, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(monomial, coeff);
        }
        Polynomial { gens: gens.clone(), terms }
    }

    pub fn monomial(gens: &Arc<GeneratorSet>, monomial: Monomial) -> Self {
        Self::from_term(gens, monomial, Rational::one())
    }

    /// The generator at `index` as a polynomial.
    pub fn var(gens: &Arc<GeneratorSet>, index: usize) -> Self {
        let mut exps = vec![0; gens.len()];
        exps[index] = 1;
        Self::monomial(gens, Monomial::from_exponents(exps, &gens.weights()))
    }

    pub fn generator(gens: &Arc<GeneratorSet>, name: &str) -> Result<Self> {
        let index = gens.index_of(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        Ok(Self::var(gens, index))
    }

    pub fn from_terms(gens: &Arc<GeneratorSet>, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut out = Polynomial::zero(gens);
        for (m, c) in terms {
            out.add_term(m, &c);
        }
        out
    }

    pub fn generators(&self) -> &Arc<GeneratorSet> {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last_key_value().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.last_key_value().map(|(_, c)| c)
    }

    /// Highest weighted degree among the terms; `None` for zero.
    pub fn weighted_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Zero counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// The single degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        Ok(self.weighted_degree())
    }

    pub fn homogeneous_part(&self, degree: u32) -> Polynomial {
        Polynomial {
            gens: self.gens.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == degree).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Nonzero homogeneous parts, ascending by degree.
    pub fn homogeneous_parts(&self) -> Vec<Polynomial> {
        let mut degrees: Vec<u32> = self.terms.keys().map(Monomial::degree).collect();
        degrees.dedup();
        degrees.into_iter().map(|d| self.homogeneous_part(d)).collect()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, Rational)> {
        self.terms.pop_last()
    }

    /// `self += coeff * monomial * other`
    pub(crate) fn add_scaled_shifted(&mut self, coeff: &Rational, shift: &Monomial, other: &Polynomial) {
        for (m, c) in &other.terms {
            self.add_term(shift.mul(m), &(coeff * c));
        }
    }

    fn check_same(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.gens, &other.gens) || self.gens == other.gens {
            Ok(())
        } else {
            Err(Error::GeneratorMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        let mut out = Polynomial::zero(&self.gens);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.gens);
        }
        Polynomial { gens: self.gens.clone(), terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.gens);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Scale so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.recip().expect("nonzero leading coefficient")),
        }
    }

    /// Replace each generator by its image. Images must share one generator
    /// set, which becomes the generator set of the result.
    pub fn substitute(&self, images: &HashMap<String, Polynomial>, target: &Arc<GeneratorSet>) -> Result<Polynomial> {
        let mut resolved: Vec<Option<&Polynomial>> = Vec::with_capacity(self.gens.len());
        for g in self.gens.iter() {
            let image = images.get(&g.name);
            if let Some(p) = image {
                if p.gens != *target {
                    return Err(Error::GeneratorMismatch);
                }
            }
            resolved.push(image);
        }
        let mut out = Polynomial::zero(target);
        let mut power_cache: HashMap<(usize, u32), Polynomial> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let image = resolved[i].ok_or_else(|| Error::MissingImage(self.gens.get(i).name.clone()))?;
                let power = power_cache.entry((i, e)).or_insert_with(|| image.pow(e));
                term = &term * &*power;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Re-express over another generator set that contains every generator
    /// used here (matched by name and weight).
    pub fn embed(&self, target: &Arc<GeneratorSet>) -> Result<Polynomial> {
        let mut map = Vec::with_capacity(self.gens.len());
        for g in self.gens.iter() {
            let j = target.index_of(&g.name).ok_or_else(|| Error::UnknownGenerator(g.name.clone()))?;
            if target.get(j).weight != g.weight {
                return Err(Error::GeneratorMismatch);
            }
            map.push(j);
        }
        let weights = target.weights();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.len()];
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[map[i]] = e;
            }
            out.add_term(Monomial::from_exponents(exps, &weights), c);
        }
        Ok(out)
    }
}

/// Homogeneous parts of `(1 + Σ λᵢ)(1 + Σ (−1)ⁱ λᵢ) − 1` for `i = 1..=genus`,
/// over the generators `lambda1..lambda{genus}` of `gens`. Zero parts are
/// dropped; the rest come back ascending by degree.
pub fn expand_chern_identity(gens: &Arc<GeneratorSet>, genus: u32) -> Result<Vec<Polynomial>> {
    if !(1..=3).contains(&genus) {
        return Err(Error::UnsupportedGenus(genus));
    }
    let mut total = Polynomial::one(gens);
    let mut dual = Polynomial::one(gens);
    for i in 1..=genus {
        let lambda = Polynomial::generator(gens, &format!("lambda{i}"))?;
        if lambda.weighted_degree() != Some(i) {
            return Err(Error::GeneratorMismatch);
        }
        total = &total + &lambda;
        dual = if i % 2 == 0 { &dual + &lambda } else { &dual - &lambda };
    }
    let product = &(&total * &dual) - &Polynomial::one(gens);
    Ok(product.homogeneous_parts())
}

/// Generator set `lambda1..lambda{genus}` with weights `1..=genus`.
pub fn hodge_generators(genus: u32) -> Result<Arc<GeneratorSet>> {
    GeneratorSet::new((1..=genus).map(|i| (format!("lambda{i}"), i)))
}

impl fmt::Display for Polynomial {
    /// Canonical rendering, descending in the monomial order, in the same
    /// syntax the expression parser accepts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff = if magnitude.is_integer() { magnitude.to_string() } else { format!("({magnitude})") };
            if m.is_one() {
                write!(f, "{coeff}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", m.render(&self.gens))?;
            } else {
                write!(f, "{coeff}*{}", m.render(&self.gens))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

// Operator forms panic on mismatched generator sets; use the `checked_*`
// methods when the inputs are not known to agree.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("generator-set mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("generator-set mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("generator-set mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&Rational::from(-1))
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g3() -> Arc<GeneratorSet> {
        GeneratorSet::new([("lambda1", 1), ("lambda2", 2), ("lambda3", 3), ("sigma1", 1), ("sigma2", 2)]).unwrap()
    }

    fn v(gens: &Arc<GeneratorSet>, name: &str) -> Polynomial {
        Polynomial::generator(gens, name).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn additive_inverse() {
        let gens = g3();
        let l1 = v(&gens, "lambda1");
        assert!((&l1 + &-&l1).is_zero());
    }

    #[test]
    fn sum_builds_class() {
        let gens = g3();
        let (l1, s1) = (v(&gens, "lambda1"), v(&gens, "sigma1"));
        let p = &l1.scale(&q(5, 1)) + &s1.scale(&q(-1, 2));
        assert_eq!(p.to_string(), "5*lambda1 - (1/2)*sigma1");
        assert_eq!(p.coefficient(s1.leading_monomial().unwrap()), q(-1, 2));
    }

    #[test]
    fn sum_of_relation_sides() {
        let gens = g3();
        let (l1, l3, s1, s2) = (v(&gens, "lambda1"), v(&gens, "lambda3"), v(&gens, "sigma1"), v(&gens, "sigma2"));
        let left = l3.scale(&q(2016, 1));
        let right = &(&(&l1 * &l1) * &s1).scale(&q(-4, 1)) + &(&(&l1 * &s2).scale(&q(-24, 1)) + &(&s2 * &s1).scale(&q(11, 3)));
        let sum = &left + &right;
        assert_eq!(sum.len(), 4);
        assert_eq!(sum.homogeneous_degree().unwrap(), Some(3));
        assert_eq!(sum.coefficient(&(&s2 * &s1).leading_monomial().unwrap().clone()), q(11, 3));
    }

    #[test]
    fn product_of_divisors() {
        let gens = g3();
        let (l1, s1) = (v(&gens, "lambda1"), v(&gens, "sigma1"));
        let n0 = &l1.scale(&q(18, 1)) - &s1.scale(&q(2, 1));
        let psi = &l1.scale(&q(140, 1)) - &s1.scale(&q(15, 1));
        let expected = &(&(&l1 * &l1).scale(&q(2520, 1)) - &(&l1 * &s1).scale(&q(550, 1))) + &(&s1 * &s1).scale(&q(30, 1));
        assert_eq!(&n0 * &psi, expected);
        assert_eq!(&Polynomial::one(&gens) * &n0, n0);
        assert_eq!((&s1 * &s1).to_string(), "sigma1^2");
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = g3();
        let b = hodge_generators(2).unwrap();
        let p = v(&a, "lambda1");
        let r = v(&b, "lambda1");
        assert_eq!(p.checked_add(&r), Err(Error::GeneratorMismatch));
        assert_eq!(p.checked_mul(&r), Err(Error::GeneratorMismatch));
    }

    #[test]
    fn zero_has_no_degree() {
        let gens = g3();
        assert_eq!(Polynomial::zero(&gens).weighted_degree(), None);
        assert!(Polynomial::zero(&gens).is_homogeneous());
        let mixed = &v(&gens, "lambda1") + &v(&gens, "lambda2");
        assert!(!mixed.is_homogeneous());
        assert_eq!(mixed.weighted_degree(), Some(2));
        assert_eq!(mixed.homogeneous_degree(), Err(Error::NotHomogeneous));
    }

    #[test]
    fn chern_identity_genus_one() {
        let gens = hodge_generators(1).unwrap();
        let parts = expand_chern_identity(&gens, 1).unwrap();
        let l1 = v(&gens, "lambda1");
        assert_eq!(parts, vec![-(&l1 * &l1)]);
    }

    #[test]
    fn chern_identity_genus_two() {
        let gens = hodge_generators(2).unwrap();
        let parts = expand_chern_identity(&gens, 2).unwrap();
        let (l1, l2) = (v(&gens, "lambda1"), v(&gens, "lambda2"));
        assert_eq!(parts, vec![&l2.scale(&q(2, 1)) - &(&l1 * &l1), &l2 * &l2]);
    }

    #[test]
    fn chern_identity_genus_three() {
        let gens = g3();
        let parts = expand_chern_identity(&gens, 3).unwrap();
        let (l1, l2, l3) = (v(&gens, "lambda1"), v(&gens, "lambda2"), v(&gens, "lambda3"));
        assert_eq!(parts, vec![&l2.scale(&q(2, 1)) - &(&l1 * &l1), &(&l2 * &l2) - &(&l1 * &l3).scale(&q(2, 1)), -(&l3 * &l3),]);
        assert!(parts.iter().all(Polynomial::is_homogeneous));
        assert_eq!(expand_chern_identity(&gens, 4), Err(Error::UnsupportedGenus(4)));
    }

    #[test]
    fn substitution() {
        let gens = g3();
        let (l1, l2, s1, s2) = (v(&gens, "lambda1"), v(&gens, "lambda2"), v(&gens, "sigma1"), v(&gens, "sigma2"));
        let identity: HashMap<String, Polynomial> = gens.iter().map(|g| (g.name.clone(), v(&gens, &g.name))).collect();

        let mut images = identity.clone();
        images.insert("lambda2".into(), (&l1 * &l1).scale(&q(1, 2)));
        assert_eq!(l2.substitute(&images, &gens).unwrap(), (&l1 * &l1).scale(&q(1, 2)));

        let mut images = identity.clone();
        images.insert("sigma2".into(), (&l1 * &s1).scale(&q(6, 1)));
        assert_eq!(s2.substitute(&images, &gens).unwrap(), (&l1 * &s1).scale(&q(6, 1)));

        let mut images = identity;
        images.insert("sigma1".into(), l1.scale(&q(12, 1)));
        assert_eq!((&s1 * &s1).substitute(&images, &gens).unwrap(), (&l1 * &l1).scale(&q(144, 1)));

        let partial: HashMap<String, Polynomial> = [("lambda1".to_string(), l1.clone())].into();
        assert_eq!(s1.substitute(&partial, &gens), Err(Error::MissingImage("sigma1".into())));
    }

    #[test]
    fn generator_set_validation() {
        assert!(matches!(GeneratorSet::new([("a", 1), ("a", 2)]), Err(Error::DuplicateGenerator(_))));
        assert!(matches!(GeneratorSet::new([("a", 0)]), Err(Error::ZeroWeight(_))));
        assert!(matches!(GeneratorSet::new([("λ1", 1)]), Err(Error::InvalidGeneratorName(_))));
        assert!(matches!(GeneratorSet::new([("1a", 1)]), Err(Error::InvalidGeneratorName(_))));
    }

    #[test]
    fn monomial_enumeration() {
        let gens = g3();
        let counts: Vec<usize> = (0..4).map(|d| gens.monomials_of_degree(d).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 9]);
        let deg2 = gens.monomials_of_degree(2);
        assert!(deg2.windows(2).all(|w| w[0] < w[1]));
        // lambda1^2 is the largest degree-2 monomial: lambda1 is the first generator.
        assert_eq!(deg2.last().unwrap().render(&gens), "lambda1^2");
    }

    #[test]
    fn embedding() {
        let small = hodge_generators(2).unwrap();
        let big = g3();
        let p = &v(&small, "lambda2") - &v(&small, "lambda1").pow(2);
        let e = p.embed(&big).unwrap();
        assert_eq!(e, &v(&big, "lambda2") - &v(&big, "lambda1").pow(2));
        assert!(v(&big, "sigma1").embed(&small).is_err());
    }
}
