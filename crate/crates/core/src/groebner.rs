//! Normal forms and reduced Gröbner bases.
//!
//! There is one monomial order, [`MonomialOrder::WeightedDegreeLex`], which
//! is the derived `Ord` of [`Monomial`]. Buchberger's algorithm uses the
//! normal selection strategy (smallest lcm first) with the coprime and chain
//! criteria for discarding pairs.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use crate::poly::{GeneratorSet, Monomial, Polynomial};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Weighted degree, ties broken lexicographically in generator order.
    #[default]
    WeightedDegreeLex,
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::WeightedDegreeLex => a.cmp(b),
        }
    }
}

/// Full reduction of `p` by `basis`: always the largest reducible term
/// first, using the earliest-listed basis element whose leading monomial
/// divides it.
pub fn reduce(p: &Polynomial, basis: &[Polynomial], _order: MonomialOrder) -> Polynomial {
    reduce_with(p, basis, |candidates| candidates[0])
}

/// Like [`reduce`], but `choose` picks which of the dividing basis elements
/// (given as indices into `basis`, ascending) is used at each step.
pub fn reduce_with(p: &Polynomial, basis: &[Polynomial], mut choose: impl FnMut(&[usize]) -> usize) -> Polynomial {
    let leads: Vec<(&Monomial, &Rational)> = basis.iter().map(|g| g.leading_term().expect("basis elements are nonzero")).collect();
    let mut work = p.clone();
    let mut remainder = Polynomial::zero(p.generators());
    let mut candidates = Vec::new();
    while let Some((m, c)) = work.pop_leading() {
        candidates.clear();
        candidates.extend(leads.iter().enumerate().filter(|(_, (lm, _))| lm.divides(&m)).map(|(i, _)| i));
        if candidates.is_empty() {
            remainder.add_term(m, &c);
            continue;
        }
        let i = choose(&candidates);
        let (lm, lc) = leads[i];
        let factor = -(&c / lc);
        let shift = lm.quotient_of(&m);
        for (gm, gc) in basis[i].terms().rev().skip(1) {
            work.add_term(shift.mul(gm), &(&factor * gc));
        }
    }
    remainder
}

/// A reduced Gröbner basis together with the ideal generators it came from.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    gens: Arc<GeneratorSet>,
    elements: Vec<Polynomial>,
    source: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &Arc<GeneratorSet> {
        &self.gens
    }

    /// Monic, inter-reduced, ascending by leading monomial.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn source(&self) -> &[Polynomial] {
        &self.source
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().map(|g| g.leading_monomial().expect("nonzero"))
    }

    /// True when no leading monomial divides `m`.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        self.leading_monomials().all(|lm| !lm.divides(m))
    }

    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        reduce(p, &self.elements, self.order)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }

    /// The whole ideal is generated by 1.
    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|g| g.leading_monomial().is_some_and(Monomial::is_one))
    }

    /// Check the defining properties directly: every S-polynomial reduces
    /// to zero, elements are monic and no term of one element is divisible
    /// by the leading monomial of another.
    pub fn verify(&self) -> bool {
        let weights = self.gens.weights();
        for (i, f) in self.elements.iter().enumerate() {
            if !f.leading_coefficient().is_some_and(Rational::is_one) {
                return false;
            }
            for (j, g) in self.elements.iter().enumerate() {
                if i == j {
                    continue;
                }
                let lm = g.leading_monomial().expect("nonzero");
                if f.terms().any(|(m, _)| lm.divides(m)) {
                    return false;
                }
                if i < j && !self.reduce(&s_polynomial(f, g, &weights)).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

pub fn ideal_membership(p: &Polynomial, gb: &GroebnerBasis) -> bool {
    gb.contains(p)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, weights: &[u32]) -> Polynomial {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let lcm = fm.lcm(gm, weights);
    let mut s = Polynomial::zero(f.generators());
    s.add_scaled_shifted(&fc.recip().expect("nonzero"), &fm.quotient_of(&lcm), f);
    s.add_scaled_shifted(&-gc.recip().expect("nonzero"), &gm.quotient_of(&lcm), g);
    s
}

/// Reduced Gröbner basis of the ideal generated by `generators` over `gens`.
/// Zero generators are ignored.
pub fn buchberger(gens: &Arc<GeneratorSet>, generators: &[Polynomial], order: MonomialOrder) -> GroebnerBasis {
    let weights = gens.weights();
    let source: Vec<Polynomial> = generators.to_vec();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();

    let insert = |basis: &mut Vec<Polynomial>, pending: &mut BTreeSet<(usize, usize)>, h: Polynomial| {
        let n = basis.len();
        basis.push(h.monic());
        for i in 0..n {
            pending.insert((i, n));
        }
    };

    for g in generators {
        let r = reduce(g, &basis, order);
        if !r.is_zero() {
            insert(&mut basis, &mut pending, r);
        }
    }

    while let Some(&(i, j)) =
        pending.iter().min_by(|a, b| pair_lcm(&basis, **a, &weights).cmp(&pair_lcm(&basis, **b, &weights)).then(a.cmp(b)))
    {
        pending.remove(&(i, j));
        let (lm_i, lm_j) = (basis[i].leading_monomial().expect("nonzero"), basis[j].leading_monomial().expect("nonzero"));
        if lm_i.is_coprime(lm_j) {
            continue;
        }
        let lcm = lm_i.lcm(lm_j, &weights);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().expect("nonzero").divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], &weights);
        let r = reduce(&s, &basis, order);
        if !r.is_zero() {
            insert(&mut basis, &mut pending, r);
        }
    }

    GroebnerBasis { order, gens: gens.clone(), elements: interreduce(basis, order), source }
}

fn pair_lcm(basis: &[Polynomial], (i, j): (usize, usize), weights: &[u32]) -> Monomial {
    let a = basis[i].leading_monomial().expect("nonzero");
    let b = basis[j].leading_monomial().expect("nonzero");
    a.lcm(b, weights)
}

fn interreduce(basis: Vec<Polynomial>, order: MonomialOrder) -> Vec<Polynomial> {
    // Keep only elements whose leading monomial is minimal; among equal
    // leading monomials the earliest survives.
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let other = h.leading_monomial().expect("nonzero");
            j != i && other.divides(lm) && (other != lm || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let (lm, lc) = minimal[i].leading_term().expect("nonzero");
        let lead = Polynomial::from_term(minimal[i].generators(), lm.clone(), lc.clone());
        let tail = &minimal[i] - &lead;
        let g = &lead + &reduce(&tail, &others, order);
        reduced.push(g.monic());
    }
    reduced.sort_by(|a, b| order.compare(a.leading_monomial().expect("nonzero"), b.leading_monomial().expect("nonzero")));
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::expand_chern_identity;

    fn xy() -> Arc<GeneratorSet> {
        GeneratorSet::new([("x", 1), ("y", 2)]).unwrap()
    }

    fn v(gens: &Arc<GeneratorSet>, name: &str) -> Polynomial {
        Polynomial::generator(gens, name).unwrap()
    }

    #[test]
    fn reduce_simple() {
        let gens = xy();
        let (x, y) = (v(&gens, "x"), v(&gens, "y"));
        let order = MonomialOrder::default();
        assert!(reduce(&(&x * &x), std::slice::from_ref(&x), order).is_zero());
        assert_eq!(reduce(&(&(&x * &x) + &y), std::slice::from_ref(&x), order), y);
    }

    #[test]
    fn buchberger_single_generators() {
        let gens = xy();
        let x = v(&gens, "x");
        let gb = buchberger(&gens, std::slice::from_ref(&x), MonomialOrder::default());
        assert_eq!(gb.elements(), std::slice::from_ref(&x));

        // Generator order decides the lex tie-break: with lambda2 listed
        // first, lambda2 leads 2*lambda2 - lambda1^2.
        let gens = GeneratorSet::new([("lambda2", 2), ("lambda1", 1)]).unwrap();
        let (l1, l2) = (v(&gens, "lambda1"), v(&gens, "lambda2"));
        let rel = &l2.scale(&Rational::from(2)) - &(&l1 * &l1);
        let gb = buchberger(&gens, std::slice::from_ref(&rel), MonomialOrder::default());
        assert_eq!(gb.elements(), &[&l2 - &(&l1 * &l1).scale(&Rational::new(1, 2))]);

        let gens = GeneratorSet::new([("lambda1", 1), ("lambda2", 2)]).unwrap();
        let (l1, l2) = (v(&gens, "lambda1"), v(&gens, "lambda2"));
        let rel = &l2.scale(&Rational::from(2)) - &(&l1 * &l1);
        let gb = buchberger(&gens, std::slice::from_ref(&rel), MonomialOrder::default());
        assert_eq!(gb.elements(), &[&(&l1 * &l1) - &l2.scale(&Rational::from(2))]);
    }

    #[test]
    fn unit_ideal_and_zero_generators() {
        let gens = xy();
        let (x, y) = (v(&gens, "x"), v(&gens, "y"));
        let one = Polynomial::one(&gens);
        let gb = buchberger(&gens, &[&x - &one, x.clone()], MonomialOrder::default());
        assert!(gb.is_unit_ideal());
        assert_eq!(gb.elements(), &[one]);
        let gb = buchberger(&gens, &[Polynomial::zero(&gens), y.clone()], MonomialOrder::default());
        assert_eq!(gb.elements(), &[y]);
    }

    #[test]
    fn textbook_example_is_reduced() {
        // x^3 - 2xy, x^2 y - 2y^2 + x with unit weights
        let gens = GeneratorSet::new([("x", 1), ("y", 1)]).unwrap();
        let (x, y) = (v(&gens, "x"), v(&gens, "y"));
        let two = Rational::from(2);
        let f = &x.pow(3) - &(&x * &y).scale(&two);
        let g = &(&(&x * &x) * &y) - &(&(&y * &y).scale(&two) - &x);
        let gb = buchberger(&gens, &[f.clone(), g.clone()], MonomialOrder::default());
        assert!(gb.verify());
        assert!(gb.contains(&f) && gb.contains(&g));
        // Known reduced basis for grlex x > y: x^2, xy, y^2 - x/2.
        let half = Rational::new(1, 2);
        let expected = vec![&(&y * &y) - &x.scale(&half), &x * &y, &x * &x];
        assert_eq!(gb.elements(), expected.as_slice());
    }

    #[test]
    fn hodge_ideal_memberships() {
        let gens = GeneratorSet::new([("lambda1", 1), ("lambda2", 2), ("lambda3", 3)]).unwrap();
        let rels = expand_chern_identity(&gens, 3).unwrap();
        let gb = buchberger(&gens, &rels, MonomialOrder::default());
        assert!(gb.verify());
        let (l1, l3) = (v(&gens, "lambda1"), v(&gens, "lambda3"));
        assert!(ideal_membership(&(&l3 * &l3), &gb));
        assert!(ideal_membership(&(&l1.pow(4) - &(&l1 * &l3).scale(&Rational::from(8))), &gb));
        assert!(!ideal_membership(&l1, &gb));
        assert!(gb.elements().iter().all(Polynomial::is_homogeneous));
    }

    #[test]
    fn reduce_with_any_choice_agrees_on_gb() {
        let gens = GeneratorSet::new([("lambda1", 1), ("lambda2", 2), ("lambda3", 3)]).unwrap();
        let rels = expand_chern_identity(&gens, 3).unwrap();
        let gb = buchberger(&gens, &rels, MonomialOrder::default());
        let p = v(&gens, "lambda1").pow(5);
        let last = reduce_with(&p, gb.elements(), |c| *c.last().unwrap());
        assert_eq!(last, gb.reduce(&p));
    }
}
