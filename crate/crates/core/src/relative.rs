//! Rings that are free modules over a base ring, base-linear pushforwards to
//! the base, and tabulated (non-multiplicative) pushforwards.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graded::{DegreeFunctional, QuotientRing, RingPresentation};
use crate::parse::parse;
use crate::poly::{GeneratorSet, Monomial, Polynomial};
use crate::rational::Rational;

/// A ring `base[fiber generators] / (base relations + fiber relations)`
/// that is free over the base on a finite set of fiber monomials.
#[derive(Debug)]
pub struct RelativeRing {
    base: Arc<QuotientRing>,
    total: Arc<QuotientRing>,
    fiber_count: usize,
    module_basis: Vec<Monomial>,
}

impl RelativeRing {
    /// Fiber generators come first in the combined generator order, so that
    /// fiber monomials dominate and normal forms expose the module basis.
    pub fn new(name: impl Into<String>, base: Arc<QuotientRing>, fiber: &[(&str, u32)], fiber_relations: &[&str]) -> Result<Self> {
        let gens = GeneratorSet::new(
            fiber.iter().map(|(n, w)| (n.to_string(), *w)).chain(base.generators().iter().map(|g| (g.name.clone(), g.weight))),
        )?;
        let mut relations = Vec::new();
        for r in base.presentation().relations() {
            relations.push(r.embed(&gens)?);
        }
        for text in fiber_relations {
            relations.push(parse(text, &gens)?);
        }
        let total = Arc::new(QuotientRing::new(RingPresentation::new(name, gens, relations, None)?));
        let mut ring = RelativeRing { base, total, fiber_count: fiber.len(), module_basis: Vec::new() };
        ring.module_basis = ring.check_free()?;
        Ok(ring)
    }

    fn split(&self, m: &Monomial) -> (Monomial, Monomial) {
        let (f, b) = m.exponents().split_at(self.fiber_count);
        let mut fiber_exps = f.to_vec();
        fiber_exps.resize(m.exponents().len(), 0);
        (
            Monomial::from_exponents(fiber_exps, &self.total.generators().weights()),
            Monomial::from_exponents(b.to_vec(), &self.base.generators().weights()),
        )
    }

    /// Every standard monomial must be (module generator) × (base standard
    /// monomial), and every such product must be standard.
    fn check_free(&self) -> Result<Vec<Monomial>> {
        let top = self.total.top_degree().ok_or_else(|| Error::NotFreeOverBase("ring is not finite dimensional".into()))?;
        let mut fiber_parts: Vec<Monomial> = Vec::new();
        for d in 0..=top {
            for m in self.total.standard_monomials(d).iter() {
                let (f, b) = self.split(m);
                if !self.base.groebner().is_standard(&b) {
                    return Err(Error::NotFreeOverBase(m.render(self.total.generators())));
                }
                if !fiber_parts.contains(&f) {
                    fiber_parts.push(f);
                }
            }
        }
        fiber_parts.sort();
        for d in 0..=top {
            let expected: usize = fiber_parts.iter().filter(|f| f.degree() <= d).map(|f| self.base.rank(d - f.degree())).sum();
            if expected != self.total.rank(d) {
                return Err(Error::NotFreeOverBase(format!("rank mismatch in degree {d}")));
            }
        }
        Ok(fiber_parts)
    }

    pub fn base(&self) -> &Arc<QuotientRing> {
        &self.base
    }

    pub fn total(&self) -> &Arc<QuotientRing> {
        &self.total
    }

    pub fn generators(&self) -> &Arc<GeneratorSet> {
        self.total.generators()
    }

    /// Fiber monomials spanning the ring over the base, ascending.
    pub fn module_basis(&self) -> &[Monomial] {
        &self.module_basis
    }

    pub fn relative_reduce(&self, p: &Polynomial) -> Polynomial {
        self.total.normal_form(p)
    }

    /// Coefficients over the base, one per module basis element.
    pub fn decompose(&self, p: &Polynomial) -> Result<Vec<Polynomial>> {
        if p.generators() != self.generators() {
            return Err(Error::GeneratorMismatch);
        }
        let base_gens = self.base.generators();
        let mut parts = vec![Polynomial::zero(base_gens); self.module_basis.len()];
        for (m, c) in self.relative_reduce(p).terms() {
            let (f, b) = self.split(m);
            let slot = self.module_basis.iter().position(|x| *x == f).expect("free module basis");
            parts[slot].add_term(b, c);
        }
        Ok(parts)
    }

    /// `π★(p)`, reduced in the base.
    pub fn pushforward(&self, rule: &PushforwardRule, p: &Polynomial) -> Result<Polynomial> {
        let parts = self.decompose(p)?;
        let mut out = Polynomial::zero(self.base.generators());
        for (f, coeff) in self.module_basis.iter().zip(parts) {
            let image = rule.image(&f.render(self.generators()))?;
            if !image.is_zero() {
                out = &out + &coeff.scale(&image);
            }
        }
        Ok(self.base.normal_form(&out))
    }

    /// `degree(π★(p))` for `p` of degree `top + shift`.
    pub fn relative_degree(&self, rule: &PushforwardRule, functional: &DegreeFunctional, p: &Polynomial) -> Result<Rational> {
        let expected = functional.top_degree() + rule.shift();
        if let Some(d) = p.homogeneous_degree()? {
            if d != expected {
                return Err(Error::WrongDegree { expected, found: d });
            }
        }
        self.base.degree(functional, &self.pushforward(rule, p)?)
    }

    pub fn base_pullback(&self, b: &Polynomial) -> Result<Polynomial> {
        if b.generators() != self.base.generators() {
            return Err(Error::GeneratorMismatch);
        }
        b.embed(self.generators())
    }
}

/// Images of the module basis under a base-linear pushforward, keyed by the
/// rendered fiber monomial (`"1"`, `"t"`, `"s"`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushforwardRule {
    images: BTreeMap<String, Rational>,
    shift: u32,
}

impl PushforwardRule {
    pub fn new<S: Into<String>>(images: impl IntoIterator<Item = (S, Rational)>, shift: u32) -> Self {
        PushforwardRule { images: images.into_iter().map(|(k, v)| (k.into(), v)).collect(), shift }
    }

    /// `π★(1) = 0`, `π★(t) = 0`, `π★(s) = 1`, shift 2.
    pub fn surface() -> Self {
        PushforwardRule::new([("1", Rational::zero()), ("t", Rational::zero()), ("s", Rational::one())], 2)
    }

    pub fn shift(&self) -> u32 {
        self.shift
    }

    pub fn images(&self) -> &BTreeMap<String, Rational> {
        &self.images
    }

    fn image(&self, fiber_monomial: &str) -> Result<Rational> {
        self.images.get(fiber_monomial).cloned().ok_or_else(|| Error::MissingImage(fiber_monomial.to_string()))
    }
}

/// A linear map given by the images of formal symbols. Symbols carry a
/// degree; images must have degree `symbol degree + shift`.
#[derive(Debug, Clone)]
pub struct TabulatedPushforward {
    name: String,
    target: Arc<QuotientRing>,
    shift: i32,
    symbols: BTreeMap<String, (u32, Polynomial)>,
}

impl TabulatedPushforward {
    pub fn new(name: impl Into<String>, target: Arc<QuotientRing>, shift: i32) -> Self {
        TabulatedPushforward { name: name.into(), target, shift, symbols: BTreeMap::new() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn target(&self) -> &Arc<QuotientRing> {
        &self.target
    }

    pub fn insert(&mut self, symbol: impl Into<String>, degree: u32, image: Polynomial) -> Result<()> {
        let symbol = symbol.into();
        if image.generators() != self.target.generators() {
            return Err(Error::GeneratorMismatch);
        }
        let expected = u32::try_from(degree as i64 + self.shift as i64).map_err(|_| Error::WrongDegree { expected: 0, found: degree })?;
        if let Some(found) = image.homogeneous_degree()? {
            if found != expected {
                return Err(Error::ImageDegree { symbol, expected, found });
            }
        }
        self.symbols.insert(symbol, (degree, image));
        Ok(())
    }

    pub fn symbols(&self) -> impl Iterator<Item = (&str, u32, &Polynomial)> {
        self.symbols.iter().map(|(k, (d, p))| (k.as_str(), *d, p))
    }

    pub fn image(&self, symbol: &str) -> Option<&Polynomial> {
        self.symbols.get(symbol).map(|(_, p)| p)
    }

    /// Linear extension of the table over `Σ cᵢ·symbolᵢ`.
    pub fn push_combination<S: AsRef<str>>(&self, combo: &[(Rational, S)]) -> Result<Polynomial> {
        let mut degree = None;
        let mut out = Polynomial::zero(self.target.generators());
        for (c, symbol) in combo {
            let symbol = symbol.as_ref();
            let (d, image) = self.symbols.get(symbol).ok_or_else(|| Error::UnknownSymbol(symbol.to_string()))?;
            if *degree.get_or_insert(*d) != *d {
                return Err(Error::MixedDegrees);
            }
            out = &out + &image.scale(c);
        }
        Ok(out)
    }

    /// Parses `"xi0 + 2*xi1"` style text into a combination of symbols.
    pub fn parse_combination(&self, text: &str) -> Result<Vec<(Rational, String)>> {
        let gens = GeneratorSet::new(self.symbols.iter().map(|(k, (d, _))| (k.clone(), (*d).max(1))))?;
        let p = parse(text, &gens)?;
        p.terms()
            .rev()
            .map(|(m, c)| {
                let mut hit = m.exponents().iter().enumerate().filter(|(_, e)| **e > 0);
                match (hit.next(), hit.next()) {
                    (Some((i, 1)), None) => Ok((c.clone(), gens.get(i).name.clone())),
                    _ => Err(Error::NonLinearCombination(text.to_string())),
                }
            })
            .collect()
    }

    pub fn verify_pushforward_identity<S: AsRef<str>>(&self, combo: &[(Rational, S)], expected: &Polynomial) -> Result<bool> {
        let pushed = self.push_combination(combo)?;
        self.target.classes_equal(&pushed, expected)
    }
}

/// Images as a map suitable for [`Polynomial::substitute`].
pub fn images_by_name(tp: &TabulatedPushforward) -> HashMap<String, Polynomial> {
    tp.symbols.iter().map(|(k, (_, p))| (k.clone(), p.clone())).collect()
}
