//! Graded quotient rings `Q[generators] / (relations)`.
//!
//! A [`QuotientRing`] owns the reduced Gröbner basis of its relation ideal.
//! Each graded piece has the standard monomials of that degree as its basis,
//! listed in descending monomial order. A [`DegreeFunctional`] integrates
//! classes of the top degree once the top piece is known to have rank one.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis, MonomialOrder};
use crate::linalg::{self, Matrix, Solution};
use crate::poly::{expand_chern_identity, GeneratorSet, Monomial, Polynomial};
use crate::rational::Rational;

/// Largest degree scanned when looking for the top of a graded ring.
const DEGREE_SCAN_LIMIT: u32 = 256;

/// Generators, weights and homogeneous relations of a graded ring.
#[derive(Debug, Clone)]
pub struct RingPresentation {
    name: String,
    gens: Arc<GeneratorSet>,
    relations: Vec<Polynomial>,
    chern_identity_genus: Option<u32>,
}

impl RingPresentation {
    /// Relations must be homogeneous. With `chern_identity_genus`, the
    /// homogeneous parts of the Hodge-bundle identity are appended.
    pub fn new(
        name: impl Into<String>,
        gens: Arc<GeneratorSet>,
        relations: Vec<Polynomial>,
        chern_identity_genus: Option<u32>,
    ) -> Result<Self> {
        for (index, r) in relations.iter().enumerate() {
            if r.generators() != &gens {
                return Err(Error::GeneratorMismatch);
            }
            if !r.is_homogeneous() {
                return Err(Error::InhomogeneousRelation { index, expr: r.to_string() });
            }
        }
        let mut relations = relations;
        if let Some(genus) = chern_identity_genus {
            relations.extend(expand_chern_identity(&gens, genus)?);
        }
        Ok(RingPresentation { name: name.into(), gens, relations, chern_identity_genus })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &Arc<GeneratorSet> {
        &self.gens
    }

    /// Explicit relations followed by any expanded Chern-identity parts.
    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn chern_identity_genus(&self) -> Option<u32> {
        self.chern_identity_genus
    }
}

/// A presented graded ring with its Gröbner basis and per-degree bases.
#[derive(Debug)]
pub struct QuotientRing {
    presentation: RingPresentation,
    gb: GroebnerBasis,
    bases: Mutex<HashMap<u32, Arc<Vec<Monomial>>>>,
}

impl QuotientRing {
    pub fn new(presentation: RingPresentation) -> Self {
        let gb = buchberger(presentation.generators(), presentation.relations(), MonomialOrder::default());
        QuotientRing { presentation, gb, bases: Mutex::new(HashMap::new()) }
    }

    pub fn name(&self) -> &str {
        self.presentation.name()
    }

    pub fn presentation(&self) -> &RingPresentation {
        &self.presentation
    }

    pub fn generators(&self) -> &Arc<GeneratorSet> {
        self.presentation.generators()
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        self.gb.reduce(p)
    }

    fn same_ring(&self, p: &Polynomial) -> Result<()> {
        if p.generators() == self.generators() {
            Ok(())
        } else {
            Err(Error::GeneratorMismatch)
        }
    }

    /// Basis of the degree-`d` piece: standard monomials, descending.
    pub fn standard_monomials(&self, d: u32) -> Arc<Vec<Monomial>> {
        if let Some(hit) = self.bases.lock().expect("basis cache poisoned").get(&d) {
            return hit.clone();
        }
        let mut basis: Vec<Monomial> = self.generators().monomials_of_degree(d).into_iter().filter(|m| self.gb.is_standard(m)).collect();
        basis.reverse();
        let basis = Arc::new(basis);
        // Another thread may have filled the slot meanwhile; both values are equal.
        self.bases.lock().expect("basis cache poisoned").entry(d).or_insert(basis).clone()
    }

    pub fn rank(&self, d: u32) -> usize {
        self.standard_monomials(d).len()
    }

    pub fn hilbert_function(&self, max_degree: u32) -> Vec<usize> {
        (0..=max_degree).map(|d| self.rank(d)).collect()
    }

    /// True when every generator has a pure power among the leading
    /// monomials, i.e. the quotient is finite dimensional.
    pub fn is_finite_dimensional(&self) -> bool {
        let n = self.generators().len();
        (0..n).all(|i| {
            self.gb.leading_monomials().any(|lm| lm.exponents().iter().enumerate().all(|(j, &e)| if j == i { e > 0 } else { e == 0 }))
        })
    }

    /// Highest degree with a nonzero piece, for finite-dimensional rings.
    pub fn top_degree(&self) -> Option<u32> {
        if !self.is_finite_dimensional() || self.gb.is_unit_ideal() {
            return None;
        }
        let window = self.generators().max_weight();
        let mut top = 0;
        let mut zeros = 0;
        for d in 0..=DEGREE_SCAN_LIMIT {
            if self.rank(d) > 0 {
                top = d;
                zeros = 0;
            } else {
                zeros += 1;
                if zeros >= window {
                    return Some(top);
                }
            }
        }
        None
    }

    /// Coordinates of a homogeneous class of degree `d` on the degree-`d`
    /// standard basis.
    pub fn coordinates(&self, p: &Polynomial, d: u32) -> Result<Vec<Rational>> {
        self.same_ring(p)?;
        match p.homogeneous_degree()? {
            Some(e) if e != d => return Err(Error::WrongDegree { expected: d, found: e }),
            _ => {}
        }
        let nf = self.normal_form(p);
        Ok(self.standard_monomials(d).iter().map(|m| nf.coefficient(m)).collect())
    }

    /// The class `Σ coordsᵢ · basisᵢ` in degree `d`.
    pub fn class_from_coordinates(&self, d: u32, coords: &[Rational]) -> Polynomial {
        let basis = self.standard_monomials(d);
        Polynomial::from_terms(self.generators(), basis.iter().cloned().zip(coords.iter().cloned()))
    }

    pub fn classes_equal(&self, p: &Polynomial, q: &Polynomial) -> Result<bool> {
        self.same_ring(p)?;
        self.same_ring(q)?;
        Ok(self.gb.contains(&(p - q)))
    }

    pub fn is_zero_class(&self, p: &Polynomial) -> Result<bool> {
        self.same_ring(p)?;
        Ok(self.gb.contains(p))
    }

    /// `degree(ring, functional, p)`: value of the functional on a
    /// homogeneous class of the top degree. Zero maps to zero.
    pub fn degree(&self, functional: &DegreeFunctional, p: &Polynomial) -> Result<Rational> {
        self.same_ring(p)?;
        match p.homogeneous_degree()? {
            None => Ok(Rational::zero()),
            Some(d) if d != functional.top_degree => Err(Error::WrongDegree { expected: functional.top_degree, found: d }),
            Some(_) => Ok(functional.evaluate_normal_form(&self.normal_form(p))),
        }
    }

    /// Total version of [`QuotientRing::degree`]: only the top-degree part
    /// of `p` contributes.
    pub fn integrate(&self, functional: &DegreeFunctional, p: &Polynomial) -> Result<Rational> {
        self.same_ring(p)?;
        let top = p.homogeneous_part(functional.top_degree);
        Ok(functional.evaluate_normal_form(&self.normal_form(&top)))
    }

    /// Entry `(i, j)` is `degree(rowsᵢ · colsⱼ)`; rows have degree `k`,
    /// columns degree `D − k`.
    pub fn pairing_matrix(&self, functional: &DegreeFunctional, k: u32, rows: &[Polynomial], cols: &[Polynomial]) -> Result<Matrix> {
        let top = functional.top_degree;
        if k > top {
            return Err(Error::WrongDegree { expected: top, found: k });
        }
        for r in rows {
            self.check_degree(r, k)?;
        }
        for c in cols {
            self.check_degree(c, top - k)?;
        }
        rows.iter().map(|r| cols.iter().map(|c| self.degree(functional, &(r * c))).collect()).collect()
    }

    fn check_degree(&self, p: &Polynomial, d: u32) -> Result<()> {
        self.same_ring(p)?;
        match p.homogeneous_degree()? {
            Some(e) if e != d => Err(Error::WrongDegree { expected: d, found: e }),
            _ => Ok(()),
        }
    }

    /// The unique degree-`k` class `X` with `degree(X · probeᵢ) = valueᵢ`.
    /// More probes than the rank are allowed and checked for consistency.
    pub fn solve_class_from_pairings(
        &self,
        functional: &DegreeFunctional,
        k: u32,
        probes: &[Polynomial],
        values: &[Rational],
    ) -> Result<Polynomial> {
        if probes.len() != values.len() {
            return Err(Error::LengthMismatch { probes: probes.len(), values: values.len() });
        }
        let basis: Vec<Polynomial> =
            self.standard_monomials(k).iter().map(|m| Polynomial::monomial(self.generators(), m.clone())).collect();
        let matrix = self.pairing_matrix(functional, k, &basis, probes)?;
        match linalg::solve(&linalg::transpose(&matrix), values) {
            Solution::Unique(coords) => Ok(self.class_from_coordinates(k, &coords)),
            Solution::Singular { rank } => Err(Error::SingularPairing { rank, expected: basis.len() }),
            Solution::Inconsistent { row } => Err(Error::InconsistentPairings { probe: row }),
        }
    }
}

/// Given maps `forward: a → b` and `backward: b → a` on generators, decide
/// whether they are mutually inverse graded isomorphisms of the quotients.
pub fn presentations_equivalent(
    a: &QuotientRing,
    b: &QuotientRing,
    forward: &HashMap<String, Polynomial>,
    backward: &HashMap<String, Polynomial>,
) -> Result<bool> {
    let graded = |src: &QuotientRing, map: &HashMap<String, Polynomial>, dst: &QuotientRing| -> Result<bool> {
        for g in src.generators().iter() {
            let image = map.get(&g.name).ok_or_else(|| Error::MissingImage(g.name.clone()))?;
            if image.generators() != dst.generators() {
                return Err(Error::GeneratorMismatch);
            }
            if !image.is_homogeneous() || image.weighted_degree().is_some_and(|d| d != g.weight) {
                return Ok(false);
            }
        }
        Ok(true)
    };
    if !graded(a, forward, b)? || !graded(b, backward, a)? {
        return Ok(false);
    }
    for r in a.presentation().relations() {
        if !b.is_zero_class(&r.substitute(forward, b.generators())?)? {
            return Ok(false);
        }
    }
    for r in b.presentation().relations() {
        if !a.is_zero_class(&r.substitute(backward, a.generators())?)? {
            return Ok(false);
        }
    }
    for g in a.generators().iter() {
        let there = forward[&g.name].substitute(backward, a.generators())?;
        if !a.classes_equal(&there, &Polynomial::generator(a.generators(), &g.name)?)? {
            return Ok(false);
        }
    }
    for g in b.generators().iter() {
        let there = backward[&g.name].substitute(forward, b.generators())?;
        if !b.classes_equal(&there, &Polynomial::generator(b.generators(), &g.name)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Integration on the top graded piece, pinned by one value.
#[derive(Debug, Clone)]
pub struct DegreeFunctional {
    top_degree: u32,
    reference: Polynomial,
    value: Rational,
    basis_monomial: Monomial,
    /// coefficient of `basis_monomial` in the normal form of `reference`
    reference_coordinate: Rational,
}

impl DegreeFunctional {
    /// `degree(reference) = value`. The reference's degree must be the top
    /// degree of the ring and that piece must have rank one.
    pub fn new(ring: &QuotientRing, reference: Polynomial, value: Rational) -> Result<Self> {
        ring.same_ring(&reference)?;
        let top_degree = reference.homogeneous_degree()?.ok_or(Error::ReferenceVanishes)?;
        let basis = ring.standard_monomials(top_degree);
        if basis.len() != 1 {
            return Err(Error::TopRankNotOne(basis.len()));
        }
        if (top_degree + 1..=top_degree + ring.generators().max_weight()).any(|d| ring.rank(d) > 0) {
            return Err(Error::NotTopDegree(top_degree));
        }
        let basis_monomial = basis[0].clone();
        let reference_coordinate = ring.normal_form(&reference).coefficient(&basis_monomial);
        if reference_coordinate.is_zero() {
            return Err(Error::ReferenceVanishes);
        }
        Ok(DegreeFunctional { top_degree, reference, value, basis_monomial, reference_coordinate })
    }

    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    pub fn reference(&self) -> &Polynomial {
        &self.reference
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    fn evaluate_normal_form(&self, nf: &Polynomial) -> Rational {
        &(&nf.coefficient(&self.basis_monomial) / &self.reference_coordinate) * &self.value
    }
}
