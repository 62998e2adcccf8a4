//! Covering degrees and cusp counts of full level-ℓ structures.

use serde::{Deserialize, Serialize};

use crate::rational::{prime_divisors, Rational};

/// Which product enters the cusp count `μ_g(ℓ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MuConvention {
    /// `(1/2) ℓ^{2g} ∏_{p|ℓ} ∏_{j=1..g} (1 − p^{−2j})`
    AsPrinted,
    /// `(1/2) ℓ^{2g} ∏_{p|ℓ} (1 − p^{−2g})`
    SingleFactor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelIndex {
    pub genus: u32,
    pub level: u64,
    pub primes: Vec<u64>,
}

impl LevelIndex {
    pub fn new(genus: u32, level: u64) -> Self {
        assert!(level >= 1, "level must be positive");
        LevelIndex { genus, level, primes: prime_divisors(level) }
    }

    fn ell(&self) -> Rational {
        Rational::from(self.level as i64)
    }

    fn factor(p: u64, j: u32) -> Rational {
        Rational::one() - Rational::from(p as i64).pow(-2 * j as i32)
    }

    /// Order of `Sp(2g, Z/ℓ)`.
    pub fn gamma(&self) -> Rational {
        let g = self.genus;
        let mut out = self.ell().pow((g * (2 * g + 1)) as i32);
        for &p in &self.primes {
            for j in 1..=g {
                out = &out * &Self::factor(p, j);
            }
        }
        out
    }

    pub fn mu(&self, convention: MuConvention) -> Rational {
        let g = self.genus;
        let mut out = Rational::new(1, 2) * self.ell().pow(2 * g as i32);
        for &p in &self.primes {
            match convention {
                MuConvention::AsPrinted => {
                    for j in 1..=g {
                        out = &out * &Self::factor(p, j);
                    }
                }
                MuConvention::SingleFactor => out = &out * &Self::factor(p, g),
            }
        }
        out
    }
}

pub fn group_order_gamma(genus: u32, level: u64) -> Rational {
    LevelIndex::new(genus, level).gamma()
}

pub fn cusp_count_mu(genus: u32, level: u64, convention: MuConvention) -> Rational {
    LevelIndex::new(genus, level).mu(convention)
}

/// Both sides of `(1/3) ℓ μ₁(ℓ) μ₂(ℓ) = (1/12) γ₂(ℓ) / ℓ³`.
pub fn level_identity_sides(level: u64, convention: MuConvention) -> (Rational, Rational) {
    let ell = Rational::from(level as i64);
    let lhs = Rational::new(1, 3) * &ell * cusp_count_mu(1, level, convention) * cusp_count_mu(2, level, convention);
    let rhs = Rational::new(1, 12) * group_order_gamma(2, level) / ell.pow(3);
    (lhs, rhs)
}

/// The zero-dimensional strata count identity, single-factor convention.
pub fn verify_level_identity(level: u64) -> bool {
    let (lhs, rhs) = level_identity_sides(level, MuConvention::SingleFactor);
    lhs == rhs
}
