mod common;

use chow_core::groebner::reduce_with;
use chow_core::{catalog, Polynomial};
use common::{build, build_homogeneous, raw_homogeneous, raw_poly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn pushforward_is_well_defined(a in raw_homogeneous(7, 6), h in prop::collection::vec(raw_poly(2, 3), 3), seed in any::<u64>()) {
        let x2 = catalog::ring("x2_tilde").unwrap();
        let rel = x2.relative.as_ref().unwrap();
        let gens = rel.ring.generators();
        let p = build_homogeneous(&a, gens);
        let expected = rel.ring.pushforward(&rel.rule, &p).unwrap();
        let relations: Vec<Polynomial> = rel.ring.total().presentation().relations().iter().filter(|r| !r.is_zero()).cloned().collect();
        let mut representative = p.clone();
        for (raw, r) in h.iter().zip(&relations) {
            representative = &representative + &(&build(raw, gens) * r);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let path = reduce_with(&representative, &relations, |c| c[rng.gen_range(0..c.len())]);
        prop_assert_eq!(rel.ring.pushforward(&rel.rule, &representative).unwrap(), expected.clone());
        prop_assert_eq!(rel.ring.pushforward(&rel.rule, &path).unwrap(), expected);
    }

    #[test]
    fn projection_formula(a in raw_homogeneous(5, 4), b in raw_homogeneous(3, 4)) {
        let x2 = catalog::ring("x2_tilde").unwrap();
        let rel = x2.relative.as_ref().unwrap();
        let p = build_homogeneous(&a, rel.ring.generators());
        let base = build_homogeneous(&b, rel.ring.base().generators());
        let lhs = rel.ring.pushforward(&rel.rule, &(&rel.ring.base_pullback(&base).unwrap() * &p)).unwrap();
        let rhs = rel.ring.base().normal_form(&(&base * &rel.ring.pushforward(&rel.rule, &p).unwrap()));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn surface_bookkeeping() {
    let x2 = catalog::ring("x2_tilde").unwrap();
    let rel = x2.relative.as_ref().unwrap();
    let push = |e: &str| rel.ring.pushforward(&rel.rule, &x2.parse(e).unwrap()).unwrap();
    let base = &rel.base;
    assert_eq!(push("t^2"), Polynomial::constant(base.ring.generators(), chow_core::Rational::from(2)));
    assert_eq!(push("t^2"), &push("s") + &push("s"));
    assert!(base.ring.classes_equal(&push("t^3"), &base.parse("(1/4)*sigma1").unwrap()).unwrap());
    assert!(push("t").is_zero());
    assert_eq!(rel.ring.module_basis().len(), 3);
}

#[test]
fn torelli_table_is_internally_consistent() {
    let g3 = catalog::ring("a3_tilde").unwrap();
    let t = g3.pushforward("torelli").unwrap();
    let eta1 = t.push_combination(&t.parse_combination("eta1").unwrap()).unwrap();
    let d = t.push_combination(&t.parse_combination("-3*delta1_sq").unwrap()).unwrap();
    assert!(g3.ring.classes_equal(&eta1, &d).unwrap());
    assert!(t.parse_combination("xi0*xi1").is_err());
    assert!(t.push_combination(&t.parse_combination("xi0 + Qa").unwrap()).is_err());
}
