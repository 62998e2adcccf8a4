mod common;

use chow_core::groebner::reduce_with;
use chow_core::{catalog, Polynomial};
use common::{build, build_homogeneous, raw_homogeneous, raw_poly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn normal_form_idempotent_and_congruent(a in raw_poly(3, 5), b in raw_poly(3, 5)) {
        for r in catalog().rings() {
            let gens = r.ring.generators();
            let (p, q) = (build(&a, gens), build(&b, gens));
            let np = r.ring.normal_form(&p);
            prop_assert_eq!(r.ring.normal_form(&np), np.clone(), "ring {}", r.name());
            let nq = r.ring.normal_form(&q);
            prop_assert_eq!(r.ring.normal_form(&(&p * &q)), r.ring.normal_form(&(&np * &nq)), "ring {}", r.name());
            prop_assert!(r.ring.groebner().contains(&(&p - &np)));
        }
    }

    #[test]
    fn normal_form_preserves_degree(a in raw_homogeneous(8, 5)) {
        for r in catalog().rings() {
            let p = build_homogeneous(&a, r.ring.generators());
            let nf = r.ring.normal_form(&p);
            prop_assert!(nf.is_zero() || (nf.is_homogeneous() && nf.weighted_degree() == p.weighted_degree()));
        }
    }

    #[test]
    fn reduction_is_confluent(a in raw_homogeneous(8, 6), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for r in catalog().rings() {
            let gb = r.ring.groebner();
            let p = build_homogeneous(&a, r.ring.generators());
            let expected = gb.reduce(&p);
            let shuffled = reduce_with(&p, gb.elements(), |c| c[rng.gen_range(0..c.len())]);
            prop_assert_eq!(gb.reduce(&shuffled), expected.clone());
            let mut sources = gb.source().to_vec();
            sources.retain(|s| !s.is_zero());
            let partial = reduce_with(&p, &sources, |c| c[rng.gen_range(0..c.len())]);
            prop_assert_eq!(gb.reduce(&partial), expected, "ring {}", r.name());
        }
    }
}

#[test]
fn bases_verify() {
    for r in catalog().rings() {
        assert!(r.ring.groebner().verify(), "{}", r.name());
        assert!(!r.ring.groebner().is_unit_ideal(), "{}", r.name());
        let zero = Polynomial::zero(r.ring.generators());
        assert!(r.ring.is_zero_class(&zero).unwrap());
    }
}
