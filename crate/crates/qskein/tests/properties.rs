//! Property tests for the polynomial ring: exact ring axioms on random
//! triples, grammar round trips, and the substitution involution.

use proptest::prelude::*;

use qskein::homfly::{parse_homfly, render_homfly, HomflyPoly};
use qskein::poly::{parse_hpoly, render_flat, render_grouped, HPoly, QLaurent, QSubst};

fn qlaurent_strategy() -> impl Strategy<Value = QLaurent> {
    prop::collection::vec(((-8i64..=8), (-9i64..=9)), 0..6)
        .prop_map(|terms| QLaurent::from_terms(terms.into_iter().map(|(e, c)| (e, c.into()))))
}

fn hpoly_strategy() -> impl Strategy<Value = HPoly> {
    prop::collection::vec(((0u32..4), (0u32..4), qlaurent_strategy()), 0..5).prop_map(|terms| {
        let mut p = HPoly::zero();
        for (dt, dz, c) in terms {
            p.add_term(dt, dz, &c);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn qlaurent_ring_axioms(a in qlaurent_strategy(), b in qlaurent_strategy(), c in qlaurent_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn hpoly_ring_axioms(a in hpoly_strategy(), b in hpoly_strategy(), c in hpoly_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }
}

proptest! {
    #[test]
    fn parse_render_roundtrip(p in hpoly_strategy()) {
        prop_assert_eq!(&parse_hpoly(&render_flat(&p)).unwrap(), &p);
        prop_assert_eq!(&parse_hpoly(&render_grouped(&p)).unwrap(), &p);
        // rendering is a fixed point of parse-then-render
        let flat = render_flat(&p);
        prop_assert_eq!(render_flat(&parse_hpoly(&flat).unwrap()), flat);
    }

    #[test]
    fn homfly_parse_render_roundtrip(terms in prop::collection::vec(((-4i64..=4), qlaurent_strategy()), 0..5)) {
        let mut p = HomflyPoly::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        prop_assert_eq!(&parse_homfly(&render_homfly(&p)).unwrap(), &p);
    }

    #[test]
    fn neg_inverse_is_an_involution(p in hpoly_strategy()) {
        prop_assert_eq!(
            p.substitute_q(QSubst::NegInverse).substitute_q(QSubst::NegInverse),
            p
        );
    }

    #[test]
    fn substitutions_commute_with_multiplication(a in hpoly_strategy(), b in hpoly_strategy()) {
        let product = &a * &b;
        for mode in [QSubst::One, QSubst::NegInverse] {
            prop_assert_eq!(
                product.substitute_q(mode),
                a.substitute_q(mode) * b.substitute_q(mode)
            );
        }
    }
}
