use std::collections::BTreeMap;

use proptest::prelude::*;
use wschur_core::local::{substitute, DenomGen, LocalizedElem};
use wschur_core::partition::Partition;
use wschur_core::poly::{rat, Monomial, Polynomial};
use wschur_core::var::{Family, VarId};

fn var_strategy() -> impl Strategy<Value = VarId> {
    prop_oneof![
        (1u32..=3).prop_map(VarId::x),
        (1u32..=3).prop_map(VarId::a),
        (1u32..=2).prop_map(VarId::w),
        (1u32..=2).prop_map(VarId::aprime),
    ]
}

fn monomial_strategy() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((var_strategy(), 1u32..=2), 0..3).prop_map(Monomial::from_pairs)
}

fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial_strategy(), -4i64..=4, 1i64..=3), 0..5).prop_map(|terms| {
        Polynomial::from_terms(terms.into_iter().map(|(m, n, d)| (m, rat(n, d))))
    })
}

fn gen_strategy() -> impl Strategy<Value = DenomGen> {
    prop_oneof![
        Just(DenomGen::VCh { d: 2 }),
        Just(DenomGen::WLambda(Partition::empty(2))),
        Just(DenomGen::WLambda(Partition::div(2))),
    ]
}

fn local_strategy() -> impl Strategy<Value = LocalizedElem> {
    (poly_strategy(), prop::collection::vec(gen_strategy(), 0..3)).prop_map(|(num, gens)| {
        let mut den = BTreeMap::new();
        for g in gens {
            *den.entry(g).or_insert(0) += 1;
        }
        LocalizedElem::new(num, den)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in poly_strategy(), q in poly_strategy(), r in poly_strategy()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division_recovers_factor(p in poly_strategy(), q in poly_strategy()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).exact_divide(&q).unwrap(), p);
    }

    #[test]
    fn substitution_is_multiplicative(p in poly_strategy(), q in poly_strategy()) {
        let image = |v: VarId| match v.family {
            Family::X => Some(LocalizedElem::over(
                &Polynomial::var(v) - &Polynomial::var(VarId::v(v.index)),
                DenomGen::VCh { d: 2 },
            )),
            Family::A if v.index == 1 => Some(LocalizedElem::new(Polynomial::var(VarId::w(2)), BTreeMap::new())),
            _ => None,
        };
        let lhs = substitute(&(&p * &q), image);
        let rhs = &substitute(&p, image) * &substitute(&q, image);
        prop_assert!(lhs.loc_equal(&rhs));
        let sum = substitute(&(&p + &q), image);
        prop_assert!(sum.loc_equal(&(&substitute(&p, image) + &substitute(&q, image))));
    }

    #[test]
    fn normalize_preserves_value(e in local_strategy(), g in gen_strategy(), k in 0u32..3) {
        // multiply numerator and denominator by the same generator power
        let mut den = e.denominator().clone();
        *den.entry(g.clone()).or_insert(0) += k;
        let num = e.numerator() * &g.to_polynomial().pow(k);
        let inflated = LocalizedElem::new(num, den);
        prop_assert!(inflated.loc_equal(&e));
        prop_assert!(inflated.normalize().loc_equal(&e));
        prop_assert!(e.normalize().loc_equal(&e));
    }

    #[test]
    fn localized_field_operations(e in local_strategy(), f in local_strategy()) {
        prop_assert!((&(&e + &f) - &f).loc_equal(&e));
        prop_assume!(!f.is_zero());
        let q = (&e * &f).checked_div(&f).unwrap();
        prop_assert!(q.loc_equal(&e));
    }

    #[test]
    fn rendering_round_trips(p in poly_strategy()) {
        let text = p.to_string();
        let back: Polynomial = text.parse().unwrap();
        prop_assert_eq!(back, p.clone());
        let json = p.to_json();
        prop_assert_eq!(Polynomial::from_json(&json).unwrap(), p);
    }

    #[test]
    fn localized_json_round_trips(e in local_strategy()) {
        let back = LocalizedElem::from_json(&e.to_json()).unwrap();
        prop_assert!(back.loc_equal(&e));
        prop_assert_eq!(back.canonical_string(), e.canonical_string());
    }
}
