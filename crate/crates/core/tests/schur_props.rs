use proptest::prelude::*;
use proptest::sample::select;
use wschur_core::partition::Partition;
use wschur_core::poly::Polynomial;
use wschur_core::schur::{factorial_schur_tableaux, ordinary_schur, Alphabet};
use wschur_core::var::{Family, VarId};
use wschur_core::weighted::{
    psi_mu, psi_mu_vw, weighted_factorial_schur, AggregateSymbols, ShiftedAlphabets,
};

fn small(d: usize, max: u32) -> impl Strategy<Value = Partition> {
    select(Partition::enumerate(d, max, None))
}

fn any_small() -> impl Strategy<Value = Partition> {
    prop_oneof![small(1, 4), small(2, 4), small(3, 3)]
}

fn contains(big: &Partition, small: &Partition) -> bool {
    big.rows().iter().zip(small.rows()).all(|(a, b)| a >= b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn factorial_schur_is_symmetric(lam in any_small()) {
        let s = factorial_schur_tableaux(&lam, Alphabet::A);
        for i in 1..lam.d() as u32 {
            prop_assert_eq!(s.swap_vars(VarId::x(i), VarId::x(i + 1)), s.clone());
        }
    }

    #[test]
    fn top_degree_part_is_ordinary(lam in any_small()) {
        let s = factorial_schur_tableaux(&lam, Alphabet::A);
        let top = s.filter_terms(|m| m.factors().iter().all(|(v, _)| v.family == Family::X));
        prop_assert_eq!(top, ordinary_schur(&lam));
    }

    #[test]
    fn alphabet_index_bound(lam in any_small()) {
        let s = factorial_schur_tableaux(&lam, Alphabet::A);
        let bound = lam.first_row() + lam.d() as u32 - 1;
        prop_assert!(s.max_index(Family::A).map_or(true, |l| l <= bound));
    }

    #[test]
    fn ordinary_vanishing(d in 1usize..=3, pair in (0usize..100, 0usize..100)) {
        let ps = Partition::enumerate(d, 3, None);
        let lam = &ps[pair.0 % ps.len()];
        let mu = &ps[pair.1 % ps.len()];
        let v = psi_mu(&factorial_schur_tableaux(lam, Alphabet::A), mu);
        if lam == mu {
            let a_l = AggregateSymbols::a_lambda(lam);
            let want = lam.lower_set().iter().fold(Polynomial::one(), |acc, rho| {
                &acc * &(&a_l - &AggregateSymbols::a_lambda(rho))
            });
            prop_assert_eq!(v, want);
        } else if !contains(mu, lam) {
            prop_assert!(v.is_zero());
        }
    }

    #[test]
    fn weighted_factorial_schur_is_symmetric(lam in prop_oneof![small(2, 3), small(3, 2)]) {
        prop_assert!(weighted_factorial_schur(&lam).is_symmetric(lam.d()));
    }

    #[test]
    fn mu_shift_identities(mu in prop_oneof![small(2, 3), small(3, 2)], l in 1u32..=6) {
        let d = mu.d();
        let sh = ShiftedAlphabets::new(d);
        let bar = mu.bar();
        for i in 1..=d as u32 {
            let got = psi_mu_vw(&sh.xv(i), &mu);
            let want = AggregateSymbols::mu_shifted_a(bar.entries()[i as usize - 1], &mu);
            prop_assert!(got.loc_equal(&want));
        }
        let got = psi_mu_vw(&sh.avw(l), &mu);
        prop_assert!(got.loc_equal(&AggregateSymbols::mu_shifted_a(l, &mu)));
    }
}
