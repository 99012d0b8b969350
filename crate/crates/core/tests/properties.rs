use nakajima_core::correspondence::{phi_map, psi, psi_inverse, varphi, varphi_inverse};
use nakajima_core::membership::{is_member, matrix_is_member, pair_decomposition, x_factorize};
use nakajima_core::{Crystal, Monomial, MonomialCrystal, Orientation, TableauCrystal, Weight};
use proptest::prelude::*;

/// A dominant weight and a node of its component reached by a random
/// walk of lowering operators from the highest element.
fn arb_member() -> impl Strategy<Value = (Weight, Monomial)> {
    (1usize..=4)
        .prop_flat_map(|rank| {
            (
                prop::collection::vec(0i64..=2, rank),
                prop::collection::vec(1usize..=rank, 0..24),
            )
        })
        .prop_map(|(coeffs, walk)| {
            let rank = coeffs.len();
            let lambda = Weight::new(coeffs);
            let c = MonomialCrystal::new(rank).unwrap();
            let mut m = c.highest_weight_monomial(&lambda).unwrap();
            for i in walk {
                if let Some(next) = c.f_tilde(&m, i) {
                    m = next;
                }
            }
            (lambda, m)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn walks_stay_members((lambda, m) in arb_member()) {
        prop_assert!(is_member(&m, &lambda).unwrap());
        let x = x_factorize(&m, lambda.rank()).unwrap();
        prop_assert_eq!(x.to_monomial(), m.clone());
        prop_assert!(matrix_is_member(&x, &lambda).unwrap());
        prop_assert_eq!(pair_decomposition(&x).unwrap().to_monomial(), m);
    }

    #[test]
    fn maps_invert((lambda, m) in arb_member()) {
        let rank = lambda.rank();
        let s = psi(&m, &lambda).unwrap();
        prop_assert_eq!(psi_inverse(&s, rank).unwrap(), m.clone());
        let t = varphi(&s, rank).unwrap();
        prop_assert_eq!(varphi_inverse(&t, rank).unwrap(), s);
        prop_assert_eq!(phi_map(&m, &lambda).unwrap(), t);
    }

    #[test]
    fn composite_map_commutes((lambda, m) in arb_member()) {
        let rank = lambda.rank();
        let mc = MonomialCrystal::new(rank).unwrap();
        let tc = TableauCrystal::new(rank, Orientation::Standard);
        let t = phi_map(&m, &lambda).unwrap();
        for i in 1..=rank {
            let down = mc.f_tilde(&m, i).map(|b| phi_map(&b, &lambda).unwrap());
            prop_assert_eq!(down, tc.f_tilde(&t, i));
            let up = mc.e_tilde(&m, i).map(|b| phi_map(&b, &lambda).unwrap());
            prop_assert_eq!(up, tc.e_tilde(&t, i));
            prop_assert_eq!(mc.phi(&m, i), tc.phi(&t, i));
            prop_assert_eq!(mc.epsilon(&m, i), tc.epsilon(&t, i));
        }
    }

    #[test]
    fn membership_needs_matching_weight((lambda, m) in arb_member(), k in 1usize..=4) {
        let rank = lambda.rank();
        let k = 1 + (k - 1) % rank;
        let mut other = lambda.clone();
        other.add_fundamental(k, 1);
        prop_assert!(!is_member(&m, &other).unwrap());
    }
}
