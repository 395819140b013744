//! Property-based checks over randomized inputs.

use proptest::prelude::*;

use qdivisor_core::arithmetic::{divisors, factorize, sigma};
use qdivisor_core::erdos_nicolas::erdos_nicolas_f;
use qdivisor_core::kr_poly::{coefficient_value_set, largest_coefficient, polynomial};
use qdivisor_core::pythagorean::has_close_divisor_pair;
use qdivisor_core::series_oracle::{laurent_exact_div, LaurentPoly};

fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
    (
        -6i64..=6,
        prop::collection::vec(-30i64..=30, 1..=7),
    )
        .prop_map(|(offset, coeffs)| LaurentPoly::from_coefficients(offset, coeffs))
}

fn arb_nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    arb_laurent().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn factorization_reconstructs_n(n in 1u64..=10_000_000) {
        let f = factorize(n).unwrap();
        f.validate().unwrap();
        prop_assert_eq!(f.n(), n);
        prop_assert_eq!(f.divisor_count(), divisors(n).unwrap().len() as u64);
    }

    #[test]
    fn polynomial_shape_and_checksum(n in 1u64..=30_000) {
        let poly = polynomial(n).unwrap();
        let full = poly.full_coefficients();
        prop_assert_eq!(full.len() as u64, 2 * n - 1);
        prop_assert_eq!(full[0], 1);
        prop_assert_eq!(full[full.len() - 1], 1);
        let reversed: Vec<u64> = full.iter().rev().copied().collect();
        prop_assert_eq!(&full, &reversed);
        prop_assert_eq!(poly.value_at_one().unwrap(), sigma(n).unwrap());
    }

    #[test]
    fn sweep_max_equals_polynomial_max(n in 1u64..=30_000) {
        prop_assert_eq!(
            largest_coefficient(n).unwrap(),
            polynomial(n).unwrap().largest()
        );
    }

    #[test]
    fn largest_coefficient_is_f(n in 1u64..=30_000) {
        prop_assert_eq!(
            largest_coefficient(n).unwrap(),
            erdos_nicolas_f(n).unwrap().value()
        );
    }

    #[test]
    fn value_set_is_full_staircase(n in 1u64..=20_000) {
        let set = coefficient_value_set(n).unwrap();
        let max = *set.iter().max().unwrap();
        prop_assert_eq!(set.len() as u64, max + 1);
        prop_assert!(set.contains(&0));
    }

    #[test]
    fn close_pair_iff_f_at_least_two(n in 1u64..=100_000) {
        let pair = has_close_divisor_pair(n).unwrap();
        let f = erdos_nicolas_f(n).unwrap().value();
        prop_assert_eq!(pair.is_some(), f >= 2);
        if let Some((d, dp)) = pair {
            prop_assert!(d < dp && dp < 2 * d);
            prop_assert!(n % d == 0 && n % dp == 0);
        }
    }

    #[test]
    fn laurent_product_divides_back(a in arb_laurent(), b in arb_nonzero_laurent()) {
        let product = a.checked_mul(&b).unwrap();
        prop_assert_eq!(laurent_exact_div(&product, &b).unwrap(), a);
    }

    #[test]
    fn laurent_add_sub_round_trip(a in arb_laurent(), b in arb_laurent()) {
        let sum = a.checked_add(&b).unwrap();
        prop_assert_eq!(sum.checked_sub(&b).unwrap(), a);
    }

    #[test]
    fn laurent_eval_at_one_is_multiplicative(a in arb_laurent(), b in arb_laurent()) {
        let product = a.checked_mul(&b).unwrap();
        prop_assert_eq!(
            product.eval_at_one().unwrap(),
            a.eval_at_one().unwrap() * b.eval_at_one().unwrap()
        );
    }
}
