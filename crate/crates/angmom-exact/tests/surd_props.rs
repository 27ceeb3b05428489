//! Property tests for the exact surd arithmetic.

use angmom_exact::SurdSum;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn surd_strategy() -> impl Strategy<Value = SurdSum> {
    // up to three terms, numerators/denominators and radicands kept small
    prop::collection::vec((-40i64..=40, 1i64..=24, 1u64..=60), 0..3).prop_map(|terms| {
        let mut acc = SurdSum::zero();
        for (n, d, r) in terms {
            acc += SurdSum::from_surd(
                BigRational::new(BigInt::from(n), BigInt::from(d)),
                BigUint::from(r),
            );
        }
        acc
    })
}

fn radicands_squarefree(s: &SurdSum) -> bool {
    s.terms().all(|(rad, _)| {
        if rad.is_zero() {
            return false;
        }
        let mut p = BigUint::from(2u32);
        let limit = BigUint::from(70u32);
        while &p * &p <= *rad && p <= limit {
            if (rad / (&p * &p) * (&p * &p)).eq(rad) {
                return false;
            }
            p += BigUint::one();
        }
        true
    })
}

proptest! {
    #[test]
    fn distributive_law_exact(p in surd_strategy(), q in surd_strategy(), r in surd_strategy()) {
        let lhs = (p.clone() + q.clone()) * r.clone();
        let rhs = p * r.clone() + q * r;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn radicands_stay_squarefree(p in surd_strategy(), q in surd_strategy()) {
        let sum = p.clone() + q.clone();
        let prod = p * q;
        prop_assert!(radicands_squarefree(&sum));
        prop_assert!(radicands_squarefree(&prod));
    }

    #[test]
    fn subtraction_cancels(p in surd_strategy()) {
        prop_assert!((p.clone() - p).is_zero());
    }

    #[test]
    fn float_image_is_consistent(p in surd_strategy(), q in surd_strategy()) {
        let sum = p.clone() + q.clone();
        let err = (sum.to_f64() - (p.to_f64() + q.to_f64())).abs();
        prop_assert!(err <= 1e-9 * (1.0 + p.to_f64().abs() + q.to_f64().abs()));
    }
}

#[test]
fn gcd_reduction_in_products() {
    // sqrt(30) * sqrt(42) = 6 sqrt(35)
    let a = SurdSum::from_surd(BigRational::one(), BigUint::from(30u32));
    let b = SurdSum::from_surd(BigRational::one(), BigUint::from(42u32));
    let prod = a * b;
    let (rad, c) = prod.terms().next().unwrap();
    assert_eq!(rad, &BigUint::from(35u32));
    assert_eq!(c, &BigRational::from(BigInt::from(6)));
    assert_eq!(BigUint::from(30u32).gcd(&BigUint::from(42u32)), BigUint::from(6u32));
}
