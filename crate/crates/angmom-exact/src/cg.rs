//! Exact Clebsch-Gordan coefficients (Condon-Shortley phase convention).
//!
//! Internal support for the brute-force 12j contraction oracle; not part of
//! the public symbol API.

use std::collections::HashMap;
use std::sync::RwLock;

use num_rational::BigRational;
use num_traits::Zero;

use crate::factorial::FactTable;
use crate::surd::SurdSum;

#[derive(Default)]
pub(crate) struct CgTable {
    cache: RwLock<HashMap<[i32; 6], SurdSum>>,
}

impl CgTable {
    pub fn new() -> Self {
        CgTable::default()
    }

    /// `<j1 m1 j2 m2 | j m>` with all arguments as twice-integers.
    pub fn cg(&self, facts: &FactTable, key: [i32; 6]) -> SurdSum {
        if let Some(v) = self.cache.read().unwrap().get(&key) {
            return v.clone();
        }
        let v = cg_eval(facts, key);
        self.cache
            .write()
            .unwrap()
            .entry(key)
            .or_insert_with(|| v.clone());
        v
    }
}

fn cg_eval(facts: &FactTable, [tj1, tm1, tj2, tm2, tj, tm]: [i32; 6]) -> SurdSum {
    if tm1 + tm2 != tm
        || tm1.abs() > tj1
        || tm2.abs() > tj2
        || tm.abs() > tj
        || (tj1 + tm1) % 2 != 0
        || (tj2 + tm2) % 2 != 0
        || (tj + tm) % 2 != 0
        || !crate::half::triangle_ok(
            crate::half::HalfInt::from_twice(tj1),
            crate::half::HalfInt::from_twice(tj2),
            crate::half::HalfInt::from_twice(tj),
        )
    {
        return SurdSum::zero();
    }
    // radical part: (2j+1) (j1+j2-j)!(j1-j2+j)!(-j1+j2+j)!/(j1+j2+j+1)!
    //               * (j+m)!(j-m)!(j1+m1)!(j1-m1)!(j2+m2)!(j2-m2)!
    let mut pe = facts.prime_exp(((tj1 + tj2 - tj) / 2) as i64);
    pe.mul_assign(&facts.prime_exp(((tj1 - tj2 + tj) / 2) as i64));
    pe.mul_assign(&facts.prime_exp(((-tj1 + tj2 + tj) / 2) as i64));
    pe.div_assign(&facts.prime_exp(((tj1 + tj2 + tj) / 2 + 1) as i64));
    for half in [tj + tm, tj - tm, tj1 + tm1, tj1 - tm1, tj2 + tm2, tj2 - tm2] {
        pe.mul_assign(&facts.prime_exp((half / 2) as i64));
    }
    // alternating sum over k
    let a1 = (tj1 + tj2 - tj) / 2;
    let a2 = (tj1 - tm1) / 2;
    let a3 = (tj2 + tm2) / 2;
    let b1 = (tj - tj2 + tm1) / 2;
    let b2 = (tj - tj1 - tm2) / 2;
    let kmin = 0.max(-b1).max(-b2);
    let kmax = a1.min(a2).min(a3);
    let mut sum = BigRational::zero();
    for k in kmin..=kmax {
        let mut term = facts.prime_exp(k as i64);
        term.mul_assign(&facts.prime_exp((a1 - k) as i64));
        term.mul_assign(&facts.prime_exp((a2 - k) as i64));
        term.mul_assign(&facts.prime_exp((a3 - k) as i64));
        term.mul_assign(&facts.prime_exp((b1 + k) as i64));
        term.mul_assign(&facts.prime_exp((b2 + k) as i64));
        let r = term.to_rational().recip();
        if k % 2 == 0 {
            sum += r;
        } else {
            sum -= r;
        }
    }
    if sum.is_zero() {
        return SurdSum::zero();
    }
    let (coeff, mut rad) = pe.sqrt_split();
    rad *= num_bigint::BigUint::from((tj + 1) as u64);
    SurdSum::from_surd(coeff * sum, rad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn cg(t: [i32; 6]) -> SurdSum {
        let facts = FactTable::new();
        CgTable::new().cg(&facts, t)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn spin_half_couplings() {
        // <1/2 1/2 1/2 -1/2 | 1 0> = 1/sqrt(2)
        let v = cg([1, 1, 1, -1, 2, 0]);
        assert_eq!(v, SurdSum::from_surd(rat(1, 2), 2u32.into()));
        // <1/2 1/2 1/2 -1/2 | 0 0> = 1/sqrt(2)
        let v = cg([1, 1, 1, -1, 0, 0]);
        assert_eq!(v, SurdSum::from_surd(rat(1, 2), 2u32.into()));
        // <1/2 -1/2 1/2 1/2 | 0 0> = -1/sqrt(2)
        let v = cg([1, -1, 1, 1, 0, 0]);
        assert_eq!(v, SurdSum::from_surd(rat(-1, 2), 2u32.into()));
    }

    #[test]
    fn stretched_and_highest_weight() {
        // <j1 j1 j2 j2 | (j1+j2) (m1+m2)> = 1
        for (tj1, tj2) in [(2, 2), (3, 1), (4, 6)] {
            let v = cg([tj1, tj1, tj2, tj2, tj1 + tj2, tj1 + tj2]);
            assert_eq!(v, SurdSum::one());
        }
    }

    #[test]
    fn orthogonality_in_j() {
        // sum_{m1} <j1 m1 j2 m-m1|j m>^2 = 1 for fixed (j, m)
        let (tj1, tj2) = (3, 4);
        for tj in [1, 3, 5, 7] {
            let tm = 1;
            let mut acc = SurdSum::zero();
            let mut tm1 = -tj1;
            while tm1 <= tj1 {
                let c = cg([tj1, tm1, tj2, tm - tm1, tj, tm]);
                acc += c.clone() * c;
                tm1 += 2;
            }
            assert_eq!(acc, SurdSum::one(), "tj = {tj}");
        }
    }

    #[test]
    fn condon_shortley_sign() {
        // <1 1 1 -1 | 1 0> = 1/sqrt(2); <1 -1 1 1|1 0> = -1/sqrt(2)
        assert_eq!(cg([2, 2, 2, -2, 2, 0]), SurdSum::from_surd(rat(1, 2), 2u32.into()));
        assert_eq!(cg([2, -2, 2, 2, 2, 0]), SurdSum::from_surd(rat(-1, 2), 2u32.into()));
    }
}
