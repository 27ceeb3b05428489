//! Exact factorial arithmetic: big-integer tables and prime-exponent vectors.
//!
//! Racah-type sums need two views of `n!`: the plain big integer (for the
//! alternating sums) and the prime factorization via Legendre's formula (so
//! square roots of factorial products split exactly into `rational * sqrt(r)`
//! with `r` square-free).

use std::collections::BTreeMap;
use std::sync::RwLock;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

/// A product of prime powers with integer (possibly negative) exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrimeExp {
    exps: BTreeMap<u64, i64>,
}

impl PrimeExp {
    pub fn one() -> Self {
        PrimeExp::default()
    }

    fn insert(&mut self, p: u64, e: i64) {
        if e != 0 {
            *self.exps.entry(p).or_insert(0) += e;
            if self.exps[&p] == 0 {
                self.exps.remove(&p);
            }
        }
    }

    pub fn mul_assign(&mut self, other: &PrimeExp) {
        for (&p, &e) in &other.exps {
            self.insert(p, e);
        }
    }

    pub fn div_assign(&mut self, other: &PrimeExp) {
        for (&p, &e) in &other.exps {
            self.insert(p, -e);
        }
    }

    /// Exact conversion to a rational number.
    pub fn to_rational(&self) -> BigRational {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (&p, &e) in &self.exps {
            let pw = BigUint::from(p).pow(e.unsigned_abs() as u32);
            if e > 0 {
                num *= pw;
            } else {
                den *= pw;
            }
        }
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    /// Split the square root exactly: `sqrt(self) = coeff * sqrt(radicand)`
    /// with the radicand square-free.
    pub fn sqrt_split(&self) -> (BigRational, BigUint) {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        let mut rad = BigUint::one();
        for (&p, &e) in &self.exps {
            let q = e.div_euclid(2);
            let r = e.rem_euclid(2);
            let pw = BigUint::from(p).pow(q.unsigned_abs() as u32);
            if q > 0 {
                num *= pw;
            } else {
                den *= pw;
            }
            if r == 1 {
                rad *= BigUint::from(p);
            }
        }
        (
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            rad,
        )
    }
}

/// Shared factorial tables; cheap to clone handles are not needed, callers
/// hold it inside an engine and access it behind the lock.
#[derive(Default)]
pub struct FactTable {
    big: RwLock<Vec<BigInt>>,
    pexp: RwLock<Vec<PrimeExp>>,
}

impl FactTable {
    pub fn new() -> Self {
        FactTable {
            big: RwLock::new(vec![BigInt::one()]),
            pexp: RwLock::new(vec![PrimeExp::one()]),
        }
    }

    /// `n!` as a big integer.
    pub fn big(&self, n: i64) -> BigInt {
        assert!(n >= 0, "factorial of negative argument {n}");
        let n = n as usize;
        {
            let t = self.big.read().unwrap();
            if n < t.len() {
                return t[n].clone();
            }
        }
        let mut t = self.big.write().unwrap();
        while t.len() <= n {
            let next = t.last().unwrap() * BigInt::from(t.len());
            t.push(next);
        }
        t[n].clone()
    }

    /// `n!` as a prime-exponent vector.
    pub fn prime_exp(&self, n: i64) -> PrimeExp {
        assert!(n >= 0, "factorial of negative argument {n}");
        let n = n as usize;
        {
            let t = self.pexp.read().unwrap();
            if n < t.len() {
                return t[n].clone();
            }
        }
        let mut t = self.pexp.write().unwrap();
        while t.len() <= n {
            let mut next = t.last().unwrap().clone();
            let mut m = t.len() as u64;
            let mut p = 2u64;
            while p * p <= m {
                while m % p == 0 {
                    next.insert(p, 1);
                    m /= p;
                }
                p += 1;
            }
            if m > 1 {
                next.insert(m, 1);
            }
            t.push(next);
        }
        t[n].clone()
    }

    /// Falling product `(lo+1)(lo+2)..hi = hi!/lo!` without big divisions.
    pub fn range_product(&self, lo: i64, hi: i64) -> BigInt {
        assert!(lo >= 0 && hi >= lo);
        let mut acc = BigInt::one();
        let mut chunk = 1u64;
        for k in (lo + 1)..=hi {
            let k = k as u64;
            if let Some(next) = chunk.checked_mul(k) {
                chunk = next;
            } else {
                acc *= BigInt::from(chunk);
                chunk = k;
            }
        }
        acc * BigInt::from(chunk)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn factorial_tables_agree() {
        let t = FactTable::new();
        for n in 0..40 {
            let via_pexp = t.prime_exp(n).to_rational();
            let direct = BigRational::from(t.big(n));
            assert_eq!(via_pexp, direct, "n = {n}");
        }
    }

    #[test]
    fn sqrt_split_squarefree() {
        let t = FactTable::new();
        // sqrt(10!/7!) = sqrt(720) = 12 sqrt(5)
        let mut pe = t.prime_exp(10);
        pe.div_assign(&t.prime_exp(7));
        let (c, r) = pe.sqrt_split();
        assert_eq!(r, BigUint::from(5u32));
        assert_eq!(c, BigRational::from(BigInt::from(12)));
        // sqrt(1/6) = (1/6) sqrt(6)
        let mut inv6 = PrimeExp::one();
        inv6.div_assign(&{
            let mut x = PrimeExp::one();
            x.insert(2, 1);
            x.insert(3, 1);
            x
        });
        let (c, r) = inv6.sqrt_split();
        assert_eq!(r, BigUint::from(6u32));
        assert_eq!(c.to_f64().unwrap(), 1.0 / 6.0);
    }

    #[test]
    fn range_product_matches_factorials() {
        let t = FactTable::new();
        assert_eq!(t.range_product(7, 10), BigInt::from(8 * 9 * 10));
        assert_eq!(t.range_product(0, 12), t.big(12));
        assert_eq!(t.range_product(5, 5), BigInt::one());
    }
}
