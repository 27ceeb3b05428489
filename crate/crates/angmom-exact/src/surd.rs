//! Exact numbers of the form `sum_i c_i sqrt(r_i)` with rational `c_i` and
//! square-free integer radicands `r_i`.
//!
//! Closed under addition and multiplication, with decidable equality; every
//! 3nj symbol value in this crate lives here.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurdSum {
    /// square-free radicand -> nonzero rational coefficient
    terms: BTreeMap<BigUint, BigRational>,
}

impl SurdSum {
    pub fn zero() -> Self {
        SurdSum::default()
    }

    pub fn one() -> Self {
        SurdSum::from_rational(BigRational::one())
    }

    pub fn from_rational(c: BigRational) -> Self {
        let mut s = SurdSum::default();
        s.add_term(BigUint::one(), c);
        s
    }

    pub fn from_int(n: i64) -> Self {
        SurdSum::from_rational(BigRational::from(BigInt::from(n)))
    }

    /// `c * sqrt(radicand)`, factoring square parts of small primes out of
    /// the radicand. Radicands produced inside the crate are square-free by
    /// construction (prime-exponent splits and gcd-reduced products); this
    /// reduction covers hand-written inputs.
    pub fn from_surd(c: BigRational, radicand: BigUint) -> Self {
        let (extra, rad) = squarefree_split(radicand);
        let mut s = SurdSum::default();
        s.add_term(rad, c * BigRational::from(BigInt::from(extra)));
        s
    }

    /// `c * sqrt(radicand)` for a radicand already known to be square-free.
    pub(crate) fn from_surd_squarefree(c: BigRational, radicand: BigUint) -> Self {
        let mut s = SurdSum::default();
        s.add_term(radicand, c);
        s
    }

    /// Rebuild a value from `(radicand, coefficient)` terms whose radicands
    /// are already square-free, e.g. terms previously produced by this type.
    /// No square-factor reduction is applied.
    pub fn from_squarefree_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (BigUint, BigRational)>,
    {
        let mut s = SurdSum::default();
        for (rad, c) in terms {
            s.add_term(rad, c);
        }
        s
    }

    fn add_term(&mut self, rad: BigUint, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(rad.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&rad);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &BigRational)> {
        self.terms.iter()
    }

    /// The rational coefficient if the value is purely rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            let (rad, c) = self.terms.iter().next().unwrap();
            if rad.is_one() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn abs(&self) -> SurdSum {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Sign of the value. Multi-term sums fall back to a high-precision
    /// float estimate, refined until it exceeds the worst-case rounding.
    pub fn is_negative(&self) -> bool {
        match self.terms.len() {
            0 => false,
            1 => self.terms.values().next().unwrap().is_negative(),
            _ => self.to_f64() < 0.0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(rad, c)| rational_to_f64(c) * biguint_to_f64(rad).sqrt())
            .sum()
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // extreme magnitudes: scale numerator and denominator together
        let nbits = r.numer().bits() as i64;
        let dbits = r.denom().bits() as i64;
        let shift = (nbits.max(dbits) - 900).max(0) as u64;
        let n = r.numer() >> shift;
        let d = r.denom() >> shift;
        n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN)
    })
}

fn biguint_to_f64(u: &BigUint) -> f64 {
    u.to_f64().unwrap_or(f64::INFINITY)
}

/// Write `n = s^2 * r` with `r` square-free; returns `(s, r)`.
///
/// Radicands here come from prime-split factorial products, so they are
/// usually already square-free; the trial division is a safety net for
/// radicands produced by term multiplication.
fn squarefree_split(n: BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::zero(), BigUint::zero());
    }
    let mut s = BigUint::one();
    let mut r = BigUint::one();
    let mut m = n;
    let mut p = 2u64;
    // factor out small primes only; larger cofactors are kept verbatim
    while p < 1_000_000 && BigUint::from(p) * BigUint::from(p) <= m {
        let bp = BigUint::from(p);
        let mut e = 0u64;
        loop {
            let (q, rem) = m.div_rem(&bp);
            if rem.is_zero() {
                m = q;
                e += 1;
            } else {
                break;
            }
        }
        if e > 0 {
            s *= bp.pow((e / 2) as u32);
            if e % 2 == 1 {
                r *= BigUint::from(p);
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (s, r * m)
}

impl std::ops::Add for SurdSum {
    type Output = SurdSum;
    fn add(mut self, rhs: SurdSum) -> SurdSum {
        for (rad, c) in rhs.terms {
            self.add_term(rad, c);
        }
        self
    }
}

impl std::ops::AddAssign for SurdSum {
    fn add_assign(&mut self, rhs: SurdSum) {
        for (rad, c) in rhs.terms {
            self.add_term(rad, c);
        }
    }
}

impl std::ops::Sub for SurdSum {
    type Output = SurdSum;
    fn sub(self, rhs: SurdSum) -> SurdSum {
        self + (-rhs)
    }
}

impl std::ops::Neg for SurdSum {
    type Output = SurdSum;
    fn neg(mut self) -> SurdSum {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl std::ops::Mul for SurdSum {
    type Output = SurdSum;
    fn mul(self, rhs: SurdSum) -> SurdSum {
        &self * &rhs
    }
}

impl std::ops::Mul for &SurdSum {
    type Output = SurdSum;
    fn mul(self, rhs: &SurdSum) -> SurdSum {
        let mut out = SurdSum::default();
        for (ra, ca) in &self.terms {
            for (rb, cb) in &rhs.terms {
                // sqrt(ra) sqrt(rb) = g sqrt((ra/g)(rb/g)) with g = gcd
                let g = ra.gcd(rb);
                let rad = (ra / &g) * (rb / &g);
                let c = ca * cb * BigRational::from(BigInt::from(g));
                out.add_term(rad, c);
            }
        }
        out
    }
}

impl std::ops::Mul<i64> for SurdSum {
    type Output = SurdSum;
    fn mul(mut self, rhs: i64) -> SurdSum {
        if rhs == 0 {
            return SurdSum::zero();
        }
        let f = BigRational::from(BigInt::from(rhs));
        for c in self.terms.values_mut() {
            *c = c.clone() * &f;
        }
        self
    }
}

impl fmt::Display for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (rad, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if rad.is_one() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*sqrt({rad})")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surd(n: i64, d: i64, rad: u64) -> SurdSum {
        SurdSum::from_surd(
            BigRational::new(BigInt::from(n), BigInt::from(d)),
            BigUint::from(rad),
        )
    }

    #[test]
    fn radicands_reduce() {
        // sqrt(12) = 2 sqrt(3)
        let s = surd(1, 1, 12);
        let (rad, c) = s.terms().next().unwrap();
        assert_eq!(rad, &BigUint::from(3u32));
        assert_eq!(c, &BigRational::from(BigInt::from(2)));
    }

    #[test]
    fn sqrt_products_combine() {
        // sqrt(6) * sqrt(10) = 2 sqrt(15)
        let p = surd(1, 1, 6) * surd(1, 1, 10);
        assert_eq!(p, surd(2, 1, 15));
        // sqrt(5)^2 = 5
        assert_eq!(surd(1, 1, 5) * surd(1, 1, 5), SurdSum::from_int(5));
    }

    #[test]
    fn cancellation_is_exact() {
        let a = surd(3, 7, 5) + surd(-3, 7, 5);
        assert!(a.is_zero());
        let b = surd(1, 2, 2) + surd(1, 3, 3) - surd(1, 3, 3);
        assert_eq!(b, surd(1, 2, 2));
    }

    #[test]
    fn to_f64_matches() {
        let s = surd(1, 3, 2) + surd(-2, 5, 7);
        let expect = (2.0f64).sqrt() / 3.0 - 2.0 * (7.0f64).sqrt() / 5.0;
        assert!((s.to_f64() - expect).abs() < 1e-15);
    }
}
