//! Fixed-precision binary floating point backing the fast symbol backend.
//!
//! Thin wrapper over `dashu_float::FBig` pinned to a caller-chosen precision
//! (>= 113 bits enforced), with exact construction from big integers.

use dashu_base::{Abs, SquareRoot};
use dashu_float::round::mode::Zero as RoundZero;
use dashu_float::FBig;
use dashu_int::{IBig, Sign, UBig};
use num_bigint::BigInt;

pub type Raw = FBig<RoundZero, 2>;

/// Minimum precision accepted for the float backend (IEEE binary128).
pub const MIN_PRECISION_BITS: usize = 113;

#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct BigF(Raw);

fn ibig_from_bigint(n: &BigInt) -> IBig {
    let (sign, bytes) = n.to_bytes_le();
    let u = UBig::from_le_bytes(&bytes);
    match sign {
        num_bigint::Sign::Minus => IBig::from_parts(Sign::Negative, u),
        _ => IBig::from_parts(Sign::Positive, u),
    }
}

impl BigF {
    pub fn zero() -> Self {
        BigF(Raw::ZERO)
    }

    pub fn from_bigint(n: &BigInt, precision: usize) -> Self {
        BigF(Raw::from(ibig_from_bigint(n)).with_precision(precision).value())
    }

    pub fn from_i64(n: i64, precision: usize) -> Self {
        BigF(Raw::from(n).with_precision(precision).value())
    }

    pub fn from_f64(x: f64, precision: usize) -> Self {
        BigF(
            Raw::try_from(x)
                .expect("finite f64")
                .with_precision(precision)
                .value(),
        )
    }

    pub fn sqrt(&self) -> Self {
        BigF(self.0.sqrt())
    }

    pub fn abs(&self) -> Self {
        BigF(self.0.clone().abs())
    }

    pub fn is_zero(&self) -> bool {
        self.0 == Raw::ZERO
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    pub fn raw(&self) -> &Raw {
        &self.0
    }
}

impl std::ops::Add for BigF {
    type Output = BigF;
    fn add(self, rhs: BigF) -> BigF {
        BigF(self.0 + rhs.0)
    }
}

impl std::ops::AddAssign for BigF {
    fn add_assign(&mut self, rhs: BigF) {
        self.0 += rhs.0;
    }
}

impl std::ops::Sub for BigF {
    type Output = BigF;
    fn sub(self, rhs: BigF) -> BigF {
        BigF(self.0 - rhs.0)
    }
}

impl std::ops::Mul for BigF {
    type Output = BigF;
    fn mul(self, rhs: BigF) -> BigF {
        BigF(self.0 * rhs.0)
    }
}

impl std::ops::Mul for &BigF {
    type Output = BigF;
    fn mul(self, rhs: &BigF) -> BigF {
        BigF(&self.0 * &rhs.0)
    }
}

impl std::ops::Div for BigF {
    type Output = BigF;
    fn div(self, rhs: BigF) -> BigF {
        BigF(self.0 / rhs.0)
    }
}

impl std::ops::Neg for BigF {
    type Output = BigF;
    fn neg(self) -> BigF {
        BigF(-self.0)
    }
}
