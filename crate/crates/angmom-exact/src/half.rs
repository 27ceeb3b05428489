//! Half-integer angular momentum quantum numbers, stored as twice their value.

use std::fmt;
use std::str::FromStr;

/// An angular momentum quantum number `j`, stored as the integer `2j`.
///
/// Storing twice the value keeps half-integers exact and makes parity
/// conditions (`a + b + c` integral) plain integer arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    twice: i32,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    #[inline]
    pub const fn from_twice(twice: i32) -> Self {
        HalfInt { twice }
    }

    /// `j` from an integer value.
    #[inline]
    pub const fn from_int(j: i32) -> Self {
        HalfInt { twice: 2 * j }
    }

    #[inline]
    pub const fn twice(self) -> i32 {
        self.twice
    }

    #[inline]
    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    #[inline]
    pub fn as_f64(self) -> f64 {
        f64::from(self.twice) / 2.0
    }

    /// The classical length `j + 1/2` of the quantized vector.
    #[inline]
    pub fn length(self) -> f64 {
        (f64::from(self.twice) + 1.0) / 2.0
    }

    /// Multiplicity `2j + 1`.
    #[inline]
    pub const fn multiplicity(self) -> i64 {
        self.twice as i64 + 1
    }

    #[inline]
    pub const fn is_negative(self) -> bool {
        self.twice < 0
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Accepts `"21"`, `"51/2"` and decimal halves like `"25.5"`.
impl FromStr for HalfInt {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            if den.trim() != "2" {
                return Err(format!("half-integer denominator must be 2: {s:?}"));
            }
            let n: i32 = num.trim().parse().map_err(|e| format!("{e}: {s:?}"))?;
            return Ok(HalfInt::from_twice(n));
        }
        if let Some((int, frac)) = s.split_once('.') {
            let whole: i32 = int.parse().map_err(|e| format!("{e}: {s:?}"))?;
            return match frac {
                "5" => Ok(HalfInt::from_twice(2 * whole + if whole < 0 { -1 } else { 1 })),
                "0" | "" => Ok(HalfInt::from_int(whole)),
                _ => Err(format!("not a half-integer: {s:?}")),
            };
        }
        let whole: i32 = s.parse().map_err(|e| format!("{e}: {s:?}"))?;
        Ok(HalfInt::from_int(whole))
    }
}

/// True iff `(a, b, c)` satisfies `|a - b| <= c <= a + b` with integral sum.
pub fn triangle_ok(a: HalfInt, b: HalfInt, c: HalfInt) -> bool {
    let (ta, tb, tc) = (a.twice(), b.twice(), c.twice());
    ta >= 0
        && tb >= 0
        && tc >= 0
        && (ta + tb + tc) % 2 == 0
        && tc >= (ta - tb).abs()
        && tc <= ta + tb
}

/// `(-1)^k` where `k` is given as `2k`; panics if `2k` is odd.
#[inline]
pub fn phase_from_twice(twice_k: i32) -> i32 {
    debug_assert!(twice_k % 2 == 0, "phase exponent {twice_k}/2 is not integral");
    if (twice_k / 2).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
