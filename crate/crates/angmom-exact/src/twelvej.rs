//! The 12j symbol of the first kind and its exact evaluation.
//!
//! Labels follow the 3x4 layout
//!
//! ```text
//! { j1   j2   j12  j125 }
//! { j3   j4   j34  j135 }
//! { j13  j24  s5   j6   }
//! ```
//!
//! with the eight triads (j1 j2 j12), (j3 j4 j34), (j1 j3 j13), (j2 j4 j24),
//! (j12 s5 j125), (j13 s5 j135), (j125 j34 j6), (j135 j24 j6).  The symbol is
//! the overlap of the two coupling schemes that route s5 through j12 and j13
//! respectively, normalized by the six intermediate multiplicities.

use crate::half::{triangle_ok, HalfInt};
use crate::ninej::ninej_t;
use crate::sixj::{ExactEngine, SymbolEngine, SymbolValue};
use crate::surd::SurdSum;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AngmomError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("oracle state space dimension {dim} exceeds bound {bound}")]
    StateSpaceTooLarge { dim: u128, bound: u128 },
}

/// The twelve quantum numbers of a first-kind 12j symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwelveJInput {
    pub j1: HalfInt,
    pub j2: HalfInt,
    pub j12: HalfInt,
    pub j125: HalfInt,
    pub j3: HalfInt,
    pub j4: HalfInt,
    pub j34: HalfInt,
    pub j135: HalfInt,
    pub j13: HalfInt,
    pub j24: HalfInt,
    pub s5: HalfInt,
    pub j6: HalfInt,
}

impl TwelveJInput {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        j1: HalfInt,
        j2: HalfInt,
        j12: HalfInt,
        j125: HalfInt,
        j3: HalfInt,
        j4: HalfInt,
        j34: HalfInt,
        j135: HalfInt,
        j13: HalfInt,
        j24: HalfInt,
        s5: HalfInt,
        j6: HalfInt,
    ) -> Self {
        TwelveJInput {
            j1,
            j2,
            j12,
            j125,
            j3,
            j4,
            j34,
            j135,
            j13,
            j24,
            s5,
            j6,
        }
    }

    pub fn from_twice(t: [i32; 12]) -> Self {
        let h = HalfInt::from_twice;
        TwelveJInput::new(
            h(t[0]),
            h(t[1]),
            h(t[2]),
            h(t[3]),
            h(t[4]),
            h(t[5]),
            h(t[6]),
            h(t[7]),
            h(t[8]),
            h(t[9]),
            h(t[10]),
            h(t[11]),
        )
    }

    pub fn to_twice(self) -> [i32; 12] {
        [
            self.j1.twice(),
            self.j2.twice(),
            self.j12.twice(),
            self.j125.twice(),
            self.j3.twice(),
            self.j4.twice(),
            self.j34.twice(),
            self.j135.twice(),
            self.j13.twice(),
            self.j24.twice(),
            self.s5.twice(),
            self.j6.twice(),
        ]
    }

    pub fn triads(&self) -> [(HalfInt, HalfInt, HalfInt); 8] {
        [
            (self.j1, self.j2, self.j12),
            (self.j3, self.j4, self.j34),
            (self.j1, self.j3, self.j13),
            (self.j2, self.j4, self.j24),
            (self.j12, self.s5, self.j125),
            (self.j13, self.s5, self.j135),
            (self.j125, self.j34, self.j6),
            (self.j135, self.j24, self.j6),
        ]
    }

    /// All eight spin-network triangle conditions.
    pub fn triangles_ok(&self) -> bool {
        self.triads().iter().all(|&(a, b, c)| triangle_ok(a, b, c))
    }

    /// Slide the argument array half-way around its strip: exchanges the two
    /// coupling schemes. An exact symmetry of the value.
    pub fn mobius_slide(self) -> Self {
        TwelveJInput {
            j2: self.j3,
            j3: self.j2,
            j12: self.j13,
            j13: self.j12,
            j125: self.j135,
            j135: self.j125,
            j34: self.j24,
            j24: self.j34,
            ..self
        }
    }

    /// Reflect the argument array about its vertical center. An exact
    /// symmetry of the value.
    pub fn mobius_reflect(self) -> Self {
        TwelveJInput {
            j1: self.j6,
            j6: self.j1,
            j2: self.j34,
            j34: self.j2,
            j12: self.j125,
            j125: self.j12,
            j3: self.j24,
            j24: self.j3,
            j13: self.j135,
            j135: self.j13,
            ..self
        }
    }
}

/// 12j of the first kind via the recoupling expansion
///
/// ```text
/// sum_t (-1)^E(t) (2t+1) {s5 j12 j125; j34 j6 t} {s5 j13 j135; j24 j6 t}
///                        {j1 j2 j12; j3 j4 j34; j13 j24 t}
/// E(t) = 2 j12 + 2 j13 + 6 s5 - j125 - j135 + j34 + j24 + 2t
/// ```
///
/// The overall sign matches the sequential Condon-Shortley coupling of the
/// defining bra and ket (see `oracle_12j_bruteforce`): the two agree exactly,
/// with no residual sign convention.
pub fn twelvej_t<E: SymbolEngine>(engine: &E, t: [i32; 12]) -> E::Value {
    let [tj1, tj2, tj12, tj125, tj3, tj4, tj34, tj135, tj13, tj24, ts5, tj6] = t;
    let lo = (tj12 - tj34)
        .abs()
        .max((tj13 - tj24).abs())
        .max((tj6 - ts5).abs());
    let hi = (tj12 + tj34).min(tj13 + tj24).min(tj6 + ts5);
    let mut acc = E::Value::zero();
    let mut tt = lo;
    while tt <= hi {
        let w1 = engine.sixj_t([ts5, tj12, tj125, tj34, tj6, tt]);
        if !w1.is_zero() {
            let w2 = engine.sixj_t([ts5, tj13, tj135, tj24, tj6, tt]);
            if !w2.is_zero() {
                let w9 = ninej_t(engine, [tj1, tj2, tj12, tj3, tj4, tj34, tj13, tj24, tt]);
                // twice the phase exponent; integral by the triad parities
                let e2 = 2 * tj12 + 2 * tj13 + 6 * ts5 - tj125 - tj135 + tj34 + tj24 + 2 * tt;
                debug_assert!(e2 % 2 == 0);
                let sign = if (e2 / 2).rem_euclid(2) == 0 { 1 } else { -1 };
                let term = w1.mul(&w2).mul(&w9);
                acc.add_assign(term.scale_int(sign * (tt + 1) as i64));
            }
        }
        tt += 2;
    }
    acc
}

impl ExactEngine {
    /// Exact first-kind 12j; exact zero when any spin-network triangle fails.
    pub fn wigner12j_first(&self, inp: &TwelveJInput) -> SurdSum {
        twelvej_t(self, inp.to_twice())
    }

    /// Exact 9j cached through the 12j summation path (test support).
    pub fn ninej_of_twelvej(&self, inp: &TwelveJInput, tt: i32) -> SurdSum {
        let t = inp.to_twice();
        self.ninej_cached([t[0], t[1], t[2], t[4], t[5], t[6], t[8], t[9], tt])
    }

    /// The `s5 = 0` special value: the symbol collapses to
    /// `{9j} / sqrt((2 j12 + 1)(2 j13 + 1))` with no extra phase under this
    /// crate's conventions (pinned against the brute-force oracle).
    pub fn reduce_s0(&self, inp: &TwelveJInput) -> Result<SurdSum, AngmomError> {
        if inp.s5 != HalfInt::ZERO {
            return Err(AngmomError::Precondition(format!(
                "reduce_s0 requires s5 = 0, got {}",
                inp.s5
            )));
        }
        if inp.j125 != inp.j12 || inp.j135 != inp.j13 {
            return Err(AngmomError::Precondition(
                "reduce_s0 requires j125 = j12 and j135 = j13".into(),
            ));
        }
        let t = inp.to_twice();
        let ninej = self.ninej_cached([t[0], t[1], t[2], t[4], t[5], t[6], t[8], t[9], t[11]]);
        let norm = (inp.j12.multiplicity() * inp.j13.multiplicity()) as u64;
        let inv_sqrt = SurdSum::from_surd(
            BigRational::new(BigInt::from(1), BigInt::from(norm)),
            BigUint::from(norm),
        );
        Ok(ninej * inv_sqrt)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    /// A small triangular instance used across the tests:
    /// j1=3/2, j2=0, j12=3/2, j125=2, j3=1/2, j4=3/2, j34=1, j135=3/2,
    /// j13=2, j24=3/2, s5=1/2, j6=2; value sqrt(10)/1600.
    fn small_input() -> TwelveJInput {
        TwelveJInput::from_twice([3, 0, 3, 4, 1, 3, 2, 3, 4, 3, 1, 4])
    }

    #[test]
    fn triangles_check() {
        assert!(small_input().triangles_ok());
        let mut bad = small_input();
        bad.j6 = h(8);
        assert!(!bad.triangles_ok());
        let e = ExactEngine::new();
        assert!(e.wigner12j_first(&bad).is_zero());
    }

    #[test]
    fn small_value_frozen() {
        let e = ExactEngine::new();
        let v = e.wigner12j_first(&small_input());
        let expect = SurdSum::from_surd(
            BigRational::new(BigInt::from(1), BigInt::from(1600)),
            BigUint::from(10u32),
        );
        assert_eq!(v, expect);
    }

    #[test]
    fn mobius_images_are_triangular() {
        let inp = small_input();
        assert!(inp.mobius_slide().triangles_ok());
        assert!(inp.mobius_reflect().triangles_ok());
        // involutions
        assert_eq!(inp.mobius_slide().mobius_slide(), inp);
        assert_eq!(inp.mobius_reflect().mobius_reflect(), inp);
    }

    #[test]
    fn mobius_symmetries_exact() {
        let e = ExactEngine::new();
        let inp = small_input();
        let v = e.wigner12j_first(&inp);
        assert!(!v.is_zero());
        assert_eq!(v, e.wigner12j_first(&inp.mobius_slide()));
        assert_eq!(v, e.wigner12j_first(&inp.mobius_reflect()));
    }

    #[test]
    fn s5_zero_reduction() {
        let e = ExactEngine::new();
        // s5=0 forces j125=j12 and j135=j13
        let inp = TwelveJInput::from_twice([2, 2, 4, 4, 2, 2, 2, 2, 2, 2, 0, 2]);
        assert!(inp.triangles_ok());
        let direct = e.wigner12j_first(&inp);
        let reduced = e.reduce_s0(&inp).unwrap();
        assert_eq!(direct, reduced);
        // frozen: sqrt(15)/270
        let expect = SurdSum::from_surd(
            BigRational::new(BigInt::from(1), BigInt::from(270)),
            BigUint::from(15u32),
        );
        assert_eq!(direct, expect);
    }

    #[test]
    fn reduce_s0_preconditions() {
        let e = ExactEngine::new();
        let mut inp = small_input();
        assert!(e.reduce_s0(&inp).is_err());
        inp.s5 = h(0);
        // j125 != j12 now violates the forced equality
        assert!(e.reduce_s0(&inp).is_err());
    }

    #[test]
    fn doubling_keeps_nonzero() {
        let e = ExactEngine::new();
        let inp = TwelveJInput::from_twice([2, 2, 4, 4, 2, 2, 2, 2, 2, 2, 0, 2]);
        let doubled = TwelveJInput::from_twice(inp.to_twice().map(|t| 2 * t));
        assert!(doubled.triangles_ok());
        // frozen: 17 sqrt(5) / 18375
        let expect = SurdSum::from_surd(
            BigRational::new(BigInt::from(17), BigInt::from(18375)),
            BigUint::from(5u32),
        );
        assert_eq!(e.wigner12j_first(&doubled), expect);
    }
}
