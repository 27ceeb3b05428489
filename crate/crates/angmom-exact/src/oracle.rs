//! Brute-force 12j oracle: explicit sequential coupling in the product
//! m-basis, projected on total J = 0.
//!
//! Slow but definition-level: this fixes the sign convention every other
//! evaluation path must reproduce.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::cg::CgTable;
use crate::factorial::FactTable;
use crate::surd::SurdSum;
use crate::twelvej::{AngmomError, TwelveJInput};

/// Default cap on the product-space dimension `prod (2j+1)` of the six
/// coupled momenta.
pub const DEFAULT_ORACLE_BOUND: u128 = 5_000_000;

pub struct BruteForceOracle {
    facts: FactTable,
    cg: CgTable,
    bound: u128,
}

impl Default for BruteForceOracle {
    fn default() -> Self {
        Self::new(DEFAULT_ORACLE_BOUND)
    }
}

impl BruteForceOracle {
    pub fn new(bound: u128) -> Self {
        BruteForceOracle {
            facts: FactTable::new(),
            cg: CgTable::new(),
            bound,
        }
    }

    /// `<b|a> / sqrt([j12][j34][j13][j24][j125][j135])` by direct m-summation.
    ///
    /// The bra/ket are built by sequential Condon-Shortley coupling in the
    /// order written in the layout: `((j1 j2) j12, s5) j125` with `(j3 j4) j34`
    /// against `j6`, and `((j1 j3) j13, s5) j135` with `(j2 j4) j24` against
    /// `j6`. The overlap is evaluated at the stretched magnetic quantum
    /// number; total-J = 0 projection makes it m-independent.
    pub fn twelvej(&self, inp: &TwelveJInput) -> Result<SurdSum, AngmomError> {
        let t = inp.to_twice();
        let dim: u128 = [t[0], t[1], t[4], t[5], t[10], t[11]]
            .iter()
            .map(|&x| (x + 1) as u128)
            .product();
        if dim > self.bound {
            return Err(AngmomError::StateSpaceTooLarge {
                dim,
                bound: self.bound,
            });
        }
        if !inp.triangles_ok() {
            return Ok(SurdSum::zero());
        }
        let [tj1, tj2, tj12, tj125, tj3, tj4, tj34, tj135, tj13, tj24, ts5, tj6] = t;
        let cg = |key: [i32; 6]| self.cg.cg(&self.facts, key);

        // evaluate <B; j6 M | A; j6 M> at the stretched M = j6
        let tm_tot = tj6;
        let mut total = SurdSum::zero();
        let mut tm1 = -tj1;
        while tm1 <= tj1 {
            let mut tm2 = -tj2;
            while tm2 <= tj2 {
                let tm12 = tm1 + tm2;
                if tm12.abs() > tj12 {
                    tm2 += 2;
                    continue;
                }
                let a1 = cg([tj1, tm1, tj2, tm2, tj12, tm12]);
                if a1.is_zero() {
                    tm2 += 2;
                    continue;
                }
                let mut tm5 = -ts5;
                while tm5 <= ts5 {
                    let tm125 = tm12 + tm5;
                    let tm34 = tm_tot - tm125;
                    if tm125.abs() > tj125 || tm34.abs() > tj34 {
                        tm5 += 2;
                        continue;
                    }
                    let a2 = cg([tj12, tm12, ts5, tm5, tj125, tm125]);
                    if a2.is_zero() {
                        tm5 += 2;
                        continue;
                    }
                    let a4 = cg([tj125, tm125, tj34, tm34, tj6, tm_tot]);
                    if a4.is_zero() {
                        tm5 += 2;
                        continue;
                    }
                    let a124 = &(&a1 * &a2) * &a4;
                    let mut tm3 = -tj3;
                    while tm3 <= tj3 {
                        let tm4 = tm34 - tm3;
                        if tm4.abs() > tj4 {
                            tm3 += 2;
                            continue;
                        }
                        let a3 = cg([tj3, tm3, tj4, tm4, tj34, tm34]);
                        if a3.is_zero() {
                            tm3 += 2;
                            continue;
                        }
                        // bra side for the same magnetic numbers
                        let tm13 = tm1 + tm3;
                        let tm135 = tm13 + tm5;
                        let tm24 = tm2 + tm4;
                        if tm13.abs() > tj13 || tm135.abs() > tj135 || tm24.abs() > tj24 {
                            tm3 += 2;
                            continue;
                        }
                        let b1 = cg([tj1, tm1, tj3, tm3, tj13, tm13]);
                        if b1.is_zero() {
                            tm3 += 2;
                            continue;
                        }
                        let b2 = cg([tj13, tm13, ts5, tm5, tj135, tm135]);
                        let b3 = cg([tj2, tm2, tj4, tm4, tj24, tm24]);
                        let b4 = cg([tj135, tm135, tj24, tm24, tj6, tm_tot]);
                        let amp_b = &(&(&b1 * &b2) * &b3) * &b4;
                        if !amp_b.is_zero() {
                            total += &(&a124 * &a3) * &amp_b;
                        }
                        tm3 += 2;
                    }
                    tm5 += 2;
                }
                tm2 += 2;
            }
            tm1 += 2;
        }
        // normalize by sqrt of the six intermediate multiplicities
        let norm: u64 = [tj12, tj34, tj13, tj24, tj125, tj135]
            .iter()
            .map(|&x| (x + 1) as u64)
            .product();
        let inv_sqrt = SurdSum::from_surd(
            BigRational::new(BigInt::from(1u32), BigInt::from(norm)),
            BigUint::from(norm),
        );
        Ok(total * inv_sqrt)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::half::HalfInt;
    use crate::sixj::ExactEngine;

    #[test]
    fn matches_recoupling_expansion_small() {
        let oracle = BruteForceOracle::default();
        let engine = ExactEngine::new();
        // the frozen small instance plus a handful of variants
        for t in [
            [3, 0, 3, 4, 1, 3, 2, 3, 4, 3, 1, 4],
            [2, 2, 4, 4, 2, 2, 2, 2, 2, 2, 0, 2],
            [2, 1, 1, 1, 1, 2, 1, 2, 1, 1, 1, 1],
            [4, 2, 2, 2, 2, 4, 2, 2, 2, 2, 0, 2],
            [2, 2, 2, 3, 2, 2, 2, 3, 2, 2, 1, 3],
        ] {
            let inp = TwelveJInput::from_twice(t);
            let bf = oracle.twelvej(&inp).unwrap();
            let fm = engine.wigner12j_first(&inp);
            assert_eq!(bf, fm, "input {t:?}");
        }
    }

    #[test]
    fn non_triangular_is_zero() {
        let oracle = BruteForceOracle::default();
        let mut inp = TwelveJInput::from_twice([3, 0, 3, 4, 1, 3, 2, 3, 4, 3, 1, 4]);
        inp.j6 = HalfInt::from_twice(12);
        assert!(oracle.twelvej(&inp).unwrap().is_zero());
    }

    #[test]
    fn dimension_guard() {
        let oracle = BruteForceOracle::new(100);
        let inp = TwelveJInput::from_twice([6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6]);
        assert!(matches!(
            oracle.twelvej(&inp),
            Err(AngmomError::StateSpaceTooLarge { .. })
        ));
    }

    #[test]
    fn s5_zero_matches_reduction() {
        let oracle = BruteForceOracle::default();
        let engine = ExactEngine::new();
        let inp = TwelveJInput::from_twice([2, 2, 4, 4, 2, 2, 2, 2, 2, 2, 0, 2]);
        let bf = oracle.twelvej(&inp).unwrap();
        let red = engine.reduce_s0(&inp).unwrap();
        assert_eq!(bf, red);
    }
}
