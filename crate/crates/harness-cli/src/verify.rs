//! Self-verification suites: oracle equivalence and exact symmetries.
//!
//! Shared between the `selftest` CLI verb and the acceptance tests.

use angmom_exact::{BruteForceOracle, ExactEngine, HalfInt, SurdSum, SymbolValue, TwelveJInput};
use rayon::prelude::*;

/// Every fully triangular 12j input with all twelve `2j <= cap`.
pub fn enumerate_triangular(cap: i32) -> Vec<TwelveJInput> {
    let mut out = Vec::new();
    let tri_range = |a: i32, b: i32| -> Vec<i32> {
        ((a - b).abs()..=(a + b).min(cap)).step_by(2).collect()
    };
    for tj1 in 0..=cap {
        for tj2 in 0..=cap {
            for tj12 in tri_range(tj1, tj2) {
                for tj3 in 0..=cap {
                    for tj13 in tri_range(tj1, tj3) {
                        for tj4 in 0..=cap {
                            for tj34 in tri_range(tj3, tj4) {
                                for tj24 in tri_range(tj2, tj4) {
                                    for ts5 in 0..=cap {
                                        for tj125 in tri_range(tj12, ts5) {
                                            for tj135 in tri_range(tj13, ts5) {
                                                let lo = (tj125 - tj34)
                                                    .abs()
                                                    .max((tj135 - tj24).abs());
                                                let hi = (tj125 + tj34)
                                                    .min(tj135 + tj24)
                                                    .min(cap);
                                                if (tj125 + tj34) % 2 != (tj135 + tj24) % 2 {
                                                    continue;
                                                }
                                                let mut tj6 = lo;
                                                while tj6 <= hi {
                                                    let inp = TwelveJInput::from_twice([
                                                        tj1, tj2, tj12, tj125, tj3, tj4, tj34,
                                                        tj135, tj13, tj24, ts5, tj6,
                                                    ]);
                                                    debug_assert!(inp.triangles_ok());
                                                    out.push(inp);
                                                    tj6 += 2;
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Compare `wigner12j_first` against the brute-force contraction oracle on
/// the full triangular enumeration. Returns `(checked, sign_matches)` or the
/// first discrepancy.
pub fn oracle_equivalence(cap: i32) -> Result<(usize, usize), String> {
    let inputs = enumerate_triangular(cap);
    let engine = ExactEngine::new();
    let oracle = BruteForceOracle::default();
    let results: Vec<Result<bool, String>> = inputs
        .par_iter()
        .map(|inp| {
            let formula = engine.wigner12j_first(inp);
            let brute = oracle
                .twelvej(inp)
                .map_err(|e| format!("oracle failed on {inp:?}: {e}"))?;
            // absolute values must agree exactly; the chosen recoupling
            // expansion reproduces the oracle sign as well
            if formula != brute {
                if formula.abs() == brute.abs() {
                    return Err(format!(
                        "sign mismatch on {inp:?}: formula {formula} vs oracle {brute}"
                    ));
                }
                return Err(format!(
                    "magnitude mismatch on {inp:?}: formula {formula} vs oracle {brute}"
                ));
            }
            Ok(!formula.is_zero())
        })
        .collect();
    let mut nonzero = 0;
    for r in results {
        if r? {
            nonzero += 1;
        }
    }
    Ok((inputs.len(), nonzero))
}

/// Randomized exact symmetry checks (Mobius images, 6j orthogonality,
/// 9j transpose). Returns the number of checks performed.
pub fn symmetry_suite(samples: usize, cap: i32, seed: u64) -> Result<usize, String> {
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let engine = ExactEngine::new();
    let mut checks = 0usize;

    // Mobius slide and reflection
    for _ in 0..samples {
        let inp = random_triangular(&mut rng, cap);
        let v = engine.wigner12j_first(&inp);
        if v != engine.wigner12j_first(&inp.mobius_slide()) {
            return Err(format!("slide image differs for {inp:?}"));
        }
        if v != engine.wigner12j_first(&inp.mobius_reflect()) {
            return Err(format!("reflection image differs for {inp:?}"));
        }
        checks += 2;
    }

    // 6j orthogonality, all labels <= 3
    let h = HalfInt::from_twice;
    for ta in 0..=6 {
        for tb in 0..=6 {
            for tc in 0..=6 {
                for td in (0..=6).step_by(2) {
                    for tp in 0..=6 {
                        for tq in 0..=6 {
                            if (ta + td + tp) % 2 != 0 || (tc + tb + tp) % 2 != 0 {
                                continue;
                            }
                            if (tp + tq) % 2 != 0 {
                                continue;
                            }
                            let mut acc = SurdSum::zero();
                            let mut tx = 0;
                            while tx <= 12 {
                                let w1 = engine.wigner6j(h(ta), h(tb), h(tx), h(tc), h(td), h(tp));
                                let w2 = engine.wigner6j(h(ta), h(tb), h(tx), h(tc), h(td), h(tq));
                                acc += (w1 * w2).scale_int((tx + 1) as i64);
                                tx += 1;
                            }
                            let expect = if tp == tq
                                && angmom_exact::triangle_ok(h(ta), h(td), h(tp))
                                && angmom_exact::triangle_ok(h(tc), h(tb), h(tp))
                            {
                                SurdSum::from_rational(num_rational::BigRational::new(
                                    1.into(),
                                    ((tp + 1) as i64).into(),
                                ))
                            } else {
                                SurdSum::zero()
                            };
                            if acc != expect {
                                return Err(format!(
                                    "6j orthogonality failed at a={ta} b={tb} c={tc} d={td} p={tp} q={tq}"
                                ));
                            }
                            checks += 1;
                        }
                    }
                }
            }
        }
    }

    // 9j transpose, all entries <= 2
    for _ in 0..samples {
        let t9: [i32; 9] = std::array::from_fn(|_| rng.gen_range(0..=4));
        let transposed = [t9[0], t9[3], t9[6], t9[1], t9[4], t9[7], t9[2], t9[5], t9[8]];
        let a = angmom_exact::ninej_t(&engine, t9);
        let b = angmom_exact::ninej_t(&engine, transposed);
        if a != b {
            return Err(format!("9j transpose failed for {t9:?}"));
        }
        checks += 1;
    }
    Ok(checks)
}

/// Draw a fully triangular random input with every `2j <= cap`.
pub fn random_triangular<R: rand::Rng>(rng: &mut R, cap: i32) -> TwelveJInput {
    loop {
        let pick = |rng: &mut R, a: i32, b: i32| -> Option<i32> {
            let lo = (a - b).abs();
            let hi = (a + b).min(cap);
            if hi < lo {
                return None;
            }
            Some(lo + 2 * rng.gen_range(0..=(hi - lo) / 2))
        };
        let tj1 = rng.gen_range(0..=cap);
        let tj2 = rng.gen_range(0..=cap);
        let tj3 = rng.gen_range(0..=cap);
        let tj4 = rng.gen_range(0..=cap);
        let ts5 = rng.gen_range(0..=cap.min(4));
        let (Some(tj12), Some(tj34), Some(tj13), Some(tj24)) = (
            pick(rng, tj1, tj2),
            pick(rng, tj3, tj4),
            pick(rng, tj1, tj3),
            pick(rng, tj2, tj4),
        ) else {
            continue;
        };
        let (Some(tj125), Some(tj135)) = (pick(rng, tj12, ts5), pick(rng, tj13, ts5)) else {
            continue;
        };
        let lo = (tj125 - tj34).abs().max((tj135 - tj24).abs());
        let hi = (tj125 + tj34).min(tj135 + tj24).min(cap);
        if hi < lo || (tj125 + tj34 + lo) % 2 != 0 {
            continue;
        }
        let tj6 = lo + 2 * rng.gen_range(0..=(hi - lo) / 2);
        let inp = TwelveJInput::from_twice([
            tj1, tj2, tj12, tj125, tj3, tj4, tj34, tj135, tj13, tj24, ts5, tj6,
        ]);
        if inp.triangles_ok() {
            return inp;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_small_caps() {
        // every enumerated input is triangular; spot-check growth
        let n2 = enumerate_triangular(2).len();
        let n3 = enumerate_triangular(3).len();
        assert!(n2 > 50, "{n2}");
        assert!(n3 > n2);
        for inp in enumerate_triangular(2) {
            assert!(inp.triangles_ok());
        }
    }

    #[test]
    fn oracle_equivalence_tiny() {
        let (total, nonzero) = oracle_equivalence(2).unwrap();
        assert!(total > 50);
        assert!(nonzero > 10);
    }

    #[test]
    fn quick_symmetry_suite() {
        let checks = symmetry_suite(10, 6, 42).unwrap();
        assert!(checks > 100);
    }
}
