//! Closed-form semiclassical evaluation of 9j and 12j symbols.
//!
//! Two oscillatory branches live on the classically allowed region of the
//! vector geometry; each contributes `d^s_{nu mu}(theta) cos(arg)/sqrt(D)`
//! with the branch action and spinor phases in the argument. Outside the
//! region the formulas are undefined and results are reported as absent.

mod wigner_d;

use std::f64::consts::PI;

use angmom_exact::{HalfInt, TwelveJInput};
use geom_core::{branch_geometry, realize_vectors, solve_branches, BranchGeometry, GeomError, NineLabels};
use thiserror::Error;

pub use wigner_d::wigner_d_t;

/// Advisory ceiling on the small spin; the one-small-momentum expansion
/// degrades as `s` grows.
pub const DEFAULT_S_MAX: i32 = 6; // twice-value of s = 3

#[derive(Debug, Error)]
pub enum AsymError {
    #[error("d-matrix index out of range: 2s={ts}, 2nu={tnu}, 2mu={tmu}")]
    DIndexOutOfRange { ts: i32, tnu: i32, tmu: i32 },
    #[error("small spin 2s={ts} exceeds advisory bound 2s_max={tmax}")]
    SmallSpinTooLarge { ts: i32, tmax: i32 },
    #[error("geometry: {0}")]
    Geometry(#[from] GeomError),
}

/// Outcome of an asymptotic evaluation.
#[derive(Clone, Debug)]
pub struct AsymptoticResult {
    /// The estimate; absent outside the classically allowed region or at a
    /// caustic. Never NaN or infinite.
    pub value: Option<f64>,
    /// Per-branch contributions `(branch 1, branch 2)` including the
    /// prefactor; present only when `value` is.
    pub branch_terms: Option<[f64; 2]>,
    /// Trigonometric arguments of the two branches (diagnostics).
    pub branch_args: Option<[f64; 2]>,
    pub allowed: bool,
    pub caustic: bool,
}

impl AsymptoticResult {
    fn forbidden() -> Self {
        AsymptoticResult {
            value: None,
            branch_terms: None,
            branch_args: None,
            allowed: false,
            caustic: false,
        }
    }

    fn caustic() -> Self {
        AsymptoticResult {
            value: None,
            branch_terms: None,
            branch_args: None,
            allowed: false,
            caustic: true,
        }
    }
}

/// Classification of a sweep point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegionStatus {
    Allowed,
    Caustic,
    Forbidden,
}

impl std::fmt::Display for RegionStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RegionStatus::Allowed => "allowed",
            RegionStatus::Caustic => "caustic",
            RegionStatus::Forbidden => "forbidden",
        };
        write!(f, "{s}")
    }
}

fn branch_pair(labels: &NineLabels) -> Result<Option<(BranchGeometry, BranchGeometry)>, GeomError> {
    let roots = solve_branches(labels)?;
    if roots.is_empty() {
        return Ok(None);
    }
    let mut b1 = None;
    let mut b2 = None;
    for r in &roots {
        let cfg = realize_vectors(labels, r)?;
        let bg = branch_geometry(labels, &cfg, r)?;
        if r.branch == 2 {
            b2 = Some(bg);
        } else {
            b1 = Some(bg);
        }
    }
    Ok(Some((b1.expect("branch 1 labeled"), b2.expect("branch 2 labeled"))))
}

/// The all-large asymptotic value of a 9j symbol, labels as twice-integers
/// in the layout `{j1 j2 j12; j3 j4 j34; j13 j24 j9}`.
pub fn asym9j_t(t9: [i32; 9]) -> AsymptoticResult {
    asym_with_spinor(&NineLabels::new(t9), 0, 0, 0, 1.0 / (4.0 * PI))
        .unwrap_or_else(|_| AsymptoticResult::caustic())
}

/// The all-large asymptotic value of a 9j symbol.
#[allow(clippy::too_many_arguments)]
pub fn asym9j(
    j1: HalfInt,
    j2: HalfInt,
    j12: HalfInt,
    j3: HalfInt,
    j4: HalfInt,
    j34: HalfInt,
    j13: HalfInt,
    j24: HalfInt,
    j9: HalfInt,
) -> AsymptoticResult {
    asym9j_t([
        j1.twice(),
        j2.twice(),
        j12.twice(),
        j3.twice(),
        j4.twice(),
        j34.twice(),
        j13.twice(),
        j24.twice(),
        j9.twice(),
    ])
}

/// Shared branch assembly: each branch contributes
/// `pref * d^s_{nu mu}(theta) cos(eval_arg - mu phi12 - nu phi13) / sqrt(D)`.
fn asym_with_spinor(
    labels: &NineLabels,
    ts: i32,
    tmu: i32,
    tnu: i32,
    pref: f64,
) -> Result<AsymptoticResult, AsymError> {
    let pair = match branch_pair(labels) {
        Ok(Some(p)) => p,
        Ok(None) => return Ok(AsymptoticResult::forbidden()),
        Err(GeomError::Caustic(_)) => return Ok(AsymptoticResult::caustic()),
        Err(e) => return Err(e.into()),
    };
    let (b1, b2) = pair;
    if b1.caustic || b2.caustic {
        return Ok(AsymptoticResult::caustic());
    }
    let mu = tmu as f64 / 2.0;
    let nu = tnu as f64 / 2.0;
    let mut terms = [0.0; 2];
    let mut args = [0.0; 2];
    for (slot, b) in [(0usize, &b1), (1usize, &b2)] {
        let d = if ts == 0 {
            1.0
        } else {
            wigner_d_t(ts, tnu, tmu, b.theta)?
        };
        let arg = b.eval_arg - mu * b.phi12 - nu * b.phi13;
        let amp = b.amp_den.sqrt();
        if !amp.is_finite() || amp == 0.0 {
            return Ok(AsymptoticResult::caustic());
        }
        terms[slot] = pref * d * arg.cos() / amp;
        args[slot] = arg;
    }
    let value = terms[0] + terms[1];
    if !value.is_finite() {
        return Ok(AsymptoticResult::caustic());
    }
    Ok(AsymptoticResult {
        value: Some(value),
        branch_terms: Some(terms),
        branch_args: Some(args),
        allowed: true,
        caustic: false,
    })
}

/// Asymptotic 12j symbol with one small spin, advisory bound `s5 <= 3`.
pub fn asym12j(inp: &TwelveJInput) -> Result<AsymptoticResult, AsymError> {
    asym12j_with(inp, DEFAULT_S_MAX)
}

/// Asymptotic 12j with an explicit advisory bound on `2 s5`.
///
/// The polarizations are fixed by the inputs: `mu = j125 - j12`,
/// `nu = j135 - j13`. The leading phase `(-1)^mu` uses the ceiling
/// convention for half-integer `mu` (not exercised by integer small spins).
pub fn asym12j_with(inp: &TwelveJInput, ts_max: i32) -> Result<AsymptoticResult, AsymError> {
    let ts = inp.s5.twice();
    if ts > ts_max {
        return Err(AsymError::SmallSpinTooLarge { ts, tmax: ts_max });
    }
    let tmu = inp.j125.twice() - inp.j12.twice();
    let tnu = inp.j135.twice() - inp.j13.twice();
    if tmu.abs() > ts || tnu.abs() > ts {
        return Err(AsymError::DIndexOutOfRange { ts, tnu, tmu });
    }
    let labels = NineLabels::from_twelvej(inp);
    let norm = ((inp.j125.multiplicity() * inp.j135.multiplicity()) as f64).sqrt();
    let mu_ceil = if tmu.rem_euclid(2) == 0 { tmu / 2 } else { (tmu + 1) / 2 };
    let sign = if mu_ceil.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let pref = sign / (4.0 * PI * norm);
    asym_with_spinor(&labels, ts, tmu, tnu, pref)
}

/// Classify each half-integer-stepped `j6` in `[j6_min, j6_max]`.
pub fn allowed_region(
    inp: &TwelveJInput,
    j6_min: HalfInt,
    j6_max: HalfInt,
    j6_step: HalfInt,
) -> Vec<(HalfInt, RegionStatus)> {
    let mut out = Vec::new();
    let step = j6_step.twice().max(1);
    let mut t = j6_min.twice();
    while t <= j6_max.twice() {
        let j6 = HalfInt::from_twice(t);
        let probe = TwelveJInput { j6, ..*inp };
        let labels = NineLabels::from_twelvej(&probe);
        let status = match solve_branches(&labels) {
            Ok(roots) if roots.is_empty() => RegionStatus::Forbidden,
            Ok(_) => match branch_pair(&labels) {
                Ok(Some((b1, b2))) if !b1.caustic && !b2.caustic => RegionStatus::Allowed,
                Ok(Some(_)) => RegionStatus::Caustic,
                Ok(None) => RegionStatus::Forbidden,
                Err(_) => RegionStatus::Caustic,
            },
            Err(_) => RegionStatus::Caustic,
        };
        out.push((j6, status));
        t += step;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use angmom_exact::{ExactEngine, FloatEngine, SymbolEngine};
    use approx::assert_relative_eq;

    fn case1_input(tj6: i32) -> TwelveJInput {
        TwelveJInput::from_twice([51, 59, 42, 44, 55, 53, 54, 52, 54, 50, 2, tj6])
    }

    #[test]
    fn asym9j_tracks_exact_at_moderate_j() {
        // paper-adjacent 9j at j ~ 25, interior of the allowed region
        let t9 = [51, 59, 42, 55, 53, 54, 54, 50, 54];
        let r = asym9j_t(t9);
        assert!(r.allowed);
        let exact = {
            let e = ExactEngine::new();
            angmom_exact::ninej_t(&e, t9).to_f64()
        };
        let v = r.value.unwrap();
        // scaled against the two-branch envelope
        let env: f64 = r.branch_terms.unwrap().iter().map(|t| t.abs()).sum();
        assert!(
            (v - exact).abs() <= 0.08 * env.max(1e-300),
            "exact {exact:.3e} asym {v:.3e}"
        );
    }

    #[test]
    fn forbidden_region_reports_absent() {
        let r = asym9j_t([51, 59, 42, 55, 53, 54, 54, 50, 200]);
        assert!(!r.allowed);
        assert!(r.value.is_none());
    }

    #[test]
    fn s0_collapse_matches_asym9j() {
        // s5 = 0: the 12j formula reduces to the 9j value over
        // sqrt((2 j12 + 1)(2 j13 + 1)), on the same floating path
        let inp = TwelveJInput::from_twice([51, 59, 42, 42, 55, 53, 54, 54, 54, 50, 0, 54]);
        let twelve = asym12j(&inp).unwrap();
        let nine = asym9j_t([51, 59, 42, 55, 53, 54, 54, 50, 54]);
        let norm = ((inp.j12.multiplicity() * inp.j13.multiplicity()) as f64).sqrt();
        assert_relative_eq!(
            twelve.value.unwrap(),
            nine.value.unwrap() / norm,
            epsilon = 1e-12
        );
    }

    #[test]
    fn case1_point_against_exact() {
        // j6 = 27 in the paper's first example; exact value from the
        // surd engine, asymptotic expected within a few percent of the
        // branch envelope
        let inp = case1_input(54);
        let r = asym12j(&inp).unwrap();
        assert!(r.allowed);
        let e = ExactEngine::new();
        let exact = e.wigner12j_first(&inp).to_f64();
        let env: f64 = r.branch_terms.unwrap().iter().map(|t| t.abs()).sum();
        assert!(
            (r.value.unwrap() - exact).abs() <= 0.1 * env,
            "exact {exact:.3e} vs asym {:.3e}",
            r.value.unwrap()
        );
    }

    #[test]
    fn spinor_arguments_affine_in_mu_nu() {
        // vary (mu, nu) at fixed geometry: the trig arguments shift by
        // exactly mu*phi12 + nu*phi13 relative to (0, 0)
        let base = case1_input(54);
        let labels = NineLabels::from_twelvej(&base);
        let roots = solve_branches(&labels).unwrap();
        let mut phis = [(0.0, 0.0); 2];
        for r in &roots {
            let cfg = realize_vectors(&labels, r).unwrap();
            let bg = branch_geometry(&labels, &cfg, r).unwrap();
            phis[(r.branch - 1) as usize] = (bg.phi12, bg.phi13);
        }
        let zero = TwelveJInput {
            j125: base.j12,
            j135: base.j13,
            ..base
        };
        let args0 = asym12j(&zero).unwrap().branch_args.unwrap();
        for (tmu, tnu) in [(2, 0), (0, 2), (2, -2), (-2, 2), (2, 2)] {
            let probe = TwelveJInput {
                j125: HalfInt::from_twice(base.j12.twice() + tmu),
                j135: HalfInt::from_twice(base.j13.twice() + tnu),
                ..base
            };
            if !probe.triangles_ok() {
                continue;
            }
            let args = asym12j(&probe).unwrap().branch_args.unwrap();
            let (mu, nu) = (tmu as f64 / 2.0, tnu as f64 / 2.0);
            for b in 0..2 {
                let (p12, p13) = phis[b];
                let expect = args0[b] - mu * p12 - nu * p13;
                assert_relative_eq!(args[b], expect, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn no_nan_across_full_sweep() {
        let inp = case1_input(0);
        for tj6 in 0..=120 {
            let probe = TwelveJInput {
                j6: HalfInt::from_twice(tj6),
                ..inp
            };
            if !probe.triangles_ok() {
                continue;
            }
            let r = asym12j(&probe).unwrap();
            if let Some(v) = r.value {
                assert!(v.is_finite());
            }
        }
    }

    #[test]
    fn region_classification() {
        let inp = case1_input(0);
        let h = HalfInt::from_twice;
        let rows = allowed_region(&inp, h(10), h(98), h(2));
        // forbidden below the window, allowed inside (paper figure range)
        assert_eq!(rows.first().unwrap().1, RegionStatus::Forbidden);
        assert!(rows.iter().any(|r| r.1 == RegionStatus::Allowed));
        let mid = rows.iter().find(|r| r.0.twice() == 54).unwrap();
        assert_eq!(mid.1, RegionStatus::Allowed);
        // every allowed point evaluates finitely
        for (j6, st) in &rows {
            if *st == RegionStatus::Allowed {
                let probe = TwelveJInput { j6: *j6, ..inp };
                let r = asym12j(&probe).unwrap();
                assert!(r.allowed, "j6 = {j6}");
            }
        }
    }

    #[test]
    fn advisory_small_spin_bound() {
        let mut inp = case1_input(54);
        inp.s5 = HalfInt::from_twice(8);
        assert!(matches!(
            asym12j(&inp),
            Err(AsymError::SmallSpinTooLarge { .. })
        ));
    }

    #[test]
    fn float_engine_reference_at_large_j() {
        // one large-j 9j point against the 113+ bit backend
        let t9 = [200, 210, 190, 208, 196, 202, 206, 198, 200];
        let r = asym9j_t(t9);
        if !r.allowed {
            // move the corner inward until allowed
            panic!("expected interior point for this label set");
        }
        let fl = FloatEngine::new(160);
        let exact = angmom_exact::ninej_t(&fl, t9).to_f64();
        let v = r.value.unwrap();
        assert!(
            (v - exact).abs() <= 0.05 * exact.abs().max(1e-300),
            "exact {exact:.4e} vs asym {v:.4e}"
        );
    }
}
