//! Sweep execution and error summaries.

use angmom_exact::{twelvej_t, ExactEngine, FloatEngine, HalfInt};
use asymptotics::{asym12j_with, RegionStatus};
use rayon::prelude::*;
use thiserror::Error;

use crate::config::{ExactBackend, Mode, SweepConfig};

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("numerical degeneracy at twice_j6 = {twice_j6}: {message}")]
    Degeneracy { twice_j6: i32, message: String },
}

/// One sweep row; absent fields render as empty CSV cells.
#[derive(Clone, Debug, PartialEq)]
pub struct CompareRow {
    pub j6: HalfInt,
    pub exact: Option<f64>,
    pub asym: Option<f64>,
    pub abs_error: Option<f64>,
    pub status: RegionStatus,
}

/// Engines shared across a sweep; the 6j caches accept concurrent readers.
pub struct Engines {
    pub exact: ExactEngine,
    pub float: FloatEngine,
}

impl Engines {
    pub fn new(precision_bits: usize) -> Self {
        Engines {
            exact: ExactEngine::new(),
            float: FloatEngine::new(precision_bits),
        }
    }
}

/// Evaluate every grid point; rows come back in ascending `j6`.
pub fn run_sweep(cfg: &SweepConfig, engines: &Engines) -> Result<Vec<CompareRow>, SweepError> {
    let grid = cfg.j6_grid();
    let want_exact = matches!(cfg.mode, Mode::Exact | Mode::Compare);
    let want_asym = matches!(cfg.mode, Mode::Asym | Mode::Compare);
    // advisory bound: accept whatever small spin the config carries
    let ts_max = cfg.twice_s5.max(asymptotics::DEFAULT_S_MAX);
    let mut rows: Vec<CompareRow> = grid
        .par_iter()
        .map(|&tj6| {
            let inp = cfg.input_at(tj6);
            let exact = if want_exact {
                Some(match cfg.exact_backend {
                    ExactBackend::Surd => engines.exact.wigner12j_first(&inp).to_f64(),
                    ExactBackend::Bigfloat => twelvej_t(&engines.float, inp.to_twice()).to_f64(),
                })
            } else {
                None
            };
            let (asym, status) = match asym12j_with(&inp, ts_max) {
                Ok(r) => {
                    let status = if r.allowed {
                        RegionStatus::Allowed
                    } else if r.caustic {
                        RegionStatus::Caustic
                    } else {
                        RegionStatus::Forbidden
                    };
                    (r.value, status)
                }
                Err(_) => (None, RegionStatus::Caustic),
            };
            let asym = if want_asym { asym } else { None };
            let abs_error = match (exact, asym) {
                (Some(e), Some(a)) => Some((a - e).abs()),
                _ => None,
            };
            CompareRow {
                j6: HalfInt::from_twice(tj6),
                exact,
                asym,
                abs_error,
                status,
            }
        })
        .collect();
    rows.sort_by_key(|r| r.j6.twice());
    Ok(rows)
}

/// Error summary over the allowed interior.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Summary {
    pub max_abs_error: f64,
    pub rms_error: f64,
    pub rms_exact: f64,
    /// `rms_error / rms_exact`
    pub ratio: f64,
    pub rows_used: usize,
}

/// Statistics over allowed rows, excluding the two rows nearest each end of
/// every contiguous allowed run (the caustic-adjacent points).
pub fn summarize(rows: &[CompareRow]) -> Option<Summary> {
    let mut used: Vec<&CompareRow> = Vec::new();
    let mut run: Vec<&CompareRow> = Vec::new();
    let mut flush = |run: &mut Vec<&CompareRow>, used: &mut Vec<&CompareRow>| {
        if run.len() > 4 {
            used.extend(run[2..run.len() - 2].iter().copied());
        }
        run.clear();
    };
    for row in rows {
        if row.status == RegionStatus::Allowed {
            run.push(row);
        } else {
            flush(&mut run, &mut used);
        }
    }
    flush(&mut run, &mut used);
    let pairs: Vec<(f64, f64)> = used
        .iter()
        .filter_map(|r| match (r.exact, r.abs_error) {
            (Some(e), Some(err)) => Some((e, err)),
            _ => None,
        })
        .collect();
    if pairs.is_empty() {
        return None;
    }
    let n = pairs.len() as f64;
    let rms_error = (pairs.iter().map(|(_, e)| e * e).sum::<f64>() / n).sqrt();
    let rms_exact = (pairs.iter().map(|(x, _)| x * x).sum::<f64>() / n).sqrt();
    Some(Summary {
        max_abs_error: pairs.iter().map(|(_, e)| *e).fold(0.0, f64::max),
        rms_error,
        rms_exact,
        ratio: rms_error / rms_exact,
        rows_used: pairs.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mkrow(t: i32, status: RegionStatus, exact: f64, err: f64) -> CompareRow {
        CompareRow {
            j6: HalfInt::from_twice(t),
            exact: Some(exact),
            asym: Some(exact + err),
            abs_error: Some(err),
            status,
        }
    }

    #[test]
    fn summary_trims_run_edges() {
        let mut rows = vec![mkrow(0, RegionStatus::Forbidden, 0.0, 0.0)];
        for k in 1..=9 {
            rows.push(mkrow(2 * k, RegionStatus::Allowed, 1.0, 0.1 * k as f64));
        }
        rows.push(mkrow(20, RegionStatus::Caustic, 0.0, 0.0));
        let s = summarize(&rows).unwrap();
        // rows 3..=7 survive the trim
        assert_eq!(s.rows_used, 5);
        assert!((s.max_abs_error - 0.7).abs() < 1e-12);
        assert!((s.rms_exact - 1.0).abs() < 1e-12);
    }

    #[test]
    fn perfect_agreement_is_zero() {
        let rows: Vec<_> = (1..=9)
            .map(|k| mkrow(2 * k, RegionStatus::Allowed, 2.0, 0.0))
            .collect();
        let s = summarize(&rows).unwrap();
        assert_eq!(s.max_abs_error, 0.0);
        assert_eq!(s.ratio, 0.0);
    }

    #[test]
    fn short_runs_are_dropped() {
        let rows: Vec<_> = (1..=4)
            .map(|k| mkrow(2 * k, RegionStatus::Allowed, 1.0, 0.5))
            .collect();
        assert!(summarize(&rows).is_none());
    }

    #[test]
    fn single_interior_row() {
        let rows: Vec<_> = (1..=5)
            .map(|k| mkrow(2 * k, RegionStatus::Allowed, 3.0, 0.25))
            .collect();
        let s = summarize(&rows).unwrap();
        assert_eq!(s.rows_used, 1);
        assert!((s.rms_error - 0.25).abs() < 1e-12);
        assert!((s.max_abs_error - 0.25).abs() < 1e-12);
    }
}
