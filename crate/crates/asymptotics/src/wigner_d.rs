//! Wigner small-d rotation matrix elements `d^s_{nu mu}(theta)`.
//!
//! Convention: `d^s_{nu mu}(theta) = <s nu| exp(-i theta S_y) |s mu>`, the
//! north-standard-gauge spinor convention (`d^1_{00} = cos theta`,
//! `d^{1/2}_{1/2,1/2} = cos(theta/2)`).

use crate::AsymError;

/// `d^s_{nu mu}(theta)` with twice-integer spin labels.
///
/// Closed forms for `s <= 2`; the general factorial sum above that.
pub fn wigner_d_t(ts: i32, tnu: i32, tmu: i32, theta: f64) -> Result<f64, AsymError> {
    if ts < 0 || tnu.abs() > ts || tmu.abs() > ts || (ts + tnu) % 2 != 0 || (ts + tmu) % 2 != 0 {
        return Err(AsymError::DIndexOutOfRange {
            ts,
            tnu,
            tmu,
        });
    }
    Ok(match ts {
        0..=4 => closed_form(ts, tnu, tmu, theta),
        _ => d_sum(ts, tnu, tmu, theta),
    })
}

/// Hand-tabulated polynomials in c = cos(theta/2), s = sin(theta/2).
///
/// Rows with negative `nu` use `d_{-nu,-mu} = (-1)^(nu - mu) d_{nu, mu}`.
fn closed_form(ts: i32, tnu: i32, tmu: i32, theta: f64) -> f64 {
    if tnu < 0 {
        let sign = if ((tnu - tmu) / 2).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        return sign * closed_form(ts, -tnu, -tmu, theta);
    }
    let c = (theta / 2.0).cos();
    let s = (theta / 2.0).sin();
    let r3 = 3.0f64.sqrt();
    let r6 = 6.0f64.sqrt();
    match (ts, tnu, tmu) {
        (0, 0, 0) => 1.0,

        (1, 1, 1) => c,
        (1, 1, -1) => -s,

        (2, 2, 2) => c * c,
        (2, 2, 0) => -2.0f64.sqrt() * c * s,
        (2, 2, -2) => s * s,
        (2, 0, 2) => 2.0f64.sqrt() * c * s,
        (2, 0, 0) => c * c - s * s,
        (2, 0, -2) => -2.0f64.sqrt() * c * s,

        (3, 3, 3) => c * c * c,
        (3, 3, 1) => -r3 * c * c * s,
        (3, 3, -1) => r3 * c * s * s,
        (3, 3, -3) => -s * s * s,
        (3, 1, 3) => r3 * c * c * s,
        (3, 1, 1) => c * (3.0 * c * c - 2.0),
        (3, 1, -1) => s * (3.0 * s * s - 2.0),
        (3, 1, -3) => r3 * c * s * s,

        (4, 4, 4) => c.powi(4),
        (4, 4, 2) => -2.0 * c.powi(3) * s,
        (4, 4, 0) => r6 * c * c * s * s,
        (4, 4, -2) => -2.0 * c * s.powi(3),
        (4, 4, -4) => s.powi(4),
        (4, 2, 4) => 2.0 * c.powi(3) * s,
        (4, 2, 2) => c * c * (c * c - 3.0 * s * s),
        (4, 2, 0) => -r6 * c * s * (c * c - s * s),
        (4, 2, -2) => s * s * (3.0 * c * c - s * s),
        (4, 2, -4) => -2.0 * c * s.powi(3),
        (4, 0, 4) => r6 * c * c * s * s,
        (4, 0, 2) => r6 * c * s * (c * c - s * s),
        (4, 0, 0) => c.powi(4) - 4.0 * c * c * s * s + s.powi(4),
        (4, 0, -2) => -r6 * c * s * (c * c - s * s),
        (4, 0, -4) => r6 * c * c * s * s,

        _ => d_sum(ts, tnu, tmu, theta),
    }
}

/// General factorial sum (Wigner's formula), usable for any spin.
fn d_sum(ts: i32, tnu: i32, tmu: i32, theta: f64) -> f64 {
    let fact = |n: i32| -> f64 { (1..=n).map(f64::from).product() };
    let pref = (fact((ts + tnu) / 2)
        * fact((ts - tnu) / 2)
        * fact((ts + tmu) / 2)
        * fact((ts - tmu) / 2))
    .sqrt();
    let c = (theta / 2.0).cos();
    let s = (theta / 2.0).sin();
    let dnu_mu = (tnu - tmu) / 2;
    let mut total = 0.0;
    for k in 0..=ts {
        let a = (ts + tmu) / 2 - k;
        let b = (ts - tnu) / 2 - k;
        let d = k + dnu_mu;
        if a < 0 || b < 0 || d < 0 {
            continue;
        }
        let sign = if (k + dnu_mu).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        total += sign * c.powi(a + b) * s.powi(d + k) / (fact(a) * fact(b) * fact(k) * fact(d));
    }
    pref * total
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn identity_rotation() {
        for ts in 0..=6 {
            let mut tnu = -ts;
            while tnu <= ts {
                let mut tmu = -ts;
                while tmu <= ts {
                    let v = wigner_d_t(ts, tnu, tmu, 0.0).unwrap();
                    let expect = if tnu == tmu { 1.0 } else { 0.0 };
                    assert_relative_eq!(v, expect, epsilon = 1e-14);
                    tmu += 2;
                }
                tnu += 2;
            }
        }
    }

    #[test]
    fn known_closed_forms() {
        let th = 0.7;
        assert_relative_eq!(wigner_d_t(2, 0, 0, th).unwrap(), th.cos(), epsilon = 1e-15);
        assert_relative_eq!(
            wigner_d_t(1, 1, 1, th).unwrap(),
            (th / 2.0).cos(),
            epsilon = 1e-15
        );
        // d^1_{-1,1} = (1 - cos)/2 = sin^2(theta/2)
        assert_relative_eq!(
            wigner_d_t(2, -2, 2, th).unwrap(),
            (th / 2.0).sin().powi(2),
            epsilon = 1e-15
        );
    }

    #[test]
    fn closed_forms_match_general_sum() {
        for ts in 0..=4 {
            for theta in [0.1, 0.9, 1.7, 2.9] {
                let mut tnu = -ts;
                while tnu <= ts {
                    let mut tmu = -ts;
                    while tmu <= ts {
                        if (ts + tnu) % 2 == 0 && (ts + tmu) % 2 == 0 {
                            let a = closed_form(ts, tnu, tmu, theta);
                            let b = d_sum(ts, tnu, tmu, theta);
                            assert_relative_eq!(a, b, epsilon = 1e-13);
                        }
                        tmu += 2;
                    }
                    tnu += 2;
                }
            }
        }
    }

    #[test]
    fn unitarity_rows() {
        // sum_nu d^s_{nu mu}^2 = 1 for s <= 3
        for ts in 0..=6 {
            for theta in [0.1, 1.0, 2.0, 3.0] {
                let mut tmu = -ts;
                while tmu <= ts {
                    if (ts + tmu) % 2 == 0 {
                        let mut total = 0.0;
                        let mut tnu = -ts;
                        while tnu <= ts {
                            if (ts + tnu) % 2 == 0 {
                                total += wigner_d_t(ts, tnu, tmu, theta).unwrap().powi(2);
                            }
                            tnu += 2;
                        }
                        assert_relative_eq!(total, 1.0, epsilon = 1e-12);
                    }
                    tmu += 2;
                }
            }
        }
    }

    #[test]
    fn index_range_errors() {
        assert!(wigner_d_t(2, 4, 0, 0.3).is_err());
        assert!(wigner_d_t(2, 1, 0, 0.3).is_err()); // parity mismatch
    }
}
