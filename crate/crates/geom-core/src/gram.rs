//! The 4x4 Gram matrix, its determinant as a quartic in the unknown dot
//! product, and the physical root pair.

use nalgebra::{Matrix4, Vector3};

use crate::lengths::{xy_sum, JLengths, NineLabels};
use crate::GeomError;

/// Known dot products of the Gram matrix plus the two unknowns.
#[derive(Clone, Copy, Debug)]
pub struct GramData {
    pub g12: f64,
    pub g34: f64,
    pub g13: f64,
    pub g24: f64,
    pub xy: f64,
}

impl GramData {
    pub fn new(l: &JLengths) -> Self {
        GramData {
            g12: 0.5 * (l.j12 * l.j12 - l.j1 * l.j1 - l.j2 * l.j2),
            g34: 0.5 * (l.j34 * l.j34 - l.j3 * l.j3 - l.j4 * l.j4),
            g13: 0.5 * (l.j13 * l.j13 - l.j1 * l.j1 - l.j3 * l.j3),
            g24: 0.5 * (l.j24 * l.j24 - l.j2 * l.j2 - l.j4 * l.j4),
            xy: xy_sum(l),
        }
    }
}

/// The Gram matrix of `J1..J4` at dot products `(x, y)`.
pub fn gram_matrix(l: &JLengths, x: f64, y: f64) -> Matrix4<f64> {
    let g = GramData::new(l);
    Matrix4::new(
        l.j1 * l.j1,
        g.g12,
        g.g13,
        x,
        g.g12,
        l.j2 * l.j2,
        y,
        g.g24,
        g.g13,
        y,
        l.j3 * l.j3,
        g.g34,
        x,
        g.g24,
        g.g34,
        l.j4 * l.j4,
    )
}

/// `det G(x, y)`; vanishes whenever four 3-vectors realize the dot products.
pub fn gram_det(l: &JLengths, x: f64, y: f64) -> f64 {
    gram_matrix(l, x, y).determinant()
}

/// Degree-capped polynomial in one variable, coefficients low-to-high.
#[derive(Clone, Copy, Debug)]
struct Poly([f64; 5]);

impl Poly {
    fn constant(c: f64) -> Self {
        Poly([c, 0.0, 0.0, 0.0, 0.0])
    }

    fn linear(c0: f64, c1: f64) -> Self {
        Poly([c0, c1, 0.0, 0.0, 0.0])
    }

    fn mul(self, o: Poly) -> Poly {
        let mut out = [0.0; 5];
        for (i, a) in self.0.iter().enumerate() {
            if *a == 0.0 {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if i + j < 5 {
                    out[i + j] += a * b;
                }
            }
        }
        Poly(out)
    }

    fn add(self, o: Poly) -> Poly {
        let mut out = self.0;
        for (i, b) in o.0.iter().enumerate() {
            out[i] += b;
        }
        Poly(out)
    }

    fn scale(self, k: f64) -> Poly {
        Poly(self.0.map(|c| c * k))
    }
}

/// Coefficients (low-to-high) of `P(x) = det G(x, K - x)` as a quartic.
///
/// Exact polynomial Laplace expansion over degree-1 entries; no fitting.
pub fn quartic_coeffs(l: &JLengths) -> [f64; 5] {
    let g = GramData::new(l);
    let k = g.xy;
    let e = |r: usize, c: usize| -> Poly {
        // entry (r, c) of the symmetric Gram matrix as a polynomial in x
        match (r.min(c), r.max(c)) {
            (0, 0) => Poly::constant(l.j1 * l.j1),
            (1, 1) => Poly::constant(l.j2 * l.j2),
            (2, 2) => Poly::constant(l.j3 * l.j3),
            (3, 3) => Poly::constant(l.j4 * l.j4),
            (0, 1) => Poly::constant(g.g12),
            (0, 2) => Poly::constant(g.g13),
            (2, 3) => Poly::constant(g.g34),
            (1, 3) => Poly::constant(g.g24),
            (0, 3) => Poly::linear(0.0, 1.0),
            (1, 2) => Poly::linear(k, -1.0),
            _ => unreachable!(),
        }
    };
    // Laplace along the first row with cofactor 3x3 determinants
    let det3 = |r: [usize; 3], c: [usize; 3]| -> Poly {
        let m = |i: usize, j: usize| e(r[i], c[j]);
        let mut acc = m(0, 0).mul(m(1, 1).mul(m(2, 2)).add(m(1, 2).mul(m(2, 1)).scale(-1.0)));
        acc = acc.add(
            m(0, 1)
                .mul(m(1, 0).mul(m(2, 2)).add(m(1, 2).mul(m(2, 0)).scale(-1.0)))
                .scale(-1.0),
        );
        acc.add(m(0, 2).mul(m(1, 0).mul(m(2, 1)).add(m(1, 1).mul(m(2, 0)).scale(-1.0))))
    };
    let rows = [1, 2, 3];
    let mut acc = e(0, 0).mul(det3(rows, [1, 2, 3]));
    acc = acc.add(e(0, 1).mul(det3(rows, [0, 2, 3])).scale(-1.0));
    acc = acc.add(e(0, 2).mul(det3(rows, [0, 1, 3])));
    acc = acc.add(e(0, 3).mul(det3(rows, [0, 1, 2])).scale(-1.0));
    acc.0
}

/// One real solution of the polygon constraints.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootPair {
    pub x: f64,
    pub y: f64,
    /// 1-based branch index once angles are classified; 1 = cosine branch,
    /// 2 = sine branch (all dihedral angles in `[0, pi]`).
    pub branch: u8,
}

/// Both physical roots of the quartic, unlabeled (branch set to 0).
///
/// Returns an empty vector in the classically forbidden region and
/// `Err(Caustic)` when the two roots have merged within tolerance.
pub fn physical_roots(labels: &NineLabels) -> Result<Vec<RootPair>, GeomError> {
    let l = labels.lengths();
    let k = xy_sum(&l);
    let coeffs = quartic_coeffs(&l);
    let scale = l.max_len().powi(2).max(1.0);
    if coeffs[4].abs() < 1e-12 {
        return Err(GeomError::Degenerate("quartic leading coefficient vanished".into()));
    }
    // companion matrix of the monic quartic
    let c = coeffs.map(|v| v / coeffs[4]);
    let companion = Matrix4::new(
        0.0, 0.0, 0.0, -c[0], //
        1.0, 0.0, 0.0, -c[1], //
        0.0, 1.0, 0.0, -c[2], //
        0.0, 0.0, 1.0, -c[3],
    );
    let eigen = companion.complex_eigenvalues();
    let mut real_roots: Vec<f64> = Vec::new();
    for ev in eigen.iter() {
        if ev.im.abs() <= 1e-6 * scale {
            real_roots.push(ev.re);
        }
    }
    real_roots.sort_by(|a, b| a.partial_cmp(b).unwrap());

    // realizability: positive semidefinite leading minors
    let tol = 1e-9;
    let mut phys: Vec<RootPair> = Vec::new();
    for &x in &real_roots {
        let y = k - x;
        let g = gram_matrix(&l, x, y);
        let m1 = g[(0, 0)];
        let m2 = g.fixed_view::<2, 2>(0, 0).into_owned().determinant();
        let m3 = g.fixed_view::<3, 3>(0, 0).into_owned().determinant();
        if m1 > 0.0 && m2 > -tol * scale.powi(2) && m3 > -tol * scale.powi(3) {
            phys.push(RootPair { x, y, branch: 0 });
        }
    }
    // collapse numerically repeated roots; a merged pair is a caustic
    phys.dedup_by(|a, b| (a.x - b.x).abs() <= 1e-7 * scale);
    match phys.len() {
        0 => Ok(Vec::new()),
        2 => Ok(phys),
        1 => Err(GeomError::Caustic(format!(
            "single realizable root x = {:.6} (merged pair)",
            phys[0].x
        ))),
        n => Err(GeomError::Degenerate(format!("{n} realizable roots"))),
    }
}

/// Realized vectors for one root, oriented so `J6 . (J12 x J13) < 0`.
#[derive(Clone, Debug)]
pub struct VectorConfig {
    pub j1: Vector3<f64>,
    pub j2: Vector3<f64>,
    pub j3: Vector3<f64>,
    pub j4: Vector3<f64>,
    pub j6: Vector3<f64>,
    pub j12: Vector3<f64>,
    pub j34: Vector3<f64>,
    pub j13: Vector3<f64>,
    pub j24: Vector3<f64>,
}

impl VectorConfig {
    /// Vectors in the canonical edge order `J1 J2 J3 J4 J6 J12 J34 J13 J24`.
    pub fn edge_order(&self) -> [Vector3<f64>; 9] {
        [
            self.j1, self.j2, self.j3, self.j4, self.j6, self.j12, self.j34, self.j13, self.j24,
        ]
    }

    pub fn orientation(&self) -> f64 {
        self.j6.dot(&self.j12.cross(&self.j13))
    }

    fn mirror_z(&mut self) {
        let flip = |v: &mut Vector3<f64>| v.z = -v.z;
        flip(&mut self.j1);
        flip(&mut self.j2);
        flip(&mut self.j3);
        flip(&mut self.j4);
        flip(&mut self.j6);
        flip(&mut self.j12);
        flip(&mut self.j34);
        flip(&mut self.j13);
        flip(&mut self.j24);
    }
}

/// Build the nine vectors from the Gram data of one root.
///
/// `J1 J2 J3` come from the Cholesky factorization of the leading 3x3 block,
/// `J4` from its known dot products against them, `J6` from closure; the
/// configuration is mirrored if needed to satisfy `J6 . (J12 x J13) < 0`.
pub fn realize_vectors(labels: &NineLabels, root: &RootPair) -> Result<VectorConfig, GeomError> {
    let l = labels.lengths();
    let g = gram_matrix(&l, root.x, root.y);
    let scale = l.max_len().powi(2);
    let clamp = |v: f64, what: &str| -> Result<f64, GeomError> {
        if v < -1e-9 * scale {
            Err(GeomError::Caustic(format!(
                "negative pivot in Gram factorization ({what}: {v:.3e})"
            )))
        } else {
            Ok(v.max(0.0))
        }
    };
    let a11 = clamp(g[(0, 0)], "J1^2")?.sqrt();
    if a11 == 0.0 {
        return Err(GeomError::Degenerate("zero-length J1".into()));
    }
    let a21 = g[(0, 1)] / a11;
    let a22 = clamp(g[(1, 1)] - a21 * a21, "J2 residual")?.sqrt();
    let a31 = g[(0, 2)] / a11;
    if a22 == 0.0 {
        return Err(GeomError::Caustic("collinear J1, J2".into()));
    }
    let a32 = (g[(1, 2)] - a21 * a31) / a22;
    let a33 = clamp(g[(2, 2)] - a31 * a31 - a32 * a32, "J3 residual")?.sqrt();
    let j1 = Vector3::new(a11, 0.0, 0.0);
    let j2 = Vector3::new(a21, a22, 0.0);
    let j3 = Vector3::new(a31, a32, a33);
    // forward substitution for J4 against the triangular rows
    if a33 == 0.0 {
        return Err(GeomError::Caustic("coplanar J1, J2, J3".into()));
    }
    let b = [g[(0, 3)], g[(1, 3)], g[(2, 3)]];
    let x4 = b[0] / a11;
    let y4 = (b[1] - a21 * x4) / a22;
    let z4 = (b[2] - a31 * x4 - a32 * y4) / a33;
    let j4 = Vector3::new(x4, y4, z4);
    let j6 = -(j1 + j2 + j3 + j4);
    let mut cfg = VectorConfig {
        j1,
        j2,
        j3,
        j4,
        j6,
        j12: j1 + j2,
        j34: j3 + j4,
        j13: j1 + j3,
        j24: j2 + j4,
    };
    if cfg.orientation() > 0.0 {
        cfg.mirror_z();
    }
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn case1_labels(tj6: i32) -> NineLabels {
        NineLabels::new([51, 59, 42, 55, 53, 54, 54, 50, tj6])
    }

    /// cofactor-expansion oracle for 4x4 determinants
    fn det4_cofactor(m: &Matrix4<f64>) -> f64 {
        let minor = |r: usize, c: usize| {
            let mut vals = [0.0; 9];
            let mut k = 0;
            for i in 0..4 {
                if i == r {
                    continue;
                }
                for j in 0..4 {
                    if j == c {
                        continue;
                    }
                    vals[k] = m[(i, j)];
                    k += 1;
                }
            }
            vals[0] * (vals[4] * vals[8] - vals[5] * vals[7])
                - vals[1] * (vals[3] * vals[8] - vals[5] * vals[6])
                + vals[2] * (vals[3] * vals[7] - vals[4] * vals[6])
        };
        (0..4).fold(0.0, |acc, c| {
            let sign = if c % 2 == 0 { 1.0 } else { -1.0 };
            acc + sign * m[(0, c)] * minor(0, c)
        })
    }

    #[test]
    fn determinant_matches_cofactor_oracle() {
        let l = case1_labels(54).lengths();
        for (x, y) in [(100.0, 200.0), (-50.0, 610.0), (0.0, 0.0)] {
            let m = gram_matrix(&l, x, y);
            assert_relative_eq!(
                gram_det(&l, x, y),
                det4_cofactor(&m),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn quartic_interpolates_determinant() {
        let labels = case1_labels(54);
        let l = labels.lengths();
        let k = xy_sum(&l);
        let c = quartic_coeffs(&l);
        for x in [-300.0f64, -77.0, 0.0, 250.0, 691.0] {
            let poly: f64 = (0..5).map(|i| c[i] * x.powi(i as i32)).sum();
            let det = gram_det(&l, x, k - x);
            assert_relative_eq!(poly, det, max_relative = 1e-9, epsilon = 1e-3);
        }
        // monic up to scaling: leading coefficient of x^2 (K-x)^2 is 1
        assert_relative_eq!(c[4], 1.0, max_relative = 1e-12);
    }

    #[test]
    fn case1_interior_has_two_roots() {
        // j6 = 27 (paper case 1 mid-sweep): two real realizable roots
        let labels = case1_labels(54);
        let roots = physical_roots(&labels).unwrap();
        assert_eq!(roots.len(), 2);
        assert_relative_eq!(roots[0].x, -77.5399403221595, max_relative = 1e-9);
        assert_relative_eq!(roots[1].x, 691.0412978701335, max_relative = 1e-9);
        let l = labels.lengths();
        for r in &roots {
            assert!((r.x + r.y - xy_sum(&l)).abs() < 1e-9 * l.max_len().powi(2));
            let scale8 = l.max_len().powi(8);
            assert!(gram_det(&l, r.x, r.y).abs() <= 1e-8 * scale8);
        }
    }

    #[test]
    fn forbidden_region_is_empty() {
        // far outside the allowed window: no closed polygon
        let labels = case1_labels(100);
        let roots = physical_roots(&labels).unwrap();
        assert!(roots.is_empty());
    }

    #[test]
    fn perturbed_root_leaves_the_surface() {
        let labels = case1_labels(54);
        let l = labels.lengths();
        let roots = physical_roots(&labels).unwrap();
        let r = &roots[1];
        let off = gram_det(&l, r.x + 1.0, r.y - 1.0).abs();
        assert!(off > 1e3, "determinant should move off zero: {off}");
    }

    #[test]
    fn realized_vectors_reproduce_gram_data() {
        let labels = case1_labels(54);
        let l = labels.lengths();
        for root in physical_roots(&labels).unwrap() {
            let cfg = realize_vectors(&labels, &root).unwrap();
            // lengths
            let lens = l.edge_order();
            for (v, expect) in cfg.edge_order().iter().zip(lens) {
                assert_relative_eq!(v.norm(), expect, max_relative = 1e-10);
            }
            // closure
            let total = cfg.j1 + cfg.j2 + cfg.j3 + cfg.j4 + cfg.j6;
            assert!(total.norm() <= 1e-10 * l.max_len());
            // the two solved dot products
            assert_relative_eq!(cfg.j1.dot(&cfg.j4), root.x, max_relative = 1e-9);
            assert_relative_eq!(cfg.j2.dot(&cfg.j3), root.y, max_relative = 1e-9);
            // fixed dot products
            let g = GramData::new(&l);
            assert_relative_eq!(cfg.j1.dot(&cfg.j2), g.g12, max_relative = 1e-9);
            assert_relative_eq!(cfg.j2.dot(&cfg.j4), g.g24, max_relative = 1e-9);
            // orientation rule
            assert!(cfg.orientation() < 0.0);
        }
    }
}
