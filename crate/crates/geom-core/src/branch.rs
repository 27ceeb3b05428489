//! Per-branch geometry: dihedral angles, action, amplitude data.
//!
//! The action of a branch is assembled from the three sub-tetrahedra obtained
//! by inserting the `J1 + J6` edge into the vector diagram; their external
//! dihedral angles close around that edge (`sum eps_k theta_k = 2 pi m`),
//! which identifies the branch and yields the nine edge angles
//! `psi_r = (1/2) sum_k eps_k theta_k(r)` together with `S = 2 sum_r J_r psi_r`.

use std::f64::consts::PI;

use nalgebra::Vector3;

use crate::gram::{physical_roots, realize_vectors, RootPair, VectorConfig};
use crate::lengths::NineLabels;
use crate::GeomError;

/// Tetra edge slots: vertices (0,1,2,3) with r01=A r02=B r12=C r23=D r13=E r03=F.
const TETRA_EDGES: [((usize, usize), usize); 6] = [
    ((0, 1), 0), // A
    ((0, 2), 1), // B
    ((1, 2), 2), // C
    ((2, 3), 3), // D
    ((1, 3), 4), // E
    ((0, 3), 5), // F
];

/// Occurrences of each diagram edge (canonical order
/// `J1 J2 J3 J4 J6 J12 J34 J13 J24`) in the three sub-tetrahedra.
const SLOT_OCCURRENCES: [&[(usize, usize)]; 9] = [
    &[(0, 0), (2, 4)], // J1:  tetra0 slot A, tetra2 slot E
    &[(0, 1), (1, 3)], // J2
    &[(1, 0), (2, 5)], // J3
    &[(1, 1)],         // J4
    &[(0, 4), (2, 2)], // J6
    &[(0, 2)],         // J12
    &[(0, 3), (1, 2)], // J34
    &[(2, 0)],         // J13
    &[(1, 5), (2, 1)], // J24
];

/// Slot of the inserted x-edge in each tetrahedron.
const X_SLOTS: [(usize, usize); 3] = [(0, 5), (1, 4), (2, 3)];

const COMBOS: [[f64; 3]; 4] = [
    [1.0, 1.0, 1.0],
    [1.0, 1.0, -1.0],
    [1.0, -1.0, 1.0],
    [1.0, -1.0, -1.0],
];

fn tetra_coords(r: [f64; 6]) -> Option<[Vector3<f64>; 4]> {
    let [a, b, c, d, e, f] = r;
    let p0 = Vector3::zeros();
    let p1 = Vector3::new(a, 0.0, 0.0);
    if a <= 0.0 {
        return None;
    }
    let x2 = (a * a + b * b - c * c) / (2.0 * a);
    let y2sq = b * b - x2 * x2;
    let tol = 1e-12 * (a * a + b * b);
    if y2sq <= tol {
        return None;
    }
    let y2 = y2sq.sqrt();
    let p2 = Vector3::new(x2, y2, 0.0);
    let x3 = (a * a + f * f - e * e) / (2.0 * a);
    let y3 = (b * b + f * f - d * d - 2.0 * x2 * x3) / (2.0 * y2);
    let z3sq = f * f - x3 * x3 - y3 * y3;
    if z3sq < -tol {
        return None;
    }
    let p3 = Vector3::new(x3, y3, z3sq.max(0.0).sqrt());
    Some([p0, p1, p2, p3])
}

/// External dihedral angles (one per edge slot) of an embeddable tetrahedron.
fn tetra_external_angles(r: [f64; 6]) -> Option<[f64; 6]> {
    let p = tetra_coords(r)?;
    let mut out = [0.0; 6];
    for ((i, j), slot) in TETRA_EDGES {
        let (k, l) = match (i, j) {
            (0, 1) => (2, 3),
            (0, 2) => (1, 3),
            (1, 2) => (0, 3),
            (2, 3) => (0, 1),
            (1, 3) => (0, 2),
            (0, 3) => (1, 2),
            _ => unreachable!(),
        };
        let e = p[j] - p[i];
        let n1 = e.cross(&(p[k] - p[i]));
        let n2 = e.cross(&(p[l] - p[i]));
        let denom = n1.norm() * n2.norm();
        if denom == 0.0 {
            return None;
        }
        let internal = (n1.dot(&n2) / denom).clamp(-1.0, 1.0).acos();
        out[slot] = PI - internal;
    }
    Some(out)
}

/// The three sub-tetra length tuples at inserted edge length `xlen`.
fn tetra_lengths(labels: &NineLabels, xlen: f64) -> [[f64; 6]; 3] {
    let l = labels.lengths();
    [
        [l.j1, l.j2, l.j12, l.j34, l.j6, xlen],
        [l.j3, l.j4, l.j34, l.j2, xlen, l.j24],
        [l.j13, l.j24, l.j6, xlen, l.j1, l.j3],
    ]
}

fn x_edge_angles(labels: &NineLabels, xlen: f64) -> Option<[f64; 3]> {
    let ls = tetra_lengths(labels, xlen);
    let mut th = [0.0; 3];
    for (k, (t, slot)) in ls.iter().zip(X_SLOTS).enumerate() {
        let angles = tetra_external_angles(*t)?;
        let _ = t;
        th[k] = angles[slot.1];
    }
    Some(th)
}

/// One branch of the semiclassical geometry.
#[derive(Clone, Debug)]
pub struct BranchGeometry {
    pub root: RootPair,
    /// triple products of the realized configuration
    pub v123: f64,
    pub v432: f64,
    pub v214: f64,
    pub v341: f64,
    /// orientation triple product `J6 . (J12 x J13)`
    pub v: f64,
    /// `|V123 V432 - V214 V341|`
    pub amp_den: f64,
    /// external dihedral angles in edge order `J1 J2 J3 J4 J6 J12 J34 J13 J24`
    pub psi: [f64; 9],
    /// internal dihedral at `J12` between the `(J12,J13)` and `(J12,J6)` planes
    pub phi12: f64,
    /// internal dihedral at `J13` between the `(J13,J12)` and `(J13,J6)` planes
    pub phi13: f64,
    /// angle between `J12` and `J13`
    pub theta: f64,
    /// branch action `2 sum_r J_r psi_r`
    pub s_action: f64,
    /// evaluation-grade phase: the branch contributes
    /// `cos(eval_arg - mu phi12 - nu phi13) / sqrt(amp_den)`
    pub eval_arg: f64,
    /// closure data of the inserted-edge construction
    pub eps: [i8; 3],
    pub winding: i32,
    pub closure_residual: f64,
    pub caustic: bool,
}

struct CanonBranch {
    eps: [f64; 3],
    m: i32,
    resid: f64,
    psi_canon: [f64; 9],
    s_canon: f64,
    d2_sign: f64,
    in_0_pi: bool,
}

fn canon_branch(labels: &NineLabels, xlen: f64) -> Result<CanonBranch, GeomError> {
    let th = x_edge_angles(labels, xlen).ok_or_else(|| {
        GeomError::Degenerate("sub-tetrahedron not embeddable at realized root".into())
    })?;
    let mut best: Option<([f64; 3], i32, f64)> = None;
    for eps in COMBOS {
        let g: f64 = (0..3).map(|k| eps[k] * th[k]).sum();
        let m = (g / (2.0 * PI)).round() as i32;
        let resid = (g - 2.0 * PI * m as f64).abs();
        if best.map_or(true, |(_, _, r)| resid < r) {
            best = Some((eps, m, resid));
        }
    }
    let (eps, m, resid) = best.unwrap();
    if resid > 1e-6 {
        return Err(GeomError::Degenerate(format!(
            "dihedral closure residual {resid:.2e} at x = {xlen:.6}"
        )));
    }
    // second derivative sign of the closure defect along the inserted edge
    let mut h = (1e-6 * xlen).max(1e-8);
    let d2 = loop {
        let up = x_edge_angles(labels, xlen + h);
        let dn = x_edge_angles(labels, xlen - h);
        match (up, dn) {
            (Some(u), Some(d)) => {
                let gu: f64 = (0..3).map(|k| eps[k] * u[k]).sum();
                let gd: f64 = (0..3).map(|k| eps[k] * d[k]).sum();
                break (gu - gd) / (2.0 * h);
            }
            _ if h > 1e-12 * xlen.max(1.0) => h *= 0.1,
            _ => {
                return Err(GeomError::Caustic(
                    "cannot probe closure curvature at the embeddability edge".into(),
                ))
            }
        }
    };
    let tetra_angle_tables: Vec<[f64; 6]> = tetra_lengths(labels, xlen)
        .iter()
        .map(|t| tetra_external_angles(*t).expect("embeddable: checked above"))
        .collect();
    let mut psi_canon = [0.0; 9];
    for (edge, occ) in SLOT_OCCURRENCES.iter().enumerate() {
        psi_canon[edge] = 0.5
            * occ
                .iter()
                .map(|&(k, slot)| eps[k] * tetra_angle_tables[k][slot])
                .sum::<f64>();
    }
    let lens = labels.lengths().edge_order();
    let s_canon = 2.0 * psi_canon.iter().zip(lens).map(|(p, l)| p * l).sum::<f64>();
    let in_0_pi = psi_canon.iter().all(|&p| (-1e-9..=PI + 1e-9).contains(&p));
    Ok(CanonBranch {
        eps,
        m,
        resid,
        psi_canon,
        s_canon,
        d2_sign: if d2 >= 0.0 { 1.0 } else { -1.0 },
        in_0_pi,
    })
}

fn wrap_pi(a: f64) -> f64 {
    let mut w = (a + PI).rem_euclid(2.0 * PI) - PI;
    if w <= -PI {
        w += 2.0 * PI;
    }
    w
}

/// Both physical roots with branch labels assigned.
///
/// The root whose canonical dihedral angles all lie in `[0, pi]` is branch 2
/// (the sine branch); the other is branch 1. Ties and failures of the range
/// test fall back to branch 2 at the larger `x`.
pub fn solve_branches(labels: &NineLabels) -> Result<Vec<RootPair>, GeomError> {
    let mut roots = physical_roots(labels)?;
    if roots.is_empty() {
        return Ok(roots);
    }
    let mut flags = [false; 2];
    for (i, r) in roots.iter().enumerate() {
        let cfg = realize_vectors(labels, r)?;
        let xlen = (cfg.j1 + cfg.j6).norm();
        flags[i] = canon_branch(labels, xlen)?.in_0_pi;
    }
    // roots are x-sorted ascending; larger x wins ties
    let two_idx = match (flags[0], flags[1]) {
        (true, false) => 0,
        (false, true) => 1,
        _ => 1,
    };
    for (i, r) in roots.iter_mut().enumerate() {
        r.branch = if i == two_idx { 2 } else { 1 };
    }
    Ok(roots)
}

/// Full branch geometry at a realized configuration.
///
/// The reported `psi` / `s_action` follow the branch label and the
/// configuration's orientation: at the mirror image (`V > 0`) branch 1 angles
/// change sign and branch 2 angles go to their supplements.
pub fn branch_geometry(
    labels: &NineLabels,
    cfg: &VectorConfig,
    root: &RootPair,
) -> Result<BranchGeometry, GeomError> {
    let xlen = (cfg.j1 + cfg.j6).norm();
    let cb = canon_branch(labels, xlen)?;
    let mirrored = cfg.orientation() > 0.0;

    let psi: [f64; 9] = if root.branch == 2 {
        if mirrored {
            cb.psi_canon.map(|p| PI - p)
        } else {
            cb.psi_canon
        }
    } else {
        let mut p1 = [0.0; 9];
        for (i, &p) in cb.psi_canon.iter().enumerate() {
            // edges J1 (index 0) and J6 (index 4) carry the channel pi shift
            let shift = if i == 0 || i == 4 { PI } else { 0.0 };
            let v = -p + shift;
            p1[i] = wrap_pi(if mirrored { -v } else { v });
        }
        p1
    };
    let lens = labels.lengths().edge_order();
    let s_action = 2.0 * psi.iter().zip(lens).map(|(p, l)| p * l).sum::<f64>();

    // universal evaluation phase (orientation-independent)
    let p_x = labels.channel_parity() as f64;
    let eps_sum: f64 = cb.eps.iter().sum();
    let eval_arg = cb.s_canon
        + PI * cb.m as f64 * (1.0 + p_x)
        + (eps_sum + cb.d2_sign) * PI / 4.0
        + PI * p_x;

    let tri = |a: &Vector3<f64>, b: &Vector3<f64>, c: &Vector3<f64>| a.dot(&b.cross(c));
    let v123 = tri(&cfg.j1, &cfg.j2, &cfg.j3);
    let v432 = tri(&cfg.j4, &cfg.j3, &cfg.j2);
    let v214 = tri(&cfg.j2, &cfg.j1, &cfg.j4);
    let v341 = tri(&cfg.j3, &cfg.j4, &cfg.j1);
    let amp_den = (v123 * v432 - v214 * v341).abs();
    let scale6 = labels.lengths().max_len().powi(6);
    let caustic = amp_den <= 1e-9 * scale6;

    // spinor-frame angles at the J12 and J13 edges
    let cross_norm = |a: &Vector3<f64>, b: &Vector3<f64>| a.cross(b);
    let c1213 = cross_norm(&cfg.j12, &cfg.j13);
    let c126 = cross_norm(&cfg.j12, &cfg.j6);
    let c1312 = -c1213;
    let c136 = cross_norm(&cfg.j13, &cfg.j6);
    let ang = |u: &Vector3<f64>, v: &Vector3<f64>| -> Result<f64, GeomError> {
        let d = u.norm() * v.norm();
        if d == 0.0 {
            return Err(GeomError::Caustic("collinear edge pair in spinor frame".into()));
        }
        Ok((u.dot(v) / d).clamp(-1.0, 1.0).acos())
    };
    let phi12 = PI - ang(&c1213, &c126)?;
    let phi13 = PI - ang(&c1312, &c136)?;
    let theta = ang(&cfg.j12, &cfg.j13)?;

    Ok(BranchGeometry {
        root: *root,
        v123,
        v432,
        v214,
        v341,
        v: cfg.orientation(),
        amp_den,
        psi,
        phi12,
        phi13,
        theta,
        s_action,
        eval_arg,
        eps: cb.eps.map(|e| e as i8),
        winding: cb.m,
        closure_residual: cb.resid,
        caustic,
    })
}
