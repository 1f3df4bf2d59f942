//! Closed-form hyperbolic quantities for filling sets of systoles, and the
//! systole arrangement on the double of the regular ideal `n`-gon.

use std::f64::consts::PI;

use serde::Serialize;

pub use crate::bounds::cone_area;
use crate::arrangement::Arrangement;
use crate::constructions::{face_beside, place_punctures, Layout};
use crate::error::{argument, Result};
use crate::surface::SurfaceSig;

/// Relative tolerance for the trigonometric identities.
pub const IDENTITY_TOL: f64 = 1e-12;

/// Distances in the regular ideal `n`-gon.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NgonGeometry {
    pub n: u32,
    /// Distance from the centre to each side: `cosh d = 1/sin(pi/n)`.
    pub d: f64,
    /// `(k, d_k)` for `2 <= k <= n/2`, `d_k` the length of the common
    /// orthogonal between sides `k` apart: `cosh(d_k/2) = cosh d sin(pi k/n)`.
    pub d_k: Vec<(u32, f64)>,
    /// `2 d_2`.
    pub systole_length: f64,
}

impl NgonGeometry {
    /// Largest relative residual of the two defining identities.
    pub fn identity_residual(&self) -> f64 {
        let n = f64::from(self.n);
        let cosh_d = 1.0 / (PI / n).sin();
        let mut worst = rel(self.d.cosh(), cosh_d);
        for &(k, dk) in &self.d_k {
            worst = worst.max(rel((dk / 2.0).cosh(), cosh_d * (PI * f64::from(k) / n).sin()));
        }
        worst
    }

    pub fn strictly_increasing(&self) -> bool {
        self.d_k.windows(2).all(|w| w[1].1 - w[0].1 > IDENTITY_TOL * w[0].1)
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

fn check_n(n: u32) -> Result<()> {
    if n < 5 {
        return argument(format!(
            "n must be at least 5, got {n} (for n = 4 sides two apart give only 2 distinct orthogonals)"
        ));
    }
    Ok(())
}

pub fn ngon_geometry(n: u32) -> Result<NgonGeometry> {
    check_n(n)?;
    let nf = f64::from(n);
    let cosh_d = 1.0 / (PI / nf).sin();
    let d_k: Vec<(u32, f64)> =
        (2..=n / 2).map(|k| (k, 2.0 * (cosh_d * (PI * f64::from(k) / nf).sin()).acosh())).collect();
    let systole_length = 2.0 * d_k[0].1;
    Ok(NgonGeometry { n, d: cosh_d.acosh(), d_k, systole_length })
}

/// `sqrt(A^2 + 4 pi A)`, the isoperimetric lower bound on the boundary length
/// of a region of area `A`.
pub fn isoperimetric_floor(area: f64) -> Result<f64> {
    if !(area > 0.0 && area.is_finite()) {
        return argument(format!("area must be positive, got {area}"));
    }
    Ok((area * area + 4.0 * PI * area).sqrt())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCheck {
    /// `(2 pi (2g-1) + pi (n-2)) / (4 ell)` at `g = 0`, `ell` the systole length.
    pub bound: f64,
    pub curves: u32,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct NgonReport {
    pub n: u32,
    pub d: f64,
    pub d_k: Vec<(u32, f64)>,
    pub systole_length: f64,
    /// Every curve is the double of an orthogonal between sides two apart.
    pub curve_lengths: Vec<f64>,
    /// Any other closed geodesic crosses the polygon edges at least twice, so
    /// contains two arcs of length at least `d_2`.
    pub others_no_shorter: bool,
    pub bound_check: BoundCheck,
    pub arrangement: Arrangement,
}

/// The `n` doubled orthogonals on the sphere with `n` punctures obtained by
/// gluing two copies of the regular ideal `n`-gon along their sides.
///
/// Curve `i` doubles the orthogonal from side `i` to side `i + 2` (side `i`
/// joins vertices `i` and `i + 1`). It meets curve `i - 1` and then curve
/// `i + 1` in the first copy, and the same two in reverse in the second copy.
pub fn ngon_arrangement(n: u32) -> Result<NgonReport> {
    let geometry = ngon_geometry(n)?;
    let m = n as usize;
    let mut layout: Layout<u8> = Layout::new(m);
    for i in 0..m {
        let next = (i + 1) % m;
        layout.cross(i, 1, next, 0, 1);
    }
    for i in 0..m {
        let next = (i + 1) % m;
        layout.cross(i, 2, next, 3, -1);
    }
    let mut arr = layout.assemble(SurfaceSig::new(0, n))?;
    // The edge of curve i - 1 returning to the first copy crosses side i - 1,
    // beside ideal vertex i.
    let vertex_faces: Vec<usize> = (0..m).map(|v| face_beside(&arr, (v + m - 1) % m, 3, true)).collect();
    place_punctures(&mut arr, &vertex_faces, n)?;

    let ell = geometry.systole_length;
    let bound = cone_area(SurfaceSig::new(0, n)) / (4.0 * ell);
    Ok(NgonReport {
        n,
        d: geometry.d,
        others_no_shorter: geometry.d_k.iter().all(|&(_, dk)| 2.0 * dk >= ell),
        d_k: geometry.d_k,
        systole_length: ell,
        curve_lengths: vec![ell; m],
        bound_check: BoundCheck { bound, curves: n, holds: f64::from(n) >= bound },
        arrangement: arr,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{intersection_matrix, verify_k_filling};

    #[test]
    fn geometry_examples() {
        let g = ngon_geometry(6).unwrap();
        assert!((g.d.cosh() - 2.0).abs() < 1e-12);
        assert!((g.d_k[0].1 - 2.0 * 3f64.sqrt().acosh()).abs() < 1e-12);
        assert!((g.d_k[0].1 - 2.2924).abs() < 1e-4);
        assert!((g.d_k[1].1 - 2.6339).abs() < 1e-4);
        assert!(g.strictly_increasing());

        let g = ngon_geometry(5).unwrap();
        assert!((g.d.cosh() - 1.7013).abs() < 1e-4);
        assert!(((g.d_k[0].1 / 2.0).cosh() - 1.6180).abs() < 1e-4);
        assert!(ngon_geometry(4).is_err());
    }

    #[test]
    fn apothem_grows_with_n() {
        let ds: Vec<f64> = (5..60).map(|n| ngon_geometry(n).unwrap().d).collect();
        assert!(ds.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn isoperimetric_examples() {
        assert!((isoperimetric_floor(4.0 * PI).unwrap() - 4.0 * PI * 2f64.sqrt()).abs() < 1e-12);
        assert!((isoperimetric_floor(PI).unwrap() - PI * 5f64.sqrt()).abs() < 1e-12);
        assert!(isoperimetric_floor(0.0).is_err());
        assert!(isoperimetric_floor(-1.0).is_err());
    }

    #[test]
    fn arrangement_counts() {
        let r = ngon_arrangement(5).unwrap();
        let a = &r.arrangement;
        assert_eq!((a.vertex_count(), a.edge_count(), a.regions.len()), (10, 20, 12));
        assert_eq!(a.total_punctures(), 5);
        assert!(verify_k_filling(a, 2).unwrap().pass);
        assert!(r.bound_check.holds);
    }

    #[test]
    fn six_cycle_pattern() {
        let r = ngon_arrangement(6).unwrap();
        let m = intersection_matrix(&r.arrangement).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                let adjacent = (i + 1) % 6 == j || (j + 1) % 6 == i;
                assert_eq!(m.get(i, j), if adjacent { 2 } else { 0 }, "({i},{j})");
            }
        }
    }
}
