//! Shifted sine graphs on a cylinder, capped to a sphere or glued to a torus.
//!
//! Curve `s` is the graph of `sin(x + s/(4N))` over `x` in `[0, k pi)`. Curves
//! `a < b` cross at `x = ((2m + 1) pi - (a + b)/(4N)) / 2` for `m < k`, so along
//! any curve the crossings are ordered by the exact key `(2m + 1, -(a + b))`.
//! Near `x = 0` the curves are stacked by index, curve 0 lowest.

use serde::Serialize;

use super::{face_beside, place_punctures, Layout};
use crate::arrangement::Arrangement;
use crate::bounds;
use crate::error::{argument, Result};
use crate::surface::SurfaceSig;

type Key = (i64, i64);

/// Sorts below every crossing key: selects the edge through `x = 0`.
const WRAP: Key = (-1, 0);

fn check_params(curves: usize, k: u32) -> Result<()> {
    if curves < 2 {
        return argument(format!("need at least 2 curves, got {curves}"));
    }
    if k == 0 || k % 2 != 0 {
        return argument(format!("k must be a positive even integer, got {k}"));
    }
    Ok(())
}

/// Adds the pairwise crossings among curves `0..count` of the sine family.
fn sine_crossings(layout: &mut Layout<Key>, count: usize, k: u32) {
    for a in 0..count {
        for b in a + 1..count {
            for m in 0..i64::from(k) {
                let key = (2 * m + 1, -((a + b) as i64));
                // Rising through pi/2 mod 2 pi the lower-index curve is the
                // steeper one; the roles swap at 3 pi/2.
                let sign = if m % 2 == 0 { -1 } else { 1 };
                layout.cross(a, key, b, key, sign);
            }
        }
    }
}

/// The sine family on the cylinder, with both boundary circles capped by disks.
#[derive(Debug, Clone, Serialize)]
pub struct SineCylinder {
    /// Cellular arrangement on the sphere obtained by capping both ends.
    pub arrangement: Arrangement,
    /// Region above every curve (the upper boundary annulus once uncapped).
    pub top_region: usize,
    /// Region below every curve.
    pub bottom_region: usize,
}

impl SineCylinder {
    /// `v - e + sum(chi)` counting the two cap regions as annuli; zero for a
    /// consistent cylinder arrangement.
    pub fn cylinder_euler(&self) -> i64 {
        let a = &self.arrangement;
        let caps: i64 = [self.top_region, self.bottom_region].iter().map(|&r| a.regions[r].chi).sum();
        a.euler_sum() - caps
    }
}

pub fn sine_cylinder(curves: usize, k: u32) -> Result<SineCylinder> {
    check_params(curves, k)?;
    let (layout, arrangement) = capped(curves, k, SurfaceSig::new(0, 0))?;
    let top_region = face_beside(&arrangement, curves - 1, layout.edge_at(curves - 1, &WRAP), false);
    let bottom_region = face_beside(&arrangement, 0, layout.edge_at(0, &WRAP), true);
    Ok(SineCylinder { arrangement, top_region, bottom_region })
}

fn capped(curves: usize, k: u32, surface: SurfaceSig) -> Result<(Layout<Key>, Arrangement)> {
    let mut layout = Layout::new(curves);
    sine_crossings(&mut layout, curves, k);
    let arr = layout.assemble(surface)?;
    Ok((layout, arr))
}

/// Minimal k-filling set on the sphere with `n` punctures.
///
/// Punctures go first to the faces that keep every curve essential and every
/// pair apart: the gap between consecutive curves at `x = 0`, the two caps,
/// and the gap below curve 0 at `x = pi`. The rest fill the lowest free faces.
pub fn sphere_fill(n: u32, k: u32) -> Result<Arrangement> {
    if n < 4 {
        return argument(format!("sphere_fill needs n >= 4, got {n}"));
    }
    let sig = SurfaceSig::new(0, n);
    let curves = bounds::min_filling_even(sig, k)?.minimal_n.expect("minimal N") as usize;
    let (layout, mut arr) = capped(curves, k, sig)?;

    let wrap = |c: usize| layout.edge_at(c, &WRAP);
    let mut required: Vec<usize> = (1..curves).map(|c| face_beside(&arr, c, wrap(c), true)).collect();
    required.push(face_beside(&arr, curves - 1, wrap(curves - 1), false));
    required.push(face_beside(&arr, 0, wrap(0), true));
    required.push(face_beside(&arr, 0, layout.edge_at(0, &(2, 0)), true));
    place_punctures(&mut arr, &required, n)?;
    Ok(arr)
}

/// Minimal k-filling set on the torus with `n` punctures.
///
/// Gluing the cylinder ends alone leaves every curve in one homotopy class and
/// an annulus in the complement. Instead `N - 1` sine curves run around the
/// torus horizontally and the last curve winds once horizontally and `k`
/// times vertically, meeting each sine curve `k` times near `x = j pi`. The
/// crossing total is still `k C(N, 2)` and every face is a disk.
pub fn torus_fill(n: u32, k: u32) -> Result<Arrangement> {
    if n == 0 {
        return argument("torus_fill needs n >= 1");
    }
    let sig = SurfaceSig::new(1, n);
    let curves = bounds::min_filling_even(sig, k)?.minimal_n.expect("minimal N") as usize;
    check_params(curves, k)?;
    let sines = curves - 1;
    let slanted = curves - 1;

    let mut layout = Layout::new(curves);
    sine_crossings(&mut layout, sines, k);
    for j in 0..i64::from(k) {
        for t in 0..sines {
            // The slanted curve climbs through the stack near x = j pi: curve 0
            // is lowest there for even j and highest for odd j.
            let s = if j % 2 == 0 { t } else { sines - 1 - t };
            layout.cross(s, (2 * j, 0), slanted, (j, t as i64), 1);
        }
    }
    let mut arr = layout.assemble(sig)?;

    let start = |c: usize| layout.edge_at(c, &(0, 0));
    let mut required: Vec<usize> = (1..sines).map(|c| face_beside(&arr, c, start(c), true)).collect();
    required.push(face_beside(&arr, sines - 1, start(sines - 1), false));
    place_punctures(&mut arr, &required, n)?;
    Ok(arr)
}
