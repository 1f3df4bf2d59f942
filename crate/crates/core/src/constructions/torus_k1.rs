//! Pairwise once-crossing curves on the torus: parallel copies of the slopes
//! (1,0), (0,1) and (1,1).
//!
//! On the unit square torus, horizontal copy `i` sits at height `y_i`, vertical
//! copy `j` at abscissa `x_j`, diagonal copy `l` is `y = x + t_l`. Offsets are
//! rationals chosen so that no three curves meet at a point.

use num_rational::Ratio;
use num_traits::Zero;
use serde::Serialize;

use super::{place_punctures, Layout};
use crate::arrangement::{restrict_with_map, Arrangement};
use crate::bounds::{pair_product_max, torus_k1_bound};
use crate::error::{argument, Error, Result};
use crate::surface::SurfaceSig;

type Q = Ratio<i64>;

/// Family sizes: `horizontal >= vertical >= diagonal`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Families {
    pub horizontal: usize,
    pub vertical: usize,
    pub diagonal: usize,
}

impl Families {
    pub fn total(self) -> usize {
        self.horizontal + self.vertical + self.diagonal
    }

    pub fn faces(self) -> usize {
        let (a, b, c) = (self.diagonal, self.vertical, self.horizontal);
        a * b + b * c + c * a
    }

    /// Curve index ranges: horizontal, then vertical, then diagonal.
    pub fn ranges(self) -> [std::ops::Range<usize>; 3] {
        let (h, v) = (self.horizontal, self.vertical);
        [0..h, h..h + v, h + v..self.total()]
    }
}

/// Balanced family sizes for `n` punctures, from the minimal curve count.
pub fn torus_k1_families(n: u32) -> Result<Families> {
    let total = torus_k1_bound(n)?.minimal_n.expect("minimal N");
    let (_, [c, b, a]) = pair_product_max(total);
    Ok(Families { horizontal: c as usize, vertical: b as usize, diagonal: a as usize })
}

fn frac(q: Q) -> Q {
    q - q.floor()
}

/// Evenly spaced positions `(i + shift)/count`.
fn spaced(count: usize, shift: Q) -> Vec<Q> {
    (0..count).map(|i| (Q::from_integer(i as i64) + shift) / Q::from_integer(count as i64)).collect()
}

const SHIFTS: [(i64, i64, i64); 4] = [(2, 3, 5), (2, 3, 7), (3, 5, 7), (5, 7, 11)];

fn offsets(f: Families) -> Result<[Vec<Q>; 3]> {
    for (p, q, r) in SHIFTS {
        let ys = spaced(f.horizontal, Q::new(1, p));
        let xs = spaced(f.vertical, Q::new(1, q));
        let ts = spaced(f.diagonal, Q::new(1, r));
        let triple = ys.iter().any(|&y| xs.iter().any(|&x| ts.iter().any(|&t| frac(y - x - t).is_zero())));
        if !triple {
            return Ok([ys, xs, ts]);
        }
    }
    Err(Error::Structural("no generic offsets found".into()))
}

/// Minimal 1-filling set on the torus with `n` punctures.
///
/// Each family of two or more parallel copies cuts the torus into annular
/// corridors; punctures visit the corridors round-robin across families, then
/// fill the lowest free faces.
pub fn torus_k1_fill(n: u32) -> Result<Arrangement> {
    if n == 0 {
        return argument("torus_k1_fill needs n >= 1");
    }
    let f = torus_k1_families(n)?;
    let [h, v, d] = f.ranges();
    let [ys, xs, ts] = offsets(f)?;

    // Keys are the horizontal coordinate for horizontal and diagonal curves,
    // the vertical one for vertical curves, all reduced to [0, 1).
    let mut layout: Layout<Q> = Layout::new(f.total());
    for (i, &y) in h.clone().zip(&ys) {
        for (j, &x) in v.clone().zip(&xs) {
            layout.cross(i, x, j, y, 1);
        }
        for (l, &t) in d.clone().zip(&ts) {
            let x = frac(y - t);
            layout.cross(i, x, l, x, 1);
        }
    }
    for (j, &x) in v.clone().zip(&xs) {
        for (l, &t) in d.clone().zip(&ts) {
            layout.cross(j, frac(x + t), l, x, -1);
        }
    }
    // Unpunctured until the corridors are known, so restriction validates.
    let mut arr = layout.assemble(SurfaceSig::new(1, 0))?;

    // Faces of every corridor, lowest first, per family of >= 2 copies.
    let mut families: Vec<Vec<Vec<usize>>> = Vec::new();
    for family in [h, v, d] {
        if family.len() < 2 {
            continue;
        }
        let members: Vec<usize> = family.collect();
        let (sub, map) = restrict_with_map(&arr, &members)?;
        let mut corridors = vec![Vec::new(); sub.regions.len()];
        for (face, &corridor) in map.iter().enumerate() {
            corridors[corridor].push(face);
        }
        families.push(corridors);
    }
    let rounds = families.iter().map(Vec::len).max().unwrap_or(0);
    let mut required: Vec<usize> = Vec::new();
    for r in 0..rounds {
        for corridor in families.iter().filter_map(|f| f.get(r)) {
            if !corridor.iter().any(|face| required.contains(face)) {
                required.push(corridor[0]);
            }
        }
    }
    arr.surface = SurfaceSig::new(1, n);
    place_punctures(&mut arr, &required, n)?;
    Ok(arr)
}
