//! Size plan for genus >= 2: a closed-surface filling set of `x` or `x + 1`
//! curves with one curve replaced by `y + 1` parallel sine curves.
//!
//! No arrangement is produced; the closed-surface base set is not constructed
//! here.

use num_traits::Signed;
use serde::Serialize;

use crate::bounds::{self, Rational};
use crate::error::{argument, Result};
use crate::surface::SurfaceSig;

fn choose2(m: i64) -> i64 {
    if m < 2 {
        0
    } else {
        m * (m - 1) / 2
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainStep {
    pub claim: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GenusPlan {
    pub surface: SurfaceSig,
    pub k: u32,
    /// Smallest `x` with `k x (x - 1) >= 4g - 2`.
    pub x: u64,
    /// Smallest `y >= 0` with `2 - 2g + k C(x + y - 2, 2) >= n`.
    pub y: u64,
    /// The final set has `x + y` or `x + y + 1` curves.
    pub size_options: [u64; 2],
    /// `[5/2 + r, 5 + r)` with `r = sqrt(1/4 + 2|chi|/k)`.
    pub derived_window: [f64; 2],
    pub in_derived_window: bool,
    /// `[5/2 + r, 6 + r)`.
    pub stated_window: [f64; 2],
    pub in_stated_window: bool,
    /// The argument that `n` punctures suffice to separate the parallel curves.
    pub feasibility: Vec<ChainStep>,
}

pub fn plan_genus_fill(g: u32, n: u32, k: u32) -> Result<GenusPlan> {
    if g < 2 {
        return argument(format!("genus plan needs g >= 2, got {g}"));
    }
    if n == 0 {
        return argument("genus plan needs n >= 1");
    }
    if k == 0 || k % 2 != 0 {
        return argument(format!("k must be a positive even integer, got {k}"));
    }
    let (gi, ni, ki) = (i64::from(g), i64::from(n), i64::from(k));
    let x = (1..).find(|&x: &i64| ki * x * (x - 1) >= 4 * gi - 2).expect("unbounded search");
    let y = (0..).find(|&y: &i64| 2 - 2 * gi + ki * choose2(x + y - 2) >= ni).expect("unbounded search");

    let surface = SurfaceSig::new(g, n);
    let r_sq = Rational::new(1, 4) + Rational::new(2 * i128::from(surface.euler()).abs(), i128::from(k));
    let sum = Rational::from_integer(i128::from(x + y));
    let lo = Rational::new(5, 2);
    let inside = |hi: i128| {
        bounds::at_least_shifted_root(sum, lo, r_sq) && bounds::below_shifted_root(sum, Rational::from_integer(hi), r_sq)
    };
    let window = |hi: i128| {
        let (a, b) = bounds::window_bounds(r_sq, lo, Rational::from_integer(hi));
        [a, b]
    };

    let mut feasibility = vec![ChainStep {
        claim: format!("n >= y ({n} >= {y}) so the {} parallel curves can be separated", y + 1),
        holds: ni >= y,
    }];
    if y >= 4 {
        // n >= 2 + (k/2)(y-3)^2 + (k/2)(y-3) by minimality of y
        let floor = Rational::from_integer(2) + Rational::new(i128::from(ki * (y - 3) * (y - 2)), 2);
        feasibility.push(ChainStep {
            claim: format!("n >= 2 + (k/2)(y-3)^2 + (k/2)(y-3) = {floor}"),
            holds: !(floor - Rational::from_integer(i128::from(ni))).is_positive(),
        });
        feasibility.push(ChainStep {
            claim: format!("2 + (k/2)(y-3)^2 + (k/2)(y-3) >= y = {y}"),
            holds: floor >= Rational::from_integer(i128::from(y)),
        });
    }

    Ok(GenusPlan {
        surface,
        k,
        x: x as u64,
        y: y as u64,
        size_options: [(x + y) as u64, (x + y + 1) as u64],
        derived_window: window(5),
        in_derived_window: inside(5),
        stated_window: window(6),
        in_stated_window: inside(6),
        feasibility,
    })
}
