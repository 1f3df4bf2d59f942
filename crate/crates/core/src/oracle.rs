//! Brute-force references for the closed forms in [`crate::bounds`].
//!
//! Nothing here calls into the bounds module except [`crosscheck`], which
//! compares the two.

use std::cmp::Reverse;

use num_integer::Integer;
use serde::Serialize;

use crate::bounds::{self, BoundReport, FormulaId};
use crate::error::{argument, Error, Result};
use crate::surface::SurfaceSig;

/// Isotopy class of an essential simple closed curve on the closed torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Slope {
    pub p: i64,
    pub q: i64,
}

impl Slope {
    /// Canonical representative of `±(p, q)`, or `None` if not primitive.
    pub fn new(p: i64, q: i64) -> Option<Self> {
        if p.gcd(&q) != 1 {
            return None;
        }
        let (p, q) = if p < 0 || (p == 0 && q < 0) { (-p, -q) } else { (p, q) };
        Some(Self { p, q })
    }

    pub fn intersection(self, other: Slope) -> u64 {
        (self.p * other.q - self.q * other.p).unsigned_abs()
    }

    fn order_key(self) -> (i64, i64, bool, Slope) {
        (self.p.abs().max(self.q.abs()), self.p.abs() + self.q.abs(), self.q < 0, self)
    }
}

impl std::fmt::Display for Slope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Canonical slopes with both coordinates bounded by `bound` in absolute
/// value, simplest first.
pub fn slopes_within(bound: u32) -> Vec<Slope> {
    let b = i64::from(bound);
    let mut out: Vec<Slope> = (0..=b)
        .flat_map(|p| (-b..=b).map(move |q| (p, q)))
        .filter_map(|(p, q)| Slope::new(p, q))
        .collect();
    out.sort_by_key(|s| s.order_key());
    out.dedup();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KSystem {
    pub size: usize,
    pub witness: Vec<Slope>,
}

/// Largest set of slopes within `bound` pairwise meeting at most `k` times.
/// The witness is the first maximum clique in simplest-first order.
pub fn torus_max_ksystem(k: u64, bound: u32) -> Result<KSystem> {
    if bound == 0 {
        return argument("search bound must be at least 1");
    }
    let slopes = slopes_within(bound);
    let n = slopes.len();
    let adjacent: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| i != j && slopes[i].intersection(slopes[j]) <= k).collect())
        .collect();

    let mut best: Vec<usize> = Vec::new();
    let mut current = Vec::new();
    let all: Vec<usize> = (0..n).collect();
    extend_clique(&adjacent, &mut current, &all, &mut best);
    Ok(KSystem { size: best.len(), witness: best.into_iter().map(|i| slopes[i]).collect() })
}

fn extend_clique(adj: &[Vec<bool>], current: &mut Vec<usize>, candidates: &[usize], best: &mut Vec<usize>) {
    if current.len() > best.len() {
        best.clone_from(current);
    }
    for (idx, &v) in candidates.iter().enumerate() {
        if current.len() + candidates.len() - idx <= best.len() {
            return;
        }
        let next: Vec<usize> = candidates[idx + 1..].iter().copied().filter(|&w| adj[v][w]).collect();
        current.push(v);
        extend_clique(adj, current, &next, best);
        current.pop();
    }
}

pub const PARTITION_MAX_N: u64 = 40;
pub const PARTITION_MAX_M: u64 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionMax {
    pub value: i64,
    pub witness: Vec<u64>,
}

/// `(k-1) sum C(a_i, 2) + k sum_{i<j} a_i a_j`.
pub fn partition_objective(parts: &[u64], k: u32) -> i64 {
    let k = i64::from(k);
    let a: Vec<i64> = parts.iter().map(|&x| x as i64).collect();
    let same: i64 = a.iter().map(|&x| x * (x - 1) / 2).sum();
    let cross: i64 = (0..a.len()).flat_map(|i| (i + 1..a.len()).map(move |j| (i, j))).map(|(i, j)| a[i] * a[j]).sum();
    (k - 1) * same + k * cross
}

/// Exact maximum of [`partition_objective`] over all compositions of `n`
/// into `m` non-negative parts. Ties go to the lexicographically largest.
pub fn brute_partition_max(n: u64, m: u64, k: u32) -> Result<PartitionMax> {
    if n == 0 || m == 0 {
        return argument("N and M must be positive");
    }
    if n > PARTITION_MAX_N || m > PARTITION_MAX_M {
        return argument(format!(
            "enumeration guard: N <= {PARTITION_MAX_N} and M <= {PARTITION_MAX_M}, got N = {n}, M = {m}"
        ));
    }
    let mut best: Option<(i64, Vec<u64>)> = None;
    let mut parts = Vec::with_capacity(m as usize);
    compositions(n, m as usize, &mut parts, &mut |c| {
        let v = partition_objective(c, k);
        if best.as_ref().is_none_or(|(b, _)| v > *b) {
            best = Some((v, c.to_vec()));
        }
    });
    let (value, witness) = best.expect("at least one composition");
    Ok(PartitionMax { value, witness })
}

fn compositions(rest: u64, slots: usize, parts: &mut Vec<u64>, visit: &mut impl FnMut(&[u64])) {
    if slots == 1 {
        parts.push(rest);
        visit(parts);
        parts.pop();
        return;
    }
    for a in (0..=rest).rev() {
        parts.push(a);
        compositions(rest - a, slots - 1, parts, visit);
        parts.pop();
    }
}

pub const MIN_N_LIMIT: u64 = 1_000_000;

/// Parameters for [`brute_min_n`]; which fields matter depends on the formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchParams {
    pub surface: SurfaceSig,
    pub k: u32,
    pub m_cap: u64,
    pub ell: f64,
}

impl SearchParams {
    pub fn new(surface: SurfaceSig, k: u32) -> Self {
        Self { surface, k, m_cap: 1, ell: 1.0 }
    }
}

/// Largest `ab + bc + ca` with `a + b + c = n`, by trying every triple.
pub fn brute_pair_product(n: u64) -> u64 {
    (0..=n)
        .flat_map(|a| (0..=n - a).map(move |b| (a, b, n - a - b)))
        .map(|(a, b, c)| a * b + b * c + c * a)
        .max()
        .unwrap_or(0)
}

/// Smallest `N >= 1` satisfying the inequality behind `formula`, by linear
/// scan with integer-cleared predicates.
pub fn brute_min_n(formula: FormulaId, params: SearchParams) -> Result<u64> {
    let sig = params.surface;
    let chi = i128::from(sig.euler()).abs();
    let k = i128::from(params.k);
    let m = i128::from(params.m_cap);
    let pred: Box<dyn Fn(i128) -> bool> = match formula {
        FormulaId::EvenLower | FormulaId::SphereExact => Box::new(move |n| k * n * (n - 1) >= 2 * chi),
        FormulaId::OddLower => Box::new(move |n| k * m * n * (n - 1) - n * (n - m) >= 2 * m * chi),
        FormulaId::TorusK1 => {
            let punctures = u64::from(sig.punctures);
            Box::new(move |n| brute_pair_product(n as u64) >= punctures)
        }
        // 2N - 5 >= 2r with 4 k r^2 = k + 8|chi|
        FormulaId::GenusWindow => Box::new(move |n| {
            let d = 2 * n - 5;
            d >= 0 && k * d * d >= k + 8 * chi
        }),
        FormulaId::SystoleCount => {
            let area = bounds::cone_area(sig);
            let ell = params.ell;
            Box::new(move |n| 4.0 * ell * n as f64 >= area)
        }
    };
    (1..=i128::from(MIN_N_LIMIT))
        .find(|&n| pred(n))
        .map(|n| n as u64)
        .ok_or(Error::SearchExhausted { limit: MIN_N_LIMIT })
}

pub const GRID_GENUS: [u32; 4] = [0, 1, 2, 3];
pub const GRID_PUNCTURES: std::ops::RangeInclusive<u32> = 1..=100;
pub const GRID_K: [u32; 4] = [1, 2, 3, 4];
pub const GRID_M_CAP: [u64; 3] = [3, 6, 12];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridCell {
    pub formula: FormulaId,
    pub genus: u32,
    pub punctures: u32,
    pub k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_cap: Option<u64>,
    pub closed_form: u64,
    pub brute: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrosscheckReport {
    pub cells: usize,
    pub per_formula: Vec<(FormulaId, usize)>,
    pub mismatches: Vec<GridCell>,
}

impl CrosscheckReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares every closed-form minimal `N` against [`brute_min_n`] on the grid
/// `g in 0..=3`, `n in 1..=100`, `k in 1..=4`, `m_cap in {3, 6, 12}`, wherever
/// the formula's preconditions hold.
pub fn crosscheck() -> Result<CrosscheckReport> {
    let mut cells: Vec<(FormulaId, SearchParams, Result<BoundReport>)> = Vec::new();
    for g in GRID_GENUS {
        for n in GRID_PUNCTURES {
            let sig = SurfaceSig::new(g, n);
            for k in GRID_K {
                let base = SearchParams::new(sig, k);
                cells.push((FormulaId::EvenLower, base, bounds::min_filling_even(sig, k)));
                cells.push((FormulaId::GenusWindow, base, bounds::genus_window(sig, k)));
                if g == 0 {
                    cells.push((FormulaId::SphereExact, base, bounds::sphere_exact(n, k)));
                }
                for m_cap in GRID_M_CAP {
                    let p = SearchParams { m_cap, ..base };
                    cells.push((FormulaId::OddLower, p, bounds::min_filling_odd(sig, k, m_cap)));
                }
            }
            if g == 1 {
                cells.push((FormulaId::TorusK1, SearchParams::new(sig, 1), bounds::torus_k1_bound(n)));
            }
            let ell = 3f64.acosh();
            let p = SearchParams { ell, ..SearchParams::new(sig, 0) };
            cells.push((FormulaId::SystoleCount, p, bounds::systole_count_lower(sig, ell)));
        }
    }

    let mut report = CrosscheckReport { cells: 0, per_formula: Vec::new(), mismatches: Vec::new() };
    let mut counts = std::collections::BTreeMap::new();
    for (formula, params, closed) in cells {
        // Precondition failures are not grid cells.
        let Ok(closed) = closed else { continue };
        // Degenerate systole signatures report 0 and have no positive minimum.
        if closed.value == Some(0.0) {
            continue;
        }
        let Some(closed_form) = closed.minimal_n else { continue };
        let brute = brute_min_n(formula, params)?;
        report.cells += 1;
        *counts.entry(formula).or_insert(0) += 1;
        if brute != closed_form {
            report.mismatches.push(GridCell {
                formula,
                genus: params.surface.genus,
                punctures: params.surface.punctures,
                k: params.k,
                m_cap: (formula == FormulaId::OddLower).then_some(params.m_cap),
                closed_form,
                brute,
            });
        }
    }
    report.per_formula = counts.into_iter().collect();
    Ok(report)
}

/// Partitions sorted into non-increasing order, for comparing witnesses.
pub fn sorted_desc(parts: &[u64]) -> Vec<u64> {
    let mut v = parts.to_vec();
    v.sort_by_key(|&x| Reverse(x));
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_canonical_form() {
        assert_eq!(Slope::new(-1, 2), Some(Slope { p: 1, q: -2 }));
        assert_eq!(Slope::new(0, -1), Some(Slope { p: 0, q: 1 }));
        assert_eq!(Slope::new(2, 4), None);
        assert_eq!(Slope::new(0, 0), None);
        assert_eq!(Slope::new(1, 0).unwrap().intersection(Slope::new(1, 1).unwrap()), 1);
    }

    #[test]
    fn slope_count_small_bound() {
        // (0,1), (1,0), (1,1), (1,-1)
        assert_eq!(slopes_within(1).len(), 4);
    }

    #[test]
    fn ksystem_examples() {
        let r = torus_max_ksystem(1, 5).unwrap();
        assert_eq!(r.size, 3);
        let mut w = r.witness.clone();
        w.sort();
        assert_eq!(w, vec![Slope { p: 0, q: 1 }, Slope { p: 1, q: 0 }, Slope { p: 1, q: 1 }]);
        assert_eq!(torus_max_ksystem(0, 5).unwrap().size, 1);
        assert!(torus_max_ksystem(1, 0).is_err());
    }

    #[test]
    fn ksystem_k2_is_stable_from_three() {
        let sizes: Vec<usize> = (1..=5).map(|b| torus_max_ksystem(2, b).unwrap().size).collect();
        assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
        assert!(sizes[2..].iter().all(|&s| s == sizes[2]));
        assert_eq!(sizes[2], 4);
    }

    #[test]
    fn partition_examples() {
        let r = brute_partition_max(6, 3, 1).unwrap();
        assert_eq!((r.value, r.witness), (12, vec![2, 2, 2]));
        let r = brute_partition_max(4, 2, 3).unwrap();
        assert_eq!((r.value, r.witness), (16, vec![2, 2]));
        assert_eq!(brute_partition_max(7, 1, 3).unwrap().value, 2 * 21);
        assert!(brute_partition_max(41, 2, 1).is_err());
        assert!(brute_partition_max(5, 7, 1).is_err());
    }

    #[test]
    fn min_n_examples() {
        let p = SearchParams::new(SurfaceSig::new(0, 4), 2);
        assert_eq!(brute_min_n(FormulaId::EvenLower, p).unwrap(), 2);
        let p = SearchParams::new(SurfaceSig::new(1, 7), 1);
        assert_eq!(brute_min_n(FormulaId::TorusK1, p).unwrap(), 5);
        let p = SearchParams { m_cap: 3, ..SearchParams::new(SurfaceSig::new(1, 12), 1) };
        assert_eq!(brute_min_n(FormulaId::OddLower, p).unwrap(), 6);
    }

    #[test]
    fn crosscheck_grid_agrees() {
        let r = crosscheck().unwrap();
        assert!(r.pass(), "{:?}", r.mismatches);
        assert_eq!(r.per_formula.len(), FormulaId::ALL.len());
    }

    #[test]
    fn pair_product_brute_small() {
        assert_eq!(brute_pair_product(4), 5);
        assert_eq!(brute_pair_product(6), 12);
        assert_eq!(sorted_desc(&[1, 2, 1]), vec![2, 1, 1]);
    }
}
