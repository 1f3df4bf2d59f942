//! Closed-form bounds on the size of k-filling sets.
//!
//! Every threshold is evaluated in exact rational arithmetic; minimal integer
//! solutions are located from a floating-point estimate and then settled by
//! exact predicate checks, so answers never flip on rounding. Square roots only
//! appear in reported interval endpoints.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{argument, Result};
use crate::surface::SurfaceSig;

pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FormulaId {
    EvenLower,
    OddLower,
    TorusK1,
    GenusWindow,
    SystoleCount,
    SphereExact,
}

impl FormulaId {
    pub const ALL: [FormulaId; 6] = [
        FormulaId::EvenLower,
        FormulaId::OddLower,
        FormulaId::TorusK1,
        FormulaId::GenusWindow,
        FormulaId::SystoleCount,
        FormulaId::SphereExact,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::EvenLower => "EVEN_LOWER",
            FormulaId::OddLower => "ODD_LOWER",
            FormulaId::TorusK1 => "TORUS_K1",
            FormulaId::GenusWindow => "GENUS_WINDOW",
            FormulaId::SystoleCount => "SYSTOLE_COUNT",
            FormulaId::SphereExact => "SPHERE_EXACT",
        }
    }
}

impl std::fmt::Display for FormulaId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct BoundInputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub punctures: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_cap: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<f64>,
}

impl BoundInputs {
    fn surface(sig: SurfaceSig) -> Self {
        Self { genus: Some(sig.genus), punctures: Some(sig.punctures), ..Self::default() }
    }
}

/// An evaluated inequality.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub formula: FormulaId,
    pub inputs: BoundInputs,
    #[serde(serialize_with = "ser_rational_opt")]
    pub threshold: Option<Rational>,
    pub minimal_n: Option<u64>,
    /// Half-open real interval `[lo, hi)`.
    pub interval: Option<[f64; 2]>,
    pub candidates: Vec<u64>,
    pub value: Option<f64>,
    pub auxiliary: BTreeMap<String, f64>,
    pub notes: Vec<String>,
}

impl BoundReport {
    fn new(formula: FormulaId, inputs: BoundInputs) -> Self {
        Self {
            formula,
            inputs,
            threshold: None,
            minimal_n: None,
            interval: None,
            candidates: Vec::new(),
            value: None,
            auxiliary: BTreeMap::new(),
            notes: Vec::new(),
        }
    }
}

fn ser_rational_opt<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Exact {
        num: i128,
        den: i128,
    }
    v.map(|r| Exact { num: *r.numer(), den: *r.denom() }).serialize(s)
}

fn rat(n: i128) -> Rational {
    Rational::from_integer(n)
}

pub fn to_f64(r: Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn euler_char(sig: SurfaceSig) -> i64 {
    sig.euler()
}

/// Smallest positive integer satisfying an upward-closed predicate, starting
/// the exact search from a floating estimate.
fn settle_minimal(estimate: f64, pred: impl Fn(u64) -> bool) -> u64 {
    let mut n = if estimate.is_finite() && estimate > 1.0 { estimate.ceil() as u64 } else { 1 };
    while !pred(n) {
        n += 1;
    }
    while n > 1 && pred(n - 1) {
        n -= 1;
    }
    n
}

/// Positive root of `a x^2 - b x - c`.
fn quadratic_root(a: f64, b: f64, c: f64) -> f64 {
    (b + (b * b + 4.0 * a * c).sqrt()) / (2.0 * a)
}

fn abs_chi(sig: SurfaceSig) -> i128 {
    i128::from(sig.euler()).abs()
}

fn require_even(k: u32) -> Result<()> {
    if k == 0 || k % 2 != 0 {
        return argument(format!("k must be a positive even integer, got {k}"));
    }
    Ok(())
}

/// Smallest `N` with `N(N-1) >= 2|chi|/k`, for even `k` on a punctured surface
/// of negative Euler characteristic.
pub fn min_filling_even(sig: SurfaceSig, k: u32) -> Result<BoundReport> {
    require_even(k)?;
    if sig.punctures == 0 {
        return argument("surface needs at least one puncture");
    }
    if sig.euler() >= 0 {
        return argument(format!("surface {sig} has non-negative Euler characteristic"));
    }
    let threshold = Rational::new(2 * abs_chi(sig), i128::from(k));
    let pred = |n: u64| {
        let n = i128::from(n);
        rat(n * (n - 1)) >= threshold
    };
    let estimate = quadratic_root(1.0, 1.0, to_f64(threshold));
    let mut report = BoundReport::new(FormulaId::EvenLower, BoundInputs { k: Some(k), ..BoundInputs::surface(sig) });
    report.threshold = Some(threshold);
    report.minimal_n = Some(settle_minimal(estimate, pred));
    Ok(report)
}

/// The filling bound on punctured spheres: smallest `N` with
/// `N(N-1) >= (2n - 4)/k`, plus whether `n` is exactly `(kN(N-1) + 4)/2`.
pub fn sphere_exact(n: u32, k: u32) -> Result<BoundReport> {
    if n < 4 {
        return argument(format!("sphere needs at least 4 punctures, got {n}"));
    }
    let mut report = min_filling_even(SurfaceSig::new(0, n), k)?;
    report.formula = FormulaId::SphereExact;
    let big_n = report.minimal_n.unwrap();
    let exact_n = sphere_exact_punctures(big_n, k);
    report.auxiliary.insert("exact_punctures".into(), exact_n as f64);
    if exact_n == u64::from(n) {
        report.notes.push("n is exact: every complementary face receives one puncture".into());
    }
    Ok(report)
}

/// `(kN(N-1) + 4)/2`, the puncture count at which N curves fill the sphere with
/// one puncture per face.
pub fn sphere_exact_punctures(big_n: u64, k: u32) -> u64 {
    (u64::from(k) * big_n * big_n.saturating_sub(1) + 4) / 2
}

/// `(k/2)N(N-1) - (N/2)(N/m - 1)`, the balanced-family maximum of the vertex
/// count of `N` curves spread over `m` families.
pub fn odd_cap_value(big_n: u64, m: u64, k: u32) -> Rational {
    let n = i128::from(big_n);
    let m = i128::from(m);
    let k = i128::from(k);
    Rational::new(k * n * (n - 1), 2) - Rational::new(n, 2) * (Rational::new(n, m) - rat(1))
}

/// Smallest `N` with `(k/2)N(N-1) - (N/2)(N/m_cap - 1) >= |chi|` for odd `k`.
pub fn min_filling_odd(sig: SurfaceSig, k: u32, m_cap: u64) -> Result<BoundReport> {
    if k % 2 == 0 {
        return argument(format!("k must be odd, got {k}"));
    }
    if sig.genus == 0 || sig.punctures == 0 {
        return argument(format!("surface {sig} needs genus >= 1 and at least one puncture"));
    }
    if m_cap == 0 {
        return argument("m_cap must be positive");
    }
    let threshold = rat(abs_chi(sig));
    // (k - 1/m)/2 N^2 - (k - 1)/2 N
    let a = (rat(i128::from(k)) - Rational::new(1, i128::from(m_cap))) / rat(2);
    if a.is_zero() {
        return argument("k = 1 with m_cap = 1 makes the left-hand side identically zero");
    }
    let b = Rational::new(i128::from(k) - 1, 2);
    let estimate = quadratic_root(to_f64(a), to_f64(b), to_f64(threshold));
    let pred = |n: u64| odd_cap_value(n, m_cap, k) >= threshold;
    let mut report = BoundReport::new(
        FormulaId::OddLower,
        BoundInputs { k: Some(k), m_cap: Some(m_cap), ..BoundInputs::surface(sig) },
    );
    report.threshold = Some(threshold);
    report.minimal_n = Some(settle_minimal(estimate, pred));
    Ok(report)
}

/// Largest number of faces `N` pairwise-once-crossing curves on the torus can
/// cut: `N^2/3` when `3 | N`, `(N^2 - 1)/3` otherwise.
pub fn torus_k1_capacity(big_n: u64) -> u64 {
    big_n * big_n / 3
}

/// Smallest `N` with `n <= capacity(N)`; also reports `ceil(sqrt(3n))`,
/// `sqrt(3n + 1)` and whether `N <= sqrt(3n + 1)` holds literally.
pub fn torus_k1_bound(n: u32) -> Result<BoundReport> {
    if n == 0 {
        return argument("torus needs at least one puncture");
    }
    let n64 = u64::from(n);
    let big_n = settle_minimal((3.0 * n as f64).sqrt(), |m| torus_k1_capacity(m) >= n64);
    let ceil_sqrt_3n = settle_minimal((3.0 * n as f64).sqrt(), |m| m * m >= 3 * n64);
    let mut report = BoundReport::new(
        FormulaId::TorusK1,
        BoundInputs { genus: Some(1), punctures: Some(n), k: Some(1), ..BoundInputs::default() },
    );
    report.threshold = Some(rat(i128::from(n)));
    report.minimal_n = Some(big_n);
    report.auxiliary.insert("capacity".into(), torus_k1_capacity(big_n) as f64);
    report.auxiliary.insert("ceil_sqrt_3n".into(), ceil_sqrt_3n as f64);
    report.auxiliary.insert("sqrt_3n_plus_1".into(), (3.0 * n as f64 + 1.0).sqrt());
    if big_n * big_n > 3 * n64 + 1 {
        report.notes.push(format!(
            "minimal N = {big_n} exceeds sqrt(3n+1) = {:.4}; the literal upper bound fails for n = {n}",
            (3.0 * n as f64 + 1.0).sqrt()
        ));
    }
    Ok(report)
}

/// Interval `[5/2 + r, 6 + r)` with `r = sqrt(1/4 + 2|chi|/k)` containing the
/// size of the constructed filling for genus >= 2, with its integer points.
pub fn genus_window(sig: SurfaceSig, k: u32) -> Result<BoundReport> {
    if sig.genus < 2 {
        return argument(format!("genus window needs genus >= 2, got {}", sig.genus));
    }
    if sig.punctures == 0 {
        return argument("surface needs at least one puncture");
    }
    require_even(k)?;
    let r_sq = Rational::new(1, 4) + Rational::new(2 * abs_chi(sig), i128::from(k));
    let (lo, hi) = window_bounds(r_sq, Rational::new(5, 2), rat(6));
    let mut report = BoundReport::new(FormulaId::GenusWindow, BoundInputs { k: Some(k), ..BoundInputs::surface(sig) });
    report.threshold = Some(r_sq);
    report.interval = Some([lo, hi]);
    report.candidates = window_integers(r_sq, Rational::new(5, 2), rat(6));
    report.minimal_n = report.candidates.first().copied();
    report.auxiliary.insert("r".into(), to_f64(r_sq).sqrt());
    Ok(report)
}

/// Endpoints `lo + sqrt(r_sq)` and `hi + sqrt(r_sq)` in floating point.
pub(crate) fn window_bounds(r_sq: Rational, lo: Rational, hi: Rational) -> (f64, f64) {
    let r = to_f64(r_sq).sqrt();
    (to_f64(lo) + r, to_f64(hi) + r)
}

/// `x >= offset + sqrt(r_sq)`, decided exactly.
pub(crate) fn at_least_shifted_root(x: Rational, offset: Rational, r_sq: Rational) -> bool {
    let d = x - offset;
    !d.is_negative() && d * d >= r_sq
}

/// `x < offset + sqrt(r_sq)`, decided exactly.
pub(crate) fn below_shifted_root(x: Rational, offset: Rational, r_sq: Rational) -> bool {
    let d = x - offset;
    d.is_negative() || d * d < r_sq
}

/// Integers in `[lo + sqrt(r_sq), hi + sqrt(r_sq))`.
pub(crate) fn window_integers(r_sq: Rational, lo: Rational, hi: Rational) -> Vec<u64> {
    let start = (lo + rat(to_f64(r_sq).sqrt().floor() as i128)).floor().to_integer().max(0) as u64;
    let below_end = |n: u64| below_shifted_root(rat(i128::from(n)), hi, r_sq);
    (start.saturating_sub(2)..)
        .take_while(|&n| n < start || below_end(n))
        .filter(|&n| {
            let x = rat(i128::from(n));
            at_least_shifted_root(x, lo, r_sq) && below_shifted_root(x, hi, r_sq)
        })
        .collect()
}

/// Maximum of `ab + bc + ca` over non-negative integers with `a + b + c = N`,
/// with a balanced witness in non-increasing order.
pub fn pair_product_max(big_n: u64) -> (u64, [u64; 3]) {
    let (q, r) = big_n.div_rem(&3);
    let w = [q + u64::from(r >= 1), q + u64::from(r >= 2), q];
    (w[0] * w[1] + w[1] * w[2] + w[0] * w[2], w)
}

/// `2 pi (2g - 1) + pi (n - 2)`: area of the cone surface with angle-pi cone
/// points in place of the punctures.
pub fn cone_area(sig: SurfaceSig) -> f64 {
    2.0 * PI * (2.0 * f64::from(sig.genus) - 1.0) + PI * (f64::from(sig.punctures) - 2.0)
}

/// Lower bound `(2 pi (2g-1) + pi (n-2)) / (4 ell)` on the number of systoles
/// of length `ell` in a filling set. Degenerate signatures report bound 0.
pub fn systole_count_lower(sig: SurfaceSig, ell: f64) -> Result<BoundReport> {
    if !(ell > 0.0 && ell.is_finite()) {
        return argument(format!("systole length must be positive, got {ell}"));
    }
    let numerator = cone_area(sig);
    let mut report = BoundReport::new(
        FormulaId::SystoleCount,
        BoundInputs { ell: Some(ell), ..BoundInputs::surface(sig) },
    );
    report.auxiliary.insert("area".into(), numerator);
    // The numerator is pi times the integer 4g + n - 4.
    if 4 * i64::from(sig.genus) + i64::from(sig.punctures) - 4 <= 0 {
        report.value = Some(0.0);
        report.minimal_n = Some(0);
        report.notes.push("non-positive area numerator: degenerate signature, bound 0".into());
        return Ok(report);
    }
    let value = numerator / (4.0 * ell);
    report.value = Some(value);
    report.minimal_n = Some(value.ceil() as u64);
    Ok(report)
}
