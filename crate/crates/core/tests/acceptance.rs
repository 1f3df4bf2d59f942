//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use curvefill::bounds::{self, Rational};
use curvefill::constructions::{sphere_fill, torus_fill, torus_k1_fill};
use curvefill::hyperbolic::{ngon_arrangement, ngon_geometry, IDENTITY_TOL};
use curvefill::oracle::{brute_partition_max, crosscheck, torus_max_ksystem};
use curvefill::*;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(failures: &[String], summary: String) -> Outcome {
    match failures.first() {
        None => Outcome { ok: true, detail: summary },
        Some(first) => Outcome { ok: false, detail: format!("{} failures, first: {first}", failures.len()) },
    }
}

/// Euler identity and 4-valence for a generated arrangement.
fn euler_problem(arr: &Arrangement) -> Option<String> {
    let expected = arr.surface.closed_euler();
    if arr.euler_sum() != expected {
        return Some(format!("v - e + sum(chi) = {} != {expected}", arr.euler_sum()));
    }
    if arr.is_cellular() && arr.edge_count() != 2 * arr.vertex_count() {
        return Some(format!("e = {} != 2v = {}", arr.edge_count(), 2 * arr.vertex_count()));
    }
    None
}

fn sharpness(euler_checked: &mut usize, euler_failures: &mut Vec<String>) -> Outcome {
    let mut failures = Vec::new();
    let mut cases = 0;
    for k in [2u32, 4, 6] {
        let runs: [(&str, u32, std::ops::RangeInclusive<u32>); 2] = [("sphere", 0, 4..=200), ("torus", 1, 1..=200)];
        for (name, genus, range) in runs {
            for n in range {
                cases += 1;
                let arr = if genus == 0 { sphere_fill(n, k) } else { torus_fill(n, k) };
                let arr = match arr {
                    Ok(a) => a,
                    Err(e) => {
                        failures.push(format!("{name} n={n} k={k}: {e}"));
                        continue;
                    }
                };
                *euler_checked += 1;
                if let Some(p) = euler_problem(&arr) {
                    euler_failures.push(format!("{name} n={n} k={k}: {p}"));
                }
                let expected = bounds::min_filling_even(SurfaceSig::new(genus, n), k).unwrap().minimal_n.unwrap();
                if arr.curves.len() as u64 != expected {
                    failures.push(format!("{name} n={n} k={k}: {} curves, bound {expected}", arr.curves.len()));
                }
                match verify_k_filling(&arr, k) {
                    Ok(c) if c.pass => {}
                    Ok(c) => failures.push(format!("{name} n={n} k={k}: certificate {c:?}")),
                    Err(e) => failures.push(format!("{name} n={n} k={k}: {e}")),
                }
            }
        }
    }
    outcome(&failures, format!("{cases} sphere/torus cases certified at the minimal size"))
}

fn ceil_sqrt(x: u64) -> u64 {
    (0..).find(|m| m * m >= x).unwrap()
}

fn torus_k1(euler_checked: &mut usize, euler_failures: &mut Vec<String>) -> Outcome {
    let mut failures = Vec::new();
    let mut literal_misses = Vec::new();
    for n in 1..=300u32 {
        let arr = match torus_k1_fill(n) {
            Ok(a) => a,
            Err(e) => {
                failures.push(format!("n={n}: {e}"));
                continue;
            }
        };
        *euler_checked += 1;
        if let Some(p) = euler_problem(&arr) {
            euler_failures.push(format!("torus k=1 n={n}: {p}"));
        }
        let big_n = arr.curves.len() as u64;
        let n64 = u64::from(n);
        if big_n < ceil_sqrt(3 * n64) || big_n > ceil_sqrt(3 * n64 + 1) {
            failures.push(format!("n={n}: N={big_n} outside [ceil sqrt 3n, ceil sqrt(3n+1)]"));
        }
        if big_n * big_n > 3 * n64 + 1 {
            literal_misses.push(format!("n={n} (N={big_n})"));
        }
        if !verify_k_filling(&arr, 1).map(|c| c.pass).unwrap_or(false) {
            failures.push(format!("n={n}: certificate fails"));
        }
    }
    let head: Vec<&str> = literal_misses.iter().take(4).map(String::as_str).collect();
    outcome(
        &failures,
        format!(
            "n in [1,300] certified; {} cases exceed sqrt(3n+1) literally, e.g. {}",
            literal_misses.len(),
            head.join(", ")
        ),
    )
}

fn oracle_agreement() -> Outcome {
    let mut failures = Vec::new();
    for b in 2..=8 {
        let size = torus_max_ksystem(1, b).unwrap().size;
        if size != 3 {
            failures.push(format!("k=1 B={b}: clique size {size}"));
        }
    }
    let report = crosscheck().unwrap();
    failures.extend(report.mismatches.iter().map(|m| format!("{m:?}")));
    outcome(&failures, format!("M(1) = 3 for B in [2,8]; {} grid cells agree", report.cells))
}

fn odd_cap() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for k in [1u32, 3] {
        for m in 1..=4u64 {
            for n in (m..=12).step_by(m as usize) {
                checked += 1;
                let brute = brute_partition_max(n, m, k).unwrap().value;
                let cap = bounds::odd_cap_value(n, m, k);
                if cap != Rational::from_integer(i128::from(brute)) {
                    failures.push(format!("N={n} M={m} k={k}: cap {cap} vs brute {brute}"));
                }
            }
        }
    }
    let (cap, brute) = (bounds::odd_cap_value(6, 3, 1), brute_partition_max(6, 3, 1).unwrap().value);
    if cap != Rational::from_integer(12) || brute != 12 || Rational::new(36, 3) != cap {
        failures.push(format!("(6,3,1): cap {cap}, brute {brute}, N^2/3 = 12"));
    }
    outcome(&failures, format!("{checked} divisible cases equal; (6,3,1) gives 12 = N^2/3"))
}

fn systole() -> Outcome {
    let mut failures = Vec::new();
    let ell = 3f64.acosh();
    for g in 2..=50u32 {
        let sig = SurfaceSig::new(g, 46 * (g - 1));
        let value = bounds::systole_count_lower(sig, ell).unwrap().value.unwrap();
        let expected = 25.0 * PI * f64::from(g - 1) / (2.0 * ell);
        if (value - expected).abs() > 1e-12 * expected {
            failures.push(format!("g={g}: {value} vs {expected}"));
        }
        let family = 36.0 * f64::from(g) - 54.0;
        if family >= 2.0 * value {
            failures.push(format!("g={g}: 36g-54 = {family} not below twice the bound {value}"));
        }
    }
    outcome(&failures, "g in [2,50] within 1e-12; 36g-54 < 2 x bound throughout".into())
}

fn ngon(euler_checked: &mut usize, euler_failures: &mut Vec<String>) -> Outcome {
    let mut failures = Vec::new();
    for n in 5..=64u32 {
        let g = ngon_geometry(n).unwrap();
        if g.identity_residual() > IDENTITY_TOL {
            failures.push(format!("n={n}: identity residual {}", g.identity_residual()));
        }
        if !g.strictly_increasing() {
            failures.push(format!("n={n}: d_k not increasing"));
        }
        let r = ngon_arrangement(n).unwrap();
        let a = &r.arrangement;
        *euler_checked += 1;
        if let Some(p) = euler_problem(a) {
            euler_failures.push(format!("ngon n={n}: {p}"));
        }
        let n_us = n as usize;
        let counts = (a.vertex_count(), a.edge_count(), a.regions.len());
        if counts != (2 * n_us, 4 * n_us, 2 * n_us + 2) {
            failures.push(format!("n={n}: (v,e,f) = {counts:?}"));
        }
        if a.curves.len() != n_us {
            failures.push(format!("n={n}: {} curves", a.curves.len()));
        }
        if !verify_k_filling(a, 2).map(|c| c.pass).unwrap_or(false) {
            failures.push(format!("n={n}: certificate fails"));
        }
    }
    outcome(&failures, "n in [5,64]: identities, monotone d_k, (2n,4n,2n+2), 2-filling by n curves".into())
}

/// Two crossing-free parallel curves on the torus; `punctures[r]` goes to the
/// annulus with walks `[[0],[3]]` (r = 0) or `[[1],[2]]` (r = 1).
fn parallel_pair(punctures: [u32; 2]) -> Arrangement {
    serde_json::from_value(serde_json::json!({
        "surface": {"genus": 1, "punctures": punctures[0] + punctures[1]},
        "curves": [[], []],
        "crossings": [],
        "regions": [
            {"chi": 0, "punctures": punctures[0], "walks": [[0], [3]]},
            {"chi": 0, "punctures": punctures[1], "walks": [[1], [2]]}
        ]
    }))
    .unwrap()
}

/// Two sine curves on the torus crossing twice, with punctures moved so that
/// only the band outside both lenses, or also one lens, is punctured.
fn crossing_pair(lens_punctured: bool) -> Arrangement {
    let full = torus_fill(3, 2).unwrap();
    let mut pair = restrict(&full, &[0, 1]).unwrap();
    let band = pair.regions.iter().position(|r| r.chi == 0).unwrap();
    let lens = pair.regions.iter().position(|r| r.chi == 1).unwrap();
    for r in &mut pair.regions {
        r.punctures = 0;
    }
    pair.regions[band].punctures = 1;
    if lens_punctured {
        pair.regions[lens].punctures = 1;
    }
    pair.surface.punctures = pair.total_punctures() as u32;
    pair
}

fn homotopy_engine() -> Outcome {
    let mut failures = Vec::new();
    let mut check = |name: &str, arr: &Arrangement, expected: bool| {
        let forward = are_homotopic(arr, 0, 1);
        let backward = are_homotopic(arr, 1, 0);
        match (forward, backward) {
            (Ok(a), Ok(b)) if a == expected && b == expected => {}
            (a, b) => failures.push(format!("{name}: expected {expected}, got {a:?} / {b:?}")),
        }
    };
    check("parallel, 1 puncture", &parallel_pair([1, 0]), true);
    check("parallel, 2 punctures", &parallel_pair([1, 1]), false);
    let empty_lens = crossing_pair(false);
    check("crossing twice, empty lens", &empty_lens, true);
    check("crossing twice, punctured lens", &crossing_pair(true), false);
    check("(1,0) and (0,1)", &torus_k1_fill(1).unwrap(), false);

    match reduce_bigons(&empty_lens) {
        Ok(r) if r.removed.len() == 1 && r.result.crossings.is_empty() => {}
        other => failures.push(format!("bigon reduction on empty lens: {other:?}")),
    }
    outcome(&failures, "parallel 1 vs 2 punctures, empty vs punctured bigon, symmetric".into())
}

fn main() -> ExitCode {
    let mut euler_checked = 0;
    let mut euler_failures = Vec::new();
    let mut results: Vec<(u32, &str, Outcome, f64)> = Vec::new();
    let mut run = |id: u32, name: &'static str, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let o = f();
        results.push((id, name, o, start.elapsed().as_secs_f64()));
    };
    run(1, "minimal fillings on spheres and tori", &mut || sharpness(&mut euler_checked, &mut euler_failures));
    run(2, "torus k=1 size window", &mut || torus_k1(&mut euler_checked, &mut euler_failures));
    run(3, "oracle agreement", &mut oracle_agreement);
    run(4, "odd-k cap", &mut odd_cap);
    run(6, "systole bound regression", &mut systole);
    run(7, "ideal n-gon suite", &mut || ngon(&mut euler_checked, &mut euler_failures));
    run(8, "homotopy engine", &mut homotopy_engine);
    let euler = outcome(&euler_failures, format!("{euler_checked} generated arrangements"));
    results.push((5, "Euler identity", euler, 0.0));
    results.sort_by_key(|r| r.0);

    let mut all = true;
    for (id, name, o, secs) in &results {
        all &= o.ok;
        let status = if o.ok { "PASS" } else { "FAIL" };
        println!("criterion {id} [{status}] {name} ({secs:.2}s): {}", o.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
