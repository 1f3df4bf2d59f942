use std::f64::consts::PI;

use curvefill::bounds::{self, Rational};
use curvefill::constructions::{plan_genus_fill, sphere_fill, torus_fill, torus_k1_families, torus_k1_fill};
use curvefill::hyperbolic::{cone_area, ngon_arrangement, ngon_geometry};
use curvefill::oracle::{brute_pair_product, brute_partition_max, torus_max_ksystem};
use curvefill::*;
use proptest::prelude::*;

fn generated() -> impl Strategy<Value = (Arrangement, u32)> {
    prop_oneof![
        (4u32..60, prop::sample::select(vec![2u32, 4, 6])).prop_map(|(n, k)| (sphere_fill(n, k).unwrap(), k)),
        (1u32..60, prop::sample::select(vec![2u32, 4, 6])).prop_map(|(n, k)| (torus_fill(n, k).unwrap(), k)),
        (1u32..60).prop_map(|n| (torus_k1_fill(n).unwrap(), 1)),
        (5u32..20).prop_map(|n| (ngon_arrangement(n).unwrap().arrangement, 2)),
    ]
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_arrangements_satisfy_euler((arr, k) in generated()) {
        let g = i64::from(arr.surface.genus);
        prop_assert_eq!(arr.euler_sum(), 2 - 2 * g);
        prop_assert!(arr.is_cellular());
        prop_assert_eq!(arr.edge_count(), 2 * arr.vertex_count());
        prop_assert!(validate_arrangement(&arr).is_valid());
        let faces = trace_regions(&arr, true).unwrap();
        prop_assert_eq!(faces.len() as i64, 2 - 2 * g - arr.vertex_count() as i64 + arr.edge_count() as i64);
        let cert = verify_k_filling(&arr, k).unwrap();
        prop_assert!(cert.pass);
        prop_assert!(verify_k_filling(&arr, k + 1).unwrap().pass);
    }

    #[test]
    fn restriction_keeps_punctures_and_euler((arr, _) in generated(), mask in any::<u64>()) {
        let n = arr.curves.len();
        let mut subset: Vec<usize> = (0..n).filter(|c| mask >> (c % 64) & 1 == 1).collect();
        if subset.is_empty() {
            subset.push((mask % n as u64) as usize);
        }
        let (sub, map) = restrict_with_map(&arr, &subset).unwrap();
        prop_assert_eq!(sub.total_punctures(), arr.total_punctures());
        prop_assert_eq!(sub.euler_sum(), arr.surface.closed_euler());
        prop_assert!(validate_arrangement(&sub).is_valid());
        prop_assert_eq!(map.len(), arr.regions.len());
    }

    #[test]
    fn bigon_reduction_removes_pairs((arr, _) in generated(), pick in any::<(usize, usize)>()) {
        let n = arr.curves.len();
        let i = pick.0 % n;
        let j = (i + 1 + pick.1 % (n - 1)) % n;
        let pair = restrict(&arr, &[i, j]).unwrap();
        let r = reduce_bigons(&pair).unwrap();
        prop_assert_eq!(r.result.crossings.len() + 2 * r.removed.len(), r.initial_crossings);
        prop_assert!(r.removed.len() <= r.initial_crossings / 2);
        prop_assert!(validate_arrangement(&r.result).is_valid());
        prop_assert_eq!(are_homotopic(&arr, i, j).unwrap(), are_homotopic(&arr, j, i).unwrap());
    }

    #[test]
    fn roundtrip_preserves_certificate((arr, k) in generated()) {
        let json = serde_json::to_string(&arr).unwrap();
        let back: Arrangement = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &arr);
        prop_assert_eq!(verify_k_filling(&back, k).unwrap(), verify_k_filling(&arr, k).unwrap());
    }

    #[test]
    fn even_minimum_is_tight(g in 0u32..6, n in 1u32..300, k in prop::sample::select(vec![2u32, 4, 6, 8])) {
        let sig = SurfaceSig::new(g, n);
        prop_assume!(sig.euler() < 0);
        let big_n = bounds::min_filling_even(sig, k).unwrap().minimal_n.unwrap();
        let ok = |m: u64| u64::from(k) * m * m.saturating_sub(1) >= 2 * sig.euler().unsigned_abs();
        prop_assert!(ok(big_n));
        prop_assert!(big_n == 1 || !ok(big_n - 1));
    }

    #[test]
    fn odd_minimum_dominates_plain_bound(g in 1u32..6, n in 1u32..300, k in prop::sample::select(vec![1u32, 3, 5]),
                                         m_cap in prop::sample::select(vec![3u64, 6, 12])) {
        let sig = SurfaceSig::new(g, n);
        let odd = bounds::min_filling_odd(sig, k, m_cap).unwrap().minimal_n.unwrap();
        let chi = sig.euler().unsigned_abs();
        let plain = (1u64..).find(|&m| u64::from(k) * m * (m - 1) >= 2 * chi).unwrap();
        prop_assert!(odd >= plain);
        let value = |m: u64| bounds::odd_cap_value(m, m_cap, k);
        prop_assert!(value(odd) >= Rational::from_integer(i128::from(chi)));
        prop_assert!(odd == 1 || value(odd - 1) < Rational::from_integer(i128::from(chi)));
    }

    #[test]
    fn genus_window_sits_above_even_minimum(g in 2u32..8, n in 1u32..200, k in prop::sample::select(vec![2u32, 4, 6])) {
        let sig = SurfaceSig::new(g, n);
        let w = bounds::genus_window(sig, k).unwrap().interval.unwrap();
        let even = bounds::min_filling_even(sig, k).unwrap().minimal_n.unwrap();
        prop_assert!(w[0] > even as f64 - 3.0);
    }

    #[test]
    fn genus_plan_inside_derived_window(g in 2u32..10, n in 1u32..400, k in prop::sample::select(vec![2u32, 4, 6])) {
        let p = plan_genus_fill(g, n, k).unwrap();
        prop_assert!(p.in_derived_window, "{:?}", p);
        prop_assert!(p.in_stated_window);
        if p.y >= 4 {
            prop_assert!(p.feasibility[1..].iter().all(|s| s.holds), "{:?}", p);
        }
    }

    #[test]
    fn homotopy_is_symmetric_on_torus_families(n in 4u32..40) {
        let arr = torus_k1_fill(n).unwrap();
        let f = torus_k1_families(n).unwrap();
        let [h, _, _] = f.ranges();
        if h.len() >= 2 {
            prop_assert!(!are_homotopic(&arr, 0, 1).unwrap());
            prop_assert!(!are_homotopic(&arr, 1, 0).unwrap());
        }
    }
}

#[test]
fn exact_sphere_counts_have_k_choose_pairs_crossings() {
    for k in [2u32, 4, 6] {
        for big_n in 2..8usize {
            let n = bounds::sphere_exact_punctures(big_n as u64, k) as u32;
            let arr = sphere_fill(n, k).unwrap();
            assert_eq!(arr.curves.len(), big_n);
            assert_eq!(arr.vertex_count(), k as usize * choose2(big_n));
            assert_eq!(arr.regions.len(), arr.vertex_count() + 2);
            assert!(arr.regions.iter().all(|r| r.punctures == 1));
        }
    }
}

#[test]
fn torus_face_count_equals_crossings() {
    for k in [2u32, 4] {
        for n in 1..80 {
            let arr = torus_fill(n, k).unwrap();
            assert_eq!(arr.regions.len(), arr.vertex_count());
            assert_eq!(arr.vertex_count(), k as usize * choose2(arr.curves.len()));
        }
    }
}

#[test]
fn torus_k1_faces_match_family_products() {
    for n in 1..120 {
        let f = torus_k1_families(n).unwrap();
        let arr = torus_k1_fill(n).unwrap();
        assert_eq!(arr.regions.len(), f.faces());
        assert!(f.faces() >= n as usize);
    }
}

#[test]
fn pair_product_matches_brute_force() {
    for n in 0..=200 {
        let (value, w) = bounds::pair_product_max(n);
        assert_eq!(value, brute_pair_product(n), "N={n}");
        assert_eq!(w.iter().sum::<u64>(), n);
        assert_eq!(w[0] * w[1] + w[1] * w[2] + w[0] * w[2], value);
    }
}

#[test]
fn odd_cap_dominates_integer_maximum() {
    for k in [1u32, 3] {
        for m in 1..=4u64 {
            for n in 1..=12u64 {
                let brute = Rational::from_integer(i128::from(brute_partition_max(n, m, k).unwrap().value));
                let cap = bounds::odd_cap_value(n, m, k);
                assert!(brute <= cap, "N={n} M={m} k={k}");
                assert_eq!(brute == cap, n % m == 0, "N={n} M={m} k={k}");
            }
        }
    }
}

#[test]
fn ksystem_monotone() {
    for k in 0..=3u64 {
        let sizes: Vec<usize> = (1..=6).map(|b| torus_max_ksystem(k, b).unwrap().size).collect();
        assert!(sizes.windows(2).all(|w| w[0] <= w[1]), "k={k}: {sizes:?}");
        if k < 3 {
            let next: Vec<usize> = (1..=6).map(|b| torus_max_ksystem(k + 1, b).unwrap().size).collect();
            assert!(sizes.iter().zip(&next).all(|(a, b)| a <= b));
        }
    }
    for b in 2..=8 {
        assert_eq!(torus_max_ksystem(1, b).unwrap().size, 3);
    }
}

/// Apothem and orthogonal lengths from the Poincare disk model, independent
/// of the cosh identities used by the library.
fn disk_model_lengths(n: u32, k: u32) -> (f64, f64) {
    let a = PI / f64::from(n);
    let d = 2.0 * ((1.0 - a.sin()) / a.cos()).atanh();
    let b = a * f64::from(k);
    let tanh_sq = (a * f64::from(k - 1)).sin() * (a * f64::from(k + 1)).sin() / b.sin().powi(2);
    (d, 2.0 * tanh_sq.sqrt().atanh())
}

#[test]
fn ngon_geometry_matches_disk_model() {
    for n in 5..=200 {
        let g = ngon_geometry(n).unwrap();
        assert!(g.strictly_increasing(), "n={n}");
        assert!(g.identity_residual() < 1e-12);
        for &(k, dk) in &g.d_k {
            let (d, expected) = disk_model_lengths(n, k);
            assert!((g.d - d).abs() <= 1e-9 * d, "n={n}");
            assert!((dk - expected).abs() <= 1e-9 * expected, "n={n} k={k}");
        }
    }
}

#[test]
fn ngon_respects_systole_lower_bound() {
    for n in 5..=64 {
        let r = ngon_arrangement(n).unwrap();
        let bound = cone_area(SurfaceSig::new(0, n)) / (4.0 * 2.0 * r.d_k[0].1);
        assert!(f64::from(n) >= bound);
        assert!(r.bound_check.holds);
    }
}

#[test]
fn cone_area_rearranges() {
    for g in 0..6 {
        for n in 0..40 {
            let sig = SurfaceSig::new(g, n);
            let expected = 2.0 * PI * (2.0 * f64::from(g) - 2.0) + PI * f64::from(n);
            assert!((cone_area(sig) - expected).abs() < 1e-9);
        }
    }
}
