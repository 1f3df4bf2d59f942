use serde::Serialize;

use super::homotopy::{essential_traced, homotopic_essential};
use super::{count_intersections, traced, Arrangement};
use crate::error::Result;

/// Outcome of checking the four k-filling conditions, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FillingCertificate {
    pub k: u32,
    pub curves: usize,
    /// (a) pairwise crossings at most `k`.
    pub intersections_ok: bool,
    pub max_intersection: u32,
    /// First pair exceeding `k`, with its crossing count.
    pub intersection_witness: Option<(usize, usize, u32)>,
    /// (b) every curve essential.
    pub essential_ok: bool,
    pub inessential_curves: Vec<usize>,
    /// (c) essential curves pairwise non-homotopic. Pairs involving an
    /// inessential curve are not tested (the criterion does not apply).
    pub non_homotopic_ok: bool,
    pub homotopic_pairs: Vec<(usize, usize)>,
    /// (d) every region a disk with at most one puncture.
    pub regions_ok: bool,
    pub bad_regions: Vec<usize>,
    pub pass: bool,
}

pub fn verify_k_filling(arr: &Arrangement, k: u32) -> Result<FillingCertificate> {
    let t = traced(arr)?;
    let n = arr.curves.len();

    let matrix = count_intersections(arr);
    let max_intersection = matrix.max_off_diagonal().map_or(0, |(_, _, v)| v);
    let intersection_witness = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, matrix.get(i, j)))
        .find(|&(_, _, v)| v > k);

    let mut inessential_curves = Vec::new();
    for c in 0..n {
        if !essential_traced(&t, c)? {
            inessential_curves.push(c);
        }
    }

    let mut homotopic_pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if inessential_curves.contains(&i) || inessential_curves.contains(&j) {
                continue;
            }
            if homotopic_essential(&t, i, j)? {
                homotopic_pairs.push((i, j));
            }
        }
    }

    let bad_regions: Vec<usize> = arr
        .regions
        .iter()
        .enumerate()
        .filter(|(_, r)| !(r.is_disk() && r.punctures <= 1))
        .map(|(i, _)| i)
        .collect();

    let intersections_ok = intersection_witness.is_none();
    let essential_ok = inessential_curves.is_empty();
    let non_homotopic_ok = homotopic_pairs.is_empty();
    let regions_ok = bad_regions.is_empty();
    Ok(FillingCertificate {
        k,
        curves: n,
        intersections_ok,
        max_intersection,
        intersection_witness,
        essential_ok,
        inessential_curves,
        non_homotopic_ok,
        homotopic_pairs,
        regions_ok,
        bad_regions,
        pass: intersections_ok && essential_ok && non_homotopic_ok && regions_ok,
    })
}
