//! Essentiality and the bigon/annulus homotopy criterion.

use std::collections::BTreeSet;

use serde::Serialize;

use super::map::Vertex;
use super::restrict::{restrict_traced, Rebuild, UnionFind};
use super::{traced, Arrangement, Traced};
use crate::error::{argument, Error, Result};

/// A curve is essential unless, on its own, it cuts off a disk holding at most
/// one puncture.
pub fn is_essential(arr: &Arrangement, curve: usize) -> Result<bool> {
    essential_traced(&traced(arr)?, curve)
}

pub(crate) fn essential_traced(t: &Traced<'_>, curve: usize) -> Result<bool> {
    if curve >= t.arr.curves.len() {
        return Err(Error::UnknownCurve(curve));
    }
    let (alone, _) = restrict_traced(t, &BTreeSet::from([curve]))?;
    Ok(!alone.regions.iter().any(|r| r.is_disk() && r.punctures <= 1))
}

/// Decides whether two essential curves are homotopic: restrict to the pair,
/// remove empty bigons until none is left, then look for an unpunctured annulus
/// bounded by one curve on each side.
pub fn are_homotopic(arr: &Arrangement, i: usize, j: usize) -> Result<bool> {
    homotopic_traced(&traced(arr)?, i, j)
}

pub(crate) fn homotopic_traced(t: &Traced<'_>, i: usize, j: usize) -> Result<bool> {
    if i == j {
        return argument("homotopy test needs two distinct curves");
    }
    for c in [i, j] {
        if !essential_traced(t, c)? {
            return Err(Error::InessentialCurve(c));
        }
    }
    homotopic_essential(t, i, j)
}

/// Homotopy test for curves already known to be essential.
pub(crate) fn homotopic_essential(t: &Traced<'_>, i: usize, j: usize) -> Result<bool> {
    let (pair, _) = restrict_traced(t, &BTreeSet::from([i, j]))?;
    let reduced = reduce_bigons(&pair)?;
    Ok(cobound_empty_annulus(&reduced.result))
}

fn cobound_empty_annulus(arr: &Arrangement) -> bool {
    if !arr.crossings.is_empty() || arr.curves.len() != 2 {
        return false;
    }
    // Crossing-free curves: every walk is a single marker dart, and the two
    // curves own darts {0, 1} and {2, 3}.
    arr.regions.iter().any(|r| {
        r.chi == 0
            && r.punctures == 0
            && r.walks.len() == 2
            && (r.walks[0][0] / 2 != r.walks[1][0] / 2)
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct BigonReduction {
    pub initial_crossings: usize,
    /// Crossing pairs removed, as ids in the arrangement current at each step.
    pub removed: Vec<(usize, usize)>,
    pub result: Arrangement,
}

/// Repeatedly deletes empty bigons (unpunctured disks bounded by one arc of
/// each of two distinct curves). Each step removes exactly two crossings.
pub fn reduce_bigons(arr: &Arrangement) -> Result<BigonReduction> {
    let initial_crossings = arr.crossings.len();
    let mut current = arr.clone();
    let mut removed = Vec::new();
    loop {
        let t = traced(&current)?;
        let Some(step) = remove_one_bigon(&t)? else {
            break;
        };
        removed.push(step.0);
        debug_assert_eq!(step.1.crossings.len() + 2, current.crossings.len());
        current = step.1;
    }
    Ok(BigonReduction { initial_crossings, removed, result: current })
}

fn remove_one_bigon(t: &Traced<'_>) -> Result<Option<((usize, usize), Arrangement)>> {
    let arr = t.arr;
    let found = arr.regions.iter().enumerate().find_map(|(r, region)| {
        if region.chi != 1 || region.punctures != 0 || region.walks.len() != 1 {
            return None;
        }
        let [d1, d2] = region.walks[0][..] else {
            return None;
        };
        if t.map.curve_of(d1) == t.map.curve_of(d2) {
            return None;
        }
        match (t.map.tail(d1), t.map.tail(d2)) {
            (Vertex::Crossing(x), Vertex::Crossing(y)) if x != y => Some((r, d1, d2, x, y)),
            _ => None,
        }
    });
    let Some((bigon, d1, d2, x, y)) = found else {
        return Ok(None);
    };

    let opposite = |d: usize| t.region_of_dart(t.map.rotate(t.map.rotate(d)));
    let (ox, oy) = (opposite(d1), opposite(d2));
    if ox == bigon || oy == bigon {
        return Err(Error::Structural(format!("bigon region {bigon} meets itself at a corner")));
    }

    let mut uf = UnionFind::new(arr.regions.len());
    uf.remove(bigon);
    uf.union(ox, oy);
    let class_of = uf.classes();
    let n_classes = class_of.iter().flatten().max().map_or(0, |m| m + 1);
    let mut chi = vec![0i64; n_classes];
    let mut punctures = vec![0u32; n_classes];
    for (r, region) in arr.regions.iter().enumerate() {
        if let Some(k) = class_of[r] {
            chi[k] += region.chi;
            punctures[k] += region.punctures;
        }
    }
    // Joining across the former bigon glues a band onto the opposite corners.
    chi[class_of[ox].unwrap()] -= 1;

    let (arrangement, _) = Rebuild {
        old: t,
        kept_curves: (0..arr.curves.len()).collect(),
        kept_crossings: (0..arr.crossings.len()).filter(|&c| c != x && c != y).collect(),
        class_of,
        chi,
        punctures,
        // Once the bigon collapses its two sides swap neighbours; the edges
        // continuing through x and y carry the right labels.
        stale: vec![d1, d1 ^ 1, d2, d2 ^ 1],
    }
    .run()?;
    Ok(Some(((x, y), arrangement)))
}
