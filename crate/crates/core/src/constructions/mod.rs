//! Explicit filling arrangements on punctured spheres and tori.
//!
//! Curves are laid out geometrically (shifted sine graphs, straight lines on
//! the square torus) and converted into the combinatorial encoding of
//! [`crate::arrangement`]. Every crossing is located by an exact ordering key
//! along each curve, so the output never depends on floating-point ties.

mod genus;
mod sine;
mod torus_k1;

pub use genus::{plan_genus_fill, ChainStep, GenusPlan};
pub use sine::{sine_cylinder, sphere_fill, torus_fill, SineCylinder};
pub use torus_k1::{torus_k1_families, torus_k1_fill, Families};

use crate::arrangement::{assemble_cellular, Arrangement, Crossing, Passage, Traced};
use crate::error::{Error, Result};
use crate::surface::SurfaceSig;

/// Curves with crossings placed by key; positions are the sorted key order.
pub(crate) struct Layout<K> {
    keys: Vec<Vec<(K, usize)>>,
    ends: Vec<([(usize, K); 2], i8)>,
}

impl<K: Ord + Clone> Layout<K> {
    pub(crate) fn new(curves: usize) -> Self {
        Self { keys: vec![Vec::new(); curves], ends: Vec::new() }
    }

    /// Adds a crossing of `a` and `b` with the given rotation sign.
    pub(crate) fn cross(&mut self, a: usize, ka: K, b: usize, kb: K, sign: i8) {
        let id = self.ends.len();
        self.keys[a].push((ka.clone(), id));
        self.keys[b].push((kb.clone(), id));
        self.ends.push(([(a, ka), (b, kb)], sign));
    }

    fn sort(&mut self) {
        for k in &mut self.keys {
            k.sort();
        }
    }

    fn position(&self, curve: usize, key: &K) -> usize {
        self.keys[curve].binary_search_by(|(k, _)| k.cmp(key)).expect("crossing key present")
    }

    /// Index of the edge of `curve` containing the point with key `key`; a key
    /// equal to a crossing selects the edge leaving that crossing.
    pub(crate) fn edge_at(&self, curve: usize, key: &K) -> usize {
        let len = self.keys[curve].len();
        let before = self.keys[curve].partition_point(|(k, _)| k <= key);
        (before + len - 1) % len
    }

    /// Sorts every curve and assembles a cellular arrangement with unpunctured
    /// disk regions, one per traced face.
    pub(crate) fn assemble(&mut self, surface: SurfaceSig) -> Result<Arrangement> {
        self.sort();
        let curves = self.keys.iter().map(|k| k.iter().map(|&(_, id)| id).collect()).collect();
        let crossings = self
            .ends
            .iter()
            .enumerate()
            .map(|(id, (ends, sign))| Crossing {
                id,
                passages: ends.clone().map(|(c, k)| Passage { curve: c, pos: self.position(c, &k) }),
                sign: *sign,
            })
            .collect();
        assemble_cellular(surface, curves, crossings).map_err(Error::InvalidArrangement)
    }
}

/// Region on the right of the forward (`forward = true`) or backward dart of
/// an edge, for arrangements built by [`Layout::assemble`].
pub(crate) fn face_beside(arr: &Arrangement, curve: usize, edge: usize, forward: bool) -> usize {
    let t = Traced::structure(arr).expect("assembled arrangement is structurally sound");
    let d = t.map.forward_dart(curve, edge) + usize::from(!forward);
    t.dart_face[d]
}

/// Puts one puncture in each `required` region, then fills the lowest-index
/// free regions until `n` punctures are placed.
pub(crate) fn place_punctures(arr: &mut Arrangement, required: &[usize], n: u32) -> Result<()> {
    let mut chosen: Vec<usize> = Vec::new();
    for &r in required {
        if !chosen.contains(&r) {
            chosen.push(r);
        }
    }
    let n = n as usize;
    if chosen.len() > n {
        return Err(Error::Structural(format!(
            "{} separating punctures needed, only {n} available",
            chosen.len()
        )));
    }
    if n > arr.regions.len() {
        return Err(Error::Structural(format!("{n} punctures exceed {} faces", arr.regions.len())));
    }
    let free: Vec<usize> = (0..arr.regions.len()).filter(|r| !chosen.contains(r)).collect();
    let missing = n - chosen.len();
    chosen.extend(&free[..missing]);
    for r in chosen {
        arr.regions[r].punctures = 1;
    }
    Ok(())
}
