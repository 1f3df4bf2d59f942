//! Sub-arrangements and the region bookkeeping shared with bigon removal.

use std::collections::BTreeSet;

use super::{traced, Arrangement, Crossing, Passage, Region, Traced};
use crate::error::{argument, Error, Result};

/// Keeps only the curves in `subset`. Crossings with dropped curves dissolve
/// and the regions they separated merge; Euler characteristics and punctures
/// are aggregated so the Euler identity still holds.
pub fn restrict(arr: &Arrangement, subset: &[usize]) -> Result<Arrangement> {
    restrict_with_map(arr, subset).map(|(sub, _)| sub)
}

/// As [`restrict`], also returning for every original region the index of the
/// region of the result that contains it.
pub fn restrict_with_map(arr: &Arrangement, subset: &[usize]) -> Result<(Arrangement, Vec<usize>)> {
    let t = traced(arr)?;
    let keep: BTreeSet<usize> = subset.iter().copied().collect();
    restrict_traced(&t, &keep)
}

pub(crate) fn restrict_traced(
    t: &Traced<'_>,
    keep: &BTreeSet<usize>,
) -> Result<(Arrangement, Vec<usize>)> {
    let arr = t.arr;
    if keep.is_empty() {
        return argument("restriction to an empty set of curves");
    }
    if let Some(&c) = keep.iter().find(|&&c| c >= arr.curves.len()) {
        return Err(Error::UnknownCurve(c));
    }

    let n_regions = arr.regions.len();
    let mut uf = UnionFind::new(n_regions);
    let dropped: Vec<usize> = (0..arr.curves.len()).filter(|c| !keep.contains(c)).collect();
    for &c in &dropped {
        for edge in 0..arr.curves[c].len().max(1) {
            let d = t.map.forward_dart(c, edge);
            uf.union(t.region_of_dart(d), t.region_of_dart(d + 1));
        }
    }

    let class_of = uf.classes();
    let n_classes = class_of.iter().flatten().max().map_or(0, |m| m + 1);
    let mut chi = vec![0i64; n_classes];
    let mut punctures = vec![0u32; n_classes];
    for (r, region) in arr.regions.iter().enumerate() {
        let k = class_of[r].expect("every region survives restriction");
        chi[k] += region.chi;
        punctures[k] += region.punctures;
    }
    // Dropped material becomes interior to the merged regions: open arcs of
    // dropped curves count -1, isolated points +1.
    for &c in &dropped {
        let class = |d: usize| class_of[t.region_of_dart(d)].unwrap();
        for edge in 0..arr.curves[c].len().max(1) {
            chi[class(t.map.forward_dart(c, edge))] -= 1;
        }
        if arr.curves[c].is_empty() {
            chi[class(t.map.forward_dart(c, 0))] += 1;
        }
    }
    for x in &arr.crossings {
        let [a, b] = x.passages;
        if !keep.contains(&a.curve) && !keep.contains(&b.curve) {
            let d = t.map.outgoing(a.curve, a.pos).0;
            chi[class_of[t.region_of_dart(d)].unwrap()] += 1;
        }
    }

    let kept_crossings = arr
        .crossings
        .iter()
        .filter(|x| x.passages.iter().all(|p| keep.contains(&p.curve)))
        .map(|x| x.id)
        .collect();
    let rebuilt = Rebuild {
        old: t,
        kept_curves: keep.iter().copied().collect(),
        kept_crossings,
        class_of,
        chi,
        punctures,
        stale: Vec::new(),
    }
    .run()?;
    let region_map = rebuilt.1.into_iter().map(|c| c.unwrap()).collect();
    Ok((rebuilt.0, region_map))
}

/// Rebuilds an arrangement after deleting curves and/or crossings.
///
/// Old regions are grouped into classes (or deleted); each class becomes one
/// new region with the given Euler characteristic and punctures. New boundary
/// walks are traced afresh and attached to classes through the old darts they
/// run along.
pub(crate) struct Rebuild<'t, 'a> {
    pub(crate) old: &'t Traced<'a>,
    /// Old curve ids, in new order.
    pub(crate) kept_curves: Vec<usize>,
    /// Old crossing ids, in new order. Both curves must be kept.
    pub(crate) kept_crossings: Vec<usize>,
    pub(crate) class_of: Vec<Option<usize>>,
    pub(crate) chi: Vec<i64>,
    pub(crate) punctures: Vec<u32>,
    /// Old darts whose right-hand region no longer describes the new edge.
    pub(crate) stale: Vec<usize>,
}

impl Rebuild<'_, '_> {
    pub(crate) fn run(self) -> Result<(Arrangement, Vec<Option<usize>>)> {
        let old = self.old.arr;
        let mut new_crossing = vec![usize::MAX; old.crossings.len()];
        for (i, &x) in self.kept_crossings.iter().enumerate() {
            new_crossing[x] = i;
        }
        let mut new_curve = vec![usize::MAX; old.curves.len()];
        for (i, &c) in self.kept_curves.iter().enumerate() {
            new_curve[c] = i;
        }

        // Old positions surviving on each kept curve, and old pos -> new pos.
        let mut kept_pos: Vec<Vec<usize>> = Vec::with_capacity(self.kept_curves.len());
        let mut new_pos: Vec<Vec<usize>> = vec![Vec::new(); old.curves.len()];
        let mut curves = Vec::with_capacity(self.kept_curves.len());
        for &c in &self.kept_curves {
            let positions: Vec<usize> = (0..old.curves[c].len())
                .filter(|&p| new_crossing[old.curves[c][p]] != usize::MAX)
                .collect();
            let mut np = vec![usize::MAX; old.curves[c].len()];
            for (q, &p) in positions.iter().enumerate() {
                np[p] = q;
            }
            curves.push(positions.iter().map(|&p| new_crossing[old.curves[c][p]]).collect());
            new_pos[c] = np;
            kept_pos.push(positions);
        }
        let crossings = self
            .kept_crossings
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let cx = &old.crossings[x];
                let passages = cx.passages.map(|p| Passage {
                    curve: new_curve[p.curve],
                    pos: new_pos[p.curve][p.pos],
                });
                Crossing { id: i, passages, sign: cx.sign }
            })
            .collect();

        let mut arr = Arrangement { surface: old.surface, curves, crossings, regions: Vec::new() };
        let fresh = Traced::structure(&arr).map_err(|r| Error::Structural(r.to_string()))?;

        let n_classes = self.chi.len();
        let mut walks: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n_classes];
        for face in &fresh.faces {
            let (nc, edge, forward) = fresh.map.locate(face[0]);
            let c = self.kept_curves[nc];
            let class = self
                .old_chain(c, &kept_pos[nc], edge, forward)
                .filter(|d| !self.stale.contains(d))
                .find_map(|d| self.class_of[self.old.region_of_dart(d)])
                .ok_or_else(|| Error::Structural("boundary walk lies on deleted regions only".into()))?;
            walks[class].push(face.clone());
        }
        if walks.iter().any(Vec::is_empty) {
            return Err(Error::Structural("a merged region has no boundary".into()));
        }
        arr.regions = walks
            .into_iter()
            .enumerate()
            .map(|(k, w)| Region { chi: self.chi[k], punctures: self.punctures[k], walks: w })
            .collect();
        Ok((arr, self.class_of))
    }

    /// Old darts, in order, making up new edge `edge` of old curve `c`.
    fn old_chain<'s>(
        &'s self,
        c: usize,
        kept: &[usize],
        edge: usize,
        forward: bool,
    ) -> impl Iterator<Item = usize> + 's {
        let m = self.old.arr.curves[c].len().max(1);
        let (start, len) = if kept.is_empty() {
            (0, m)
        } else {
            let s = kept[edge];
            let e = kept[(edge + 1) % kept.len()];
            (s, if kept.len() == 1 { m } else { (e + m - s) % m })
        };
        let map = &self.old.map;
        (0..len).map(move |i| {
            if forward {
                map.forward_dart(c, (start + i) % m)
            } else {
                map.backward_dart(c, (start + len - 1 - i) % m)
            }
        })
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    removed: Vec<bool>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), removed: vec![false; n] }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }

    pub(crate) fn remove(&mut self, x: usize) {
        self.removed[x] = true;
    }

    /// Dense class ids, numbered by smallest member.
    pub(crate) fn classes(&mut self) -> Vec<Option<usize>> {
        let n = self.parent.len();
        let mut id = vec![usize::MAX; n];
        let mut next = 0;
        let mut out = vec![None; n];
        for x in 0..n {
            if self.removed[x] {
                continue;
            }
            let r = self.find(x);
            if id[r] == usize::MAX {
                id[r] = next;
                next += 1;
            }
            out[x] = Some(id[r]);
        }
        out
    }
}
