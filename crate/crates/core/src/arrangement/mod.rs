//! Multicurve arrangements on punctured surfaces.
//!
//! An [`Arrangement`] stores each curve as the cyclic sequence of crossings met
//! along it, one rotation sign per crossing, and the complementary regions with
//! their Euler characteristic (in the closed surface) and puncture count.
//! Regions are listed explicitly so that non-cellular arrangements (as produced
//! by [`restrict`]) are first-class; the Euler identity
//! `v - e + sum(chi) = 2 - 2g` ties the stored data to the rotation system.
//!
//! Region boundary walks are lists of darts. Edges are numbered curve by curve
//! (a curve with `m` crossings has `m` edges, a crossing-free curve has one loop
//! edge through its marker); edge `e` has forward dart `2e` and backward dart
//! `2e + 1`. A walk lists the darts whose right-hand side faces the region.

mod certificate;
mod homotopy;
pub(crate) mod map;
mod restrict;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::SurfaceSig;
use map::CombinatorialMap;

pub use certificate::{verify_k_filling, FillingCertificate};
pub use homotopy::{are_homotopic, is_essential, reduce_bigons, BigonReduction};
pub use restrict::{restrict, restrict_with_map};

/// One pass of a curve through a crossing: the curve and the position of the
/// crossing in that curve's cyclic sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Passage {
    pub curve: usize,
    pub pos: usize,
}

impl From<[usize; 2]> for Passage {
    fn from([curve, pos]: [usize; 2]) -> Self {
        Self { curve, pos }
    }
}

impl From<Passage> for [usize; 2] {
    fn from(p: Passage) -> Self {
        [p.curve, p.pos]
    }
}

/// A transverse double point of two distinct curves.
///
/// With passages `[a, b]`, sign `+1` means the outgoing strand-ends appear
/// counterclockwise as `a+, b+, a-, b-`, i.e. `b` crosses `a` from its right to
/// its left. Sign `-1` is the mirror order `a+, b-, a-, b+`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub id: usize,
    pub passages: [Passage; 2],
    pub sign: i8,
}

/// A complementary component, described in the closed surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    pub chi: i64,
    pub punctures: u32,
    pub walks: Vec<Vec<usize>>,
}

impl Region {
    pub fn is_disk(&self) -> bool {
        self.chi == 1 && self.walks.len() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrangement {
    pub surface: SurfaceSig,
    pub curves: Vec<Vec<usize>>,
    pub crossings: Vec<Crossing>,
    pub regions: Vec<Region>,
}

impl Arrangement {
    pub fn curve_count(&self) -> usize {
        self.curves.len()
    }

    pub fn marker_count(&self) -> usize {
        self.curves.iter().filter(|c| c.is_empty()).count()
    }

    /// Vertices of the drawn graph: crossings plus markers.
    pub fn vertex_count(&self) -> usize {
        self.crossings.len() + self.marker_count()
    }

    pub fn edge_count(&self) -> usize {
        self.curves.iter().map(|c| c.len().max(1)).sum()
    }

    pub fn euler_sum(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64
            + self.regions.iter().map(|r| r.chi).sum::<i64>()
    }

    pub fn is_cellular(&self) -> bool {
        self.regions.iter().all(Region::is_disk)
    }

    pub fn total_punctures(&self) -> u64 {
        self.regions.iter().map(|r| u64::from(r.punctures)).sum()
    }
}

/// One violated invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Issue {
    NoCurves,
    CrossingId { index: usize, found: usize },
    BadSign { crossing: usize, sign: i8 },
    SelfCrossing { crossing: usize, curve: usize },
    PassageOutOfRange { crossing: usize, curve: usize, pos: usize },
    PassageMismatch { crossing: usize, curve: usize, pos: usize },
    UnresolvedReference { curve: usize, pos: usize, crossing: usize },
    UnreferencedPosition { curve: usize, pos: usize },
    UnclosedFace,
    WalkBroken { region: usize, walk: usize },
    DartReused { region: usize, dart: usize },
    DartUncovered { dart: usize },
    ImpossibleRegion { region: usize, chi: i64, walks: usize },
    PunctureTotal { found: u64, expected: u32 },
    EulerIdentity { found: i64, expected: i64 },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::NoCurves => write!(f, "arrangement has no curves"),
            Issue::CrossingId { index, found } => {
                write!(f, "crossing at index {index} carries id {found}")
            }
            Issue::BadSign { crossing, sign } => {
                write!(f, "crossing {crossing} has sign {sign}, expected +1 or -1")
            }
            Issue::SelfCrossing { crossing, curve } => {
                write!(f, "crossing {crossing} passes curve {curve} twice")
            }
            Issue::PassageOutOfRange { crossing, curve, pos } => {
                write!(f, "crossing {crossing} references missing passage ({curve},{pos})")
            }
            Issue::PassageMismatch { crossing, curve, pos } => write!(
                f,
                "crossing {crossing} claims passage ({curve},{pos}) but the curve lists another crossing there"
            ),
            Issue::UnresolvedReference { curve, pos, crossing } => {
                write!(f, "curve {curve} position {pos} references unknown crossing {crossing}")
            }
            Issue::UnreferencedPosition { curve, pos } => write!(
                f,
                "curve {curve} position {pos} is not claimed by exactly one crossing passage"
            ),
            Issue::UnclosedFace => write!(f, "rotation data is inconsistent: a face trace never closes"),
            Issue::WalkBroken { region, walk } => {
                write!(f, "region {region} walk {walk} is not a traced boundary walk")
            }
            Issue::DartReused { region, dart } => {
                write!(f, "dart {dart} appears more than once (region {region})")
            }
            Issue::DartUncovered { dart } => write!(f, "dart {dart} lies on no region boundary"),
            Issue::ImpossibleRegion { region, chi, walks } => write!(
                f,
                "region {region} has euler-char {chi} with {walks} boundary walks"
            ),
            Issue::PunctureTotal { found, expected } => {
                write!(f, "puncture total ≠ n: regions hold {found}, surface has {expected}")
            }
            Issue::EulerIdentity { found, expected } => write!(
                f,
                "Euler identity violated: v - e + Σχ = {found}, expected {expected}"
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn messages(&self) -> Vec<String> {
        self.issues.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return write!(f, "valid");
        }
        for (i, issue) in self.issues.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{issue}")?;
        }
        Ok(())
    }
}

/// Structural issues: references, passages, signs. Face tracing is only
/// attempted once these are clean.
fn structural_issues(arr: &Arrangement) -> Vec<Issue> {
    let mut issues = Vec::new();
    if arr.curves.is_empty() {
        issues.push(Issue::NoCurves);
    }
    let mut claimed: Vec<Vec<u8>> = arr.curves.iter().map(|c| vec![0; c.len()]).collect();
    for (index, crossing) in arr.crossings.iter().enumerate() {
        if crossing.id != index {
            issues.push(Issue::CrossingId { index, found: crossing.id });
        }
        if crossing.sign != 1 && crossing.sign != -1 {
            issues.push(Issue::BadSign { crossing: index, sign: crossing.sign });
        }
        let [a, b] = crossing.passages;
        if a.curve == b.curve {
            issues.push(Issue::SelfCrossing { crossing: index, curve: a.curve });
        }
        for p in [a, b] {
            match arr.curves.get(p.curve).and_then(|c| c.get(p.pos)) {
                None => issues.push(Issue::PassageOutOfRange {
                    crossing: index,
                    curve: p.curve,
                    pos: p.pos,
                }),
                Some(&x) => {
                    claimed[p.curve][p.pos] = claimed[p.curve][p.pos].saturating_add(1);
                    if x != index {
                        issues.push(Issue::PassageMismatch {
                            crossing: index,
                            curve: p.curve,
                            pos: p.pos,
                        });
                    }
                }
            }
        }
    }
    for (c, curve) in arr.curves.iter().enumerate() {
        for (pos, &x) in curve.iter().enumerate() {
            if x >= arr.crossings.len() {
                issues.push(Issue::UnresolvedReference { curve: c, pos, crossing: x });
            } else if claimed[c][pos] != 1 {
                issues.push(Issue::UnreferencedPosition { curve: c, pos });
            }
        }
    }
    issues
}

/// A structurally sound arrangement together with its traced faces and, when
/// the stored regions are consistent, the face-to-region assignment.
#[derive(Debug, Clone)]
pub(crate) struct Traced<'a> {
    pub(crate) arr: &'a Arrangement,
    pub(crate) map: CombinatorialMap,
    pub(crate) faces: Vec<Vec<usize>>,
    pub(crate) dart_face: Vec<usize>,
    pub(crate) face_region: Vec<usize>,
}

impl<'a> Traced<'a> {
    /// Structure-only tracing: no region checks, `face_region` left empty.
    pub(crate) fn structure(arr: &'a Arrangement) -> std::result::Result<Self, ValidationReport> {
        let issues = structural_issues(arr);
        if !issues.is_empty() {
            return Err(ValidationReport { issues });
        }
        let map = CombinatorialMap::new(arr);
        let Some(faces) = map.faces() else {
            return Err(ValidationReport { issues: vec![Issue::UnclosedFace] });
        };
        let mut dart_face = vec![0; map.dart_count()];
        for (f, walk) in faces.iter().enumerate() {
            for &d in walk {
                dart_face[d] = f;
            }
        }
        Ok(Self { arr, map, faces, dart_face, face_region: Vec::new() })
    }

    /// Full validation; on success every face is assigned to its region.
    pub(crate) fn new(arr: &'a Arrangement) -> std::result::Result<Self, ValidationReport> {
        let mut traced = Self::structure(arr)?;
        let mut issues = Vec::new();
        let n_darts = traced.map.dart_count();
        let mut dart_region = vec![usize::MAX; n_darts];
        for (r, region) in arr.regions.iter().enumerate() {
            let walks = region.walks.len() as i64;
            if walks == 0 || region.chi > 2 - walks || (region.chi - walks).rem_euclid(2) != 0 {
                issues.push(Issue::ImpossibleRegion {
                    region: r,
                    chi: region.chi,
                    walks: region.walks.len(),
                });
            }
            for (w, walk) in region.walks.iter().enumerate() {
                let closed = !walk.is_empty()
                    && walk.iter().all(|&d| d < n_darts)
                    && (0..walk.len())
                        .all(|i| traced.map.face_step(walk[i]) == walk[(i + 1) % walk.len()]);
                if !closed {
                    issues.push(Issue::WalkBroken { region: r, walk: w });
                    continue;
                }
                for &d in walk {
                    if dart_region[d] != usize::MAX {
                        issues.push(Issue::DartReused { region: r, dart: d });
                    }
                    dart_region[d] = r;
                }
            }
        }
        if let Some(d) = dart_region.iter().position(|&r| r == usize::MAX) {
            issues.push(Issue::DartUncovered { dart: d });
        }

        let total = arr.total_punctures();
        if total != u64::from(arr.surface.punctures) {
            issues.push(Issue::PunctureTotal { found: total, expected: arr.surface.punctures });
        }
        let found = arr.euler_sum();
        let expected = arr.surface.closed_euler();
        if found != expected {
            issues.push(Issue::EulerIdentity { found, expected });
        }
        if !issues.is_empty() {
            return Err(ValidationReport { issues });
        }
        traced.face_region = traced.faces.iter().map(|walk| dart_region[walk[0]]).collect();
        Ok(traced)
    }

    pub(crate) fn region_of_dart(&self, dart: usize) -> usize {
        self.face_region[self.dart_face[dart]]
    }
}

pub fn validate_arrangement(arr: &Arrangement) -> ValidationReport {
    match Traced::new(arr) {
        Ok(_) => ValidationReport::default(),
        Err(report) => report,
    }
}

pub(crate) fn traced(arr: &Arrangement) -> Result<Traced<'_>> {
    Traced::new(arr).map_err(Error::InvalidArrangement)
}

/// Pairwise crossing counts as drawn.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionMatrix {
    pub entries: Vec<Vec<u32>>,
}

impl IntersectionMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i][j]
    }

    /// The off-diagonal maximum and the first pair attaining it.
    pub fn max_off_diagonal(&self) -> Option<(usize, usize, u32)> {
        let mut best: Option<(usize, usize, u32)> = None;
        for i in 0..self.size() {
            for j in i + 1..self.size() {
                if best.is_none_or(|(_, _, v)| self.entries[i][j] > v) {
                    best = Some((i, j, self.entries[i][j]));
                }
            }
        }
        best
    }

    pub fn upper_sum(&self) -> u64 {
        (0..self.size())
            .flat_map(|i| (i + 1..self.size()).map(move |j| (i, j)))
            .map(|(i, j)| u64::from(self.entries[i][j]))
            .sum()
    }
}

pub fn intersection_matrix(arr: &Arrangement) -> Result<IntersectionMatrix> {
    traced(arr)?;
    Ok(count_intersections(arr))
}

pub(crate) fn count_intersections(arr: &Arrangement) -> IntersectionMatrix {
    let n = arr.curves.len();
    let mut entries = vec![vec![0u32; n]; n];
    for x in &arr.crossings {
        let (a, b) = (x.passages[0].curve, x.passages[1].curve);
        entries[a][b] += 1;
        entries[b][a] += 1;
    }
    IntersectionMatrix { entries }
}

/// With `cellular` set, traces faces from the rotation data and returns one
/// disk region per face, failing unless `v - e + f = 2 - 2g`. Puncture counts
/// are copied from the stored regions when those validate. Without the flag,
/// the stored regions are validated and returned as they are.
pub fn trace_regions(arr: &Arrangement, cellular: bool) -> Result<Vec<Region>> {
    if !cellular {
        traced(arr)?;
        return Ok(arr.regions.clone());
    }
    let structure = Traced::structure(arr).map_err(|report| match report.issues.as_slice() {
        [Issue::UnclosedFace] => Error::Structural(Issue::UnclosedFace.to_string()),
        _ => Error::InvalidArrangement(report),
    })?;
    let found = arr.vertex_count() as i64 - arr.edge_count() as i64 + structure.faces.len() as i64;
    let expected = arr.surface.closed_euler();
    if found != expected {
        return Err(Error::NotCellular { found, expected });
    }
    let stored = Traced::new(arr).ok();
    Ok(structure
        .faces
        .iter()
        .enumerate()
        .map(|(f, walk)| Region {
            chi: 1,
            punctures: stored
                .as_ref()
                .map_or(0, |t| arr.regions[t.face_region[f]].punctures),
            walks: vec![walk.clone()],
        })
        .collect())
}

/// Graphviz rendering of the region adjacency graph: one node per region, one
/// edge per curve arc separating two regions (loops where a region meets
/// itself across an arc).
pub fn region_adjacency_dot(arr: &Arrangement) -> Result<String> {
    use std::fmt::Write;

    let t = traced(arr)?;
    let mut out = String::from("graph regions {\n");
    for (r, region) in arr.regions.iter().enumerate() {
        let _ = writeln!(
            out,
            "  r{r} [label=\"r{r}\\nchi={} p={}\"];",
            region.chi, region.punctures
        );
    }
    for e in 0..t.map.edge_total() {
        let (left, right) = (t.region_of_dart(2 * e + 1), t.region_of_dart(2 * e));
        let _ = writeln!(
            out,
            "  r{left} -- r{right} [label=\"c{}\"];",
            t.map.curve_of(2 * e)
        );
    }
    out.push_str("}\n");
    Ok(out)
}

/// Builds a cellular arrangement from curves and crossings: every traced face
/// becomes a disk region, punctured according to `punctured` (face indices in
/// traced order).
pub(crate) fn assemble_cellular(
    surface: SurfaceSig,
    curves: Vec<Vec<usize>>,
    crossings: Vec<Crossing>,
) -> std::result::Result<Arrangement, ValidationReport> {
    let mut arr = Arrangement { surface, curves, crossings, regions: Vec::new() };
    let faces = Traced::structure(&arr)?.faces;
    arr.regions = faces
        .into_iter()
        .map(|walk| Region { chi: 1, punctures: 0, walks: vec![walk] })
        .collect();
    Ok(arr)
}
