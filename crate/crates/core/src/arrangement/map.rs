//! Rotation-system view of an arrangement.
//!
//! Every curve with `m >= 1` crossings is cut into `m` edges, edge `p` running
//! from position `p` to position `p + 1 (mod m)`. A crossing-free curve carries
//! one 2-valent marker and a single loop edge. Edges are numbered curve by
//! curve; edge `e` owns darts `2e` (forward along the curve) and `2e + 1`
//! (backward). Faces are the orbits of `d -> next_ccw(reverse(d))`, which keeps
//! the face on the right-hand side of each dart.

use super::Arrangement;

#[derive(Debug, Clone)]
pub(crate) struct CombinatorialMap {
    edge_offset: Vec<usize>,
    edge_count: Vec<usize>,
    dart_curve: Vec<usize>,
    next_ccw: Vec<usize>,
    dart_tail: Vec<Vertex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Vertex {
    Crossing(usize),
    Marker(usize),
}

impl CombinatorialMap {
    /// Builds the map. The caller must have checked the structural invariants
    /// (references resolve, passages agree with the curve sequences).
    pub(crate) fn new(arr: &Arrangement) -> Self {
        let mut edge_offset = Vec::with_capacity(arr.curves.len());
        let mut edge_count = Vec::with_capacity(arr.curves.len());
        let mut total = 0;
        for curve in &arr.curves {
            edge_offset.push(total);
            let m = curve.len().max(1);
            edge_count.push(m);
            total += m;
        }
        let n_darts = 2 * total;
        let mut dart_curve = vec![0; n_darts];
        let mut dart_tail = vec![Vertex::Marker(0); n_darts];
        for (c, curve) in arr.curves.iter().enumerate() {
            let m = edge_count[c];
            for p in 0..m {
                let e = edge_offset[c] + p;
                dart_curve[2 * e] = c;
                dart_curve[2 * e + 1] = c;
                if curve.is_empty() {
                    dart_tail[2 * e] = Vertex::Marker(c);
                    dart_tail[2 * e + 1] = Vertex::Marker(c);
                } else {
                    dart_tail[2 * e] = Vertex::Crossing(curve[p]);
                    dart_tail[2 * e + 1] = Vertex::Crossing(curve[(p + 1) % m]);
                }
            }
        }

        let mut map = Self {
            edge_offset,
            edge_count,
            dart_curve,
            next_ccw: vec![usize::MAX; n_darts],
            dart_tail,
        };

        for (c, curve) in arr.curves.iter().enumerate() {
            if curve.is_empty() {
                let e = map.edge_offset[c];
                map.next_ccw[2 * e] = 2 * e + 1;
                map.next_ccw[2 * e + 1] = 2 * e;
            }
        }
        for crossing in &arr.crossings {
            let [a, b] = crossing.passages;
            let a_out = map.outgoing(a.curve, a.pos);
            let b_out = map.outgoing(b.curve, b.pos);
            let ring = if crossing.sign > 0 {
                [a_out.0, b_out.0, a_out.1, b_out.1]
            } else {
                [a_out.0, b_out.1, a_out.1, b_out.0]
            };
            for i in 0..4 {
                map.next_ccw[ring[i]] = ring[(i + 1) % 4];
            }
        }
        map
    }

    /// (forward, backward) darts leaving the vertex at `pos` on `curve`.
    pub(crate) fn outgoing(&self, curve: usize, pos: usize) -> (usize, usize) {
        let m = self.edge_count[curve];
        let off = self.edge_offset[curve];
        (2 * (off + pos), 2 * (off + (pos + m - 1) % m) + 1)
    }

    pub(crate) fn forward_dart(&self, curve: usize, edge: usize) -> usize {
        2 * (self.edge_offset[curve] + edge)
    }

    pub(crate) fn backward_dart(&self, curve: usize, edge: usize) -> usize {
        self.forward_dart(curve, edge) + 1
    }

    /// (curve, edge index along the curve, is-forward) of a dart.
    pub(crate) fn locate(&self, dart: usize) -> (usize, usize, bool) {
        let c = self.dart_curve[dart];
        (c, dart / 2 - self.edge_offset[c], dart % 2 == 0)
    }

    pub(crate) fn dart_count(&self) -> usize {
        self.next_ccw.len()
    }

    pub(crate) fn edge_total(&self) -> usize {
        self.next_ccw.len() / 2
    }

    pub(crate) fn curve_of(&self, dart: usize) -> usize {
        self.dart_curve[dart]
    }

    pub(crate) fn tail(&self, dart: usize) -> Vertex {
        self.dart_tail[dart]
    }

    pub(crate) fn rotate(&self, dart: usize) -> usize {
        self.next_ccw[dart]
    }

    pub(crate) fn face_step(&self, dart: usize) -> usize {
        self.next_ccw[dart ^ 1]
    }

    /// Orbits of the face permutation, each starting at its smallest dart,
    /// listed by that smallest dart. Returns `None` if some dart has no
    /// rotation successor or the walk fails to close.
    pub(crate) fn faces(&self) -> Option<Vec<Vec<usize>>> {
        let n = self.dart_count();
        if self.next_ccw.iter().any(|&d| d >= n) {
            return None;
        }
        let mut seen = vec![false; n];
        let mut faces = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut walk = vec![start];
            seen[start] = true;
            let mut d = self.face_step(start);
            while d != start {
                if seen[d] || walk.len() > n {
                    return None;
                }
                seen[d] = true;
                walk.push(d);
                d = self.face_step(d);
            }
            faces.push(walk);
        }
        Some(faces)
    }
}
