//! Simple planar triangulations in half-edge form.
//!
//! Faces are stored as vertex triples in counter-clockwise order. Half-edge
//! `3f + i` belongs to face `f` and leaves corner `i`, so `face` and `next`
//! are implicit and only `twin` is stored explicitly.
//!
//! Orientation: rotations around a vertex are expressed in the storage order.
//! When the root face is taken as the unbounded face of a planar drawing, the
//! picture is the mirror image of the storage orientation, so "counter-clockwise
//! in the plane" corresponds to [`Triangulation::rot_cw`] here. The shelling and
//! drawing modules rely on that correspondence.

mod generate;
mod io;

pub use generate::{generate_globe, generate_icosphere, generate_stacked, icosahedron, octahedron, tetrahedron};
pub use io::{load_adjacency, load_obj, load_off, write_adjacency};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rng::Rng;

/// Vertex identifier.
pub type VertexId = u32;
/// Half-edge identifier (`3 * face + corner`).
pub type HalfEdgeId = u32;
/// Face identifier.
pub type FaceId = u32;

/// Marker for "no half-edge".
pub const NIL: u32 = u32::MAX;

/// Immutable, validated simple planar triangulation with a distinguished
/// root face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    faces: Vec<[VertexId; 3]>,
    twin: Vec<HalfEdgeId>,
    vertex_half_edge: Vec<HalfEdgeId>,
    root_face: FaceId,
    root_corner: u8,
}

impl Triangulation {
    /// Builds and validates a triangulation from ccw vertex triples.
    ///
    /// The root is face 0 with its listed corner order.
    pub fn from_faces(n: usize, faces: Vec<[VertexId; 3]>) -> Result<Self> {
        if n > (u32::MAX / 8) as usize || faces.len() > (u32::MAX / 4) as usize {
            return Err(Error::TooLarge(format!("{} vertices, {} faces", n, faces.len())));
        }
        if n < 4 {
            return Err(Error::Invalid(format!("a triangulation needs at least 4 vertices, got {n}")));
        }
        for f in &faces {
            for &v in f {
                if v as usize >= n {
                    return Err(Error::IndexOutOfRange { index: v as usize, n });
                }
            }
        }
        let twin = match_twins(&faces)?;
        let tri = Self::from_parts(n, faces, twin);
        tri.validate()?;
        Ok(tri)
    }

    /// Assembles a triangulation from already matched twins. The caller
    /// guarantees consistency; `validate` is not run.
    pub(crate) fn from_parts(n: usize, faces: Vec<[VertexId; 3]>, twin: Vec<HalfEdgeId>) -> Self {
        let mut vertex_half_edge = vec![NIL; n];
        for (f, tri) in faces.iter().enumerate() {
            for (i, &v) in tri.iter().enumerate() {
                if vertex_half_edge[v as usize] == NIL {
                    vertex_half_edge[v as usize] = (3 * f + i) as u32;
                }
            }
        }
        Triangulation {
            faces,
            twin,
            vertex_half_edge,
            root_face: 0,
            root_corner: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.vertex_half_edge.len()
    }

    pub fn m(&self) -> usize {
        self.twin.len() / 2
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn half_edge_count(&self) -> usize {
        self.twin.len()
    }

    pub fn faces(&self) -> &[[VertexId; 3]] {
        &self.faces
    }

    pub fn face_vertices(&self, f: FaceId) -> [VertexId; 3] {
        self.faces[f as usize]
    }

    #[inline]
    pub fn origin(&self, h: HalfEdgeId) -> VertexId {
        self.faces[(h / 3) as usize][(h % 3) as usize]
    }

    #[inline]
    pub fn dest(&self, h: HalfEdgeId) -> VertexId {
        self.origin(self.next(h))
    }

    #[inline]
    pub fn twin(&self, h: HalfEdgeId) -> HalfEdgeId {
        self.twin[h as usize]
    }

    #[inline]
    pub fn next(&self, h: HalfEdgeId) -> HalfEdgeId {
        if h % 3 == 2 {
            h - 2
        } else {
            h + 1
        }
    }

    #[inline]
    pub fn prev(&self, h: HalfEdgeId) -> HalfEdgeId {
        if h % 3 == 0 {
            h + 2
        } else {
            h - 1
        }
    }

    #[inline]
    pub fn face(&self, h: HalfEdgeId) -> FaceId {
        h / 3
    }

    /// Next outgoing half-edge around `origin(h)` in storage-ccw order.
    #[inline]
    pub fn rot_ccw(&self, h: HalfEdgeId) -> HalfEdgeId {
        self.twin(self.prev(h))
    }

    /// Next outgoing half-edge around `origin(h)` in storage-cw order
    /// (counter-clockwise in the planar drawing).
    #[inline]
    pub fn rot_cw(&self, h: HalfEdgeId) -> HalfEdgeId {
        self.next(self.twin(h))
    }

    /// One outgoing half-edge of `v`.
    #[inline]
    pub fn out_half_edge(&self, v: VertexId) -> HalfEdgeId {
        self.vertex_half_edge[v as usize]
    }

    /// Outgoing half-edges of `v` in storage-cw order, starting anywhere.
    pub fn outgoing(&self, v: VertexId) -> Outgoing<'_> {
        let start = self.out_half_edge(v);
        Outgoing {
            tri: self,
            start,
            cur: start,
            done: false,
        }
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.outgoing(v).map(move |h| self.dest(h))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.outgoing(v).count()
    }

    /// Half-edge from `u` to `w`, if the edge exists. O(deg u).
    pub fn find_half_edge(&self, u: VertexId, w: VertexId) -> Option<HalfEdgeId> {
        self.outgoing(u).find(|&h| self.dest(h) == w)
    }

    /// Canonical representative of the undirected edge of `h`.
    #[inline]
    pub fn edge_rep(&self, h: HalfEdgeId) -> HalfEdgeId {
        h.min(self.twin(h))
    }

    /// Iterates each undirected edge once, as its smaller half-edge id.
    pub fn edges(&self) -> impl Iterator<Item = HalfEdgeId> + '_ {
        (0..self.twin.len() as u32).filter(move |&h| h < self.twin(h))
    }

    /// Undirected edges as endpoint pairs, in half-edge id order.
    pub fn edge_list(&self) -> Vec<[VertexId; 2]> {
        self.edges().map(|h| [self.origin(h), self.dest(h)]).collect()
    }

    pub fn root_face(&self) -> FaceId {
        self.root_face
    }

    /// Root corners (v0, v1, v2), following the root face's stored ccw order.
    pub fn root_corners(&self) -> [VertexId; 3] {
        let f = self.faces[self.root_face as usize];
        let c = self.root_corner as usize;
        [f[c], f[(c + 1) % 3], f[(c + 2) % 3]]
    }

    /// Half-edge of the root face leaving v0 (towards v1).
    pub fn root_half_edge(&self) -> HalfEdgeId {
        3 * self.root_face + self.root_corner as u32
    }

    pub fn is_outer(&self, v: VertexId) -> bool {
        self.root_corners().contains(&v)
    }

    /// Index `i` such that `v` is `v_i`, if `v` is an outer vertex.
    pub fn outer_index(&self, v: VertexId) -> Option<usize> {
        self.root_corners().iter().position(|&r| r == v)
    }

    /// True for the three edges of the root face.
    pub fn is_outer_edge(&self, h: HalfEdgeId) -> bool {
        self.face(h) == self.root_face || self.face(self.twin(h)) == self.root_face
    }

    /// Same triangulation re-rooted at `face` with v0 at `corner`.
    pub fn with_root(&self, face: FaceId, corner: u8) -> Self {
        assert!((face as usize) < self.faces.len() && corner < 3);
        let mut t = self.clone();
        t.root_face = face;
        t.root_corner = corner;
        t
    }

    /// Re-roots so that (v0, v1, v2) are the given vertices, if they form a
    /// face in that ccw order.
    pub fn with_root_corners(&self, corners: [VertexId; 3]) -> Option<Self> {
        let [a, b, c] = corners;
        if a as usize >= self.n() {
            return None;
        }
        let h = self.find_half_edge(a, b)?;
        if self.dest(self.next(h)) != c {
            return None;
        }
        Some(self.with_root(self.face(h), (h % 3) as u8))
    }

    /// Uniformly random root face and corner. The input is left untouched.
    pub fn choose_root(&self, rng: &mut Rng) -> Self {
        let face = rng.index(self.faces.len()) as FaceId;
        let corner = rng.below(3) as u8;
        self.with_root(face, corner)
    }

    /// Same map with vertices renumbered in BFS order from v0 and faces in
    /// order of first contact, root face first. Neighbors end up close in
    /// memory, which matters for large generated inputs. Returns the map and
    /// `new_id[old_id]`.
    pub fn relabeled_bfs(&self) -> (Self, Vec<VertexId>) {
        let n = self.n();
        let mut new_id = vec![NIL; n];
        let mut order = Vec::with_capacity(n);
        let v0 = self.root_corners()[0];
        new_id[v0 as usize] = 0;
        order.push(v0);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in self.neighbors(v) {
                if new_id[w as usize] == NIL {
                    new_id[w as usize] = order.len() as VertexId;
                    order.push(w);
                }
            }
        }

        let fcount = self.faces.len();
        let mut new_face = vec![NIL; fcount];
        let mut face_order = Vec::with_capacity(fcount);
        new_face[self.root_face as usize] = 0;
        face_order.push(self.root_face);
        for &v in &order {
            for h in self.outgoing(v) {
                let f = self.face(h);
                if new_face[f as usize] == NIL {
                    new_face[f as usize] = face_order.len() as FaceId;
                    face_order.push(f);
                }
            }
        }

        let faces = face_order
            .iter()
            .map(|&f| self.faces[f as usize].map(|v| new_id[v as usize]))
            .collect();
        let mut twin = vec![NIL; self.twin.len()];
        for (nf, &f) in face_order.iter().enumerate() {
            for i in 0..3 {
                let t = self.twin[3 * f as usize + i];
                twin[3 * nf + i] = 3 * new_face[(t / 3) as usize] + t % 3;
            }
        }
        let mut tri = Triangulation::from_parts(n, faces, twin);
        tri.root_corner = self.root_corner;
        (tri, new_id)
    }

    /// Degree histogram and the fraction of degree-6 vertices over all
    /// vertices.
    pub fn degree_stats(&self) -> DegreeStats {
        let mut histogram = BTreeMap::new();
        for v in 0..self.n() as u32 {
            *histogram.entry(self.degree(v)).or_insert(0usize) += 1;
        }
        let six = histogram.get(&6).copied().unwrap_or(0);
        DegreeStats {
            d6: six as f64 / self.n() as f64,
            histogram,
        }
    }

    /// Full structural check: Euler counts, twin/next/face consistency,
    /// simplicity, closed single-umbrella rotations and connectivity.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let hcount = self.twin.len();
        let fcount = self.faces.len();
        if 3 * fcount != hcount {
            return Err(Error::Invalid("half-edge count is not three per face".into()));
        }
        if hcount % 2 != 0 || self.m() != 3 * n - 6 || fcount != 2 * n - 4 {
            return Err(Error::Invalid(format!(
                "Euler count mismatch: n = {n}, m = {}, faces = {fcount} (expected m = 3n - 6, faces = 2n - 4)",
                hcount / 2
            )));
        }
        for h in 0..hcount as u32 {
            let t = self.twin(h);
            if t as usize >= hcount || self.twin(t) != h || t == h {
                return Err(Error::Invalid(format!("twin mismatch at half-edge {h}")));
            }
            if self.origin(t) != self.dest(h) || self.dest(t) != self.origin(h) {
                return Err(Error::Invalid(format!("twin endpoints mismatch at half-edge {h}")));
            }
            if self.origin(h) == self.dest(h) {
                return Err(Error::Invalid(format!("loop at vertex {}", self.origin(h))));
            }
            if self.next(self.next(self.next(h))) != h || self.face(self.next(h)) != self.face(h) {
                return Err(Error::Invalid(format!("face cycle broken at half-edge {h}")));
            }
        }
        let mut pairs: Vec<u64> = self
            .edges()
            .map(|h| {
                let (a, b) = (self.origin(h), self.dest(h));
                ((a.min(b) as u64) << 32) | a.max(b) as u64
            })
            .collect();
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Invalid(format!(
                "parallel edges between {} and {}",
                w[0] >> 32,
                w[0] & 0xffff_ffff
            )));
        }
        // Each vertex must have exactly one closed rotation covering all its
        // outgoing half-edges.
        let mut out_count = vec![0u32; n];
        for h in 0..hcount as u32 {
            out_count[self.origin(h) as usize] += 1;
        }
        for v in 0..n as u32 {
            let start = self.out_half_edge(v);
            if start == NIL {
                return Err(Error::Invalid(format!("isolated vertex {v}")));
            }
            let mut h = start;
            let mut steps = 0u32;
            loop {
                if self.origin(h) != v {
                    return Err(Error::Invalid(format!("rotation around {v} leaves the vertex")));
                }
                steps += 1;
                if steps > out_count[v as usize] {
                    return Err(Error::Invalid(format!("rotation around {v} does not close")));
                }
                h = self.rot_cw(h);
                if h == start {
                    break;
                }
            }
            if steps != out_count[v as usize] {
                return Err(Error::Invalid(format!("vertex {v} is not manifold")));
            }
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        if reached != n {
            return Err(Error::Invalid("triangulation is not connected".into()));
        }
        Ok(())
    }

    /// Relabels vertices by first appearance in face order and returns the
    /// sorted edge list; used to compare generator outputs.
    pub fn canonical_edges(&self) -> Vec<[VertexId; 2]> {
        let mut label = vec![NIL; self.n()];
        let mut next = 0u32;
        for f in &self.faces {
            for &v in f {
                if label[v as usize] == NIL {
                    label[v as usize] = next;
                    next += 1;
                }
            }
        }
        let mut edges: Vec<[VertexId; 2]> = self
            .edge_list()
            .into_iter()
            .map(|[a, b]| {
                let (a, b) = (label[a as usize], label[b as usize]);
                [a.min(b), a.max(b)]
            })
            .collect();
        edges.sort_unstable();
        edges
    }
}

/// Iterator over the outgoing half-edges of a vertex.
pub struct Outgoing<'a> {
    tri: &'a Triangulation,
    start: HalfEdgeId,
    cur: HalfEdgeId,
    done: bool,
}

impl Iterator for Outgoing<'_> {
    type Item = HalfEdgeId;

    fn next(&mut self) -> Option<HalfEdgeId> {
        if self.done {
            return None;
        }
        let h = self.cur;
        self.cur = self.tri.rot_cw(h);
        if self.cur == self.start {
            self.done = true;
        }
        Some(h)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DegreeStats {
    pub histogram: BTreeMap<usize, usize>,
    pub d6: f64,
}

/// Pairs each directed half-edge with its reverse by sorting directed keys.
fn match_twins(faces: &[[VertexId; 3]]) -> Result<Vec<HalfEdgeId>> {
    let hcount = faces.len() * 3;
    let mut keyed: Vec<(u64, u32)> = Vec::with_capacity(hcount);
    for (f, t) in faces.iter().enumerate() {
        for i in 0..3 {
            let (a, b) = (t[i], t[(i + 1) % 3]);
            if a == b {
                return Err(Error::Invalid(format!("degenerate face {f}")));
            }
            keyed.push((((a as u64) << 32) | b as u64, (3 * f + i) as u32));
        }
    }
    keyed.sort_unstable();
    if let Some(w) = keyed.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(Error::Invalid(format!(
            "directed edge {} -> {} used twice (non-manifold, inconsistent orientation or parallel edges)",
            w[0].0 >> 32,
            w[0].0 & 0xffff_ffff
        )));
    }
    let mut twin = vec![NIL; hcount];
    for &(key, h) in &keyed {
        let rev = ((key & 0xffff_ffff) << 32) | (key >> 32);
        match keyed.binary_search_by_key(&rev, |&(k, _)| k) {
            Ok(pos) => twin[h as usize] = keyed[pos].1,
            Err(_) => {
                return Err(Error::Invalid(format!(
                    "edge {} -> {} has no opposite half-edge (surface is not closed)",
                    key >> 32,
                    key & 0xffff_ffff
                )))
            }
        }
    }
    Ok(twin)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bfs_relabel_is_an_isomorphism() {
        let mut rng = Rng::new(12);
        let t = generate_stacked(300, &mut rng).unwrap().choose_root(&mut rng);
        let (r, new_id) = t.relabeled_bfs();
        assert!(r.validate().is_ok());
        assert_eq!(r.root_corners(), t.root_corners().map(|v| new_id[v as usize]));
        assert_eq!(r.root_corners()[0], 0);
        let mut a: Vec<[u32; 2]> = t
            .edge_list()
            .into_iter()
            .map(|[x, y]| {
                let (x, y) = (new_id[x as usize], new_id[y as usize]);
                [x.min(y), x.max(y)]
            })
            .collect();
        let mut b: Vec<[u32; 2]> = r.edge_list().into_iter().map(|[x, y]| [x.min(y), x.max(y)]).collect();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    #[test]
    fn tetrahedron_counts() {
        let t = tetrahedron();
        assert_eq!((t.n(), t.m(), t.face_count()), (4, 6, 4));
        t.validate().unwrap();
        for v in 0..4 {
            assert_eq!(t.degree(v), 3);
        }
    }

    #[test]
    fn rotations_are_inverse() {
        let t = icosahedron();
        for h in 0..t.half_edge_count() as u32 {
            assert_eq!(t.rot_ccw(t.rot_cw(h)), h);
        }
    }

    #[test]
    fn rejects_open_surface() {
        // Tetrahedron with one face missing.
        let faces = vec![[0, 1, 2], [1, 0, 3], [2, 1, 3]];
        assert!(Triangulation::from_faces(4, faces).is_err());
    }

    #[test]
    fn rejects_inconsistent_orientation() {
        let mut faces = tetrahedron().faces().to_vec();
        faces[1].swap(0, 1);
        assert!(Triangulation::from_faces(4, faces).is_err());
    }

    #[test]
    fn rejects_torus_like_counts() {
        // Two disjoint tetrahedra: Euler count fails.
        let mut faces = tetrahedron().faces().to_vec();
        for f in tetrahedron().faces() {
            faces.push([f[0] + 4, f[1] + 4, f[2] + 4]);
        }
        assert!(Triangulation::from_faces(8, faces).is_err());
    }

    #[test]
    fn root_corners_follow_face_order() {
        let t = tetrahedron();
        let f = t.face_vertices(2);
        let r = t.with_root(2, 1);
        assert_eq!(r.root_corners(), [f[1], f[2], f[0]]);
        assert_eq!(t.with_root_corners(r.root_corners()).unwrap(), r);
        assert_eq!(r.origin(r.root_half_edge()), f[1]);
    }

    #[test]
    fn choose_root_is_deterministic_and_pure() {
        let t = icosahedron();
        let a = t.choose_root(&mut Rng::new(5));
        let b = t.choose_root(&mut Rng::new(5));
        assert_eq!(a.root_corners(), b.root_corners());
        assert_eq!(t.root_face(), 0);
    }

    #[test]
    fn tetrahedron_root_choices_are_enumerable() {
        let t = tetrahedron();
        let mut seen = std::collections::BTreeSet::new();
        for s in 0..500 {
            let r = t.choose_root(&mut Rng::new(s));
            seen.insert((r.root_face(), r.root_corners()[0]));
        }
        assert_eq!(seen.len(), 12);
    }

    #[test]
    fn degree_stats_tetrahedron() {
        let s = tetrahedron().degree_stats();
        assert_eq!(s.d6, 0.0);
        assert_eq!(s.histogram.get(&3), Some(&4));
    }
}
