//! Oriented faces and triangle reversals.
//!
//! Orientations are named as seen in the planar drawing (root face outside),
//! which mirrors the storage order: a face whose three edges follow its stored
//! vertex order is clockwise in the plane.

use serde::Serialize;

use super::wood::{defect_of, SchnyderWood};
use crate::error::{Error, Result};
use crate::planar_map::FaceId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceOrientation {
    Cw,
    Ccw,
}

impl FaceOrientation {
    pub fn reversed(self) -> Self {
        match self {
            FaceOrientation::Cw => FaceOrientation::Ccw,
            FaceOrientation::Ccw => FaceOrientation::Cw,
        }
    }

    /// Color shift applied when reversing a face of this orientation.
    /// A ccw face turns cw with `i -> i + 1`; the way back is `i -> i - 1`.
    fn shift(self) -> u8 {
        match self {
            FaceOrientation::Ccw => 1,
            FaceOrientation::Cw => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OrientedFace {
    pub face: FaceId,
    pub orientation: FaceOrientation,
}

impl SchnyderWood {
    /// Orientation of inner face `f` if its edges form a directed 3-cycle.
    pub fn face_orientation(&self, f: FaceId) -> Option<FaceOrientation> {
        let tri = self.triangulation();
        if f == tri.root_face() {
            return None;
        }
        let h = 3 * f;
        let forward = (h..h + 3).filter(|&e| self.is_outgoing(e)).count();
        let backward = (h..h + 3).filter(|&e| self.is_incoming(e)).count();
        match (forward, backward) {
            (3, _) => Some(FaceOrientation::Cw),
            (_, 3) => Some(FaceOrientation::Ccw),
            _ => None,
        }
    }

    /// All oriented inner faces in face-id order.
    pub fn oriented_faces(&self) -> Vec<OrientedFace> {
        (0..self.triangulation().face_count() as FaceId)
            .filter_map(|face| self.face_orientation(face).map(|orientation| OrientedFace { face, orientation }))
            .collect()
    }

    /// Reverses oriented face `f`, shifting the colors of its three edges.
    pub fn flip_face(&self, f: FaceId) -> Result<SchnyderWood> {
        let mut w = self.clone();
        w.flip_face_in_place(f)?;
        Ok(w)
    }

    /// In-place [`flip_face`](Self::flip_face); returns the new orientation.
    pub fn flip_face_in_place(&mut self, f: FaceId) -> Result<FaceOrientation> {
        let orientation = self.face_orientation(f).ok_or(Error::FaceNotOriented(f))?;
        let shift = orientation.shift();
        let tri = self.triangulation_arc().clone();
        let colors = [3 * f, 3 * f + 1, 3 * f + 2].map(|h| self.color(h).expect("oriented faces are inner"));
        for (i, &c) in colors.iter().enumerate() {
            let h = 3 * f + i as u32;
            // Reversed edge takes the color of the edge following it on the
            // cycle; for Schnyder woods that is always the fixed shift.
            let (new_tail, succ) = match orientation {
                FaceOrientation::Cw => (tri.twin(h), colors[(i + 1) % 3]),
                FaceOrientation::Ccw => (h, colors[(i + 2) % 3]),
            };
            debug_assert_eq!((c + shift) % 3, succ, "oriented face {f} is not cyclically colored");
            self.set_out(new_tail, (c + shift) % 3);
        }
        Ok(orientation.reversed())
    }

    /// One pass over the inner faces in id order, reversing an oriented face
    /// whenever that strictly increases the number of balanced vertices among
    /// its three corners. Returns the new wood and the number of reversals.
    pub fn postprocess_flips(&self) -> (SchnyderWood, usize) {
        let mut w = self.clone();
        let tri = w.triangulation_arc().clone();
        let mut indeg = w.all_indegrees();
        let degree: Vec<usize> = (0..tri.n() as u32).map(|v| tri.degree(v)).collect();
        let balanced = |indeg: &[u32; 3], v: u32| defect_of(*indeg, degree[v as usize]) == 0;
        let mut flips = 0;

        for f in 0..tri.face_count() as FaceId {
            let Some(orientation) = w.face_orientation(f) else {
                continue;
            };
            let shift = orientation.shift();
            let corners = tri.face_vertices(f);
            let before = corners.iter().filter(|&&v| balanced(&indeg[v as usize], v)).count();

            // Reversal at corner x: the edge into x turns into the edge out
            // of x, and x receives the reversed edge from its other neighbor.
            let mut after_indeg = [[0u32; 3]; 3];
            for (i, &v) in corners.iter().enumerate() {
                after_indeg[i] = indeg[v as usize];
            }
            for i in 0..3 {
                let h = 3 * f + i as u32;
                let c = w.color(h).unwrap();
                let new_c = (c + shift) % 3;
                let (tail, head) = match orientation {
                    // edge follows stored order: corner i -> corner i+1
                    FaceOrientation::Cw => (i, (i + 1) % 3),
                    FaceOrientation::Ccw => ((i + 1) % 3, i),
                };
                after_indeg[head][c as usize] -= 1;
                after_indeg[tail][new_c as usize] += 1;
            }
            let after = (0..3).filter(|&i| balanced(&after_indeg[i], corners[i])).count();
            if after > before {
                w.flip_face_in_place(f).expect("face is oriented");
                for (i, &v) in corners.iter().enumerate() {
                    indeg[v as usize] = after_indeg[i];
                }
                flips += 1;
            }
        }
        (w, flips)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::{generate_icosphere, generate_stacked, octahedron, tetrahedron};
    use crate::rng::Rng;
    use crate::shelling::{compute_wood, Policy};

    #[test]
    fn tetrahedron_has_no_oriented_faces() {
        let w = compute_wood(tetrahedron(), Policy::Minimal).unwrap();
        assert!(w.oriented_faces().is_empty());
        assert!(matches!(w.flip_face(1), Err(Error::FaceNotOriented(1))));
    }

    #[test]
    fn flip_reverses_orientation_and_is_an_involution() {
        for policy in [Policy::Minimal, Policy::Maximal, Policy::balanced()] {
            let w = compute_wood(octahedron(), policy).unwrap();
            for of in w.oriented_faces() {
                let once = w.flip_face(of.face).unwrap();
                assert_eq!(once.validate(), Ok(()));
                assert_eq!(once.face_orientation(of.face), Some(of.orientation.reversed()));
                let twice = once.flip_face(of.face).unwrap();
                assert_eq!(twice, w);
            }
        }
    }

    #[test]
    fn minimal_wood_has_no_ccw_faces() {
        let mut rng = Rng::new(3);
        for n in [6, 20, 200] {
            let t = generate_stacked(n, &mut rng).unwrap().choose_root(&mut rng);
            let w = compute_wood(t, Policy::Minimal).unwrap();
            assert!(w.oriented_faces().iter().all(|f| f.orientation == FaceOrientation::Cw));
        }
        let w = compute_wood(generate_icosphere(3).unwrap(), Policy::Minimal).unwrap();
        assert!(w.oriented_faces().iter().all(|f| f.orientation == FaceOrientation::Cw));
        let w = compute_wood(generate_icosphere(3).unwrap(), Policy::Maximal).unwrap();
        assert!(w.oriented_faces().iter().all(|f| f.orientation == FaceOrientation::Ccw));
    }

    #[test]
    fn postprocess_never_lowers_balance() {
        let w = compute_wood(generate_icosphere(3).unwrap(), Policy::balanced()).unwrap();
        let (p, _) = w.postprocess_flips();
        assert_eq!(p.validate(), Ok(()));
        assert!(p.balance_stats().delta0 >= w.balance_stats().delta0);
        // Recomputed indegrees agree with the incremental bookkeeping.
        let stats = p.balance_stats();
        let zero = (0..p.triangulation().n() as u32)
            .filter(|&v| !p.triangulation().is_outer(v))
            .filter(|&v| p.defect(v).unwrap() == 0)
            .count();
        assert_eq!(zero, stats.balanced);
    }

    #[test]
    fn postprocess_keeps_balanced_wood() {
        let w = compute_wood(tetrahedron(), Policy::balanced()).unwrap();
        let (p, flips) = w.postprocess_flips();
        assert_eq!(flips, 0);
        assert_eq!(p, w);
    }
}
