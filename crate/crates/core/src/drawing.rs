//! Schnyder's face-count drawing on the `(2n - 5) x (2n - 5)` grid.
//!
//! An inner vertex `v` is placed at `(t_0(v), t_1(v))`, the face counts of its
//! regions `R_0` and `R_1`; the outer vertices go to `v0 = (2n-5, 0)`,
//! `v1 = (0, 2n-5)` and `v2 = (0, 0)`. The picture is the mirror image of the
//! storage orientation, so a stored (ccw) face `a, b, c` appears clockwise and
//! [`Drawing::face_area2`] reports `orient(a, c, b)`, positive for every inner
//! face of a valid drawing.

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use crate::error::Result;
use crate::geometry::{edges_cross, orient, Point};
use crate::planar_map::{FaceId, Triangulation, VertexId};
use crate::regions::RegionData;
use crate::shelling::SchnyderWood;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drawing {
    /// Side of the grid, `2n - 5`.
    pub grid: i64,
    pub coords: Vec<Point>,
    /// `(t_0, t_1, t_2)` for inner vertices, zero for outer ones.
    pub barycentric: Vec<[u32; 3]>,
    /// Edge endpoints in half-edge id order.
    pub edges: Vec<[VertexId; 2]>,
}

pub fn schnyder_drawing(wood: &SchnyderWood, regions: &RegionData) -> Drawing {
    let tri = wood.triangulation();
    let n = tri.n();
    let grid = 2 * n as i64 - 5;
    let [v0, v1, v2] = tri.root_corners();
    let mut coords = vec![[0i64; 2]; n];
    let mut barycentric = vec![[0u32; 3]; n];
    for v in 0..n {
        let t = regions.faces[v];
        coords[v] = [t[0] as i64, t[1] as i64];
        barycentric[v] = t;
    }
    for v in [v0, v1, v2] {
        barycentric[v as usize] = [0; 3];
    }
    coords[v0 as usize] = [grid, 0];
    coords[v1 as usize] = [0, grid];
    coords[v2 as usize] = [0, 0];
    Drawing {
        grid,
        coords,
        barycentric,
        edges: tri.edge_list(),
    }
}

impl Drawing {
    pub fn n(&self) -> usize {
        self.coords.len()
    }

    /// Twice the signed area of face `f` in plane orientation.
    pub fn face_area2(&self, tri: &Triangulation, f: FaceId) -> i128 {
        let [a, b, c] = tri.face_vertices(f).map(|v| self.coords[v as usize]);
        orient(a, c, b)
    }

    /// Brute-force count of conflicting edge pairs (O(m^2)).
    pub fn crossing_pairs(&self) -> usize {
        let mut count = 0;
        for (i, &[a, b]) in self.edges.iter().enumerate() {
            let (pa, pb) = (self.coords[a as usize], self.coords[b as usize]);
            for &[c, d] in &self.edges[i + 1..] {
                let shared = a == c || a == d || b == c || b == d;
                if edges_cross(pa, pb, self.coords[c as usize], self.coords[d as usize], shared) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Euclidean length of every edge.
    pub fn edge_lengths(&self) -> Vec<f64> {
        self.edges
            .iter()
            .map(|&[a, b]| {
                let (p, q) = (self.coords[a as usize], self.coords[b as usize]);
                let (dx, dy) = ((p[0] - q[0]) as f64, (p[1] - q[1]) as f64);
                dx.hypot(dy)
            })
            .collect()
    }

    /// `v x y` per vertex.
    pub fn write_coords<W: Write>(&self, mut out: W) -> Result<()> {
        for (v, [x, y]) in self.coords.iter().enumerate() {
            writeln!(out, "{v} {x} {y}")?;
        }
        Ok(())
    }

    /// SVG rendering: one `line` per edge in edge order, one `circle` per
    /// vertex, y axis pointing up.
    pub fn to_svg(&self) -> String {
        let g = self.grid;
        let stroke = (g as f64 / 1500.0).max(0.02);
        let radius = (g as f64 / 500.0).max(0.08);
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {g} {g}" width="800" height="800">"#
        );
        let _ = writeln!(s, r#"<g stroke="black" stroke-width="{stroke:.3}" stroke-linecap="round">"#);
        for &[a, b] in &self.edges {
            let (p, q) = (self.coords[a as usize], self.coords[b as usize]);
            let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, p[0], g - p[1], q[0], g - q[1]);
        }
        let _ = writeln!(s, "</g>");
        let _ = writeln!(s, r#"<g fill="crimson">"#);
        for p in &self.coords {
            let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="{radius:.3}"/>"#, p[0], g - p[1]);
        }
        let _ = writeln!(s, "</g>");
        let _ = writeln!(s, "</svg>");
        s
    }

    pub fn export_svg(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_svg())?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::{generate_stacked, tetrahedron};
    use crate::regions::compute_region_data;
    use crate::rng::Rng;
    use crate::shelling::{compute_wood, Policy};

    fn draw(tri: Triangulation, p: Policy) -> (SchnyderWood, Drawing) {
        let w = compute_wood(tri, p).unwrap();
        let r = compute_region_data(&w);
        let d = schnyder_drawing(&w, &r);
        (w, d)
    }

    #[test]
    fn tetrahedron_layout() {
        let (w, d) = draw(tetrahedron(), Policy::Minimal);
        let [v0, v1, v2] = w.root_corners();
        assert_eq!(d.grid, 3);
        assert_eq!(d.coords[3], [1, 1]);
        assert_eq!(d.coords[v0 as usize], [3, 0]);
        assert_eq!(d.coords[v1 as usize], [0, 3]);
        assert_eq!(d.coords[v2 as usize], [0, 0]);
    }

    #[test]
    fn small_drawings_are_planar() {
        let mut rng = Rng::new(8);
        for n in [5, 12, 60, 150] {
            let t = generate_stacked(n, &mut rng).unwrap().choose_root(&mut rng);
            for p in [Policy::Minimal, Policy::balanced()] {
                let (w, d) = draw(t.clone(), p);
                let tri = w.triangulation();
                assert_eq!(d.crossing_pairs(), 0);
                for f in 0..tri.face_count() as u32 {
                    if f != tri.root_face() {
                        assert!(d.face_area2(tri, f) > 0);
                    }
                }
                for v in 0..n as u32 {
                    if !tri.is_outer(v) {
                        let [t0, t1, t2] = d.barycentric[v as usize];
                        assert_eq!((t0 + t1 + t2) as i64, d.grid);
                    }
                }
            }
        }
    }

    #[test]
    fn svg_counts_and_determinism() {
        let (_, d) = draw(tetrahedron(), Policy::Minimal);
        let svg = d.to_svg();
        assert_eq!(svg.matches("<line").count(), 6);
        assert_eq!(svg.matches("<circle").count(), 4);
        assert_eq!(svg, d.to_svg());
    }
}
