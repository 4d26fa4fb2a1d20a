//! Per-vertex path depths and region sizes of a Schnyder wood.
//!
//! For an inner vertex `v`, `P_i(v)` is the color-`i` path from `v` to the
//! outer vertex `v_i`, and `R_i(v)` is the region bounded by `P_{i+1}(v)`,
//! `P_{i+2}(v)` and the outer edge `(v_{i+1}, v_{i+2})`.
//!
//! The linear-time computation rests on one fact: the interior vertices of
//! `R_i(v)` are exactly the proper `T_i`-descendants of the vertices on
//! `P_{i+1}(v) ∪ P_{i+2}(v)`. Summing `|subtree_i(w)| - 1` along a path is a
//! prefix sum over tree `T_{i+1}` (or `T_{i+2}`), so every count is O(1) per
//! vertex after a few tree traversals. Face counts then follow from Euler's
//! relation for the triangulated disk `R_i(v)`.

use std::collections::HashSet;

use serde::Serialize;

use crate::planar_map::{FaceId, HalfEdgeId, Triangulation, VertexId, NIL};
use crate::shelling::SchnyderWood;

/// Path depths, region face counts and region interior-vertex counts.
/// Indexed by vertex; entries of the three outer vertices are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionData {
    /// `depth[v][i]`: number of edges of `P_i(v)`.
    pub depth: Vec<[u32; 3]>,
    /// `faces[v][i]`: inner faces in `R_i(v)`.
    pub faces: Vec<[u32; 3]>,
    /// `interior[v][i]`: vertices strictly inside `R_i(v)`.
    pub interior: Vec<[u32; 3]>,
}

/// Region data of a single vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VertexRegions {
    pub depth: [u32; 3],
    pub faces: [u32; 3],
    pub interior: [u32; 3],
}

impl RegionData {
    pub fn get(&self, v: VertexId) -> VertexRegions {
        let v = v as usize;
        VertexRegions {
            depth: self.depth[v],
            faces: self.faces[v],
            interior: self.interior[v],
        }
    }
}

/// Children lists of a parent array in CSR form, and a BFS order from `root`.
fn bfs_order(parent: &[VertexId], root: VertexId) -> Vec<VertexId> {
    let n = parent.len();
    let mut start = vec![0u32; n + 1];
    for &p in parent {
        if p != NIL {
            start[p as usize + 1] += 1;
        }
    }
    for i in 0..n {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut children = vec![0u32; start[n] as usize];
    for (v, &p) in parent.iter().enumerate() {
        if p != NIL {
            children[fill[p as usize] as usize] = v as u32;
            fill[p as usize] += 1;
        }
    }
    let mut order = Vec::with_capacity(start[n] as usize + 1);
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let v = order[head] as usize;
        head += 1;
        order.extend_from_slice(&children[start[v] as usize..start[v + 1] as usize]);
    }
    order
}

/// Exact region data for every inner vertex in O(n).
pub fn compute_region_data(wood: &SchnyderWood) -> RegionData {
    let tri = wood.triangulation();
    let n = tri.n();
    let roots = tri.root_corners();
    let parent: [Vec<VertexId>; 3] = [wood.parents(0), wood.parents(1), wood.parents(2)];
    let order: [Vec<VertexId>; 3] = [0, 1, 2].map(|c| bfs_order(&parent[c], roots[c]));

    let mut depth = vec![[0u32; 3]; n];
    // Proper descendants in T_i.
    let mut below = vec![[0u32; 3]; n];
    for c in 0..3 {
        for &v in &order[c][1..] {
            depth[v as usize][c] = depth[parent[c][v as usize] as usize][c] + 1;
        }
        for &v in order[c][1..].iter().rev() {
            let p = parent[c][v as usize] as usize;
            below[p][c] += below[v as usize][c] + 1;
        }
    }

    // along[v][j][i]: sum of below_i over the vertices of P_j(v), v included.
    let mut along = vec![[[0u32; 3]; 3]; n];
    for j in 0..3 {
        for &v in &order[j][1..] {
            let p = parent[j][v as usize] as usize;
            for i in 0..3 {
                if i != j {
                    along[v as usize][j][i] = along[p][j][i] + below[v as usize][i];
                }
            }
        }
    }

    let mut interior = vec![[0u32; 3]; n];
    let mut faces = vec![[0u32; 3]; n];
    for v in 0..n {
        if tri.is_outer(v as u32) {
            continue;
        }
        for i in 0..3 {
            let (a, b) = ((i + 1) % 3, (i + 2) % 3);
            interior[v][i] = along[v][a][i] + along[v][b][i] - below[v][i];
            faces[v][i] = 2 * interior[v][i] + depth[v][a] + depth[v][b] - 1;
        }
    }
    RegionData { depth, faces, interior }
}

/// Walks `P_c(v)` and returns its vertices (starting at `v`) and half-edges.
fn path(wood: &SchnyderWood, v: VertexId, c: u8) -> (Vec<VertexId>, Vec<HalfEdgeId>) {
    let tri = wood.triangulation();
    let root = tri.root_corners()[c as usize];
    let mut verts = vec![v];
    let mut edges = Vec::new();
    let mut x = v;
    while x != root {
        let h = wood.out_edge(x, c).expect("valid wood");
        edges.push(h);
        x = tri.dest(h);
        verts.push(x);
        assert!(verts.len() <= tri.n(), "color {c} path from {v} cycles");
    }
    (verts, edges)
}

/// Brute-force region data for one vertex: explicit path walks and a flood
/// fill of the inner faces that does not cross the three paths. O(n).
pub fn region_data_oracle(wood: &SchnyderWood, v: VertexId) -> VertexRegions {
    let tri = wood.triangulation();
    let roots = tri.root_corners();
    let mut on_path = HashSet::new();
    let mut cut = HashSet::new();
    let mut depth = [0u32; 3];
    for c in 0..3u8 {
        let (verts, edges) = path(wood, v, c);
        depth[c as usize] = edges.len() as u32;
        on_path.extend(verts);
        cut.extend(edges.iter().map(|&h| tri.edge_rep(h)));
    }

    let mut component = vec![u32::MAX; tri.face_count()];
    let mut sizes: Vec<Vec<FaceId>> = Vec::new();
    for seed in 0..tri.face_count() as FaceId {
        if seed == tri.root_face() || component[seed as usize] != u32::MAX {
            continue;
        }
        let id = sizes.len() as u32;
        let mut members = vec![seed];
        component[seed as usize] = id;
        let mut i = 0;
        while i < members.len() {
            let f = members[i];
            i += 1;
            for h in 3 * f..3 * f + 3 {
                if tri.is_outer_edge(h) || cut.contains(&tri.edge_rep(h)) {
                    continue;
                }
                let g = tri.face(tri.twin(h));
                if component[g as usize] == u32::MAX {
                    component[g as usize] = id;
                    members.push(g);
                }
            }
        }
        sizes.push(members);
    }

    let mut faces = [0u32; 3];
    let mut interior = [0u32; 3];
    for i in 0..3 {
        let (a, b) = (roots[(i + 1) % 3], roots[(i + 2) % 3]);
        let h = tri.find_half_edge(a, b).expect("outer edge");
        let inner = if tri.face(h) == tri.root_face() { tri.twin(h) } else { h };
        let members = &sizes[component[tri.face(inner) as usize] as usize];
        faces[i] = members.len() as u32;
        let verts: HashSet<VertexId> = members
            .iter()
            .flat_map(|&f| tri.face_vertices(f))
            .filter(|x| !on_path.contains(x))
            .collect();
        interior[i] = verts.len() as u32;
    }
    VertexRegions { depth, faces, interior }
}

/// Checks the three counting identities of one vertex's region data.
pub fn identities_hold(tri: &Triangulation, r: &VertexRegions) -> bool {
    let n = tri.n() as u32;
    let faces_total: u32 = r.faces.iter().sum();
    let interior_total: u32 = r.interior.iter().sum();
    let depth_total: u32 = r.depth.iter().sum();
    let euler = (0..3).all(|i| {
        r.faces[i] + 1 == 2 * r.interior[i] + r.depth[(i + 1) % 3] + r.depth[(i + 2) % 3]
    });
    faces_total == 2 * n - 5 && interior_total + depth_total + 1 == n && euler && r.depth.iter().all(|&p| p >= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::{generate_icosphere, generate_stacked, octahedron, tetrahedron};
    use crate::rng::Rng;
    use crate::shelling::{compute_wood, Policy};

    #[test]
    fn tetrahedron_regions() {
        let w = compute_wood(tetrahedron(), Policy::Minimal).unwrap();
        let expected = VertexRegions { depth: [1; 3], faces: [1; 3], interior: [0; 3] };
        assert_eq!(compute_region_data(&w).get(3), expected);
        assert_eq!(region_data_oracle(&w, 3), expected);
    }

    #[test]
    fn octahedron_matches_oracle() {
        for p in [Policy::Minimal, Policy::Maximal, Policy::balanced()] {
            let t = octahedron();
            for face in 0..t.face_count() as u32 {
                for corner in 0..3 {
                    let w = compute_wood(t.with_root(face, corner), p).unwrap();
                    let fast = compute_region_data(&w);
                    for v in 0..6 {
                        if !w.triangulation().is_outer(v) {
                            let r = region_data_oracle(&w, v);
                            assert_eq!(fast.get(v), r);
                            assert!(identities_hold(w.triangulation(), &r));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn icosphere_identities() {
        let w = compute_wood(generate_icosphere(2).unwrap(), Policy::balanced()).unwrap();
        let r = compute_region_data(&w);
        let tri = w.triangulation();
        let inner: Vec<u32> = (0..tri.n() as u32).filter(|&v| !tri.is_outer(v)).collect();
        assert_eq!(inner.len(), 159);
        for v in inner {
            assert!(identities_hold(tri, &r.get(v)), "vertex {v}");
        }
    }

    #[test]
    fn stacked_matches_oracle() {
        let mut rng = Rng::new(21);
        let t = generate_stacked(200, &mut rng).unwrap().choose_root(&mut rng);
        for p in [Policy::Minimal, Policy::balanced()] {
            let w = compute_wood(t.clone(), p).unwrap();
            let fast = compute_region_data(&w);
            for v in 0..200 {
                if !t.is_outer(v) {
                    assert_eq!(fast.get(v), region_data_oracle(&w, v), "vertex {v}");
                }
            }
        }
    }
}
