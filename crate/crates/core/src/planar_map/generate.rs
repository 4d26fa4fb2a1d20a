use std::collections::HashMap;

use super::{Triangulation, VertexId, NIL};
use crate::error::{Error, Result};
use crate::rng::Rng;

const INDEX_LIMIT: u64 = (u32::MAX / 8) as u64;

/// Orients every face so its normal points away from the origin. Only valid
/// for vertices in convex position around the origin.
fn orient_outward(coords: &[[f64; 3]], faces: &mut [[VertexId; 3]]) {
    for f in faces.iter_mut() {
        let [a, b, c] = f.map(|v| coords[v as usize]);
        let u = [b[0] - a[0], b[1] - a[1], b[2] - a[2]];
        let w = [c[0] - a[0], c[1] - a[1], c[2] - a[2]];
        let normal = [u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]];
        let centroid = [a[0] + b[0] + c[0], a[1] + b[1] + c[1], a[2] + b[2] + c[2]];
        let dot = normal[0] * centroid[0] + normal[1] * centroid[1] + normal[2] * centroid[2];
        if dot < 0.0 {
            f.swap(1, 2);
        }
    }
}

pub fn tetrahedron() -> Triangulation {
    Triangulation::from_faces(4, vec![[0, 1, 2], [1, 0, 3], [2, 1, 3], [0, 2, 3]]).expect("tetrahedron")
}

pub fn octahedron() -> Triangulation {
    // 0/1 = +x/-x, 2/3 = +y/-y, 4/5 = +z/-z
    let coords = [
        [1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, -1.0, 0.0],
        [0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0],
    ];
    let mut faces = Vec::new();
    for x in [0, 1] {
        for y in [2, 3] {
            for z in [4, 5] {
                faces.push([x, y, z]);
            }
        }
    }
    orient_outward(&coords, &mut faces);
    Triangulation::from_faces(6, faces).expect("octahedron")
}

/// Regular icosahedron; faces are found as the mutually adjacent triples of
/// the standard (0, ±1, ±φ) coordinates.
pub fn icosahedron() -> Triangulation {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut coords = Vec::with_capacity(12);
    for s1 in [-1.0, 1.0] {
        for s2 in [-1.0, 1.0] {
            coords.push([0.0, s1, s2 * phi]);
            coords.push([s1, s2 * phi, 0.0]);
            coords.push([s2 * phi, 0.0, s1]);
        }
    }
    let adjacent = |a: usize, b: usize| {
        let d: f64 = (0..3).map(|k| (coords[a][k] - coords[b][k]).powi(2)).sum();
        (d - 4.0).abs() < 1e-9
    };
    let mut faces = Vec::with_capacity(20);
    for a in 0..12 {
        for b in a + 1..12 {
            for c in b + 1..12 {
                if adjacent(a, b) && adjacent(b, c) && adjacent(a, c) {
                    faces.push([a as u32, b as u32, c as u32]);
                }
            }
        }
    }
    orient_outward(&coords, &mut faces);
    Triangulation::from_faces(12, faces).expect("icosahedron")
}

/// Random stacked triangulation: starting from a tetrahedron, each new vertex
/// is inserted into a uniformly random face, splitting it into three.
pub fn generate_stacked(n: usize, rng: &mut Rng) -> Result<Triangulation> {
    if n < 4 {
        return Err(Error::Precondition { what: "stacked vertex count", min: 4, got: n });
    }
    if n as u64 > INDEX_LIMIT {
        return Err(Error::TooLarge(format!("{n} vertices")));
    }
    let base = tetrahedron();
    let fcount = 2 * n - 4;
    let mut faces: Vec<[VertexId; 3]> = Vec::with_capacity(fcount);
    faces.extend_from_slice(base.faces());
    let mut twin: Vec<u32> = Vec::with_capacity(3 * fcount);
    twin.extend((0..12).map(|h| base.twin(h)));

    for x in 4..n as u32 {
        let f = rng.index(faces.len());
        let [a, b, c] = faces[f];
        let f1 = faces.len();
        let f2 = f1 + 1;
        let (t_bc, t_ca) = (twin[3 * f + 1], twin[3 * f + 2]);
        faces[f] = [a, b, x];
        faces.push([b, c, x]);
        faces.push([c, a, x]);
        twin.extend_from_slice(&[NIL; 6]);
        // b->c and c->a move to the new faces.
        twin[3 * f1] = t_bc;
        twin[t_bc as usize] = (3 * f1) as u32;
        twin[3 * f2] = t_ca;
        twin[t_ca as usize] = (3 * f2) as u32;
        let link = |twin: &mut Vec<u32>, p: usize, q: usize| {
            twin[p] = q as u32;
            twin[q] = p as u32;
        };
        link(&mut twin, 3 * f + 1, 3 * f1 + 2); // b->x / x->b
        link(&mut twin, 3 * f1 + 1, 3 * f2 + 2); // c->x / x->c
        link(&mut twin, 3 * f2 + 1, 3 * f + 2); // a->x / x->a
    }
    let (tri, _) = Triangulation::from_parts(n, faces, twin).relabeled_bfs();
    debug_assert!(tri.validate().is_ok());
    Ok(tri)
}

/// Combinatorial icosphere: `subdivisions` rounds of 1-to-4 face splitting
/// starting from the icosahedron. Has `10 * 4^s + 2` vertices.
pub fn generate_icosphere(subdivisions: u32) -> Result<Triangulation> {
    let n_final = 4u64
        .checked_pow(subdivisions)
        .and_then(|p| p.checked_mul(10))
        .map(|v| v + 2)
        .filter(|&v| v <= INDEX_LIMIT)
        .ok_or_else(|| Error::TooLarge(format!("icosphere with {subdivisions} subdivisions")))?;
    let ico = icosahedron();
    let mut faces = ico.faces().to_vec();
    let mut n = 12u32;
    for _ in 0..subdivisions {
        let mut mid: HashMap<(u32, u32), u32> = HashMap::with_capacity(faces.len() * 3 / 2);
        let mut midpoint = |a: u32, b: u32| {
            let key = (a.min(b), a.max(b));
            *mid.entry(key).or_insert_with(|| {
                n += 1;
                n - 1
            })
        };
        let mut next = Vec::with_capacity(faces.len() * 4);
        for &[a, b, c] in &faces {
            let (ab, bc, ca) = (midpoint(a, b), midpoint(b, c), midpoint(c, a));
            next.push([a, ab, ca]);
            next.push([b, bc, ab]);
            next.push([c, ca, bc]);
            next.push([ab, bc, ca]);
        }
        faces = next;
    }
    debug_assert_eq!(n as u64, n_final);
    Triangulation::from_faces(n as usize, faces)
}

/// Latitude/longitude sphere: `parallels` rings of `meridians` vertices, two
/// poles, quads split along one diagonal and fans at the poles.
/// Has `meridians * parallels + 2` vertices.
pub fn generate_globe(meridians: usize, parallels: usize) -> Result<Triangulation> {
    if meridians < 3 {
        return Err(Error::Precondition { what: "globe meridians", min: 3, got: meridians });
    }
    if parallels < 1 {
        return Err(Error::Precondition { what: "globe parallels", min: 1, got: parallels });
    }
    let n = (meridians as u64)
        .checked_mul(parallels as u64)
        .map(|v| v + 2)
        .filter(|&v| v <= INDEX_LIMIT)
        .ok_or_else(|| Error::TooLarge(format!("globe {meridians}x{parallels}")))? as usize;
    let (a, b) = (meridians, parallels);
    let north = 0u32;
    let south = (n - 1) as u32;
    let ring = |r: usize, j: usize| (1 + r * a + j % a) as u32;

    let mut coords = Vec::with_capacity(n);
    coords.push([0.0, 0.0, 1.0]);
    for r in 0..b {
        let theta = std::f64::consts::PI * (r + 1) as f64 / (b + 1) as f64;
        for j in 0..a {
            let phi = 2.0 * std::f64::consts::PI * j as f64 / a as f64;
            coords.push([theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()]);
        }
    }
    coords.push([0.0, 0.0, -1.0]);

    let mut faces = Vec::with_capacity(2 * n - 4);
    for j in 0..a {
        faces.push([north, ring(0, j), ring(0, j + 1)]);
        faces.push([south, ring(b - 1, j + 1), ring(b - 1, j)]);
    }
    for r in 0..b - 1 {
        for j in 0..a {
            faces.push([ring(r, j), ring(r + 1, j), ring(r + 1, j + 1)]);
            faces.push([ring(r, j), ring(r + 1, j + 1), ring(r, j + 1)]);
        }
    }
    orient_outward(&coords, &mut faces);
    Triangulation::from_faces(n, faces)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(t: &Triangulation) -> Vec<usize> {
        let mut d: Vec<usize> = (0..t.n() as u32).map(|v| t.degree(v)).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn platonic_solids() {
        let o = octahedron();
        assert_eq!((o.n(), o.m()), (6, 12));
        assert!(degrees(&o).iter().all(|&d| d == 4));
        let i = icosahedron();
        assert_eq!((i.n(), i.m(), i.face_count()), (12, 30, 20));
        assert!(degrees(&i).iter().all(|&d| d == 5));
    }

    #[test]
    fn stacked_small_cases() {
        let t = generate_stacked(4, &mut Rng::new(3)).unwrap();
        assert_eq!(t.canonical_edges(), tetrahedron().canonical_edges());
        for seed in 0..10 {
            let t = generate_stacked(5, &mut Rng::new(seed)).unwrap();
            t.validate().unwrap();
            assert_eq!(degrees(&t), vec![3, 3, 4, 4, 4]);
        }
        assert!(generate_stacked(3, &mut Rng::new(0)).is_err());
    }

    #[test]
    fn stacked_is_valid_and_deterministic() {
        let a = generate_stacked(1000, &mut Rng::new(7)).unwrap();
        let b = generate_stacked(1000, &mut Rng::new(7)).unwrap();
        a.validate().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.m(), 3 * 1000 - 6);
    }

    #[test]
    fn icosphere_degrees() {
        let t = generate_icosphere(0).unwrap();
        assert_eq!(t.n(), 12);
        assert_eq!(t.degree_stats().d6, 0.0);
        let t = generate_icosphere(2).unwrap();
        assert_eq!(t.n(), 162);
        let d = degrees(&t);
        assert_eq!(d.iter().filter(|&&x| x == 5).count(), 12);
        assert_eq!(d.iter().filter(|&&x| x == 6).count(), 150);
        assert_eq!(t.degree_stats().d6, 150.0 / 162.0);
    }

    #[test]
    fn icosphere_level_five() {
        let t = generate_icosphere(5).unwrap();
        assert_eq!(t.n(), 10242);
        let d6 = t.degree_stats().d6;
        assert_eq!(d6, (10242.0 - 12.0) / 10242.0);
        assert!((d6 - 0.9988).abs() < 1e-4);
    }

    #[test]
    fn icosphere_overflow() {
        assert!(matches!(generate_icosphere(20), Err(Error::TooLarge(_))));
    }

    #[test]
    fn globe_shapes() {
        let t = generate_globe(3, 1).unwrap();
        assert_eq!(t.n(), 5);
        // Double pyramid over a triangle: poles of degree 3, equator degree 4.
        assert_eq!(degrees(&t), vec![3, 3, 4, 4, 4]);
        let poles = [0u32, 4];
        for p in poles {
            assert_eq!(t.degree(p), 3);
        }

        let t = generate_globe(4, 2).unwrap();
        assert_eq!(t.n(), 10);
        // Both rings touch a pole: two ring neighbours, the pole, two across.
        for v in 1..9 {
            assert_eq!(t.degree(v), 5);
        }
        let t = generate_globe(4, 3).unwrap();
        for v in 5..9 {
            assert_eq!(t.degree(v), 6);
        }
        assert!(generate_globe(2, 4).is_err());
        assert!(generate_globe(5, 0).is_err());
    }
}
