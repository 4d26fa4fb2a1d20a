//! Mesh loaders (OFF, OBJ) and the plain adjacency format.
//!
//! Only connectivity is kept; coordinates are parsed for well-formedness and
//! then dropped.
//!
//! Adjacency format:
//!
//! ```text
//! n m
//! i j k        # one ccw face per line, 2n - 4 lines, root face first
//! ```

use std::io::{BufRead, Write};

use super::{Triangulation, VertexId};
use crate::error::{Error, Result};

/// Non-empty, comment-stripped lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T> {
    tok.parse()
        .map_err(|_| Error::Parse { line, msg: format!("expected a number, found {tok:?}") })
}

fn check_index(idx: i64, n: usize) -> Result<VertexId> {
    if idx < 0 || idx as usize >= n {
        return Err(Error::IndexOutOfRange { index: idx.max(0) as usize, n });
    }
    Ok(idx as VertexId)
}

/// Reads an ASCII OFF mesh. The root is the file's face 0 in listed order.
pub fn load_off<R: BufRead>(mut reader: R) -> Result<Triangulation> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    let mut lines = content_lines(&text);

    let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty file".into() })?;
    let mut tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens[0] != "OFF" {
        return Err(Error::Parse { line: hline, msg: format!("expected OFF header, found {:?}", tokens[0]) });
    }
    tokens.remove(0);
    let (cline, counts) = if tokens.is_empty() {
        let (l, c) = lines.next().ok_or(Error::Parse { line: hline, msg: "missing counts line".into() })?;
        (l, c.split_whitespace().collect::<Vec<_>>())
    } else {
        (hline, tokens)
    };
    if counts.len() < 2 {
        return Err(Error::Parse { line: cline, msg: "counts line needs `nv nf ne`".into() });
    }
    let nv: usize = parse_num(counts[0], cline)?;
    let nf: usize = parse_num(counts[1], cline)?;

    for _ in 0..nv {
        let (l, c) = lines.next().ok_or(Error::Parse { line: cline, msg: "missing vertex lines".into() })?;
        let coords: Vec<&str> = c.split_whitespace().collect();
        if coords.len() < 3 {
            return Err(Error::Parse { line: l, msg: "vertex line needs three coordinates".into() });
        }
        for t in &coords[..3] {
            parse_num::<f64>(t, l)?;
        }
    }
    let mut faces = Vec::with_capacity(nf);
    for _ in 0..nf {
        let (l, c) = lines.next().ok_or(Error::Parse { line: cline, msg: "missing face lines".into() })?;
        let toks: Vec<&str> = c.split_whitespace().collect();
        let k: usize = parse_num(toks[0], l)?;
        if k != 3 {
            return Err(Error::NonTriangleFace { line: l });
        }
        if toks.len() < 4 {
            return Err(Error::Parse { line: l, msg: "face line needs three indices".into() });
        }
        let mut f = [0; 3];
        for (slot, t) in f.iter_mut().zip(&toks[1..4]) {
            *slot = check_index(parse_num(t, l)?, nv)?;
        }
        faces.push(f);
    }
    Triangulation::from_faces(nv, faces)
}

/// Reads a Wavefront OBJ mesh, keeping only `v` and `f` records.
pub fn load_obj<R: BufRead>(mut reader: R) -> Result<Triangulation> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    let mut nv = 0usize;
    let mut raw_faces: Vec<(usize, [i64; 3])> = Vec::new();
    for (l, c) in content_lines(&text) {
        let mut toks = c.split_whitespace();
        match toks.next() {
            Some("v") => nv += 1,
            Some("f") => {
                let idx: Vec<&str> = toks.collect();
                if idx.len() != 3 {
                    return Err(Error::NonTriangleFace { line: l });
                }
                let mut f = [0i64; 3];
                for (slot, t) in f.iter_mut().zip(&idx) {
                    let first = t.split('/').next().unwrap_or("");
                    let i: i64 = parse_num(first, l)?;
                    // 1-based; negative indices count back from the latest vertex.
                    *slot = if i < 0 { nv as i64 + i } else { i - 1 };
                }
                raw_faces.push((l, f));
            }
            _ => {}
        }
    }
    let faces = raw_faces
        .into_iter()
        .map(|(_, f)| -> Result<[VertexId; 3]> {
            Ok([check_index(f[0], nv)?, check_index(f[1], nv)?, check_index(f[2], nv)?])
        })
        .collect::<Result<Vec<_>>>()?;
    Triangulation::from_faces(nv, faces)
}

/// Reads the adjacency format. The first face is the root, v0 first.
pub fn load_adjacency<R: BufRead>(mut reader: R) -> Result<Triangulation> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    let mut lines = content_lines(&text);
    let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty file".into() })?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::Parse { line: hl, msg: "header must be `n m`".into() });
    }
    let n: usize = parse_num(toks[0], hl)?;
    let m: usize = parse_num(toks[1], hl)?;
    let mut faces = Vec::new();
    for (l, c) in lines {
        let toks: Vec<&str> = c.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(Error::NonTriangleFace { line: l });
        }
        let mut f = [0; 3];
        for (slot, t) in f.iter_mut().zip(&toks) {
            *slot = check_index(parse_num(t, l)?, n)?;
        }
        faces.push(f);
    }
    if faces.len() * 3 != 2 * m {
        return Err(Error::Invalid(format!("header says m = {m} but {} faces were listed", faces.len())));
    }
    Triangulation::from_faces(n, faces)
}

/// Writes the adjacency format with the root face first (rotated so that v0
/// leads), followed by the remaining faces in id order. Face ids other than
/// the root keep their relative order.
pub fn write_adjacency<W: Write>(tri: &Triangulation, mut out: W) -> Result<()> {
    writeln!(out, "{} {}", tri.n(), tri.m())?;
    let [a, b, c] = tri.root_corners();
    writeln!(out, "{a} {b} {c}")?;
    for (f, [x, y, z]) in tri.faces().iter().enumerate() {
        if f as u32 != tri.root_face() {
            writeln!(out, "{x} {y} {z}")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::{generate_icosphere, icosahedron, tetrahedron};
    use crate::rng::Rng;

    const TETRA_OFF: &str = "OFF\n4 4 6\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n3 0 1 2\n3 1 0 3\n3 2 1 3\n3 0 2 3\n";

    #[test]
    fn off_tetrahedron() {
        let t = load_off(TETRA_OFF.as_bytes()).unwrap();
        assert_eq!((t.n(), t.m()), (4, 6));
        assert_eq!(t.root_corners(), [0, 1, 2]);
    }

    #[test]
    fn off_quad_face_rejected() {
        let text = "OFF\n4 1 0\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n4 0 1 2 3\n";
        assert!(matches!(load_off(text.as_bytes()), Err(Error::NonTriangleFace { .. })));
    }

    #[test]
    fn off_bad_header_and_range() {
        assert!(matches!(load_off("PLY\n".as_bytes()), Err(Error::Parse { .. })));
        let text = TETRA_OFF.replace("3 0 2 3", "3 0 2 9");
        assert!(matches!(load_off(text.as_bytes()), Err(Error::IndexOutOfRange { index: 9, n: 4 })));
    }

    #[test]
    fn off_icosahedron() {
        let ico = icosahedron();
        let mut text = String::from("OFF\n12 20 30\n");
        for _ in 0..12 {
            text.push_str("0.0 0.0 0.0\n");
        }
        for [a, b, c] in ico.faces() {
            text.push_str(&format!("3 {a} {b} {c}\n"));
        }
        let t = load_off(text.as_bytes()).unwrap();
        assert_eq!((t.n(), t.m()), (12, 30));
        assert!((0..12).all(|v| t.degree(v) == 5));
    }

    #[test]
    fn off_non_sphere_rejected() {
        // Octahedron minus one face pair glued badly: Euler mismatch.
        let text = "OFF\n4 2 0\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n3 0 1 2\n3 0 2 1\n";
        assert!(matches!(load_off(text.as_bytes()), Err(Error::Invalid(_))));
    }

    #[test]
    fn obj_tetrahedron() {
        let text = "# tetra\no thing\nv 0 0 0\nv 1 0 0\nv 0 1 0\nvn 0 0 1\nv 0 0 1\nf 1 2 3\nf 2/1 1/1 4/1\nf 3//1 2//1 4//1\nf -4 -2 -1\n";
        let t = load_obj(text.as_bytes()).unwrap();
        assert_eq!((t.n(), t.m()), (4, 6));
        let quad = "v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nf 1 2 3 4\n";
        assert!(matches!(load_obj(quad.as_bytes()), Err(Error::NonTriangleFace { line: 5 })));
    }

    #[test]
    fn adjacency_round_trip_keeps_root() {
        let t = generate_icosphere(2).unwrap().choose_root(&mut Rng::new(11));
        let mut buf = Vec::new();
        write_adjacency(&t, &mut buf).unwrap();
        let back = load_adjacency(buf.as_slice()).unwrap();
        assert_eq!(back.root_corners(), t.root_corners());
        assert_eq!(back.canonical_edges().len(), t.m());
        let mut a = back.edge_list().into_iter().map(|[x, y]| (x.min(y), x.max(y))).collect::<Vec<_>>();
        let mut b = t.edge_list().into_iter().map(|[x, y]| (x.min(y), x.max(y))).collect::<Vec<_>>();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    #[test]
    fn adjacency_header_mismatch() {
        let t = tetrahedron();
        let mut buf = Vec::new();
        write_adjacency(&t, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap().replacen("4 6", "4 7", 1);
        assert!(load_adjacency(text.as_bytes()).is_err());
    }
}
