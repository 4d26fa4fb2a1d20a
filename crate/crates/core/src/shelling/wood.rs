use std::fmt;
use std::io::{BufRead, Write};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::planar_map::{HalfEdgeId, Triangulation, VertexId};

/// Half-edge label: `0..=2` outgoing with that color, `3..=5` incoming with
/// color `label - 3`, [`NO_COLOR`] for the outer edges.
pub(crate) const NO_COLOR: u8 = 6;

#[inline]
pub(crate) fn out_label(c: u8) -> u8 {
    c
}

#[inline]
pub(crate) fn in_label(c: u8) -> u8 {
    c + 3
}

/// Coloring and orientation of the inner edges of a rooted triangulation.
///
/// Each undirected edge is labelled on both of its half-edges: the half-edge
/// leaving the tail carries "outgoing color c", its twin "incoming color c".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchnyderWood {
    tri: Arc<Triangulation>,
    labels: Vec<u8>,
}

/// First broken Schnyder condition found by [`SchnyderWood::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// The two half-edges of an edge disagree.
    Inconsistent { edge: [VertexId; 2] },
    OuterEdgeColored { edge: [VertexId; 2] },
    InnerEdgeUncolored { edge: [VertexId; 2] },
    /// Inner vertex without exactly one outgoing edge of `color`.
    OutDegree { vertex: VertexId, color: u8, count: u32 },
    /// Incoming edges not in the sector between the other two outgoing colors,
    /// or outgoing colors not in 0, 1, 2 rotation order.
    LocalRule { vertex: VertexId },
    /// An inner edge at outer vertex v_i that is not colored i into v_i.
    RootEdge { edge: [VertexId; 2] },
    /// Following the color-`color` edges from `vertex` never reaches v_color.
    NotATree { color: u8, vertex: VertexId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Inconsistent { edge } => write!(f, "half-edges of {edge:?} disagree"),
            Violation::OuterEdgeColored { edge } => write!(f, "outer edge {edge:?} is colored"),
            Violation::InnerEdgeUncolored { edge } => write!(f, "inner edge {edge:?} is uncolored"),
            Violation::OutDegree { vertex, color, count } => {
                write!(f, "vertex {vertex} has {count} outgoing edges of color {color}")
            }
            Violation::LocalRule { vertex } => write!(f, "local rule broken at vertex {vertex}"),
            Violation::RootEdge { edge } => write!(f, "edge {edge:?} at an outer vertex is misdirected"),
            Violation::NotATree { color, vertex } => {
                write!(f, "color {color} path from vertex {vertex} does not reach its root")
            }
        }
    }
}

impl SchnyderWood {
    /// Wraps raw half-edge labels. No validation.
    pub(crate) fn from_labels(tri: Arc<Triangulation>, labels: Vec<u8>) -> Self {
        debug_assert_eq!(labels.len(), tri.half_edge_count());
        SchnyderWood { tri, labels }
    }

    pub fn triangulation(&self) -> &Triangulation {
        &self.tri
    }

    pub fn triangulation_arc(&self) -> &Arc<Triangulation> {
        &self.tri
    }

    pub fn root_corners(&self) -> [VertexId; 3] {
        self.tri.root_corners()
    }

    /// Color of the edge of `h`, or `None` for an outer edge.
    #[inline]
    pub fn color(&self, h: HalfEdgeId) -> Option<u8> {
        match self.labels[h as usize] {
            NO_COLOR => None,
            l => Some(l % 3),
        }
    }

    /// True when the edge of `h` is directed away from `origin(h)`.
    #[inline]
    pub fn is_outgoing(&self, h: HalfEdgeId) -> bool {
        self.labels[h as usize] < 3
    }

    #[inline]
    pub fn is_incoming(&self, h: HalfEdgeId) -> bool {
        (3..6).contains(&self.labels[h as usize])
    }

    /// Directs the edge of `h` away from `origin(h)` with `color`.
    pub(crate) fn set_out(&mut self, h: HalfEdgeId, color: u8) {
        let t = self.tri.twin(h);
        self.labels[h as usize] = out_label(color);
        self.labels[t as usize] = in_label(color);
    }

    /// Copy with the edge `tail -> head` forced to `color`, directed from
    /// `tail`. Intended for building counterexamples; the result is not
    /// validated.
    pub fn with_edge(&self, tail: VertexId, head: VertexId, color: u8) -> Option<SchnyderWood> {
        assert!(color < 3);
        let h = self.tri.find_half_edge(tail, head)?;
        let mut w = self.clone();
        w.set_out(h, color);
        Some(w)
    }

    /// Outgoing half-edge of color `c` at inner vertex `v`.
    pub fn out_edge(&self, v: VertexId, c: u8) -> Option<HalfEdgeId> {
        self.tri.outgoing(v).find(|&h| self.labels[h as usize] == out_label(c))
    }

    /// Parent of every vertex in tree `T_c` (`NIL` for vertices outside it).
    pub fn parents(&self, c: u8) -> Vec<VertexId> {
        let mut parent = vec![crate::planar_map::NIL; self.tri.n()];
        for h in 0..self.labels.len() as u32 {
            if self.labels[h as usize] == out_label(c) {
                parent[self.tri.origin(h) as usize] = self.tri.dest(h);
            }
        }
        parent
    }

    /// Incoming edge counts per color at `v`.
    pub fn indegrees(&self, v: VertexId) -> [u32; 3] {
        let mut d = [0; 3];
        for h in self.tri.outgoing(v) {
            let l = self.labels[h as usize];
            if (3..6).contains(&l) {
                d[(l - 3) as usize] += 1;
            }
        }
        d
    }

    /// Indegree triples for all vertices in one pass over the half-edges.
    pub fn all_indegrees(&self) -> Vec<[u32; 3]> {
        let mut d = vec![[0u32; 3]; self.tri.n()];
        for (h, &l) in self.labels.iter().enumerate() {
            if (3..6).contains(&l) {
                d[self.tri.origin(h as u32) as usize][(l - 3) as usize] += 1;
            }
        }
        d
    }

    /// Defect of inner vertex `v`: spread of its per-color indegrees, minus
    /// one when its degree is not a multiple of three.
    pub fn defect(&self, v: VertexId) -> Result<u32> {
        if self.tri.is_outer(v) {
            return Err(Error::OuterVertex(v));
        }
        Ok(defect_of(self.indegrees(v), self.tri.degree(v)))
    }

    /// Fraction of balanced inner vertices and mean defect over inner vertices.
    pub fn balance_stats(&self) -> BalanceStats {
        let indeg = self.all_indegrees();
        let mut zero = 0usize;
        let mut total = 0u64;
        let mut count = 0usize;
        for v in 0..self.tri.n() as u32 {
            if self.tri.is_outer(v) {
                continue;
            }
            let d = defect_of(indeg[v as usize], self.tri.degree(v));
            zero += (d == 0) as usize;
            total += d as u64;
            count += 1;
        }
        BalanceStats {
            delta0: zero as f64 / count as f64,
            delta_avg: total as f64 / count as f64,
            balanced: zero,
            inner: count,
        }
    }

    /// Checks every Schnyder condition and reports the first violation.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let tri = &*self.tri;
        let pair = |h: HalfEdgeId| [tri.origin(h), tri.dest(h)];

        for h in tri.edges() {
            let (a, b) = (self.labels[h as usize], self.labels[tri.twin(h) as usize]);
            let consistent = match a {
                NO_COLOR => b == NO_COLOR,
                0..=2 => b == a + 3,
                3..=5 => b == a - 3,
                _ => false,
            };
            if !consistent {
                return Err(Violation::Inconsistent { edge: pair(h) });
            }
            match (tri.is_outer_edge(h), a == NO_COLOR) {
                (true, false) => return Err(Violation::OuterEdgeColored { edge: pair(h) }),
                (false, true) => return Err(Violation::InnerEdgeUncolored { edge: pair(h) }),
                _ => {}
            }
        }

        let roots = tri.root_corners();
        for v in 0..tri.n() as u32 {
            if tri.is_outer(v) {
                continue;
            }
            let mut out = [0u32; 3];
            for h in tri.outgoing(v) {
                if self.is_outgoing(h) {
                    out[self.labels[h as usize] as usize] += 1;
                }
            }
            if let Some(c) = (0..3).find(|&c| out[c] != 1) {
                return Err(Violation::OutDegree { vertex: v, color: c as u8, count: out[c] });
            }
        }

        for v in 0..tri.n() as u32 {
            if !tri.is_outer(v) && !self.local_rule_holds(v) {
                return Err(Violation::LocalRule { vertex: v });
            }
        }

        for (i, &r) in roots.iter().enumerate() {
            for h in tri.outgoing(r) {
                if !tri.is_outer_edge(h) && self.labels[h as usize] != in_label(i as u8) {
                    return Err(Violation::RootEdge { edge: pair(h) });
                }
            }
        }

        for c in 0..3u8 {
            let parent = self.parents(c);
            let target = roots[c as usize];
            // 0 = unseen, 1 = on current walk, 2 = reaches the root.
            let mut state = vec![0u8; tri.n()];
            state[target as usize] = 2;
            let mut walk = Vec::new();
            for start in 0..tri.n() as u32 {
                if tri.is_outer(start) || state[start as usize] != 0 {
                    continue;
                }
                let mut v = start;
                while state[v as usize] == 0 {
                    state[v as usize] = 1;
                    walk.push(v);
                    v = parent[v as usize];
                    if v == crate::planar_map::NIL || (tri.is_outer(v) && v != target) {
                        return Err(Violation::NotATree { color: c, vertex: start });
                    }
                }
                if state[v as usize] == 1 {
                    return Err(Violation::NotATree { color: c, vertex: start });
                }
                for w in walk.drain(..) {
                    state[w as usize] = 2;
                }
            }
        }
        Ok(())
    }

    /// Around inner `v`, in plane-ccw order starting from the outgoing color-0
    /// edge: out 0, incoming 2s, out 1, incoming 0s, out 2, incoming 1s.
    fn local_rule_holds(&self, v: VertexId) -> bool {
        let Some(start) = self.out_edge(v, 0) else {
            return false;
        };
        let mut sector = 0u8;
        let mut h = self.tri.rot_cw(start);
        while h != start {
            let l = self.labels[h as usize];
            match l {
                0..=2 => {
                    if l != (sector + 1) % 3 {
                        return false;
                    }
                    sector = l;
                }
                3..=5 => {
                    if l - 3 != (sector + 2) % 3 {
                        return false;
                    }
                }
                _ => return false,
            }
            h = self.tri.rot_cw(h);
        }
        sector == 2
    }

    /// Writes the wood as `wood n <n> root <v0> <v1> <v2>` followed by one
    /// `edge u v color dir` line per inner edge, where `dir` is `+` when the
    /// edge is directed from `u` to `v` and `-` otherwise.
    pub fn write_to<W: Write>(&self, mut out: W) -> Result<()> {
        let [a, b, c] = self.root_corners();
        writeln!(out, "wood n {} root {a} {b} {c}", self.tri.n())?;
        for h in self.tri.edges() {
            if let Some(col) = self.color(h) {
                let dir = if self.is_outgoing(h) { '+' } else { '-' };
                writeln!(out, "edge {} {} {col} {dir}", self.tri.origin(h), self.tri.dest(h))?;
            }
        }
        Ok(())
    }

    /// Reads a wood written by [`write_to`](Self::write_to) for `tri`,
    /// re-rooting `tri` at the recorded corners. The result is not validated.
    pub fn read_from<R: BufRead>(tri: &Triangulation, reader: R) -> Result<SchnyderWood> {
        let mut lines = reader.lines().enumerate();
        let (_, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty wood file".into() })?;
        let header = header?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        if toks.len() != 7 || toks[0] != "wood" || toks[1] != "n" || toks[3] != "root" {
            return Err(Error::Parse { line: 1, msg: "expected `wood n <n> root <v0> <v1> <v2>`".into() });
        }
        let num = |t: &str, line: usize| -> Result<u32> {
            t.parse().map_err(|_| Error::Parse { line, msg: format!("bad number {t:?}") })
        };
        if num(toks[2], 1)? as usize != tri.n() {
            return Err(Error::WoodMismatch(format!("wood has n = {}, graph has {}", toks[2], tri.n())));
        }
        let corners = [num(toks[4], 1)?, num(toks[5], 1)?, num(toks[6], 1)?];
        let rooted = tri
            .with_root_corners(corners)
            .ok_or_else(|| Error::WoodMismatch(format!("root {corners:?} is not a face")))?;
        let mut wood = SchnyderWood::from_labels(Arc::new(rooted), vec![NO_COLOR; tri.half_edge_count()]);
        for (i, line) in lines {
            let line = line?;
            let l = i + 1;
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            if toks.len() != 5 || toks[0] != "edge" {
                return Err(Error::Parse { line: l, msg: "expected `edge u v color dir`".into() });
            }
            let (u, v, c) = (num(toks[1], l)?, num(toks[2], l)?, num(toks[3], l)?);
            if c > 2 {
                return Err(Error::Parse { line: l, msg: format!("color {c} out of range") });
            }
            let (tail, head) = match toks[4] {
                "+" => (u, v),
                "-" => (v, u),
                d => return Err(Error::Parse { line: l, msg: format!("bad direction {d:?}") }),
            };
            if tail as usize >= tri.n() {
                return Err(Error::IndexOutOfRange { index: tail as usize, n: tri.n() });
            }
            let h = wood
                .tri
                .find_half_edge(tail, head)
                .ok_or_else(|| Error::WoodMismatch(format!("no edge {tail} -> {head}")))?;
            wood.set_out(h, c as u8);
        }
        Ok(wood)
    }
}

/// Defect from indegrees and degree.
pub fn defect_of(indeg: [u32; 3], degree: usize) -> u32 {
    let max = *indeg.iter().max().unwrap();
    let min = *indeg.iter().min().unwrap();
    let spread = max - min;
    if degree % 3 == 0 {
        spread
    } else {
        spread.saturating_sub(1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BalanceStats {
    /// Fraction of inner vertices with defect 0.
    pub delta0: f64,
    /// Mean defect over inner vertices.
    pub delta_avg: f64,
    pub balanced: usize,
    pub inner: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defect_formula() {
        assert_eq!(defect_of([1, 1, 1], 6), 0);
        assert_eq!(defect_of([2, 1, 1], 7), 0);
        assert_eq!(defect_of([3, 0, 0], 6), 3);
        assert_eq!(defect_of([0, 0, 0], 3), 0);
        assert_eq!(defect_of([1, 0, 0], 4), 0);
        assert_eq!(defect_of([3, 1, 0], 7), 2);
    }
}
