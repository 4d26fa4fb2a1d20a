//! Schnyder woods by incremental vertex conquest.
//!
//! The pending region starts as everything but the root face. Its boundary
//! `B` is kept as a doubly linked path from v0 to v1 (closed by the outer edge
//! v1–v0). For a boundary vertex `v`, the right neighbor `v_r` is its
//! predecessor towards v0 and the left neighbor `v_l` its successor towards v1.
//! With faces stored ccw, the pending region lies on the storage-cw side of
//! `v -> v_r`, so the neighbors discovered by a conquest are met by rotating
//! from `v_r` to `v_l` with [`Triangulation::rot_cw`].
//!
//! Conquering `v` colors `v -> v_r` with 0, `v -> v_l` with 1 and every
//! discovered edge `w -> v` with 2. For v2 only the discovered edges are
//! colored, since its edges to v0 and v1 are outer.

mod flip;
mod wood;

pub use flip::{FaceOrientation, OrientedFace};
pub use wood::{defect_of, BalanceStats, SchnyderWood, Violation};

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::planar_map::{Triangulation, VertexId, NIL};
use wood::NO_COLOR;

/// Default number of priority queues for the balanced policy.
pub const DEFAULT_QUEUES: usize = 5;

/// Rule used to pick the next free boundary vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "policy", rename_all = "lowercase")]
pub enum Policy {
    /// Free vertex closest to v0 along the boundary.
    Minimal,
    /// Free vertex closest to v1 along the boundary.
    Maximal,
    /// Retarded conquest: highest priority first, oldest first among equals.
    Balanced { k: usize },
}

impl Policy {
    pub fn balanced() -> Self {
        Policy::Balanced { k: DEFAULT_QUEUES }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Policy::Minimal => "minimal",
            Policy::Maximal => "maximal",
            Policy::Balanced { .. } => "balanced",
        }
    }
}

impl Default for Policy {
    fn default() -> Self {
        Policy::balanced()
    }
}

impl fmt::Display for Policy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Policy::Balanced { k } => write!(f, "balanced(k={k})"),
            p => f.write_str(p.name()),
        }
    }
}

impl FromStr for Policy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "minimal" => Ok(Policy::Minimal),
            "maximal" => Ok(Policy::Maximal),
            "balanced" => Ok(Policy::balanced()),
            other => Err(format!("unknown policy {other:?} (expected minimal, maximal or balanced)")),
        }
    }
}

/// Wood plus the conquest sequence that produced it.
#[derive(Clone, Debug)]
pub struct Shelling {
    pub wood: SchnyderWood,
    /// Conquered vertices in order; v2 first.
    pub order: Vec<VertexId>,
    /// Total pushes onto the balanced-policy queues (0 for other policies).
    pub queue_pushes: usize,
}

/// Computes a Schnyder wood of `tri` (rooted at its root corners).
pub fn compute_wood(tri: impl Into<Arc<Triangulation>>, policy: Policy) -> Result<SchnyderWood> {
    Ok(shell(tri, policy)?.wood)
}

/// Like [`compute_wood`] but also returns the conquest order.
pub fn shell(tri: impl Into<Arc<Triangulation>>, policy: Policy) -> Result<Shelling> {
    let tri: Arc<Triangulation> = tri.into();
    if let Policy::Balanced { k } = policy {
        if k == 0 {
            return Err(Error::Precondition { what: "balanced queue count k", min: 1, got: 0 });
        }
    }
    let mut state = State::new(&tri);
    let mut order = Vec::with_capacity(tri.n() - 2);
    let [v0, v1, v2] = tri.root_corners();

    match policy {
        Policy::Minimal => {
            let mut cursor = v2;
            while !state.done() {
                let mut x = cursor;
                while !state.is_free(x) {
                    x = state.next[x as usize];
                    if x == v1 {
                        return Err(state.stuck());
                    }
                }
                let (vr, _) = state.conquer(x)?;
                order.push(x);
                cursor = if vr == v0 { state.next[v0 as usize] } else { vr };
            }
        }
        Policy::Maximal => {
            let mut cursor = v2;
            while !state.done() {
                let mut x = cursor;
                while !state.is_free(x) {
                    x = state.prev[x as usize];
                    if x == v0 {
                        return Err(state.stuck());
                    }
                }
                let (_, vl) = state.conquer(x)?;
                order.push(x);
                cursor = if vl == v1 { state.prev[v1 as usize] } else { vl };
            }
        }
        Policy::Balanced { k } => {
            let mut queues = PriorityQueues::new(k, tri.n());
            queues.push(v2, 0);
            while !state.done() {
                let v = loop {
                    let Some(u) = queues.pop() else {
                        return Err(state.stuck());
                    };
                    if state.is_free(u) {
                        break u;
                    }
                };
                let (vr, vl) = state.conquer(v)?;
                order.push(v);
                for &w in &state.discovered {
                    queues.push(w, 0);
                }
                for u in [vl, vr] {
                    if u != v0 && u != v1 {
                        queues.bump(u);
                    }
                }
            }
            let wood = state.into_wood();
            return Ok(Shelling { wood, order, queue_pushes: queues.pushes });
        }
    }
    Ok(Shelling { wood: state.into_wood(), order, queue_pushes: 0 })
}

const UNDISCOVERED: u8 = 0;
const ON_BOUNDARY: u8 = 1;
const CONQUERED: u8 = 2;

struct State {
    tri: Arc<Triangulation>,
    roots: [VertexId; 3],
    status: Vec<u8>,
    /// Boundary successor towards v1.
    next: Vec<VertexId>,
    /// Boundary predecessor towards v0.
    prev: Vec<VertexId>,
    /// Number of neighbors currently on the boundary.
    boundary_neighbors: Vec<u32>,
    labels: Vec<u8>,
    /// Vertices discovered by the last conquest, from the v_r side to the v_l side.
    discovered: Vec<VertexId>,
}

impl State {
    fn new(tri: &Arc<Triangulation>) -> Self {
        let n = tri.n();
        let roots = tri.root_corners();
        let [v0, v1, v2] = roots;
        let mut s = State {
            tri: tri.clone(),
            roots,
            status: vec![UNDISCOVERED; n],
            next: vec![NIL; n],
            prev: vec![NIL; n],
            boundary_neighbors: vec![0; n],
            labels: vec![NO_COLOR; tri.half_edge_count()],
            discovered: Vec::new(),
        };
        for v in [v0, v2, v1] {
            s.join(v);
        }
        s.next[v0 as usize] = v2;
        s.prev[v2 as usize] = v0;
        s.next[v2 as usize] = v1;
        s.prev[v1 as usize] = v2;
        s
    }

    fn join(&mut self, v: VertexId) {
        self.status[v as usize] = ON_BOUNDARY;
        for w in self.tri.neighbors(v) {
            self.boundary_neighbors[w as usize] += 1;
        }
    }

    fn done(&self) -> bool {
        self.next[self.roots[0] as usize] == self.roots[1]
    }

    /// On the boundary, not v0/v1, and no chord: its only boundary neighbors
    /// are its two boundary neighbors.
    #[inline]
    fn is_free(&self, v: VertexId) -> bool {
        self.status[v as usize] == ON_BOUNDARY
            && v != self.roots[0]
            && v != self.roots[1]
            && self.boundary_neighbors[v as usize] == 2
    }

    fn stuck(&self) -> Error {
        Error::Shelling(format!(
            "no free boundary vertex left while {} vertices remain unconquered",
            self.status.iter().filter(|&&s| s != CONQUERED).count()
        ))
    }

    /// Conquers free vertex `v`; returns `(v_r, v_l)`.
    fn conquer(&mut self, v: VertexId) -> Result<(VertexId, VertexId)> {
        let tri = self.tri.clone();
        let vr = self.prev[v as usize];
        let vl = self.next[v as usize];
        let hr = tri
            .find_half_edge(v, vr)
            .ok_or_else(|| Error::Shelling(format!("boundary neighbors {v} and {vr} are not adjacent")))?;
        let is_v2 = v == self.roots[2];
        if !is_v2 {
            self.set_out(hr, 0);
        }
        self.discovered.clear();
        let mut h = tri.rot_cw(hr);
        loop {
            let w = tri.dest(h);
            if w == vl {
                break;
            }
            if self.status[w as usize] != UNDISCOVERED {
                return Err(Error::Shelling(format!("conquest of {v} met vertex {w} twice")));
            }
            self.set_out(tri.twin(h), 2);
            self.discovered.push(w);
            h = tri.rot_cw(h);
            if h == hr {
                return Err(Error::Shelling(format!("left neighbor {vl} not found around {v}")));
            }
        }
        if !is_v2 {
            self.set_out(h, 1);
        }

        self.status[v as usize] = CONQUERED;
        for w in tri.neighbors(v) {
            self.boundary_neighbors[w as usize] -= 1;
        }
        let mut left = vr;
        for i in 0..self.discovered.len() {
            let w = self.discovered[i];
            self.join(w);
            self.next[left as usize] = w;
            self.prev[w as usize] = left;
            left = w;
        }
        self.next[left as usize] = vl;
        self.prev[vl as usize] = left;
        Ok((vr, vl))
    }

    fn set_out(&mut self, h: u32, color: u8) {
        let t = self.tri.twin(h);
        self.labels[h as usize] = wood::out_label(color);
        self.labels[t as usize] = wood::in_label(color);
    }

    fn into_wood(self) -> SchnyderWood {
        SchnyderWood::from_labels(self.tri, self.labels)
    }
}

/// `k` FIFO queues indexed by truncated priority. Entries are never removed
/// eagerly; stale ones are skipped when popped.
struct PriorityQueues {
    queues: Vec<VecDeque<VertexId>>,
    priority: Vec<u8>,
    pushes: usize,
}

impl PriorityQueues {
    fn new(k: usize, n: usize) -> Self {
        PriorityQueues {
            queues: (0..k).map(|_| VecDeque::new()).collect(),
            priority: vec![0; n],
            pushes: 0,
        }
    }

    fn push(&mut self, v: VertexId, level: usize) {
        self.queues[level].push_back(v);
        self.pushes += 1;
    }

    /// One more colored edge into `v`: raise its priority (capped at k-1) and
    /// append it to the matching queue.
    fn bump(&mut self, v: VertexId) {
        let cap = (self.queues.len() - 1) as u8;
        let p = &mut self.priority[v as usize];
        if *p < cap {
            *p += 1;
        }
        let level = *p as usize;
        self.push(v, level);
    }

    /// Front of the highest nonempty queue.
    fn pop(&mut self) -> Option<VertexId> {
        self.queues.iter_mut().rev().find_map(|q| q.pop_front())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::{generate_icosphere, generate_stacked, octahedron, tetrahedron};
    use crate::rng::Rng;

    const POLICIES: [Policy; 3] = [Policy::Minimal, Policy::Maximal, Policy::Balanced { k: 5 }];

    #[test]
    fn tetrahedron_wood_is_forced() {
        let t = tetrahedron();
        let [v0, v1, v2] = t.root_corners();
        let u = 3;
        for p in POLICIES {
            let s = shell(t.clone(), p).unwrap();
            assert_eq!(s.order, vec![v2, u]);
            let w = s.wood;
            assert_eq!(w.validate(), Ok(()));
            for (c, target) in [v0, v1, v2].into_iter().enumerate() {
                let h = w.out_edge(u, c as u8).unwrap();
                assert_eq!(t.dest(h), target);
            }
        }
    }

    #[test]
    fn every_policy_validates_on_small_graphs() {
        let mut rng = Rng::new(1);
        for n in [4, 5, 6, 10, 50, 300] {
            let t = generate_stacked(n, &mut rng).unwrap().choose_root(&mut rng);
            for p in POLICIES {
                let s = shell(t.clone(), p).unwrap();
                assert_eq!(s.order.len(), n - 2);
                assert_eq!(s.wood.validate(), Ok(()), "n={n} {p}");
            }
        }
        let o = octahedron();
        for p in POLICIES {
            assert_eq!(compute_wood(o.clone(), p).unwrap().validate(), Ok(()));
        }
    }

    #[test]
    fn balanced_queue_pushes_are_linear() {
        let t = generate_icosphere(3).unwrap();
        let k = 5;
        let s = shell(t.clone(), Policy::Balanced { k }).unwrap();
        let bound: usize = (0..t.n() as u32).map(|v| k + t.degree(v)).sum();
        assert!(s.queue_pushes <= bound);
    }

    #[test]
    fn balanced_k_one_degenerates_to_fifo() {
        let t = generate_icosphere(2).unwrap();
        let w = compute_wood(t, Policy::Balanced { k: 1 }).unwrap();
        assert_eq!(w.validate(), Ok(()));
        assert!(compute_wood(tetrahedron(), Policy::Balanced { k: 0 }).is_err());
    }

    #[test]
    fn policy_parsing() {
        assert_eq!("balanced".parse::<Policy>().unwrap(), Policy::Balanced { k: 5 });
        assert_eq!("minimal".parse::<Policy>().unwrap(), Policy::Minimal);
        assert!("greedy".parse::<Policy>().is_err());
    }
}
