//! Balanced simple-cycle separators read off the three tree paths.
//!
//! For an inner vertex `v` and sector `i`, the cycle `P_i(v)`, outer edge
//! `(v_i, v_{i+1})`, `P_{i+1}(v)` encloses `R_{i+2}(v)`. Its vertex count is
//! `p_i + p_{i+1} + 1`, the enclosed side is `B = Int(R_{i+2}(v))` and `A` is
//! everything else off the cycle (including `v_{i+2}`).

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::planar_map::{Triangulation, VertexId};
use crate::regions::{compute_region_data, region_data_oracle, RegionData};
use crate::rng::Rng;
use crate::shelling::{compute_wood, Policy, SchnyderWood};
use crate::stats::{round4, Quantiles};

/// Default balance ratio.
pub const DEFAULT_ALPHA: f64 = 2.0 / 3.0;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Separator {
    pub apex: VertexId,
    pub sector: u8,
    /// Cycle vertices in order, starting at the apex; closes back to it.
    pub cycle: Vec<VertexId>,
    pub size_a: usize,
    pub size_b: usize,
    pub alpha: f64,
}

impl Separator {
    pub fn cycle_length(&self) -> usize {
        self.cycle.len()
    }

    pub fn n(&self) -> usize {
        self.size_a + self.size_b + self.cycle.len()
    }

    /// `min(|A|, |B|) / n`.
    pub fn balance_fraction(&self) -> f64 {
        self.size_a.min(self.size_b) as f64 / self.n() as f64
    }
}

fn within(size: usize, n: usize, alpha: f64) -> bool {
    size as f64 <= alpha * n as f64
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_finite() && alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(Error::Config(format!("balance ratio must lie in (0, 1), got {alpha}")))
    }
}

/// `(cycle length, |A|, |B|)` of candidate `(v, i)`.
fn candidate(depth: [u32; 3], interior: [u32; 3], n: usize, i: usize) -> (usize, usize, usize) {
    let len = (depth[i] + depth[(i + 1) % 3] + 1) as usize;
    let b = interior[(i + 2) % 3] as usize;
    (len, n - len - b, b)
}

fn path_vertices(wood: &SchnyderWood, v: VertexId, c: u8) -> Vec<VertexId> {
    let tri = wood.triangulation();
    let root = tri.root_corners()[c as usize];
    let mut out = vec![v];
    let mut x = v;
    while x != root {
        x = tri.dest(wood.out_edge(x, c).expect("inner vertex has all out-edges"));
        out.push(x);
    }
    out
}

/// The cycle of candidate `(v, i)`: `P_i(v)` out to `v_i`, then `P_{i+1}(v)`
/// from `v_{i+1}` back toward `v`.
pub fn separator_cycle(wood: &SchnyderWood, v: VertexId, i: u8) -> Vec<VertexId> {
    let mut cycle = path_vertices(wood, v, i);
    let back = path_vertices(wood, v, (i + 1) % 3);
    cycle.extend(back[1..].iter().rev());
    cycle
}

/// Shortest balanced cycle over all inner vertices and sectors, ties broken by
/// vertex id and then sector.
pub fn extract_best_separator(wood: &SchnyderWood, regions: &RegionData, alpha: f64) -> Result<Separator> {
    check_alpha(alpha)?;
    let tri = wood.triangulation();
    let n = tri.n();
    let mut best: Option<(usize, VertexId, u8, usize, usize)> = None;
    for v in 0..n as VertexId {
        if tri.is_outer(v) {
            continue;
        }
        let (depth, interior) = (regions.depth[v as usize], regions.interior[v as usize]);
        for i in 0..3 {
            let (len, a, b) = candidate(depth, interior, n, i);
            if within(a, n, alpha) && within(b, n, alpha) && best.map_or(true, |x| len < x.0) {
                best = Some((len, v, i as u8, a, b));
            }
        }
    }
    let (len, apex, sector, size_a, size_b) = best.ok_or(Error::NoBalancedSeparator { alpha })?;
    let cycle = separator_cycle(wood, apex, sector);
    debug_assert_eq!(cycle.len(), len);
    Ok(Separator { apex, sector, cycle, size_a, size_b, alpha })
}

/// Brute-force optimum `(cycle length, apex, sector)` using per-vertex path
/// walks and face flood fills. Quadratic; meant for small graphs.
pub fn exhaustive_best_separator(wood: &SchnyderWood, alpha: f64) -> Option<(usize, VertexId, u8)> {
    let tri = wood.triangulation();
    let n = tri.n();
    let mut best = None;
    for v in 0..n as VertexId {
        if tri.is_outer(v) {
            continue;
        }
        let r = region_data_oracle(wood, v);
        for i in 0..3 {
            let (len, a, b) = candidate(r.depth, r.interior, n, i);
            let better = match best {
                None => true,
                Some((l, _, _)) => len < l,
            };
            if within(a, n, alpha) && within(b, n, alpha) && better {
                best = Some((len, v, i as u8));
            }
        }
    }
    best
}

#[derive(Clone, Debug, PartialEq, Serialize, thiserror::Error)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum SeparatorViolation {
    #[error("not a cycle: {reason}")]
    NotACycle { reason: String },
    #[error("A-B edge {a} - {b}")]
    CrossingEdge { a: VertexId, b: VertexId },
    #[error("vertex {vertex} lies on neither side of the cycle")]
    Uncovered { vertex: VertexId },
    #[error("declared sides {declared:?} but found {found:?}")]
    SizeMismatch { declared: [usize; 2], found: [usize; 2] },
    #[error("balance: side of {size} vertices exceeds {limit:.3}")]
    Balance { size: usize, limit: f64 },
}

fn not_a_cycle(reason: String) -> SeparatorViolation {
    SeparatorViolation::NotACycle { reason }
}

const SIDE_NONE: u8 = 0;
const SIDE_LEFT: u8 = 1;
const SIDE_RIGHT: u8 = 2;
const ON_CYCLE: u8 = 3;

/// Independent certificate check. Sides are found from the rotation at each
/// cycle vertex (neighbors between the outgoing and incoming cycle edges on one
/// turn direction form one side) and closed by flood fill; every edge is then
/// scanned for a left-right pair.
pub fn verify_separator(tri: &Triangulation, sep: &Separator) -> std::result::Result<(), SeparatorViolation> {
    let n = tri.n();
    let k = sep.cycle.len();
    if k < 3 {
        return Err(not_a_cycle(format!("only {k} vertices")));
    }
    let mut side = vec![SIDE_NONE; n];
    for &v in &sep.cycle {
        if v as usize >= n {
            return Err(not_a_cycle(format!("vertex {v} out of range")));
        }
        if side[v as usize] == ON_CYCLE {
            return Err(not_a_cycle(format!("vertex {v} repeated")));
        }
        side[v as usize] = ON_CYCLE;
    }
    let mut out_edges = Vec::with_capacity(k);
    for j in 0..k {
        let (s, q) = (sep.cycle[j], sep.cycle[(j + 1) % k]);
        match tri.find_half_edge(s, q) {
            Some(h) => out_edges.push(h),
            None => return Err(not_a_cycle(format!("{s} and {q} are not adjacent"))),
        }
    }

    let mut left = Vec::new();
    let mut right = Vec::new();
    for j in 0..k {
        let p = sep.cycle[(j + k - 1) % k];
        let start = out_edges[j];
        let mut h = tri.rot_cw(start);
        let mut bucket = &mut left;
        while h != start {
            let w = tri.dest(h);
            if w == p {
                bucket = &mut right;
            } else if side[w as usize] != ON_CYCLE {
                bucket.push(w);
            }
            h = tri.rot_cw(h);
        }
    }

    let flood = |seeds: Vec<VertexId>, label: u8, side: &mut Vec<u8>| {
        let mut stack: Vec<VertexId> = Vec::new();
        for s in seeds {
            if side[s as usize] == SIDE_NONE {
                side[s as usize] = label;
                stack.push(s);
            }
        }
        while let Some(x) = stack.pop() {
            for y in tri.neighbors(x) {
                if side[y as usize] == SIDE_NONE {
                    side[y as usize] = label;
                    stack.push(y);
                }
            }
        }
    };
    flood(left, SIDE_LEFT, &mut side);
    flood(right, SIDE_RIGHT, &mut side);

    for h in tri.edges() {
        let (a, b) = (tri.origin(h), tri.dest(h));
        let (sa, sb) = (side[a as usize], side[b as usize]);
        if (sa == SIDE_LEFT && sb == SIDE_RIGHT) || (sa == SIDE_RIGHT && sb == SIDE_LEFT) {
            return Err(SeparatorViolation::CrossingEdge { a, b });
        }
    }
    if let Some(v) = side.iter().position(|&s| s == SIDE_NONE) {
        return Err(SeparatorViolation::Uncovered { vertex: v as VertexId });
    }
    let l = side.iter().filter(|&&s| s == SIDE_LEFT).count();
    let r = side.iter().filter(|&&s| s == SIDE_RIGHT).count();
    let declared = [sep.size_a, sep.size_b];
    if declared != [l, r] && declared != [r, l] {
        return Err(SeparatorViolation::SizeMismatch { declared, found: [l, r] });
    }
    let limit = sep.alpha * n as f64;
    if let Some(&size) = [l, r].iter().find(|&&s| !within(s, n, sep.alpha)) {
        return Err(SeparatorViolation::Balance { size, limit });
    }
    Ok(())
}

/// One re-rooted pipeline of a sweep.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeedRun {
    pub seed: u64,
    pub root: [VertexId; 3],
    pub delta0: f64,
    pub delta_avg: f64,
    /// `None` when no candidate met the balance ratio.
    pub separator: Option<Separator>,
}

fn run_seed(tri: &Triangulation, policy: Policy, alpha: f64, seed: u64) -> Result<SeedRun> {
    let rooted = tri.choose_root(&mut Rng::new(seed));
    let root = rooted.root_corners();
    let wood = compute_wood(rooted, policy)?;
    let stats = wood.balance_stats();
    let regions = compute_region_data(&wood);
    let separator = match extract_best_separator(&wood, &regions, alpha) {
        Ok(s) => Some(s),
        Err(Error::NoBalancedSeparator { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(SeedRun { seed, root, delta0: stats.delta0, delta_avg: stats.delta_avg, separator })
}

/// Re-roots `tri` once per seed and extracts a separator from each wood.
/// Per-seed generators are drawn from `rng` up front, so the result does not
/// depend on `parallel`.
pub fn separator_sweep(
    tri: &Triangulation,
    policy: Policy,
    alpha: f64,
    seeds: usize,
    rng: &mut Rng,
    parallel: bool,
) -> Result<Vec<SeedRun>> {
    check_alpha(alpha)?;
    if seeds == 0 {
        return Err(Error::Precondition { what: "seeds", min: 1, got: 0 });
    }
    let seed_values: Vec<u64> = (0..seeds).map(|_| rng.next_u64()).collect();
    if parallel {
        seed_values.par_iter().map(|&s| run_seed(tri, policy, alpha, s)).collect()
    } else {
        seed_values.iter().map(|&s| run_seed(tri, policy, alpha, s)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Normalized {
    pub sqrt_n: Quantiles,
    pub sqrt_m: Quantiles,
    pub sqrt_8m: Quantiles,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundaryStats {
    #[serde(flatten)]
    pub size: Quantiles,
    pub normalized_by: Normalized,
    /// Runs with `|S| <= sqrt(8m)`.
    pub within_sqrt_8m: usize,
}

/// Whisker statistics of a sweep; values rounded to 4 decimals.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    #[serde(flatten)]
    pub policy: Policy,
    pub alpha: f64,
    pub seeds: usize,
    pub boundary: Option<BoundaryStats>,
    /// `min(|A|, |B|) / n`.
    pub balance: Option<Quantiles>,
    pub delta0: Quantiles,
    pub delta_avg: Quantiles,
    pub failures: usize,
}

impl SweepReport {
    pub fn new(graph: &str, tri: &Triangulation, policy: Policy, alpha: f64, runs: &[SeedRun]) -> Self {
        let (n, m) = (tri.n(), tri.m());
        let found: Vec<&Separator> = runs.iter().filter_map(|r| r.separator.as_ref()).collect();
        let sizes: Vec<f64> = found.iter().map(|s| s.cycle_length() as f64).collect();
        let scaled = |d: f64| -> Quantiles {
            let v: Vec<f64> = sizes.iter().map(|s| s / d).collect();
            Quantiles::of(&v).expect("non-empty").rounded()
        };
        let bound = (8.0 * m as f64).sqrt();
        let boundary = Quantiles::of(&sizes).map(|size| BoundaryStats {
            size: size.rounded(),
            normalized_by: Normalized {
                sqrt_n: scaled((n as f64).sqrt()),
                sqrt_m: scaled((m as f64).sqrt()),
                sqrt_8m: scaled(bound),
            },
            within_sqrt_8m: sizes.iter().filter(|&&s| s <= bound).count(),
        });
        let balance: Vec<f64> = found.iter().map(|s| s.balance_fraction()).collect();
        let d0: Vec<f64> = runs.iter().map(|r| r.delta0).collect();
        let da: Vec<f64> = runs.iter().map(|r| r.delta_avg).collect();
        SweepReport {
            graph: graph.to_string(),
            n,
            m,
            policy,
            alpha: round4(alpha),
            seeds: runs.len(),
            boundary,
            balance: Quantiles::of(&balance).map(Quantiles::rounded),
            delta0: Quantiles::of(&d0).expect("at least one seed").rounded(),
            delta_avg: Quantiles::of(&da).expect("at least one seed").rounded(),
            failures: runs.len() - found.len(),
        }
    }
}
