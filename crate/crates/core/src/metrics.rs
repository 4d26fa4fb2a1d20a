//! Layout and separator quality numbers.
//!
//! Edge-length aesthetic: with `mu` the mean drawn edge length over all `m`
//! edges (outer ones included), `d_el = (1/m) * sum |l_e - mu| / mu` and
//! `el = 1 - d_el`.

use serde::Serialize;

use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::planar_map::Triangulation;
use crate::separator::Separator;
use crate::shelling::SchnyderWood;
use crate::stats::round4;

pub fn edge_length_metric_of(lengths: &[f64]) -> Result<f64> {
    if lengths.is_empty() {
        return Err(Error::DegenerateDrawing);
    }
    let m = lengths.len() as f64;
    let mu = lengths.iter().sum::<f64>() / m;
    if mu <= 0.0 {
        return Err(Error::DegenerateDrawing);
    }
    let d = lengths.iter().map(|l| (l - mu).abs()).sum::<f64>() / m / mu;
    Ok(1.0 - d)
}

pub fn edge_length_metric(drawing: &Drawing) -> Result<f64> {
    edge_length_metric_of(&drawing.edge_lengths())
}

/// Wall-clock milliseconds of the three pipeline steps.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct Timings {
    /// Wood computation, post-processing included.
    pub wood_ms: f64,
    /// Region data and coordinates.
    pub drawing_ms: f64,
    pub separator_ms: f64,
}

impl Timings {
    pub fn total_ms(&self) -> f64 {
        self.wood_ms + self.drawing_ms + self.separator_ms
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QualityReport {
    pub n: usize,
    pub m: usize,
    pub d6: f64,
    pub delta0: f64,
    pub delta_avg: f64,
    pub el: f64,
    pub separator_size: Option<usize>,
    pub separator_size_over_sqrt_m: Option<f64>,
    /// `min(|A|, |B|) / n`.
    pub balance_fraction: Option<f64>,
    pub timings: Timings,
}

pub fn quality_report(
    tri: &Triangulation,
    wood: &SchnyderWood,
    drawing: &Drawing,
    separator: Option<&Separator>,
    timings: Timings,
) -> Result<QualityReport> {
    let balance = wood.balance_stats();
    let sqrt_m = (tri.m() as f64).sqrt();
    Ok(QualityReport {
        n: tri.n(),
        m: tri.m(),
        d6: round4(tri.degree_stats().d6),
        delta0: round4(balance.delta0),
        delta_avg: round4(balance.delta_avg),
        el: round4(edge_length_metric(drawing)?),
        separator_size: separator.map(|s| s.cycle_length()),
        separator_size_over_sqrt_m: separator.map(|s| round4(s.cycle_length() as f64 / sqrt_m)),
        balance_fraction: separator.map(|s| round4(s.balance_fraction())),
        timings: Timings {
            wood_ms: round4(timings.wood_ms),
            drawing_ms: round4(timings.drawing_ms),
            separator_ms: round4(timings.separator_ms),
        },
    })
}
