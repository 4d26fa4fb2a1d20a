//! Seed sweep: re-root, recompute, and summarize separators as whiskers.
//!
//!     cargo run --release --example sweep

use schnyder::planar_map::{generate_icosphere, generate_stacked};
use schnyder::rng::Rng;
use schnyder::separator::{separator_sweep, SweepReport, DEFAULT_ALPHA};
use schnyder::shelling::Policy;

fn main() -> schnyder::Result<()> {
    let graphs = [
        ("icosphere:5", generate_icosphere(5)?),
        ("stacked:12000", generate_stacked(12000, &mut Rng::new(1))?),
    ];
    for (name, tri) in &graphs {
        let runs = separator_sweep(tri, Policy::balanced(), DEFAULT_ALPHA, 40, &mut Rng::new(2024), true)?;
        let report = SweepReport::new(name, tri, Policy::balanced(), DEFAULT_ALPHA, &runs);
        println!("{}", serde_json::to_string_pretty(&report)?);
    }
    Ok(())
}
