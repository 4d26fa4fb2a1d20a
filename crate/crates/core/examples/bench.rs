//! Pipeline timings on growing stacked triangulations.
//!
//!     cargo run --release --example bench

use schnyder::cli::{run_pipeline, RunConfig};
use schnyder::planar_map::generate_stacked;
use schnyder::rng::Rng;

fn main() -> schnyder::Result<()> {
    let config = RunConfig::default();
    println!("{:>9}  {:>9} {:>9} {:>9} {:>9}  {:>12}", "n", "wood", "drawing", "separator", "total", "vertices/s");
    for n in [125_000, 250_000, 500_000, 1_000_000] {
        let tri = generate_stacked(n, &mut Rng::new(n as u64))?;
        let t = run_pipeline(tri, &config)?.report.timings;
        println!(
            "{n:>9}  {:>7.1}ms {:>7.1}ms {:>7.1}ms {:>7.1}ms  {:>12.0}",
            t.wood_ms,
            t.drawing_ms,
            t.separator_ms,
            t.total_ms(),
            n as f64 / (t.total_ms() / 1e3)
        );
    }
    Ok(())
}
