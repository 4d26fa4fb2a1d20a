//! Extracts the shortest balanced cycle separator and verifies it.
//!
//!     cargo run --release --example separator

use schnyder::planar_map::generate_globe;
use schnyder::regions::compute_region_data;
use schnyder::separator::{extract_best_separator, verify_separator};
use schnyder::shelling::{compute_wood, Policy};

fn main() -> schnyder::Result<()> {
    let tri = generate_globe(120, 100)?;
    let wood = compute_wood(tri.clone(), Policy::balanced())?;
    let regions = compute_region_data(&wood);
    for alpha in [0.5, 0.6, 2.0 / 3.0, 0.8] {
        let sep = extract_best_separator(&wood, &regions, alpha)?;
        println!(
            "alpha {alpha:.3}: |S| = {:>3} (sqrt(8m) = {:.0}), |A| = {}, |B| = {}, apex {} sector {}, check {:?}",
            sep.cycle_length(),
            (8.0 * tri.m() as f64).sqrt(),
            sep.size_a,
            sep.size_b,
            sep.apex,
            sep.sector,
            verify_separator(&tri, &sep)
        );
    }
    Ok(())
}
