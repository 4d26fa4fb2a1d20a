//! Compares the three conquest policies on a regular sphere mesh.
//!
//!     cargo run --release --example balanced_wood

use std::time::Instant;

use schnyder::planar_map::generate_icosphere;
use schnyder::shelling::{compute_wood, Policy};

fn main() -> schnyder::Result<()> {
    let tri = generate_icosphere(5)?;
    println!("icosphere(5): n = {}, d6 = {:.4}", tri.n(), tri.degree_stats().d6);
    for policy in [Policy::Minimal, Policy::Maximal, Policy::Balanced { k: 1 }, Policy::Balanced { k: 5 }] {
        let start = Instant::now();
        let wood = compute_wood(tri.clone(), policy)?;
        let elapsed = start.elapsed();
        wood.validate().expect("shelling always yields a valid wood");
        let b = wood.balance_stats();
        println!(
            "{:>16}: delta0 {:.4}  delta_avg {:.4}  ({} of {} balanced, {:.2?})",
            policy.to_string(),
            b.delta0,
            b.delta_avg,
            b.balanced,
            b.inner,
            elapsed
        );
    }
    Ok(())
}
