//! One pass of balance-improving face reversals after shelling.
//!
//!     cargo run --release --example postprocess

use schnyder::planar_map::{generate_globe, generate_icosphere, generate_stacked};
use schnyder::rng::Rng;
use schnyder::shelling::{compute_wood, Policy};

fn main() -> schnyder::Result<()> {
    let graphs = [
        ("icosphere:5", generate_icosphere(5)?),
        ("globe:120x100", generate_globe(120, 100)?),
        ("stacked:12000", generate_stacked(12000, &mut Rng::new(3))?),
    ];
    for (name, tri) in graphs {
        for policy in [Policy::Minimal, Policy::balanced()] {
            let wood = compute_wood(tri.clone(), policy)?;
            let (better, flips) = wood.postprocess_flips();
            let (before, after) = (wood.balance_stats().delta0, better.balance_stats().delta0);
            println!("{name:>14} {:>14}: delta0 {before:.4} -> {after:.4} with {flips} flips", policy.to_string());
        }
    }
    Ok(())
}
