//! Draws a stacked triangulation on its grid and writes an SVG.
//!
//!     cargo run --example drawing_svg -- out.svg

use schnyder::drawing::schnyder_drawing;
use schnyder::metrics::edge_length_metric;
use schnyder::planar_map::generate_stacked;
use schnyder::regions::compute_region_data;
use schnyder::rng::Rng;
use schnyder::shelling::{compute_wood, Policy};

fn main() -> schnyder::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "drawing.svg".into());
    let tri = generate_stacked(120, &mut Rng::new(7))?;
    for policy in [Policy::Minimal, Policy::balanced()] {
        let wood = compute_wood(tri.clone(), policy)?;
        let drawing = schnyder_drawing(&wood, &compute_region_data(&wood));
        println!(
            "{:>14}: grid {}x{}, crossings {}, el {:.4}",
            policy.to_string(),
            drawing.grid,
            drawing.grid,
            drawing.crossing_pairs(),
            edge_length_metric(&drawing)?
        );
        if policy == Policy::balanced() {
            drawing.export_svg(&path)?;
        }
    }
    println!("wrote {path}");
    Ok(())
}
