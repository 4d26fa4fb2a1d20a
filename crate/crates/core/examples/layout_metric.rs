//! Edge-length aesthetic of the drawing as the wood is degraded by flips.
//!
//!     cargo run --release --example layout_metric

use schnyder::drawing::schnyder_drawing;
use schnyder::metrics::edge_length_metric;
use schnyder::planar_map::generate_icosphere;
use schnyder::regions::compute_region_data;
use schnyder::rng::Rng;
use schnyder::shelling::{compute_wood, Policy, SchnyderWood};

fn el(wood: &SchnyderWood) -> f64 {
    edge_length_metric(&schnyder_drawing(wood, &compute_region_data(wood))).expect("valid drawing")
}

fn main() -> schnyder::Result<()> {
    let mut wood = compute_wood(generate_icosphere(4)?, Policy::balanced())?;
    let mut rng = Rng::new(5);
    println!("flips  delta_avg  el");
    for round in 0..=10 {
        println!("{:>5}  {:.4}     {:.4}", round * 200, wood.balance_stats().delta_avg, el(&wood));
        for _ in 0..200 {
            let faces = wood.oriented_faces();
            wood.flip_face_in_place(faces[rng.index(faces.len())].face)?;
        }
    }
    Ok(())
}
