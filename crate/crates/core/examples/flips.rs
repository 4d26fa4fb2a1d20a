//! Walks the flip lattice: reverses random oriented faces and watches balance.
//!
//!     cargo run --release --example flips

use schnyder::planar_map::generate_icosphere;
use schnyder::rng::Rng;
use schnyder::shelling::{compute_wood, FaceOrientation, Policy};

fn main() -> schnyder::Result<()> {
    let mut wood = compute_wood(generate_icosphere(3)?, Policy::balanced())?;
    let mut rng = Rng::new(42);
    println!("step  delta0  delta_avg  cw  ccw");
    for step in 0..=2000 {
        if step % 250 == 0 {
            let faces = wood.oriented_faces();
            let cw = faces.iter().filter(|f| f.orientation == FaceOrientation::Cw).count();
            let b = wood.balance_stats();
            println!("{step:>4}  {:.4}  {:.4}     {cw:<3} {}", b.delta0, b.delta_avg, faces.len() - cw);
        }
        let faces = wood.oriented_faces();
        let face = faces[rng.index(faces.len())].face;
        wood.flip_face_in_place(face)?;
    }
    assert_eq!(wood.validate(), Ok(()));
    Ok(())
}
