//! Builds each generator family and prints its size and degree regularity.
//!
//!     cargo run --example generate

use schnyder::planar_map::{generate_globe, generate_icosphere, generate_stacked, load_adjacency, write_adjacency};
use schnyder::rng::Rng;

fn main() -> schnyder::Result<()> {
    let mut rng = Rng::new(1);
    let graphs = [
        ("stacked:5000", generate_stacked(5000, &mut rng)?),
        ("icosphere:4", generate_icosphere(4)?),
        ("globe:60x40", generate_globe(60, 40)?),
    ];
    for (name, tri) in &graphs {
        let stats = tri.degree_stats();
        let max_degree = stats.histogram.keys().last().copied().unwrap_or(0);
        println!("{name:>14}  n={:<6} m={:<6} d6={:.3} max degree {max_degree}", tri.n(), tri.m(), stats.d6);
    }

    // Adjacency files keep the root face on the first line.
    let rerooted = graphs[1].1.choose_root(&mut rng);
    let mut buf = Vec::new();
    write_adjacency(&rerooted, &mut buf)?;
    let back = load_adjacency(buf.as_slice())?;
    assert_eq!(back.root_corners(), rerooted.root_corners());
    println!("round trip ok, root {:?}", back.root_corners());
    Ok(())
}
