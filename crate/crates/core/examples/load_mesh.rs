//! Loads an OFF or OBJ mesh and reports whether it is a usable triangulation.
//!
//!     cargo run --example load_mesh -- path/to/mesh.off
//!
//! Without an argument a small octahedron is parsed from memory.

use std::path::Path;

use schnyder::cli::load_file;
use schnyder::planar_map::load_off;

const OCTAHEDRON: &str = "OFF
6 8 12
1 0 0
-1 0 0
0 1 0
0 -1 0
0 0 1
0 0 -1
3 0 2 4
3 2 1 4
3 1 3 4
3 3 0 4
3 2 0 5
3 1 2 5
3 3 1 5
3 0 3 5
";

fn main() {
    let loaded = match std::env::args().nth(1) {
        Some(path) => load_file(Path::new(&path)),
        None => load_off(OCTAHEDRON.as_bytes()),
    };
    match loaded {
        Ok(tri) => {
            println!("n = {}, m = {}, faces = {}", tri.n(), tri.m(), tri.face_count());
            println!("root corners {:?}", tri.root_corners());
            for (d, count) in &tri.degree_stats().histogram {
                println!("  degree {d:>2}: {count}");
            }
        }
        Err(e) => {
            eprintln!("rejected: {e}");
            std::process::exit(1);
        }
    }
}
