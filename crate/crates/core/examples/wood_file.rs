//! Writes a wood to its text format, reads it back and checks it.
//!
//!     cargo run --example wood_file

use schnyder::planar_map::generate_globe;
use schnyder::shelling::{compute_wood, Policy, SchnyderWood};

fn main() -> schnyder::Result<()> {
    let tri = generate_globe(8, 5)?;
    let wood = compute_wood(tri.clone(), Policy::balanced())?;

    let mut text = Vec::new();
    wood.write_to(&mut text)?;
    let text = String::from_utf8(text).expect("ascii");
    for line in text.lines().take(6) {
        println!("{line}");
    }
    println!("... {} lines", text.lines().count());

    let back = SchnyderWood::read_from(&tri, text.as_bytes())?;
    assert_eq!(back, wood);
    println!("read back: {:?}", back.validate());

    // A hand-edited file is caught by validation.
    let broken = text.replacen(" 0 +", " 1 +", 1);
    match SchnyderWood::read_from(&tri, broken.as_bytes()) {
        Ok(w) => println!("edited file: {}", w.validate().map_or_else(|v| v.to_string(), |_| "still valid".into())),
        Err(e) => println!("edited file rejected: {e}"),
    }
    Ok(())
}
