//! Region sizes of a few vertices, checked against a brute-force count.
//!
//!     cargo run --example regions

use schnyder::planar_map::generate_icosphere;
use schnyder::regions::{compute_region_data, region_data_oracle};
use schnyder::shelling::{compute_wood, Policy};

fn main() -> schnyder::Result<()> {
    let wood = compute_wood(generate_icosphere(2)?, Policy::balanced())?;
    let data = compute_region_data(&wood);
    println!("vertex  depth        faces           interior");
    for v in [3, 20, 57, 100, 161] {
        let r = data.get(v);
        assert_eq!(r, region_data_oracle(&wood, v));
        println!("{v:>6}  {:<11} {:<15} {:?}", format!("{:?}", r.depth), format!("{:?}", r.faces), r.interior);
    }
    Ok(())
}
