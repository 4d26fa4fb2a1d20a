pub mod cli;
pub mod drawing;
pub mod error;
pub mod geometry;
pub mod metrics;
pub mod planar_map;
pub mod regions;
pub mod rng;
pub mod separator;
pub mod shelling;
pub mod stats;

pub use error::{Error, Result};
