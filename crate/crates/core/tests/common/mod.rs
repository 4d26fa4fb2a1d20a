#![allow(dead_code)]

use std::io::Write;
use std::sync::{Mutex, MutexGuard};

use schnyder::planar_map::{
    generate_globe, generate_icosphere, generate_stacked, icosahedron, octahedron, tetrahedron, Triangulation,
};
use schnyder::rng::Rng;

pub struct Graph {
    pub name: String,
    pub tri: Triangulation,
}

/// 100 seeded stacked triangulations with `n` in [10, 2000], randomly rooted.
pub fn stacked_corpus() -> Vec<Graph> {
    let mut rng = Rng::new(0x5eed);
    (0..100)
        .map(|i| {
            let n = 10 + rng.below(1991) as usize;
            let tri = generate_stacked(n, &mut rng).unwrap().choose_root(&mut rng);
            Graph { name: format!("stacked#{i}:{n}"), tri }
        })
        .collect()
}

/// Stacked corpus plus small regular and structured graphs.
pub fn corpus() -> Vec<Graph> {
    let mut rng = Rng::new(77);
    let mut out = stacked_corpus();
    let fixed = [
        ("tetrahedron", tetrahedron()),
        ("octahedron", octahedron()),
        ("icosahedron", icosahedron()),
        ("icosphere:1", generate_icosphere(1).unwrap()),
        ("icosphere:2", generate_icosphere(2).unwrap()),
        ("icosphere:3", generate_icosphere(3).unwrap()),
        ("globe:10x6", generate_globe(10, 6).unwrap()),
        ("globe:16x12", generate_globe(16, 12).unwrap()),
        ("globe:30x15", generate_globe(30, 15).unwrap()),
    ];
    for (name, tri) in fixed {
        out.push(Graph { name: format!("{name}@default"), tri: tri.clone() });
        out.push(Graph { name: format!("{name}@random"), tri: tri.choose_root(&mut rng) });
    }
    out
}

static SERIAL: Mutex<()> = Mutex::new(());

/// Timing-sensitive tests in one binary run one at a time.
pub fn serial() -> MutexGuard<'static, ()> {
    SERIAL.lock().unwrap_or_else(|e| e.into_inner())
}

/// Writes straight to stderr so the line shows even when test output is
/// captured.
pub fn verdict(id: u32, title: &str, pass: bool, detail: &str) {
    let tag = if pass { "PASS" } else { "FAIL" };
    let line = format!("[{tag}] criterion {id:>2} {title}: {detail}\n");
    let _ = std::io::stderr().lock().write_all(line.as_bytes());
}
