//! Command implementations behind the `schnyder` binary.
//!
//! Inputs are either a mesh file (`.off`, `.obj`, anything else is read as the
//! adjacency format) or a generator spec: `stacked:N`, `icosphere:S`,
//! `globe:AxB`, `tetrahedron`, `octahedron`, `icosahedron`.

use std::fmt;
use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::drawing::{schnyder_drawing, Drawing};
use crate::error::{Error, Result};
use crate::metrics::{quality_report, QualityReport, Timings};
use crate::planar_map::{
    generate_globe, generate_icosphere, generate_stacked, icosahedron, load_adjacency, load_obj, load_off,
    octahedron, tetrahedron, write_adjacency, Triangulation,
};
use crate::regions::compute_region_data;
use crate::rng::Rng;
use crate::separator::{
    extract_best_separator, separator_sweep, verify_separator, Separator, SweepReport, DEFAULT_ALPHA,
};
use crate::shelling::{compute_wood, Policy, SchnyderWood, DEFAULT_QUEUES};
use crate::stats::{round4, Quantiles};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GraphSource {
    File { path: PathBuf },
    Stacked { n: usize },
    Icosphere { subdiv: u32 },
    Globe { a: usize, b: usize },
    Tetrahedron,
    Octahedron,
    Icosahedron,
}

impl FromStr for GraphSource {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |t: &str| t.parse::<usize>().map_err(|_| format!("bad number {t:?} in {s:?}"));
        let source = match s.split_once(':') {
            Some(("stacked", n)) => GraphSource::Stacked { n: num(n)? },
            Some(("icosphere", k)) => GraphSource::Icosphere { subdiv: num(k)? as u32 },
            Some(("globe", ab)) => {
                let (a, b) = ab.split_once('x').ok_or_else(|| format!("expected globe:AxB, got {s:?}"))?;
                GraphSource::Globe { a: num(a)?, b: num(b)? }
            }
            _ => match s {
                "tetrahedron" => GraphSource::Tetrahedron,
                "octahedron" => GraphSource::Octahedron,
                "icosahedron" => GraphSource::Icosahedron,
                path => GraphSource::File { path: path.into() },
            },
        };
        Ok(source)
    }
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::File { path } => write!(f, "{}", path.display()),
            GraphSource::Stacked { n } => write!(f, "stacked:{n}"),
            GraphSource::Icosphere { subdiv } => write!(f, "icosphere:{subdiv}"),
            GraphSource::Globe { a, b } => write!(f, "globe:{a}x{b}"),
            GraphSource::Tetrahedron => f.write_str("tetrahedron"),
            GraphSource::Octahedron => f.write_str("octahedron"),
            GraphSource::Icosahedron => f.write_str("icosahedron"),
        }
    }
}

impl GraphSource {
    /// Builds or reads the triangulation. Only `stacked` consumes randomness.
    pub fn load(&self, rng: &mut Rng) -> Result<Triangulation> {
        match self {
            GraphSource::File { path } => load_file(path),
            GraphSource::Stacked { n } => generate_stacked(*n, rng),
            GraphSource::Icosphere { subdiv } => generate_icosphere(*subdiv),
            GraphSource::Globe { a, b } => generate_globe(*a, *b),
            GraphSource::Tetrahedron => Ok(tetrahedron()),
            GraphSource::Octahedron => Ok(octahedron()),
            GraphSource::Icosahedron => Ok(icosahedron()),
        }
    }
}

pub fn load_file(path: &Path) -> Result<Triangulation> {
    let reader = BufReader::new(File::open(path)?);
    match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
        Some("off") => load_off(reader),
        Some("obj") => load_obj(reader),
        _ => load_adjacency(reader),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolicyName {
    Minimal,
    Maximal,
    #[default]
    Balanced,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    pub input: GraphSource,
    pub policy: PolicyName,
    /// Queue count, used by the balanced policy only.
    pub k: usize,
    pub alpha: f64,
    pub seeds: usize,
    pub rng_seed: u64,
    pub post_process: bool,
    pub parallel_seeds: bool,
    /// Precomputed wood to use instead of shelling.
    pub wood: Option<PathBuf>,
    pub svg: Option<PathBuf>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn policy(&self) -> Policy {
        match self.policy {
            PolicyName::Minimal => Policy::Minimal,
            PolicyName::Maximal => Policy::Maximal,
            PolicyName::Balanced => Policy::Balanced { k: self.k },
        }
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            input: GraphSource::Tetrahedron,
            policy: PolicyName::Balanced,
            k: DEFAULT_QUEUES,
            alpha: DEFAULT_ALPHA,
            seeds: 1,
            rng_seed: 0,
            post_process: false,
            parallel_seeds: false,
            wood: None,
            svg: None,
            out: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GenSummary {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub d6: f64,
    pub out: Option<PathBuf>,
}

/// Generates (or loads) a triangulation and writes it in adjacency format to
/// `out`, or returns it only when `out` is `None`.
pub fn cmd_gen(source: &GraphSource, rng_seed: u64, out: Option<&Path>) -> Result<(Triangulation, GenSummary)> {
    let tri = source.load(&mut Rng::new(rng_seed))?;
    if let Some(path) = out {
        write_adjacency(&tri, std::io::BufWriter::new(File::create(path)?))?;
    }
    let summary = GenSummary {
        graph: source.to_string(),
        n: tri.n(),
        m: tri.m(),
        d6: round4(tri.degree_stats().d6),
        out: out.map(Path::to_path_buf),
    };
    Ok((tri, summary))
}

#[derive(Clone, Debug, Serialize)]
pub struct ComputeSummary {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    #[serde(flatten)]
    pub policy: Policy,
    pub delta0: f64,
    pub delta_avg: f64,
    pub flips: usize,
    pub wood_ms: f64,
}

/// Shelling plus optional post-processing; the wood is validated and written
/// to `config.out` when set.
pub fn cmd_compute(config: &RunConfig) -> Result<(SchnyderWood, ComputeSummary)> {
    let tri = config.input.load(&mut Rng::new(config.rng_seed))?;
    let t = Instant::now();
    let wood = compute_wood(tri, config.policy())?;
    let (wood, flips) = if config.post_process { wood.postprocess_flips() } else { (wood, 0) };
    let wood_ms = ms(t);
    wood.validate().map_err(|v| Error::InvalidWood(v.to_string()))?;
    if let Some(path) = &config.out {
        wood.write_to(std::io::BufWriter::new(File::create(path)?))?;
    }
    let stats = wood.balance_stats();
    let summary = ComputeSummary {
        graph: config.input.to_string(),
        n: wood.triangulation().n(),
        m: wood.triangulation().m(),
        policy: config.policy(),
        delta0: round4(stats.delta0),
        delta_avg: round4(stats.delta_avg),
        flips,
        wood_ms: round4(wood_ms),
    };
    Ok((wood, summary))
}

/// Everything one pipeline run produces.
#[derive(Clone, Debug)]
pub struct PipelineRun {
    pub wood: SchnyderWood,
    pub flips: usize,
    pub drawing: Drawing,
    pub separator: Option<Separator>,
    pub report: QualityReport,
}

fn ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

/// Wood, optional post-processing, region data and drawing, separator; each
/// step timed on its own. Validation runs outside the timed sections and
/// turns any failure into an error.
pub fn run_pipeline(tri: Triangulation, config: &RunConfig) -> Result<PipelineRun> {
    let t = Instant::now();
    let wood = match &config.wood {
        Some(path) => SchnyderWood::read_from(&tri, BufReader::new(File::open(path)?))?,
        None => compute_wood(tri, config.policy())?,
    };
    let (wood, flips) = if config.post_process { wood.postprocess_flips() } else { (wood, 0) };
    let wood_ms = ms(t);
    wood.validate().map_err(|v| Error::InvalidWood(v.to_string()))?;

    let t = Instant::now();
    let regions = compute_region_data(&wood);
    let drawing = schnyder_drawing(&wood, &regions);
    let drawing_ms = ms(t);

    let t = Instant::now();
    let separator = match extract_best_separator(&wood, &regions, config.alpha) {
        Ok(s) => Some(s),
        Err(Error::NoBalancedSeparator { .. }) => None,
        Err(e) => return Err(e),
    };
    let separator_ms = ms(t);
    let tri = wood.triangulation();
    if let Some(s) = &separator {
        verify_separator(tri, s).map_err(|v| Error::InvalidSeparator(v.to_string()))?;
    }

    let timings = Timings { wood_ms, drawing_ms, separator_ms };
    let report = quality_report(tri, &wood, &drawing, separator.as_ref(), timings)?;
    Ok(PipelineRun { wood, flips, drawing, separator, report })
}

pub fn cmd_pipeline(config: &RunConfig) -> Result<PipelineRun> {
    let tri = config.input.load(&mut Rng::new(config.rng_seed))?;
    run_pipeline(tri, config)
}

pub fn cmd_sweep(config: &RunConfig) -> Result<SweepReport> {
    let mut rng = Rng::new(config.rng_seed);
    let tri = config.input.load(&mut rng)?;
    let runs = separator_sweep(&tri, config.policy(), config.alpha, config.seeds, &mut rng, config.parallel_seeds)?;
    for s in runs.iter().filter_map(|r| r.separator.as_ref()) {
        verify_separator(&tri, s).map_err(|v| Error::InvalidSeparator(v.to_string()))?;
    }
    Ok(SweepReport::new(&config.input.to_string(), &tri, config.policy(), config.alpha, &runs))
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    #[serde(flatten)]
    pub policy: Policy,
    pub runs: usize,
    pub wood_ms: Quantiles,
    pub drawing_ms: Quantiles,
    pub separator_ms: Quantiles,
    pub total_ms: Quantiles,
    /// Vertices per second of the median total.
    pub throughput: f64,
}

/// Runs the single-threaded pipeline `config.seeds` times, re-rooting before
/// each run, and summarizes the stage timings.
pub fn cmd_bench(config: &RunConfig) -> Result<BenchReport> {
    let mut rng = Rng::new(config.rng_seed);
    let tri = config.input.load(&mut rng)?;
    if config.seeds == 0 {
        return Err(Error::Precondition { what: "seeds", min: 1, got: 0 });
    }
    let mut t: Vec<Timings> = Vec::with_capacity(config.seeds);
    for _ in 0..config.seeds {
        let run = run_pipeline(tri.choose_root(&mut rng), config)?;
        t.push(run.report.timings);
    }
    let q = |f: fn(&Timings) -> f64| Quantiles::of(&t.iter().map(f).collect::<Vec<_>>()).expect("runs").rounded();
    let total_ms = q(Timings::total_ms);
    Ok(BenchReport {
        graph: config.input.to_string(),
        n: tri.n(),
        m: tri.m(),
        policy: config.policy(),
        runs: config.seeds,
        wood_ms: q(|x| x.wood_ms),
        drawing_ms: q(|x| x.drawing_ms),
        separator_ms: q(|x| x.separator_ms),
        throughput: (tri.n() as f64 / (total_ms.median / 1e3)).round(),
        total_ms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sources_parse_and_print() {
        for s in ["stacked:100", "icosphere:3", "globe:8x5", "tetrahedron", "meshes/horse.off"] {
            assert_eq!(s.parse::<GraphSource>().unwrap().to_string(), s);
        }
        assert!("globe:8".parse::<GraphSource>().is_err());
        assert!("stacked:x".parse::<GraphSource>().is_err());
    }

    #[test]
    fn config_round_trip_and_defaults() {
        let c = RunConfig::default();
        assert_eq!((c.policy(), c.alpha, c.seeds), (Policy::Balanced { k: 5 }, 2.0 / 3.0, 1));
        let partial: RunConfig = serde_json::from_str(r#"{"input":{"kind":"icosphere","subdiv":2}}"#).unwrap();
        assert_eq!(partial.policy(), Policy::balanced());
        let c = RunConfig { input: GraphSource::Globe { a: 4, b: 3 }, policy: PolicyName::Minimal, post_process: true, ..c };
        let back: RunConfig = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn generator_sizes() {
        let (_, s) = cmd_gen(&GraphSource::Icosphere { subdiv: 5 }, 0, None).unwrap();
        assert_eq!(s.n, 10242);
        let (_, s) = cmd_gen(&GraphSource::Stacked { n: 1000 }, 1, None).unwrap();
        assert_eq!(s.n, 1000);
    }

    #[test]
    fn tetrahedron_smoke() {
        let run = cmd_pipeline(&RunConfig::default()).unwrap();
        assert_eq!(run.report.n, 4);
        assert_eq!(run.report.delta0, 1.0);
    }

    #[test]
    fn sweep_is_reproducible() {
        let c = RunConfig { input: GraphSource::Icosphere { subdiv: 2 }, seeds: 3, rng_seed: 4, ..Default::default() };
        let a = serde_json::to_string(&cmd_sweep(&c).unwrap()).unwrap();
        let b = serde_json::to_string(&cmd_sweep(&c).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
