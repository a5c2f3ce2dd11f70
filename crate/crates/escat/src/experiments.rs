//! Reproducible error studies: solve a scattering configuration for a list
//! of refinements, compare the scattered field against the closed-form
//! reference at random evaluation points, and emit CSV or JSON.

use crate::fields::{exact_scattered, incident_eval, scattered_eval, ExactSolution, IncidentField};
use crate::kernel_split::kernel_pair;
use crate::navier_green::ElasticMedium;
use crate::nystrom_solver::{solve, BoundaryData};
use crate::quadrature::make_discretization;
use crate::surface::SurfaceProfile;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;
use std::time::Instant;

/// The built-in experiment configurations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExampleKind {
    /// flat surface, vertically incident plane P-wave
    FlatP,
    /// flat surface, vertically incident plane S-wave
    FlatS,
    /// sinusoidal surface, point source below
    Periodic,
    /// non-periodic bounded surface, point source below
    Rough,
    /// point source over the sinusoidal surface with every parameter
    /// taken from the configuration (a knob-turning mode)
    Custom,
}

impl ExampleKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ExampleKind::FlatP => "flat-p",
            ExampleKind::FlatS => "flat-s",
            ExampleKind::Periodic => "periodic",
            ExampleKind::Rough => "rough",
            ExampleKind::Custom => "custom",
        }
    }

    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "flat-p" => Ok(ExampleKind::FlatP),
            "flat-s" => Ok(ExampleKind::FlatS),
            "periodic" => Ok(ExampleKind::Periodic),
            "rough" => Ok(ExampleKind::Rough),
            "custom" => Ok(ExampleKind::Custom),
            other => Err(format!(
                "unknown example '{other}' (expected flat-p, flat-s, periodic, rough, custom)"
            )),
        }
    }
}

/// Full experiment configuration; `Default` mirrors the reference setup
/// (lambda = mu = 1, omega = 20, cut = 10 pi, 101 points in
/// [-2.5, 2.5] x [0.5, 1.5]).
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub example: ExampleKind,
    pub lambda: f64,
    pub mu: f64,
    pub omega: f64,
    /// coupling parameter; `None` means the default `eta = kappa_s`
    pub eta_re: Option<f64>,
    pub eta_im: Option<f64>,
    /// image level; `None` picks a level safely below the surface
    pub h: Option<f64>,
    pub cut: f64,
    pub n_list: Vec<usize>,
    pub nb: usize,
    /// evaluation rectangle `[x0, x1, y0, y1]`
    pub region: [f64; 4],
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            example: ExampleKind::FlatP,
            lambda: 1.0,
            mu: 1.0,
            omega: 20.0,
            eta_re: None,
            eta_im: None,
            h: None,
            cut: 10.0 * PI,
            n_list: vec![8, 16, 32],
            nb: 101,
            region: [-2.5, 2.5, 0.5, 1.5],
            seed: 7,
        }
    }
}

pub const STATISTICS: [&str; 6] = ["Re u1", "Im u1", "|u1|", "Re u2", "Im u2", "|u2|"];

/// One line of the error table.
#[derive(Debug, Clone, Serialize)]
pub struct ErrorRow {
    pub example: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub statistic: String,
    pub error: f64,
}

/// Everything a run produces: the error table plus wall-clock seconds per N.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub rows: Vec<ErrorRow>,
    pub runtimes: Vec<(usize, f64)>,
}

/// Mean of squared absolute deviations between two statistic samples.
pub fn error_metric(reference: &[f64], computed: &[f64]) -> f64 {
    assert_eq!(reference.len(), computed.len(), "length mismatch");
    assert!(!reference.is_empty());
    reference
        .iter()
        .zip(computed)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        / reference.len() as f64
}

/// `nb` uniform points in the rectangle, reproducible for a fixed seed.
pub fn sample_points(region: [f64; 4], nb: usize, seed: u64) -> Vec<[f64; 2]> {
    assert!(nb >= 1);
    assert!(region[0] < region[1] && region[2] < region[3], "degenerate region");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..nb)
        .map(|_| {
            let x = rng.gen_range(region[0]..region[1]);
            let y = rng.gen_range(region[2]..region[3]);
            [x, y]
        })
        .collect()
}

struct Setup {
    medium: ElasticMedium,
    surface: SurfaceProfile,
    exact: ExactSolution,
    incident: IncidentField,
}

fn build_setup(cfg: &RunConfig) -> Result<Setup, String> {
    if cfg.lambda + cfg.mu <= 0.0 || cfg.mu <= 0.0 || cfg.omega <= 0.0 {
        return Err("material parameters must satisfy mu > 0, lambda + mu > 0, omega > 0".into());
    }
    let kappa_s = cfg.omega / cfg.mu.sqrt();
    let eta = Complex64::new(cfg.eta_re.unwrap_or(kappa_s), cfg.eta_im.unwrap_or(0.0));
    if eta.re <= 0.0 {
        return Err("the coupling parameter must have positive real part".into());
    }
    let medium = ElasticMedium::new(cfg.lambda, cfg.mu, cfg.omega, eta);

    let source = ExactSolution::PointSource { z: [0.0, -3.0], q: [0.6, 0.8] };
    let (surface, exact, incident) = match cfg.example {
        ExampleKind::FlatP => (
            SurfaceProfile::flat(cfg.h.unwrap_or(-1.0)),
            ExactSolution::FlatP,
            IncidentField::PlaneP { theta: [0.0, -1.0] },
        ),
        ExampleKind::FlatS => (
            SurfaceProfile::flat(cfg.h.unwrap_or(-1.0)),
            ExactSolution::FlatS,
            IncidentField::PlaneS { theta: [0.0, -1.0] },
        ),
        ExampleKind::Periodic | ExampleKind::Custom => {
            let surf = surface_with_level(SurfaceProfile::periodic(0.0), cfg, |h| {
                SurfaceProfile::periodic(h)
            });
            (surf, source.clone(), IncidentField::PointSource { z: [0.0, -3.0], q: [0.6, 0.8] })
        }
        ExampleKind::Rough => {
            let surf = surface_with_level(SurfaceProfile::rough(0.0), cfg, |h| {
                SurfaceProfile::rough(h)
            });
            (surf, source, IncidentField::PointSource { z: [0.0, -3.0], q: [0.6, 0.8] })
        }
    };
    if let ExactSolution::PointSource { z, .. } = &exact {
        if z[1] >= surface.image_level {
            return Err(format!(
                "source depth {} must lie below the image level {}",
                z[1], surface.image_level
            ));
        }
    }
    Ok(Setup { medium, surface, exact, incident })
}

/// Default image level for curved surfaces: half a unit below the sampled
/// minimum of the profile over the (slightly enlarged) truncation window.
fn surface_with_level(
    probe: SurfaceProfile,
    cfg: &RunConfig,
    rebuild: impl Fn(f64) -> SurfaceProfile,
) -> SurfaceProfile {
    let h = cfg.h.unwrap_or_else(|| {
        probe.sampled_min(-cfg.cut - 1.0, cfg.cut + 1.0, 1e-3) - 0.5
    });
    rebuild(h)
}

/// Solve every refinement in the configuration and tabulate the six error
/// statistics per N.
pub fn run_example(cfg: &RunConfig) -> Result<RunOutput, String> {
    let setup = build_setup(cfg)?;
    let m = &setup.medium;
    let surf = &setup.surface;
    let points = sample_points(cfg.region, cfg.nb, cfg.seed);
    for p in &points {
        if p[1] <= surf.f(p[0]) {
            return Err(format!(
                "evaluation point ({}, {}) is not above the surface",
                p[0], p[1]
            ));
        }
    }
    let reference: Vec<[Complex64; 2]> = points
        .iter()
        .map(|p| exact_scattered(&setup.exact, m, *p))
        .collect();

    let kp = kernel_pair(m, surf);
    let data = BoundaryData::new(|s: f64| {
        let inc = incident_eval(&setup.incident, m, surf.point(s));
        [-inc[0], -inc[1]]
    });

    let mut rows = Vec::new();
    let mut runtimes = Vec::new();
    for &n in &cfg.n_list {
        let started = Instant::now();
        let disc = make_discretization(cfg.cut, n)?;
        let density = solve(&kp, &disc, &data)?;
        let computed: Vec<[Complex64; 2]> = points
            .par_iter()
            .map(|p| scattered_eval(m, surf, &density, *p))
            .collect();
        for comp in 0..2 {
            let stats: [(&str, fn(Complex64) -> f64); 3] = [
                (STATISTICS[3 * comp], |v| v.re),
                (STATISTICS[3 * comp + 1], |v| v.im),
                (STATISTICS[3 * comp + 2], |v| v.norm()),
            ];
            for (label, stat) in stats {
                let want: Vec<f64> = reference.iter().map(|v| stat(v[comp])).collect();
                let got: Vec<f64> = computed.iter().map(|v| stat(v[comp])).collect();
                rows.push(ErrorRow {
                    example: cfg.example.as_str().to_string(),
                    n,
                    statistic: label.to_string(),
                    error: error_metric(&want, &got),
                });
            }
        }
        runtimes.push((n, started.elapsed().as_secs_f64()));
    }
    Ok(RunOutput { rows, runtimes })
}

/// CSV rendering: header plus one row per (N, statistic), errors in
/// scientific notation with 10 significant digits.
pub fn render_csv(rows: &[ErrorRow]) -> String {
    let mut out = String::from("example,N,statistic,error\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{:.9e}\n", r.example, r.n, r.statistic, r.error));
    }
    out
}

#[derive(Serialize)]
struct RuntimeEntry {
    #[serde(rename = "N")]
    n: usize,
    seconds: f64,
}

#[derive(Serialize)]
struct Manifest<'a> {
    config: ManifestConfig<'a>,
    results: &'a [ErrorRow],
    runtime_seconds: Vec<RuntimeEntry>,
}

#[derive(Serialize)]
struct ManifestConfig<'a> {
    #[serde(flatten)]
    cfg: &'a RunConfig,
    /// the coupling parameter actually used (defaults resolved)
    eta: [f64; 2],
    /// the image level actually used (defaults resolved)
    image_level: f64,
}

/// JSON manifest: the full configuration (defaults resolved), the error
/// table, and wall-clock seconds per refinement.
pub fn render_json(cfg: &RunConfig, output: &RunOutput) -> Result<String, String> {
    let setup = build_setup(cfg)?;
    let manifest = Manifest {
        config: ManifestConfig {
            cfg,
            eta: [setup.medium.eta.re, setup.medium.eta.im],
            image_level: setup.surface.image_level,
        },
        results: &output.rows,
        runtime_seconds: output
            .runtimes
            .iter()
            .map(|&(n, seconds)| RuntimeEntry { n, seconds })
            .collect(),
    };
    serde_json::to_string_pretty(&manifest).map_err(|e| e.to_string())
}

/// Write the rendered results to a file, or to stdout when no path is given.
pub fn emit_results(
    cfg: &RunConfig,
    output: &RunOutput,
    format: OutputFormat,
    path: Option<&std::path::Path>,
) -> Result<(), String> {
    let text = match format {
        OutputFormat::Csv => render_csv(&output.rows),
        OutputFormat::Json => render_json(cfg, output)?,
    };
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("writing {}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format '{other}' (expected csv or json)")),
        }
    }
}
