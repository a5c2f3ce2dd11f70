//! Command-line driver for the scattering error studies.
//!
//! Precedence for every setting: command-line flag, then config file
//! (plain `key=value` lines), then built-in defaults.

use clap::Parser;
use escat::experiments::{emit_results, run_example, ExampleKind, OutputFormat, RunConfig};
use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "escat",
    about = "Nystrom boundary-integral solver for elastic wave scattering by unbounded rough surfaces",
    long_about = None
)]
struct Cli {
    /// experiment: flat-p, flat-s, periodic, rough, custom
    #[arg(long)]
    example: Option<String>,

    /// refinement parameter; repeat for a sweep (e.g. --N 8 --N 16 --N 32)
    #[arg(long = "N")]
    n: Vec<usize>,

    /// truncation half-width (must be a multiple of pi/N); accepts plain
    /// numbers or multiples of pi like "10pi"
    #[arg(long)]
    cut: Option<String>,

    /// first Lame constant
    #[arg(long = "lambda")]
    lambda: Option<f64>,

    /// shear modulus
    #[arg(long)]
    mu: Option<f64>,

    /// angular frequency
    #[arg(long)]
    omega: Option<f64>,

    /// real part of the coupling parameter (default: kappa_s)
    #[arg(long = "eta-re")]
    eta_re: Option<f64>,

    /// imaginary part of the coupling parameter (default: 0)
    #[arg(long = "eta-im")]
    eta_im: Option<f64>,

    /// image level below the surface (default: example-dependent)
    #[arg(long, allow_hyphen_values = true)]
    h: Option<f64>,

    /// number of random evaluation points
    #[arg(long)]
    nb: Option<usize>,

    /// RNG seed for the evaluation points
    #[arg(long)]
    seed: Option<u64>,

    /// evaluation rectangle x0,x1,y0,y1
    #[arg(long, value_delimiter = ',', num_args = 4, allow_hyphen_values = true)]
    region: Option<Vec<f64>>,

    /// output format: csv or json
    #[arg(long)]
    format: Option<String>,

    /// output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,

    /// config file with key=value lines (keys match the long flag names)
    #[arg(long)]
    config: Option<PathBuf>,
}

/// "10pi", "2.5pi", or a plain number.
fn parse_cut(s: &str) -> Result<f64, String> {
    let t = s.trim();
    if let Some(mult) = t.strip_suffix("pi") {
        let m = if mult.is_empty() { 1.0 } else { mult.parse::<f64>().map_err(|e| e.to_string())? };
        Ok(m * PI)
    } else {
        t.parse::<f64>().map_err(|e| e.to_string())
    }
}

fn parse_kv(path: &PathBuf) -> Result<Vec<(String, String)>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("reading config {}: {e}", path.display()))?;
    let mut pairs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("{}:{}: expected key=value", path.display(), lineno + 1))?;
        pairs.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok(pairs)
}

fn apply_kv(cfg: &mut RunConfig, format: &mut OutputFormat, out: &mut Option<PathBuf>, k: &str, v: &str) -> Result<(), String> {
    let bad = |e: String| format!("config key '{k}': {e}");
    match k {
        "example" => cfg.example = ExampleKind::parse(v)?,
        "N" => {
            cfg.n_list = v
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|e| bad(e.to_string())))
                .collect::<Result<_, _>>()?;
        }
        "cut" => cfg.cut = parse_cut(v).map_err(bad)?,
        "lambda" => cfg.lambda = v.parse().map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?,
        "mu" => cfg.mu = v.parse().map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?,
        "omega" => cfg.omega = v.parse().map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?,
        "eta-re" => cfg.eta_re = Some(v.parse().map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?),
        "eta-im" => cfg.eta_im = Some(v.parse().map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?),
        "h" => cfg.h = Some(v.parse().map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?),
        "nb" => cfg.nb = v.parse().map_err(|e: std::num::ParseIntError| bad(e.to_string()))?,
        "seed" => cfg.seed = v.parse().map_err(|e: std::num::ParseIntError| bad(e.to_string()))?,
        "region" => {
            let parts: Vec<f64> = v
                .split(',')
                .map(|x| x.trim().parse::<f64>().map_err(|e| bad(e.to_string())))
                .collect::<Result<_, _>>()?;
            if parts.len() != 4 {
                return Err(format!("config key 'region': expected x0,x1,y0,y1, got '{v}'"));
            }
            cfg.region = [parts[0], parts[1], parts[2], parts[3]];
        }
        "format" => *format = OutputFormat::parse(v)?,
        "out" => *out = Some(PathBuf::from(v)),
        other => return Err(format!("unknown config key '{other}'")),
    }
    Ok(())
}

fn build(cli: &Cli) -> Result<(RunConfig, OutputFormat, Option<PathBuf>), String> {
    let mut cfg = RunConfig::default();
    let mut format = OutputFormat::Csv;
    let mut out = None;

    if let Some(path) = &cli.config {
        for (k, v) in parse_kv(path)? {
            apply_kv(&mut cfg, &mut format, &mut out, &k, &v)?;
        }
    }

    if let Some(e) = &cli.example {
        cfg.example = ExampleKind::parse(e)?;
    }
    if !cli.n.is_empty() {
        cfg.n_list = cli.n.clone();
    }
    if let Some(c) = &cli.cut {
        cfg.cut = parse_cut(c)?;
    }
    if let Some(v) = cli.lambda {
        cfg.lambda = v;
    }
    if let Some(v) = cli.mu {
        cfg.mu = v;
    }
    if let Some(v) = cli.omega {
        cfg.omega = v;
    }
    if let Some(v) = cli.eta_re {
        cfg.eta_re = Some(v);
    }
    if let Some(v) = cli.eta_im {
        cfg.eta_im = Some(v);
    }
    if let Some(v) = cli.h {
        cfg.h = Some(v);
    }
    if let Some(v) = cli.nb {
        cfg.nb = v;
    }
    if let Some(v) = cli.seed {
        cfg.seed = v;
    }
    if let Some(r) = &cli.region {
        cfg.region = [r[0], r[1], r[2], r[3]];
    }
    if let Some(f) = &cli.format {
        format = OutputFormat::parse(f)?;
    }
    if let Some(o) = &cli.out {
        out = Some(o.clone());
    }
    Ok((cfg, format, out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (cfg, format, out) = match build(&cli) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("escat: {e}");
            return ExitCode::FAILURE;
        }
    };
    match run_example(&cfg).and_then(|output| emit_results(&cfg, &output, format, out.as_deref())) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("escat: {e}");
            ExitCode::FAILURE
        }
    }
}
