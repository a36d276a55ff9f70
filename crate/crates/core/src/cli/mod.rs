//! Command layer of the `xp-spectra` binary.
//!
//! Every command produces a [`Table`]; [`run`] parses arguments, merges the optional
//! config file, executes inside a worker pool of `--jobs` threads and maps errors to
//! exit codes (0 success, 1 I/O, 2 usage or a non-root energy, 3 numerical failure).

mod commands;
pub mod table;

use std::collections::HashMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Result, XpError};
use crate::riemann::Truncation;

pub use commands::execute;
pub use table::{format_g, Cell, Format, Table};

/// Environment variable naming the config file.
pub const CONFIG_ENV: &str = "XP_SPECTRA_CONFIG";

#[derive(Debug, Parser)]
#[command(name = "xp-spectra", version, about = "Tables for the xp model of the Riemann zeros")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Counting functions N_R, <N>, N_QM and the fluctuation terms on an energy grid.
    Count,
    /// Bound states (zeros of the Jost function) in an energy range.
    Zeros,
    /// Normalized bound-state wave function on an x-grid.
    Wavefn,
    /// |f|, arg f against the truncated Euler product.
    Euler,
    /// Jost function and scattering phase of the delta-function trap.
    Trap,
    /// Boundary reconstructed from a prescribed n_fl, and the semiclassical count it yields.
    Boundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Smooth,
    Riemann,
    Trap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TruncationArg {
    Main,
    Rs,
    Bk,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Profile {
    /// n_fl ≡ 0, the Berry-Keating boundary.
    Bk,
    /// ε sin³(E/2).
    Sin3,
    /// ε sin(E) sin²(E/2).
    SinSin2,
    /// ε sin(3E/2) sin²(E/2).
    Sin3Half,
}

/// Flags shared by all commands. Unset flags fall back to the config file, then to the
/// command's defaults.
#[derive(Debug, Clone, Default, PartialEq, Args)]
pub struct Options {
    /// Lower end of the energy range.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub e_min: Option<f64>,
    /// Upper end of the energy range.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub e_max: Option<f64>,
    /// Energy step (x step for wavefn).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub step: Option<f64>,
    #[arg(long, global = true, value_enum)]
    pub kind: Option<Kind>,
    /// Trap coupling sign ε = ±1.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub epsilon: Option<f64>,
    /// Trap length q_ab = ln(x_a/x_b).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub q_ab: Option<f64>,
    /// Cutoff of the spectral integral for Riemann wave functions.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
    /// Width parameter K of the Berry-Keating smoothing.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub k_smooth: Option<f64>,
    #[arg(long, global = true, value_enum)]
    pub truncation: Option<TruncationArg>,
    /// Output format (default csv).
    #[arg(long, global = true, value_enum)]
    pub format: Option<FormatArg>,
    /// Write the table to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for grid sweeps.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Bound-state energy for wavefn; snapped to a zero within 0.05.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub energy: Option<f64>,
    /// 1-based index of the bound state for wavefn.
    #[arg(long, global = true)]
    pub index: Option<usize>,
    /// Largest x of the wave-function grid (default 10).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub x_max: Option<f64>,
    #[arg(long, global = true, value_enum)]
    pub profile: Option<Profile>,
    /// Amplitude ε of the boundary profile (default 0.001).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub amplitude: Option<f64>,
}

fn parse_value<T: FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse()
        .map_err(|_| XpError::Usage(format!("config key {key}: cannot parse '{v}'")))
}

fn parse_enum<T: ValueEnum>(key: &str, v: &str) -> Result<T> {
    T::from_str(v, true).map_err(|_| XpError::Usage(format!("config key {key}: invalid value '{v}'")))
}

impl Options {
    /// Parses the flat `key = value` config format. `#` starts a comment, keys are the flag
    /// names with `-` or `_`.
    pub fn from_config_str(text: &str) -> Result<Self> {
        let mut map = HashMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| XpError::Usage(format!("config line {}: expected key = value", n + 1)))?;
            map.insert(k.trim().replace('-', "_"), v.trim().to_string());
        }
        let mut o = Options::default();
        for (k, v) in &map {
            let v = v.as_str();
            match k.as_str() {
                "e_min" => o.e_min = Some(parse_value(k, v)?),
                "e_max" => o.e_max = Some(parse_value(k, v)?),
                "step" => o.step = Some(parse_value(k, v)?),
                "kind" => o.kind = Some(parse_enum(k, v)?),
                "epsilon" => o.epsilon = Some(parse_value(k, v)?),
                "q_ab" => o.q_ab = Some(parse_value(k, v)?),
                "lambda" => o.lambda = Some(parse_value(k, v)?),
                "k_smooth" => o.k_smooth = Some(parse_value(k, v)?),
                "truncation" => o.truncation = Some(parse_enum(k, v)?),
                "format" => o.format = Some(parse_enum(k, v)?),
                "out" => o.out = Some(PathBuf::from(v)),
                "jobs" => o.jobs = Some(parse_value(k, v)?),
                "energy" => o.energy = Some(parse_value(k, v)?),
                "index" => o.index = Some(parse_value(k, v)?),
                "x_max" => o.x_max = Some(parse_value(k, v)?),
                "profile" => o.profile = Some(parse_enum(k, v)?),
                "amplitude" => o.amplitude = Some(parse_value(k, v)?),
                other => return Err(XpError::Usage(format!("unknown config key '{other}'"))),
            }
        }
        Ok(o)
    }

    pub fn from_config_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| XpError::Io(format!("config file {}: {e}", path.display())))?;
        Self::from_config_str(&text)
    }

    /// Fields set here win; the rest come from `lower`.
    pub fn or(self, lower: Options) -> Options {
        Options {
            e_min: self.e_min.or(lower.e_min),
            e_max: self.e_max.or(lower.e_max),
            step: self.step.or(lower.step),
            kind: self.kind.or(lower.kind),
            epsilon: self.epsilon.or(lower.epsilon),
            q_ab: self.q_ab.or(lower.q_ab),
            lambda: self.lambda.or(lower.lambda),
            k_smooth: self.k_smooth.or(lower.k_smooth),
            truncation: self.truncation.or(lower.truncation),
            format: self.format.or(lower.format),
            out: self.out.or(lower.out),
            jobs: self.jobs.or(lower.jobs),
            energy: self.energy.or(lower.energy),
            index: self.index.or(lower.index),
            x_max: self.x_max.or(lower.x_max),
            profile: self.profile.or(lower.profile),
            amplitude: self.amplitude.or(lower.amplitude),
        }
    }

    /// The chosen truncation, `fallback` when unset. K defaults to 4.
    pub fn truncation_or(&self, fallback: TruncationArg) -> Result<Truncation> {
        let k = self.k_smooth.unwrap_or(4.0);
        if !(k > 0.0) {
            return Err(XpError::Usage(format!("--k-smooth must be positive, got {k}")));
        }
        Ok(match self.truncation.unwrap_or(fallback) {
            TruncationArg::Main => Truncation::MainSum,
            TruncationArg::Rs => Truncation::RsMain,
            TruncationArg::Bk => Truncation::BkSmoothed { k },
        })
    }

    pub fn format(&self) -> Format {
        match self.format {
            Some(FormatArg::Json) => Format::Json,
            _ => Format::Csv,
        }
    }
}

fn exit_code(e: &XpError) -> i32 {
    match e {
        XpError::Io(_) => 1,
        XpError::Usage(_) | XpError::InvalidRange(..) | XpError::NotARoot { .. } => 2,
        _ => 3,
    }
}

/// Runs one invocation. `config` overrides the `XP_SPECTRA_CONFIG` lookup when given.
pub fn run_with<I, T>(args: I, config: Option<&Path>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return e.exit_code();
        }
    };
    let env_path = std::env::var_os(CONFIG_ENV).map(PathBuf::from);
    let result = (|| -> Result<()> {
        let file = match config.map(Path::to_path_buf).or(env_path) {
            Some(p) => Options::from_config_file(&p)?,
            None => Options::default(),
        };
        let opts = cli.opts.clone().or(file);
        let jobs = match opts.jobs {
            Some(0) => return Err(XpError::Usage("--jobs must be at least 1".into())),
            Some(n) => n,
            None => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
        };
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| XpError::Usage(format!("cannot start {jobs} workers: {e}")))?;
        let mut notes = Vec::new();
        let table = pool.install(|| execute(cli.command, &opts, &mut notes));
        stderr.write_all(&notes)?;
        let table = table?;
        let text = table.render(opts.format());
        match &opts.out {
            Some(p) => std::fs::write(p, text).map_err(|e| XpError::Io(format!("{}: {e}", p.display())))?,
            None => stdout.write_all(text.as_bytes())?,
        }
        Ok(())
    })();
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if exit_code(&e) == 2 {
                let _ = writeln!(stderr, "run `xp-spectra --help` for usage");
            }
            exit_code(&e)
        }
    }
}

/// [`run_with`] using the process environment for the config path.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(args, None, stdout, stderr)
}
