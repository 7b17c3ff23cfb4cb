//! Command-line and config-file handling.
//!
//! A config file is a flat list of `key = value` lines; `#` starts a
//! comment. Keys use the flag names with `_` for `-`. Flags override file
//! values.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;
use tricav_core::{Grid, SystemParams, TransferRoute, Variant};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("{0}")]
    Cli(String),
    #[error("missing required value `{0}` (pass --{flag} or set it in the config file)", flag = .0.replace('_', "-"))]
    Missing(&'static str),
    #[error("{path}:{line}: unknown key `{key}`")]
    UnknownKey {
        path: String,
        line: usize,
        key: String,
    },
    #[error("{path}:{line}: expected `key = value`")]
    Syntax { path: String, line: usize },
    #[error("invalid value `{value}` for `{key}`: {reason}")]
    BadValue {
        key: &'static str,
        value: String,
        reason: String,
    },
    #[error("cannot read config file {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Domain(#[from] tricav_core::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Spectrum,
    Detuning,
    Coeffs,
    Selftest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariantChoice {
    Printed,
    Composed,
    Both,
}

impl VariantChoice {
    pub fn variants(self) -> Vec<Variant> {
        match self {
            VariantChoice::Printed => vec![Variant::Printed],
            VariantChoice::Composed => vec![Variant::Composed],
            VariantChoice::Both => Variant::ALL.to_vec(),
        }
    }
}

impl std::str::FromStr for VariantChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "printed" => Ok(VariantChoice::Printed),
            "composed" => Ok(VariantChoice::Composed),
            "both" => Ok(VariantChoice::Both),
            other => Err(format!("expected printed|composed|both, got `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mode: Mode,
    /// Absent only for `selftest`. For `detuning` the `delta` field is
    /// overwritten per sample.
    pub params: Option<SystemParams>,
    pub grid: Grid,
    pub omega_prime: f64,
    pub variant: VariantChoice,
    pub route: TransferRoute,
    pub output: Option<PathBuf>,
}

#[derive(Debug, Parser)]
#[command(
    name = "tricav",
    version,
    about = "Tripartite entanglement spectra of three cavity modes coupled to dressed Λ atoms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Correlation spectra versus normalized analyzing frequency ω′.
    Spectrum(CommonArgs),
    /// Correlation spectra versus laser detuning Δ at fixed ω′.
    Detuning(CommonArgs),
    /// Dump dressed basis, rates, A/B coefficients and the transfer matrix.
    Coeffs(CommonArgs),
    /// Run the built-in invariant suite.
    Selftest,
}

#[derive(Debug, Args, Default)]
struct CommonArgs {
    /// Config file with `key = value` lines; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Rabi frequency Ω.
    #[arg(long, allow_hyphen_values = true)]
    omega_rabi: Option<f64>,
    /// Laser detuning Δ.
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<f64>,
    /// Atomic decay rate γ.
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<f64>,
    /// Cavity loss rate κ.
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<f64>,
    /// Collective coupling g²N.
    #[arg(long, allow_hyphen_values = true)]
    g2n: Option<f64>,
    /// Lower end of the sweep grid.
    #[arg(long, allow_hyphen_values = true)]
    min: Option<f64>,
    /// Upper end of the sweep grid.
    #[arg(long, allow_hyphen_values = true)]
    max: Option<f64>,
    /// Number of grid points (>= 2).
    #[arg(long)]
    points: Option<usize>,
    /// Normalized analyzing frequency ω′ (detuning and coeffs modes).
    #[arg(long, allow_hyphen_values = true)]
    wprime: Option<f64>,
    /// printed | composed | both
    #[arg(long)]
    variant: Option<String>,
    /// Transfer-matrix route: cofactor | numeric
    #[arg(long)]
    route: Option<String>,
    /// Output file (default: standard output).
    #[arg(long, short)]
    output: Option<PathBuf>,
}

const KEYS: [&str; 12] = [
    "omega_rabi",
    "delta",
    "gamma",
    "kappa",
    "g2n",
    "min",
    "max",
    "points",
    "wprime",
    "variant",
    "route",
    "output",
];

pub type FileValues = BTreeMap<&'static str, String>;

pub fn parse_config_text(text: &str, path: &str) -> Result<FileValues, ConfigError> {
    let mut values = FileValues::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| ConfigError::Syntax {
            path: path.to_string(),
            line: i + 1,
        })?;
        let key = key.trim();
        let known = KEYS
            .iter()
            .find(|k| **k == key)
            .ok_or_else(|| ConfigError::UnknownKey {
                path: path.to_string(),
                line: i + 1,
                key: key.to_string(),
            })?;
        values.insert(known, value.trim().to_string());
    }
    Ok(values)
}

pub fn read_config_file(path: &Path) -> Result<FileValues, ConfigError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: shown.clone(),
        source,
    })?;
    parse_config_text(&text, &shown)
}

/// Outcome of argument parsing: either a config to run or text that clap
/// wants printed (help / version).
#[derive(Debug)]
pub enum Parsed {
    Run(RunConfig),
    Info(String),
}

pub fn parse_config<I, T>(args: I) -> Result<Parsed, ConfigError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Ok(Parsed::Info(e.to_string()))
                }
                _ => Err(ConfigError::Cli(e.to_string())),
            };
        }
    };
    let (mode, args) = match cli.command {
        Command::Spectrum(a) => (Mode::Spectrum, a),
        Command::Detuning(a) => (Mode::Detuning, a),
        Command::Coeffs(a) => (Mode::Coeffs, a),
        Command::Selftest => (Mode::Selftest, CommonArgs::default()),
    };
    let file = match &args.config {
        Some(path) => read_config_file(path)?,
        None => FileValues::new(),
    };
    build(mode, &args, &file).map(Parsed::Run)
}

fn file_value<T: std::str::FromStr>(
    file: &FileValues,
    key: &'static str,
) -> Result<Option<T>, ConfigError>
where
    T::Err: std::fmt::Display,
{
    file.get(key)
        .map(|v| {
            v.parse::<T>().map_err(|e| ConfigError::BadValue {
                key,
                value: v.clone(),
                reason: e.to_string(),
            })
        })
        .transpose()
}

fn pick<T: std::str::FromStr>(
    flag: Option<T>,
    file: &FileValues,
    key: &'static str,
) -> Result<Option<T>, ConfigError>
where
    T::Err: std::fmt::Display,
{
    match flag {
        Some(v) => Ok(Some(v)),
        None => file_value(file, key),
    }
}

fn require<T>(v: Option<T>, key: &'static str) -> Result<T, ConfigError> {
    v.ok_or(ConfigError::Missing(key))
}

fn parse_named<T: std::str::FromStr<Err = String>>(
    flag: &Option<String>,
    file: &FileValues,
    key: &'static str,
) -> Result<Option<T>, ConfigError> {
    let Some(text) = flag.clone().or_else(|| file.get(key).cloned()) else {
        return Ok(None);
    };
    text.parse::<T>()
        .map(Some)
        .map_err(|reason| ConfigError::BadValue {
            key,
            value: text,
            reason,
        })
}

fn build(mode: Mode, args: &CommonArgs, file: &FileValues) -> Result<RunConfig, ConfigError> {
    let variant = parse_named::<VariantChoice>(&args.variant, file, "variant")?
        .unwrap_or(VariantChoice::Printed);
    let route = parse_named::<TransferRoute>(&args.route, file, "route")?.unwrap_or_default();
    let output = args
        .output
        .clone()
        .or_else(|| file.get("output").map(PathBuf::from));
    let omega_prime = pick(args.wprime, file, "wprime")?.unwrap_or(0.0);

    if mode == Mode::Selftest {
        return Ok(RunConfig {
            mode,
            params: None,
            grid: Grid::DEFAULT_FREQUENCY,
            omega_prime,
            variant,
            route,
            output,
        });
    }

    let omega_rabi = require(pick(args.omega_rabi, file, "omega_rabi")?, "omega_rabi")?;
    let delta = match mode {
        Mode::Detuning => pick(args.delta, file, "delta")?.unwrap_or(0.0),
        _ => require(pick(args.delta, file, "delta")?, "delta")?,
    };
    let gamma = require(pick(args.gamma, file, "gamma")?, "gamma")?;
    let kappa = require(pick(args.kappa, file, "kappa")?, "kappa")?;
    let g2n = require(pick(args.g2n, file, "g2n")?, "g2n")?;
    let params = SystemParams::new(omega_rabi, delta, gamma, kappa, g2n)?;

    let default_grid = match mode {
        Mode::Detuning => Grid::DEFAULT_DETUNING,
        _ => Grid::DEFAULT_FREQUENCY,
    };
    let grid = Grid::new(
        pick(args.min, file, "min")?.unwrap_or(default_grid.min),
        pick(args.max, file, "max")?.unwrap_or(default_grid.max),
        pick(args.points, file, "points")?.unwrap_or(default_grid.points),
    )?;
    if !omega_prime.is_finite() {
        return Err(ConfigError::BadValue {
            key: "wprime",
            value: omega_prime.to_string(),
            reason: "must be finite".into(),
        });
    }

    Ok(RunConfig {
        mode,
        params: Some(params),
        grid,
        omega_prime,
        variant,
        route,
        output,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_config(args: &[&str]) -> Result<RunConfig, ConfigError> {
        let mut full = vec!["tricav"];
        full.extend_from_slice(args);
        match parse_config(full)? {
            Parsed::Run(c) => Ok(c),
            Parsed::Info(s) => panic!("unexpected info output: {s}"),
        }
    }

    #[test]
    fn reference_flags() {
        let c = run_config(&[
            "spectrum",
            "--delta",
            "5",
            "--omega-rabi",
            "35",
            "--g2n",
            "10",
            "--gamma",
            "1",
            "--kappa",
            "0.1",
        ])
        .unwrap();
        assert_eq!(c.mode, Mode::Spectrum);
        assert_eq!(
            c.params,
            Some(SystemParams::new(35.0, 5.0, 1.0, 0.1, 10.0).unwrap())
        );
        assert_eq!(c.grid, Grid::DEFAULT_FREQUENCY);
        assert_eq!(c.variant, VariantChoice::Printed);
        assert_eq!(c.route, TransferRoute::Cofactor);
        assert_eq!(c.output, None);
    }

    #[test]
    fn missing_kappa_is_named() {
        let err = run_config(&[
            "spectrum",
            "--delta",
            "5",
            "--omega-rabi",
            "35",
            "--g2n",
            "10",
            "--gamma",
            "1",
        ])
        .unwrap_err();
        assert!(matches!(err, ConfigError::Missing("kappa")));
        assert!(err.to_string().contains("kappa"));
    }

    #[test]
    fn negative_values_and_detuning_defaults() {
        let c = run_config(&[
            "detuning",
            "--omega-rabi",
            "35",
            "--g2n",
            "10",
            "--gamma",
            "1",
            "--kappa",
            "0.1",
            "--wprime",
            "-1",
            "--min",
            "-20",
        ])
        .unwrap();
        assert_eq!(c.omega_prime, -1.0);
        assert_eq!(c.grid, Grid::new(-20.0, 20.0, 391).unwrap());
    }

    #[test]
    fn file_values_and_precedence() {
        let file = parse_config_text(
            "# reference run\nomega_rabi = 35\ndelta = 5   # overridden\ngamma=1\nkappa = 0.1\ng2n = 10\nvariant = both\n\n",
            "cfg",
        )
        .unwrap();
        let args = CommonArgs {
            delta: Some(10.0),
            ..Default::default()
        };
        let c = build(Mode::Spectrum, &args, &file).unwrap();
        assert_eq!(c.params.unwrap().delta, 10.0);
        assert_eq!(c.params.unwrap().omega_rabi, 35.0);
        assert_eq!(c.variant, VariantChoice::Both);
    }

    #[test]
    fn file_errors() {
        let err = parse_config_text("omega_rabi = 35\nkapa = 0.1\n", "cfg").unwrap_err();
        assert_eq!(err.to_string(), "cfg:2: unknown key `kapa`");
        assert!(matches!(
            parse_config_text("kappa 0.1", "cfg"),
            Err(ConfigError::Syntax { line: 1, .. })
        ));
        let file = parse_config_text("kappa = fast", "cfg").unwrap();
        let err = build(Mode::Coeffs, &CommonArgs::default(), &file).unwrap_err();
        // omega_rabi is checked before kappa is parsed.
        assert!(matches!(err, ConfigError::Missing("omega_rabi")));
        let file = parse_config_text(
            "omega_rabi = 35\ndelta = 1\ngamma = 1\ng2n = 1\nkappa = fast",
            "cfg",
        )
        .unwrap();
        let err = build(Mode::Coeffs, &CommonArgs::default(), &file).unwrap_err();
        assert!(matches!(err, ConfigError::BadValue { key: "kappa", .. }));
    }

    #[test]
    fn rejects_bad_flags_and_domains() {
        assert!(matches!(
            run_config(&["spectrum", "--bogus", "1"]),
            Err(ConfigError::Cli(_))
        ));
        assert!(matches!(
            run_config(&[
                "spectrum",
                "--delta",
                "5",
                "--omega-rabi",
                "35",
                "--g2n",
                "10",
                "--gamma",
                "1",
                "--kappa",
                "-1"
            ]),
            Err(ConfigError::Domain(_))
        ));
        assert!(matches!(
            run_config(&[
                "spectrum",
                "--delta",
                "5",
                "--omega-rabi",
                "35",
                "--g2n",
                "10",
                "--gamma",
                "1",
                "--kappa",
                "0.1",
                "--points",
                "1"
            ]),
            Err(ConfigError::Domain(_))
        ));
        assert!(matches!(
            run_config(&[
                "spectrum",
                "--delta",
                "5",
                "--omega-rabi",
                "35",
                "--g2n",
                "10",
                "--gamma",
                "1",
                "--kappa",
                "0.1",
                "--variant",
                "mixed"
            ]),
            Err(ConfigError::BadValue { key: "variant", .. })
        ));
    }

    #[test]
    fn selftest_needs_no_params() {
        let c = run_config(&["selftest"]).unwrap();
        assert_eq!(c.mode, Mode::Selftest);
        assert!(c.params.is_none());
    }
}
