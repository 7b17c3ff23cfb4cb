//! The `tricav` command-line front end.
//!
//! Exit codes: 0 success, 1 usage or configuration error, 2 numerical
//! failure (singular drift matrix, failed self-test).

pub mod config;
pub mod format;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};

use tricav_core::{
    decay_rates, dressed_basis, gain_loss_matrices, selftest, steady_populations, sweep_detuning,
    sweep_frequency, transfer, transfer_cofactor, transfer_numeric, Error, SystemParams,
    TransferRoute,
};

use crate::config::{parse_config, ConfigError, Mode, Parsed, RunConfig};
use crate::format::{write_coeff_dump, write_csv, CoeffDump};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NUMERICAL: i32 = 2;

/// Parse `args` (including the program name) and run. Diagnostics go to
/// `stderr`; data goes to `stdout` unless an output file is configured.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match parse_config(args) {
        Ok(Parsed::Info(text)) => {
            let _ = write!(stdout, "{text}");
            EXIT_OK
        }
        Ok(Parsed::Run(config)) => run(&config, stdout, stderr),
        Err(ConfigError::Cli(text)) => {
            let _ = write!(stderr, "{text}");
            EXIT_USAGE
        }
        Err(e) => {
            let _ = writeln!(stderr, "tricav: {e}");
            EXIT_USAGE
        }
    }
}

enum RunError {
    Numerical(Error),
    Io(io::Error),
    SelfTest(usize),
}

impl From<io::Error> for RunError {
    fn from(e: io::Error) -> Self {
        RunError::Io(e)
    }
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Numerical(e)
    }
}

pub fn run(config: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match &config.output {
        Some(path) => match File::create(path) {
            Ok(f) => {
                let mut w = BufWriter::new(f);
                execute(config, &mut w, stderr).and_then(|()| w.flush().map_err(RunError::Io))
            }
            Err(e) => {
                let _ = writeln!(stderr, "tricav: cannot create {}: {e}", path.display());
                return EXIT_USAGE;
            }
        },
        None => execute(config, stdout, stderr),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(RunError::Numerical(e)) => {
            let _ = writeln!(stderr, "tricav: numerical failure: {e}");
            EXIT_NUMERICAL
        }
        Err(RunError::SelfTest(failed)) => {
            let _ = writeln!(stderr, "tricav: {failed} self-test check(s) failed");
            EXIT_NUMERICAL
        }
        Err(RunError::Io(e)) => {
            let _ = writeln!(stderr, "tricav: write error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(
    config: &RunConfig,
    out: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), RunError> {
    match (config.mode, config.params) {
        (Mode::Selftest, _) => run_selftest(out),
        (Mode::Spectrum, Some(params)) | (Mode::Detuning, Some(params)) => {
            let mut tables = Vec::new();
            for variant in config.variant.variants() {
                let table = if config.mode == Mode::Spectrum {
                    sweep_frequency(&params, config.grid, variant, config.route)?
                } else {
                    sweep_detuning(
                        &params,
                        config.grid,
                        config.omega_prime,
                        variant,
                        config.route,
                    )?
                };
                tables.push(table);
            }
            write_csv(out, &tables)?;
            let rows: usize = tables.iter().map(|t| t.rows.len()).sum();
            let _ = writeln!(stderr, "tricav: wrote {rows} rows (route {})", config.route);
            Ok(())
        }
        (Mode::Coeffs, Some(params)) => run_coeffs(&params, config.omega_prime, config.route, out),
        (_, None) => unreachable!("non-selftest configs always carry parameters"),
    }
}

fn run_coeffs(
    params: &SystemParams,
    omega_prime: f64,
    route: TransferRoute,
    out: &mut dyn Write,
) -> Result<(), RunError> {
    let basis = dressed_basis(params)?;
    let populations = steady_populations(&basis);
    let rates = decay_rates(&basis, params.gamma)?;
    let coeffs = gain_loss_matrices(params)?;
    let t = transfer(route, &coeffs, params.kappa, omega_prime)?;
    let a = transfer_cofactor(&coeffs, params.kappa, omega_prime)?;
    let b = transfer_numeric(&coeffs, params.kappa, omega_prime)?;
    write_coeff_dump(
        out,
        &CoeffDump {
            params,
            omega_prime,
            basis: &basis,
            populations: &populations,
            rates: &rates,
            coeffs: &coeffs,
            transfer: &t,
            route: route.as_str(),
            route_discrepancy: selftest::max_relative_diff(&a.d, &b.d),
        },
    )?;
    Ok(())
}

fn run_selftest(out: &mut dyn Write) -> Result<(), RunError> {
    let report = selftest::run();
    for check in &report.checks {
        let tag = if check.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{tag} {}: {}", check.name, check.detail)?;
    }
    writeln!(
        out,
        "selftest: {} passed, {} failed",
        report.passed(),
        report.failed()
    )?;
    match report.failed() {
        0 => Ok(()),
        n => Err(RunError::SelfTest(n)),
    }
}
