mod output;

use std::io::Write;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{CommandFactory, Parser, Subcommand};

use runcount_core::closed_form::psi_polys;
use runcount_core::genfun::{delta, phi_s_poly, u_s_series};
use runcount_core::verify::{run_battery, Corruption, VerifyConfig};
use runcount_core::{Error, MethodRegistry};

use output::Format;

/// Permutations counted by number of runs.
#[derive(Debug, Parser)]
#[command(name = "runcount", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the triangle P(n, s) for 2 <= n <= n-max.
    Table {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        /// One of: brute, closed, recurrence, series.
        #[arg(long, default_value = "recurrence")]
        method: String,
    },
    /// Print the closed-form polynomials psi_0 .. psi_{i-max}.
    Psi {
        #[arg(long, default_value_t = 10)]
        i_max: u32,
    },
    /// Print the generating-function numerator and factored denominator for one s.
    Phi {
        #[arg(long)]
        s: u32,
    },
    /// Print the series coefficients of the generating function for one s.
    Series {
        #[arg(long)]
        s: u32,
        #[arg(long, default_value_t = 30)]
        order: usize,
    },
    /// Run the verification battery.
    Verify {
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[arg(long, default_value_t = 10)]
        s_max: usize,
        #[arg(long, default_value_t = 10)]
        i_max: usize,
        #[arg(long, default_value_t = 20)]
        k_max: usize,
        /// Perturb one coefficient before checking (test hook).
        #[arg(long, hide = true, value_parser = Corruption::from_str)]
        corrupt: Vec<Corruption>,
    },
}

fn usage_error(msg: impl std::fmt::Display) -> ! {
    Cli::command()
        .error(clap::error::ErrorKind::ValueValidation, msg)
        .exit()
}

/// Domain errors are the caller's fault; anything else is a failed computation.
fn fail(err: Error) -> ExitCode {
    if let Error::OutOfDomain(msg) = err {
        usage_error(msg);
    }
    eprintln!("error: {err}");
    ExitCode::from(1)
}

fn emit(text: &str) -> ExitCode {
    let mut out = std::io::stdout().lock();
    // A closed pipe is not an error worth reporting.
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match cli.command {
        Command::Table { n_max, method } => {
            let registry = MethodRegistry::default();
            if registry.get(&method).is_none() {
                usage_error(format!(
                    "unknown method `{method}` (known: {})",
                    registry.names().join(", ")
                ));
            }
            match registry.triangle(&method, n_max) {
                Ok(t) => emit(&output::render_triangle(&t, &method, format)),
                Err(e) => fail(e),
            }
        }
        Command::Psi { i_max } => emit(&output::render_psi(&psi_polys(i_max), format)),
        Command::Phi { s } => {
            if s < 1 {
                usage_error("--s must be >= 1");
            }
            match phi_s_poly(s) {
                Ok(p) => emit(&output::render_phi(s, &p, &delta(s), format)),
                Err(e) => fail(e),
            }
        }
        Command::Series { s, order } => {
            if s < 1 {
                usage_error("--s must be >= 1");
            }
            match u_s_series(s, order) {
                Ok(series) => emit(&output::render_series(s, &series, format)),
                Err(e) => fail(e),
            }
        }
        Command::Verify {
            n_max,
            s_max,
            i_max,
            k_max,
            corrupt,
        } => {
            let cfg = VerifyConfig {
                n_max,
                s_max,
                i_max,
                k_max,
            };
            if let Err(e) = cfg.validate() {
                usage_error(e);
            }
            let report = match run_battery(&cfg, &corrupt) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            emit(&output::render_report(&report, format));
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed: {}", report.failed().join(", "));
                ExitCode::from(1)
            }
        }
    }
}
