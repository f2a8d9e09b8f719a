//! Command-line front end.
//!
//! Exit codes: 0 on success (including findings such as a failed
//! constraint), 1 on usage errors, 2 on bad input data.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::dirac::{hamiltonian_square_symbolic, standard_dirac_set, verify_clifford, verify_dirac_algebra, MetricSignature};
use crate::exactnum::{parse_rational, Cyclotomic};
use crate::linearize::{certify_solution, constraint_system, counting_compatibility, ConstraintKind};
use crate::linmat::{build_gamma_triple, clock_shift, pauli_x, pauli_z, Matrix};
use crate::ncalg::perm_sum;
use crate::numsearch::{search, SearchConfig};
use crate::specdsl;
use crate::CycloMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "nclin", version, about = "Exact and numerical checks for matrix linearizations of x^n + y^n = z^n")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: OutputFormat,
    /// Report timing on stderr.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build and verify the 2x2 matrices for a Pythagorean triple.
    Triple { x: u64, y: u64, z: u64 },
    /// Print the permutation sum of n-k X's and k Y's.
    Permsum { n: u32, k: u32 },
    /// Print the constraint system for power n and the counting verdict.
    Constraints { n: u32 },
    /// Check a matrix pair against the power-n constraints.
    Certify {
        n: u32,
        x: u64,
        y: u64,
        z: u64,
        /// JSON witness file, `builtin:clock3` or `builtin:pauli`.
        #[arg(long)]
        witness: String,
    },
    /// Verify the Dirac alpha/beta algebra and the gamma matrices.
    Dirac,
    /// Minimize the constraint residual numerically.
    Search {
        /// Powers (comma separated).
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<u32>,
        /// Dimensions (comma separated); defaults to d = n.
        #[arg(long, value_delimiter = ',')]
        d: Vec<usize>,
        #[arg(long, default_value_t = 32)]
        restarts: u32,
        #[arg(long, default_value_t = 10_000)]
        max_iters: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Restrict to real matrices.
        #[arg(long)]
        real: bool,
    },
    /// Run a .ncs script.
    Run { file: PathBuf },
}

/// Errors caused by bad input data (exit code 2).
#[derive(Debug)]
pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

/// Witness file layout for `certify`.
#[derive(Debug, Serialize, Deserialize)]
pub struct WitnessFile {
    pub dim: usize,
    pub field: String,
    pub gx: Vec<Vec<String>>,
    pub gy: Vec<Vec<String>>,
}

impl WitnessFile {
    /// Parses the entries and checks them against `dim` and `field`.
    pub fn matrices(&self) -> Result<(CycloMatrix, CycloMatrix), InputError> {
        let order = match self.field.as_str() {
            "rational" => 1,
            other => other
                .strip_prefix("cyclotomic:")
                .and_then(|n| n.parse::<u32>().ok())
                .filter(|&n| n > 0)
                .ok_or_else(|| InputError(format!("unknown field {other:?}")))?,
        };
        let parse = |name: &str, rows: &[Vec<String>]| -> Result<CycloMatrix, InputError> {
            if rows.len() != self.dim {
                return Err(InputError(format!("{name} has {} rows, expected {}", rows.len(), self.dim)));
            }
            let mut out = Vec::with_capacity(rows.len());
            for row in rows {
                let mut parsed = Vec::with_capacity(row.len());
                for text in row {
                    let value = if order == 1 {
                        Cyclotomic::from(parse_rational(text)?)
                    } else {
                        Cyclotomic::from_str(text)?
                    };
                    if value.order() != 1 && value.order() != order {
                        return Err(InputError(format!(
                            "{name} entry {text:?} is outside field {}",
                            self.field
                        )));
                    }
                    parsed.push(value);
                }
                out.push(parsed);
            }
            Matrix::from_rows(out).map_err(|e| InputError(format!("{name}: {e}")))
        };
        Ok((parse("gx", &self.gx)?, parse("gy", &self.gy)?))
    }
}

fn load_witness(spec: &str) -> Result<(CycloMatrix, CycloMatrix), InputError> {
    match spec {
        "builtin:clock3" => Ok(clock_shift(3)?),
        "builtin:pauli" => Ok((pauli_x(), pauli_z())),
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{path}: {e}")))?;
            let file: WitnessFile =
                serde_json::from_str(&text).map_err(|e| InputError(format!("{path}: {e}")))?;
            file.matrices()
        }
    }
}

fn pretty(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn cmd_triple(x: u64, y: u64, z: u64, format: OutputFormat) -> Result<String, InputError> {
    let t = build_gamma_triple(x, y, z)?;
    let checks = t.invariant_checks();
    let all_hold = checks.iter().all(|c| c.holds);
    Ok(match format {
        OutputFormat::Json => pretty(&json!({
            "x": x, "y": y, "z": z,
            "gx": t.gx.to_string_rows(),
            "gy": t.gy.to_string_rows(),
            "gz": t.gz.to_string_rows(),
            "checks": checks,
            "all_hold": all_hold,
        })),
        OutputFormat::Text => {
            let mut out = format!("Pythagorean triple ({x}, {y}, {z})\n");
            out.push_str(&format!("  Gx = {}\n  Gy = {}\n  Gz = {}\n", t.gx, t.gy, t.gz));
            for c in &checks {
                out.push_str(&format!("  [{}] {}\n", if c.holds { "pass" } else { "FAIL" }, c.name));
            }
            out
        }
    })
}

fn cmd_permsum(n: u32, k: u32, format: OutputFormat) -> Result<String, InputError> {
    let p = perm_sum::<crate::Rational>(n, k)?;
    let words: Vec<String> = p.words().iter().map(|w| w.to_string()).collect();
    Ok(match format {
        OutputFormat::Json => pretty(&json!({
            "n": n, "k": k, "poly": p.to_string(), "term_count": words.len(), "words": words,
        })),
        OutputFormat::Text => format!("{p}\n"),
    })
}

fn cmd_constraints(n: u32, format: OutputFormat) -> Result<String, InputError> {
    let system = constraint_system(n)?;
    let verdict = counting_compatibility(n);
    let perm_count = system.perm_sum_constraints().count();
    Ok(match format {
        OutputFormat::Json => {
            let constraints: Vec<_> = system
                .constraints
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name(n),
                        "kind": c.kind,
                        "equation": c.to_string(),
                    })
                })
                .collect();
            pretty(&json!({
                "n": n,
                "constraints": constraints,
                "perm_sum_count": perm_count,
                "condition_count": system.condition_count,
                "unknown_count": system.unknown_count,
                "verdict": verdict,
            }))
        }
        OutputFormat::Text => {
            let mut out = system.render_text();
            let unit = system
                .constraints
                .iter()
                .filter(|c| matches!(c.kind, ConstraintKind::UnitPower { .. }))
                .count();
            out.push_str(&format!(
                "  {unit} unit-power relations, {perm_count} permutation-sum equations\n"
            ));
            out.push_str(&format!(
                "  conditions: {}, unknowns: {}\n  verdict: {}\n",
                system.condition_count, system.unknown_count, verdict.explanation
            ));
            out
        }
    })
}

fn cmd_certify(
    n: u32,
    (x, y, z): (u64, u64, u64),
    witness: &str,
    format: OutputFormat,
) -> Result<String, InputError> {
    let (gx, gy) = load_witness(witness)?;
    let report = certify_solution(n, x, y, z, &gx, &gy)?;
    Ok(match format {
        OutputFormat::Json => pretty(&report),
        OutputFormat::Text => report.render_text(),
    })
}

fn cmd_dirac(format: OutputFormat) -> Result<String, InputError> {
    let set = standard_dirac_set();
    let algebra = verify_dirac_algebra(&set)?;
    let clifford = verify_clifford(&set.gammas()?, &MetricSignature::default())?;
    let h2 = hamiltonian_square_symbolic();
    let all_passed = algebra.all_passed && clifford.all_passed;
    Ok(match format {
        OutputFormat::Json => pretty(&json!({
            "dirac_algebra": algebra,
            "hamiltonian_square": h2.to_string(),
            "clifford": clifford,
            "all_passed": all_passed,
        })),
        OutputFormat::Text => format!(
            "{}(alpha.p + beta*m)^2 = {h2}\n{}",
            algebra.render_text(),
            clifford.render_text()
        ),
    })
}

#[derive(Serialize)]
struct SearchRow {
    n: u32,
    d: usize,
    mode: &'static str,
    best_residual: f64,
    iterations: u32,
    restart: u32,
    seed: u64,
}

fn cmd_search(
    ns: &[u32],
    ds: &[usize],
    restarts: u32,
    max_iters: u32,
    seed: u64,
    real: bool,
    format: OutputFormat,
) -> Result<String, InputError> {
    let mut rows = Vec::new();
    for &n in ns {
        let dims: Vec<usize> = if ds.is_empty() { vec![n as usize] } else { ds.to_vec() };
        for d in dims {
            let config = SearchConfig {
                restarts,
                max_iters,
                real_only: real,
                ..SearchConfig::new(n, d, seed)
            };
            let r = search(&config)?;
            rows.push(SearchRow {
                n,
                d,
                mode: if real { "real" } else { "complex" },
                best_residual: r.residual,
                iterations: r.iterations,
                restart: r.restart,
                seed,
            });
        }
    }
    Ok(match format {
        OutputFormat::Json => pretty(&json!({
            "restarts": restarts,
            "max_iters": max_iters,
            "rows": rows,
        })),
        OutputFormat::Text => {
            let mut out = format!(
                "{:>3} {:>3}  {:<7}  {:>13}  {:>10}  {:>7}  {}\n",
                "n", "d", "mode", "best_residual", "iterations", "restart", "seed"
            );
            for r in &rows {
                out.push_str(&format!(
                    "{:>3} {:>3}  {:<7}  {:>13.6e}  {:>10}  {:>7}  {}\n",
                    r.n, r.d, r.mode, r.best_residual, r.iterations, r.restart, r.seed
                ));
            }
            out
        }
    })
}

fn cmd_run(file: &PathBuf, format: OutputFormat) -> Result<String, InputError> {
    let shown = file.display();
    let text = std::fs::read_to_string(file).map_err(|e| InputError(format!("{shown}: {e}")))?;
    let report = specdsl::run_text(&text).map_err(|e| InputError(format!("{shown}: {e}")))?;
    Ok(match format {
        OutputFormat::Json => pretty(&report),
        OutputFormat::Text => report.render_text(),
    })
}

fn dispatch(cli: &Cli) -> Result<String, InputError> {
    let f = cli.format;
    match &cli.command {
        Command::Triple { x, y, z } => cmd_triple(*x, *y, *z, f),
        Command::Permsum { n, k } => cmd_permsum(*n, *k, f),
        Command::Constraints { n } => cmd_constraints(*n, f),
        Command::Certify { n, x, y, z, witness } => cmd_certify(*n, (*x, *y, *z), witness, f),
        Command::Dirac => cmd_dirac(f),
        Command::Search {
            n,
            d,
            restarts,
            max_iters,
            seed,
            real,
        } => cmd_search(n, d, *restarts, *max_iters, *seed, *real, f),
        Command::Run { file } => cmd_run(file, f),
    }
}

/// Runs the CLI against explicit streams and returns the exit code.
pub fn execute<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                1
            } else {
                // --help and --version
                let _ = write!(out, "{}", e.render());
                0
            };
        }
    };
    let started = Instant::now();
    let code = match dispatch(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    };
    if cli.verbose > 0 {
        let _ = writeln!(err, "elapsed: {:.3?}", started.elapsed());
    }
    code
}
