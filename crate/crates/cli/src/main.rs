//! `detflow`: large-`x` determinant sweeps, the `t`-derivative check and the
//! acceptance self-test.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on errors
//! (bad configuration, I/O).

use clap::{Parser, Subcommand};
use detlab::detflow::{self, criteria, SweepConfig};
use num_complex::Complex64;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "detflow", version, about = "Fredholm determinant sweeps and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the determinant sweep over `x_list` and write CSV plus summary.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// Overrides `output` from the config file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare three evaluations of the t-derivative of ln det(I+V_t).
    Dtcheck {
        #[arg(long)]
        config: PathBuf,
        /// Base point `re,im`.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        t0: Complex64,
        /// Finite-difference step.
        #[arg(long)]
        h: f64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the acceptance criteria and print one line per criterion.
    Selftest {
        /// Also write the lines to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |p: &str| p.parse::<f64>().map_err(|e| format!("'{p}': {e}"));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("expected 're,im', got '{s}'")),
    }
}

/// Resolve the output path and make sure it can be written before any work.
fn output_path(cli: Option<PathBuf>, cfg: &SweepConfig) -> Result<PathBuf, String> {
    let path = cli.or_else(|| cfg.output.clone()).ok_or("no output path: set `output` in the config or pass --output")?;
    std::fs::File::create(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(path)
}

fn load(path: &Path) -> Result<SweepConfig, String> {
    SweepConfig::load(path).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Sweep { config, output } => {
            let cfg = load(&config)?;
            let path = output_path(output, &cfg)?;
            let report = detflow::theorem1_sweep(&cfg).map_err(|e| e.to_string())?;
            let ok = detflow::emit_sweep(&report, &path).map_err(|e| e.to_string())?;
            print!("{}", std::fs::read_to_string(detflow::companion(&path, "summary.txt")).unwrap_or_default());
            Ok(ok)
        }
        Command::Dtcheck { config, t0, h, output } => {
            let cfg = load(&config)?;
            let path = output_path(output, &cfg)?;
            let report = detflow::dt_logdet_check(&cfg, t0, h).map_err(|e| e.to_string())?;
            let ok = detflow::emit_dt(&report, &path).map_err(|e| e.to_string())?;
            print!("{}", std::fs::read_to_string(detflow::companion(&path, "summary.txt")).unwrap_or_default());
            Ok(ok)
        }
        Command::Selftest { output } => {
            let mut text = String::new();
            let mut ok = true;
            for r in criteria::all() {
                ok &= r.pass();
                text.push_str(&r.line());
                text.push('\n');
                for i in &r.info {
                    text.push_str("    info ");
                    text.push_str(i);
                    text.push('\n');
                }
            }
            print!("{text}");
            if let Some(p) = output {
                std::fs::write(&p, &text).map_err(|e| format!("{}: {e}", p.display()))?;
            }
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
