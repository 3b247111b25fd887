use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use vacuum_amp::{parse_config, resolve_out_dir, run_all, sweep, write_sweep, Kind};

/// Vacuum amplification scenarios: parametric amplifiers, Unruh and Hawking
/// radiation, the dynamical Casimir effect and SQUID analogue horizons.
#[derive(Parser)]
#[command(name = "vacuum-amp", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every scenario of a config file.
    Run {
        config: PathBuf,
        /// Output directory (default: $VACUUM_AMP_OUT, then ./vacuum-amp-out).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Scenarios run in parallel.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Rerun scenarios with one numeric parameter stepped through a list.
    Sweep {
        config: PathBuf,
        /// Parameter to vary.
        #[arg(long)]
        axis: String,
        /// Comma-separated values; may be empty.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_values)]
        values: Values,
        /// Only sweep the scenario with this name.
        #[arg(long)]
        scenario: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Sweep points run in parallel.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// List the scenario kinds.
    ListKinds,
}

#[derive(Clone)]
struct Values(Vec<f64>);

fn parse_values(s: &str) -> Result<Values, String> {
    s.split(',')
        .map(str::trim)
        .filter(|v| !v.is_empty())
        .map(|v| v.parse::<f64>().map_err(|e| format!("{v:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(Values)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::ListKinds => {
            for k in Kind::ALL {
                println!("{:<14} {}", k.as_str(), k.summary());
            }
            ExitCode::SUCCESS
        }
        Command::Run { config, out, jobs } => {
            let scenarios = match parse_config(&config) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let dir = resolve_out_dir(out.as_deref());
            let reports = match run_all(&scenarios, &dir, jobs) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: writing to {}: {e}", dir.display());
                    return ExitCode::from(2);
                }
            };
            let mut ok = true;
            for r in &reports {
                println!("{}", r.summary_line());
                eprintln!("  {} finished in {:.3} s", r.scenario, r.wall_time);
                ok &= r.passed();
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Command::Sweep { config, axis, values, scenario, out, jobs } => {
            let scenarios = match parse_config(&config) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let selected: Vec<_> = scenarios.iter().filter(|s| scenario.as_ref().is_none_or(|n| &s.name == n)).collect();
            if selected.is_empty() {
                eprintln!("error: no scenario named {}", scenario.unwrap_or_default());
                return ExitCode::from(2);
            }
            let dir = resolve_out_dir(out.as_deref());
            let mut ok = true;
            for s in selected {
                let points = match sweep(s, &axis, &values.0, jobs) {
                    Ok(p) => p,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(2);
                    }
                };
                if let Err(e) = write_sweep(s, &axis, &points, &dir) {
                    eprintln!("error: writing to {}: {e}", dir.display());
                    return ExitCode::from(2);
                }
                for p in &points {
                    println!("{} = {}: {}", axis, p.value, p.report.summary_line());
                    ok &= p.report.passed();
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
