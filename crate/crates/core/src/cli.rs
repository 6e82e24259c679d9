//! Command-line front end. The binary only forwards `std::env::args` here.
//!
//! Exit codes: 0 on success, 1 on usage errors and I/O failures, 2 when
//! inputs fail validation or `validate` finds a failing check.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::events::{find_dark_period_with_step, find_death_time_with_step, SCAN_STEP};
use crate::figures::{generate, Figure};
use crate::params::{BathParams, RegimeKind, Squeeze};
use crate::sweep::{format_value, run_sweep, Quantity, SweepSpec, SweepTable, DEFAULT_STEPS};
use crate::validate::run_all;

#[derive(Debug, Parser)]
#[command(name = "dcl", version, about = "Quantum-correlation dynamics of two particles in Caldeira-Leggett baths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate quantities on a time grid for every parameter tuple.
    Sweep(Params),
    /// Regenerate the data behind one of the figures.
    Figure {
        /// fig1 .. fig8
        #[arg(value_parser = parse_figure)]
        name: Figure,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sudden-death time in separate baths.
    DeathTime(Params),
    /// First dark period of entanglement in a shared bath.
    DarkPeriod(Params),
    /// Run the oracle cross-checks.
    Validate,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct Params {
    #[arg(long, value_parser = parse_regime)]
    regime: Vec<RegimeKind>,
    #[arg(long)]
    gamma: Vec<f64>,
    #[arg(long)]
    temp: Vec<f64>,
    #[arg(long)]
    squeeze: Vec<f64>,
    #[arg(long)]
    t_max: Option<f64>,
    /// Grid points for sweeps.
    #[arg(long)]
    steps: Option<usize>,
    /// Grid spacing of event scans.
    #[arg(long)]
    scan_step: Option<f64>,
    #[arg(long, value_parser = parse_quantity)]
    quantity: Vec<Quantity>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Flat key=value file; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
}

fn parse_regime(s: &str) -> std::result::Result<RegimeKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_quantity(s: &str) -> std::result::Result<Quantity, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_figure(s: &str) -> std::result::Result<Figure, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Flags merged over the config file merged over defaults.
struct Resolved {
    regimes: Vec<RegimeKind>,
    gammas: Vec<f64>,
    temps: Vec<f64>,
    squeezes: Vec<f64>,
    t_max: f64,
    steps: usize,
    scan_step: f64,
    quantities: Vec<Quantity>,
    out: Option<PathBuf>,
}

fn from_config<T: std::str::FromStr>(cfg: &Config, key: &'static str) -> Result<Vec<T>> {
    cfg.list(key)
        .iter()
        .map(|v| {
            v.parse().map_err(|_| Error::InvalidParams {
                name: key,
                reason: format!("cannot parse `{v}` in config"),
            })
        })
        .collect()
}

fn pick<T: Clone>(flags: Vec<T>, cfg: Vec<T>, default: &[T]) -> Vec<T> {
    if !flags.is_empty() {
        flags
    } else if !cfg.is_empty() {
        cfg
    } else {
        default.to_vec()
    }
}

fn pick_one<T: Clone>(flag: Option<T>, cfg: Vec<T>, default: T) -> T {
    flag.or_else(|| cfg.last().cloned()).unwrap_or(default)
}

impl Params {
    fn resolve(self, default_t_max: f64) -> Result<Resolved> {
        let cfg = match &self.config {
            Some(path) => Config::load(path)?,
            None => Config::default(),
        };
        Ok(Resolved {
            regimes: pick(self.regime, from_config(&cfg, "regime")?, &[RegimeKind::Common]),
            gammas: pick(self.gamma, from_config(&cfg, "gamma")?, &[0.1]),
            temps: pick(self.temp, from_config(&cfg, "temp")?, &[10.0]),
            squeezes: pick(self.squeeze, from_config(&cfg, "squeeze")?, &[0.0]),
            t_max: pick_one(self.t_max, from_config(&cfg, "t-max")?, default_t_max),
            steps: pick_one(self.steps, from_config(&cfg, "steps")?, DEFAULT_STEPS),
            scan_step: pick_one(self.scan_step, from_config(&cfg, "scan-step")?, SCAN_STEP),
            quantities: pick(self.quantity, from_config(&cfg, "quantity")?, &[Quantity::Coherence]),
            out: self.out.or_else(|| cfg.single("out").map(PathBuf::from)),
        })
    }
}

/// Parses `args` (program name first) and runs the command. Returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidParams { .. } | Error::OverflowDomain { .. } | Error::Config { .. } => 2,
                _ => 1,
            }
        }
    }
}

fn emit(table: &SweepTable, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => table.write_to_path(path),
        None => table.write_csv(std::io::stdout().lock()),
    }
}

fn emit_rows(header: &[&str], rows: &[Vec<String>], out: Option<&PathBuf>) -> Result<()> {
    let sink: Box<dyn Write> = match out {
        Some(path) => Box::new(std::io::BufWriter::new(std::fs::File::create(path)?)),
        None => Box::new(std::io::stdout().lock()),
    };
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

fn opt(v: Option<f64>) -> String {
    v.map(format_value).unwrap_or_default()
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Sweep(params) => {
            let r = params.resolve(10.0)?;
            let spec = SweepSpec::product(&r.quantities, &r.regimes, &r.squeezes, &r.gammas, &r.temps, r.t_max, r.steps);
            emit(&run_sweep(&spec)?, r.out.as_ref())?;
        }
        Command::Figure { name, out } => emit(&generate(name)?, out.as_ref())?,
        Command::DeathTime(params) => {
            let r = params.resolve(10.0)?;
            let mut rows = Vec::new();
            for &s in &r.squeezes {
                for &g in &r.gammas {
                    for &temp in &r.temps {
                        let bath = BathParams::new(g, temp)?;
                        let (status, time) =
                            match find_death_time_with_step(Squeeze::new(s)?, bath, r.t_max, r.scan_step) {
                                Ok(rep) if rep.never_entangled => ("separable", rep.death_time),
                                Ok(rep) => ("death", rep.death_time),
                                Err(Error::NoDeath { .. }) => ("no-death", None),
                                Err(e) => return Err(e),
                            };
                        rows.push(vec![s.to_string(), g.to_string(), temp.to_string(), status.into(), opt(time)]);
                    }
                }
            }
            emit_rows(&["s", "gamma", "T", "status", "death_time"], &rows, r.out.as_ref())?;
        }
        Command::DarkPeriod(params) => {
            let r = params.resolve(20.0)?;
            let mut rows = Vec::new();
            for &s in &r.squeezes {
                for &g in &r.gammas {
                    for &temp in &r.temps {
                        let bath = BathParams::new(g, temp)?;
                        let rep = find_dark_period_with_step(Squeeze::new(s)?, bath, r.t_max, r.scan_step)?;
                        let status = if rep.never_entangled {
                            "never-entangled"
                        } else if rep.dark_period.is_some() {
                            "dark-period"
                        } else if rep.death_time.is_some() {
                            "death"
                        } else {
                            "entangled"
                        };
                        rows.push(vec![
                            s.to_string(),
                            g.to_string(),
                            temp.to_string(),
                            status.into(),
                            opt(rep.dark_period.map(|d| d.0)),
                            opt(rep.dark_period.map(|d| d.1)),
                            opt(rep.death_time),
                        ]);
                    }
                }
            }
            emit_rows(&["s", "gamma", "T", "status", "t_off", "t_on", "death_time"], &rows, r.out.as_ref())?;
        }
        Command::Validate => {
            let checks = run_all()?;
            let mut failed = false;
            for c in &checks {
                let tag = if c.passed() { "PASS" } else { "FAIL" };
                failed |= !c.passed();
                println!("{tag} {} error={:.3e} tolerance={:.0e}", c.name, c.error, c.tolerance);
            }
            return Ok(if failed { 2 } else { 0 });
        }
    }
    Ok(0)
}
