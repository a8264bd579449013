use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use catcorr_core::monogamy::{find_violation_boundary, full_report, Measure};
use catcorr_core::{ModelParams, Parity};
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use crate::config;
use crate::error::{CliError, Result};
use crate::format::{number, write_all, Format, Table};
use crate::sweep::{self, Axis, SweepSpec};
use crate::verify::{self, Tolerances, VerifyOptions};

/// Monogamy of quantum correlations in damped quasi-Bell cat states.
#[derive(Debug, Parser)]
#[command(name = "catcorr", version, args_override_self = true)]
pub struct Cli {
    /// Output format; `verify` defaults to json, everything else to csv.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads for sweeps and verification (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    /// File of `key = value` lines mirroring the long flags.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every measure and deficit at one parameter point.
    #[command(args_override_self = true)]
    Report(ReportArgs),
    /// A grid of report rows, p-major.
    #[command(args_override_self = true)]
    Sweep(SweepArgs),
    /// Bisect a monogamy deficit for its sign change in p.
    #[command(args_override_self = true)]
    Threshold(ThresholdArgs),
    /// Check every closed form against its matrix-level oracle.
    #[command(args_override_self = true)]
    Verify(VerifyArgs),
}

fn parity(m: u8) -> Parity {
    if m == 0 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

fn parity_arg() -> clap::builder::RangedI64ValueParser<u8> {
    clap::value_parser!(u8).range(0..=1)
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Coherent-state overlap p = exp(-2|α|²).
    #[arg(long, required_unless_present = "alpha", conflicts_with = "alpha")]
    pub p: Option<f64>,
    /// Coherent amplitude |α|, converted to p.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Beam-splitter transmissivity t².
    #[arg(long, default_value_t = 0.5)]
    pub t2: f64,
    /// Parity label m (0 even, 1 odd).
    #[arg(long, default_value_t = 0, value_parser = parity_arg())]
    pub m: u8,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 0.0)]
    pub p_start: f64,
    #[arg(long, default_value_t = 1.0)]
    pub p_end: f64,
    /// Number of overlap values, endpoints included.
    #[arg(long, default_value_t = 21)]
    pub p_steps: usize,
    #[arg(long, default_value_t = 0.0)]
    pub t2_start: f64,
    #[arg(long, default_value_t = 1.0)]
    pub t2_end: f64,
    /// Number of transmissivity values, endpoints included.
    #[arg(long, default_value_t = 11)]
    pub t2_steps: usize,
    #[arg(long, default_value_t = 0, value_parser = parity_arg())]
    pub m: u8,
    /// Append Wootters, minimizer and Bloch-eigen oracle columns.
    #[arg(long)]
    pub oracles: bool,
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeasureArg {
    Tangle,
    Eof,
    Discord,
    Geo,
}

impl From<MeasureArg> for Measure {
    fn from(m: MeasureArg) -> Self {
        match m {
            MeasureArg::Tangle => Measure::Tangle,
            MeasureArg::Eof => Measure::Eof,
            MeasureArg::Discord => Measure::Discord,
            MeasureArg::Geo => Measure::Geo,
        }
    }
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    #[arg(long, value_enum)]
    pub measure: MeasureArg,
    #[arg(long, default_value_t = 0, value_parser = parity_arg())]
    pub m: u8,
    #[arg(long, default_value_t = 0.5)]
    pub t2: f64,
    /// Search interval in p, as `lo,hi` or `lo hi`.
    #[arg(long, num_args = 1..=2, value_delimiter = ',', default_values_t = [0.01, 0.99])]
    pub bracket: Vec<f64>,
    /// Width of the final bisection interval.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Overlap values in the grid; transmissivity gets ⌈grid/2⌉ + 1.
    #[arg(long, default_value_t = 19, value_parser = clap::value_parser!(u32).range(1..=200))]
    pub grid: u32,
    #[arg(long, default_value_t = 1e-10)]
    pub concurrence_tol: f64,
    #[arg(long, default_value_t = 1e-5)]
    pub discord_tol: f64,
    #[arg(long, default_value_t = 1e-10)]
    pub geometric_tol: f64,
    #[arg(long, default_value_t = 1e-8)]
    pub sphere_tol: f64,
    #[arg(long, default_value_t = 1e-10)]
    pub koashi_winter_tol: f64,
    #[arg(long, default_value_t = 1e-10)]
    pub spectrum_tol: f64,
    /// Add a side-by-side comparison with the originally published formulas.
    #[arg(long)]
    pub paper_verbatim: bool,
}

fn report(args: &ReportArgs, format: Format) -> Result<String> {
    let m = parity(args.m);
    let params = match (args.p, args.alpha) {
        (Some(p), _) => ModelParams::new(p, m, args.t2)?,
        (None, Some(alpha)) => ModelParams::from_alpha(alpha, m, args.t2)?,
        (None, None) => unreachable!("clap requires one of --p or --alpha"),
    };
    let mut table = Table::new(sweep::COLUMNS.iter().map(|s| s.to_string()).collect());
    table.rows.push(sweep::report_row(&full_report(&params)));
    Ok(match format {
        Format::Csv => table.to_csv(),
        Format::Json => {
            let mut s = table.row_json(0);
            s.push('\n');
            s
        }
    })
}

fn sweep(args: &SweepArgs, format: Format, out: &mut dyn Write) -> Result<()> {
    let spec = SweepSpec {
        p: Axis::new(args.p_start, args.p_end, args.p_steps)?,
        t2: Axis::new(args.t2_start, args.t2_end, args.t2_steps)?,
        parity: parity(args.m),
        include_oracles: args.oracles,
    };
    let text = sweep::run(&spec)?.render(format);
    match &args.output {
        Some(path) => {
            let file = File::create(path).map_err(|e| CliError::io(path, e))?;
            let mut w = BufWriter::new(file);
            write_all(&mut w, &text).map_err(|e| CliError::io(path, e))
        }
        None => write_all(out, &text).map_err(|e| CliError::io("<stdout>", e)),
    }
}

fn threshold(args: &ThresholdArgs, format: Format) -> Result<String> {
    let measure = Measure::from(args.measure);
    let [lo, hi] = args.bracket[..] else {
        return Err(CliError::Invalid(format!(
            "--bracket needs exactly two values, got {}",
            args.bracket.len()
        )));
    };
    let bracket = (lo, hi);
    let b = find_violation_boundary(measure, parity(args.m), args.t2, bracket, args.tol)?;
    let fields = [
        ("measure", format!("\"{}\"", measure.name()), measure.name().to_owned()),
        ("m", args.m.to_string(), args.m.to_string()),
        ("t2", number(args.t2), number(args.t2)),
        ("p", number(b.p), number(b.p)),
        ("residual", number(b.residual), number(b.residual)),
    ];
    Ok(match format {
        Format::Csv => {
            let header: Vec<&str> = fields.iter().map(|f| f.0).collect();
            let values: Vec<&str> = fields.iter().map(|f| f.2.as_str()).collect();
            format!("{}\n{}\n", header.join(","), values.join(","))
        }
        Format::Json => {
            let body: Vec<String> = fields.iter().map(|f| format!("\"{}\": {}", f.0, f.1)).collect();
            format!("{{{}}}\n", body.join(", "))
        }
    })
}

fn verify(args: &VerifyArgs, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let options = VerifyOptions {
        grid: args.grid as usize,
        tolerances: Tolerances {
            concurrence: args.concurrence_tol,
            discord: args.discord_tol,
            geometric: args.geometric_tol,
            sphere: args.sphere_tol,
            koashi_winter: args.koashi_winter_tol,
            spectrum: args.spectrum_tol,
        },
        paper_verbatim: args.paper_verbatim,
    };
    let summary = verify::run(&options)?;
    write_all(out, &summary.render(format)).map_err(|e| CliError::io("<stdout>", e))?;
    let failing = summary.failing();
    if failing.is_empty() {
        return Ok(());
    }
    for check in &failing {
        let _ = writeln!(err, "FAIL {} (max residual {:e} > {:e})", check.name, check.max_residual, check.tolerance);
        for cell in &check.failures {
            let _ = writeln!(err, "  p={} t2={} m={} residual={:e}", cell.p, cell.t2, cell.m, cell.residual);
        }
    }
    let names: Vec<&str> = failing.iter().map(|c| c.name).collect();
    Err(CliError::VerifyFailed(names.join(", ")))
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let text = match &cli.command {
        Command::Report(a) => report(a, cli.format.unwrap_or(Format::Csv))?,
        Command::Threshold(a) => threshold(a, cli.format.unwrap_or(Format::Csv))?,
        Command::Sweep(a) => return sweep(a, cli.format.unwrap_or(Format::Csv), out),
        Command::Verify(a) => return verify(a, cli.format.unwrap_or(Format::Json), out, err),
    };
    write_all(out, &text).map_err(|e| CliError::io("<stdout>", e))
}

fn execute(cli: &Cli, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Result<()> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = cli.jobs {
        builder = builder.num_threads(usize::from(jobs));
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Invalid(format!("cannot start {} worker threads: {e}", cli.jobs.unwrap_or(0))))?;
    pool.install(|| dispatch(cli, out, err))
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let command = Cli::command();
    let fail = |e: CliError, err: &mut (dyn Write + Send)| {
        let _ = writeln!(err, "error: {e}");
        e.exit_code()
    };
    let args = match config::expand(args, &command) {
        Ok(a) => a,
        Err(e) => return fail(e, err),
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return u8::try_from(e.exit_code()).unwrap_or(2);
        }
    };
    match execute(&cli, out, err) {
        Ok(()) => 0,
        Err(e) => fail(e, err),
    }
}
