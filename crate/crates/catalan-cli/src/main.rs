//! Command-line front end: identity sweeps, representation evaluation,
//! representation benchmarks, weight-function CSV emission, and f1/f2
//! intersection finding.
//!
//! Exit codes: 0 success, 1 verification/convergence failure, 2 usage error,
//! 3 I/O error.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use catalan_core::exact::{self, ExactError, Identity};
use catalan_core::quadrature::{QuadratureError, Tolerance};
use catalan_core::representations::{
    evaluate_representation, evaluate_weight, find_f_intersection, RepId, RepresentationError,
    WeightId,
};
use output::{render, Cell, Column, Format};

/// First sample used for the f-family when the requested range starts at 0;
/// the weights are continuous there, so this only avoids emitting t = 0
/// itself for a family used on the open half-line.
const F_RANGE_EPSILON: f64 = 1e-12;

#[derive(Parser)]
#[command(
    name = "catalan",
    version,
    about = "Exact Catalan-number identities and their integral representations",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep an exact identity over [floor, max-n]; exit 0 only if every n passes.
    Verify {
        /// Identity to check: touchard (floor 0) or callan (floor 2).
        #[arg(long)]
        identity: IdentityArg,
        /// Upper end of the sweep (inclusive).
        #[arg(long)]
        max_n: u32,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Evaluate one integral representation against exact Catalan numbers.
    Eval {
        /// Representation id: R0, R1, R2, B0, B1 or B2.
        #[arg(long)]
        rep: String,
        /// Single n to evaluate (exclusive with --max-n).
        #[arg(long)]
        n: Option<u32>,
        /// Evaluate every n from the representation's floor to this value.
        #[arg(long)]
        max_n: Option<u32>,
        #[command(flatten)]
        tol: TolArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Evaluate several representations at one n and compare cost/accuracy.
    Compare {
        #[arg(long)]
        n: u32,
        /// Comma-separated representation ids, or "all".
        #[arg(long, default_value = "all")]
        reps: String,
        #[command(flatten)]
        tol: TolArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Emit uniformly sampled weight-function values (CSV columns t,w1,w2,w3).
    Weights {
        /// Weight family: f (half-line) or g (symmetric interval).
        #[arg(long)]
        family: FamilyArg,
        /// Weight-function order; the index-3 member needs n > 1.
        #[arg(long)]
        n: u32,
        /// Number of uniformly spaced samples.
        #[arg(long, default_value_t = 400)]
        samples: u32,
        /// Sample range lo:hi (f-family only; defaults to 0:3 with the first
        /// point nudged off 0; the g-family range is fixed to -1:1).
        #[arg(long)]
        range: Option<String>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Locate the f1/f2 crossing: sign-change count plus refined roots.
    Intersect {
        #[arg(long)]
        n: u32,
        /// Scan bracket lo:hi; defaults to 1e-6:10.
        #[arg(long)]
        range: Option<String>,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IdentityArg {
    Touchard,
    Callan,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    F,
    G,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
    Jsonl,
}

#[derive(Args)]
struct TolArgs {
    /// Absolute tolerance (default 1e-12).
    #[arg(long)]
    tol_abs: Option<f64>,
    /// Relative tolerance (default 1e-10).
    #[arg(long)]
    tol_rel: Option<f64>,
    /// Integrand evaluation budget (default 1000000).
    #[arg(long)]
    max_evals: Option<u32>,
}

impl TolArgs {
    fn tolerance(&self) -> Tolerance {
        let mut tol = Tolerance::default();
        if let Some(abs_tol) = self.tol_abs {
            tol.abs_tol = abs_tol;
        }
        if let Some(rel_tol) = self.tol_rel {
            tol.rel_tol = rel_tol;
        }
        if let Some(max_evaluations) = self.max_evals {
            tol.max_evaluations = max_evaluations;
        }
        tol
    }
}

#[derive(Args)]
struct OutArgs {
    /// Write output to this path instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
}

impl OutArgs {
    fn format(&self) -> Format {
        match self.format {
            FormatArg::Table => Format::Table,
            FormatArg::Csv => Format::Csv,
            FormatArg::Jsonl => Format::Jsonl,
        }
    }
}

enum CmdError {
    Usage(String),
    Failed(String),
    Io { path: PathBuf, message: String },
}

impl CmdError {
    fn exit_code(&self) -> u8 {
        match self {
            CmdError::Failed(_) => 1,
            CmdError::Usage(_) => 2,
            CmdError::Io { .. } => 3,
        }
    }
}

fn usage(err: ExactError) -> CmdError {
    CmdError::Usage(err.to_string())
}

fn map_representation_error(err: RepresentationError) -> CmdError {
    match err {
        RepresentationError::Domain { .. }
        | RepresentationError::Unsupported { .. }
        | RepresentationError::OutOfRange { .. }
        | RepresentationError::InvalidBracket { .. } => CmdError::Usage(err.to_string()),
        RepresentationError::NoBracket { .. } => CmdError::Failed(err.to_string()),
        RepresentationError::Quadrature(q) => match q {
            QuadratureError::NonFiniteSample { .. } => CmdError::Failed(q.to_string()),
            QuadratureError::InvalidInterval { .. } | QuadratureError::InvalidTolerance => {
                CmdError::Usage(q.to_string())
            }
        },
    }
}

fn parse_range(spec: &str) -> Result<(f64, f64), CmdError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let err = || CmdError::Usage(format!("expected --range lo:hi, got \"{spec}\""));
    if parts.len() != 2 {
        return Err(err());
    }
    let lo: f64 = parts[0].parse().map_err(|_| err())?;
    let hi: f64 = parts[1].parse().map_err(|_| err())?;
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(err());
    }
    Ok((lo, hi))
}

fn parse_reps(spec: &str) -> Result<Vec<RepId>, CmdError> {
    if spec.eq_ignore_ascii_case("all") {
        return Ok(RepId::ALL.to_vec());
    }
    let mut reps = Vec::new();
    for part in spec.split(',') {
        let id: RepId = part
            .trim()
            .parse()
            .map_err(|_| CmdError::Usage(format!("unknown representation \"{part}\"")))?;
        if !reps.contains(&id) {
            reps.push(id);
        }
    }
    if reps.is_empty() {
        return Err(CmdError::Usage("no representations selected".into()));
    }
    reps.sort();
    Ok(reps)
}

fn emit(out: &OutArgs, columns: &[Column], rows: &[Vec<Cell>]) -> Result<(), CmdError> {
    let text = render(out.format(), columns, rows);
    match &out.out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text).map_err(|e| CmdError::Io {
            path: path.clone(),
            message: e.to_string(),
        }),
    }
}

fn cmd_verify(identity: IdentityArg, max_n: u32, out: &OutArgs) -> Result<u8, CmdError> {
    let identity = match identity {
        IdentityArg::Touchard => Identity::Touchard,
        IdentityArg::Callan => Identity::Callan,
    };
    let report = exact::verify_identity(identity, identity.n_floor(), max_n).map_err(usage)?;
    let columns = [
        Column::new("identity"),
        Column::new("n_min"),
        Column::new("n_max"),
        Column::new("checked"),
        Column::new("failures"),
        Column::new("all_passed"),
    ];
    let rows = vec![vec![
        Cell::Text(report.identity.to_string()),
        Cell::Uint(report.n_min.into()),
        Cell::Uint(report.n_max.into()),
        Cell::Uint(report.checked()),
        Cell::Uint(report.failures.len() as u64),
        Cell::Bool(report.all_passed()),
    ]];
    emit(out, &columns, &rows)?;
    for failure in report.failures.iter().take(10) {
        eprintln!(
            "mismatch at n = {}: lhs {} != rhs {}",
            failure.n, failure.lhs, failure.rhs
        );
    }
    Ok(u8::from(!report.all_passed()))
}

const EVAL_COLUMNS: [Column; 7] = [
    Column::new("rep"),
    Column::new("n"),
    Column::new("exact"),
    Column::new("estimate"),
    Column::new("rel_error"),
    Column::new("evaluations"),
    Column::new("converged"),
];

fn eval_row(id: RepId, n: u32, tol: &Tolerance) -> Result<(Vec<Cell>, bool), CmdError> {
    let rec = evaluate_representation(id, n, tol).map_err(map_representation_error)?;
    let converged = rec.quadrature.converged;
    Ok((
        vec![
            Cell::Text(id.to_string()),
            Cell::Uint(n.into()),
            Cell::Big(rec.exact.to_string()),
            Cell::Float(rec.estimate),
            Cell::Float(rec.rel_error),
            Cell::Uint(rec.quadrature.evaluations.into()),
            Cell::Bool(converged),
        ],
        converged,
    ))
}

fn cmd_eval(
    rep: &str,
    n: Option<u32>,
    max_n: Option<u32>,
    tol: &TolArgs,
    out: &OutArgs,
) -> Result<u8, CmdError> {
    let id: RepId = rep
        .parse()
        .map_err(|_| CmdError::Usage(format!("unknown representation \"{rep}\"")))?;
    let tolerance = tol.tolerance();
    let range = match (n, max_n) {
        (Some(n), None) => n..=n,
        (None, Some(max_n)) => id.n_min()..=max_n,
        _ => {
            return Err(CmdError::Usage(
                "exactly one of --n or --max-n is required".into(),
            ))
        }
    };
    if range.is_empty() {
        return Err(CmdError::Usage(format!(
            "--max-n must be at least {} for {id}",
            id.n_min()
        )));
    }
    let mut rows = Vec::new();
    let mut all_converged = true;
    for n in range {
        let (row, converged) = eval_row(id, n, &tolerance)?;
        rows.push(row);
        all_converged &= converged;
    }
    emit(out, &EVAL_COLUMNS, &rows)?;
    Ok(u8::from(!all_converged))
}

fn cmd_compare(n: u32, reps: &str, tol: &TolArgs, out: &OutArgs) -> Result<u8, CmdError> {
    let reps = parse_reps(reps)?;
    for id in &reps {
        if n < id.n_min() {
            return Err(CmdError::Usage(format!(
                "{id} requires n >= {}, got n = {n}",
                id.n_min()
            )));
        }
    }
    let tolerance = tol.tolerance();
    let columns = [
        Column::new("rep"),
        Column::new("n"),
        Column::new("exact"),
        Column::new("estimate"),
        Column::new("rel_error"),
        Column::new("evaluations"),
        Column::new("converged"),
        Column::table_only("wall_time_ms"),
    ];
    let mut rows = Vec::new();
    let mut all_converged = true;
    for id in reps {
        let start = Instant::now();
        let (mut row, converged) = eval_row(id, n, &tolerance)?;
        let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        row.push(Cell::Text(format!("{elapsed_ms:.3}")));
        rows.push(row);
        all_converged &= converged;
    }
    emit(out, &columns, &rows)?;
    Ok(u8::from(!all_converged))
}

fn cmd_weights(
    family: FamilyArg,
    n: u32,
    samples: u32,
    range: Option<&str>,
    out: &OutArgs,
) -> Result<u8, CmdError> {
    if samples < 2 {
        return Err(CmdError::Usage("--samples must be at least 2".into()));
    }
    let (ids, lo, hi) = match family {
        FamilyArg::F => {
            let (lo, hi) = match range {
                Some(spec) => parse_range(spec)?,
                None => (0.0, 3.0),
            };
            if lo < 0.0 {
                return Err(CmdError::Usage(
                    "f-family weights are sampled on [0, inf)".into(),
                ));
            }
            (WeightId::F_FAMILY, lo, hi)
        }
        FamilyArg::G => {
            if range.is_some() {
                return Err(CmdError::Usage(
                    "the g-family range is fixed to -1:1".into(),
                ));
            }
            (WeightId::G_FAMILY, -1.0, 1.0)
        }
    };

    let columns = [
        Column::new("t"),
        Column::new("w1"),
        Column::new("w2"),
        Column::new("w3"),
    ];
    let step = (hi - lo) / f64::from(samples - 1);
    let mut rows = Vec::new();
    for i in 0..samples {
        let mut t = if i == samples - 1 {
            hi
        } else {
            lo + step * f64::from(i)
        };
        if matches!(family, FamilyArg::F) && t <= 0.0 {
            t = F_RANGE_EPSILON;
        }
        let mut row = Vec::with_capacity(4);
        row.push(Cell::Float(t));
        for id in ids {
            let value = evaluate_weight(id, n, t).map_err(map_representation_error)?;
            row.push(Cell::Float(value));
        }
        rows.push(row);
    }
    emit(out, &columns, &rows)?;
    Ok(0)
}

fn cmd_intersect(n: u32, range: Option<&str>, out: &OutArgs) -> Result<u8, CmdError> {
    let (lo, hi) = match range {
        Some(spec) => parse_range(spec)?,
        None => (1e-6, 10.0),
    };
    let scan = find_f_intersection(n, lo, hi, 1e-10).map_err(map_representation_error)?;
    let columns = [
        Column::new("n"),
        Column::new("t_star"),
        Column::new("residual"),
        Column::new("sign_changes"),
    ];
    let rows: Vec<Vec<Cell>> = scan
        .roots
        .iter()
        .map(|root| {
            vec![
                Cell::Uint(n.into()),
                Cell::Float(root.t),
                Cell::Float(root.residual),
                Cell::Uint(scan.sign_changes() as u64),
            ]
        })
        .collect();
    emit(out, &columns, &rows)?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, CmdError> {
    match &cli.command {
        Command::Verify {
            identity,
            max_n,
            out,
        } => cmd_verify(*identity, *max_n, out),
        Command::Eval {
            rep,
            n,
            max_n,
            tol,
            out,
        } => cmd_eval(rep, *n, *max_n, tol, out),
        Command::Compare { n, reps, tol, out } => cmd_compare(*n, reps, tol, out),
        Command::Weights {
            family,
            n,
            samples,
            range,
            out,
        } => cmd_weights(*family, *n, *samples, range.as_deref(), out),
        Command::Intersect { n, range, out } => cmd_intersect(*n, range.as_deref(), out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            let code = err.exit_code();
            match &err {
                CmdError::Usage(msg) => eprintln!("usage error: {msg}"),
                CmdError::Failed(msg) => eprintln!("error: {msg}"),
                CmdError::Io { path, message } => {
                    eprintln!("io error: {}: {message}", path.display())
                }
            }
            ExitCode::from(code)
        }
    }
}
