//! Command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input, 2 a verification failed or a
//! numerical threshold was exceeded. Data goes to stdout, diagnostics to
//! stderr.

pub mod verify;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::classical::{exact_zero_count, predict_zero_count, random_queries, ZeroCountPrediction, ZeroQuery};
use crate::polycore::{parse_rational, to_f64, Rational};
use crate::quadrature::gram;
use crate::serial::{format_f64, json_f64};
use crate::spectral::{compare_spectrum, GridSpec};
use crate::xconstruct::{
    build_system, energy, exceptional_poly, potential_eval, wavefunction_eval, CaseTag, Fault, Params, XSystem,
};
use verify::{run_all, Suite, VerifyConfig};

const AFTER_HELP: &str = "Polynomial coefficients are listed in ascending powers of η. \
Rationals are written as \"p/q\" strings in JSON; CSV uses decimal floats.";

#[derive(Parser, Debug)]
#[command(name = "xsolvable", version, about = "Exactly solvable exceptional-polynomial quantum systems", after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a system and print P_{ℓ,n} with the energy table
    Construct(ConstructArgs),
    /// Run the exact verification suites
    Verify(VerifyArgs),
    /// Normalized Gram matrix of the lowest levels
    Ortho(OrthoArgs),
    /// Finite-difference spectrum against the closed form
    Spectrum(SpectrumArgs),
    /// Zero-count predictions against exact root counts
    Zeros(ZerosArgs),
    /// Potential and eigenfunctions on a uniform grid
    Plotdata(PlotArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FaultArg {
    #[value(name = "p-l2-sign")]
    PL2Sign,
}

#[derive(Args, Debug)]
struct SystemArgs {
    /// l1, l2, j1, j2 or extj
    #[arg(long)]
    case: String,
    #[arg(long)]
    ell: usize,
    /// Rational: p/q, integer or decimal
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    /// Required for the Jacobi cases
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Polynomial index n of P_{ℓ,n}
    #[arg(long, default_value_t = 0)]
    n: usize,
    /// Last level of the energy table
    #[arg(long, default_value_t = 5)]
    nmax: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suites to run (repeatable); all by default
    #[arg(long = "suite")]
    suites: Vec<String>,
    #[arg(long, default_value_t = 3)]
    ell_max: usize,
    #[arg(long, default_value_t = 5)]
    nmax: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, value_enum, hide = true)]
    inject_fault: Option<FaultArg>,
}

#[derive(Args, Debug)]
struct OrthoArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Highest level included; the matrix has nmax+1 rows
    #[arg(long, default_value_t = 7)]
    nmax: usize,
    /// Fail (exit 2) if an off-diagonal entry exceeds this
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct SpectrumArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Number of levels compared
    #[arg(short = 'k', default_value_t = 5)]
    k: usize,
    #[arg(long)]
    points: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    x_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    x_max: Option<f64>,
    /// Fail (exit 2) if a level's error exceeds this
    #[arg(long, default_value_t = 1e-3)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Laguerre,
    Jacobi,
}

#[derive(Args, Debug)]
struct ZerosArgs {
    /// Query a single polynomial instead of a random sweep
    #[arg(long, value_enum)]
    kind: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    count: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct PlotArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Highest level written
    #[arg(long, default_value_t = 3)]
    nmax: usize,
    #[arg(long, default_value_t = 200)]
    points: usize,
    #[arg(long, allow_hyphen_values = true)]
    x_min: Option<f64>,
    /// Defaults to 5 on the half-line and π/2 for the Jacobi cases
    #[arg(long, allow_hyphen_values = true)]
    x_max: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Debug)]
enum CliError {
    Invalid(String),
    /// Output was written; the checks did not pass.
    Failed(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

type CliResult = Result<(), CliError>;

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Construct(a) => construct(a, &mut out),
        Command::Verify(a) => verify_cmd(a, &mut out),
        Command::Ortho(a) => ortho(a, &mut out),
        Command::Spectrum(a) => spectrum(a, &mut out),
        Command::Zeros(a) => zeros(a, &mut out),
        Command::Plotdata(a) => plotdata(a, &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(()) => 0,
        Err(CliError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("verification failed: {msg}");
            2
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn rational_arg(name: &str, text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|_| CliError::Invalid(format!("--{name}: cannot parse {text:?} as a rational")))
}

fn system_from(args: &SystemArgs) -> Result<XSystem, CliError> {
    let case: CaseTag = args.case.parse().map_err(|e: crate::xconstruct::XError| CliError::Invalid(e.to_string()))?;
    let alpha = rational_arg("alpha", &args.alpha)?;
    let beta = match (&args.beta, case.is_laguerre()) {
        (Some(b), false) => rational_arg("beta", b)?,
        (None, false) => return Err(CliError::Invalid(format!("--beta is required for case {case}"))),
        (Some(_), true) => return Err(CliError::Invalid(format!("--beta is not a parameter of case {case}"))),
        (None, true) => Rational::from_integer(0.into()),
    };
    build_system(case, Params::new(args.ell, alpha, beta)).map_err(|e| CliError::Invalid(e.to_string()))
}

fn write_json(out: &mut impl Write, value: &impl Serialize) -> CliResult {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| CliError::Io(e.into()))?;
    writeln!(out)?;
    Ok(())
}

fn csv_writer(out: &mut impl Write) -> csv::Writer<&mut impl Write> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out)
}

/// The table row index `level` refers to the physical level; `poly_index`
/// is the `n` of `P_{ℓ,n}` (absent for the extended Jacobi ground state).
fn energy_table(sys: &XSystem, nmax: usize) -> Vec<Value> {
    (0..=nmax)
        .map(|level| {
            let e = energy(sys, level);
            let poly_index = match sys.case {
                CaseTag::ExtJ if level == 0 => Value::Null,
                CaseTag::ExtJ => json!(level - 1),
                _ => json!(level),
            };
            json!({
                "level": level,
                "poly_index": poly_index,
                "energy": e.to_string(),
                "energy_f64": json_f64(to_f64(&e)),
            })
        })
        .collect()
}

fn construct(a: ConstructArgs, out: &mut impl Write) -> CliResult {
    let sys = system_from(&a.system)?;
    let p = exceptional_poly(&sys, a.n);
    let level = a.n + usize::from(sys.case == CaseTag::ExtJ);
    let e = energy(&sys, level);
    let nmax = a.nmax.max(level);
    match a.format {
        Format::Json => {
            let doc = json!({
                "system": sys,
                "n": a.n,
                "level": level,
                "polynomial": {
                    "degree": p.degree(),
                    "coefficients": p,
                },
                "energy": e.to_string(),
                "energy_f64": json_f64(to_f64(&e)),
                "energy_table": energy_table(&sys, nmax),
            });
            write_json(out, &doc)
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["quantity", "index", "value"])?;
            for (k, c) in p.coeffs().iter().enumerate() {
                w.write_record(["coefficient", &k.to_string(), &format_f64(to_f64(c))])?;
            }
            for lv in 0..=nmax {
                w.write_record(["energy", &lv.to_string(), &format_f64(to_f64(&energy(&sys, lv)))])?;
            }
            w.flush()?;
            Ok(())
        }
    }
}

fn verify_cmd(a: VerifyArgs, out: &mut impl Write) -> CliResult {
    let suites: Vec<Suite> = if a.suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        a.suites.iter().map(|s| s.parse().map_err(CliError::Invalid)).collect::<Result<_, _>>()?
    };
    let cfg = VerifyConfig {
        ell_max: a.ell_max,
        n_max: a.nmax,
        seed: a.seed,
        fault: a.inject_fault.map(|f| match f {
            FaultArg::PL2Sign => Fault::L2SignFlip,
        }),
        ..VerifyConfig::default()
    };
    let outcomes = run_all(&suites, &cfg);
    match a.format {
        Format::Json => write_json(out, &outcomes)?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["suite", "pass", "checked", "failed", "worst_defect"])?;
            for o in &outcomes {
                w.write_record([
                    o.suite.name(),
                    &o.pass.to_string(),
                    &o.checked.to_string(),
                    &o.failed.to_string(),
                    &format_f64(o.worst_defect),
                ])?;
            }
            w.flush()?;
        }
    }
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.pass).map(|o| o.suite.name()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(failed.join(", ")))
    }
}

fn ortho(a: OrthoArgs, out: &mut impl Write) -> CliResult {
    let sys = system_from(&a.system)?;
    let report = gram(&sys, a.nmax + 1).map_err(|e| CliError::Invalid(e.to_string()))?;
    match a.format {
        Format::Json => write_json(out, &report)?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["row", "col", "value"])?;
            for (i, row) in report.matrix.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    w.write_record([&i.to_string(), &j.to_string(), &format_f64(*v)])?;
                }
            }
            w.flush()?;
        }
    }
    if report.max_off_diagonal <= a.tol {
        Ok(())
    } else {
        Err(CliError::Failed(format!("max off-diagonal {:e} exceeds {:e}", report.max_off_diagonal, a.tol)))
    }
}

fn spectrum(a: SpectrumArgs, out: &mut impl Write) -> CliResult {
    let sys = system_from(&a.system)?;
    let default = GridSpec::default_for(&sys);
    let grid = GridSpec::new(
        a.x_min.unwrap_or(default.x_min),
        a.x_max.unwrap_or(default.x_max),
        a.points.unwrap_or(default.points),
    );
    let report = compare_spectrum(&sys, a.k, &grid).map_err(|e| CliError::Invalid(e.to_string()))?;
    match a.format {
        Format::Json => write_json(out, &report)?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["level", "analytic", "numeric", "error"])?;
            for (i, (e, x)) in report.analytic.iter().zip(&report.numeric).enumerate() {
                w.write_record([
                    &i.to_string(),
                    &format_f64(to_f64(e)),
                    &format_f64(*x),
                    &format_f64(report.errors[i]),
                ])?;
            }
            w.flush()?;
        }
    }
    if report.max_error <= a.tol {
        Ok(())
    } else {
        Err(CliError::Failed(format!("max error {:e} exceeds {:e}", report.max_error, a.tol)))
    }
}

#[derive(Serialize)]
struct ZeroRow {
    kind: &'static str,
    n: usize,
    #[serde(serialize_with = "crate::serial::rational")]
    alpha: Rational,
    #[serde(serialize_with = "crate::serial::opt_rational")]
    beta: Option<Rational>,
    prediction: ZeroCountPrediction,
    sturm: usize,
    agree: bool,
}

fn zero_row(q: &ZeroQuery) -> Result<ZeroRow, CliError> {
    let prediction = predict_zero_count(q).map_err(|e| CliError::Invalid(e.to_string()))?;
    let sturm = exact_zero_count(q);
    let (kind, n, alpha, beta) = match q {
        ZeroQuery::Laguerre { n, alpha } => ("laguerre", *n, alpha.clone(), None),
        ZeroQuery::Jacobi { n, alpha, beta } => ("jacobi", *n, alpha.clone(), Some(beta.clone())),
    };
    Ok(ZeroRow { kind, n, alpha, beta, agree: prediction.count == sturm, prediction, sturm })
}

fn zeros(a: ZerosArgs, out: &mut impl Write) -> CliResult {
    let queries = match (a.kind, a.n, &a.alpha) {
        (None, None, None) if a.beta.is_none() => random_queries(a.seed, a.count),
        (kind, Some(n), Some(alpha)) => {
            let alpha = rational_arg("alpha", alpha)?;
            let kind = kind.unwrap_or(if a.beta.is_some() { Family::Jacobi } else { Family::Laguerre });
            match (kind, &a.beta) {
                (Family::Laguerre, None) => vec![ZeroQuery::Laguerre { n, alpha }],
                (Family::Jacobi, Some(b)) => vec![ZeroQuery::Jacobi { n, alpha, beta: rational_arg("beta", b)? }],
                (Family::Laguerre, Some(_)) => {
                    return Err(CliError::Invalid("--beta is not a Laguerre parameter".into()))
                }
                (Family::Jacobi, None) => return Err(CliError::Invalid("--beta is required for jacobi".into())),
            }
        }
        _ => return Err(CliError::Invalid("a single query needs both --n and --alpha".into())),
    };
    let rows = queries.iter().map(zero_row).collect::<Result<Vec<_>, _>>()?;
    match a.format {
        Format::Json => write_json(out, &rows)?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["kind", "n", "alpha", "beta", "rule", "predicted", "sturm", "agree"])?;
            for r in &rows {
                let rule = serde_json::to_value(r.prediction.rule).map_err(|e| CliError::Io(e.into()))?;
                w.write_record([
                    r.kind,
                    &r.n.to_string(),
                    &format_f64(to_f64(&r.alpha)),
                    &r.beta.as_ref().map(|b| format_f64(to_f64(b))).unwrap_or_default(),
                    rule.as_str().unwrap_or_default(),
                    &r.prediction.count.to_string(),
                    &r.sturm.to_string(),
                    &r.agree.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    let bad = rows.iter().filter(|r| !r.agree).count();
    if bad == 0 {
        Ok(())
    } else {
        Err(CliError::Failed(format!("{bad} of {} predictions disagree with the exact count", rows.len())))
    }
}

fn plotdata(a: PlotArgs, out: &mut impl Write) -> CliResult {
    let sys = system_from(&a.system)?;
    let dom = sys.domain_x;
    let lo = a.x_min.unwrap_or(dom.lo);
    let hi = a.x_max.unwrap_or(if dom.hi.is_finite() { dom.hi } else { 5.0 });
    if a.points == 0 || lo.partial_cmp(&hi) != Some(std::cmp::Ordering::Less) || lo < dom.lo || hi > dom.hi {
        return Err(CliError::Invalid(format!(
            "plot window [{lo}, {hi}] with {} points must lie inside ({}, {})",
            a.points, dom.lo, dom.hi
        )));
    }
    // nodes strictly inside the window, so singular endpoints are avoided
    let h = (hi - lo) / (a.points + 1) as f64;
    let mut columns = vec!["x".to_string(), "V".to_string()];
    columns.extend((0..=a.nmax).map(|k| format!("phi_{k}")));
    let mut rows = Vec::with_capacity(a.points);
    for i in 0..a.points {
        let x = lo + (i + 1) as f64 * h;
        let mut row = vec![x, potential_eval(&sys, x).map_err(|e| CliError::Invalid(e.to_string()))?];
        for k in 0..=a.nmax {
            row.push(wavefunction_eval(&sys, k, x).map_err(|e| CliError::Invalid(e.to_string()))?);
        }
        rows.push(row);
    }
    match a.format {
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(&columns)?;
            for row in &rows {
                w.write_record(row.iter().map(|v| format_f64(*v)))?;
            }
            w.flush()?;
        }
        Format::Json => {
            let data: Vec<Vec<Value>> = rows.iter().map(|r| r.iter().map(|v| json_f64(*v)).collect()).collect();
            write_json(out, &json!({ "columns": columns, "rows": data }))?;
        }
    }
    if rows.iter().flatten().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(CliError::Failed("non-finite values in plot data".into()))
    }
}
