//! Command-line surface: exact computation plus the verification suites,
//! with deterministic text, JSON, and CSV reports.
//!
//! Exit codes: 0 when every requested check passes, 1 when any check
//! fails, 2 on usage errors.

use std::f64::consts::{PI, TAU};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{
    cauchy_repeated_check, kernel_decomposition_check, kernel_identity_residual, kernel_integral,
    linearity_check, sum_integral_identity_check, weighted_kernel_integral,
};
use crate::error::Result;
use crate::report::VerificationReport;
use crate::wz::{catalog, telescoping_check, wz_residual, DiffMode, DEFAULT_FD_STEP};
use crate::zeta::{render_zeta, verify_half_identity, zeta_even_sequence, Route};

pub const DEFAULT_SEED: u64 = 0x5EED;

#[derive(Parser)]
#[command(
    name = "even-zeta",
    version,
    about = "Exact even zeta values with numeric verification of the identities behind them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact coefficients q_l with zeta(2l) = q_l * pi^(2l)
    Compute(CommonArgs),
    /// Check that all four exact routes agree for l = 1..max-l
    Crosscheck(CommonArgs),
    /// Verify the WZ equation and telescoping for the cataloged pairs
    VerifyWz(WzArgs),
    /// Verify the integration formula and the kernel integrals (2..5)
    VerifyLemmas(LemmaArgs),
    /// Verify the sum-integral identities and the kernel decomposition
    VerifyDecomposition(CommonArgs),
    /// Verify the Bernoulli half-identity and the alternating relation
    VerifyIdentity(CommonArgs),
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Largest l touched by the run (zeta(2l))
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..=200))]
    max_l: u32,

    /// Fractional digits in rendered decimals (also the pi precision used
    /// by the alternating-relation check)
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..=1000))]
    precision: u64,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for the deterministic pseudo-random sample grids
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Override the pass tolerance of every check in the run
    /// (defaults are per check: 0 for exact checks, 1e-12 relative for the
    /// WZ equation, 1e-7 for its finite-difference form, 1e-8 for kernel
    /// integrals and decay bounds, 1e-9 for repeated integration,
    /// 1e-11 relative for the kernel identity, 1e-6 for the decomposition,
    /// 2e-4 / 1e-8 for the alternating relation)
    #[arg(long, allow_negative_numbers = true)]
    tol: Option<f64>,

    /// Adaptive quadrature tolerance
    #[arg(long, default_value_t = 1e-10, value_parser = parse_positive_f64)]
    quad_tol: f64,

    /// Duplicate the report stream to this file
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct WzArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Restrict to these pair ids (comma separated); default is the whole
    /// catalog
    #[arg(long, value_delimiter = ',')]
    pairs: Option<Vec<String>>,
}

#[derive(Args, Clone)]
struct LemmaArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Which verification family to run
    #[arg(long, value_enum, default_value_t = LemmaPick::All)]
    which: LemmaPick,

    /// Largest kernel index n for the constant-integral sweep
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(0..=500))]
    n_max: u32,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum LemmaPick {
    /// Repeated-integration formula
    #[value(name = "2")]
    RepeatedIntegration,
    /// Closed form of the partial cosine sum
    #[value(name = "3")]
    KernelIdentity,
    /// Constant kernel integral
    #[value(name = "4")]
    KernelIntegral,
    /// Weighted kernel decay bound
    #[value(name = "5")]
    KernelDecay,
    /// Everything above
    #[value(name = "all")]
    All,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn parse_positive_f64(s: &str) -> std::result::Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err("must be a positive real".into())
    }
}

/// One row of the exact coefficient table.
#[derive(Debug, Clone)]
pub struct ZetaRow {
    pub l: u32,
    pub q: String,
    pub decimal: String,
}

/// What a subcommand produces for emission.
pub enum Payload {
    Table(Vec<ZetaRow>),
    Reports(Vec<VerificationReport>),
}

/// Parses argv, runs the requested suite, writes the report to stdout
/// (and `--out` if given), and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };

    let (payload, common) = dispatch(&cli.command);
    if let Payload::Reports(reports) = &payload {
        if reports.is_empty() {
            eprintln!("no checks requested");
            return 2;
        }
    }
    let rendered = emit(&payload, common.format);
    print!("{rendered}");
    if let Some(path) = &common.out {
        if let Err(err) = std::fs::write(path, &rendered) {
            eprintln!("cannot write {}: {err}", path.display());
            return 2;
        }
    }
    match &payload {
        Payload::Table(_) => 0,
        Payload::Reports(reports) => {
            if reports.iter().all(|r| r.pass) {
                0
            } else {
                1
            }
        }
    }
}

fn dispatch(command: &Command) -> (Payload, CommonArgs) {
    match command {
        Command::Compute(args) => (compute_table(args), args.clone()),
        Command::Crosscheck(args) => (Payload::Reports(vec![crosscheck(args)]), args.clone()),
        Command::VerifyWz(args) => (Payload::Reports(verify_wz(args)), args.common.clone()),
        Command::VerifyLemmas(args) => (Payload::Reports(verify_lemmas(args)), args.common.clone()),
        Command::VerifyDecomposition(args) => {
            (Payload::Reports(verify_decomposition(args)), args.clone())
        }
        Command::VerifyIdentity(args) => (Payload::Reports(verify_identity(args)), args.clone()),
    }
}

fn compute_table(args: &CommonArgs) -> Payload {
    let rows = zeta_even_sequence(Route::Recurrence, args.max_l)
        .iter()
        .map(|coeff| ZetaRow {
            l: coeff.l,
            q: coeff.q.to_string(),
            decimal: render_zeta(coeff, args.precision as usize)
                .expect("precision range enforced by the parser")
                .digits,
        })
        .collect();
    Payload::Table(rows)
}

fn crosscheck(args: &CommonArgs) -> VerificationReport {
    let reference = zeta_even_sequence(Route::Recurrence, args.max_l);
    let others: Vec<_> = [Route::Euler, Route::SrivastavaA, Route::SrivastavaB]
        .iter()
        .map(|&route| zeta_even_sequence(route, args.max_l))
        .collect();
    let mut report = VerificationReport::new("four-route-crosscheck", args.tol.unwrap_or(0.0));
    for (i, expected) in reference.iter().enumerate() {
        let mut residual = 0.0_f64;
        for seq in &others {
            let diff = &seq[i].q - &expected.q;
            if !diff.is_zero() {
                residual = residual.max(diff.to_f64().abs().max(f64::MIN_POSITIVE));
            }
        }
        report.push(format!("l={}", expected.l), residual);
    }
    report
}

fn verify_wz(wz_args: &WzArgs) -> Vec<VerificationReport> {
    let args = &wz_args.common;
    let pairs: Vec<_> = catalog()
        .into_iter()
        .filter(|p| match &wz_args.pairs {
            Some(wanted) => wanted.iter().any(|id| id == p.id),
            None => true,
        })
        .collect();
    if pairs.is_empty() {
        return Vec::new();
    }
    let grid: Vec<f64> = (0..32).map(|i| PI * f64::from(i) / 31.0).collect();

    let mut analytic = VerificationReport::new("wz-analytic-relative", args.tol.unwrap_or(1e-12));
    let mut finite = VerificationReport::new("wz-finite-difference", args.tol.unwrap_or(1e-7));
    for pair in &pairs {
        for &x in &grid {
            for k in 1..=12u32 {
                let scale = 1.0 + pair.g(x, k + 1).norm();
                let residual = wz_residual(pair, x, k, DiffMode::Analytic)
                    .expect("catalog pairs carry closed forms");
                analytic.push(format!("{} x={x:.6} k={k}", pair.id), residual / scale);
                let fd = wz_residual(
                    pair,
                    x,
                    k,
                    DiffMode::FiniteDifference { h: DEFAULT_FD_STEP },
                )
                .expect("default step is in range");
                finite.push(format!("{} x={x:.6} k={k}", pair.id), fd);
            }
        }
    }

    let mut reports = vec![analytic, finite];
    for pair in &pairs {
        let mut telescoped = telescoping_check(pair, PI, 0.0, 1, 8, args.quad_tol);
        if let Some(tol) = args.tol {
            telescoped = VerificationReport::from_cases(telescoped.name, telescoped.cases, tol);
        }
        reports.push(telescoped);
    }
    reports
}

fn verify_lemmas(args: &LemmaArgs) -> Vec<VerificationReport> {
    let mut reports = Vec::new();
    let common = &args.common;
    let pick = args.which;

    if matches!(pick, LemmaPick::RepeatedIntegration | LemmaPick::All) {
        let mut report =
            VerificationReport::new("repeated-integration", common.tol.unwrap_or(1e-9));
        for m in 0..=4u32 {
            for k in 1..=5u32 {
                for &x in &[0.5, 1.0, 2.0] {
                    push_outcome(
                        &mut report,
                        format!("m={m} k={k} x={x}"),
                        cauchy_repeated_check(m, k, x, 1e-9),
                    );
                }
            }
        }
        reports.push(report);
    }

    if matches!(pick, LemmaPick::KernelIdentity | LemmaPick::All) {
        let mut report =
            VerificationReport::new("kernel-identity-relative", common.tol.unwrap_or(1e-11));
        let xs = seeded_sample_points(64, common.seed);
        for &n in &[1u32, 2, 5, 10, 20, 50, 100, 200] {
            for (i, &x) in xs.iter().enumerate() {
                let residual = kernel_identity_residual(n, x) / f64::from(n);
                report.push(format!("n={n} sample={i}"), residual);
            }
        }
        reports.push(report);
    }

    if matches!(pick, LemmaPick::KernelIntegral | LemmaPick::All) {
        let mut report = VerificationReport::new("kernel-integral", common.tol.unwrap_or(1e-8));
        for n in 0..=args.n_max {
            push_outcome(
                &mut report,
                format!("n={n}"),
                kernel_integral(n, common.quad_tol).map(|r| (r.value - PI).abs()),
            );
        }
        reports.push(report);
    }

    if matches!(pick, LemmaPick::KernelDecay | LemmaPick::All) {
        let mut bound_report =
            VerificationReport::new("kernel-decay-bound", common.tol.unwrap_or(1e-8));
        let mut trend_report =
            VerificationReport::new("kernel-decay-trend", common.tol.unwrap_or(0.0));
        for &s in &[1.0, 1.5, 2.0, 3.0] {
            let mut magnitudes = Vec::new();
            for &n in &[0u32, 1, 5, 10, 50, 200] {
                match weighted_kernel_integral(s, n, common.quad_tol) {
                    Ok((result, bound)) => {
                        let excess = (result.value.abs() - bound).max(0.0);
                        bound_report.push(format!("s={s} n={n}"), excess);
                        magnitudes.push((n, result.value.abs()));
                    }
                    Err(err) => bound_report.push(format!("s={s} n={n} [{err}]"), f64::INFINITY),
                }
            }
            let at = |target: u32| {
                magnitudes
                    .iter()
                    .find(|(n, _)| *n == target)
                    .map(|(_, v)| *v)
            };
            if let (Some(coarse), Some(fine)) = (at(10), at(200)) {
                trend_report.push(format!("s={s} |I(200)|<|I(10)|"), (fine - coarse).max(0.0));
            }
        }
        reports.push(bound_report);
        reports.push(trend_report);
    }

    reports
}

fn verify_decomposition(args: &CommonArgs) -> Vec<VerificationReport> {
    let xs = [1.0, 2.0, PI];
    let ns = [5u32, 10, 20];

    let mut identities =
        VerificationReport::new("sum-integral-identities", args.tol.unwrap_or(1e-6));
    for &n in &ns {
        for &x in &xs {
            let sub = sum_integral_identity_check(n, x, identities.tolerance);
            for case in sub.cases {
                identities.push(case.inputs, case.residual);
            }
        }
    }

    let decomposition_tol = args.tol.unwrap_or(1e-6);
    let mut decomposition = VerificationReport::new("kernel-decomposition", decomposition_tol);
    for l in 1..=3u32 {
        for &n in &ns {
            for &x in &xs {
                push_outcome(
                    &mut decomposition,
                    format!("l={l} n={n} x={x:.6}"),
                    kernel_decomposition_check(l, n, x, decomposition_tol),
                );
            }
        }
    }

    let mut linearity =
        VerificationReport::new("repeated-integral-linearity", args.tol.unwrap_or(1e-9));
    for j in 1..=3u32 {
        for &x in &[0.0, 1.0, PI] {
            let sub = linearity_check(j, x);
            for case in sub.cases {
                linearity.push(case.inputs, case.residual);
            }
        }
    }

    vec![identities, decomposition, linearity]
}

fn verify_identity(args: &CommonArgs) -> Vec<VerificationReport> {
    let mut half = verify_half_identity(args.max_l);
    if let Some(tol) = args.tol {
        half = VerificationReport::from_cases(half.name, half.cases, tol);
    }

    let zetas = zeta_even_sequence(Route::Recurrence, 2);
    let precision = args.precision as usize;

    let mut order2 =
        VerificationReport::new("alternating-relation-order-2", args.tol.unwrap_or(2e-4));
    push_outcome(
        &mut order2,
        "l=1 N=10000".into(),
        crate::analysis::alternating_relation_check(1, 10_000, &zetas[0], precision),
    );

    let mut order4 =
        VerificationReport::new("alternating-relation-order-4", args.tol.unwrap_or(1e-8));
    push_outcome(
        &mut order4,
        "l=2 N=1000".into(),
        crate::analysis::alternating_relation_check(2, 1_000, &zetas[1], precision),
    );

    vec![half, order2, order4]
}

/// 64 deterministic sample points in (0, 2π), re-drawing the measure-zero
/// neighborhood of the period where the kernel identity switches to its
/// limit branch.
pub fn seeded_sample_points(count: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(count);
    while points.len() < count {
        let x: f64 = rng.gen_range(0.0..TAU);
        let near_edge = x < 1e-9 || (TAU - x) < 1e-9;
        if !near_edge {
            points.push(x);
        }
    }
    points
}

fn push_outcome(report: &mut VerificationReport, inputs: String, outcome: Result<f64>) {
    match outcome {
        Ok(residual) => report.push(inputs, residual),
        Err(err) => report.push(format!("{inputs} [{err}]"), f64::INFINITY),
    }
}

// ---------------------------------------------------------------------------
// Emission

/// Renders a payload in the requested format. All floating-point values are
/// printed with 17 significant digits; in JSON a non-finite residual (from a
/// check that could not be evaluated) is emitted as `null`.
pub fn emit(payload: &Payload, format: Format) -> String {
    match (payload, format) {
        (Payload::Table(rows), Format::Text) => table_text(rows),
        (Payload::Table(rows), Format::Json) => table_json(rows),
        (Payload::Table(rows), Format::Csv) => table_csv(rows),
        (Payload::Reports(reports), Format::Text) => reports_text(reports),
        (Payload::Reports(reports), Format::Json) => reports_json(reports),
        (Payload::Reports(reports), Format::Csv) => reports_csv(reports),
    }
}

fn fmt_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else if v.is_nan() {
        "nan".into()
    } else if v > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

fn json_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        "null".into()
    }
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn table_text(rows: &[ZetaRow]) -> String {
    let l_width = rows
        .iter()
        .map(|r| r.l.to_string().len())
        .max()
        .unwrap_or(1)
        .max(1);
    let q_width = rows.iter().map(|r| r.q.len()).max().unwrap_or(1).max(1);
    let mut out = String::new();
    let _ = writeln!(out, "{:<l_width$}  {:<q_width$}  zeta(2l)", "l", "q");
    for row in rows {
        let _ = writeln!(
            out,
            "{:<l_width$}  {:<q_width$}  {}",
            row.l, row.q, row.decimal
        );
    }
    out
}

fn table_json(rows: &[ZetaRow]) -> String {
    let mut out = String::from("[\n");
    for (i, row) in rows.iter().enumerate() {
        let _ = write!(
            out,
            "  {{\"l\": {}, \"q\": \"{}\", \"decimal\": \"{}\"}}",
            row.l,
            json_escape(&row.q),
            json_escape(&row.decimal)
        );
        out.push_str(if i + 1 < rows.len() { ",\n" } else { "\n" });
    }
    out.push_str("]\n");
    out
}

fn table_csv(rows: &[ZetaRow]) -> String {
    let mut out = String::from("l,q,decimal\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{}",
            row.l,
            csv_escape(&row.q),
            csv_escape(&row.decimal)
        );
    }
    out
}

fn reports_text(reports: &[VerificationReport]) -> String {
    let name_width = reports
        .iter()
        .map(|r| r.name.len())
        .max()
        .unwrap_or(5)
        .max("check".len());
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<name_width$}  {:>6}  {:<23}  {:<23}  pass",
        "check", "cases", "max_residual", "tolerance"
    );
    for report in reports {
        let _ = writeln!(
            out,
            "{:<name_width$}  {:>6}  {:<23}  {:<23}  {}",
            report.name,
            report.cases.len(),
            fmt_f64(report.max_residual),
            fmt_f64(report.tolerance),
            if report.pass { "yes" } else { "NO" }
        );
    }
    for report in reports {
        if report.pass {
            continue;
        }
        for case in report
            .cases
            .iter()
            .filter(|c| c.residual > report.tolerance)
        {
            let _ = writeln!(
                out,
                "  failed: {} :: {} (residual {})",
                report.name,
                case.inputs,
                fmt_f64(case.residual)
            );
        }
    }
    if let Some(crosscheck) = reports.iter().find(|r| r.name == "four-route-crosscheck") {
        if crosscheck.pass {
            let _ = writeln!(out, "4 routes agree for l=1..{}", crosscheck.cases.len());
        }
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    if failed == 0 {
        let _ = writeln!(out, "all {} checks passed", reports.len());
    } else {
        let _ = writeln!(out, "{failed} of {} checks FAILED", reports.len());
    }
    out
}

fn reports_json(reports: &[VerificationReport]) -> String {
    let mut out = String::from("[\n");
    for (i, report) in reports.iter().enumerate() {
        let _ = writeln!(out, "  {{");
        let _ = writeln!(out, "    \"name\": \"{}\",", json_escape(&report.name));
        let _ = writeln!(out, "    \"cases\": [");
        for (j, case) in report.cases.iter().enumerate() {
            let _ = write!(
                out,
                "      {{\"inputs\": \"{}\", \"residual\": {}}}",
                json_escape(&case.inputs),
                json_f64(case.residual)
            );
            out.push_str(if j + 1 < report.cases.len() {
                ",\n"
            } else {
                "\n"
            });
        }
        let _ = writeln!(out, "    ],");
        let _ = writeln!(
            out,
            "    \"max_residual\": {},",
            json_f64(report.max_residual)
        );
        let _ = writeln!(out, "    \"tolerance\": {},", json_f64(report.tolerance));
        let _ = writeln!(out, "    \"pass\": {}", report.pass);
        let _ = write!(out, "  }}");
        out.push_str(if i + 1 < reports.len() { ",\n" } else { "\n" });
    }
    out.push_str("]\n");
    out
}

fn reports_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("check,case,residual,tolerance,pass\n");
    for report in reports {
        for case in &report.cases {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                csv_escape(&report.name),
                csv_escape(&case.inputs),
                fmt_f64(case.residual),
                fmt_f64(report.tolerance),
                report.pass
            );
        }
    }
    out
}
