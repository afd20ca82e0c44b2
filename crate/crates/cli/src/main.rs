//! Command-line front end: point evaluation, oracle comparison, grid scans,
//! and the built-in self-test suite.
//!
//! Exit codes: 0 success, 1 evaluation error (domain, pole, capacity),
//! 2 evaluation finished without meeting its tolerance, 3 a comparison or
//! self-test check failed, 64 usage error.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex;
use rayon::prelude::*;

use zetasum::complexfn::cpow;
use zetasum::hurwitz::{
    hp_bruteforce, hp_sum_ac, hp_sum_hurwitz, hurwitz_global, hurwitz_global_unvalidated,
    hurwitz_neg_int,
};
use zetasum::powersum::{powersum_ac, powersum_bruteforce};
use zetasum::selftest::{self, CheckResult};
use zetasum::zeta::{in_reference_window, zeta_global, zeta_reference, ZetaRepresentation};
use zetasum::{EvalResult, QuadratureConfig};

mod output;
use output::{RowStatus, ScanRow};

type C = Complex<f64>;
type Cfg = QuadratureConfig<f64>;

const EXIT_OK: i32 = 0;
const EXIT_ERROR: i32 = 1;
const EXIT_NOT_CONVERGED: i32 = 2;
const EXIT_CHECK_FAILED: i32 = 3;
const EXIT_USAGE: i32 = 64;

/// Parses `RE`, `IMi`, or `RE[+-]IMi` with no whitespace: `2`, `-0.5`,
/// `1.5i`, `2.5+1i`, `1e-3-2.5e0i`.
fn parse_complex(s: &str) -> Result<C, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty complex number".to_string());
    }
    let fail = |part: &str| {
        format!("cannot parse {part:?} in complex number {t:?} (expected RE, IMi, or RE[+-]IMi)")
    };
    if let Some(body) = t.strip_suffix(['i', 'I']) {
        let bytes = body.as_bytes();
        for idx in (1..bytes.len()).rev() {
            let ch = bytes[idx];
            if (ch == b'+' || ch == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
                let re: f64 = body[..idx].parse().map_err(|_| fail(&body[..idx]))?;
                let im: f64 = body[idx..].parse().map_err(|_| fail(&body[idx..]))?;
                return Ok(C::new(re, im));
            }
        }
        let im: f64 = body.parse().map_err(|_| fail(body))?;
        Ok(C::new(0.0, im))
    } else {
        let re: f64 = t.parse().map_err(|_| fail(t))?;
        Ok(C::new(re, 0.0))
    }
}

#[derive(Parser)]
#[command(
    name = "zetasum",
    version,
    about = "Generalized power sums, harmonic progressions, and Riemann/Hurwitz zeta \
             for complex arguments, with error-controlled quadrature"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one target at a point and print a JSON record
    Eval(EvalArgs),
    /// Evaluate a target and an independent oracle, print both and the diff
    Compare(CompareArgs),
    /// Evaluate a target over a complex grid of exponents
    Scan(ScanArgs),
    /// Run the built-in invariant checks
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    /// Riemann zeta(k)
    Zeta,
    /// sum_{j=1}^{n} j^k continued in k
    Powersum,
    /// Hurwitz zeta(k, b)
    Hurwitz,
    /// Harmonic progression sum (j+b)^k
    Hp,
}

impl Target {
    fn name(self) -> &'static str {
        match self {
            Target::Zeta => "zeta",
            Target::Powersum => "powersum",
            Target::Hurwitz => "hurwitz",
            Target::Hp => "hp",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Rep {
    /// Moment integral, valid for re(k) > 1
    StripPos,
    /// Mirrored moment integral, valid for re(k) < 0
    StripNeg,
    /// Continuation valid everywhere off the pole (default)
    Global,
    /// Reflection through the functional equation, re(k) < 0
    Functional,
    /// Accelerated series oracle (no quadrature)
    Reference,
}

impl Rep {
    fn to_representation(self) -> ZetaRepresentation {
        match self {
            Rep::StripPos => ZetaRepresentation::StripPos,
            Rep::StripNeg => ZetaRepresentation::StripNeg,
            Rep::Global => ZetaRepresentation::Global,
            Rep::Functional => ZetaRepresentation::Functional,
            Rep::Reference => ZetaRepresentation::Reference,
        }
    }
}

#[derive(Args)]
struct NumericsOpts {
    /// Relative quadrature tolerance [default: 1e-10]
    #[arg(long, env = "ZETASUM_REL_TOL", allow_hyphen_values = true)]
    rel_tol: Option<f64>,
    /// Absolute quadrature tolerance [default: 1e-14]
    #[arg(long, env = "ZETASUM_ABS_TOL", allow_hyphen_values = true)]
    abs_tol: Option<f64>,
    /// Maximum grid refinement depth [default: 30]
    #[arg(long, env = "ZETASUM_MAX_DEPTH")]
    max_depth: Option<u32>,
    /// Integrand evaluation budget per integral [default: 200000]
    #[arg(long, env = "ZETASUM_MAX_EVALS")]
    max_evals: Option<u32>,
    /// Tail suppression exponent for semi-infinite integrals [default: 40]
    #[arg(long, env = "ZETASUM_TAIL_MARGIN", allow_hyphen_values = true)]
    tail_margin: Option<f64>,
}

impl NumericsOpts {
    fn build(&self) -> Result<Cfg, String> {
        let mut cfg = Cfg::default();
        if let Some(v) = self.rel_tol {
            cfg.rel_tol = v;
        }
        if let Some(v) = self.abs_tol {
            cfg.abs_tol = v;
        }
        if let Some(v) = self.max_depth {
            cfg.max_depth = v;
        }
        if let Some(v) = self.max_evals {
            cfg.max_evals = v;
        }
        if let Some(v) = self.tail_margin {
            cfg.tail_margin = v;
        }
        cfg.validate().map_err(|e| e.to_string())?;
        Ok(cfg)
    }
}

#[derive(Args)]
struct EvalArgs {
    #[arg(value_enum)]
    target: Target,
    /// Exponent k (complex: RE, IMi, or RE[+-]IMi)
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    k: C,
    /// Term count n (powersum, hp)
    #[arg(long)]
    n: Option<u32>,
    /// Offset b (hurwitz, hp; complex syntax as --k)
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    b: Option<C>,
    /// Zeta representation to evaluate (zeta only)
    #[arg(long, value_enum)]
    rep: Option<Rep>,
    /// Sum from j = 0 via the Hurwitz-zeta route (hp only)
    #[arg(long)]
    from_zero: bool,
    /// Accept re(b) < 0 for hurwitz; unvalidated diagnostic region
    #[arg(long, hide = true)]
    allow_negative_offset: bool,
    #[command(flatten)]
    numerics: NumericsOpts,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(value_enum)]
    target: Target,
    /// Exponent k (complex: RE, IMi, or RE[+-]IMi)
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    k: C,
    /// Term count n (powersum, hp)
    #[arg(long)]
    n: Option<u32>,
    /// Offset b (hurwitz, hp; complex syntax as --k)
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    b: Option<C>,
    /// Compare the from-zero (Hurwitz-route) sum instead (hp only)
    #[arg(long)]
    from_zero: bool,
    /// Maximum accepted relative difference
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[command(flatten)]
    numerics: NumericsOpts,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(value_enum)]
    target: Target,
    /// Left edge of re(k)
    #[arg(long, allow_hyphen_values = true)]
    re_min: f64,
    /// Right edge of re(k)
    #[arg(long, allow_hyphen_values = true)]
    re_max: f64,
    /// Number of re(k) grid points (1 evaluates at re-min)
    #[arg(long, default_value_t = 1)]
    re_steps: u32,
    /// Bottom edge of im(k)
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    im_min: f64,
    /// Top edge of im(k)
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    im_max: f64,
    /// Number of im(k) grid points (1 evaluates at im-min)
    #[arg(long, default_value_t = 1)]
    im_steps: u32,
    /// Term count n (powersum, hp)
    #[arg(long)]
    n: Option<u32>,
    /// Offset b (hurwitz, hp; complex syntax as --k)
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    b: Option<C>,
    /// Sum from j = 0 via the Hurwitz-zeta route (hp only)
    #[arg(long)]
    from_zero: bool,
    /// Output format: one JSON object per row, or CSV with a header
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,
    #[command(flatten)]
    numerics: NumericsOpts,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Level {
    Quick,
    Full,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(value_enum, default_value_t = Level::Quick)]
    level: Level,
    #[command(flatten)]
    numerics: NumericsOpts,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.cmd {
        Cmd::Eval(args) => cmd_eval(args),
        Cmd::Compare(args) => cmd_compare(args),
        Cmd::Scan(args) => cmd_scan(args),
        Cmd::Selftest(args) => cmd_selftest(args),
    }
}

fn usage(msg: &str) -> i32 {
    eprintln!("usage error: {msg}");
    EXIT_USAGE
}

/// Enforces the per-target parameter sets (zeta: k; powersum: k, n;
/// hurwitz: k, b; hp: k, n, b) so a flag is never silently ignored.
fn check_params(target: Target, n: Option<u32>, b: Option<C>) -> Result<(), String> {
    let needs_n = matches!(target, Target::Powersum | Target::Hp);
    let needs_b = matches!(target, Target::Hurwitz | Target::Hp);
    if needs_n && n.is_none() {
        return Err(format!("target {} requires --n", target.name()));
    }
    if !needs_n && n.is_some() {
        return Err(format!("--n does not apply to target {}", target.name()));
    }
    if needs_b && b.is_none() {
        return Err(format!("target {} requires --b", target.name()));
    }
    if !needs_b && b.is_some() {
        return Err(format!("--b does not apply to target {}", target.name()));
    }
    Ok(())
}

fn params_json(target: Target, k: C, n: Option<u32>, b: Option<C>) -> Vec<(&'static str, String)> {
    let mut v = vec![("k", output::complex_json(k))];
    if matches!(target, Target::Powersum | Target::Hp) {
        v.push(("n", n.expect("checked").to_string()));
    }
    if matches!(target, Target::Hurwitz | Target::Hp) {
        v.push(("b", output::complex_json(b.expect("checked"))));
    }
    v
}

fn cmd_eval(args: EvalArgs) -> i32 {
    let cfg = match args.numerics.build() {
        Ok(c) => c,
        Err(e) => return usage(&e),
    };
    if let Err(e) = check_params(args.target, args.n, args.b) {
        return usage(&e);
    }
    if args.rep.is_some() && args.target != Target::Zeta {
        return usage("--rep applies only to target zeta");
    }
    if args.from_zero && args.target != Target::Hp {
        return usage("--from-zero applies only to target hp");
    }
    if args.allow_negative_offset && args.target != Target::Hurwitz {
        return usage("--allow-negative-offset applies only to target hurwitz");
    }
    let result: zetasum::Result<EvalResult<f64>> = match args.target {
        Target::Zeta => {
            let rep = args.rep.unwrap_or(Rep::Global);
            if rep == Rep::Reference && !in_reference_window(args.k) {
                eprintln!(
                    "warning: k is outside the reference series' validated window \
                     (|im k| <= 20, |k - 1| >= 0.1); digits are not guaranteed"
                );
            }
            rep.to_representation().eval(args.k, &cfg)
        }
        Target::Powersum => powersum_ac(args.k, args.n.expect("checked"), &cfg),
        Target::Hurwitz => {
            let b = args.b.expect("checked");
            if args.allow_negative_offset {
                hurwitz_global_unvalidated(args.k, b, &cfg)
            } else {
                hurwitz_global(args.k, b, &cfg)
            }
        }
        Target::Hp => {
            let (n, b) = (args.n.expect("checked"), args.b.expect("checked"));
            if args.from_zero {
                hp_sum_hurwitz(args.k, b, n, &cfg)
            } else {
                hp_sum_ac(args.k, b, n, &cfg)
            }
        }
    };
    match result {
        Ok(res) => {
            let params = params_json(args.target, args.k, args.n, args.b);
            println!("{}", output::eval_json(args.target.name(), &params, &res));
            if res.converged {
                EXIT_OK
            } else {
                EXIT_NOT_CONVERGED
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

/// Picks the independent oracle for a hurwitz comparison; returns an error
/// string when no oracle covers the parameters.
fn hurwitz_oracle(k: C, b: C) -> Result<C, String> {
    let window = |k: C| -> Result<C, String> {
        if !in_reference_window(k) {
            return Err(
                "k is outside the reference oracle window (|im k| <= 20, |k - 1| >= 0.1)"
                    .to_string(),
            );
        }
        zeta_reference(k).map_err(|e| e.to_string())
    };
    if (b - C::new(1.0, 0.0)).norm() <= 1e-12 {
        return window(k);
    }
    if (b - C::new(0.5, 0.0)).norm() <= 1e-12 {
        let z = window(k)?;
        let factor = cpow(C::new(2.0, 0.0), k).map_err(|e| e.to_string())? - C::new(1.0, 0.0);
        return Ok(factor * z);
    }
    if k.im == 0.0 && k.re <= 0.0 && (k.re - k.re.round()).abs() <= 1e-12 {
        let m = (-k.re.round()) as u32;
        return hurwitz_neg_int(m, b).map_err(|e| e.to_string());
    }
    Err(
        "no independent oracle for hurwitz at these parameters (available: b = 1, b = 0.5, \
         or non-positive integer k)"
            .to_string(),
    )
}

fn cmd_compare(args: CompareArgs) -> i32 {
    let cfg = match args.numerics.build() {
        Ok(c) => c,
        Err(e) => return usage(&e),
    };
    if let Err(e) = check_params(args.target, args.n, args.b) {
        return usage(&e);
    }
    if args.from_zero && args.target != Target::Hp {
        return usage("--from-zero applies only to target hp");
    }
    let formula: zetasum::Result<EvalResult<f64>> = match args.target {
        Target::Zeta => zeta_global(args.k, &cfg),
        Target::Powersum => powersum_ac(args.k, args.n.expect("checked"), &cfg),
        Target::Hurwitz => hurwitz_global(args.k, args.b.expect("checked"), &cfg),
        Target::Hp => {
            let (n, b) = (args.n.expect("checked"), args.b.expect("checked"));
            if args.from_zero {
                hp_sum_hurwitz(args.k, b, n, &cfg)
            } else {
                hp_sum_ac(args.k, b, n, &cfg)
            }
        }
    };
    let formula = match formula {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_ERROR;
        }
    };
    let oracle: Result<C, String> = match args.target {
        Target::Zeta => {
            if in_reference_window(args.k) {
                zeta_reference(args.k).map_err(|e| e.to_string())
            } else {
                Err(
                    "k is outside the reference oracle window (|im k| <= 20, |k - 1| >= 0.1)"
                        .to_string(),
                )
            }
        }
        Target::Powersum => Ok(powersum_bruteforce(args.k, args.n.expect("checked"))),
        Target::Hurwitz => hurwitz_oracle(args.k, args.b.expect("checked")),
        Target::Hp => {
            let (n, b) = (args.n.expect("checked"), args.b.expect("checked"));
            let start = if args.from_zero { 0 } else { 1 };
            hp_bruteforce(args.k, b, n, start).map_err(|e| e.to_string())
        }
    };
    let oracle = match oracle {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_ERROR;
        }
    };
    let abs_diff = (formula.value - oracle).norm();
    let rel_diff = abs_diff / formula.value.norm().max(oracle.norm()).max(1.0);
    println!(
        "{}",
        output::compare_json(formula.value, oracle, abs_diff, rel_diff)
    );
    if rel_diff > args.tol {
        eprintln!(
            "comparison failed: rel_diff {rel_diff:.3e} exceeds tolerance {:.3e}",
            args.tol
        );
        EXIT_CHECK_FAILED
    } else if !formula.converged {
        EXIT_NOT_CONVERGED
    } else {
        EXIT_OK
    }
}

fn grid_axis(min: f64, max: f64, steps: u32) -> Vec<f64> {
    if steps == 1 {
        return vec![min];
    }
    (0..steps)
        .map(|i| min + (max - min) * f64::from(i) / f64::from(steps - 1))
        .collect()
}

fn cmd_scan(args: ScanArgs) -> i32 {
    let cfg = match args.numerics.build() {
        Ok(c) => c,
        Err(e) => return usage(&e),
    };
    if let Err(e) = check_params(args.target, args.n, args.b) {
        return usage(&e);
    }
    if args.from_zero && args.target != Target::Hp {
        return usage("--from-zero applies only to target hp");
    }
    if args.re_steps < 1 || args.im_steps < 1 {
        return usage("grid steps must be >= 1");
    }
    if (args.re_steps > 1 && args.re_min > args.re_max)
        || (args.im_steps > 1 && args.im_min > args.im_max)
    {
        return usage("grid minimum must not exceed maximum");
    }
    let singular_at: C = match args.target {
        Target::Zeta | Target::Hurwitz => C::new(1.0, 0.0),
        Target::Powersum | Target::Hp => C::new(-1.0, 0.0),
    };
    let mut points = Vec::new();
    for re in grid_axis(args.re_min, args.re_max, args.re_steps) {
        for im in grid_axis(args.im_min, args.im_max, args.im_steps) {
            points.push(C::new(re, im));
        }
    }
    let (target, n, b, from_zero) = (args.target, args.n, args.b, args.from_zero);
    let rows: Vec<ScanRow> = points
        .par_iter()
        .map(|&k| {
            if (k - singular_at).norm() < 1e-6 {
                return ScanRow {
                    k,
                    value: None,
                    err_estimate: None,
                    converged: false,
                    status: RowStatus::Singular,
                };
            }
            let res: zetasum::Result<EvalResult<f64>> = match target {
                Target::Zeta => zeta_global(k, &cfg),
                Target::Powersum => powersum_ac(k, n.expect("checked"), &cfg),
                Target::Hurwitz => hurwitz_global(k, b.expect("checked"), &cfg),
                Target::Hp => {
                    let (n, b) = (n.expect("checked"), b.expect("checked"));
                    if from_zero {
                        hp_sum_hurwitz(k, b, n, &cfg)
                    } else {
                        hp_sum_ac(k, b, n, &cfg)
                    }
                }
            };
            match res {
                Ok(r) => ScanRow {
                    k,
                    value: Some(r.value),
                    err_estimate: Some(r.err_estimate),
                    converged: r.converged,
                    status: if r.converged {
                        RowStatus::Ok
                    } else {
                        RowStatus::NotConverged
                    },
                },
                Err(_) => ScanRow {
                    k,
                    value: None,
                    err_estimate: None,
                    converged: false,
                    status: RowStatus::Error,
                },
            }
        })
        .collect();
    match args.format {
        OutFormat::Json => {
            for row in &rows {
                println!("{}", output::scan_row_json(row));
            }
        }
        OutFormat::Csv => {
            println!("{}", output::SCAN_CSV_HEADER);
            for row in &rows {
                println!("{}", output::scan_row_csv(row));
            }
        }
    }
    EXIT_OK
}

fn cmd_selftest(args: SelftestArgs) -> i32 {
    let cfg = match args.numerics.build() {
        Ok(c) => c,
        Err(e) => return usage(&e),
    };
    let (level_name, results): (&str, Vec<CheckResult>) = match args.level {
        Level::Quick => ("quick", selftest::run_quick(&cfg)),
        Level::Full => ("full", selftest::run_full(&cfg)),
    };
    let mut failures = 0usize;
    for r in &results {
        let status = if r.passed {
            "PASS"
        } else {
            failures += 1;
            "FAIL"
        };
        println!(
            "[{status}] {}: max deviation {:.3e} (tolerance {:.3e})",
            r.name, r.max_deviation, r.tolerance
        );
    }
    println!(
        "{{\"level\":\"{level_name}\",\"checks\":{},\"failures\":{failures},\"passed\":{}}}",
        results.len(),
        failures == 0
    );
    if failures == 0 {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}
