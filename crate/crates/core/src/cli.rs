//! Command-line front end.
//!
//! Exit codes: 0 success, 2 disagreement or failed check, 3 resource limit
//! hit, 64 usage or parse error, 65 coset-representative hypothesis not met.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::coxeter::{a2n, export_diagram, DiagramFormat, GeneratorSubset};
use crate::decomposition::{check_totals, Decomposition};
use crate::error::Error;
use crate::fp_group::{group_order, subgroup_table, verify_coset_reps, DEFAULT_MAX_COSETS};
use crate::matrix_group::{check_homomorphism, closure, phi_images};
use crate::parabolic::{
    coset_rep_words, order_bruteforce, order_recursive, presentation, verify_theorem, Limits,
    Orders, RepFamily, Verdict, VerificationReport, VerifyOptions, DEFAULT_ENUMERATION_CAP,
};
use crate::{generator_subset, matrix_group::DEFAULT_ELEMENT_LIMIT};

pub const EXIT_OK: u8 = 0;
pub const EXIT_DISAGREE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_HYPOTHESIS: u8 = 65;

/// Environment variable overriding the default coset bound.
pub const MAX_COSETS_ENV: &str = "COXETER2D_MAX_COSETS";

#[derive(Debug, Parser)]
#[command(
    name = "coxeter2d",
    version,
    about = "Verify two-dimensional Coxeter presentations of parabolic intersections in GL(n, F2)"
)]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Order of P_{λ|μ} by one or all methods.
    Order(OrderArgs),
    /// Full cross-check for one pair or every pair of a given total.
    Verify(VerifyArgs),
    /// Coxeter diagram of A_{2,n} or a restriction of it.
    Diagram(DiagramArgs),
    /// Check that every relator of A_{2,n} holds for the matrix images.
    PhiCheck(PhiCheckArgs),
    /// Coset representatives of the split subgroup and their verification.
    Cosets(CosetsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Method {
    Recursion,
    Bruteforce,
    Presentation,
    Closure,
    All,
}

#[derive(Debug, Args)]
struct LimitArgs {
    /// Coset table bound (default 2000000, or $COXETER2D_MAX_COSETS).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_cosets: Option<u64>,
    /// Matrix closure bound.
    #[arg(long, default_value_t = DEFAULT_ELEMENT_LIMIT as u64, value_parser = clap::value_parser!(u64).range(1..))]
    element_limit: u64,
    /// Largest total for exhaustive matrix enumeration.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    enum_cap: u64,
}

#[derive(Debug, Args)]
struct PairArgs {
    /// Decomposition λ, e.g. 2,1,1.
    #[arg(long)]
    lambda: String,
    /// Decomposition μ with the same total.
    #[arg(long)]
    mu: String,
}

#[derive(Debug, Args)]
struct OrderArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[arg(long, value_enum, default_value_t = Method::Recursion)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Verify every ordered pair of compositions of this total.
    #[arg(long, requires = "all_pairs", conflicts_with_all = ["lambda", "mu"])]
    total: Option<usize>,
    #[arg(long, requires = "total")]
    all_pairs: bool,
    #[arg(long, requires = "mu")]
    lambda: Option<String>,
    #[arg(long, requires = "lambda")]
    mu: Option<String>,
    #[arg(long)]
    no_presentation: bool,
    #[arg(long)]
    no_bruteforce: bool,
    #[arg(long)]
    no_image: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Debug, Args)]
struct DiagramArgs {
    #[arg(long)]
    n: usize,
    /// Restrict to these generators, e.g. x1,y1,y2.
    #[arg(long)]
    subset: Option<String>,
    /// dot or json.
    #[arg(long, default_value = "dot")]
    format: String,
}

#[derive(Debug, Args)]
struct PhiCheckArgs {
    #[arg(long)]
    n: usize,
}

#[derive(Debug, Args)]
struct CosetsArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Also dump the coset table of the split subgroup as CSV.
    #[arg(long)]
    table_csv: Option<PathBuf>,
    #[command(flatten)]
    limits: LimitArgs,
}

/// A failure that maps onto an exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_resource() {
            EXIT_RESOURCE
        } else if matches!(e, Error::Hypothesis(_)) {
            EXIT_HYPOTHESIS
        } else {
            EXIT_USAGE
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Output text plus the exit code it should be reported with.
struct Outcome {
    text: String,
    code: u8,
}

impl LimitArgs {
    fn resolve(&self) -> Result<Limits, Failure> {
        let max_cosets = match self.max_cosets {
            Some(v) => v as usize,
            None => match std::env::var(MAX_COSETS_ENV) {
                Ok(v) => v
                    .trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| {
                        usage(format!("{MAX_COSETS_ENV}={v} is not a positive integer"))
                    })?,
                Err(_) => DEFAULT_MAX_COSETS,
            },
        };
        Ok(Limits {
            max_cosets,
            element_limit: self.element_limit as usize,
            enumeration_cap: self.enum_cap as usize,
        })
    }
}

fn parse_pair(lambda: &str, mu: &str) -> Result<(Decomposition, Decomposition), Failure> {
    let lambda: Decomposition = lambda.parse()?;
    let mu: Decomposition = mu.parse()?;
    check_totals(&lambda, &mu)?;
    Ok((lambda, mu))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn cmd_order(args: &OrderArgs) -> Result<Outcome, Failure> {
    let (lambda, mu) = parse_pair(&args.pair.lambda, &args.pair.mu)?;
    let limits = args.limits.resolve()?;
    let n = lambda.total() - 1;
    let wants = |m: Method| args.method == m || args.method == Method::All;

    let recursive = order_recursive(&lambda, &mu)?;
    let mut orders = Orders {
        recursive: recursive.clone(),
        ..Orders::default()
    };
    if wants(Method::Bruteforce) {
        orders.bruteforce = Some(order_bruteforce(&lambda, &mu, limits.enumeration_cap)?);
    }
    if wants(Method::Presentation) {
        orders.presentation = Some(group_order(
            &presentation(&lambda, &mu)?,
            limits.max_cosets,
        )?);
    }
    if wants(Method::Closure) {
        let gens = phi_images(&generator_subset(&lambda, &mu)?, n)?;
        orders.closure = Some(closure(n + 1, &gens, limits.element_limit)?.order());
    }
    let agree = orders.agree();

    #[derive(Serialize)]
    struct OrderReport<'a> {
        lambda: &'a Decomposition,
        mu: &'a Decomposition,
        method: Method,
        orders: &'a Orders,
        agree: bool,
    }
    let report = OrderReport {
        lambda: &lambda,
        mu: &mu,
        method: args.method,
        orders: &orders,
        agree,
    };
    let text = match args.format {
        Format::Json => to_json(&report),
        Format::Text => {
            let pick = |name: &str, o: &Option<BigUint>| o.as_ref().map(|v| format!(" {name}={v}"));
            let mut line = format!("{lambda} | {mu}:");
            if args.method == Method::Recursion || args.method == Method::All {
                line.push_str(&format!(" recursive={recursive}"));
            }
            for part in [
                pick("bruteforce", &orders.bruteforce),
                pick("presentation", &orders.presentation),
                pick("closure", &orders.closure),
            ]
            .into_iter()
            .flatten()
            {
                line.push_str(&part);
            }
            line.push('\n');
            line
        }
    };
    Ok(Outcome {
        text,
        code: if agree { EXIT_OK } else { EXIT_DISAGREE },
    })
}

fn verdict_text(r: &VerificationReport) -> String {
    let o = &r.orders;
    let mut line = format!("{} | {}: recursive={}", r.lambda, r.mu, o.recursive);
    for (name, v) in [
        ("bruteforce", &o.bruteforce),
        ("presentation", &o.presentation),
        ("closure", &o.closure),
    ] {
        if let Some(v) = v {
            line.push_str(&format!(" {name}={v}"));
        }
    }
    if let Some(img) = r.image_check {
        line.push_str(&format!(" image={img}"));
    }
    match &r.verdict {
        Verdict::Pass => line.push_str(" PASS"),
        Verdict::Fail(why) => line.push_str(&format!(" FAIL ({why})")),
        Verdict::Skipped(why) => line.push_str(&format!(" SKIPPED ({why})")),
    }
    line.push('\n');
    line
}

fn cmd_verify(args: &VerifyArgs) -> Result<Outcome, Failure> {
    let limits = args.limits.resolve()?;
    let pairs: Vec<(Decomposition, Decomposition)> = match (&args.total, &args.lambda, &args.mu) {
        (Some(total), _, _) => {
            if *total == 0 {
                return Err(usage("--total must be positive"));
            }
            let all = Decomposition::all(*total);
            all.iter()
                .flat_map(|l| all.iter().map(move |m| (l.clone(), m.clone())))
                .collect()
        }
        (None, Some(l), Some(m)) => vec![parse_pair(l, m)?],
        _ => {
            return Err(usage(
                "give either --total T --all-pairs or --lambda L --mu M",
            ))
        }
    };
    let options = VerifyOptions {
        run_presentation: !args.no_presentation,
        run_bruteforce: !args.no_bruteforce,
        run_image: !args.no_image,
        limits,
    };
    let reports = pairs
        .par_iter()
        .map(|(l, m)| verify_theorem(l, m, &options))
        .collect::<Result<Vec<_>, Error>>()?;

    let code = if reports
        .iter()
        .any(|r| matches!(r.verdict, Verdict::Fail(_)))
    {
        EXIT_DISAGREE
    } else if reports
        .iter()
        .any(|r| matches!(r.verdict, Verdict::Skipped(_)))
    {
        EXIT_RESOURCE
    } else {
        EXIT_OK
    };
    let text = match args.format {
        Format::Json => to_json(&reports),
        Format::Text => reports.iter().map(verdict_text).collect(),
    };
    Ok(Outcome { text, code })
}

fn cmd_diagram(args: &DiagramArgs) -> Result<Outcome, Failure> {
    let format: DiagramFormat = args.format.parse()?;
    let mut system = a2n(args.n)?;
    if let Some(subset) = &args.subset {
        let subset: GeneratorSubset = subset.parse()?;
        system = system.restrict(&subset)?;
    }
    let mut text = export_diagram(&system, format);
    if !text.ends_with('\n') {
        text.push('\n');
    }
    Ok(Outcome {
        text,
        code: EXIT_OK,
    })
}

fn cmd_phi_check(args: &PhiCheckArgs) -> Result<Outcome, Failure> {
    if !(1..=31).contains(&args.n) {
        return Err(usage(format!("--n must be in 1..=31, got {}", args.n)));
    }
    let report = check_homomorphism(&a2n(args.n)?, args.n)?;
    let text = to_json(&json!({
        "n": args.n,
        "ok": report.ok,
        "failing_relator": report.failing_relator,
    }));
    Ok(Outcome {
        text,
        code: if report.ok { EXIT_OK } else { EXIT_DISAGREE },
    })
}

fn cmd_cosets(args: &CosetsArgs) -> Result<Outcome, Failure> {
    let (lambda, mu) = parse_pair(&args.pair.lambda, &args.pair.mu)?;
    let limits = args.limits.resolve()?;
    let family = RepFamily::for_pair(&lambda, &mu)?;
    let reps = coset_rep_words(&lambda, &mu)?;
    let mu_split = mu.split_last()?;
    let system = presentation(&lambda, &mu)?;
    let h_subset = generator_subset(&lambda, &mu_split)?;
    let report = verify_coset_reps(&system, &h_subset, &reps, limits.max_cosets)?;
    if let Some(path) = &args.table_csv {
        let table = subgroup_table(&system, &h_subset, limits.max_cosets)?;
        let mut buf = Vec::new();
        table
            .write_csv(&mut buf)
            .and_then(|_| fs::write(path, buf))
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let expected = family.expected_count(mu.last());
    let ok = report.distinct && report.covering && report.count == expected;
    let text = to_json(&json!({
        "lambda": lambda,
        "mu": mu,
        "mu_split": mu_split,
        "family": family,
        "expected_count": expected,
        "reps": reps,
        "report": report,
    }));
    Ok(Outcome {
        text,
        code: if ok { EXIT_OK } else { EXIT_DISAGREE },
    })
}

/// Parses `args`, runs the command and writes its output. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = match &cli.command {
        Command::Order(a) => cmd_order(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Diagram(a) => cmd_diagram(a),
        Command::PhiCheck(a) => cmd_phi_check(a),
        Command::Cosets(a) => cmd_cosets(a),
    };
    match outcome {
        Ok(Outcome { text, code }) => {
            let written = match &cli.output {
                Some(path) => fs::write(path, &text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => code,
                Err(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                    EXIT_USAGE
                }
            }
        }
        Err(Failure { code, message }) => {
            let _ = writeln!(stderr, "error: {message}");
            code
        }
    }
}
