mod campaign;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use lincomplex::lincomplex::{fast, games_chan, general, ppp};
use lincomplex::oracle::{enumerate_by_period, lemma_table};
use lincomplex::{berlekamp_massey, gcd_method, solve, CyclicSeq, Error, OpMeter, Poly2};
use serde::Serialize;

use campaign::{Family, EXHAUSTIVE_MAX};
use report::{emit, print_json, Report};

#[derive(Parser)]
#[command(
    name = "lincomplex",
    version,
    about = "Linear complexity of periodic binary sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the linear complexity and minimal polynomial of one period.
    Compute(ComputeArgs),
    /// Cross-check the fast algorithms against both oracles.
    Verify(VerifyArgs),
    /// Meter the fast algorithms over a family of periods.
    Bench(BenchArgs),
    /// Count sequences by minimal polynomial power for a primitive polynomial.
    Enumerate(EnumerateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Bits,
    Hex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgorithmArg {
    Auto,
    GamesChan,
    Ppp,
    General,
    Fast,
    Bm,
    Gcd,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "seq"])))]
struct ComputeArgs {
    /// File holding one period on a single line.
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
    /// The period itself.
    #[arg(long)]
    seq: Option<String>,
    #[arg(long, value_enum, default_value = "bits")]
    format: InputFormat,
    /// Period length; required for hex input.
    #[arg(long = "len", value_name = "N")]
    len: Option<usize>,
    #[arg(long, value_enum, default_value = "auto")]
    algorithm: AlgorithmArg,
    /// Irreducible polynomial for `ppp` (bits, constant term first, or x^2+x+1 form).
    #[arg(long, default_value = "11")]
    poly: String,
    #[arg(long, conflicts_with = "plain")]
    json: bool,
    #[arg(long)]
    plain: bool,
    /// Report elapsed_ns as 0 so output is reproducible.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("target").required(true).args(["n", "family"])))]
struct VerifyArgs {
    /// Single period to check.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long, default_value_t = 10)]
    n_max: u32,
    /// Base prime for the p^n family.
    #[arg(long, default_value_t = 3)]
    p: usize,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Check every input instead of random ones (periods up to 24).
    #[arg(long)]
    exhaustive: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, default_value_t = 10)]
    n_max: u32,
    #[arg(long, default_value_t = 3)]
    p: usize,
    #[arg(long, default_value_t = 100)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: TableFormat,
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Primitive polynomial, bits with constant term first (e.g. 111).
    #[arg(long)]
    poly: String,
    #[arg(long)]
    max_power: u32,
}

/// A failure with its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

/// Errors from forcing an algorithm onto a period it does not handle map to
/// exit code 3; everything else is bad input.
fn algorithm_failure(e: Error) -> Failure {
    let code = match e {
        Error::UnsupportedPeriod(_)
        | Error::InvalidLength { .. }
        | Error::InvalidPrime(_)
        | Error::NotGeneratedBy => 3,
        _ => 2,
    };
    Failure {
        code,
        message: e.to_string(),
    }
}

fn read_sequence(args: &ComputeArgs) -> Result<CyclicSeq, Failure> {
    let text = match (&args.seq, &args.input) {
        (Some(s), _) => s.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
        (None, None) => return Err(Failure::usage("one of --in or --seq is required")),
    };
    let text = text.trim();
    let s = match args.format {
        InputFormat::Bits => text
            .parse::<CyclicSeq>()
            .map_err(|e| Failure::usage(e.to_string()))?,
        InputFormat::Hex => {
            let len = args
                .len
                .ok_or_else(|| Failure::usage("--len is required for hex input"))?;
            CyclicSeq::from_hex(text, len).map_err(|e| Failure::usage(e.to_string()))?
        }
    };
    if s.is_empty() {
        return Err(Failure::usage("empty sequence"));
    }
    if let Some(len) = args.len {
        if len != s.len() {
            return Err(Failure::usage(format!(
                "--len {len} does not match the {} bits given",
                s.len()
            )));
        }
    }
    Ok(s)
}

fn compute(args: ComputeArgs) -> Result<(), Failure> {
    let s = read_sequence(&args)?;
    let start = Instant::now();
    let mut meter = OpMeter::new();
    let res = match args.algorithm {
        AlgorithmArg::Auto => solve(&s),
        AlgorithmArg::GamesChan => games_chan(&s, &mut meter).map_err(algorithm_failure)?,
        AlgorithmArg::Ppp => {
            let f: Poly2 = args
                .poly
                .parse()
                .map_err(|e: Error| Failure::usage(e.to_string()))?;
            ppp(&f, &s, &mut meter).map_err(algorithm_failure)?.1
        }
        AlgorithmArg::General => general(&s, &mut meter).map_err(algorithm_failure)?,
        AlgorithmArg::Fast => fast(&s, &mut meter).map_err(algorithm_failure)?,
        AlgorithmArg::Bm => berlekamp_massey(&s),
        AlgorithmArg::Gcd => gcd_method(&s),
    };
    let elapsed_ns = if args.no_timing {
        0
    } else {
        start.elapsed().as_nanos() as u64
    };
    let format = match args.format {
        InputFormat::Bits => "bits",
        InputFormat::Hex => "hex",
    };
    let report = Report::new(&res, s.len(), format, elapsed_ns);
    if args.plain {
        emit(&report.plain());
    } else {
        print_json(&report);
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<bool, Failure> {
    let periods = match (args.n, args.family) {
        (Some(0), _) => return Err(Failure::usage("--n must be positive")),
        (Some(n), _) => vec![campaign::Period { n: None, len: n }],
        (None, Some(family)) => family.periods(args.n_max, args.p),
        (None, None) => return Err(Failure::usage("one of --n or --family is required")),
    };
    if args.exhaustive {
        if let Some(p) = periods.iter().find(|p| p.len > EXHAUSTIVE_MAX) {
            return Err(Failure::usage(format!(
                "--exhaustive supports periods up to {EXHAUSTIVE_MAX}, got {}",
                p.len
            )));
        }
    }
    let summary = campaign::verify(&periods, args.exhaustive, args.trials, args.seed);
    print_json(&summary);
    Ok(summary.mismatches == 0 && summary.bound_violations == 0)
}

fn bench(args: BenchArgs) -> Result<bool, Failure> {
    let periods = args.family.periods(args.n_max, args.p);
    let rows = campaign::bench(&periods, args.trials, args.seed, !args.no_timing);
    match args.format {
        TableFormat::Json => print_json(&rows),
        TableFormat::Csv => emit(&campaign::bench_csv(&rows)),
    }
    Ok(rows.iter().all(|r| r.within_bound))
}

#[derive(Serialize)]
struct EnumerateRow {
    ell: u32,
    i: u32,
    period: usize,
    formula: u64,
    brute: u64,
    pass: bool,
}

#[derive(Serialize)]
struct PeriodCount {
    period: usize,
    count: usize,
}

#[derive(Serialize)]
struct EnumerateReport {
    poly_bits: String,
    poly_human: String,
    k: usize,
    max_power: u32,
    rows: Vec<EnumerateRow>,
    periods: Vec<PeriodCount>,
    all_pass: bool,
}

fn enumerate(args: EnumerateArgs) -> Result<bool, Failure> {
    let f: Poly2 = args
        .poly
        .parse()
        .map_err(|e: Error| Failure::usage(e.to_string()))?;
    let map_err = |e: Error| match e {
        Error::Infeasible(_) => Failure {
            code: 4,
            message: e.to_string(),
        },
        other => Failure::usage(other.to_string()),
    };
    let rows: Vec<EnumerateRow> = lemma_table(&f, args.max_power)
        .map_err(map_err)?
        .into_iter()
        .map(|r| EnumerateRow {
            pass: r.pass(),
            ell: r.ell,
            i: r.i,
            period: r.period,
            formula: r.formula,
            brute: r.brute,
        })
        .collect();
    let periods = enumerate_by_period(&f, args.max_power).map_err(map_err)?;
    let all_pass = rows.iter().all(|r| r.pass);
    print_json(&EnumerateReport {
        poly_bits: f.to_bit_string(),
        poly_human: f.to_string(),
        k: f.degree().unwrap_or(0),
        max_power: args.max_power,
        rows,
        periods: periods
            .into_iter()
            .map(|(period, count)| PeriodCount { period, count })
            .collect(),
        all_pass,
    });
    Ok(all_pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute(args) => compute(args).map(|()| true),
        Command::Verify(args) => verify(args),
        Command::Bench(args) => bench(args),
        Command::Enumerate(args) => enumerate(args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
