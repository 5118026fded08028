//! Differential verification and meter benchmarking over families of
//! periods. Random inputs come from ChaCha8 seeded with `--seed`, one
//! stream per period, drawn sequentially so runs are reproducible.

use std::time::Instant;

use clap::ValueEnum;
use lincomplex::lincomplex::{choose, fast, AlgorithmChoice};
use lincomplex::{berlekamp_massey, gcd_method, solve, AlgorithmTag, CyclicSeq, OpMeter};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::report::bound_for;

pub const EXHAUSTIVE_MAX: usize = 24;
const MISMATCH_LISTING: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Pow2,
    #[value(name = "3x2n")]
    ThreeX2n,
    #[value(name = "5x2n")]
    FiveX2n,
    #[value(name = "13x2n")]
    ThirteenX2n,
    #[value(name = "29x2n")]
    TwentyNineX2n,
    #[value(name = "p^n")]
    PrimePower,
    Composite,
}

/// A period in a campaign: `n` is the family exponent where one exists.
#[derive(Clone, Copy, Debug)]
pub struct Period {
    pub n: Option<u32>,
    pub len: usize,
}

impl Family {
    /// Periods up to exponent `n_max`. `p` is the base for `p^n`.
    pub fn periods(self, n_max: u32, p: usize) -> Vec<Period> {
        let scaled = |base: usize| {
            (0..=n_max)
                .map(|n| Period {
                    n: Some(n),
                    len: base << n,
                })
                .collect()
        };
        match self {
            Family::Pow2 => scaled(1),
            Family::ThreeX2n => scaled(3),
            Family::FiveX2n => scaled(5),
            Family::ThirteenX2n => scaled(13),
            Family::TwentyNineX2n => scaled(29),
            Family::PrimePower => (1..=n_max)
                .map_while(|n| p.checked_pow(n).map(|len| Period { n: Some(n), len }))
                .collect(),
            Family::Composite => (3..=1usize << n_max)
                .step_by(2)
                .filter(|&len| matches!(choose(len), AlgorithmChoice::OddComposite { .. }))
                .map(|len| Period { n: None, len })
                .collect(),
        }
    }
}

fn random_inputs(seed: u64, len: usize, trials: u64) -> Vec<CyclicSeq> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(len as u64);
    (0..trials)
        .map(|_| {
            let words = (0..len.div_ceil(64)).map(|_| rng.gen()).collect();
            CyclicSeq::from_words(words, len)
        })
        .collect()
}

fn inputs_for(len: usize, exhaustive: bool, trials: u64, seed: u64) -> Vec<CyclicSeq> {
    if exhaustive {
        (0u64..1 << len)
            .map(|v| CyclicSeq::from_words(vec![v], len))
            .collect()
    } else {
        random_inputs(seed, len, trials)
    }
}

fn render(s: &CyclicSeq) -> String {
    if s.len() <= 256 {
        s.to_string()
    } else {
        s.to_hex()
    }
}

#[derive(Serialize)]
pub struct Mismatch {
    pub n: usize,
    pub index: usize,
    pub input: String,
    pub solve: usize,
    pub gcd: usize,
    pub bm: usize,
}

#[derive(Serialize)]
pub struct VerifyRow {
    pub n: usize,
    pub algorithm: &'static str,
    pub checked: u64,
    pub mismatches: u64,
    pub bound_violations: u64,
    pub max_ops: u64,
    pub bound: Option<u64>,
}

#[derive(Serialize)]
pub struct VerifySummary {
    pub checked: u64,
    pub mismatches: u64,
    pub bound_violations: u64,
    pub seed: u64,
    pub exhaustive: bool,
    pub rows: Vec<VerifyRow>,
    pub mismatch_examples: Vec<Mismatch>,
}

struct Outcome {
    mismatch: Option<Mismatch>,
    over_bound: bool,
    ops: u64,
    algorithm: AlgorithmTag,
}

pub fn verify(periods: &[Period], exhaustive: bool, trials: u64, seed: u64) -> VerifySummary {
    let mut rows = Vec::new();
    let mut examples = Vec::new();
    for period in periods {
        let len = period.len;
        let inputs = inputs_for(len, exhaustive, trials, seed);
        let outcomes: Vec<Outcome> = inputs
            .par_iter()
            .enumerate()
            .map(|(index, s)| {
                let r = solve(s);
                let g = gcd_method(s);
                let b = berlekamp_massey(s);
                let agree = (r.complexity, &r.min_poly) == (g.complexity, &g.min_poly)
                    && (g.complexity, &g.min_poly) == (b.complexity, &b.min_poly);
                let bound = bound_for(r.algorithm, len);
                Outcome {
                    mismatch: (!agree).then(|| Mismatch {
                        n: len,
                        index,
                        input: render(s),
                        solve: r.complexity,
                        gcd: g.complexity,
                        bm: b.complexity,
                    }),
                    over_bound: bound.is_some_and(|b| r.meter.total() > b),
                    ops: r.meter.total(),
                    algorithm: r.algorithm,
                }
            })
            .collect();
        let mismatches = outcomes.iter().filter(|o| o.mismatch.is_some()).count() as u64;
        rows.push(VerifyRow {
            n: len,
            algorithm: outcomes
                .first()
                .map_or(choose(len).tag(), |o| o.algorithm)
                .name(),
            checked: outcomes.len() as u64,
            mismatches,
            bound_violations: outcomes.iter().filter(|o| o.over_bound).count() as u64,
            max_ops: outcomes.iter().map(|o| o.ops).max().unwrap_or(0),
            bound: outcomes.first().and_then(|o| bound_for(o.algorithm, len)),
        });
        for o in outcomes {
            if examples.len() < MISMATCH_LISTING {
                examples.extend(o.mismatch);
            }
        }
    }
    VerifySummary {
        checked: rows.iter().map(|r| r.checked).sum(),
        mismatches: rows.iter().map(|r| r.mismatches).sum(),
        bound_violations: rows.iter().map(|r| r.bound_violations).sum(),
        seed,
        exhaustive,
        rows,
        mismatch_examples: examples,
    }
}

#[derive(Serialize)]
pub struct BenchRow {
    pub n: Option<u32>,
    #[serde(rename = "N")]
    pub len: usize,
    pub algorithm: &'static str,
    pub trials: u64,
    pub max_ops: u64,
    pub mean_ops: f64,
    pub bound: Option<u64>,
    pub within_bound: bool,
    pub beta_max: f64,
    pub beta_mean: f64,
    pub wall_ns: u64,
}

/// Meters the specialised algorithm for each period; periods without one
/// are skipped.
pub fn bench(periods: &[Period], trials: u64, seed: u64, timing: bool) -> Vec<BenchRow> {
    periods
        .iter()
        .filter_map(|period| {
            let len = period.len;
            let inputs = random_inputs(seed, len, trials);
            let start = Instant::now();
            let results: Vec<_> = inputs
                .par_iter()
                .map(|s| {
                    let mut meter = OpMeter::new();
                    fast(s, &mut meter)
                        .ok()
                        .map(|r| (r.algorithm, meter.total()))
                })
                .collect::<Option<Vec<_>>>()?;
            let wall_ns = if timing {
                start.elapsed().as_nanos() as u64
            } else {
                0
            };
            let tag = results.first().map(|r| r.0)?;
            let max_ops = results.iter().map(|r| r.1).max().unwrap_or(0);
            let mean_ops = results.iter().map(|r| r.1 as f64).sum::<f64>() / trials.max(1) as f64;
            let bound = bound_for(tag, len);
            Some(BenchRow {
                n: period.n,
                len,
                algorithm: tag.name(),
                trials,
                max_ops,
                mean_ops,
                bound,
                within_bound: bound.map_or(true, |b| max_ops <= b),
                beta_max: max_ops as f64 / len as f64,
                beta_mean: mean_ops / len as f64,
                wall_ns,
            })
        })
        .collect()
}

pub fn bench_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(
        "n,N,algorithm,trials,max_ops,mean_ops,bound,within_bound,beta_max,beta_mean,wall_ns\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{:.3},{},{},{:.4},{:.4},{}\n",
            r.n.map(|n| n.to_string()).unwrap_or_default(),
            r.len,
            r.algorithm,
            r.trials,
            r.max_ops,
            r.mean_ops,
            r.bound.map(|b| b.to_string()).unwrap_or_default(),
            r.within_bound,
            r.beta_max,
            r.beta_mean,
            r.wall_ns,
        ));
    }
    out
}
