use std::io::Write;

use lincomplex::gf2poly::split_two_power;
use lincomplex::lincomplex::{
    fast_3x2n_bound, fast_px2n_bound, games_chan_bound, odd_prime_power_bound,
};
use lincomplex::{AlgorithmTag, LcResult};
use serde::Serialize;

#[derive(Serialize)]
pub struct Ops {
    pub xor: u64,
    pub cmp: u64,
    pub counter: u64,
    pub total: u64,
}

#[derive(Serialize)]
pub struct DeltaEntry {
    pub factor_bits: String,
    pub factor_human: String,
    pub exponent: u64,
}

#[derive(Serialize)]
pub struct Report {
    pub n: usize,
    pub input_format: &'static str,
    pub algorithm: &'static str,
    pub complexity: usize,
    pub min_poly_bits: String,
    pub min_poly_human: String,
    pub deltas: Option<Vec<DeltaEntry>>,
    pub ops: Ops,
    pub bound: Option<u64>,
    pub within_bound: bool,
    pub elapsed_ns: u64,
}

impl Report {
    pub fn new(res: &LcResult, n: usize, input_format: &'static str, elapsed_ns: u64) -> Self {
        let bound = bound_for(res.algorithm, n);
        let total = res.meter.total();
        Report {
            n,
            input_format,
            algorithm: res.algorithm.name(),
            complexity: res.complexity,
            min_poly_bits: res.min_poly.to_bit_string(),
            min_poly_human: res.min_poly_human(),
            deltas: res.deltas.as_ref().map(|ds| {
                ds.iter()
                    .map(|(q, d)| DeltaEntry {
                        factor_bits: q.to_bit_string(),
                        factor_human: q.to_string(),
                        exponent: *d,
                    })
                    .collect()
            }),
            ops: Ops {
                xor: res.meter.xor_ops(),
                cmp: res.meter.cmp_ops(),
                counter: res.meter.counter_ops(),
                total,
            },
            bound,
            within_bound: bound.map_or(true, |b| total <= b),
            elapsed_ns,
        }
    }

    pub fn plain(&self) -> String {
        let mut out = format!(
            "n: {}\nalgorithm: {}\ncomplexity: {}\nmin_poly: {} [{}]\nops: xor={} cmp={} counter={} total={}\n",
            self.n,
            self.algorithm,
            self.complexity,
            self.min_poly_human,
            self.min_poly_bits,
            self.ops.xor,
            self.ops.cmp,
            self.ops.counter,
            self.ops.total,
        );
        if let Some(b) = self.bound {
            let verdict = if self.within_bound {
                "within"
            } else {
                "EXCEEDED"
            };
            out.push_str(&format!("bound: {b} ({verdict})\n"));
        }
        out.push_str(&format!("elapsed_ns: {}\n", self.elapsed_ns));
        out
    }
}

/// Operation bound for the metered algorithm that produced a result at
/// period `n`, if one is defined.
pub fn bound_for(tag: AlgorithmTag, n: usize) -> Option<u64> {
    if n == 0 {
        return None;
    }
    let (odd, a) = split_two_power(n);
    match tag {
        AlgorithmTag::GamesChan => Some(games_chan_bound(a)),
        AlgorithmTag::Fast3x2n => Some(fast_3x2n_bound(a)),
        AlgorithmTag::FastPx2n => Some(fast_px2n_bound(odd as u64, a)),
        AlgorithmTag::OddPrimePower => Some(odd_prime_power_bound(n)),
        _ => None,
    }
}

pub fn print_json<T: Serialize>(value: &T) {
    let text = serde_json::to_string_pretty(value).expect("report serializes");
    emit(&format!("{text}\n"));
}

/// Writes to stdout, ignoring a closed pipe.
pub fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}
