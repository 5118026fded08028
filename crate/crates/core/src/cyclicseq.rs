//! Cyclic binary sequences, the shift operator `E`, and the bit-operation
//! meter.
//!
//! Metering counts logical bit operations, not machine work:
//!
//! * one XOR producing one output bit costs one `xor_op`;
//! * a zero test on freshly produced data is free, since the producing XORs
//!   were already charged; a zero test on stored data costs its length in
//!   `cmp_ops`;
//! * relabeling (halves, thirds, prefixes) is free;
//! * each addition of a power of two to a complexity counter costs one
//!   `counter_op`.
//!
//! The actual computation is word-parallel; the meter is charged
//! analytically with block lengths.

use std::fmt;
use std::str::FromStr;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::gf2poly::Poly2;

/// Logical bit-operation ledger for one algorithm run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct OpMeter {
    xor_ops: u64,
    cmp_ops: u64,
    counter_ops: u64,
}

impl OpMeter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn xor_ops(&self) -> u64 {
        self.xor_ops
    }

    pub fn cmp_ops(&self) -> u64 {
        self.cmp_ops
    }

    pub fn counter_ops(&self) -> u64 {
        self.counter_ops
    }

    pub fn total(&self) -> u64 {
        self.xor_ops + self.cmp_ops + self.counter_ops
    }

    pub fn charge_xor(&mut self, n: usize) {
        self.xor_ops += n as u64;
    }

    pub fn charge_cmp(&mut self, n: usize) {
        self.cmp_ops += n as u64;
    }

    pub fn charge_counter(&mut self, n: usize) {
        self.counter_ops += n as u64;
    }
}

/// One cycle `[s_0, ..., s_{N-1}]` of a periodic binary sequence.
///
/// `len()` is the cycle length; the minimal period may be a proper divisor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclicSeq {
    bits: Bits,
}

impl CyclicSeq {
    pub(crate) fn from_raw(bits: Bits) -> Self {
        CyclicSeq { bits }
    }

    pub(crate) fn raw(&self) -> &Bits {
        &self.bits
    }

    pub fn zeros(n: usize) -> Self {
        CyclicSeq {
            bits: Bits::zeros(n),
        }
    }

    pub fn ones(n: usize) -> Self {
        CyclicSeq::from_bools(std::iter::repeat_n(true, n))
    }

    /// The impulse `[0, ..., 0, 1]` of length `n`.
    pub fn impulse(n: usize) -> Self {
        let mut bits = Bits::zeros(n);
        bits.set(n - 1, true);
        CyclicSeq { bits }
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        CyclicSeq {
            bits: Bits::from_bools(iter),
        }
    }

    /// Builds a sequence from the low `n` bits of the words, `s_0` first.
    pub fn from_words(words: Vec<u64>, n: usize) -> Self {
        CyclicSeq {
            bits: Bits::from_words(words, n),
        }
    }

    /// Parses the hex form: 4 bits per digit, `s_0` is the least
    /// significant bit of the first digit. Padding bits past `n` must be 0.
    pub fn from_hex(s: &str, n: usize) -> Result<Self> {
        let digits: Vec<char> = s.trim().chars().collect();
        if digits.len() != n.div_ceil(4) {
            return Err(Error::Parse(format!(
                "expected {} hex digits for length {n}, got {}",
                n.div_ceil(4),
                digits.len()
            )));
        }
        let mut bits = Bits::with_capacity(n);
        for (i, c) in digits.iter().enumerate() {
            let d = c
                .to_digit(16)
                .ok_or_else(|| Error::Parse(format!("invalid hex digit {c:?}")))?;
            let take = (n - 4 * i).min(4);
            if d >> take != 0 {
                return Err(Error::Parse("nonzero padding bits in hex input".into()));
            }
            bits.push_word(d as u64, take);
        }
        Ok(CyclicSeq { bits })
    }

    pub fn to_hex(&self) -> String {
        let n = self.len();
        (0..n.div_ceil(4))
            .map(|i| {
                let d = (self.bits.word_at(4 * i) & 0xF) as u32;
                char::from_digit(d, 16).expect("nibble")
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.len() == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits.get(i % self.len())
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.bits.iter()
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones()
    }

    /// Unmetered zero check, for use outside the metered algorithms.
    pub fn is_all_zero(&self) -> bool {
        self.bits.is_zero()
    }

    /// `E^j s`: the left rotation by `j`.
    pub fn rotate(&self, j: usize) -> CyclicSeq {
        CyclicSeq {
            bits: self.bits.cyclic_window(j, self.len()),
        }
    }

    /// The generating polynomial `s_0 + s_1 x + ... + s_{N-1} x^{N-1}`.
    pub fn to_poly(&self) -> Poly2 {
        Poly2::from_words(self.bits.words().to_vec())
    }

    /// Repeats the cycle `times` times.
    pub fn repeat(&self, times: usize) -> CyclicSeq {
        let parts: Vec<&Bits> = std::iter::repeat_n(&self.bits, times).collect();
        CyclicSeq {
            bits: Bits::concat(&parts),
        }
    }

    /// Lexicographically least rotation, reading `s_0` first.
    pub fn canonical_rotation(&self) -> CyclicSeq {
        (0..self.len().max(1))
            .map(|j| self.rotate(j))
            .min_by(|a, b| a.to_string().cmp(&b.to_string()))
            .unwrap_or_else(|| self.clone())
    }
}

impl fmt::Display for CyclicSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.bits)
    }
}

impl fmt::Debug for CyclicSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicSeq[{:?}]", self.bits)
    }
}

/// Parses the "bits" form: ASCII `0`/`1`, `s_0` first.
impl FromStr for CyclicSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty sequence".into()));
        }
        let mut bits = Bits::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => return Err(Error::Parse(format!("invalid bit {other:?}"))),
            }
        }
        Ok(CyclicSeq { bits })
    }
}

/// Output `t_i = sum_{e in exps} s_{(i + e) mod N}` for `i < out_len`,
/// charging `(|exps| - 1) * out_len` XORs.
pub(crate) fn apply_exponents_prefix(
    exps: &[usize],
    s: &Bits,
    out_len: usize,
    meter: &mut OpMeter,
) -> Bits {
    let n = s.len();
    let mut out = Bits::zeros(out_len);
    for &e in exps {
        let window = s.cyclic_window(e % n, out_len);
        out.xor_assign(&window);
    }
    meter.charge_xor(exps.len().saturating_sub(1) * out_len);
    out
}

/// `f(E) s`, cyclically. Costs `(wt(f) - 1) * N` XORs.
pub fn apply_poly(f: &Poly2, s: &CyclicSeq, meter: &mut OpMeter) -> Result<CyclicSeq> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let exps: Vec<usize> = f.exponents().collect();
    Ok(CyclicSeq {
        bits: apply_exponents_prefix(&exps, &s.bits, s.len(), meter),
    })
}

/// `f(E)^{2^m} s`, evaluated as `f(E^{2^m}) s`. Costs `(wt(f) - 1) * N`
/// XORs regardless of `m`.
pub fn apply_poly_pow2(f: &Poly2, m: u32, s: &CyclicSeq, meter: &mut OpMeter) -> Result<CyclicSeq> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = s.len();
    let step = pow2_mod(m, n);
    let exps: Vec<usize> = f.exponents().map(|e| mul_mod(e, step, n)).collect();
    Ok(CyclicSeq {
        bits: apply_exponents_prefix(&exps, &s.bits, n, meter),
    })
}

fn pow2_mod(m: u32, n: usize) -> usize {
    let mut v = 1 % n;
    for _ in 0..m {
        v = v * 2 % n;
    }
    v
}

fn mul_mod(a: usize, b: usize, n: usize) -> usize {
    ((a as u128 * b as u128) % n as u128) as usize
}

/// Zero test. Stored data costs `N` comparisons; a fused test on freshly
/// produced data is free.
pub fn is_zero(s: &CyclicSeq, meter: &mut OpMeter, fused: bool) -> bool {
    if !fused {
        meter.charge_cmp(s.len());
    }
    s.bits.is_zero()
}

/// Left and right halves. Free.
pub fn halves(s: &CyclicSeq) -> Result<(CyclicSeq, CyclicSeq)> {
    let n = s.len();
    if n % 2 != 0 {
        return Err(Error::InvalidLength {
            expected: "even length".into(),
            got: n,
        });
    }
    let h = n / 2;
    Ok((
        CyclicSeq::from_raw(s.bits.slice(0, h)),
        CyclicSeq::from_raw(s.bits.slice(h, h)),
    ))
}

/// Three consecutive blocks `[X Y Z]`. Free.
pub fn thirds(s: &CyclicSeq) -> Result<(CyclicSeq, CyclicSeq, CyclicSeq)> {
    let n = s.len();
    if n % 3 != 0 {
        return Err(Error::InvalidLength {
            expected: "length divisible by 3".into(),
            got: n,
        });
    }
    let t = n / 3;
    Ok((
        CyclicSeq::from_raw(s.bits.slice(0, t)),
        CyclicSeq::from_raw(s.bits.slice(t, t)),
        CyclicSeq::from_raw(s.bits.slice(2 * t, t)),
    ))
}

/// Smallest divisor `d` of `N` with `s_i = s_{(i + d) mod N}` for all `i`.
pub fn minimal_period(s: &CyclicSeq) -> usize {
    let n = s.len();
    (1..=n)
        .filter(|d| n % d == 0)
        .find(|&d| s.bits.cyclic_window(d, n) == s.bits)
        .unwrap_or(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(s: &str) -> CyclicSeq {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Poly2 {
        s.parse().unwrap()
    }

    #[test]
    fn apply_poly_examples() {
        let mut m = OpMeter::new();
        assert_eq!(
            apply_poly(&p("x"), &seq("011"), &mut m).unwrap(),
            seq("110")
        );
        assert_eq!(m.total(), 0);

        let mut m = OpMeter::new();
        assert_eq!(
            apply_poly(&p("x+1"), &seq("1111"), &mut m).unwrap(),
            seq("0000")
        );
        assert_eq!(m.xor_ops(), 4);

        let mut m = OpMeter::new();
        let out = apply_poly(&p("x^2+x+1"), &seq("000101"), &mut m).unwrap();
        assert_eq!(out, seq("011011"));
        assert_eq!(m.xor_ops(), 12);

        assert_eq!(
            apply_poly(&Poly2::zero(), &seq("01"), &mut m),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn apply_poly_pow2_examples() {
        let mut m = OpMeter::new();
        assert_eq!(
            apply_poly_pow2(&p("x+1"), 1, &seq("1010"), &mut m).unwrap(),
            seq("0000")
        );
        assert_eq!(m.xor_ops(), 4);

        let s = seq("100110101110");
        let mut m = OpMeter::new();
        let fast = apply_poly_pow2(&p("x^2+x+1"), 1, &s, &mut m).unwrap();
        assert_eq!(m.xor_ops(), 24);
        let direct = apply_poly(&p("x^2+x+1").square(), &s, &mut OpMeter::new()).unwrap();
        assert_eq!(fast, direct);

        assert_eq!(
            apply_poly_pow2(&p("x+1"), 0, &seq("011"), &mut OpMeter::new()).unwrap(),
            seq("101")
        );
    }

    #[test]
    fn is_zero_policy() {
        let mut m = OpMeter::new();
        assert!(is_zero(&seq("000"), &mut m, false));
        assert_eq!(m.cmp_ops(), 3);

        let mut m = OpMeter::new();
        assert!(!is_zero(&seq("010"), &mut m, true));
        assert_eq!(m.total(), 0);

        let mut m = OpMeter::new();
        let t = apply_poly(&p("x+1"), &seq("1111"), &mut m).unwrap();
        assert!(is_zero(&t, &mut m, true));
        assert_eq!((m.xor_ops(), m.cmp_ops()), (4, 0));
    }

    #[test]
    fn halves_and_thirds() {
        assert_eq!(halves(&seq("1001")).unwrap(), (seq("10"), seq("01")));
        assert_eq!(halves(&seq("00")).unwrap(), (seq("0"), seq("0")));
        assert_eq!(
            halves(&seq("10011010")).unwrap(),
            (seq("1001"), seq("1010"))
        );
        assert!(halves(&seq("101")).is_err());

        assert_eq!(
            thirds(&seq("000101")).unwrap(),
            (seq("00"), seq("01"), seq("01"))
        );
        assert_eq!(thirds(&seq("111")).unwrap(), (seq("1"), seq("1"), seq("1")));
        let (x, y, z) = thirds(&seq("101100111000")).unwrap();
        assert_eq!((x.len(), y.len(), z.len()), (4, 4, 4));
        assert!(thirds(&seq("1010")).is_err());
    }

    #[test]
    fn minimal_period_examples() {
        assert_eq!(minimal_period(&seq("1010")), 2);
        assert_eq!(minimal_period(&seq("000101")), 6);
        assert_eq!(minimal_period(&seq("0000")), 1);
    }

    #[test]
    fn hex_format() {
        let s = seq("1000110");
        assert_eq!(s.to_hex(), "13");
        assert_eq!(CyclicSeq::from_hex("13", 7).unwrap(), s);
        assert!(CyclicSeq::from_hex("1b", 7).is_err());
        assert!(CyclicSeq::from_hex("1", 7).is_err());
        assert!(CyclicSeq::from_hex("1g", 7).is_err());
    }

    fn arb_seq(max: usize) -> impl Strategy<Value = CyclicSeq> {
        proptest::collection::vec(any::<bool>(), 1..=max).prop_map(CyclicSeq::from_bools)
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = Poly2> {
        proptest::collection::vec(any::<bool>(), 1..=max_deg + 1).prop_map(|b| {
            Poly2::from_exponents(b.iter().enumerate().filter(|(_, &x)| x).map(|(i, _)| i))
        })
    }

    proptest! {
        #[test]
        fn operator_homomorphism(s in arb_seq(40), f in arb_poly(12), g in arb_poly(12)) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let mut m = OpMeter::new();
            let lhs = apply_poly(&f, &apply_poly(&g, &s, &mut m).unwrap(), &mut m).unwrap();
            let fg = (&f * &g).rem(&Poly2::x_n_minus_1(s.len())).unwrap();
            let rhs = if fg.is_zero() {
                CyclicSeq::zeros(s.len())
            } else {
                apply_poly(&fg, &s, &mut m).unwrap()
            };
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pow2_matches_iterated_squaring(s in arb_seq(64), f in arb_poly(6), m in 0u32..5) {
            prop_assume!(!f.is_zero());
            let mut meter = OpMeter::new();
            let fast = apply_poly_pow2(&f, m, &s, &mut meter).unwrap();
            prop_assert_eq!(meter.xor_ops() as usize, (f.weight() - 1) * s.len());
            let mut g = f.clone();
            for _ in 0..m {
                g = g.square();
            }
            let slow = apply_poly(&g, &s, &mut OpMeter::new()).unwrap();
            prop_assert_eq!(fast, slow);
        }

        #[test]
        fn x_n_minus_1_annihilates(s in arb_seq(70)) {
            let out = apply_poly(&Poly2::x_n_minus_1(s.len()), &s, &mut OpMeter::new()).unwrap();
            prop_assert!(out.is_all_zero());
        }

        #[test]
        fn hex_round_trip(s in arb_seq(100)) {
            prop_assert_eq!(CyclicSeq::from_hex(&s.to_hex(), s.len()).unwrap(), s);
        }
    }
}
