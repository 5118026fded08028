//! Reference implementations used to validate the fast algorithms: the
//! generating-function gcd method and Berlekamp-Massey, plus generators for
//! m-sequences and the sequence families of irreducible polynomials.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::bits::Bits;
use crate::cyclicseq::{apply_poly, CyclicSeq, OpMeter};
use crate::error::{Error, Result};
use crate::gf2poly::Poly2;

/// Which procedure produced an [`LcResult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgorithmTag {
    GamesChan,
    Ppp,
    General,
    Fast3x2n,
    FastPx2n,
    OddPrimePower,
    OddComposite,
    OracleFallback,
    GcdMethod,
    BerlekampMassey,
}

impl AlgorithmTag {
    pub fn name(self) -> &'static str {
        match self {
            AlgorithmTag::GamesChan => "GamesChan",
            AlgorithmTag::Ppp => "PPP",
            AlgorithmTag::General => "General",
            AlgorithmTag::Fast3x2n => "Fast3x2n",
            AlgorithmTag::FastPx2n => "FastPx2n",
            AlgorithmTag::OddPrimePower => "OddPrimePower",
            AlgorithmTag::OddComposite => "OddComposite",
            AlgorithmTag::OracleFallback => "OracleFallback",
            AlgorithmTag::GcdMethod => "GcdMethod",
            AlgorithmTag::BerlekampMassey => "BerlekampMassey",
        }
    }
}

impl fmt::Display for AlgorithmTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Linear complexity together with the minimal polynomial that certifies it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcResult {
    pub complexity: usize,
    pub min_poly: Poly2,
    /// Exponent of each irreducible factor of `x^N - 1` in `min_poly`, when
    /// the producing algorithm tracks them.
    pub deltas: Option<Vec<(Poly2, u64)>>,
    pub meter: OpMeter,
    pub algorithm: AlgorithmTag,
}

impl LcResult {
    pub(crate) fn new(min_poly: Poly2, meter: OpMeter, algorithm: AlgorithmTag) -> Self {
        LcResult {
            complexity: min_poly.degree().unwrap_or(0),
            min_poly,
            deltas: None,
            meter,
            algorithm,
        }
    }

    pub(crate) fn with_deltas(mut self, deltas: Vec<(Poly2, u64)>) -> Self {
        self.deltas = Some(deltas);
        self
    }

    /// Checks the result invariants against the input: degree matches,
    /// `min_poly | x^N - 1`, and `min_poly(E) s = 0`.
    pub fn is_consistent_with(&self, s: &CyclicSeq) -> bool {
        let Some(deg) = self.min_poly.degree() else {
            return false;
        };
        deg == self.complexity
            && self
                .min_poly
                .divides(&Poly2::x_n_minus_1(s.len()))
                .unwrap_or(false)
            && apply_poly(&self.min_poly, s, &mut OpMeter::new())
                .map(|t| t.is_all_zero())
                .unwrap_or(false)
    }

    /// Factored display form when exponents are known, otherwise the
    /// expanded polynomial.
    pub fn min_poly_human(&self) -> String {
        let Some(deltas) = &self.deltas else {
            return self.min_poly.to_string();
        };
        let parts: Vec<(&Poly2, u64)> = deltas
            .iter()
            .filter(|(_, d)| *d > 0)
            .map(|(q, d)| (q, *d))
            .collect();
        match parts.as_slice() {
            [] => "1".to_string(),
            [(q, 1)] => q.to_string(),
            _ => parts
                .iter()
                .map(|(q, d)| {
                    if *d == 1 {
                        format!("({q})")
                    } else {
                        format!("({q})^{d}")
                    }
                })
                .collect(),
        }
    }
}

/// `f_s = (x^N - 1) / gcd(g(x), x^N - 1)`; the zero sequence maps to 1.
///
/// `g(x) = sum s_i x^{-i} mod x^N - 1`, the generating function matched to
/// the left shift: `(f(E) s)_i` is the coefficient of `x^{-i}` in `f g`.
/// Using `sum s_i x^i` instead would give the reciprocal polynomial.
pub fn gcd_method(s: &CyclicSeq) -> LcResult {
    let n = s.len();
    let modulus = Poly2::x_n_minus_1(n);
    let gen = Poly2::from_exponents(
        s.iter()
            .enumerate()
            .filter(|&(_, b)| b)
            .map(|(i, _)| (n - i) % n),
    );
    let min_poly = if gen.is_zero() {
        Poly2::one()
    } else {
        let g = gen.gcd(&modulus).expect("modulus is nonzero");
        modulus.div_exact(&g).expect("gcd divides modulus")
    };
    LcResult::new(min_poly, OpMeter::new(), AlgorithmTag::GcdMethod)
}

/// Berlekamp-Massey over two concatenated periods, so that a periodic
/// complexity up to `N` is always determined. The connection polynomial
/// `C(x) = 1 + c_1 x + ... + c_L x^L` is re-emitted as the minimal
/// polynomial `x^L C(1/x)`.
pub fn berlekamp_massey(s: &CyclicSeq) -> LcResult {
    let n = s.len();
    let total = 2 * n;
    let doubled = Bits::concat(&[s.raw(), s.raw()]);
    // rev[k] = seq[total - 1 - k], so that sum_j c_j seq[i - j] is a
    // word-aligned dot product of C with rev starting at total - 1 - i.
    let rev = Bits::from_bools((0..total).rev().map(|k| doubled.get(k)));

    let words = total / 64 + 2;
    let mut c = vec![0u64; words];
    let mut b = vec![0u64; words];
    c[0] = 1;
    b[0] = 1;
    let mut l = 0usize;
    let mut shift = 1usize;

    for i in 0..total {
        let base = total - 1 - i;
        let span = l / 64 + 1;
        let mut acc = 0u64;
        for (w, &cw) in c.iter().take(span).enumerate() {
            acc ^= cw & rev.word_at(base + 64 * w);
        }
        if acc.count_ones() % 2 == 0 {
            shift += 1;
            continue;
        }
        let prev = c.clone();
        xor_shifted_fixed(&mut c, &b, shift);
        if 2 * l <= i {
            l = i + 1 - l;
            b = prev;
            shift = 1;
        } else {
            shift += 1;
        }
    }

    let conn = Poly2::from_words(c);
    let min_poly = Poly2::from_exponents(conn.exponents().map(|j| l - j));
    LcResult::new(min_poly, OpMeter::new(), AlgorithmTag::BerlekampMassey)
}

fn xor_shifted_fixed(dst: &mut [u64], src: &[u64], shift: usize) {
    let ws = shift / 64;
    let bs = shift % 64;
    for i in (0..dst.len()).rev() {
        if i < ws {
            break;
        }
        let j = i - ws;
        let mut v = src.get(j).copied().unwrap_or(0) << bs;
        if bs != 0 && j > 0 {
            v |= src[j - 1] >> (64 - bs);
        }
        dst[i] ^= v;
    }
}

/// Steps a Fibonacci LFSR with feedback taps `taps` (bit `j` = coefficient
/// of `x^j`, `j < k`); the state holds `s_i .. s_{i+k-1}` in bits `0..k`.
#[inline]
fn lfsr_step(state: u32, taps: u32, k: usize) -> (u32, bool) {
    let out = state & 1 == 1;
    let next = (state & taps).count_ones() & 1;
    ((state >> 1) | (next << (k - 1)), out)
}

/// The m-sequence of a primitive polynomial of degree `k`, seeded with
/// `k - 1` zeros followed by a one.
pub fn msequence(f: &Poly2) -> Result<CyclicSeq> {
    if !f.is_primitive()? {
        return Err(Error::NotPrimitive);
    }
    let k = f.degree().expect("primitive is nonzero");
    let taps = (f.to_u64() & ((1u64 << k) - 1)) as u32;
    let mut state = 1u32 << (k - 1);
    let len = (1usize << k) - 1;
    let mut out = Bits::with_capacity(len);
    for _ in 0..len {
        let (next, bit) = lfsr_step(state, taps, k);
        out.push(bit);
        state = next;
    }
    Ok(CyclicSeq::from_raw(out))
}

/// Index of the lexicographically least rotation (Booth's algorithm).
fn least_rotation(s: &[u8]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let mut fail = vec![usize::MAX; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = s[j % n];
        let mut i = fail[j - k - 1];
        while i != usize::MAX && sj != s[(k + i + 1) % n] {
            if sj < s[(k + i + 1) % n] {
                k = j - i - 1;
            }
            i = fail[i];
        }
        if i == usize::MAX && sj != s[(k + i.wrapping_add(1)) % n] {
            if sj < s[k % n] {
                k = j;
            }
            fail[j - k] = usize::MAX;
        } else {
            fail[j - k] = i.wrapping_add(1);
        }
    }
    k % n
}

fn canonical(bits: &[u8]) -> CyclicSeq {
    let k = least_rotation(bits);
    CyclicSeq::from_bools((0..bits.len()).map(|i| bits[(i + k) % bits.len()] == 1))
}

/// All nonzero cyclic sequences annihilated by the irreducible `q`, one per
/// rotation class (the lexicographically least rotation), each of length
/// `exponent(q)`, which must not exceed `max_len`.
pub fn sequence_family(q: &Poly2, max_len: usize) -> Result<Vec<CyclicSeq>> {
    let k = q.degree().ok_or(Error::ZeroPolynomial)?;
    if k > 16 {
        return Err(Error::DegreeCap { degree: k, cap: 16 });
    }
    if !q.is_irreducible()? {
        return Err(Error::Reducible);
    }
    let e = q.exponent()? as usize;
    if e > max_len {
        return Err(Error::InvalidLength {
            expected: format!("exponent at most {max_len}"),
            got: e,
        });
    }
    let taps = (q.to_u64() & ((1u64 << k) - 1)) as u32;
    let mut visited = vec![false; 1 << k];
    let mut family = Vec::new();
    for start in 1u32..(1 << k) {
        if visited[start as usize] {
            continue;
        }
        let mut state = start;
        let mut bits = Vec::with_capacity(e);
        for _ in 0..e {
            visited[state as usize] = true;
            let (next, bit) = lfsr_step(state, taps, k);
            bits.push(bit as u8);
            state = next;
        }
        debug_assert_eq!(state, start);
        family.push(canonical(&bits));
    }
    family.sort_by_key(|s| s.to_string());
    Ok(family)
}

fn orbit_walk<F: FnMut(u32, usize)>(g: &Poly2, mut visit: F) {
    let k = g.degree().expect("nonzero");
    let taps = (g.to_u64() & ((1u64 << k) - 1)) as u32;
    let mut visited = vec![false; 1 << k];
    for start in 0u32..(1 << k) {
        if visited[start as usize] {
            continue;
        }
        let mut state = start;
        let mut len = 0;
        loop {
            visited[state as usize] = true;
            state = lfsr_step(state, taps, k).0;
            len += 1;
            if state == start {
                break;
            }
        }
        visit(start, len);
    }
}

fn check_enumeration_input(f: &Poly2, m: u32) -> Result<Poly2> {
    if !f.is_primitive()? {
        return Err(Error::NotPrimitive);
    }
    let k = f.degree().expect("primitive is nonzero");
    let size = k * m as usize;
    if m == 0 || size > 20 {
        return Err(Error::Infeasible(size));
    }
    Ok(f.pow(m as u64))
}

/// Counts the distinct cyclic sequences generated by `f^m` (every LFSR
/// state), grouped by minimal period. The zero sequence counts under 1.
pub fn enumerate_by_period(f: &Poly2, m: u32) -> Result<BTreeMap<usize, usize>> {
    let g = check_enumeration_input(f, m)?;
    let mut counts = BTreeMap::new();
    orbit_walk(&g, |_, period| *counts.entry(period).or_insert(0) += 1);
    Ok(counts)
}

/// One row of the per-exponent count check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaRow {
    /// Exponent ℓ with minimal polynomial `f^ℓ`.
    pub ell: u32,
    /// `ceil(log2 ℓ)`.
    pub i: u32,
    /// Expected period `(2^k - 1) * 2^i`.
    pub period: usize,
    /// Predicted count `2^{(ℓ-1)k - i}`.
    pub formula: u64,
    /// Brute-force count of sequences with minimal polynomial `f^ℓ`.
    pub brute: u64,
    /// Whether every such sequence had the expected period.
    pub periods_match: bool,
}

impl LemmaRow {
    pub fn pass(&self) -> bool {
        self.formula == self.brute && self.periods_match
    }
}

/// For each `1 <= ℓ <= m`, compares the number of cyclic sequences whose
/// minimal polynomial is exactly `f^ℓ` against `2^{(ℓ-1)k - ⌈log2 ℓ⌉}`,
/// by walking every state of the `f^m` register.
pub fn lemma_table(f: &Poly2, m: u32) -> Result<Vec<LemmaRow>> {
    let g = check_enumeration_input(f, m)?;
    let k = f.degree().expect("nonzero");
    let km = g.degree().expect("nonzero");
    let taps = (g.to_u64() & ((1u64 << km) - 1)) as u32;
    let base_period = (1usize << k) - 1;
    let mut brute = vec![0u64; m as usize + 1];
    let mut periods_ok = vec![true; m as usize + 1];
    orbit_walk(&g, |start, period| {
        let mut state = start;
        let seq = CyclicSeq::from_bools((0..period).map(|_| {
            let (next, bit) = lfsr_step(state, taps, km);
            state = next;
            bit
        }));
        let deg = gcd_method(&seq).complexity;
        if deg == 0 {
            return;
        }
        let ell = deg / k;
        let i = ceil_log2(ell as u64);
        brute[ell] += 1;
        if period != base_period << i {
            periods_ok[ell] = false;
        }
    });
    Ok((1..=m)
        .map(|ell| {
            let i = ceil_log2(ell as u64);
            LemmaRow {
                ell,
                i,
                period: base_period << i,
                formula: 1u64 << ((ell as usize - 1) * k - i as usize),
                brute: brute[ell as usize],
                periods_match: periods_ok[ell as usize],
            }
        })
        .collect())
}

fn ceil_log2(v: u64) -> u32 {
    if v <= 1 {
        0
    } else {
        64 - (v - 1).leading_zeros()
    }
}

/// True iff `a` and `b` are rotations of each other.
pub fn rotation_equal(a: &CyclicSeq, b: &CyclicSeq) -> bool {
    a.len() == b.len() && a.canonical_rotation() == b.canonical_rotation()
}

/// Rotation classes of a list of sequences, for set comparisons.
pub fn rotation_classes(seqs: &[CyclicSeq]) -> HashSet<String> {
    seqs.iter()
        .map(|s| s.canonical_rotation().to_string())
        .collect()
}
