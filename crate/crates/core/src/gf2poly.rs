//! Dense polynomials over GF(2) and factorization of `x^N - 1` for the
//! period families handled by the fast algorithms.
//!
//! Coefficients are packed least-significant-first into `u64` words, so
//! addition is a word XOR and multiplication a word-wise carry-less product.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Degree cap for the brute-force order and trial-division routines.
pub const SMALL_DEGREE_CAP: usize = 24;

const WORD: usize = 64;

/// A polynomial over GF(2). Always normalized: no trailing zero words.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Poly2 {
    words: Vec<u64>,
}

fn normalize(words: &mut Vec<u64>) {
    while words.last() == Some(&0) {
        words.pop();
    }
}

/// XORs `src << shift` into `dst`, growing `dst` as needed.
fn xor_shifted(dst: &mut Vec<u64>, src: &[u64], shift: usize) {
    let ws = shift / WORD;
    let bs = shift % WORD;
    let need = ws + src.len() + 1;
    if dst.len() < need {
        dst.resize(need, 0);
    }
    if bs == 0 {
        for (i, &w) in src.iter().enumerate() {
            dst[ws + i] ^= w;
        }
    } else {
        for (i, &w) in src.iter().enumerate() {
            dst[ws + i] ^= w << bs;
            dst[ws + i + 1] ^= w >> (WORD - bs);
        }
    }
}

fn words_degree(words: &[u64]) -> Option<usize> {
    let (i, &w) = words.iter().enumerate().rev().find(|(_, &w)| w != 0)?;
    Some(i * WORD + (WORD - 1 - w.leading_zeros() as usize))
}

fn clmul64(a: u64, b: u64) -> (u64, u64) {
    let mut lo = 0u64;
    let mut hi = 0u64;
    let mut b = b;
    while b != 0 {
        let i = b.trailing_zeros() as usize;
        lo ^= a << i;
        if i != 0 {
            hi ^= a >> (WORD - i);
        }
        b &= b - 1;
    }
    (lo, hi)
}

/// Interleaves a zero after every bit of the low 32 bits of `x`.
fn spread32(x: u64) -> u64 {
    let mut x = x & 0xFFFF_FFFF;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555;
    x
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 { words: Vec::new() }
    }

    pub fn one() -> Self {
        Poly2 { words: vec![1] }
    }

    pub fn x() -> Self {
        Poly2::monomial(1)
    }

    pub fn monomial(k: usize) -> Self {
        let mut words = vec![0; k / WORD + 1];
        words[k / WORD] = 1 << (k % WORD);
        Poly2 { words }
    }

    /// Builds `sum x^e` over the given exponents; repeated exponents cancel.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut words = Vec::new();
        for e in exps {
            if words.len() <= e / WORD {
                words.resize(e / WORD + 1, 0);
            }
            words[e / WORD] ^= 1 << (e % WORD);
        }
        normalize(&mut words);
        Poly2 { words }
    }

    pub fn from_words(mut words: Vec<u64>) -> Self {
        normalize(&mut words);
        Poly2 { words }
    }

    /// Polynomial whose coefficient `i` is bit `i` of `v`.
    pub fn from_u64(v: u64) -> Self {
        Poly2::from_words(vec![v])
    }

    /// Low 64 coefficients packed into a word.
    pub fn to_u64(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    /// `x^n - 1` (equal to `x^n + 1` over GF(2)).
    pub fn x_n_minus_1(n: usize) -> Self {
        Poly2::from_exponents([0, n])
    }

    /// `1 + x^k + x^{2k} + ... + x^{(p-1)k}`.
    pub fn all_ones_spread(p: usize, k: usize) -> Self {
        Poly2::from_exponents((0..p).map(|j| j * k))
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * WORD + (WORD - 1 - last.leading_zeros() as usize))
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / WORD)
            .is_some_and(|w| (w >> (i % WORD)) & 1 == 1)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Exponents with a nonzero coefficient, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + b)
            })
        })
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (a, b) in words.iter_mut().zip(&short.words) {
            *a ^= b;
        }
        normalize(&mut words);
        Poly2 { words }
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        if self.is_zero() || other.is_zero() {
            return Poly2::zero();
        }
        let mut words = vec![0u64; self.words.len() + other.words.len()];
        for (i, &a) in self.words.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.words.iter().enumerate() {
                let (lo, hi) = clmul64(a, b);
                words[i + j] ^= lo;
                words[i + j + 1] ^= hi;
            }
        }
        normalize(&mut words);
        Poly2 { words }
    }

    /// Frobenius square: coefficient `i` moves to `2i`.
    pub fn square(&self) -> Poly2 {
        let mut words = Vec::with_capacity(self.words.len() * 2);
        for &w in &self.words {
            words.push(spread32(w));
            words.push(spread32(w >> 32));
        }
        normalize(&mut words);
        Poly2 { words }
    }

    /// `f(x^k)`.
    pub fn compose_monomial(&self, k: usize) -> Poly2 {
        assert!(k >= 1);
        Poly2::from_exponents(self.exponents().map(|e| e * k))
    }

    pub fn pow(&self, mut e: u64) -> Poly2 {
        let mut base = self.clone();
        let mut acc = Poly2::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    pub fn divrem(&self, divisor: &Poly2) -> Result<(Poly2, Poly2)> {
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.words.clone();
        let mut quot = Vec::new();
        let Some(mut da) = self.degree() else {
            return Ok((Poly2::zero(), Poly2::zero()));
        };
        while da >= db {
            let shift = da - db;
            if quot.len() <= shift / WORD {
                quot.resize(shift / WORD + 1, 0);
            }
            quot[shift / WORD] ^= 1 << (shift % WORD);
            xor_shifted(&mut rem, &divisor.words, shift);
            match words_degree(&rem) {
                Some(d) => da = d,
                None => break,
            }
        }
        normalize(&mut quot);
        normalize(&mut rem);
        Ok((Poly2 { words: quot }, Poly2 { words: rem }))
    }

    pub fn rem(&self, divisor: &Poly2) -> Result<Poly2> {
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.words.clone();
        while let Some(da) = words_degree(&rem) {
            if da < db {
                break;
            }
            xor_shifted(&mut rem, &divisor.words, da - db);
        }
        normalize(&mut rem);
        Ok(Poly2 { words: rem })
    }

    /// Exact division; panics in debug builds if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Poly2) -> Result<Poly2> {
        let (q, r) = self.divrem(divisor)?;
        debug_assert!(r.is_zero(), "inexact division");
        Ok(q)
    }

    pub fn divides(&self, other: &Poly2) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic gcd by Euclid. Over GF(2) every nonzero polynomial is monic.
    pub fn gcd(&self, other: &Poly2) -> Result<Poly2> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    fn small(&self) -> Result<(u64, usize)> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        if d > SMALL_DEGREE_CAP {
            return Err(Error::DegreeCap {
                degree: d,
                cap: SMALL_DEGREE_CAP,
            });
        }
        Ok((self.to_u64(), d))
    }

    /// Smallest `e >= 1` with `f | x^e - 1`, by stepping powers of `x` in
    /// the quotient ring.
    pub fn exponent(&self) -> Result<u64> {
        let (f, k) = self.small()?;
        if k == 0 {
            return Err(Error::ConstantPolynomial);
        }
        if f & 1 == 0 {
            return Err(Error::ZeroConstantTerm);
        }
        let top = 1u64 << k;
        let mut state = 1u64;
        let mut e = 0u64;
        loop {
            state <<= 1;
            if state & top != 0 {
                state ^= f;
            }
            e += 1;
            if state == 1 {
                return Ok(e);
            }
        }
    }

    /// Trial division by every polynomial of degree `1..=deg/2`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let (f, k) = self.small()?;
        if k == 0 {
            return Ok(false);
        }
        for d in 1..=k / 2 {
            for g in (1u64 << d)..(1u64 << (d + 1)) {
                if small_rem(f, g) == 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_primitive(&self) -> Result<bool> {
        if !self.is_irreducible()? {
            return Ok(false);
        }
        let k = self.degree().unwrap_or(0);
        if self.to_u64() & 1 == 0 {
            // only x itself is irreducible with zero constant term
            return Ok(false);
        }
        Ok(self.exponent()? == (1u64 << k) - 1)
    }

    /// Canonical text form: coefficient bits, constant term first.
    pub fn to_bit_string(&self) -> String {
        match self.degree() {
            None => "0".to_string(),
            Some(d) => (0..=d)
                .map(|i| if self.coeff(i) { '1' } else { '0' })
                .collect(),
        }
    }

    pub fn from_bit_string(s: &str) -> Result<Poly2> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut exps = Vec::new();
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => exps.push(i),
                '0' => {}
                other => return Err(Error::Parse(format!("invalid coefficient {other:?}"))),
            }
        }
        Ok(Poly2::from_exponents(exps))
    }
}

fn small_rem(mut a: u64, b: u64) -> u64 {
    let db = 63 - b.leading_zeros();
    while a != 0 {
        let da = 63 - a.leading_zeros();
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        Poly2::add(self, rhs)
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        Poly2::mul(self, rhs)
    }
}

/// Human form, highest power first: `x^4+x+1`.
impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut exps: Vec<usize> = self.exponents().collect();
        exps.reverse();
        let terms: Vec<String> = exps
            .iter()
            .map(|&e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                e => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

/// Accepts either the binary coefficient form (`"1101"`) or the human form
/// (`"x^3+x+1"`).
impl FromStr for Poly2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Poly2> {
        let s = s.trim();
        if !s.is_empty() && s.chars().all(|c| c == '0' || c == '1') {
            return Poly2::from_bit_string(s);
        }
        let mut exps = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            let e = match term {
                "1" => 0,
                "x" => 1,
                t if t.starts_with("x^") => t[2..]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {t:?}")))?,
                t => return Err(Error::Parse(format!("bad term {t:?}"))),
            };
            exps.push(e);
        }
        Ok(Poly2::from_exponents(exps))
    }
}

/// Multiplicative order of 2 modulo odd `m > 1`.
pub fn order_of_two(m: u64) -> u64 {
    assert!(m > 1 && m % 2 == 1, "order of 2 needs an odd modulus > 1");
    let mut v = 2 % m;
    let mut k = 1;
    while v != 1 {
        v = v * 2 % m;
        k += 1;
    }
    k
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// True iff 2 generates the multiplicative group modulo the odd prime `p`.
pub fn two_is_primitive_root(p: u64) -> bool {
    p > 2 && is_prime(p) && order_of_two(p) == p - 1
}

/// True iff every `1 + x^{p^i} + ... + x^{(p-1)p^i}`, `i < n`, is
/// irreducible: 2 must generate the units modulo `p`, and modulo `p^2`
/// once `n >= 2`.
pub fn prime_power_factors_irreducible(p: u64, n: u32) -> bool {
    if !two_is_primitive_root(p) {
        return false;
    }
    n < 2 || order_of_two(p * p) == p * (p - 1)
}

/// Prime factorization of `n` as ascending `(prime, exponent)` pairs.
pub fn factor_integer(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Splits `n` into `(odd part, power of two exponent)`.
pub fn split_two_power(n: usize) -> (usize, u32) {
    let a = n.trailing_zeros();
    (n >> a, a)
}

/// One irreducible factor of `x^N - 1` with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub poly: Poly2,
    /// Multiplicity α ≥ 1.
    pub multiplicity: u64,
    /// Smallest γ with α ≤ 2^γ.
    pub gamma: u32,
}

impl Factor {
    pub fn new(poly: Poly2, multiplicity: u64) -> Self {
        let gamma = multiplicity.next_power_of_two().trailing_zeros();
        Factor {
            poly,
            multiplicity,
            gamma,
        }
    }

    /// The saturation ceiling 2^γ.
    pub fn ceiling(&self) -> u64 {
        1 << self.gamma
    }
}

/// `x^N - 1 = prod q_i^{α_i}` with pairwise distinct irreducible `q_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub modulus_degree: usize,
    pub factors: Vec<Factor>,
}

impl Factorization {
    pub fn product(&self) -> Poly2 {
        self.factors
            .iter()
            .fold(Poly2::one(), |acc, f| acc.mul(&f.poly.pow(f.multiplicity)))
    }

    /// Multiplies the factors back out and compares with `x^N - 1`.
    pub fn check_product(&self) -> bool {
        self.product() == Poly2::x_n_minus_1(self.modulus_degree)
    }
}

/// Factors `x^N - 1` when `N = 2^a * m` with `m` either 1 or a prime power
/// `p^b` for which every `1 + x^{p^i} + ... ` factor is irreducible.
///
/// Odd parts with two or more distinct primes give cyclotomic factors that
/// split further, so they are reported as unsupported.
pub fn factor_xn_minus_1(n: usize) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::UnsupportedPeriod(0));
    }
    let (odd, a) = split_two_power(n);
    let mult = 1u64 << a;
    let mut factors = vec![Factor::new(Poly2::from_u64(0b11), mult)];
    if odd > 1 {
        let primes = factor_integer(odd as u64);
        let [(p, b)] = primes[..] else {
            return Err(Error::UnsupportedPeriod(n));
        };
        if !prime_power_factors_irreducible(p, b) {
            return Err(Error::UnsupportedPeriod(n));
        }
        let mut k = 1usize;
        for _ in 0..b {
            factors.push(Factor::new(Poly2::all_ones_spread(p as usize, k), mult));
            k *= p as usize;
        }
    }
    Ok(Factorization {
        modulus_degree: n,
        factors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Poly2 {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert!((&p("x+1") + &p("x+1")).is_zero());
        assert_eq!(&p("x^2+x+1") + &p("x+1"), p("x^2"));
        assert_eq!(&p("x^3+x+1") + &Poly2::zero(), p("x^3+x+1"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p("x+1") * &p("x+1"), p("x^2+1"));
        assert_eq!(&p("x+1") * &p("x^2+x+1"), p("x^3+1"));
        assert_eq!(p("x^2+x+1").square(), p("x^4+x^2+1"));
        assert_eq!(&p("x^2+x+1") * &p("x^2+x+1"), p("x^4+x^2+1"));
    }

    #[test]
    fn divrem_examples() {
        let (q, r) = p("x^6+x^4+x^3+1").divrem(&p("x+1")).unwrap();
        assert_eq!(q, p("x^5+x^4+x^2+x+1"));
        assert!(r.is_zero());
        assert_eq!(&(&q * &p("x+1")) + &r, p("x^6+x^4+x^3+1"));

        let (q, r) = p("x^2").divrem(&p("x^2+x+1")).unwrap();
        assert_eq!((q, r), (Poly2::one(), p("x+1")));

        let (q, r) = p("x+1").divrem(&p("x^2+x+1")).unwrap();
        assert_eq!((q, r), (Poly2::zero(), p("x+1")));

        assert_eq!(p("x").divrem(&Poly2::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p("x^2+1").gcd(&p("x+1")).unwrap(), p("x+1"));
        assert_eq!(p("x^3+1").gcd(&p("x^2+x+1")).unwrap(), p("x^2+x+1"));
        assert_eq!(p("x^2").gcd(&p("x^9+1")).unwrap(), Poly2::one());
        assert!(p("x^9+1").rem(&p("x")).unwrap().is_one());
        assert_eq!(Poly2::zero().gcd(&Poly2::zero()), Err(Error::GcdOfZeros));
        assert_eq!(Poly2::zero().gcd(&p("x+1")).unwrap(), p("x+1"));
    }

    /// Brute force: smallest e with f | x^e - 1 via full polynomial division.
    fn brute_exponent(f: &Poly2) -> u64 {
        (1..=1u64 << 16)
            .find(|&e| f.divides(&Poly2::x_n_minus_1(e as usize)).unwrap())
            .unwrap()
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(p("x^2+x+1").exponent().unwrap(), 3);
        assert_eq!(p("x^4+x^3+x^2+x+1").exponent().unwrap(), 5);
        assert_eq!(p("x^4+x+1").exponent().unwrap(), 15);
        for f in [
            "x^2+x+1",
            "x^4+x^3+x^2+x+1",
            "x^4+x+1",
            "x^6+x^3+1",
            "x^4+1",
        ] {
            assert_eq!(p(f).exponent().unwrap(), brute_exponent(&p(f)), "{f}");
        }
        assert_eq!(p("x^2+x").exponent(), Err(Error::ZeroConstantTerm));
        assert_eq!(Poly2::zero().exponent(), Err(Error::ZeroPolynomial));
        assert!(matches!(
            Poly2::x_n_minus_1(30).exponent(),
            Err(Error::DegreeCap { .. })
        ));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(p("x^2+x+1").is_irreducible().unwrap());
        assert!(!p("x^2+1").is_irreducible().unwrap());
        assert!(p("x^4+x^3+x^2+x+1").is_irreducible().unwrap());
        assert!(p("x").is_irreducible().unwrap());
        assert!(!p("x^4+x^2+1").is_irreducible().unwrap());
    }

    #[test]
    fn primitivity_examples() {
        assert!(p("x^2+x+1").is_primitive().unwrap());
        assert!(!p("x^4+x^3+x^2+x+1").is_primitive().unwrap());
        assert!(p("x^3+x+1").is_primitive().unwrap());
        assert!(p("x+1").is_primitive().unwrap());
        assert!(!p("x").is_primitive().unwrap());
    }

    #[test]
    fn factor_examples() {
        let f12 = factor_xn_minus_1(12).unwrap();
        assert_eq!(f12.factors.len(), 2);
        assert_eq!(f12.factors[0], Factor::new(p("x+1"), 4));
        assert_eq!(f12.factors[1], Factor::new(p("x^2+x+1"), 4));
        assert_eq!(f12.factors[1].gamma, 2);

        let f9 = factor_xn_minus_1(9).unwrap();
        let polys: Vec<Poly2> = f9.factors.iter().map(|f| f.poly.clone()).collect();
        assert_eq!(polys, vec![p("x+1"), p("x^2+x+1"), p("x^6+x^3+1")]);
        assert!(f9
            .factors
            .iter()
            .all(|f| f.multiplicity == 1 && f.gamma == 0));

        let f8 = factor_xn_minus_1(8).unwrap();
        assert_eq!(f8.factors, vec![Factor::new(p("x+1"), 8)]);

        assert_eq!(factor_xn_minus_1(7), Err(Error::UnsupportedPeriod(7)));
        assert_eq!(factor_xn_minus_1(15), Err(Error::UnsupportedPeriod(15)));
    }

    #[test]
    fn factorization_products_up_to_4096() {
        for n in 1..=4096 {
            if let Ok(fac) = factor_xn_minus_1(n) {
                assert!(fac.check_product(), "N = {n}");
                for (i, f) in fac.factors.iter().enumerate() {
                    let d = f.poly.degree().unwrap();
                    if d <= SMALL_DEGREE_CAP {
                        assert!(f.poly.is_irreducible().unwrap(), "N = {n}");
                    }
                    assert!(f.multiplicity <= f.ceiling());
                    assert!(f.gamma == 0 || f.multiplicity > f.ceiling() / 2);
                    assert!(fac.factors[..i].iter().all(|g| g.poly != f.poly));
                }
            }
        }
    }

    #[test]
    fn exponent_divides_group_order_for_irreducibles() {
        for k in 1..=12usize {
            for v in (1u64 << k)..(1u64 << (k + 1)) {
                let f = Poly2::from_u64(v);
                if v & 1 == 1 && f.is_irreducible().unwrap() {
                    let e = f.exponent().unwrap();
                    assert_eq!(((1u64 << k) - 1) % e, 0, "{f}");
                }
            }
        }
    }

    #[test]
    fn text_forms() {
        let f = p("x^2+x+1");
        assert_eq!(f.to_bit_string(), "111");
        assert_eq!(f.to_string(), "x^2+x+1");
        assert_eq!(p("1101"), p("x^3+x+1"));
        assert_eq!(p("1101").to_string(), "x^3+x+1");
        assert!("x^a".parse::<Poly2>().is_err());
    }

    #[test]
    fn number_theory() {
        assert_eq!(order_of_two(7), 3);
        assert!(two_is_primitive_root(3));
        assert!(two_is_primitive_root(5));
        assert!(!two_is_primitive_root(7));
        assert!(two_is_primitive_root(13));
        assert!(two_is_primitive_root(29));
        assert!(prime_power_factors_irreducible(3, 7));
        assert_eq!(factor_integer(360), vec![(2, 3), (3, 2), (5, 1)]);
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = Poly2> {
        proptest::collection::vec(any::<bool>(), 0..=max_deg + 1).prop_map(|bits| {
            Poly2::from_exponents(bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i))
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(256), b in arb_poly(256), c in arb_poly(256)) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !b.is_zero() {
                let (q, r) = a.divrem(&b).unwrap();
                prop_assert_eq!(&(&q * &b) + &r, a.clone());
                prop_assert!(r.degree() < b.degree());
                prop_assert_eq!(a.rem(&b).unwrap(), r);
            }
        }

        #[test]
        fn gcd_is_greatest_common_divisor(a in arb_poly(40), b in arb_poly(40), c in arb_poly(8)) {
            prop_assume!(!c.is_zero());
            let a = &a * &c;
            let b = &b * &c;
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let g = a.gcd(&b).unwrap();
            prop_assert!(g.divides(&a).unwrap());
            prop_assert!(g.divides(&b).unwrap());
            prop_assert!(c.divides(&g).unwrap());
        }

        #[test]
        fn squaring_doubles_exponents(a in arb_poly(300)) {
            let sq = a.square();
            prop_assert_eq!(&sq, &a.compose_monomial(2));
            prop_assert_eq!(sq, &a * &a);
        }
    }
}
