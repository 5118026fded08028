//! Linear complexity algorithms: the halving algorithm for `N = 2^n`, its
//! generalisation to a power of an irreducible polynomial, the saturation
//! method for arbitrary factorizations, and the fast paths for `3 * 2^n`,
//! `p * 2^n` and odd periods.
//!
//! All internal state is packed bits; the meter is charged with logical
//! block lengths as documented in [`crate::cyclicseq`].

use crate::bits::Bits;
use crate::cyclicseq::{
    apply_exponents_prefix, apply_poly, apply_poly_pow2, is_zero, CyclicSeq, OpMeter,
};
use crate::error::{Error, Result};
use crate::gf2poly::{
    factor_integer, factor_xn_minus_1, is_prime, prime_power_factors_irreducible, split_two_power,
    two_is_primitive_root, Factorization, Poly2,
};
use crate::oracle::{gcd_method, AlgorithmTag, LcResult};

/// The algorithm [`solve`] selects for a given period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgorithmChoice {
    GamesChan { n: u32 },
    Fast3x2n { n: u32 },
    FastPx2n { p: u64, n: u32 },
    OddPrimePower { p: u64, n: u32 },
    OddComposite { primes: Vec<(u64, u32)> },
    General,
    OracleFallback,
}

impl AlgorithmChoice {
    pub fn tag(&self) -> AlgorithmTag {
        match self {
            AlgorithmChoice::GamesChan { .. } => AlgorithmTag::GamesChan,
            AlgorithmChoice::Fast3x2n { .. } => AlgorithmTag::Fast3x2n,
            AlgorithmChoice::FastPx2n { .. } => AlgorithmTag::FastPx2n,
            AlgorithmChoice::OddPrimePower { .. } => AlgorithmTag::OddPrimePower,
            AlgorithmChoice::OddComposite { .. } => AlgorithmTag::OddComposite,
            AlgorithmChoice::General => AlgorithmTag::General,
            AlgorithmChoice::OracleFallback => AlgorithmTag::OracleFallback,
        }
    }
}

/// Picks the cheapest applicable algorithm for period `n`.
pub fn choose(n: usize) -> AlgorithmChoice {
    if n == 0 {
        return AlgorithmChoice::OracleFallback;
    }
    let (odd, a) = split_two_power(n);
    let odd64 = odd as u64;
    if odd == 1 {
        return AlgorithmChoice::GamesChan { n: a };
    }
    if odd == 3 {
        return AlgorithmChoice::Fast3x2n { n: a };
    }
    if is_prime(odd64) && odd % 4 == 1 && two_is_primitive_root(odd64) {
        return AlgorithmChoice::FastPx2n { p: odd64, n: a };
    }
    if a == 0 {
        let primes = factor_integer(odd64);
        if primes
            .iter()
            .all(|&(p, e)| prime_power_factors_irreducible(p, e))
        {
            return match primes[..] {
                [(p, e)] => AlgorithmChoice::OddPrimePower { p, n: e },
                _ => AlgorithmChoice::OddComposite { primes },
            };
        }
    }
    if factor_xn_minus_1(n).is_ok() {
        AlgorithmChoice::General
    } else {
        AlgorithmChoice::OracleFallback
    }
}

/// Linear complexity with the algorithm chosen by [`choose`]. Never fails:
/// periods without a structured algorithm go through the gcd oracle.
pub fn solve(s: &CyclicSeq) -> LcResult {
    let mut meter = OpMeter::new();
    let choice = choose(s.len());
    let res = match &choice {
        AlgorithmChoice::GamesChan { .. } => games_chan(s, &mut meter),
        AlgorithmChoice::Fast3x2n { .. } => lc_3x2n(s, &mut meter),
        AlgorithmChoice::FastPx2n { p, .. } => lc_px2n(*p, s, &mut meter),
        AlgorithmChoice::OddPrimePower { p, n } => lc_odd_prime_power(*p, *n, s, &mut meter),
        AlgorithmChoice::OddComposite { .. } => lc_odd_composite(s, &mut meter),
        AlgorithmChoice::General => general(s, &mut meter),
        AlgorithmChoice::OracleFallback => Err(Error::UnsupportedPeriod(s.len())),
    };
    res.unwrap_or_else(|_| oracle_fallback(s))
}

/// Runs the specialised algorithm for the period, if there is one.
pub fn fast(s: &CyclicSeq, meter: &mut OpMeter) -> Result<LcResult> {
    match choose(s.len()) {
        AlgorithmChoice::GamesChan { .. } => games_chan(s, meter),
        AlgorithmChoice::Fast3x2n { .. } => lc_3x2n(s, meter),
        AlgorithmChoice::FastPx2n { p, .. } => lc_px2n(p, s, meter),
        AlgorithmChoice::OddPrimePower { p, n } => lc_odd_prime_power(p, n, s, meter),
        AlgorithmChoice::OddComposite { .. } => lc_odd_composite(s, meter),
        AlgorithmChoice::General | AlgorithmChoice::OracleFallback => {
            Err(Error::UnsupportedPeriod(s.len()))
        }
    }
}

fn oracle_fallback(s: &CyclicSeq) -> LcResult {
    LcResult {
        algorithm: AlgorithmTag::OracleFallback,
        ..gcd_method(s)
    }
}

pub fn games_chan_bound(n: u32) -> u64 {
    (1u64 << n) + n as u64
}

pub fn fast_3x2n_bound(n: u32) -> u64 {
    7 * (1u64 << n) + 2 * n as u64
}

pub fn fast_px2n_bound(p: u64, n: u32) -> u64 {
    (p * p + 7 * p + 7) * (1u64 << n) / 4 + 2 * n as u64
}

pub fn odd_prime_power_bound(len: usize) -> u64 {
    2 * len as u64
}

fn x_plus_1() -> Poly2 {
    Poly2::from_u64(0b11)
}

fn log2_exact(v: usize) -> Option<u32> {
    v.is_power_of_two().then(|| v.trailing_zeros())
}

fn shape_error(expected: impl Into<String>, got: usize) -> Error {
    Error::InvalidLength {
        expected: expected.into(),
        got,
    }
}

/// `a[a_at..a_at+len] ^ b[b_at..b_at+len]`, charged `len` XORs.
fn xor_blocks(
    a: &Bits,
    a_at: usize,
    b: &Bits,
    b_at: usize,
    len: usize,
    meter: &mut OpMeter,
) -> Bits {
    let mut out = a.slice(a_at, len);
    out.xor_range_assign(b, b_at);
    meter.charge_xor(len);
    out
}

fn result_from(deltas: Vec<(Poly2, u64)>, meter: &OpMeter, tag: AlgorithmTag) -> LcResult {
    let min_poly = deltas
        .iter()
        .fold(Poly2::one(), |acc, (q, d)| acc.mul(&q.pow(*d)));
    LcResult::new(min_poly, *meter, tag).with_deltas(deltas)
}

/// Halving loop on a block of length `2^k`. `zero_known` carries a zero
/// status that is already known without a comparison; in the zero branch
/// the left half inherits it because the block is `[L L]`.
fn halving_core(mut a: Bits, mut zero_known: Option<bool>, meter: &mut OpMeter) -> u64 {
    let mut c = 0u64;
    while a.len() > 1 {
        let h = a.len() / 2;
        let b = xor_blocks(&a, 0, &a, h, h, meter);
        if !b.is_zero() {
            c += h as u64;
            meter.charge_counter(1);
            a = b;
            zero_known = Some(false);
        } else {
            a.truncate(h);
        }
    }
    if final_nonzero(&a, zero_known, meter) {
        c += 1;
        meter.charge_counter(1);
    }
    c
}

fn final_nonzero(a: &Bits, zero_known: Option<bool>, meter: &mut OpMeter) -> bool {
    match zero_known {
        Some(z) => !z,
        None => {
            meter.charge_cmp(a.len());
            !a.is_zero()
        }
    }
}

/// Linear complexity for `N = 2^n`; the minimal polynomial is `(x+1)^c`.
pub fn games_chan(s: &CyclicSeq, meter: &mut OpMeter) -> Result<LcResult> {
    let len = s.len();
    if log2_exact(len).is_none() {
        return Err(shape_error("a power of two", len));
    }
    let c = if len == 1 {
        meter.charge_cmp(1);
        s.get(0) as u64
    } else {
        halving_core(s.raw().clone(), None, meter)
    };
    Ok(result_from(
        vec![(x_plus_1(), c)],
        meter,
        AlgorithmTag::GamesChan,
    ))
}

/// For irreducible `f` with exponent `e` and `N = e * 2^n`, returns `m`
/// such that `f^m` is the minimal polynomial of `s`. Requires
/// `f(E)^{2^n} s = 0`.
pub fn ppp(f: &Poly2, s: &CyclicSeq, meter: &mut OpMeter) -> Result<(u64, LcResult)> {
    if !f.is_irreducible()? {
        return Err(Error::Reducible);
    }
    let e = f.exponent()? as usize;
    let len = s.len();
    let expected = || shape_error(format!("{e} * 2^n"), len);
    if len == 0 || len % e != 0 {
        return Err(expected());
    }
    let n = log2_exact(len / e).ok_or_else(expected)?;
    if !apply_poly_pow2(f, n, s, &mut OpMeter::new())?.is_all_zero() {
        return Err(Error::NotGeneratedBy);
    }

    let exps: Vec<usize> = f.exponents().collect();
    let mut cur = s.raw().clone();
    let mut m = 0u64;
    let mut zero_known = None;
    for j in 1..=n {
        let shift = 1usize << (n - j);
        let half = cur.len() / 2;
        let scaled: Vec<usize> = exps.iter().map(|&x| x * shift).collect();
        let out = apply_exponents_prefix(&scaled, &cur, half, meter);
        if !out.is_zero() {
            m += shift as u64;
            meter.charge_counter(1);
            cur = out;
            zero_known = Some(false);
        } else {
            cur.truncate(half);
        }
    }
    if final_nonzero(&cur, zero_known, meter) {
        m += 1;
        meter.charge_counter(1);
    }
    Ok((
        m,
        result_from(vec![(f.clone(), m)], meter, AlgorithmTag::Ppp),
    ))
}

/// Exponent of factor `t` in the minimal polynomial of `s`: saturate every
/// other factor at `q_i^{2^{γ_i}}`, then binary-search the exponent of
/// `q_t` below `2^{γ_t}`.
pub fn find_delta(
    s: &CyclicSeq,
    fac: &Factorization,
    t: usize,
    meter: &mut OpMeter,
) -> Result<u64> {
    let mut r = s.clone();
    let mut fresh = false;
    for (i, q) in fac.factors.iter().enumerate() {
        if i != t {
            r = apply_poly_pow2(&q.poly, q.gamma, &r, meter)?;
            fresh = true;
        }
    }
    if is_zero(&r, meter, fresh) {
        return Ok(0);
    }
    let target = &fac.factors[t];
    let mut delta = 0u64;
    for j in 1..=target.gamma {
        let step = target.gamma - j;
        let a = apply_poly_pow2(&target.poly, step, &r, meter)?;
        if !a.is_all_zero() {
            r = a;
            delta += 1 << step;
            meter.charge_counter(1);
        }
    }
    meter.charge_counter(1);
    Ok(delta + 1)
}

/// Minimal polynomial from a factorization of `x^N - 1`, one exponent at a
/// time, largest degree first.
pub fn min_poly_general(
    s: &CyclicSeq,
    fac: &Factorization,
    meter: &mut OpMeter,
) -> Result<LcResult> {
    if fac.modulus_degree != s.len() {
        return Err(shape_error(
            format!("length {}", fac.modulus_degree),
            s.len(),
        ));
    }
    let mut order: Vec<usize> = (0..fac.factors.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(fac.factors[i].poly.degree()));
    let mut deltas: Vec<(Poly2, u64)> = fac.factors.iter().map(|f| (f.poly.clone(), 0)).collect();
    for t in order {
        deltas[t].1 = find_delta(s, fac, t, meter)?;
    }
    Ok(result_from(deltas, meter, AlgorithmTag::General))
}

/// [`min_poly_general`] with the built-in factorization of `x^N - 1`.
pub fn general(s: &CyclicSeq, meter: &mut OpMeter) -> Result<LcResult> {
    let fac = factor_xn_minus_1(s.len())?;
    min_poly_general(s, &fac, meter)
}

/// `N = 3 * 2^n`. The `x^2+x+1` part is tracked on the triple
/// `(X, Y, Z)` of thirds, whose pairwise sums represent `(E^{2^n}+1) s`;
/// the `x+1` part is the halving algorithm on `X + Y + Z`.
pub fn lc_3x2n(s: &CyclicSeq, meter: &mut OpMeter) -> Result<LcResult> {
    let len = s.len();
    let expected = || shape_error("3 * 2^n", len);
    if len == 0 || len % 3 != 0 {
        return Err(expected());
    }
    let n = log2_exact(len / 3).ok_or_else(expected)?;
    let t = len / 3;
    let raw = s.raw();

    let mut x = raw.slice(0, t);
    let mut y = raw.slice(t, t);
    let mut z = raw.slice(2 * t, t);
    let mut i = 0u64;
    let mut first_split = None;
    for k in 1..=n {
        let h = x.len() / 2;
        let xp = xor_blocks(&y, h, &x, 0, h, meter);
        let yp = xor_blocks(&x, h, &z, 0, h, meter);
        let zp = xor_blocks(&y, 0, &z, h, h, meter);
        let a = xor_blocks(&xp, 0, &yp, 0, h, meter);
        let b = xor_blocks(&yp, 0, &zp, 0, h, meter);
        if k == 1 {
            first_split = Some(xor_blocks(&a, 0, &zp, 0, h, meter));
        }
        if !a.is_zero() || !b.is_zero() {
            i += h as u64;
            meter.charge_counter(1);
            (x, y, z) = (xp, yp, zp);
        } else {
            (x, y, z) = (y.slice(0, h), x.slice(0, h), z.slice(0, h));
        }
    }
    let a = xor_blocks(&x, 0, &y, 0, 1, meter);
    let b = xor_blocks(&y, 0, &z, 0, 1, meter);
    if !a.is_zero() || !b.is_zero() {
        i += 1;
        meter.charge_counter(1);
    }

    let j = match first_split {
        None => {
            let w = xor_blocks(&a, 0, &z, 0, 1, meter);
            let zero = w.is_zero();
            halving_core(w, Some(zero), meter)
        }
        Some(b1) if !b1.is_zero() => {
            meter.charge_counter(1);
            (b1.len() as u64) + halving_core(b1, Some(false), meter)
        }
        Some(b1) => {
            let h = b1.len();
            let mut w = xor_blocks(raw, 0, raw, t, h, meter);
            w.xor_range_assign(raw, 2 * t);
            meter.charge_xor(h);
            let zero = w.is_zero();
            halving_core(w, Some(zero), meter)
        }
    };
    let deltas = vec![(x_plus_1(), j), (Poly2::from_u64(0b111), i)];
    Ok(result_from(deltas, meter, AlgorithmTag::Fast3x2n))
}

fn check_fast_prime(p: u64) -> Result<()> {
    if !is_prime(p) || p % 4 != 1 {
        return Err(Error::InvalidPrime(format!(
            "{p} is not a prime congruent to 1 mod 4"
        )));
    }
    if !two_is_primitive_root(p) {
        return Err(Error::InvalidPrime(format!(
            "2 is not a primitive root modulo {p}"
        )));
    }
    Ok(())
}

/// `N = p * 2^n` with `p ≡ 1 (mod 4)` prime and 2 primitive modulo `p`, so
/// `x^N - 1 = (x+1)^{2^n} Q(x)^{2^n}` with `Q = 1 + x + ... + x^{p-1}`.
pub fn lc_px2n(p: u64, s: &CyclicSeq, meter: &mut OpMeter) -> Result<LcResult> {
    check_fast_prime(p)?;
    let pu = p as usize;
    let len = s.len();
    let expected = || shape_error(format!("{p} * 2^n"), len);
    if len == 0 || len % pu != 0 {
        return Err(expected());
    }
    let n = log2_exact(len / pu).ok_or_else(expected)?;
    let (i, j) = if n == 0 {
        px_base(pu, s.raw(), meter)
    } else {
        px_descent(pu, n, s.raw(), meter)
    };
    let deltas = vec![(x_plus_1(), j), (Poly2::all_ones_spread(pu, 1), i)];
    Ok(result_from(deltas, meter, AlgorithmTag::FastPx2n))
}

fn px_base(p: usize, raw: &Bits, meter: &mut OpMeter) -> (u64, u64) {
    let r = apply_exponents_prefix(&[0, 1], raw, p, meter);
    let mut i = 0;
    if !r.is_zero() {
        i = 1;
        meter.charge_counter(1);
    }
    meter.charge_xor(p - 1);
    let v = raw.count_ones() % 2 == 1;
    let j = halving_core(Bits::from_bools([v]), Some(!v), meter);
    (i, j)
}

fn concat_blocks(blocks: &[Bits]) -> Bits {
    let refs: Vec<&Bits> = blocks.iter().collect();
    Bits::concat(&refs)
}

/// Blocks `z` of size `k` are consumed `p` at a time: `w_b` is the sum of
/// `Z_b .. Z_{b+p-1}`, updated by a sliding window.
fn sliding_sums(z: &Bits, p: usize, k: usize, meter: &mut OpMeter) -> Vec<Bits> {
    let mut w0 = z.slice(0, k);
    for j in 1..p {
        w0.xor_range_assign(z, j * k);
    }
    meter.charge_xor((p - 1) * k);
    let mut ws = vec![w0];
    for b in 1..p {
        let mut w = xor_blocks(&ws[b - 1], 0, z, (b - 1) * k, k, meter);
        w.xor_range_assign(z, (b - 1 + p) * k);
        meter.charge_xor(k);
        ws.push(w);
    }
    ws
}

fn px_descent(p: usize, n: u32, raw: &Bits, meter: &mut OpMeter) -> (u64, u64) {
    let big_t = 1usize << n;
    let h = big_t / 2;

    let sp = xor_blocks(raw, 0, raw, p * h, p * h, meter);
    let d0_zero = sp.slice(0, h).is_zero();
    let t = xor_blocks(&sp, 0, &sp, h, (p - 1) * h, meter);
    let t_nonzero = !t.is_zero();
    debug_assert!(
        t_nonzero || sp.slice((p - 1) * h, h) == sp.slice(0, h),
        "partial zero test disagrees with the full test"
    );

    let mut i = 0u64;
    let mut z;
    let mut zero_known;
    if n == 1 {
        if t_nonzero {
            i += 1;
            meter.charge_counter(1);
            z = t.clone();
            zero_known = Some(false);
        } else {
            z = xor_blocks(raw, 0, raw, 2, p, meter);
            zero_known = Some(z.is_zero());
        }
    } else {
        let m = h / 2;
        if t_nonzero {
            i += h as u64;
            meter.charge_counter(1);
            let spp = xor_blocks(&sp, 0, &sp, p * m, p * m, meter);
            let x = xor_blocks(&spp, 0, &spp, m, (p - 1) * m, meter);
            debug_assert!(!x.is_zero() || spp.slice((p - 1) * m, m) == spp.slice(0, m));
            if !x.is_zero() {
                i += m as u64;
                meter.charge_counter(1);
                let last = xor_blocks(&spp, (p - 1) * m, &spp, 0, m, meter);
                z = Bits::concat(&[&x, &last]);
            } else {
                z = t.slice(0, p * m);
            }
            zero_known = Some(false);
        } else {
            let w: Vec<Bits> = (0..p + 2)
                .map(|b| xor_blocks(raw, b * m, raw, (b + p) * m, m, meter))
                .collect();
            let mut u0 = w[0].clone();
            for wb in &w[1..4] {
                u0.xor_assign(wb);
            }
            meter.charge_xor(3 * m);
            let mut us = vec![u0];
            for b in 1..p - 1 {
                let mut u = us[b - 1].xor(&w[b - 1]);
                u.xor_assign(&w[b + 3]);
                meter.charge_xor(2 * m);
                us.push(u);
            }
            if us.iter().any(|u| !u.is_zero()) {
                i += m as u64;
                meter.charge_counter(1);
                let wp2 = xor_blocks(raw, (p + 2) * m, raw, (2 * p + 2) * m, m, meter);
                let mut last = us[p - 2].xor(&w[p - 2]);
                last.xor_assign(&wp2);
                meter.charge_xor(2 * m);
                us.push(last);
                z = concat_blocks(&us);
                zero_known = Some(false);
            } else {
                z = xor_blocks(raw, 0, raw, 4 * m, p * m, meter);
                zero_known = Some(z.is_zero());
            }
        }
        for level in 3..=n {
            let k = 1usize << (n - level);
            let ws = sliding_sums(&z, p, k, meter);
            if ws.iter().any(|w| !w.is_zero()) {
                i += k as u64;
                meter.charge_counter(1);
                z = concat_blocks(&ws);
                zero_known = Some(false);
            } else {
                z.truncate(p * k);
            }
        }
    }
    if final_nonzero(&z, zero_known, meter) {
        i += 1;
        meter.charge_counter(1);
    }

    let (b1, b1_zero) = if t_nonzero {
        let mut b = sp.slice(0, h);
        for k in (1..p - 1).step_by(2) {
            b.xor_range_assign(&t, k * h);
        }
        meter.charge_xor((p - 1) / 2 * h);
        let zero = b.is_zero();
        (b, zero)
    } else {
        (sp.slice(0, h), d0_zero)
    };
    let j = if !b1_zero {
        meter.charge_counter(1);
        h as u64 + halving_core(b1, Some(false), meter)
    } else {
        let mut l = raw.slice(0, h);
        for k in 1..p {
            l.xor_range_assign(raw, k * big_t);
        }
        meter.charge_xor((p - 1) * h);
        let zero = l.is_zero();
        halving_core(l, Some(zero), meter)
    };
    (i, j)
}

/// Splits off one prime at a time. At length `p * K` the blocks `B_j` give
/// `(E^K + 1) s` through consecutive differences; in the nonzero case the
/// block sum is the period-`K` component, and the remainder is annihilated
/// by `Q_p(x^K)`. When `K` is a power of `p` that polynomial is
/// irreducible; otherwise the remainder's minimal polynomial is taken from
/// its generating function.
fn odd_descent(
    primes: &[(usize, u32)],
    raw: &Bits,
    meter: &mut OpMeter,
) -> (Vec<(Poly2, u64)>, bool) {
    let mut cur = raw.clone();
    let mut parts = Vec::new();
    let mut all_irreducible = true;
    let mut zero_known = None;
    let mut l = raw.len();
    for (idx, &(p, e)) in primes.iter().enumerate() {
        let last_prime = idx + 1 == primes.len();
        for _ in 0..e {
            let k = l / p;
            let r = xor_blocks(&cur, 0, &cur, k, (p - 1) * k, meter);
            if r.is_zero() {
                cur.truncate(k);
                if last_prime {
                    parts.push((Poly2::all_ones_spread(p, k), 0));
                }
            } else {
                let mut proj = cur.slice(0, k);
                for j in (1..p - 1).step_by(2) {
                    proj.xor_range_assign(&r, j * k);
                }
                meter.charge_xor((p - 1) / 2 * k);
                if last_prime {
                    parts.push((Poly2::all_ones_spread(p, k), 1));
                } else {
                    let blocks: Vec<Bits> =
                        (0..p).map(|b| cur.slice(b * k, k).xor(&proj)).collect();
                    let u = concat_blocks(&blocks);
                    meter.charge_xor(p * k);
                    let fu = gcd_method(&CyclicSeq::from_raw(u)).min_poly;
                    parts.push((fu, 1));
                    all_irreducible = false;
                }
                meter.charge_counter(1);
                zero_known = Some(proj.is_zero());
                cur = proj;
            }
            l = k;
        }
    }
    let last = final_nonzero(&cur, zero_known, meter) as u64;
    if last == 1 {
        meter.charge_counter(1);
    }
    parts.push((x_plus_1(), last));
    parts.reverse();
    (parts, all_irreducible)
}

/// `N = p^n` with `p` odd and every `Q_p(x^{p^i})` irreducible.
pub fn lc_odd_prime_power(p: u64, n: u32, s: &CyclicSeq, meter: &mut OpMeter) -> Result<LcResult> {
    if !is_prime(p) || p == 2 || n == 0 {
        return Err(Error::InvalidPrime(format!(
            "{p}^{n} is not an odd prime power"
        )));
    }
    if !prime_power_factors_irreducible(p, n) {
        return Err(Error::InvalidPrime(format!(
            "x^({p}^{n}) - 1 has reducible cyclotomic factors"
        )));
    }
    let expected = (p as usize).checked_pow(n);
    if expected != Some(s.len()) {
        return Err(shape_error(format!("{p}^{n}"), s.len()));
    }
    let (parts, _) = odd_descent(&[(p as usize, n)], s.raw(), meter);
    Ok(result_from(parts, meter, AlgorithmTag::OddPrimePower))
}

/// Odd `N > 1` whose prime powers each satisfy the conditions of
/// [`lc_odd_prime_power`].
pub fn lc_odd_composite(s: &CyclicSeq, meter: &mut OpMeter) -> Result<LcResult> {
    let len = s.len();
    if len % 2 == 0 {
        return Err(shape_error("an odd length", len));
    }
    let primes = factor_integer(len as u64);
    if primes.is_empty()
        || !primes
            .iter()
            .all(|&(p, e)| prime_power_factors_irreducible(p, e))
    {
        return Err(Error::UnsupportedPeriod(len));
    }
    let primes: Vec<(usize, u32)> = primes.iter().map(|&(p, e)| (p as usize, e)).collect();
    let (parts, irreducible) = odd_descent(&primes, s.raw(), meter);
    let res = result_from(parts, meter, AlgorithmTag::OddComposite);
    Ok(if irreducible {
        res
    } else {
        LcResult {
            deltas: None,
            ..res
        }
    })
}

/// Checks that `res.min_poly` annihilates `s`, divides `x^N - 1`, and that
/// lowering any recorded exponent by one no longer annihilates `s`.
pub fn verify_minimal(s: &CyclicSeq, res: &LcResult) -> bool {
    if !res.is_consistent_with(s) {
        return false;
    }
    match &res.deltas {
        Some(deltas) => deltas.iter().filter(|(_, d)| *d > 0).all(|(q, _)| {
            let lower = res.min_poly.div_exact(q).expect("factor divides");
            !apply_poly(&lower, s, &mut OpMeter::new())
                .expect("nonzero")
                .is_all_zero()
        }),
        None => gcd_method(s).min_poly == res.min_poly,
    }
}
