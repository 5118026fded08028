//! Packed bit buffer shared by polynomials and cyclic sequences.
//!
//! Bit `i` lives in word `i / 64` at position `i % 64`. Bits at or beyond
//! `len` are always zero.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub(crate) struct Bits {
    words: Vec<u64>,
    len: usize,
}

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

#[inline]
fn low_mask(count: usize) -> u64 {
    if count >= WORD {
        u64::MAX
    } else {
        (1u64 << count) - 1
    }
}

impl Bits {
    pub fn zeros(len: usize) -> Self {
        Bits {
            words: vec![0; words_for(len)],
            len,
        }
    }

    pub fn with_capacity(len: usize) -> Self {
        Bits {
            words: Vec::with_capacity(words_for(len)),
            len: 0,
        }
    }

    pub fn from_words(mut words: Vec<u64>, len: usize) -> Self {
        words.resize(words_for(len), 0);
        let mut b = Bits { words, len };
        b.clear_tail();
        b
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        let mut b = Bits::default();
        for bit in iter {
            b.push(bit);
        }
        b
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn push(&mut self, bit: bool) {
        if self.len % WORD == 0 {
            self.words.push(0);
        }
        self.len += 1;
        if bit {
            self.set(self.len - 1, true);
        }
    }

    /// Appends the low `count` bits of `value` (`count <= 64`).
    pub fn push_word(&mut self, value: u64, count: usize) {
        if count == 0 {
            return;
        }
        let value = value & low_mask(count);
        let offset = self.len % WORD;
        if offset == 0 {
            self.words.push(value);
        } else {
            *self.words.last_mut().expect("nonempty") |= value << offset;
            if offset + count > WORD {
                self.words.push(value >> (WORD - offset));
            }
        }
        self.len += count;
    }

    /// Reads up to 64 bits starting at `pos`; positions past the end read as 0.
    #[inline]
    pub fn word_at(&self, pos: usize) -> u64 {
        let idx = pos / WORD;
        let off = pos % WORD;
        let lo = self.words.get(idx).copied().unwrap_or(0);
        if off == 0 {
            lo
        } else {
            let hi = self.words.get(idx + 1).copied().unwrap_or(0);
            (lo >> off) | (hi << (WORD - off))
        }
    }

    /// Appends bits `[start, start + count)` of `src`.
    pub fn append_range(&mut self, src: &Bits, start: usize, count: usize) {
        debug_assert!(start + count <= src.len);
        let mut done = 0;
        while done < count {
            let take = (count - done).min(WORD);
            self.push_word(src.word_at(start + done), take);
            done += take;
        }
    }

    pub fn slice(&self, start: usize, count: usize) -> Bits {
        let mut out = Bits::with_capacity(count);
        out.append_range(self, start, count);
        out
    }

    /// `count` consecutive bits starting at `start`, wrapping cyclically.
    pub fn cyclic_window(&self, start: usize, count: usize) -> Bits {
        let n = self.len;
        let mut out = Bits::with_capacity(count);
        if n == 0 {
            return Bits::zeros(count);
        }
        let mut pos = start % n;
        let mut left = count;
        while left > 0 {
            let take = left.min(n - pos);
            out.append_range(self, pos, take);
            left -= take;
            pos = 0;
        }
        out
    }

    pub fn concat(parts: &[&Bits]) -> Bits {
        let total = parts.iter().map(|p| p.len).sum();
        let mut out = Bits::with_capacity(total);
        for p in parts {
            out.append_range(p, 0, p.len);
        }
        out
    }

    pub fn xor_assign(&mut self, other: &Bits) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn xor(&self, other: &Bits) -> Bits {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// XORs `src[src_start .. src_start + self.len]` into `self`.
    pub fn xor_range_assign(&mut self, src: &Bits, src_start: usize) {
        debug_assert!(src_start + self.len <= src.len);
        let len = self.len;
        for (w, word) in self.words.iter_mut().enumerate() {
            let pos = w * WORD;
            let take = (len - pos).min(WORD);
            *word ^= src.word_at(src_start + pos) & low_mask(take);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn truncate(&mut self, len: usize) {
        if len < self.len {
            self.len = len;
            self.words.truncate(words_for(len));
            self.clear_tail();
        }
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= low_mask(rem);
            }
        }
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_str(s: &str) -> Bits {
        Bits::from_bools(s.chars().map(|c| c == '1'))
    }

    #[test]
    fn push_word_across_boundaries() {
        let mut b = Bits::default();
        b.push_word(0b101, 3);
        b.push_word(u64::MAX, 64);
        b.push_word(0, 2);
        assert_eq!(b.len(), 69);
        assert!(b.get(0) && !b.get(1) && b.get(2));
        assert!((3..67).all(|i| b.get(i)));
        assert!(!b.get(67) && !b.get(68));
    }

    #[test]
    fn cyclic_window_wraps() {
        let b = from_str("0110");
        assert_eq!(format!("{:?}", b.cyclic_window(2, 4)), "1001");
        assert_eq!(format!("{:?}", b.cyclic_window(3, 2)), "00");
    }

    #[test]
    fn slice_and_xor_range() {
        let bits: Vec<bool> = (0..200).map(|i| (i * 7 + i / 3) % 5 < 2).collect();
        let b = Bits::from_bools(bits.iter().copied());
        let s = b.slice(37, 101);
        assert!((0..101).all(|i| s.get(i) == bits[37 + i]));
        let mut t = Bits::zeros(90);
        t.xor_range_assign(&b, 70);
        assert!((0..90).all(|i| t.get(i) == bits[70 + i]));
    }

    #[test]
    fn truncate_clears_tail() {
        let mut b = from_str("1111111");
        b.truncate(3);
        assert_eq!(b.count_ones(), 3);
        assert_eq!(b, from_str("111"));
    }
}
