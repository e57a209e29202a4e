//! Big-endian encoding of words over `[N]` as 1-based integers.
//!
//! A tuple `(a_1, ..., a_n)` maps to `1 + sum (a_i - 1) * N^(n - i)`, so the
//! encoding order agrees with lexicographic order on tuples.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Default cap on `N^n` for any encoded word space.
pub const DEFAULT_WORD_LIMIT: u64 = 1 << 20;

static WORD_LIMIT: AtomicU64 = AtomicU64::new(DEFAULT_WORD_LIMIT);

/// The process-wide cap on `N^n` used by operations without an explicit limit.
pub fn word_limit() -> u64 {
    WORD_LIMIT.load(Ordering::Relaxed)
}

pub fn set_word_limit(limit: u64) {
    WORD_LIMIT.store(limit, Ordering::Relaxed);
}

/// Cap on the number of entries in a materialized level table.
pub const MAX_TABLE_ENTRIES: u64 = 1 << 26;

/// `base^exp`, failing when the result exceeds `limit`.
pub fn checked_power(base: usize, exp: usize, limit: u64) -> Result<usize> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc
            .checked_mul(base as u64)
            .filter(|&v| v <= limit)
            .ok_or_else(|| Error::Overflow(format!("{base}^{exp} exceeds the limit {limit}")))?;
    }
    Ok(acc as usize)
}

/// Encodes a word of 1-based letters. Returns a 1-based code.
pub fn encode(word: &[u32], base: usize) -> u32 {
    let mut code: u64 = 0;
    for &a in word {
        code = code * base as u64 + (a as u64 - 1);
    }
    (code + 1) as u32
}

/// Decodes a 1-based code into a word of `len` 1-based letters.
pub fn decode(code: u32, base: usize, len: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    decode_into(code, base, &mut out);
    out
}

pub(crate) fn decode_into(code: u32, base: usize, out: &mut [u32]) {
    let mut c = code as u64 - 1;
    for slot in out.iter_mut().rev() {
        *slot = (c % base as u64) as u32 + 1;
        c /= base as u64;
    }
}

/// Zero-based index of a word, used for dense arrays indexed by words.
pub(crate) fn index_of(word: &[u32], base: usize) -> usize {
    word.iter()
        .fold(0usize, |acc, &a| acc * base + (a as usize - 1))
}

/// Writes the word with zero-based index `idx` into `out`.
pub(crate) fn word_at(idx: usize, base: usize, out: &mut [u32]) {
    let mut c = idx;
    for slot in out.iter_mut().rev() {
        *slot = (c % base) as u32 + 1;
        c /= base;
    }
}

/// `v mod n` represented in `1..=n`, so that 0 is identified with `n`.
pub fn wrap(v: i64, n: usize) -> u32 {
    let r = (v - 1).rem_euclid(n as i64);
    (r + 1) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encoding_is_big_endian_and_lexicographic() {
        assert_eq!(encode(&[1, 1, 1], 2), 1);
        assert_eq!(encode(&[1, 1, 2], 2), 2);
        assert_eq!(encode(&[2, 1, 1], 2), 5);
        assert_eq!(encode(&[2, 2, 2], 2), 8);
        assert_eq!(decode(6, 2, 3), vec![2, 1, 2]);
        let mut prev = 0;
        for a in 1..=3u32 {
            for b in 1..=3u32 {
                let c = encode(&[a, b], 3);
                assert!(c > prev);
                prev = c;
                assert_eq!(decode(c, 3, 2), vec![a, b]);
            }
        }
    }

    #[test]
    fn empty_word_encodes_to_one() {
        assert_eq!(encode(&[], 4), 1);
        assert!(decode(1, 4, 0).is_empty());
    }

    #[test]
    fn wrap_identifies_zero_with_n() {
        assert_eq!(wrap(0, 3), 3);
        assert_eq!(wrap(4, 3), 1);
        assert_eq!(wrap(-1, 3), 2);
        assert_eq!(wrap(3, 3), 3);
    }

    #[test]
    fn checked_power_respects_limit() {
        assert_eq!(checked_power(3, 4, 100).unwrap(), 81);
        assert!(matches!(checked_power(3, 5, 100), Err(Error::Overflow(_))));
        assert_eq!(checked_power(7, 0, 1).unwrap(), 1);
    }
}
