//! The sets `S(r, s)` of sequences `(b_p)_{p >= 0}` with `sum b_p = r`,
//! `sum p b_p = s`, their half-integer analogues `S~(r, s)`, and their
//! splittings at a support threshold.
//!
//! Sequences are stored with trailing zeros trimmed, so `Vec` equality is
//! sequence equality and `Vec` order is lex order read from index 0.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::weights::HalfInt;

fn trimmed(v: &[u32]) -> Vec<u32> {
    let end = v.iter().rposition(|&x| x != 0).map_or(0, |p| p + 1);
    v[..end].to_vec()
}

/// Enumerates sequences supported on `lo..=hi` where index `j` carries
/// weight `wr(j)` towards `r` and `j * wr(j)` towards `s`.
fn enumerate(r: u64, s: u64, lo: usize, hi: usize, wr: &dyn Fn(usize) -> u64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut acc = alloc::vec![0u32; hi + 1];
    fn go(
        j: usize,
        hi: usize,
        r: u64,
        s: u64,
        wr: &dyn Fn(usize) -> u64,
        acc: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if r == 0 && s == 0 {
            out.push(trimmed(acc));
            return;
        }
        if j > hi {
            return;
        }
        // Whatever remains must fit on indices j..=hi.
        if s < j as u64 * r || s > hi as u64 * r {
            return;
        }
        let w = wr(j);
        let mut b = 0u64;
        while b * w <= r && b * w * j as u64 <= s {
            acc[j] = b as u32;
            go(j + 1, hi, r - b * w, s - b * w * j as u64, wr, acc, out);
            b += 1;
        }
        acc[j] = 0;
    }
    if lo > hi {
        if r == 0 && s == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(lo, hi, r, s, wr, &mut acc, &mut out);
    out
}

/// `S(r, s)`.
pub fn enum_s(r: u32, s: u32) -> Vec<Vec<u32>> {
    enum_s_range(r, s, 0, s as usize)
}

/// `S(r, s)_k`: `b_p = 0` for `p >= k`.
pub fn enum_s_bounded_above(r: u32, s: u32, k: usize) -> Vec<Vec<u32>> {
    if k == 0 {
        return enum_s_range(r, s, 1, 0);
    }
    enum_s_range(r, s, 0, (k - 1).min(s as usize))
}

/// `_kS(r, s)`: `b_p = 0` for `p < k`.
pub fn enum_s_bounded_below(r: u32, s: u32, k: usize) -> Vec<Vec<u32>> {
    enum_s_range(r, s, k, s as usize)
}

fn enum_s_range(r: u32, s: u32, lo: usize, hi: usize) -> Vec<Vec<u32>> {
    enumerate(r as u64, s as u64, lo, hi, &|_| 1)
}

/// A sequence `(p_i)_{i in (1/2)Z_+}`, stored at doubled index `2i`.
pub type STilde = Vec<u32>;

fn tilde_weight(j: usize) -> u64 {
    if j % 2 == 0 {
        2
    } else {
        1
    }
}

/// `r` and `s` of a sequence in `S~`, as half-integers.
pub fn tilde_r_s(p: &[u32]) -> (HalfInt, HalfInt) {
    let mut r = 0i64;
    let mut s = 0i64;
    for (j, &c) in p.iter().enumerate() {
        let w = tilde_weight(j) as i64 * c as i64;
        r += w;
        s += w * j as i64;
    }
    (HalfInt::from_halves(r), HalfInt::from_halves(s))
}

fn halves(x: HalfInt) -> Option<u64> {
    u64::try_from(x.halves()).ok()
}

/// `S~(r, s)`: `sum_N (p_{N+1/2}/2 + p_N) = r`,
/// `sum_N ((2N+1)/2 p_{N+1/2} + 2N p_N) = s`.
pub fn enum_s_tilde(r: HalfInt, s: HalfInt) -> Vec<STilde> {
    let Some(sh) = halves(s) else { return Vec::new() };
    enum_s_tilde_range(r, s, 0, sh as usize)
}

/// `S~_{<t}(r, s)`: support strictly below the index `t`.
pub fn enum_s_tilde_below(r: HalfInt, s: HalfInt, t: HalfInt) -> Vec<STilde> {
    let Some(sh) = halves(s) else { return Vec::new() };
    let top = t.halves() - 1;
    if top < 0 {
        return enum_s_tilde_range(r, s, 1, 0);
    }
    enum_s_tilde_range(r, s, 0, (top as usize).min(sh as usize))
}

/// `S~_{>=t}(r, s)`: support at or above the index `t`.
pub fn enum_s_tilde_above(r: HalfInt, s: HalfInt, t: HalfInt) -> Vec<STilde> {
    let Some(sh) = halves(s) else { return Vec::new() };
    enum_s_tilde_range(r, s, t.halves().max(0) as usize, sh as usize)
}

fn enum_s_tilde_range(r: HalfInt, s: HalfInt, lo: usize, hi: usize) -> Vec<STilde> {
    let (Some(rh), Some(sh)) = (halves(r), halves(s)) else { return Vec::new() };
    enumerate(rh, sh, lo, hi, &tilde_weight)
}

/// `S(r, s) = _kS(r, s)` disjoint union of `S(r - r', s - s')_k x _kS(r', s')`
/// over `r' < r`. Only nonempty cells are kept.
#[derive(Clone, Debug)]
pub struct SSplit {
    pub high: Vec<Vec<u32>>,
    pub cells: Vec<SCell>,
}

#[derive(Clone, Debug)]
pub struct SCell {
    pub r: u32,
    pub s: u32,
    pub low: Vec<Vec<u32>>,
    pub high: Vec<Vec<u32>>,
}

pub fn split_s(r: u32, s: u32, k: usize) -> SSplit {
    let high = enum_s_bounded_below(r, s, k);
    let mut cells = Vec::new();
    for rp in 0..r {
        for sp in 0..=s {
            let low = enum_s_bounded_above(r - rp, s - sp, k);
            if low.is_empty() {
                continue;
            }
            let hi = enum_s_bounded_below(rp, sp, k);
            if !hi.is_empty() {
                cells.push(SCell { r: rp, s: sp, low, high: hi });
            }
        }
    }
    SSplit { high, cells }
}

/// `S~(r, s) = S~_{>=k+1/2}(r, s)` disjoint union of
/// `S~_{<k+1/2}(r - r', s - s') x S~_{>=k+1/2}(r', s')` over `r' < r`
/// (including `(r', s') = (0, 0)`). Only nonempty cells are kept.
#[derive(Clone, Debug)]
pub struct STildeSplit {
    pub high: Vec<STilde>,
    pub cells: Vec<STildeCell>,
}

#[derive(Clone, Debug)]
pub struct STildeCell {
    pub r: HalfInt,
    pub s: HalfInt,
    pub low: Vec<STilde>,
    pub high: Vec<STilde>,
}

pub fn split_s_tilde(r: HalfInt, s: HalfInt, k: usize) -> STildeSplit {
    let t = HalfInt::from_int(k as i64) + HalfInt::HALF;
    let high = enum_s_tilde_above(r, s, t);
    let mut cells = Vec::new();
    for rh in 0..r.halves() {
        for sh in 0..=s.halves() {
            if (rh + sh) % 2 != 0 {
                continue;
            }
            let (rp, sp) = (HalfInt::from_halves(rh), HalfInt::from_halves(sh));
            let low = enum_s_tilde_below(r - rp, s - sp, t);
            if low.is_empty() {
                continue;
            }
            let hi = enum_s_tilde_above(rp, sp, t);
            if !hi.is_empty() {
                cells.push(STildeCell { r: rp, s: sp, low, high: hi });
            }
        }
    }
    STildeSplit { high, cells }
}

/// Elementwise sum of two trimmed sequences.
pub(crate) fn concat(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = alloc::vec![0u32; a.len().max(b.len())];
    for (j, &x) in a.iter().enumerate() {
        out[j] += x;
    }
    for (j, &x) in b.iter().enumerate() {
        out[j] += x;
    }
    trimmed(&out)
}

/// `prod_N ((-1) / 2^N)^{p_{N+1/2}} ((-1)(2 - (-1)^N) / 2^{2N})^{p_N}`.
pub fn y_coefficient(p: &[u32]) -> BigRational {
    let mut num = BigInt::one();
    let mut log2_den: u64 = 0;
    for (j, &c) in p.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let big_n = (j / 2) as u64;
        let c64 = c as u64;
        if j % 2 == 1 {
            log2_den += big_n * c64;
        } else {
            let odd = if big_n % 2 == 0 { 1 } else { 3 };
            num *= BigInt::from(odd).pow(c);
            log2_den += 2 * big_n * c64;
        }
        if c % 2 == 1 {
            num = -num;
        }
    }
    let den = BigInt::one() << log2_den;
    let q = BigRational::new(num, den);
    debug_assert!(!q.is_zero());
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn small_s_sets() {
        assert_eq!(enum_s(2, 2), vec![vec![0, 2], vec![1, 0, 1]]);
        assert_eq!(enum_s(0, 0), vec![Vec::<u32>::new()]);
        assert!(enum_s(0, 1).is_empty());
        assert_eq!(enum_s(1, 3), vec![vec![0, 0, 0, 1]]);
    }

    #[test]
    fn bounded_sets() {
        assert_eq!(enum_s_bounded_below(2, 4, 2), vec![vec![0, 0, 2]]);
        assert!(enum_s_bounded_above(2, 4, 2).is_empty());
        assert_eq!(enum_s_bounded_above(3, 0, 0), Vec::<Vec<u32>>::new());
        assert_eq!(enum_s_bounded_above(0, 0, 0), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn tilde_sets_have_the_right_r_and_s() {
        for rh in 0..=8 {
            for sh in 0..=8 {
                if (rh + sh) % 2 != 0 {
                    continue;
                }
                let (r, s) = (HalfInt::from_halves(rh), HalfInt::from_halves(sh));
                for p in enum_s_tilde(r, s) {
                    assert_eq!(tilde_r_s(&p), (r, s));
                }
            }
        }
        // r = 1/2, s = 1/2: only p_{1/2} = 1.
        assert_eq!(enum_s_tilde(HalfInt::HALF, HalfInt::HALF), vec![vec![0, 1]]);
    }

    #[test]
    fn y_coefficients() {
        // p_{1/2} = 1: -1.  p_1 = 1: -3/4.  p_{3/2} = 2: 1/4.
        assert_eq!(y_coefficient(&[0, 1]), BigRational::from_integer((-1).into()));
        assert_eq!(y_coefficient(&[0, 0, 1]), BigRational::new((-3).into(), 4.into()));
        assert_eq!(y_coefficient(&[0, 0, 0, 2]), BigRational::new(1.into(), 4.into()));
        assert_eq!(y_coefficient(&[]), BigRational::one());
    }
}
