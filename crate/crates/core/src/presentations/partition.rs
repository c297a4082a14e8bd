use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::root_data::{Root, RootSystemData};
use crate::weights::{HalfInt, Weight};
use crate::{Error, Result};

/// Where the written partition starts.
///
/// Hyperspecial tuples begin at `xi_0`; special ones begin at `xi_1`, and
/// `xi_0` is not part of the data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    Hyperspecial,
    Special,
}

impl Convention {
    pub fn offset(self) -> usize {
        match self {
            Convention::Hyperspecial => 0,
            Convention::Special => 1,
        }
    }
}

/// A weakly decreasing sequence of parts whose first entry is
/// `xi_{offset}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<u32>,
    offset: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionShape {
    /// All parts equal (including the empty partition).
    Rectangular,
    /// `(k_1^{s_1}, k_2)` with `k_1 > k_2 > 0`.
    SpecialFatHook,
    Other,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>, convention: Convention) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Hypothesis(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts, offset: convention.offset() })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    /// `xi_j`, zero beyond the written parts; `None` for `xi_0` of a special
    /// partition.
    pub fn part(&self, j: usize) -> Option<u32> {
        if j < self.offset {
            return None;
        }
        Some(self.parts.get(j - self.offset).copied().unwrap_or(0))
    }

    /// Number of nonzero parts among `xi_1, xi_2, ...`.
    pub fn s(&self) -> usize {
        let nonzero = self.parts.iter().filter(|&&p| p > 0).count();
        if self.offset == 0 && nonzero > 0 {
            nonzero - 1
        } else {
            nonzero
        }
    }

    /// `xi_1 + xi_2 + ...`.
    pub fn weight(&self) -> u64 {
        self.parts.iter().skip(1 - self.offset).map(|&p| p as u64).sum()
    }

    pub fn shape(&self) -> PartitionShape {
        let mut distinct: Vec<u32> = self.parts.clone();
        distinct.dedup();
        match distinct.len() {
            0 | 1 => PartitionShape::Rectangular,
            2 if self.parts.iter().filter(|&&p| p == distinct[1]).count() == 1 => {
                PartitionShape::SpecialFatHook
            }
            _ => PartitionShape::Other,
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `phi(xi; k)` from the parts `xi_0, xi_1, ...`:
/// `sum_{j > k} xi_j - xi_{k+1}/2` for `k <= s-2`, `(xi_s - xi_{s-1}/2)_+`
/// for `k = s-1`, and 0 beyond.
pub fn phi(parts: &[u32], k: usize) -> HalfInt {
    let part = |j: usize| parts.get(j).copied().unwrap_or(0) as i64;
    let s = parts.iter().skip(1).filter(|&&p| p > 0).count();
    if s >= 2 && k + 2 <= s {
        let tail: i64 = (k + 1..parts.len()).map(part).sum();
        HalfInt::from_int(tail) - HalfInt::from_halves(part(k + 1))
    } else if s >= 1 && k + 1 == s {
        (HalfInt::from_int(part(s)) - HalfInt::from_halves(part(s - 1))).max0()
    } else {
        HalfInt::ZERO
    }
}

/// `xi^alpha` with the derived `s_alpha`, `m_alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiEntry {
    pub root: Vec<i64>,
    pub partition: Partition,
    pub s: usize,
    pub m: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTuple {
    pub convention: Convention,
    pub level: u32,
    pub lambda: Weight,
    /// One entry per positive root, in the order of the root system.
    pub entries: Vec<XiEntry>,
}

impl PartitionTuple {
    pub fn entry(&self, root: &[i64]) -> Option<&XiEntry> {
        self.entries.iter().find(|e| e.root == root)
    }

    pub fn all_rectangular(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.partition.shape() == PartitionShape::Rectangular)
    }

    pub fn describe(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            s.push_str(&format!("{:?}: {} ", e.root, e.partition));
        }
        s
    }
}

/// `lambda(alpha^vee) = (s_alpha - 1) level + m_alpha` with
/// `0 < m_alpha <= level`, and `s_alpha = m_alpha = 0` when the pairing
/// vanishes.
pub fn s_and_m(pairing: i64, level: i64) -> (usize, u32) {
    if pairing == 0 {
        return (0, 0);
    }
    let s = (pairing + level - 1) / level;
    let m = pairing - (s - 1) * level;
    (s as usize, m as u32)
}

/// `xi(level, lambda)`: `(level^{s_alpha}, m_alpha)` from `xi_0` in the
/// hyperspecial case, `(level^{s_alpha - 1}, m_alpha)` from `xi_1` otherwise.
pub fn build_xi(rsd: &RootSystemData, level: i64, lambda: &Weight) -> Result<PartitionTuple> {
    if level <= 0 {
        return Err(Error::NonPositiveLevel(level));
    }
    if lambda.rank() != rsd.rank() {
        return Err(Error::RankMismatch { left: rsd.rank(), right: lambda.rank() });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let convention = if rsd.descriptor().is_hyperspecial() {
        Convention::Hyperspecial
    } else {
        Convention::Special
    };
    let fin = rsd.finite();
    let entries = fin
        .positive_roots()
        .iter()
        .map(|root: &Root| {
            let pairing = fin.pairing(lambda, root);
            let (s, m) = s_and_m(pairing, level);
            let mut parts = Vec::new();
            if s > 0 {
                let copies = match convention {
                    Convention::Hyperspecial => s,
                    Convention::Special => s - 1,
                };
                parts.extend(core::iter::repeat_n(level as u32, copies));
                parts.push(m);
            }
            let partition = Partition::new(parts, convention)?;
            debug_assert_eq!(partition.weight(), pairing as u64);
            debug_assert_eq!(partition.s(), s);
            Ok(XiEntry { root: root.coords.clone(), partition, s, m })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PartitionTuple { convention, level: level as u32, lambda: lambda.clone(), entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::TwistedFamily;
    use alloc::vec;

    #[test]
    fn phi_values() {
        assert_eq!(phi(&[4, 2, 1], 0), HalfInt::from_int(2));
        assert_eq!(phi(&[4, 2, 1], 1), HalfInt::ZERO);
        assert_eq!(phi(&[4, 2, 1], 2), HalfInt::ZERO);
        assert_eq!(phi(&[3, 3, 1], 1), HalfInt::ZERO);
        assert_eq!(phi(&[3, 3, 2], 1), HalfInt::HALF);
    }

    #[test]
    fn phi_on_rectangles() {
        let l = 3u32;
        for s in 1..5usize {
            let parts = vec![l; s + 1];
            for k in 0..s.saturating_sub(1) {
                let expect = HalfInt::from_int((s - k - 1) as i64 * l as i64) + HalfInt::from_halves(l as i64);
                assert_eq!(phi(&parts, k), expect, "s={s} k={k}");
            }
        }
    }

    #[test]
    fn s_and_m_split() {
        assert_eq!(s_and_m(0, 2), (0, 0));
        assert_eq!(s_and_m(1, 2), (1, 1));
        assert_eq!(s_and_m(2, 2), (1, 2));
        assert_eq!(s_and_m(5, 2), (3, 1));
    }

    #[test]
    fn shapes() {
        let p = |v: Vec<u32>| Partition::new(v, Convention::Hyperspecial).unwrap().shape();
        assert_eq!(p(vec![]), PartitionShape::Rectangular);
        assert_eq!(p(vec![2, 2, 2]), PartitionShape::Rectangular);
        assert_eq!(p(vec![2, 2, 1]), PartitionShape::SpecialFatHook);
        assert_eq!(p(vec![2, 1, 1]), PartitionShape::Other);
        assert_eq!(p(vec![4, 2, 1]), PartitionShape::Other);
    }

    #[test]
    fn xi_for_a4() {
        let rsd = RootSystemData::for_family(TwistedFamily::A2n, 2).unwrap();
        let xi = build_xi(&rsd, 2, &Weight::new(vec![3, 1])).unwrap();
        assert_eq!(xi.convention, Convention::Hyperspecial);
        for e in &xi.entries {
            let pairing = rsd.finite().pairing(&Weight::new(vec![3, 1]), rsd.finite().positive_roots().iter().find(|r| r.coords == e.root).unwrap());
            assert_eq!(e.partition.weight(), pairing as u64);
            if e.s > 0 {
                assert_eq!(e.partition.part(0), Some(2));
            }
        }
    }

    #[test]
    fn special_xi_skips_xi0() {
        let rsd = RootSystemData::for_family(TwistedFamily::D4, 2).unwrap();
        let xi = build_xi(&rsd, 2, &Weight::new(vec![3, 0])).unwrap();
        let e = xi.entry(&[1, 0]).unwrap();
        assert_eq!((e.s, e.m), (2, 1));
        assert_eq!(e.partition.parts(), &[2, 1]);
        assert_eq!(e.partition.part(0), None);
        assert_eq!(e.partition.part(1), Some(2));
    }
}
