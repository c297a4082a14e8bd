use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{HalfInt, Weight};
use crate::{Error, Result};

/// A finite Z-combination of `e(level*Lambda_0 + mu + g*delta)`.
///
/// Terms are keyed by `(grade, weight)`, so iteration is already in the
/// canonical output order. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCharacter {
    rank: usize,
    level: i64,
    terms: BTreeMap<(HalfInt, Weight), BigInt>,
}

impl GradedCharacter {
    pub fn zero(rank: usize, level: i64) -> Self {
        GradedCharacter { rank, level, terms: BTreeMap::new() }
    }

    /// `e(0)` at level 0.
    pub fn one(rank: usize) -> Self {
        Self::monomial(0, Weight::zero(rank), HalfInt::ZERO)
    }

    pub fn monomial(level: i64, weight: Weight, grade: HalfInt) -> Self {
        let mut c = GradedCharacter::zero(weight.rank(), level);
        c.terms.insert((grade, weight), BigInt::one());
        c
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn with_level(mut self, level: i64) -> Self {
        self.level = level;
        self
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in `(grade, weight)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, HalfInt, &BigInt)> {
        self.terms.iter().map(|((g, w), c)| (w, *g, c))
    }

    pub fn coefficient(&self, weight: &Weight, grade: HalfInt) -> BigInt {
        self.terms
            .get(&(grade, weight.clone()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, weight: Weight, grade: HalfInt, coeff: &BigInt) -> Result<()> {
        if weight.rank() != self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: weight.rank() });
        }
        self.add_term_unchecked(weight, grade, coeff);
        Ok(())
    }

    pub(crate) fn add_term_unchecked(&mut self, weight: Weight, grade: HalfInt, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((grade, weight)) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        if self.level != other.level {
            return Err(Error::LevelMismatch { left: self.level, right: other.level });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for ((g, w), c) in &other.terms {
            out.add_term_unchecked(w.clone(), *g, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for ((g, w), c) in &other.terms {
            out.add_term_unchecked(w.clone(), *g, &-c);
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = GradedCharacter::zero(self.rank, self.level);
        if k.is_zero() {
            return out;
        }
        for (key, c) in &self.terms {
            out.terms.insert(key.clone(), c * k);
        }
        out
    }

    /// Product in the group ring; weights, grades and levels add.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        let mut out = GradedCharacter::zero(self.rank, self.level + other.level);
        for ((g1, w1), c1) in &self.terms {
            for ((g2, w2), c2) in &other.terms {
                out.add_term_unchecked(w1 + w2, *g1 + *g2, &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut out = GradedCharacter::one(self.rank);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Image in `Z[P]`: all grades set to 0, level kept.
    pub fn forget_grade(&self) -> Self {
        let mut out = GradedCharacter::zero(self.rank, self.level);
        for ((_, w), c) in &self.terms {
            out.add_term_unchecked(w.clone(), HalfInt::ZERO, c);
        }
        out
    }

    /// Forgets grade and level; the classical character in `Z[P]`.
    pub fn classical(&self) -> Self {
        self.forget_grade().with_level(0)
    }

    /// Sum of all coefficients.
    pub fn dimension(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn grade_slice(&self, grade: HalfInt) -> Self {
        let mut out = GradedCharacter::zero(self.rank, self.level);
        for ((g, w), c) in &self.terms {
            if *g == grade {
                out.terms.insert((HalfInt::ZERO, w.clone()), c.clone());
            }
        }
        out
    }

    pub fn grades(&self) -> Vec<HalfInt> {
        let mut gs: Vec<HalfInt> = self.terms.keys().map(|(g, _)| *g).collect();
        gs.dedup();
        gs
    }

    pub fn min_grade(&self) -> Option<HalfInt> {
        self.terms.keys().next().map(|(g, _)| *g)
    }

    pub fn shift_grade(&self, by: HalfInt) -> Self {
        let mut out = GradedCharacter::zero(self.rank, self.level);
        for ((g, w), c) in &self.terms {
            out.terms.insert((*g + by, w.clone()), c.clone());
        }
        out
    }

    /// Applies `f` to every weight; the result may have a different rank.
    pub fn map_weights(&self, rank: usize, mut f: impl FnMut(&Weight) -> Weight) -> Self {
        let mut out = GradedCharacter::zero(rank, self.level);
        for ((g, w), c) in &self.terms {
            out.add_term_unchecked(f(w), *g, c);
        }
        out
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Weight multiplicities with grades summed out.
    pub fn weight_multiplicities(&self) -> BTreeMap<Weight, BigInt> {
        let mut out: BTreeMap<Weight, BigInt> = BTreeMap::new();
        for ((_, w), c) in &self.terms {
            *out.entry(w.clone()).or_insert_with(BigInt::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn from_multiplicities(rank: usize, level: i64, mults: &BTreeMap<Weight, BigInt>) -> Self {
        let mut out = GradedCharacter::zero(rank, level);
        for (w, c) in mults {
            out.add_term_unchecked(w.clone(), HalfInt::ZERO, c);
        }
        out
    }
}

/// First term in canonical order where `a` and `b` differ, ignoring levels.
pub fn first_difference(
    a: &GradedCharacter,
    b: &GradedCharacter,
) -> Option<(Weight, HalfInt, BigInt, BigInt)> {
    let mut ia = a.terms.iter().peekable();
    let mut ib = b.terms.iter().peekable();
    loop {
        match (ia.peek(), ib.peek()) {
            (None, None) => return None,
            (Some(((g, w), c)), None) => return Some((w.clone(), *g, (*c).clone(), BigInt::zero())),
            (None, Some(((g, w), c))) => return Some((w.clone(), *g, BigInt::zero(), (*c).clone())),
            (Some((ka, ca)), Some((kb, cb))) => match ka.cmp(kb) {
                Ordering::Less => {
                    return Some((ka.1.clone(), ka.0, (*ca).clone(), BigInt::zero()));
                }
                Ordering::Greater => {
                    return Some((kb.1.clone(), kb.0, BigInt::zero(), (*cb).clone()));
                }
                Ordering::Equal => {
                    if ca != cb {
                        return Some((ka.1.clone(), ka.0, (*ca).clone(), (*cb).clone()));
                    }
                    ia.next();
                    ib.next();
                }
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(v: &[i64]) -> Weight {
        Weight::from(v)
    }

    #[test]
    fn monomials_multiply_by_adding_exponents() {
        let a = GradedCharacter::monomial(1, w(&[1, 0]), HalfInt::HALF);
        let b = GradedCharacter::monomial(2, w(&[0, -1]), HalfInt::ONE);
        let p = a.mul(&b).unwrap();
        assert_eq!(p.level(), 3);
        assert_eq!(p.coefficient(&w(&[1, -1]), HalfInt::from_halves(3)), BigInt::one());
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn add_cancels_to_empty() {
        let a = GradedCharacter::monomial(0, w(&[2]), HalfInt::ZERO);
        assert!(a.sub(&a).unwrap().is_empty());
    }

    #[test]
    fn level_mismatch_is_an_error() {
        let a = GradedCharacter::monomial(0, w(&[2]), HalfInt::ZERO);
        let b = GradedCharacter::monomial(1, w(&[2]), HalfInt::ZERO);
        assert!(matches!(a.add(&b), Err(Error::LevelMismatch { .. })));
    }

    #[test]
    fn forget_grade_merges_terms() {
        let mut a = GradedCharacter::zero(1, 1);
        a.add_term(w(&[0]), HalfInt::ZERO, &BigInt::from(2)).unwrap();
        a.add_term(w(&[0]), HalfInt::ONE, &BigInt::from(3)).unwrap();
        let f = a.forget_grade();
        assert_eq!(f.coefficient(&w(&[0]), HalfInt::ZERO), BigInt::from(5));
        assert_eq!(f.dimension(), BigInt::from(5));
        assert_eq!(a.grades(), vec![HalfInt::ZERO, HalfInt::ONE]);
    }

    #[test]
    fn first_difference_reports_missing_term() {
        let a = GradedCharacter::monomial(0, w(&[1]), HalfInt::ZERO);
        let b = GradedCharacter::zero(1, 0);
        let (wt, g, ca, cb) = first_difference(&a, &b).unwrap();
        assert_eq!((wt, g, ca, cb), (w(&[1]), HalfInt::ZERO, BigInt::one(), BigInt::zero()));
        assert!(first_difference(&a, &a).is_none());
    }
}
