use core::fmt;
use core::ops::{Add, Index, Neg, Sub};

use alloc::vec::Vec;

use super::HalfInt;

/// A weight in fundamental-weight coordinates: `mu = sum_i mu[i] * omega_{i+1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(alloc::vec![0; rank])
    }

    /// The fundamental weight `omega_i`, 1-based.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.0[i - 1] = 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn coords_mut(&mut self) -> &mut [i64] {
        &mut self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, other: &Weight, k: i64) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl Index<usize> for Weight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.add_scaled(rhs, 1)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.add_scaled(rhs, -1)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl From<&[i64]> for Weight {
    fn from(v: &[i64]) -> Self {
        Weight(v.to_vec())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// `level * Lambda_0 + finite + grade * delta`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineWeight {
    pub level: i64,
    pub finite: Weight,
    pub grade: HalfInt,
}

impl AffineWeight {
    pub fn new(level: i64, finite: Weight, grade: HalfInt) -> Self {
        AffineWeight { level, finite, grade }
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}L0 + {} + ({})d", self.level, self.finite, self.grade)
    }
}
