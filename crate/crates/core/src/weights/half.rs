use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use alloc::format;

use crate::Error;

/// A number in `(1/2)Z`, stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    pub const fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub const fn from_halves(h: i64) -> Self {
        HalfInt(h)
    }

    pub const fn halves(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    /// Largest integer not exceeding `self`.
    pub fn floor(self) -> i64 {
        self.0.div_euclid(2)
    }

    pub fn max0(self) -> Self {
        HalfInt(self.0.max(0))
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("not a half-integer: {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<i64>().map(HalfInt::from_int).map_err(|_| bad()),
            Some((num, "2")) => num.trim().parse::<i64>().map(HalfInt).map_err(|_| bad()),
            Some((num, "1")) => num.trim().parse::<i64>().map(HalfInt::from_int).map_err(|_| bad()),
            Some(_) => Err(bad()),
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.0 += rhs.0;
    }
}

impl SubAssign for HalfInt {
    fn sub_assign(&mut self, rhs: HalfInt) {
        self.0 -= rhs.0;
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: i64) -> HalfInt {
        HalfInt(self.0 * rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn display_and_parse_round_trip() {
        for h in -7..=7 {
            let x = HalfInt::from_halves(h);
            assert_eq!(x.to_string().parse::<HalfInt>().unwrap(), x);
        }
        assert_eq!(HalfInt::from_halves(3).to_string(), "3/2");
        assert_eq!(HalfInt::from_int(-2).to_string(), "-2");
        assert!("1/3".parse::<HalfInt>().is_err());
    }

    #[test]
    fn floor_rounds_down() {
        assert_eq!(HalfInt::from_halves(-1).floor(), -1);
        assert_eq!(HalfInt::from_halves(3).floor(), 1);
    }
}
