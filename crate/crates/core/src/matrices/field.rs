use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// What Gaussian elimination needs from a field.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Sub<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl Field for BigRational {}

/// `a + b omega` with `omega^2 + omega + 1 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QOmega {
    pub a: BigRational,
    pub b: BigRational,
}

impl QOmega {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QOmega { a, b }
    }

    pub fn rational(a: BigRational) -> Self {
        QOmega { a, b: BigRational::zero() }
    }

    /// `omega^k`.
    pub fn omega_pow(k: i64) -> Self {
        let one = BigRational::one;
        let zero = BigRational::zero;
        match k.rem_euclid(3) {
            0 => QOmega::new(one(), zero()),
            1 => QOmega::new(zero(), one()),
            _ => QOmega::new(-one(), -one()),
        }
    }

    pub fn conj(&self) -> Self {
        QOmega::new(&self.a - &self.b, -self.b.clone())
    }

    /// `a^2 - ab + b^2`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        QOmega::new(&self.a * q, &self.b * q)
    }
}

impl fmt::Display for QOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}w", self.a, self.b)
    }
}

impl Add for QOmega {
    type Output = QOmega;
    fn add(self, o: QOmega) -> QOmega {
        QOmega::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for QOmega {
    type Output = QOmega;
    fn sub(self, o: QOmega) -> QOmega {
        QOmega::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for QOmega {
    type Output = QOmega;
    fn neg(self) -> QOmega {
        QOmega::new(-self.a, -self.b)
    }
}

impl Mul for QOmega {
    type Output = QOmega;
    fn mul(self, o: QOmega) -> QOmega {
        let bd = &self.b * &o.b;
        QOmega::new(&self.a * &o.a - &bd, &self.a * &o.b + &self.b * &o.a - bd)
    }
}

impl Div for QOmega {
    type Output = QOmega;
    fn div(self, o: QOmega) -> QOmega {
        let n = o.norm();
        (self * o.conj()).scale(&n.recip())
    }
}

impl Zero for QOmega {
    fn zero() -> Self {
        QOmega::rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QOmega {
    fn one() -> Self {
        QOmega::rational(BigRational::one())
    }
}

impl Field for QOmega {}

/// Eisenstein integers `a + b omega`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eisenstein {
    pub a: BigInt,
    pub b: BigInt,
}

impl Eisenstein {
    pub fn new(a: BigInt, b: BigInt) -> Self {
        Eisenstein { a, b }
    }

    pub fn to_qomega(&self) -> QOmega {
        QOmega::new(BigRational::from_integer(self.a.clone()), BigRational::from_integer(self.b.clone()))
    }
}

impl Add for Eisenstein {
    type Output = Eisenstein;
    fn add(self, o: Eisenstein) -> Eisenstein {
        Eisenstein::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Eisenstein {
    type Output = Eisenstein;
    fn sub(self, o: Eisenstein) -> Eisenstein {
        Eisenstein::new(self.a - o.a, self.b - o.b)
    }
}

impl Mul for Eisenstein {
    type Output = Eisenstein;
    fn mul(self, o: Eisenstein) -> Eisenstein {
        let bd = &self.b * &o.b;
        Eisenstein::new(&self.a * &o.a - &bd, &self.a * &o.b + &self.b * &o.a - bd)
    }
}

impl Zero for Eisenstein {
    fn zero() -> Self {
        Eisenstein::new(BigInt::zero(), BigInt::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Eisenstein {
    fn one() -> Self {
        Eisenstein::new(BigInt::one(), BigInt::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn omega_is_a_cube_root_of_unity() {
        let w = QOmega::omega_pow(1);
        let w3 = w.clone() * w.clone() * w.clone();
        assert_eq!(w3, QOmega::one());
        let sum = QOmega::one() + w.clone() + w.clone() * w;
        assert!(sum.is_zero());
    }

    #[test]
    fn division_inverts_multiplication() {
        let x = QOmega::new(q(3, 2), q(-5, 7));
        let y = QOmega::new(q(1, 3), q(2, 1));
        assert_eq!((x.clone() * y.clone()) / y, x);
    }

    #[test]
    fn norm_is_multiplicative() {
        let x = QOmega::new(q(2, 1), q(1, 1));
        let y = QOmega::new(q(-1, 1), q(3, 1));
        assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
    }
}
