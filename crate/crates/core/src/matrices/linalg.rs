use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::{Eisenstein, Field};

/// Determinant by Gaussian elimination over a field.
pub fn gauss_determinant<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    let mut a: Vec<Vec<F>> = m.to_vec();
    let mut det = F::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return F::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det = det * p.clone();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() / p.clone();
            for c in col..n {
                let sub = f.clone() * a[col][c].clone();
                a[r][c] = a[r][c].clone() - sub;
            }
        }
    }
    det
}

/// Rank by Gaussian elimination over a field.
pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut a: Vec<Vec<F>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(piv, rank);
        let p = a[rank][col].clone();
        for r in rank + 1..rows {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() / p.clone();
            for c in col..cols {
                let sub = f.clone() * a[rank][c].clone();
                a[r][c] = a[r][c].clone() - sub;
            }
        }
        rank += 1;
    }
    rank
}

/// An integral domain with exact division, as Bareiss needs.
pub trait ExactDomain:
    Clone + PartialEq + Zero + One + core::ops::Sub<Output = Self> + core::ops::Mul<Output = Self>
{
    /// `self / d` when `d` divides `self`.
    fn exact_div(&self, d: &Self) -> Option<Self>;
    fn negate(&self) -> Self {
        Self::zero() - self.clone()
    }
}

impl ExactDomain for BigInt {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
}

impl ExactDomain for Eisenstein {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        // x / d = x * conj(d) / N(d), conj(a + b w) = (a - b) - b w.
        let conj = Eisenstein::new(&d.a - &d.b, -d.b.clone());
        let n = &d.a * &d.a - &d.a * &d.b + &d.b * &d.b;
        let t = self.clone() * conj;
        let (qa, ra) = t.a.div_rem(&n);
        let (qb, rb) = t.b.div_rem(&n);
        (ra.is_zero() && rb.is_zero()).then(|| Eisenstein::new(qa, qb))
    }
}

/// Fraction-free (Bareiss) determinant; every division is exact.
///
/// Returns `None` only if a division fails, which would mean the input was
/// not over an integral domain.
pub fn bareiss_determinant<R: ExactDomain>(m: &[Vec<R>]) -> Option<R> {
    let n = m.len();
    if n == 0 {
        return Some(R::one());
    }
    let mut a: Vec<Vec<R>> = m.to_vec();
    let mut sign_flip = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(piv) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Some(R::zero());
            };
            a.swap(k, piv);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = t.exact_div(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Some(if sign_flip { det.negate() } else { det })
}
