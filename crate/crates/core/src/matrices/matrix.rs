use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{Eisenstein, QOmega};
use crate::{Error, Result};

/// `binom(n, k) = n (n-1) ... (n-k+1) / k!` for any integer `n`, `k >= 0`.
pub fn generalized_binomial(n: i64, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..k as i64 {
        num *= n - t;
        den *= t + 1;
    }
    num / den
}

fn pow(z: &BigRational, e: i64) -> BigRational {
    let p = num_traits::pow(z.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

fn check_points(z: &[BigRational], m: u32) -> Result<()> {
    if z.iter().any(|x| x.is_zero()) {
        return Err(Error::Hypothesis("interpolation points must be nonzero".into()));
    }
    for a in 0..z.len() {
        for b in a + 1..z.len() {
            if pow(&z[a], m as i64) == pow(&z[b], m as i64) {
                return Err(Error::Hypothesis(format!(
                    "points {} and {} have equal {m}-th powers",
                    z[a], z[b]
                )));
            }
        }
    }
    Ok(())
}

/// The first matrix: rows `(q, y)` with `1 <= y <= r_{q+1}`, columns
/// `1 <= j <= r = sum r_q`, entries
/// `binom(2(d+j)-3, y-1) z_{q+1}^{2(d-1+j)-y}`.
///
/// The generalized binomial makes the `d = 0`, `j = 1` column equal to
/// `(-1)^{y-1} z^{-y}`.
pub fn m1(parts: &[u32], z: &[BigRational], d: u32) -> Result<Vec<Vec<BigRational>>> {
    if parts.len() != z.len() {
        return Err(Error::Hypothesis(format!("{} blocks but {} points", parts.len(), z.len())));
    }
    check_points(z, 2)?;
    let r: u32 = parts.iter().sum();
    let d = d as i64;
    let mut rows = Vec::with_capacity(r as usize);
    for (q, &rq) in parts.iter().enumerate() {
        for y in 1..=rq as i64 {
            rows.push(
                (1..=r as i64)
                    .map(|j| {
                        let b = generalized_binomial(2 * (d + j) - 3, (y - 1) as u32);
                        BigRational::from_integer(b) * pow(&z[q], 2 * (d - 1 + j) - y)
                    })
                    .collect(),
            );
        }
    }
    Ok(rows)
}

/// The second matrix for a primitive `m`-th root of unity `xi`
/// (`m` is 2 or 3): rows `(k, q, y)` with `1 <= y <= r_{kp+q+1}`, entries
/// `xi^{k(d+j-1+c)} binom(d+j-1, y-1) z_{q+1}^{d+j-y}`.
///
/// `parts` has length `m * p`, indexed `k p + q`.
pub fn m2(parts: &[u32], z: &[BigRational], d: u32, c: u32, m: u32) -> Result<Vec<Vec<QOmega>>> {
    if m != 2 && m != 3 {
        return Err(Error::Hypothesis(format!("m = {m} is not 2 or 3")));
    }
    let p = z.len();
    if parts.len() != m as usize * p {
        return Err(Error::Hypothesis(format!("{} blocks for m = {m}, p = {p}", parts.len())));
    }
    check_points(z, m)?;
    let r: u32 = parts.iter().sum();
    let (d, c) = (d as i64, c as i64);
    let root = |e: i64| -> QOmega {
        if m == 3 {
            QOmega::omega_pow(e)
        } else if e.is_even() {
            QOmega::one()
        } else {
            -QOmega::one()
        }
    };
    let mut rows = Vec::with_capacity(r as usize);
    for k in 0..m as i64 {
        for q in 0..p {
            let rq = parts[k as usize * p + q];
            for y in 1..=rq as i64 {
                rows.push(
                    (1..=r as i64)
                        .map(|j| {
                            let b = generalized_binomial(d + j - 1, (y - 1) as u32);
                            let val = BigRational::from_integer(b) * pow(&z[q], d + j - y);
                            root(k * (d + j - 1 + c)).scale(&val)
                        })
                        .collect(),
                );
            }
        }
    }
    Ok(rows)
}

fn lcm_of_denominators<'a>(xs: impl Iterator<Item = &'a BigRational>) -> BigInt {
    xs.fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Scales each row to integers; returns the matrix and the row factors.
pub fn scale_to_integers(m: &[Vec<BigRational>]) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    let mut out = Vec::with_capacity(m.len());
    let mut factors = Vec::with_capacity(m.len());
    for row in m {
        let f = lcm_of_denominators(row.iter());
        out.push(row.iter().map(|x| (x * &f).to_integer()).collect());
        factors.push(f);
    }
    (out, factors)
}

/// Scales each row into the Eisenstein integers.
pub fn scale_to_eisenstein(m: &[Vec<QOmega>]) -> (Vec<Vec<Eisenstein>>, Vec<BigInt>) {
    let mut out = Vec::with_capacity(m.len());
    let mut factors = Vec::with_capacity(m.len());
    for row in m {
        let f = lcm_of_denominators(row.iter().flat_map(|x| [&x.a, &x.b]));
        let fq = BigRational::from_integer(f.clone());
        out.push(
            row.iter()
                .map(|x| Eisenstein::new((&x.a * &fq).to_integer(), (&x.b * &fq).to_integer()))
                .collect(),
        );
        factors.push(f);
    }
    (out, factors)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::gauss_determinant;
    use alloc::vec;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn binomials() {
        assert_eq!(generalized_binomial(5, 2), BigInt::from(10));
        assert_eq!(generalized_binomial(-1, 3), BigInt::from(-1));
        assert_eq!(generalized_binomial(-1, 4), BigInt::from(1));
        assert_eq!(generalized_binomial(2, 5), BigInt::zero());
        assert_eq!(generalized_binomial(-3, 2), BigInt::from(6));
    }

    #[test]
    fn one_by_one_first_matrix() {
        let m = m1(&[1], &[q(2)], 1).unwrap();
        assert_eq!(m, vec![vec![q(2)]]);
    }

    #[test]
    fn d_zero_first_column() {
        let z = BigRational::new(3.into(), 2.into());
        let m = m1(&[3], &[z.clone()], 0).unwrap();
        for (y, row) in m.iter().enumerate() {
            let y = y as i64 + 1;
            let sign = if (y - 1) % 2 == 0 { q(1) } else { q(-1) };
            assert_eq!(row[0], sign * pow(&z, -y));
        }
    }

    #[test]
    fn rejects_colliding_points() {
        assert!(m1(&[1, 1], &[q(2), q(-2)], 1).is_err());
        assert!(m2(&[1, 1, 1], &[q(0)], 1, 0, 3).is_err());
        assert!(m2(&[1, 1], &[q(2)], 1, 0, 4).is_err());
    }

    #[test]
    fn second_matrix_is_invertible_on_small_case() {
        let m = m2(&[1, 1, 1], &[q(2)], 1, 1, 3).unwrap();
        assert_eq!(m.len(), 3);
        assert!(!gauss_determinant(&m).is_zero());
    }
}
