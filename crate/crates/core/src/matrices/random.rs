use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use super::field::Eisenstein;
use super::linalg::{bareiss_determinant, gauss_determinant, rank};
use super::matrix::{m1, m2, scale_to_eisenstein, scale_to_integers};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixCase {
    First,
    Second { m: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixInstance {
    pub case: MatrixCase,
    pub parts: Vec<u32>,
    pub z: Vec<BigRational>,
    pub d: u32,
    pub c: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixOutcome {
    pub size: usize,
    pub rank: usize,
    pub determinant: String,
    /// The elimination determinant times the row scalings equals the
    /// fraction-free determinant of the scaled matrix.
    pub routes_agree: bool,
}

impl MatrixOutcome {
    pub fn invertible(&self) -> bool {
        self.rank == self.size && self.routes_agree && self.determinant != "0"
    }
}

/// Splits `total` into `k` parts, each at least `min`.
fn split<R: Rng>(rng: &mut R, total: u32, k: usize, min: u32) -> Vec<u32> {
    let mut parts = alloc::vec![min; k];
    for _ in 0..total - min * k as u32 {
        parts[rng.gen_range(0..k)] += 1;
    }
    parts
}

fn points<R: Rng>(rng: &mut R, p: usize, m: i32) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = Vec::with_capacity(p);
    while out.len() < p {
        let mut num: i64 = rng.gen_range(1..=7);
        if rng.gen_bool(0.5) {
            num = -num;
        }
        let den: i64 = rng.gen_range(1..=7);
        let z = BigRational::new(num.into(), den.into());
        let zm = num_traits::pow(z.clone(), m as usize);
        if out.iter().all(|w| num_traits::pow(w.clone(), m as usize) != zm) {
            out.push(z);
        }
    }
    out
}

/// Random sizes `r <= max_size`, points with numerator and denominator
/// at most 7 in absolute value, `d <= 3`, `c <= 2`.
pub fn random_instance<R: Rng>(rng: &mut R, case: MatrixCase, max_size: u32) -> MatrixInstance {
    let r = rng.gen_range(1..=max_size.max(1));
    let p = rng.gen_range(1..=r.min(3) as usize);
    let d = rng.gen_range(0..=3);
    let c = rng.gen_range(0..=2);
    match case {
        MatrixCase::First => {
            MatrixInstance { case, parts: split(rng, r, p, 1), z: points(rng, p, 2), d, c: 0 }
        }
        MatrixCase::Second { m } => MatrixInstance {
            case,
            parts: split(rng, r, m as usize * p, 0),
            z: points(rng, p, m as i32),
            d,
            c,
        },
    }
}

/// Determinant by elimination over the field, rank, and the fraction-free
/// cross-check.
pub fn check_instance(inst: &MatrixInstance) -> Result<MatrixOutcome> {
    match inst.case {
        MatrixCase::First => {
            let m = m1(&inst.parts, &inst.z, inst.d)?;
            let det = gauss_determinant(&m);
            let (ints, factors) = scale_to_integers(&m);
            let bareiss = bareiss_determinant(&ints);
            let scale: BigInt = factors.iter().product();
            let routes_agree = bareiss.is_some_and(|b| BigRational::from_integer(b) == &det * BigRational::from_integer(scale));
            Ok(MatrixOutcome { size: m.len(), rank: rank(&m), determinant: det.to_string(), routes_agree })
        }
        MatrixCase::Second { m: order } => {
            let m = m2(&inst.parts, &inst.z, inst.d, inst.c, order)?;
            let det = gauss_determinant(&m);
            let (ints, factors) = scale_to_eisenstein(&m);
            let bareiss: Option<Eisenstein> = bareiss_determinant(&ints);
            let scale: BigInt = factors.iter().product();
            let scaled = det.scale(&BigRational::from_integer(scale));
            let routes_agree = bareiss.is_some_and(|b| b.to_qomega() == scaled);
            let determinant = if det.is_zero() {
                "0".to_string()
            } else if det.b.is_zero() {
                det.a.to_string()
            } else {
                det.to_string()
            };
            Ok(MatrixOutcome { size: m.len(), rank: rank(&m), determinant, routes_agree })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_instances_are_invertible() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for case in [MatrixCase::First, MatrixCase::Second { m: 2 }, MatrixCase::Second { m: 3 }] {
            for _ in 0..40 {
                let inst = random_instance(&mut rng, case, 5);
                let out = check_instance(&inst).unwrap();
                assert!(out.invertible(), "{inst:?} -> {out:?}");
            }
        }
    }
}
