use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::partition::{phi, Convention, PartitionShape, PartitionTuple};
use crate::root_data::{Root, RootSystemData};
use crate::weights::{HalfInt, Weight};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RootForm {
    /// `x_{-alpha + c delta}`.
    Full,
    /// `x_{-alpha/2 + c delta}`, long `alpha`, hyperspecial only.
    Half,
}

/// `(x_{-alpha + delta*d})^{exponent}` or its half-root analogue acting on
/// the generator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RelationDescriptor {
    pub root: Vec<i64>,
    pub form: RootForm,
    pub delta: HalfInt,
    pub exponent: u32,
}

impl fmt::Display for RelationDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = format!("{:?}", self.root);
        match self.form {
            RootForm::Full => write!(f, "x(-{r} + {}d)^{}", self.delta, self.exponent),
            RootForm::Half => write!(f, "x(-{r}/2 + {}d)^{}", self.delta, self.exponent),
        }
    }
}

fn root_of<'a>(rsd: &'a RootSystemData, coords: &[i64]) -> &'a Root {
    rsd.finite()
        .positive_roots()
        .iter()
        .find(|r| r.coords == coords)
        .expect("partition tuple built over this root system")
}

/// One relation list per positive root: degree one at `s_alpha` (and at
/// `s_alpha + 1/2` for half roots), plus for a special fat hook the relation
/// at `s_alpha - 1` with exponent `xi_{s_alpha} + 1`, and at `s_alpha - 1/2`
/// with exponent `2 phi(xi; s_alpha - 1) + 1`.
pub fn theorem_relations(rsd: &RootSystemData, xi: &PartitionTuple) -> Result<Vec<RelationDescriptor>> {
    let hyper = xi.convention == Convention::Hyperspecial;
    let mut out = Vec::new();
    for e in &xi.entries {
        let root = root_of(rsd, &e.root);
        let shape = e.partition.shape();
        if shape == PartitionShape::Other {
            return Err(Error::UnsupportedPartition(format!("{}", e.partition)));
        }
        let d = root.d;
        let s = e.s as i64;
        out.push(RelationDescriptor {
            root: e.root.clone(),
            form: RootForm::Full,
            delta: HalfInt::from_int(d * s),
            exponent: 1,
        });
        let special = shape == PartitionShape::SpecialFatHook;
        if special {
            let top = e.partition.part(e.s).unwrap_or(0);
            out.push(RelationDescriptor {
                root: e.root.clone(),
                form: RootForm::Full,
                delta: HalfInt::from_int(d * (s - 1)),
                exponent: top + 1,
            });
        }
        if hyper && rsd.is_long(root) {
            out.push(RelationDescriptor {
                root: e.root.clone(),
                form: RootForm::Half,
                delta: HalfInt::from_int(s) + HalfInt::HALF,
                exponent: 1,
            });
            if special {
                let full: Vec<u32> = (0..=e.s).map(|j| e.partition.part(j).unwrap_or(0)).collect();
                let ph = phi(&full, e.s - 1);
                out.push(RelationDescriptor {
                    root: e.root.clone(),
                    form: RootForm::Half,
                    delta: HalfInt::from_int(s) - HalfInt::HALF,
                    exponent: (ph.halves() + 1) as u32,
                });
            }
        }
    }
    Ok(out)
}

/// When every `xi^alpha` is rectangular, the degree-one relations over the
/// simple roots (plus the half-root relation on `alpha_n` for the
/// hyperspecial family) suffice.
pub fn rectangular_reduction(rsd: &RootSystemData, xi: &PartitionTuple) -> Option<Vec<RelationDescriptor>> {
    if !xi.all_rectangular() {
        return None;
    }
    let n = rsd.rank();
    let mut out = Vec::new();
    for i in 0..n {
        let mut coords = alloc::vec![0; n];
        coords[i] = 1;
        let e = xi.entry(&coords)?;
        let root = root_of(rsd, &coords);
        out.push(RelationDescriptor {
            root: coords.clone(),
            form: RootForm::Full,
            delta: HalfInt::from_int(root.d * e.s as i64),
            exponent: 1,
        });
        if xi.convention == Convention::Hyperspecial && i + 1 == n {
            out.push(RelationDescriptor {
                root: coords,
                form: RootForm::Half,
                delta: HalfInt::from_int(e.s as i64) + HalfInt::HALF,
                exponent: 1,
            });
        }
    }
    Some(out)
}

/// The reduced list when it applies, the per-root list otherwise.
pub fn simplified_relations(rsd: &RootSystemData, xi: &PartitionTuple) -> Result<Vec<RelationDescriptor>> {
    match rectangular_reduction(rsd, xi) {
        Some(r) => Ok(r),
        None => theorem_relations(rsd, xi),
    }
}

/// The local Weyl module relations `x_{-alpha}^{lambda(alpha^vee) + 1}`.
pub fn weyl_relations(rsd: &RootSystemData, lambda: &Weight) -> Vec<RelationDescriptor> {
    rsd.finite()
        .positive_roots()
        .iter()
        .map(|root| RelationDescriptor {
            root: root.coords.clone(),
            form: RootForm::Full,
            delta: HalfInt::ZERO,
            exponent: rsd.finite().pairing(lambda, root) as u32 + 1,
        })
        .collect()
}

/// `k + 1` where `k` is the Demazure exponent: `(lambda(alpha^vee) - level r)_+`
/// for `x_{-alpha + d_alpha r delta}` and `(2 lambda(alpha^vee) - level (2r+1))_+`
/// for `x_{-alpha/2 + (r + 1/2) delta}`.
pub fn demazure_exponent(pairing: i64, level: i64, form: RootForm, r: i64) -> u32 {
    let k = match form {
        RootForm::Full => pairing - level * r,
        RootForm::Half => 2 * pairing - level * (2 * r + 1),
    };
    (k.max(0) + 1) as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{build_xi, Partition};
    use crate::root_data::TwistedFamily;
    use alloc::vec;

    #[test]
    fn rectangular_gives_simple_roots_only() {
        let rsd = RootSystemData::for_family(TwistedFamily::A2n, 2).unwrap();
        // lambda = 2 omega_1 at level 2: pairings are multiples of 2.
        let xi = build_xi(&rsd, 2, &Weight::new(vec![2, 0])).unwrap();
        assert!(xi.all_rectangular());
        let rel = simplified_relations(&rsd, &xi).unwrap();
        assert_eq!(rel.len(), 3);
        assert!(rel.iter().all(|r| r.exponent == 1));
        assert_eq!(rel[2].form, RootForm::Half);
    }

    #[test]
    fn unsupported_shape_is_rejected() {
        let rsd = RootSystemData::for_family(TwistedFamily::A2n, 1).unwrap();
        let mut xi = build_xi(&rsd, 4, &Weight::new(vec![3])).unwrap();
        xi.entries[0].partition = Partition::new(vec![4, 2, 1], Convention::Hyperspecial).unwrap();
        xi.entries[0].s = 2;
        assert!(matches!(theorem_relations(&rsd, &xi), Err(Error::UnsupportedPartition(_))));
    }

    #[test]
    fn a2_special_exponents() {
        // level 3, lambda = 4 omega: pairing 4 on the long root, s = 2, m = 1.
        let rsd = RootSystemData::for_family(TwistedFamily::A2n, 1).unwrap();
        let xi = build_xi(&rsd, 3, &Weight::new(vec![4])).unwrap();
        let rel = theorem_relations(&rsd, &xi).unwrap();
        let find = |form, delta: HalfInt| rel.iter().find(|r| r.form == form && r.delta == delta).unwrap().exponent;
        assert_eq!(find(RootForm::Full, HalfInt::from_int(4)), 1);
        assert_eq!(find(RootForm::Full, HalfInt::from_int(2)), 2);
        assert_eq!(find(RootForm::Half, HalfInt::from_halves(5)), 1);
        // (2m - l)_+ + 1 = 1
        assert_eq!(find(RootForm::Half, HalfInt::from_halves(3)), 1);
    }
}
