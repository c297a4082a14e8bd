use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::{decompose, irreducible_character, Decomposition};
use crate::root_data::{AffineTypeDescriptor, Folding, RootSystem, TwistedFamily};
use crate::weights::{restrict_character, Weight};
use crate::{Error, Result};

/// Decomposition of `V_{g-bar}(lambda-bar)` restricted to `g`.
pub fn branch_parent_to_g(
    g: &RootSystem,
    parent: &RootSystem,
    folding: &Folding,
    lambda_bar: &Weight,
) -> Result<Decomposition> {
    let ch = irreducible_character(parent, lambda_bar)?;
    decompose(g, &restrict_character(folding, &ch))
}

/// The five restriction patterns of `V(l omega_i)` from the parent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchingCase {
    /// `sl_{2n+1} -> sp_{2n}`, `1 <= i <= n`.
    SlOddToSp { n: usize, i: usize },
    /// `sl_{2n} -> sp_{2n}`, `1 <= i <= n`.
    SlEvenToSp { n: usize, i: usize },
    /// `so_{2n+2} -> so_{2n+1}` on the vector node.
    SoVector { n: usize },
    /// `so_{2n+2} -> so_{2n+1}` on a spin node.
    SoSpin { n: usize },
    /// `E_6 -> F_4` on the 27-dimensional node.
    E6ToF4,
}

impl BranchingCase {
    pub fn parse(id: &str, n: usize, i: usize) -> Result<Self> {
        Ok(match id {
            "sl_odd_to_sp" => BranchingCase::SlOddToSp { n, i },
            "sl_even_to_sp" => BranchingCase::SlEvenToSp { n, i },
            "so_vector" => BranchingCase::SoVector { n },
            "so_spin" => BranchingCase::SoSpin { n },
            "e6_to_f4" => BranchingCase::E6ToF4,
            _ => return Err(Error::Parse(format!("unknown branching case {id:?}"))),
        })
    }

    pub fn id(&self) -> &'static str {
        match self {
            BranchingCase::SlOddToSp { .. } => "sl_odd_to_sp",
            BranchingCase::SlEvenToSp { .. } => "sl_even_to_sp",
            BranchingCase::SoVector { .. } => "so_vector",
            BranchingCase::SoSpin { .. } => "so_spin",
            BranchingCase::E6ToF4 => "e6_to_f4",
        }
    }

    /// The twisted type whose folding realises the restriction.
    pub fn descriptor(&self) -> Result<AffineTypeDescriptor> {
        match *self {
            BranchingCase::SlOddToSp { n, .. } => AffineTypeDescriptor::new(TwistedFamily::A2n, n),
            BranchingCase::SlEvenToSp { n, .. } => {
                AffineTypeDescriptor::new_nonstandard(TwistedFamily::A2nMinus1, n)
            }
            BranchingCase::SoVector { n } | BranchingCase::SoSpin { n } => {
                AffineTypeDescriptor::new_nonstandard(TwistedFamily::DnPlus1, n)
            }
            BranchingCase::E6ToF4 => AffineTypeDescriptor::new(TwistedFamily::E6, 4),
        }
    }

    /// Parent nodes `j` for which `V(l omega_j)` follows this pattern.
    pub fn parent_nodes(&self) -> Vec<usize> {
        match *self {
            BranchingCase::SlOddToSp { n, i } => alloc::vec![i, 2 * n + 1 - i],
            BranchingCase::SlEvenToSp { n, i } => {
                if i == n {
                    alloc::vec![n]
                } else {
                    alloc::vec![i, 2 * n - i]
                }
            }
            BranchingCase::SoVector { .. } => alloc::vec![1],
            BranchingCase::SoSpin { n } => alloc::vec![n, n + 1],
            BranchingCase::E6ToF4 => alloc::vec![1, 6],
        }
    }

    fn node_in_range(&self) -> Result<()> {
        match *self {
            BranchingCase::SlOddToSp { n, i } | BranchingCase::SlEvenToSp { n, i } if i == 0 || i > n => {
                Err(Error::NodeOutOfRange { node: i, rank: n })
            }
            _ => Ok(()),
        }
    }
}

/// The predicted decomposition of `V(level * omega_j)` restricted to `g`.
pub fn expected_branching(case: BranchingCase, level: i64) -> Result<Decomposition> {
    case.node_in_range()?;
    let n = case.descriptor()?.n;
    let mut out = Decomposition::new();
    let mut put = |w: Weight| {
        out.insert(w, BigInt::one());
    };
    match case {
        BranchingCase::SlOddToSp { i, .. } => {
            for s in compositions_at_most(level, i) {
                let mut w = Weight::zero(n);
                w.coords_mut()[..i].copy_from_slice(&s);
                put(w);
            }
        }
        BranchingCase::SlEvenToSp { i, .. } => {
            // Nodes i, i-2, ..., down to 1 or 0 (omega_0 = 0), summing to level.
            let nodes: Vec<usize> = (0..=i).rev().step_by(2).collect();
            for s in compositions_at_most(level, nodes.len()) {
                if s.iter().sum::<i64>() != level {
                    continue;
                }
                let mut w = Weight::zero(n);
                for (&node, &c) in nodes.iter().zip(&s) {
                    if node > 0 {
                        w.coords_mut()[node - 1] += c;
                    }
                }
                put(w);
            }
        }
        BranchingCase::SoVector { .. } | BranchingCase::E6ToF4 => {
            for s in 0..=level {
                put(Weight::fundamental(n, 1).scale(s));
            }
        }
        BranchingCase::SoSpin { .. } => put(Weight::fundamental(n, n).scale(level)),
    }
    Ok(out)
}

/// All `k`-tuples of nonnegative integers with sum at most `total`.
fn compositions_at_most(total: i64, k: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(k);
    fn go(rest: i64, k: usize, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for c in 0..=rest {
            acc.push(c);
            go(rest - c, k, acc, out);
            acc.pop();
        }
    }
    go(total, k, &mut acc, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::RootSystemData;

    fn check(case: BranchingCase, level: i64) {
        let ty = case.descriptor().unwrap();
        let rsd = RootSystemData::new(ty).unwrap();
        let parent = RootSystem::new(ty.parent_type()).unwrap();
        let expected = expected_branching(case, level).unwrap();
        for j in case.parent_nodes() {
            let lam = Weight::fundamental(parent.rank(), j).scale(level);
            let got = branch_parent_to_g(rsd.finite(), &parent, rsd.folding(), &lam).unwrap();
            assert_eq!(got, expected, "{case:?} level {level} node {j}");
        }
    }

    #[test]
    fn e6_to_f4_level_one() {
        check(BranchingCase::E6ToF4, 1);
    }

    #[test]
    fn sl5_to_sp4() {
        for i in 1..=2 {
            for l in 1..=2 {
                check(BranchingCase::SlOddToSp { n: 2, i }, l);
            }
        }
    }

    #[test]
    fn sl4_to_sp4() {
        for i in 1..=2 {
            check(BranchingCase::SlEvenToSp { n: 2, i }, 2);
        }
    }

    #[test]
    fn so8_to_so7() {
        for l in 1..=2 {
            check(BranchingCase::SoVector { n: 3 }, l);
            check(BranchingCase::SoSpin { n: 3 }, l);
        }
    }
}
