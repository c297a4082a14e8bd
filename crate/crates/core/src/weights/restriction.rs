//! Restriction from the untwisted parent to the fixed-point subalgebra.

use alloc::vec::Vec;

use super::{GradedCharacter, Weight};
use crate::root_data::Folding;
use crate::{Error, Result};

/// `mu|_h`: coordinate `i` is the sum of the parent coordinates over the
/// `sigma`-orbit of node `i`.
pub fn restrict_parent_weight(folding: &Folding, mu: &Weight) -> Weight {
    Weight::new(
        folding
            .orbits()
            .iter()
            .map(|orbit| orbit.iter().map(|&j| mu[j - 1]).sum())
            .collect(),
    )
}

pub fn restrict_character(folding: &Folding, ch: &GradedCharacter) -> GradedCharacter {
    ch.map_weights(folding.rank(), |w| restrict_parent_weight(folding, w))
}

/// The lift putting `lambda_i` on the orbit representative of node `i`.
pub fn canonical_lift(folding: &Folding, lambda: &Weight) -> Weight {
    let mut lift = Weight::zero(folding.parent_rank());
    for (i, orbit) in folding.orbits().iter().enumerate() {
        lift.coords_mut()[orbit[0] - 1] = lambda[i];
    }
    lift
}

/// All dominant parent weights restricting to `lambda`, in lex order.
///
/// The fiber is finite since restriction only sums coordinates; `cap`
/// additionally bounds each parent coordinate.
pub fn sigma_fiber(folding: &Folding, lambda: &Weight, cap: Option<i64>) -> Result<Vec<Weight>> {
    if lambda.rank() != folding.rank() {
        return Err(Error::RankMismatch { left: folding.rank(), right: lambda.rank() });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let mut out = Vec::new();
    let mut current = Weight::zero(folding.parent_rank());
    fill_orbit(folding, lambda, cap, 0, &mut current, &mut out);
    out.sort();
    Ok(out)
}

fn fill_orbit(
    folding: &Folding,
    lambda: &Weight,
    cap: Option<i64>,
    i: usize,
    current: &mut Weight,
    out: &mut Vec<Weight>,
) {
    if i == folding.rank() {
        out.push(current.clone());
        return;
    }
    let orbit = &folding.orbits()[i];
    let mut parts = Vec::new();
    compositions(lambda[i], orbit.len(), cap, &mut Vec::new(), &mut parts);
    for comp in parts {
        for (&j, &c) in orbit.iter().zip(&comp) {
            current.coords_mut()[j - 1] = c;
        }
        fill_orbit(folding, lambda, cap, i + 1, current, out);
    }
    for &j in orbit {
        current.coords_mut()[j - 1] = 0;
    }
}

fn compositions(total: i64, parts: usize, cap: Option<i64>, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if parts == 1 {
        if cap.is_none_or(|c| total <= c) {
            acc.push(total);
            out.push(acc.clone());
            acc.pop();
        }
        return;
    }
    let hi = cap.map_or(total, |c| c.min(total));
    for first in 0..=hi {
        acc.push(first);
        compositions(total - first, parts - 1, cap, acc, out);
        acc.pop();
    }
}
