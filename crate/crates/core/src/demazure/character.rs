use num_bigint::BigInt;
use num_traits::One;

use super::{AffineAction, TieBreak};
use crate::root_data::{RootSystem, RootSystemData, UntwistedData};
use crate::weights::{AffineWeight, GradedCharacter, HalfInt, Weight};
use crate::{Error, Result};

/// `10 (level + 1) (1 + size) |R^+|` steps.
pub fn default_ascent_cap(finite: &RootSystem, level: i64, size: i64) -> usize {
    let r = finite.positive_roots().len().max(1);
    10 * (level.max(0) as usize + 1) * (1 + size.max(0) as usize) * r
}

/// Graded character of `D(level, lambda)`.
pub fn demazure_character(rsd: &RootSystemData, level: i64, lambda: &Weight) -> Result<GradedCharacter> {
    demazure_character_with(&rsd.action(), level, lambda, &TieBreak::Lowest)
}

/// Graded character of the untwisted `D(level, lambda-bar)` of the parent.
pub fn demazure_character_untwisted(
    parent: &UntwistedData,
    level: i64,
    lambda: &Weight,
) -> Result<GradedCharacter> {
    demazure_character_with(&parent.action(), level, lambda, &TieBreak::Lowest)
}

/// Ascends from `level*Lambda_0 - lambda` to the dominant `Lambda`, then
/// applies the Demazure operators of the word, innermost first, to
/// `e(Lambda)`. Grades are shifted so `-lambda` sits at grade 0; all grades
/// are then nonnegative.
pub fn demazure_character_with(
    action: &AffineAction<'_>,
    level: i64,
    lambda: &Weight,
    tie: &TieBreak,
) -> Result<GradedCharacter> {
    if level <= 0 {
        return Err(Error::NonPositiveLevel(level));
    }
    if lambda.rank() != action.rank() {
        return Err(Error::RankMismatch { left: action.rank(), right: lambda.rank() });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let start = AffineWeight::new(level, -lambda, HalfInt::ZERO);
    let cap = default_ascent_cap(action.finite(), level, lambda.sum());
    let (word, top) = action.ascend(&start, tie, cap)?;
    let seed = GradedCharacter::monomial(level, top.finite, top.grade);
    let ch = action.apply_demazure_word(&word, &seed)?;
    let min = ch.min_grade().unwrap_or(HalfInt::ZERO);
    let ch = ch.shift_grade(-min);
    debug_assert_eq!(ch.coefficient(&-lambda, HalfInt::ZERO), BigInt::one());
    Ok(ch)
}

/// `D(level, level * omega_i)`; the unit for `level = 0`.
pub fn kr_character(rsd: &RootSystemData, level: i64, i: usize) -> Result<GradedCharacter> {
    let n = rsd.rank();
    if level == 0 {
        return Ok(GradedCharacter::one(n));
    }
    if i == 0 || i > n {
        return Err(Error::NodeOutOfRange { node: i, rank: n });
    }
    demazure_character(rsd, level, &Weight::fundamental(n, i).scale(level))
}

/// `D(level, level * lambda-bar)` for the parent; the unit for `level = 0`.
pub fn kr_character_untwisted(
    parent: &UntwistedData,
    level: i64,
    lambda: &Weight,
) -> Result<GradedCharacter> {
    if level == 0 {
        return Ok(GradedCharacter::one(parent.finite().rank()));
    }
    demazure_character_untwisted(parent, level, &lambda.scale(level))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{FiniteType, TwistedFamily};
    use alloc::vec;

    fn rsd(f: TwistedFamily, n: usize) -> RootSystemData {
        RootSystemData::for_family(f, n).unwrap()
    }

    #[test]
    fn level_one_zero_weight_is_trivial() {
        let r = rsd(TwistedFamily::A2n, 1);
        let ch = demazure_character(&r, 1, &Weight::zero(1)).unwrap();
        assert_eq!(ch, GradedCharacter::monomial(1, Weight::zero(1), HalfInt::ZERO));
    }

    #[test]
    fn a2_omega1_level_one_is_three_dimensional() {
        let r = rsd(TwistedFamily::A2n, 1);
        let ch = demazure_character(&r, 1, &Weight::new(vec![1])).unwrap();
        assert_eq!(ch.dimension(), BigInt::from(3));
        // e(omega) + e(-omega) at grade 0, e(0) at grade 1/2.
        assert_eq!(ch.coefficient(&Weight::new(vec![0]), HalfInt::HALF), BigInt::one());
        assert_eq!(ch.coefficient(&Weight::new(vec![1]), HalfInt::ZERO), BigInt::one());
    }

    #[test]
    fn untwisted_a2_fundamental_is_irreducible() {
        let p = UntwistedData::new(FiniteType::A(2)).unwrap();
        let ch = demazure_character_untwisted(&p, 1, &Weight::new(vec![1, 0])).unwrap();
        assert_eq!(ch.dimension(), BigInt::from(3));
        assert_eq!(ch.grades(), vec![HalfInt::ZERO]);
    }

    #[test]
    fn rejects_bad_input() {
        let r = rsd(TwistedFamily::D4, 2);
        assert!(matches!(
            demazure_character(&r, 1, &Weight::new(vec![-1, 0])),
            Err(Error::NotDominant(_))
        ));
        assert!(matches!(
            demazure_character(&r, 0, &Weight::new(vec![1, 0])),
            Err(Error::NonPositiveLevel(0))
        ));
    }
}
