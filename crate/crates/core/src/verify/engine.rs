//! Self-consistency of the Demazure engine: idempotent operators,
//! independence of the reduced word, the grade-zero slice, and length
//! additivity of translations.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::{VerificationReport, Witness};
use crate::demazure::{demazure_character_with, AffineAction, TieBreak, WeylWord};
use crate::finite::irreducible_character;
use crate::root_data::{RootSystem, RootSystemData};
use crate::weights::{AffineWeight, GradedCharacter, HalfInt, Weight};
use crate::{Error, Result};

fn base(check: &str, rsd: &RootSystemData) -> VerificationReport {
    VerificationReport::new(check).param("type", rsd.descriptor().label())
}

/// A character of the given level with up to `terms` terms, weight
/// coordinates in `-3..=3`, grades in `0..=2` and coefficients in `-2..=2`.
pub fn random_character<R: Rng>(rng: &mut R, rank: usize, level: i64, terms: usize) -> GradedCharacter {
    let mut ch = GradedCharacter::zero(rank, level);
    for _ in 0..rng.gen_range(1..=terms.max(1)) {
        let w = Weight::new((0..rank).map(|_| rng.gen_range(-3..=3)).collect());
        let g = HalfInt::from_halves(rng.gen_range(0..=4));
        let mut c: i64 = rng.gen_range(1..=2);
        if rng.gen_bool(0.5) {
            c = -c;
        }
        ch.add_term_unchecked(w, g, &BigInt::from(c));
    }
    ch
}

/// `D_i(D_i f) = D_i f` for `samples` random `f` and random nodes,
/// the affine node included.
pub fn verify_idempotence(rsd: &RootSystemData, samples: usize, seed: u64) -> VerificationReport {
    let mut rep = base("demazure_idempotent", rsd).param("samples", samples).param("seed", seed);
    let action = rsd.action();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let level = rng.gen_range(1..=3);
        let f = random_character(&mut rng, rsd.rank(), level, 4);
        let node = rng.gen_range(0..=rsd.rank());
        let run = || -> Result<(GradedCharacter, GradedCharacter)> {
            let once = action.demazure_operator(node, &f)?;
            Ok((action.demazure_operator(node, &once)?, once))
        };
        match run() {
            Ok((twice, once)) => rep.compare_characters(&twice, &once),
            Err(e) => rep.fail(Witness::Error(format!("{e}"))),
        }
        if rep.failed() {
            rep.detail(format!("node {node}"));
            break;
        }
    }
    rep
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return alloc::vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (k, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(k);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// `ch D(level, lambda)` is the same for every tie-break order of greedy
/// ascent (all priority orders of the affine nodes, plus highest-first),
/// and all the words have the same length.
pub fn verify_word_independence(rsd: &RootSystemData, level: i64, lambda: &Weight) -> VerificationReport {
    let mut rep = base("word_independence", rsd).param("level", level).param("lambda", lambda);
    let action = rsd.action();
    let nodes: Vec<usize> = (0..=rsd.rank()).collect();
    let mut ties = alloc::vec![TieBreak::Lowest, TieBreak::Highest];
    ties.extend(permutations(&nodes).into_iter().map(TieBreak::Priority));
    let run = |rep: &mut VerificationReport| -> Result<()> {
        let reference = demazure_character_with(&action, level, lambda, &TieBreak::Lowest)?;
        let start = AffineWeight::new(level, -lambda, HalfInt::ZERO);
        let cap = crate::demazure::default_ascent_cap(rsd.finite(), level, lambda.sum());
        let (ref_word, _) = action.ascend(&start, &TieBreak::Lowest, cap)?;
        let mut words = BTreeSet::new();
        for tie in &ties {
            let ch = demazure_character_with(&action, level, lambda, tie)?;
            rep.compare_characters(&ch, &reference);
            let (word, _) = action.ascend(&start, tie, cap)?;
            if word.len() != ref_word.len() {
                rep.fail(Witness::Integers { left: word.len().into(), right: ref_word.len().into() });
            }
            words.insert(word.nodes);
        }
        rep.detail(format!("{} tie-breaks, {} distinct words of length {}", ties.len(), words.len(), ref_word.len()));
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep = rep.error(e);
    }
    rep
}

/// The grade-zero part of `ch D(level, lambda)` is `ch V(lambda)`.
pub fn verify_grade_zero(rsd: &RootSystemData, level: i64, lambda: &Weight) -> VerificationReport {
    let mut rep = base("grade_zero", rsd).param("level", level).param("lambda", lambda);
    let run = || -> Result<(GradedCharacter, GradedCharacter)> {
        let ch = crate::demazure::demazure_character(rsd, level, lambda)?;
        let slice = ch.grade_slice(HalfInt::ZERO).classical();
        Ok((slice, irreducible_character(rsd.finite(), lambda)?.classical()))
    };
    match run() {
        Ok((slice, irr)) => {
            rep.detail(format!("dim V(lambda) = {}", irr.dimension()));
            rep.compare_characters(&slice, &irr);
        }
        Err(e) => rep = rep.error(e),
    }
    rep
}

/// Doubled simple-root coordinates of `mu`, if integral.
fn doubled_root_coords(fin: &RootSystem, mu: &Weight) -> Option<Vec<i64>> {
    fin.to_root_coords(mu)
        .iter()
        .map(|q| {
            let d = q * 2;
            d.is_integer().then(|| d.to_integer())
        })
        .collect()
}

/// `t_{-mu}(x)`.
fn translate_down(action: &AffineAction<'_>, x: &AffineWeight, mu: &Weight) -> Result<AffineWeight> {
    let beta = doubled_root_coords(action.finite(), mu)
        .ok_or_else(|| Error::Hypothesis(format!("{mu} has non-half-integral root coordinates")))?;
    let neg: Vec<i64> = beta.iter().map(|c| -c).collect();
    action.translate(x, &neg)
}

/// Greedy ascent, checked to round-trip: the word applied to the dominant
/// endpoint gives `x` back.
fn reduced(action: &AffineAction<'_>, x: &AffineWeight) -> Result<(WeylWord, AffineWeight)> {
    let (word, top) = action.minimal_word_to_dominant(x)?;
    if action.apply_word(&word, &top)? != *x {
        return Err(Error::InconsistentData(format!("ascent from {x:?} does not round-trip")));
    }
    Ok((word, top))
}

fn random_dominant<R: Rng>(rng: &mut R, rank: usize, max: i64) -> Weight {
    loop {
        let w = Weight::new((0..rank).map(|_| rng.gen_range(0..=max)).collect());
        if !w.is_zero() {
            return w;
        }
    }
}

/// For random dominant `mu`, `lambda` and finite `w`:
/// `l(t_{-mu} t_{-lambda} w) = l(t_{-mu}) + l(t_{-lambda} w)`, and the
/// Demazure operator of the product equals the composite of the two
/// operators on a random level-one character.
///
/// Lengths are read off as the number of greedy ascent steps from the
/// image of a regular dominant weight `Lambda_reg` whose pairings with the
/// simple coroots are pairwise distinct. `mu` is replaced by its
/// least multiple whose translation fixes the endpoint `Lambda_reg`, so
/// that `t_{-mu}` lies in the affine Weyl group proper and the two words
/// compose.
pub fn verify_length_additivity(rsd: &RootSystemData, samples: usize, seed: u64) -> VerificationReport {
    let mut rep = base("length_additivity", rsd).param("samples", samples).param("seed", seed);
    let action = rsd.action();
    let n = rsd.rank();
    // Pairwise distinct pairings, so no diagram automorphism fixes it.
    let finite = Weight::new((1..=n as i64).collect());
    let kappa_dot: i64 = rsd.alpha0_coroot().iter().zip(finite.coords()).map(|(k, r)| k * r).sum();
    let reg = AffineWeight::new(n as i64 + 1 + kappa_dot, finite, HalfInt::ZERO);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    let mut attempts = 0;
    while done < samples && attempts < 20 * samples {
        attempts += 1;
        let mu0 = random_dominant(&mut rng, n, 1);
        let lambda = random_dominant(&mut rng, n, 1);
        let w = WeylWord { nodes: (0..rng.gen_range(0..=4)).map(|_| rng.gen_range(1..=n)).collect() };
        let run = |rep: &mut VerificationReport| -> Result<bool> {
            let mut mu = None;
            for k in 1..=6 {
                let cand = mu0.scale(k);
                let Ok(x) = translate_down(&action, &reg, &cand) else { continue };
                let (word, top) = reduced(&action, &x)?;
                if top == reg {
                    mu = Some((cand, word));
                    break;
                }
            }
            let Some((mu, mu_word)) = mu else { return Ok(false) };
            let Ok(a) = translate_down(&action, &action.apply_word(&w, &reg)?, &lambda) else {
                return Ok(false);
            };
            let b = translate_down(&action, &a, &mu)?;
            let (a_word, _) = reduced(&action, &a)?;
            let (b_word, _) = reduced(&action, &b)?;
            if b_word.len() != mu_word.len() + a_word.len() {
                rep.detail(format!("mu={mu} lambda={lambda} w={:?}", w.nodes));
                rep.fail(Witness::Integers {
                    left: b_word.len().into(),
                    right: (mu_word.len() + a_word.len()).into(),
                });
                return Ok(true);
            }
            // The operator identity is level-independent; level 1 keeps it cheap.
            let f = random_character(&mut rng_for(&mu, &lambda), n, 1, 3);
            let whole = action.apply_demazure_word(&b_word, &f)?;
            let split = action.apply_demazure_word(&mu_word, &action.apply_demazure_word(&a_word, &f)?)?;
            let before = rep.failed();
            rep.compare_characters(&whole, &split);
            if !before && rep.failed() {
                rep.detail(format!("operators differ at mu={mu} lambda={lambda} w={:?}", w.nodes));
            }
            Ok(true)
        };
        match run(&mut rep) {
            Ok(true) => done += 1,
            Ok(false) => {}
            Err(e) => {
                rep = rep.error(e);
                break;
            }
        }
    }
    if done < samples && !rep.failed() {
        rep.fail(Witness::Integers { left: done.into(), right: samples.into() });
        rep.detail("too few admissible samples");
    }
    rep.detail(format!("{done} triples, level {}", reg.level));
    rep
}

fn rng_for(mu: &Weight, lambda: &Weight) -> ChaCha8Rng {
    let mut seed = 0u64;
    for &c in mu.coords().iter().chain(lambda.coords()) {
        seed = seed.wrapping_mul(31).wrapping_add(c as u64);
    }
    ChaCha8Rng::seed_from_u64(seed)
}

/// Terms of `e(mu) ch D(level, mu)` with grade at most `grade_bound` and
/// root-coordinate height at most `height_bound`, i.e. a window at the
/// extremal weight `-mu`.
fn aligned_window(
    rsd: &RootSystemData,
    level: i64,
    mu: &Weight,
    grade_bound: HalfInt,
    height_bound: i64,
) -> Result<GradedCharacter> {
    let ch = crate::demazure::demazure_character(rsd, level, mu)?;
    let bound = num_rational::Ratio::from_integer(height_bound);
    let mut out = GradedCharacter::zero(rsd.rank(), 0);
    for (w, g, c) in ch.terms() {
        let rel = w.add_scaled(mu, 1);
        if g <= grade_bound && rsd.finite().height(&rel) <= bound {
            out.add_term_unchecked(rel, g, c);
        }
    }
    Ok(out)
}

/// Finite shadow of the direct limit over `N` of `D(level, N level theta + lambda)`:
/// after aligning the extremal weights, a fixed window of low grade and
/// height may only grow with `N`, and should stop changing.
///
/// Fails if a coefficient ever decreases; skipped if the window is still
/// moving at `max_n`.
pub fn verify_semi_infinite_stability(
    rsd: &RootSystemData,
    level: i64,
    lambda: &Weight,
    max_n: i64,
    grade_bound: HalfInt,
    height_bound: i64,
) -> VerificationReport {
    let rep = base("semi_infinite", rsd)
        .param("level", level)
        .param("lambda", lambda)
        .param("grade_bound", grade_bound)
        .param("height_bound", height_bound);
    let mut rep = rep;
    let theta = rsd.theta().weight.clone();
    let mut prev: Option<GradedCharacter> = None;
    for n in 0..=max_n {
        let mu = lambda.add_scaled(&theta, n * level);
        let window = match aligned_window(rsd, level, &mu, grade_bound, height_bound) {
            Ok(w) => w,
            Err(e) => return rep.error(e),
        };
        if let Some(p) = prev {
            let growth = match window.sub(&p) {
                Ok(d) => d,
                Err(e) => return rep.error(e),
            };
            if !growth.has_nonnegative_coefficients() {
                rep.detail(format!("window shrinks from N={} to N={n}", n - 1));
                rep.compare_characters(&window, &p);
                return rep;
            }
            if growth.is_empty() {
                rep.detail(format!("stable from N={} with {} terms", n - 1, window.len()));
                return rep;
            }
        }
        prev = Some(window);
    }
    rep.skip(format!("window still growing at N={max_n}"))
}
