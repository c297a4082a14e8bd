use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::root_data::RootSystem;
use crate::weights::{AffineWeight, GradedCharacter, HalfInt, Weight};
use crate::{Error, Result};

/// The affine simple reflections and Demazure operators for one affine
/// algebra, twisted or untwisted, acting on `level*Lambda_0 + mu + g*delta`.
///
/// Node `0` is the affine node, node `i >= 1` is finite node `i`.
#[derive(Clone, Debug)]
pub struct AffineAction<'a> {
    finite: &'a RootSystem,
    kappa: &'a [i64],
    /// `(finite part, delta coefficient)` of each simple root.
    roots: Vec<(Weight, HalfInt)>,
}

/// Which node greedy ascent reflects in when several pair negatively.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    #[default]
    Lowest,
    Highest,
    /// Earlier nodes win; nodes not listed come last in increasing order.
    Priority(Vec<usize>),
}

/// Reflections in the order greedy ascent applied them.
///
/// If ascent from `x` applied `s_{i_1}, ..., s_{i_k}` and reached `Lambda`,
/// then `x = s_{i_1} ... s_{i_k} Lambda` and the word is reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeylWord {
    pub nodes: Vec<usize>,
}

impl WeylWord {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

impl<'a> AffineAction<'a> {
    pub fn new(
        finite: &'a RootSystem,
        kappa: &'a [i64],
        alpha0_finite: &Weight,
        alpha0_delta: HalfInt,
    ) -> Self {
        let mut roots = Vec::with_capacity(finite.rank() + 1);
        roots.push((alpha0_finite.clone(), alpha0_delta));
        for i in 0..finite.rank() {
            roots.push((finite.simple_root(i), HalfInt::ZERO));
        }
        AffineAction { finite, kappa, roots }
    }

    pub fn finite(&self) -> &RootSystem {
        self.finite
    }

    pub fn rank(&self) -> usize {
        self.finite.rank()
    }

    pub fn simple_root(&self, node: usize) -> &(Weight, HalfInt) {
        &self.roots[node]
    }

    fn check_node(&self, node: usize) -> Result<()> {
        if node > self.rank() {
            return Err(Error::NodeOutOfRange { node, rank: self.rank() });
        }
        Ok(())
    }

    /// `<level*Lambda_0 + mu, alpha_node^vee>`.
    pub fn pairing(&self, level: i64, mu: &Weight, node: usize) -> i64 {
        if node == 0 {
            level - self.kappa.iter().zip(mu.coords()).map(|(k, m)| k * m).sum::<i64>()
        } else {
            mu[node - 1]
        }
    }

    pub fn is_dominant(&self, x: &AffineWeight) -> bool {
        (0..=self.rank()).all(|i| self.pairing(x.level, &x.finite, i) >= 0)
    }

    /// `x - j * alpha_node`.
    fn shift(&self, mu: &Weight, grade: HalfInt, node: usize, j: i64) -> (Weight, HalfInt) {
        let (rw, rd) = &self.roots[node];
        (mu.add_scaled(rw, -j), grade - *rd * j)
    }

    pub fn reflect(&self, x: &AffineWeight, node: usize) -> Result<AffineWeight> {
        self.check_node(node)?;
        if node == 0 && x.level <= 0 {
            return Err(Error::NodeZeroAtLevelZero);
        }
        let k = self.pairing(x.level, &x.finite, node);
        let (finite, grade) = self.shift(&x.finite, x.grade, node, k);
        Ok(AffineWeight { level: x.level, finite, grade })
    }

    /// Applies `s_{i_1} ... s_{i_k}` to `x` (so `s_{i_k}` acts first).
    pub fn apply_word(&self, word: &WeylWord, x: &AffineWeight) -> Result<AffineWeight> {
        let mut cur = x.clone();
        for &i in word.nodes.iter().rev() {
            cur = self.reflect(&cur, i)?;
        }
        Ok(cur)
    }

    fn pick(&self, x: &AffineWeight, tie: &TieBreak) -> Option<usize> {
        let neg = |i: usize| self.pairing(x.level, &x.finite, i) < 0;
        let n = self.rank();
        match tie {
            TieBreak::Lowest => (0..=n).find(|&i| neg(i)),
            TieBreak::Highest => (0..=n).rev().find(|&i| neg(i)),
            TieBreak::Priority(order) => order
                .iter()
                .copied()
                .filter(|&i| i <= n)
                .chain(0..=n)
                .find(|&i| neg(i)),
        }
    }

    /// Greedy ascent: reflect in a node with negative pairing until the
    /// weight is dominant.
    pub fn ascend(
        &self,
        x: &AffineWeight,
        tie: &TieBreak,
        cap: usize,
    ) -> Result<(WeylWord, AffineWeight)> {
        if x.level <= 0 {
            return Err(Error::NonPositiveLevel(x.level));
        }
        if x.finite.rank() != self.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: x.finite.rank() });
        }
        let mut cur = x.clone();
        let mut word = WeylWord::default();
        while let Some(i) = self.pick(&cur, tie) {
            if word.len() >= cap {
                return Err(Error::AscentCap(cap));
            }
            cur = self.reflect(&cur, i)?;
            word.nodes.push(i);
        }
        Ok((word, cur))
    }

    /// Greedy ascent with the lowest-index tie-break and a cap derived from
    /// the size of `x`.
    pub fn minimal_word_to_dominant(&self, x: &AffineWeight) -> Result<(WeylWord, AffineWeight)> {
        let size: i64 = x.finite.coords().iter().map(|c| c.abs()).sum();
        let cap = super::default_ascent_cap(self.finite, x.level, size);
        self.ascend(x, &TieBreak::Lowest, cap)
    }

    /// The Demazure operator `D_node`:
    /// `e(mu) -> sum_{j=0}^{k} e(mu - j alpha)` for `k = <mu, alpha^vee> >= 0`,
    /// `0` for `k = -1`, and `-sum_{j=1}^{-k-1} e(mu + j alpha)` for `k <= -2`.
    pub fn demazure_operator(&self, node: usize, f: &GradedCharacter) -> Result<GradedCharacter> {
        self.check_node(node)?;
        if f.rank() != self.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: f.rank() });
        }
        let level = f.level();
        if node == 0 && level <= 0 {
            return Err(Error::NodeZeroAtLevelZero);
        }
        let mut out = GradedCharacter::zero(f.rank(), level);
        for (mu, grade, c) in f.terms() {
            let k = self.pairing(level, mu, node);
            if k >= 0 {
                for j in 0..=k {
                    let (w, g) = self.shift(mu, grade, node, j);
                    out.add_term_unchecked(w, g, c);
                }
            } else if k <= -2 {
                let neg: BigInt = -c;
                for j in 1..=(-k - 1) {
                    let (w, g) = self.shift(mu, grade, node, -j);
                    out.add_term_unchecked(w, g, &neg);
                }
            }
        }
        Ok(out)
    }

    /// `D_{i_1} ... D_{i_k} f` (so `D_{i_k}` acts first).
    pub fn apply_demazure_word(&self, word: &WeylWord, f: &GradedCharacter) -> Result<GradedCharacter> {
        let mut cur = f.clone();
        for &i in word.nodes.iter().rev() {
            cur = self.demazure_operator(i, &cur)?;
        }
        Ok(cur)
    }

    /// The translation `t_beta` for `beta` given in simple-root coordinates,
    /// doubled (so odd entries are half roots):
    /// `t_beta(x) = x + level*beta - ((mu, beta) + level*|beta|^2/2) delta`.
    ///
    /// Only elements of the translation lattice of the affine Weyl group give
    /// group elements; the caller is responsible for that.
    pub fn translate(&self, x: &AffineWeight, beta_halves: &[i64]) -> Result<AffineWeight> {
        let fin = self.finite;
        if beta_halves.len() != fin.rank() {
            return Err(Error::RankMismatch { left: fin.rank(), right: beta_halves.len() });
        }
        let w2 = fin.root_to_weight(beta_halves);
        if w2.coords().iter().any(|c| c % 2 != 0) {
            return Err(Error::Hypothesis(alloc::format!(
                "translation by {beta_halves:?}/2 is not integral on coroots"
            )));
        }
        let beta_w = Weight::new(w2.coords().iter().map(|c| c / 2).collect());
        let mu_beta_halves = fin.inner_weight_root(&x.finite, beta_halves);
        let norm4 = fin.root_inner(beta_halves, beta_halves);
        // level * |beta|^2 / 2 = level * norm4 / 8, counted in halves.
        if (x.level * norm4) % 4 != 0 {
            return Err(Error::Hypothesis(alloc::format!(
                "translation by {beta_halves:?}/2 gives a non-half-integral grade"
            )));
        }
        let shift = HalfInt::from_halves(mu_beta_halves + x.level * norm4 / 4);
        Ok(AffineWeight {
            level: x.level,
            finite: x.finite.add_scaled(&beta_w, x.level),
            grade: x.grade - shift,
        })
    }
}
