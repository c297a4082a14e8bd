use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{FiniteType, Folding, Root, RootSystem};
use crate::demazure::AffineAction;
use crate::weights::{HalfInt, Weight};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TwistedFamily {
    /// `A_{2n}^{(2)}`, the hyperspecial family.
    A2n,
    /// `A_{2n-1}^{(2)}`.
    A2nMinus1,
    /// `D_{n+1}^{(2)}`.
    DnPlus1,
    /// `E_6^{(2)}`.
    E6,
    /// `D_4^{(3)}`.
    D4,
}

impl TwistedFamily {
    pub const ALL: [TwistedFamily; 5] = [
        TwistedFamily::A2n,
        TwistedFamily::A2nMinus1,
        TwistedFamily::DnPlus1,
        TwistedFamily::E6,
        TwistedFamily::D4,
    ];

    pub fn key(self) -> &'static str {
        match self {
            TwistedFamily::A2n => "a2n_2",
            TwistedFamily::A2nMinus1 => "a2n-1_2",
            TwistedFamily::DnPlus1 => "dn+1_2",
            TwistedFamily::E6 => "e6_2",
            TwistedFamily::D4 => "d4_3",
        }
    }

    /// Order of the diagram automorphism.
    pub fn m(self) -> i64 {
        if self == TwistedFamily::D4 {
            3
        } else {
            2
        }
    }

    fn standard_range(self) -> (usize, Option<usize>) {
        match self {
            TwistedFamily::A2n => (1, None),
            TwistedFamily::A2nMinus1 => (3, None),
            TwistedFamily::DnPlus1 => (4, None),
            TwistedFamily::E6 => (4, Some(4)),
            TwistedFamily::D4 => (2, Some(2)),
        }
    }

    fn nonstandard_min(self) -> usize {
        match self {
            TwistedFamily::A2nMinus1 | TwistedFamily::DnPlus1 => 2,
            _ => self.standard_range().0,
        }
    }
}

impl FromStr for TwistedFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TwistedFamily::ALL
            .into_iter()
            .find(|f| f.key().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown twisted type {s:?}")))
    }
}

impl fmt::Display for TwistedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// A twisted affine type with its rank `n` (the rank of `g`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineTypeDescriptor {
    pub family: TwistedFamily,
    pub n: usize,
    pub nonstandard: bool,
}

impl AffineTypeDescriptor {
    pub fn new(family: TwistedFamily, n: usize) -> Result<Self> {
        let (lo, hi) = family.standard_range();
        if n < lo || hi.is_some_and(|h| n != h) {
            return Err(Error::RankOutOfRange { family: family.key(), n });
        }
        Ok(AffineTypeDescriptor { family, n, nonstandard: false })
    }

    /// Also admits the small ranks where the parent degenerates
    /// (`A_3^{(2)}`, `D_3^{(2)}`, `D_4^{(2)}` with `n = 3`, ...).
    pub fn new_nonstandard(family: TwistedFamily, n: usize) -> Result<Self> {
        let (_, hi) = family.standard_range();
        if n < family.nonstandard_min() || hi.is_some_and(|h| n != h) {
            return Err(Error::RankOutOfRange { family: family.key(), n });
        }
        let (lo, _) = family.standard_range();
        Ok(AffineTypeDescriptor { family, n, nonstandard: n < lo })
    }

    pub fn m(&self) -> i64 {
        self.family.m()
    }

    pub fn is_hyperspecial(&self) -> bool {
        self.family == TwistedFamily::A2n
    }

    /// The fixed-point subalgebra `g`.
    pub fn finite_type(&self) -> FiniteType {
        let n = self.n;
        match self.family {
            TwistedFamily::A2n | TwistedFamily::A2nMinus1 => FiniteType::C(n),
            TwistedFamily::DnPlus1 => FiniteType::B(n),
            TwistedFamily::E6 => FiniteType::F4,
            TwistedFamily::D4 => FiniteType::G2,
        }
    }

    /// The untwisted parent `g-bar`.
    pub fn parent_type(&self) -> FiniteType {
        let n = self.n;
        match self.family {
            TwistedFamily::A2n => FiniteType::A(2 * n),
            TwistedFamily::A2nMinus1 => FiniteType::A(2 * n - 1),
            TwistedFamily::DnPlus1 => FiniteType::D(n + 1),
            TwistedFamily::E6 => FiniteType::E6,
            TwistedFamily::D4 => FiniteType::D(4),
        }
    }

    pub fn folding(&self) -> Folding {
        let n = self.n;
        let orbits: Vec<Vec<usize>> = match self.family {
            TwistedFamily::A2n => (1..=n).map(|i| vec![i, 2 * n + 1 - i]).collect(),
            TwistedFamily::A2nMinus1 => (1..=n)
                .map(|i| if i < n { vec![i, 2 * n - i] } else { vec![n] })
                .collect(),
            TwistedFamily::DnPlus1 => (1..=n)
                .map(|i| if i < n { vec![i] } else { vec![n, n + 1] })
                .collect(),
            TwistedFamily::E6 => vec![vec![1, 6], vec![2, 5], vec![3], vec![4]],
            TwistedFamily::D4 => vec![vec![1, 3, 4], vec![2]],
        };
        Folding::new(self.parent_type().rank(), orbits)
    }

    /// `Theta(i)` of the Q-system, with multiplicity. Entries outside
    /// `1..=n` stand for the unit `Q^{(0)} = 1`.
    pub fn theta_set(&self, i: usize) -> Result<Vec<usize>> {
        let n = self.n;
        if i == 0 || i > n {
            return Err(Error::NodeOutOfRange { node: i, rank: n });
        }
        let chain = |i: usize| vec![i - 1, i + 1];
        Ok(match self.family {
            TwistedFamily::A2n => {
                if i < n {
                    chain(i)
                } else {
                    vec![n - 1, n]
                }
            }
            TwistedFamily::A2nMinus1 => {
                if i < n {
                    chain(i)
                } else {
                    vec![n - 1, n - 1]
                }
            }
            TwistedFamily::DnPlus1 => {
                if i + 1 < n {
                    chain(i)
                } else if i + 1 == n {
                    vec![n - 2, n, n]
                } else {
                    vec![n - 1]
                }
            }
            TwistedFamily::E6 => match i {
                1 => vec![2],
                2 => vec![1, 3, 3],
                3 => vec![2, 4],
                _ => vec![3],
            },
            TwistedFamily::D4 => {
                if i == 1 {
                    vec![2]
                } else {
                    vec![1, 1, 1]
                }
            }
        })
    }

    /// Labels `a_0..a_n` with `delta = sum a_i alpha_i`.
    fn labels(&self) -> Vec<i64> {
        let n = self.n;
        match self.family {
            TwistedFamily::A2n => {
                let mut a = vec![2; n + 1];
                a[n] = 1;
                a
            }
            TwistedFamily::A2nMinus1 => {
                let mut a = vec![2; n + 1];
                a[0] = 1;
                a[1] = 1;
                a[n] = 1;
                a
            }
            TwistedFamily::DnPlus1 => vec![1; n + 1],
            TwistedFamily::E6 => vec![1, 2, 3, 2, 1],
            TwistedFamily::D4 => vec![1, 2, 1],
        }
    }

    /// Dual labels `a_0^vee..a_n^vee` with `K = sum a_i^vee alpha_i^vee`.
    fn dual_labels(&self) -> Vec<i64> {
        let n = self.n;
        match self.family {
            TwistedFamily::A2n => {
                let mut a = vec![2; n + 1];
                a[0] = 1;
                a
            }
            TwistedFamily::A2nMinus1 => {
                let mut a = vec![2; n + 1];
                a[0] = 1;
                a[1] = 1;
                a
            }
            TwistedFamily::DnPlus1 => {
                let mut a = vec![2; n + 1];
                a[0] = 1;
                a[n] = 1;
                a
            }
            TwistedFamily::E6 => vec![1, 2, 3, 4, 2],
            TwistedFamily::D4 => vec![1, 2, 3],
        }
    }

    /// The affine Cartan matrix as tabulated: the finite block with node 0
    /// attached. Index 0 is node 0.
    fn affine_cartan_literal(&self) -> Vec<Vec<i64>> {
        let n = self.n;
        let fin = self.finite_type().cartan_matrix();
        let mut a = vec![vec![0i64; n + 1]; n + 1];
        a[0][0] = 2;
        for i in 0..n {
            for j in 0..n {
                a[i + 1][j + 1] = fin[i][j];
            }
        }
        let mut attach = |j: usize, a0j: i64, aj0: i64| {
            a[0][j] = a0j;
            a[j][0] = aj0;
        };
        match self.family {
            TwistedFamily::A2n if n == 1 => attach(1, -4, -1),
            TwistedFamily::A2n => attach(1, -2, -1),
            TwistedFamily::A2nMinus1 if n == 2 => attach(2, -2, -1),
            TwistedFamily::A2nMinus1 => attach(2, -1, -1),
            TwistedFamily::DnPlus1 => attach(1, -2, -1),
            TwistedFamily::E6 | TwistedFamily::D4 => attach(1, -1, -1),
        }
        a
    }

    pub fn label(&self) -> String {
        let n = self.n;
        match self.family {
            TwistedFamily::A2n => format!("A{}^(2)", 2 * n),
            TwistedFamily::A2nMinus1 => format!("A{}^(2)", 2 * n - 1),
            TwistedFamily::DnPlus1 => format!("D{}^(2)", n + 1),
            TwistedFamily::E6 => String::from("E6^(2)"),
            TwistedFamily::D4 => String::from("D4^(3)"),
        }
    }
}

impl fmt::Display for AffineTypeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A positive real root `sign*alpha + delta*delta_0`, halved when `half`.
///
/// `classical` holds `alpha` in simple-root coordinates (already signed).
/// For a half root the actual classical part is `classical / 2` while
/// `delta` is the actual coefficient of the null root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineRealRoot {
    pub classical: Vec<i64>,
    pub delta: HalfInt,
    pub half: bool,
    pub long: bool,
    pub d: i64,
}

impl AffineRealRoot {
    pub fn sign(&self) -> i64 {
        self.classical.iter().find(|&&c| c != 0).map_or(1, |c| c.signum())
    }
}

/// Root data of a twisted affine algebra.
#[derive(Clone, Debug)]
pub struct RootSystemData {
    ty: AffineTypeDescriptor,
    finite: RootSystem,
    affine_cartan: Vec<Vec<i64>>,
    labels: Vec<i64>,
    dual_labels: Vec<i64>,
    theta: Root,
    alpha0_finite: Weight,
    alpha0_delta: HalfInt,
    kappa: Vec<i64>,
    folding: Folding,
}

impl RootSystemData {
    pub fn new(ty: AffineTypeDescriptor) -> Result<Self> {
        let finite = RootSystem::new(ty.finite_type())?;
        let n = ty.n;
        let labels = ty.labels();
        let dual_labels = ty.dual_labels();
        let affine_cartan = ty.affine_cartan_literal();
        let inconsistent = |what: &str| Error::InconsistentData(format!("{}: {what}", ty.label()));

        if dual_labels[0] != 1 {
            return Err(inconsistent("a_0^vee must be 1"));
        }
        // alpha_0 = (delta - beta_0') / a_0 with beta_0' = sum_{i>0} a_i alpha_i.
        let a0 = labels[0];
        let alpha0_delta = HalfInt::from_halves(2 / a0);
        let beta0_halves: Vec<i64> = labels[1..].iter().map(|a| 2 * a / a0).collect();
        let beta0_w2 = finite.root_to_weight(&beta0_halves);
        if beta0_w2.coords().iter().any(|c| c % 2 != 0) {
            return Err(inconsistent("beta_0 is not integral on coroots"));
        }
        let alpha0_finite = Weight::new(beta0_w2.coords().iter().map(|c| -c / 2).collect());
        let kappa: Vec<i64> = dual_labels[1..].to_vec();

        let theta = if ty.is_hyperspecial() {
            finite.highest_root().clone()
        } else {
            finite.highest_short_root().clone()
        };
        let scaled: Vec<i64> = beta0_halves.iter().map(|b| b * a0 / 2).collect();
        if scaled != theta.coords {
            return Err(inconsistent("a_0 beta_0 is not the expected highest root"));
        }
        let theta_check = finite.coroot_coords(&theta);
        let expected_kappa: Vec<i64> = theta_check.iter().map(|c| c * a0).collect();
        if expected_kappa != kappa {
            return Err(inconsistent("dual labels do not match theta^vee"));
        }

        // Node-0 row and column of the tabulated matrix against the data.
        for j in 1..=n {
            let a0j = -(0..n).map(|i| kappa[i] * finite.cartan()[i][j - 1]).sum::<i64>();
            let aj0 = alpha0_finite[j - 1];
            if affine_cartan[0][j] != a0j || affine_cartan[j][0] != aj0 {
                return Err(inconsistent("node-0 entries of the affine Cartan matrix"));
            }
            for i in 1..=n {
                if affine_cartan[i][j] != finite.cartan()[i - 1][j - 1] {
                    return Err(inconsistent("finite block of the affine Cartan matrix"));
                }
            }
        }
        let a00: i64 = -(0..n).map(|i| kappa[i] * alpha0_finite[i]).sum::<i64>();
        if a00 != 2 {
            return Err(inconsistent("<alpha_0, alpha_0^vee> != 2"));
        }
        for i in 0..=n {
            let row: i64 = (0..=n).map(|j| affine_cartan[i][j] * labels[j]).sum();
            let col: i64 = (0..=n).map(|j| dual_labels[j] * affine_cartan[j][i]).sum();
            if row != 0 || col != 0 {
                return Err(inconsistent("labels are not null vectors"));
            }
        }

        Ok(RootSystemData {
            ty,
            folding: ty.folding(),
            finite,
            affine_cartan,
            labels,
            dual_labels,
            theta,
            alpha0_finite,
            alpha0_delta,
            kappa,
        })
    }

    pub fn for_family(family: TwistedFamily, n: usize) -> Result<Self> {
        Self::new(AffineTypeDescriptor::new(family, n)?)
    }

    pub fn descriptor(&self) -> AffineTypeDescriptor {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.n
    }

    pub fn m(&self) -> i64 {
        self.ty.m()
    }

    pub fn finite(&self) -> &RootSystem {
        &self.finite
    }

    pub fn affine_cartan(&self) -> &[Vec<i64>] {
        &self.affine_cartan
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn dual_labels(&self) -> &[i64] {
        &self.dual_labels
    }

    /// The finite root entering `alpha_0`: the highest root for
    /// `A_{2n}^{(2)}` (where `alpha_0 = (delta - theta)/2`), the highest
    /// short root otherwise (`alpha_0 = delta - theta_s`).
    pub fn theta(&self) -> &Root {
        &self.theta
    }

    pub fn highest_root(&self) -> &Root {
        self.finite.highest_root()
    }

    /// `alpha_0 = alpha0_delta * delta + alpha0_finite`.
    pub fn alpha0(&self) -> (&Weight, HalfInt) {
        (&self.alpha0_finite, self.alpha0_delta)
    }

    /// Coroot coordinates with `alpha_0^vee = K - sum kappa_i alpha_i^vee`.
    pub fn alpha0_coroot(&self) -> &[i64] {
        &self.kappa
    }

    pub fn folding(&self) -> &Folding {
        &self.folding
    }

    pub fn theta_set(&self, i: usize) -> Result<Vec<usize>> {
        self.ty.theta_set(i)
    }

    pub fn action(&self) -> AffineAction<'_> {
        AffineAction::new(&self.finite, &self.kappa, &self.alpha0_finite, self.alpha0_delta)
    }

    /// `d_alpha` for a positive root of `g`.
    pub fn d(&self, root: &Root) -> i64 {
        root.d
    }

    pub fn is_long(&self, root: &Root) -> bool {
        self.finite.is_long(root)
    }

    /// Positive real roots with `delta`-coefficient at most `bound`.
    ///
    /// Short roots appear at every integer shift, long roots at multiples
    /// of `m`, and for `A_{2n}^{(2)}` also the halves
    /// `(alpha + (2k+1) delta) / 2` of long roots.
    pub fn positive_real_roots(&self, bound: HalfInt) -> Vec<AffineRealRoot> {
        let mut out = Vec::new();
        let m = self.m();
        let hyper = self.ty.is_hyperspecial();
        for root in self.finite.positive_roots() {
            let long = self.is_long(root);
            out.push(AffineRealRoot {
                classical: root.coords.clone(),
                delta: HalfInt::ZERO,
                half: false,
                long,
                d: root.d,
            });
        }
        let max_shift = bound.floor();
        for k in 1..=max_shift.max(0) {
            for root in self.finite.positive_roots() {
                let long = self.is_long(root);
                let step = if long && !hyper { m } else if long { 2 } else { 1 };
                if k % step != 0 {
                    continue;
                }
                for sign in [1i64, -1] {
                    out.push(AffineRealRoot {
                        classical: root.coords.iter().map(|c| sign * c).collect(),
                        delta: HalfInt::from_int(k),
                        half: false,
                        long,
                        d: root.d,
                    });
                }
            }
        }
        if hyper {
            let mut odd = 1;
            while HalfInt::from_halves(odd) <= bound {
                for root in self.finite.positive_roots().iter().filter(|r| self.is_long(r)) {
                    for sign in [1i64, -1] {
                        out.push(AffineRealRoot {
                            classical: root.coords.iter().map(|c| sign * c).collect(),
                            delta: HalfInt::from_halves(odd),
                            half: true,
                            long: true,
                            d: root.d,
                        });
                    }
                }
                odd += 2;
            }
        }
        out.sort_by(|a, b| {
            a.delta
                .cmp(&b.delta)
                .then_with(|| b.sign().cmp(&a.sign()))
                .then_with(|| a.classical.iter().map(|c| c.abs()).cmp(b.classical.iter().map(|c| c.abs())))
        });
        out
    }
}

/// Untwisted affine data for the parent `g-bar`: `alpha_0 = delta - theta`.
#[derive(Clone, Debug)]
pub struct UntwistedData {
    finite: RootSystem,
    kappa: Vec<i64>,
    alpha0_finite: Weight,
}

impl UntwistedData {
    pub fn new(ty: FiniteType) -> Result<Self> {
        let finite = RootSystem::new(ty)?;
        let theta = finite.highest_root().clone();
        let kappa = finite.coroot_coords(&theta);
        let alpha0_finite = -&theta.weight;
        Ok(UntwistedData { finite, kappa, alpha0_finite })
    }

    pub fn parent_of(ty: &AffineTypeDescriptor) -> Result<Self> {
        Self::new(ty.parent_type())
    }

    pub fn finite(&self) -> &RootSystem {
        &self.finite
    }

    pub fn action(&self) -> AffineAction<'_> {
        AffineAction::new(&self.finite, &self.kappa, &self.alpha0_finite, HalfInt::ONE)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_standard() -> Vec<AffineTypeDescriptor> {
        let mut v = Vec::new();
        for n in 1..=5 {
            v.push(AffineTypeDescriptor::new(TwistedFamily::A2n, n).unwrap());
        }
        for n in 3..=6 {
            v.push(AffineTypeDescriptor::new(TwistedFamily::A2nMinus1, n).unwrap());
        }
        for n in 4..=6 {
            v.push(AffineTypeDescriptor::new(TwistedFamily::DnPlus1, n).unwrap());
        }
        v.push(AffineTypeDescriptor::new(TwistedFamily::E6, 4).unwrap());
        v.push(AffineTypeDescriptor::new(TwistedFamily::D4, 2).unwrap());
        v
    }

    #[test]
    fn tabulated_data_is_consistent() {
        for ty in all_standard() {
            RootSystemData::new(ty).unwrap_or_else(|e| panic!("{ty}: {e}"));
        }
        for (f, n) in [(TwistedFamily::A2nMinus1, 2), (TwistedFamily::DnPlus1, 2), (TwistedFamily::DnPlus1, 3)] {
            let ty = AffineTypeDescriptor::new_nonstandard(f, n).unwrap();
            assert!(ty.nonstandard);
            RootSystemData::new(ty).unwrap_or_else(|e| panic!("{ty}: {e}"));
        }
    }

    #[test]
    fn rank_checks() {
        assert!(AffineTypeDescriptor::new(TwistedFamily::A2nMinus1, 2).is_err());
        assert!(AffineTypeDescriptor::new(TwistedFamily::E6, 3).is_err());
        assert!(AffineTypeDescriptor::new(TwistedFamily::D4, 2).is_ok());
        assert!(AffineTypeDescriptor::new(TwistedFamily::A2n, 0).is_err());
    }

    #[test]
    fn alpha0_of_a2() {
        let rsd = RootSystemData::for_family(TwistedFamily::A2n, 1).unwrap();
        let (fin, dc) = rsd.alpha0();
        assert_eq!(fin, &Weight::new(vec![-1]));
        assert_eq!(dc, HalfInt::HALF);
        assert_eq!(rsd.alpha0_coroot(), &[2]);
        assert_eq!(rsd.affine_cartan(), &[vec![2, -4], vec![-1, 2]]);
    }

    #[test]
    fn g2_and_f4_long_short() {
        let d4 = RootSystemData::for_family(TwistedFamily::D4, 2).unwrap();
        let roots = d4.finite().positive_roots();
        let alpha1 = roots.iter().find(|r| r.coords == vec![1, 0]).unwrap();
        assert_eq!(d4.d(alpha1), 1);
        let alpha2 = roots.iter().find(|r| r.coords == vec![0, 1]).unwrap();
        assert_eq!(d4.d(alpha2), 3);
        let e6 = RootSystemData::for_family(TwistedFamily::E6, 4).unwrap();
        assert_eq!(e6.theta().coords, vec![2, 3, 2, 1]);
    }

    #[test]
    fn a2_real_roots_up_to_three_halves() {
        let rsd = RootSystemData::for_family(TwistedFamily::A2n, 1).unwrap();
        let roots = rsd.positive_real_roots(HalfInt::from_halves(3));
        let summary: Vec<(i64, i64, bool)> =
            roots.iter().map(|r| (r.classical[0], r.delta.halves(), r.half)).collect();
        assert_eq!(
            summary,
            vec![(1, 0, false), (1, 1, true), (-1, 1, true), (1, 3, true), (-1, 3, true)]
        );
    }

    #[test]
    fn d4_3_long_roots_only_at_multiples_of_three() {
        let rsd = RootSystemData::for_family(TwistedFamily::D4, 2).unwrap();
        let roots = rsd.positive_real_roots(HalfInt::from_int(3));
        for r in &roots {
            if r.long && r.delta != HalfInt::ZERO {
                assert_eq!(r.delta, HalfInt::from_int(3));
            }
        }
        // 6 finite, 3 short * 2 signs at each of delta = 1, 2, 3, 3 long * 2 at 3.
        assert_eq!(roots.len(), 6 + 3 * 6 + 6);
    }

    #[test]
    fn folding_restricts_parent_cartan() {
        // sum over an orbit of the parent simple roots restricts to alpha_i.
        for ty in all_standard() {
            let rsd = RootSystemData::new(ty).unwrap();
            let parent = RootSystem::new(ty.parent_type()).unwrap();
            let fold = rsd.folding();
            for (i, orbit) in fold.orbits().iter().enumerate() {
                let mut sum = Weight::zero(parent.rank());
                for &j in orbit {
                    sum = &sum + &parent.simple_root(j - 1);
                }
                let restricted = crate::weights::restrict_parent_weight(fold, &sum);
                let expected = rsd.finite().simple_root(i);
                // alpha_i itself for the middle node of A_{2n}, |orbit| alpha_i otherwise.
                let k = orbit.len() as i64;
                assert!(
                    restricted == expected.scale(k) || restricted == expected,
                    "{ty} node {}: {restricted} vs {expected}",
                    i + 1
                );
            }
        }
    }

    #[test]
    fn theta_sets() {
        let a = AffineTypeDescriptor::new(TwistedFamily::A2n, 3).unwrap();
        assert_eq!(a.theta_set(3).unwrap(), vec![2, 3]);
        assert_eq!(a.theta_set(1).unwrap(), vec![0, 2]);
        let d = AffineTypeDescriptor::new(TwistedFamily::DnPlus1, 4).unwrap();
        assert_eq!(d.theta_set(3).unwrap(), vec![2, 4, 4]);
        assert_eq!(d.theta_set(4).unwrap(), vec![3]);
        let g = AffineTypeDescriptor::new(TwistedFamily::D4, 2).unwrap();
        assert_eq!(g.theta_set(2).unwrap(), vec![1, 1, 1]);
    }
}
