use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::weights::Weight;
use crate::{Error, Result};

/// Finite Cartan types, in the labelings used throughout the crate.
///
/// `B`, `C`, `D`, `G2` follow Bourbaki (`G2`: node 1 short). `F4` is
/// reversed Bourbaki, so nodes 1, 2 are short and 3, 4 long. `E6` uses the
/// chain 1-2-3-4 with the branch 3-5-6, which makes the diagram involution
/// swap 1<->6 and 2<->5. `C(1)` is `A1` with a long root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiniteType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    F4,
    G2,
}

impl FiniteType {
    pub fn rank(self) -> usize {
        match self {
            FiniteType::A(n) | FiniteType::B(n) | FiniteType::C(n) | FiniteType::D(n) => n,
            FiniteType::E6 => 6,
            FiniteType::F4 => 4,
            FiniteType::G2 => 2,
        }
    }

    fn validate(self) -> Result<()> {
        let ok = match self {
            FiniteType::A(n) | FiniteType::C(n) => n >= 1,
            FiniteType::B(n) => n >= 2,
            FiniteType::D(n) => n >= 3,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::RankOutOfRange { family: "finite type", n: self.rank() })
        }
    }

    /// `a[i][j] = <alpha_j, alpha_i^vee>`, 0-based.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut bond = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self {
            FiniteType::A(_) => (0..n.saturating_sub(1)).for_each(|i| bond(i, i + 1, -1, -1)),
            FiniteType::B(_) => {
                (0..n - 2).for_each(|i| bond(i, i + 1, -1, -1));
                bond(n - 2, n - 1, -1, -2);
            }
            FiniteType::C(_) => {
                (0..n.saturating_sub(2)).for_each(|i| bond(i, i + 1, -1, -1));
                if n >= 2 {
                    bond(n - 2, n - 1, -2, -1);
                }
            }
            FiniteType::D(_) => {
                (0..n - 2).for_each(|i| bond(i, i + 1, -1, -1));
                bond(n - 3, n - 1, -1, -1);
            }
            FiniteType::E6 => {
                for (i, j) in [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5)] {
                    bond(i, j, -1, -1);
                }
            }
            FiniteType::F4 => {
                bond(0, 1, -1, -1);
                bond(1, 2, -2, -1);
                bond(2, 3, -1, -1);
            }
            FiniteType::G2 => bond(0, 1, -3, -1),
        }
        a
    }

    /// `d_i = (alpha_i, alpha_i) / 2` with short roots of squared length 2.
    pub fn symmetrizer(self) -> Vec<i64> {
        let n = self.rank();
        match self {
            FiniteType::A(_) | FiniteType::D(_) | FiniteType::E6 => vec![1; n],
            FiniteType::B(_) => (0..n).map(|i| if i + 1 < n { 2 } else { 1 }).collect(),
            FiniteType::C(_) => (0..n).map(|i| if i + 1 == n { 2 } else { 1 }).collect(),
            FiniteType::F4 => vec![1, 1, 2, 2],
            FiniteType::G2 => vec![1, 3],
        }
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::B(n) => write!(f, "B{n}"),
            FiniteType::C(n) => write!(f, "C{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E6 => f.write_str("E6"),
            FiniteType::F4 => f.write_str("F4"),
            FiniteType::G2 => f.write_str("G2"),
        }
    }
}

impl FromStr for FiniteType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unknown finite type {s:?}"));
        match s.to_ascii_uppercase().as_str() {
            "E6" => return Ok(FiniteType::E6),
            "F4" => return Ok(FiniteType::F4),
            "G2" => return Ok(FiniteType::G2),
            _ => {}
        }
        let (head, tail) = s.split_at(s.len().min(1));
        let n: usize = tail.parse().map_err(|_| bad())?;
        let ty = match head {
            "A" | "a" => FiniteType::A(n),
            "B" | "b" => FiniteType::B(n),
            "C" | "c" => FiniteType::C(n),
            "D" | "d" => FiniteType::D(n),
            _ => return Err(bad()),
        };
        ty.validate()?;
        Ok(ty)
    }
}

/// A positive root in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub coords: Vec<i64>,
    /// `(alpha, alpha) / 2`.
    pub d: i64,
    /// The same root in fundamental-weight coordinates.
    pub weight: Weight,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }
}

/// A finite root system with a fixed symmetrization.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: FiniteType,
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
    positive: Vec<Root>,
    inverse_cartan: Vec<Vec<Ratio<i64>>>,
}

impl RootSystem {
    pub fn new(ty: FiniteType) -> Result<Self> {
        ty.validate()?;
        Ok(Self::from_parts(ty, ty.cartan_matrix(), ty.symmetrizer()))
    }

    fn from_parts(ty: FiniteType, cartan: Vec<Vec<i64>>, sym: Vec<i64>) -> Self {
        let n = cartan.len();
        for i in 0..n {
            for j in 0..n {
                debug_assert_eq!(sym[i] * cartan[i][j], sym[j] * cartan[j][i]);
            }
        }
        let inverse_cartan = invert(&cartan);
        let mut rs = RootSystem { ty, cartan, sym, positive: Vec::new(), inverse_cartan };
        rs.positive = rs.enumerate_positive_roots();
        rs
    }

    /// Closure of the simple roots under `alpha_i`-strings: `beta + alpha_i`
    /// is a root iff `q = p - <beta, alpha_i^vee> > 0`, where `p` is how far
    /// the string extends below `beta`.
    fn enumerate_positive_roots(&self) -> Vec<Root> {
        let n = self.rank();
        let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut layer: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut c = vec![0; n];
                c[i] = 1;
                c
            })
            .collect();
        while !layer.is_empty() {
            all.extend(layer.iter().cloned());
            let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
            for beta in &layer {
                for i in 0..n {
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if all.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..n).map(|j| beta[j] * self.cartan[i][j]).sum();
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        next.insert(up);
                    }
                }
            }
            layer = next.into_iter().collect();
        }
        let mut roots: Vec<Root> = all
            .into_iter()
            .map(|coords| {
                let d = self.root_inner(&coords, &coords) / 2;
                let weight = self.root_to_weight(&coords);
                Root { coords, d, weight }
            })
            .collect();
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.coords.cmp(&b.coords)));
        roots
    }

    pub fn finite_type(&self) -> FiniteType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn max_d(&self) -> i64 {
        *self.sym.iter().max().unwrap_or(&1)
    }

    pub fn is_long(&self, root: &Root) -> bool {
        root.d == self.max_d()
    }

    /// `alpha_{i+1}` in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::new((0..self.rank()).map(|l| self.cartan[l][i]).collect())
    }

    pub fn root_to_weight(&self, coords: &[i64]) -> Weight {
        let n = self.rank();
        Weight::new((0..n).map(|l| (0..n).map(|j| self.cartan[l][j] * coords[j]).sum()).collect())
    }

    /// `(mu, beta)` for `beta` in root coordinates.
    pub fn inner_weight_root(&self, mu: &Weight, coords: &[i64]) -> i64 {
        (0..self.rank()).map(|i| coords[i] * self.sym[i] * mu[i]).sum()
    }

    /// `(beta, gamma)` for two vectors in root coordinates.
    pub fn root_inner(&self, b: &[i64], c: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += b[i] * c[j] * self.sym[i] * self.cartan[i][j];
            }
        }
        s
    }

    /// `<mu, alpha^vee>`.
    pub fn pairing(&self, mu: &Weight, root: &Root) -> i64 {
        let num = self.inner_weight_root(mu, &root.coords);
        debug_assert_eq!(num % root.d, 0);
        num / root.d
    }

    /// Coordinates of `alpha^vee` in the simple-coroot basis.
    pub fn coroot_coords(&self, root: &Root) -> Vec<i64> {
        root.coords.iter().zip(&self.sym).map(|(c, d)| c * d / root.d).collect()
    }

    pub fn reflect_simple(&self, mu: &Weight, i: usize) -> Weight {
        let k = mu[i];
        let mut out = mu.clone();
        for (l, o) in out.coords_mut().iter_mut().enumerate() {
            *o -= k * self.cartan[l][i];
        }
        out
    }

    pub fn reflect(&self, mu: &Weight, root: &Root) -> Weight {
        mu.add_scaled(&root.weight, -self.pairing(mu, root))
    }

    /// The dominant weight in the orbit of `mu` and the (0-based) simple
    /// reflections applied to reach it, in order.
    pub fn dominant_conjugate(&self, mu: &Weight) -> (Weight, Vec<usize>) {
        let mut cur = mu.clone();
        let mut word = Vec::new();
        while let Some(i) = cur.coords().iter().position(|&c| c < 0) {
            cur = self.reflect_simple(&cur, i);
            word.push(i);
        }
        (cur, word)
    }

    pub fn orbit(&self, mu: &Weight) -> Vec<Weight> {
        let (dom, _) = self.dominant_conjugate(mu);
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        seen.insert(dom.clone());
        let mut frontier = vec![dom];
        while let Some(w) = frontier.pop() {
            for i in 0..self.rank() {
                if w[i] > 0 {
                    let r = self.reflect_simple(&w, i);
                    if seen.insert(r.clone()) {
                        frontier.push(r);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn rho(&self) -> Weight {
        Weight::new(vec![1; self.rank()])
    }

    pub fn highest_root(&self) -> &Root {
        self.positive.last().expect("nonempty root system")
    }

    pub fn highest_short_root(&self) -> &Root {
        let dmin = *self.sym.iter().min().unwrap_or(&1);
        self.positive
            .iter()
            .rev()
            .find(|r| r.d == dmin)
            .expect("some short root")
    }

    /// `mu` in the simple-root basis.
    pub fn to_root_coords(&self, mu: &Weight) -> Vec<Ratio<i64>> {
        let n = self.rank();
        (0..n)
            .map(|j| (0..n).map(|i| self.inverse_cartan[j][i] * mu[i]).sum())
            .collect()
    }

    /// Sum of the simple-root coordinates of `mu`; strictly increasing
    /// along the dominance order.
    pub fn height(&self, mu: &Weight) -> Ratio<i64> {
        self.to_root_coords(mu).into_iter().sum()
    }

    /// No coroot vanishes on `mu`.
    pub fn is_regular(&self, mu: &Weight) -> bool {
        self.positive.iter().all(|r| self.pairing(mu, r) != 0)
    }
}

fn invert(a: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = a.len();
    let mut m: Vec<Vec<Ratio<i64>>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Ratio<i64>> = row.iter().map(|&x| Ratio::from_integer(x)).collect();
            r.extend((0..n).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("Cartan matrix is invertible");
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in 0..2 * n {
                    let sub = f * m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(ty: FiniteType) -> usize {
        RootSystem::new(ty).unwrap().positive_roots().len()
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(count(FiniteType::A(1)), 1);
        assert_eq!(count(FiniteType::C(1)), 1);
        assert_eq!(count(FiniteType::A(4)), 10);
        assert_eq!(count(FiniteType::B(3)), 9);
        assert_eq!(count(FiniteType::C(2)), 4);
        assert_eq!(count(FiniteType::C(3)), 9);
        assert_eq!(count(FiniteType::D(4)), 12);
        assert_eq!(count(FiniteType::D(5)), 20);
        assert_eq!(count(FiniteType::G2), 6);
        assert_eq!(count(FiniteType::F4), 24);
        assert_eq!(count(FiniteType::E6), 36);
    }

    #[test]
    fn highest_roots() {
        let g2 = RootSystem::new(FiniteType::G2).unwrap();
        assert_eq!(g2.highest_root().coords, vec![3, 2]);
        assert_eq!(g2.highest_short_root().coords, vec![2, 1]);
        assert_eq!(g2.highest_short_root().weight, Weight::new(vec![1, 0]));
        let f4 = RootSystem::new(FiniteType::F4).unwrap();
        assert_eq!(f4.highest_short_root().coords, vec![2, 3, 2, 1]);
        let c3 = RootSystem::new(FiniteType::C(3)).unwrap();
        assert_eq!(c3.highest_root().weight, Weight::new(vec![2, 0, 0]));
        assert_eq!(c3.highest_short_root().weight, Weight::new(vec![0, 1, 0]));
        let b4 = RootSystem::new(FiniteType::B(4)).unwrap();
        assert_eq!(b4.highest_short_root().weight, Weight::new(vec![1, 0, 0, 0]));
    }

    #[test]
    fn root_lengths_match_symmetrizer() {
        let g2 = RootSystem::new(FiniteType::G2).unwrap();
        let long: usize = g2.positive_roots().iter().filter(|r| g2.is_long(r)).count();
        assert_eq!(long, 3);
        let f4 = RootSystem::new(FiniteType::F4).unwrap();
        assert_eq!(f4.positive_roots().iter().filter(|r| f4.is_long(r)).count(), 12);
    }

    #[test]
    fn root_coords_invert_root_to_weight() {
        let e6 = RootSystem::new(FiniteType::E6).unwrap();
        for r in e6.positive_roots() {
            let back = e6.to_root_coords(&r.weight);
            let ints: Vec<i64> = back.iter().map(|x| x.to_integer()).collect();
            assert_eq!(ints, r.coords);
        }
    }

    #[test]
    fn orbit_sizes() {
        let g2 = RootSystem::new(FiniteType::G2).unwrap();
        assert_eq!(g2.orbit(&Weight::new(vec![1, 0])).len(), 6);
        assert_eq!(g2.orbit(&Weight::new(vec![1, 1])).len(), 12);
        let e6 = RootSystem::new(FiniteType::E6).unwrap();
        assert_eq!(e6.orbit(&Weight::fundamental(6, 1)).len(), 27);
    }

    #[test]
    fn parse_types() {
        assert_eq!("G2".parse::<FiniteType>().unwrap(), FiniteType::G2);
        assert_eq!("c3".parse::<FiniteType>().unwrap(), FiniteType::C(3));
        assert!("D2".parse::<FiniteType>().is_err());
        assert!("X1".parse::<FiniteType>().is_err());
    }
}
