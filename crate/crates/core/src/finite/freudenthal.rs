use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::root_data::RootSystem;
use crate::weights::{GradedCharacter, HalfInt, Weight};
use crate::{Error, Result};

/// Multiplicities of the dominant weights of `V(lambda)` by Freudenthal's
/// recursion.
///
/// With `lambda - mu = sum c_i alpha_i` both sides of the recursion are
/// integers: `(lambda+rho, lambda+rho) - (mu+rho, mu+rho)
/// = sum_i c_i d_i (lambda + mu + 2 rho)_i`.
pub fn dominant_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<BTreeMap<Weight, BigInt>> {
    check(rs, lambda)?;
    let dominant = dominant_weights(rs, lambda);
    let mut mult: BTreeMap<Weight, BigInt> = BTreeMap::new();
    let rho2 = rs.rho().scale(2);
    for mu in &dominant {
        if mu == lambda {
            mult.insert(mu.clone(), BigInt::one());
            continue;
        }
        let depth = rs.to_root_coords(&(lambda - mu));
        let base = &(lambda + mu) + &rho2;
        let denom: i64 = (0..rs.rank())
            .map(|i| depth[i].to_integer() * rs.symmetrizer()[i] * base[i])
            .sum();
        let mut num = BigInt::zero();
        for root in rs.positive_roots() {
            let mut k = 1;
            loop {
                let nu = mu.add_scaled(&root.weight, k);
                let (dom, _) = rs.dominant_conjugate(&nu);
                let Some(m) = mult.get(&dom) else { break };
                num += m * BigInt::from(rs.inner_weight_root(&nu, &root.coords));
                k += 1;
            }
        }
        num *= 2;
        let (q, r) = num.div_rem(&BigInt::from(denom));
        debug_assert!(r.is_zero(), "Freudenthal division at {mu}");
        if !q.is_zero() {
            mult.insert(mu.clone(), q);
        }
    }
    Ok(mult)
}

/// Dominant weights below `lambda`, by decreasing height.
fn dominant_weights(rs: &RootSystem, lambda: &Weight) -> Vec<Weight> {
    let mut seen: BTreeMap<Weight, ()> = BTreeMap::new();
    seen.insert(lambda.clone(), ());
    let mut frontier = alloc::vec![lambda.clone()];
    while let Some(mu) = frontier.pop() {
        for root in rs.positive_roots() {
            let k = rs.pairing(&mu, root);
            for j in 1..=k {
                let (dom, _) = rs.dominant_conjugate(&mu.add_scaled(&root.weight, -j));
                if seen.insert(dom.clone(), ()).is_none() {
                    frontier.push(dom);
                }
            }
        }
    }
    let mut out: Vec<(Ratio<i64>, Weight)> =
        seen.into_keys().map(|w| (rs.height(&w), w)).collect();
    out.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| b.1.cmp(&a.1)));
    out.into_iter().map(|(_, w)| w).collect()
}

fn check(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    if lambda.rank() != rs.rank() {
        return Err(Error::RankMismatch { left: rs.rank(), right: lambda.rank() });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    Ok(())
}

/// `ch V(lambda)`, level 0, grade 0.
pub fn irreducible_character(rs: &RootSystem, lambda: &Weight) -> Result<GradedCharacter> {
    let dom = dominant_multiplicities(rs, lambda)?;
    let mut ch = GradedCharacter::zero(rs.rank(), 0);
    for (mu, m) in &dom {
        for w in rs.orbit(mu) {
            ch.add_term_unchecked(w, HalfInt::ZERO, m);
        }
    }
    Ok(ch)
}

/// `prod_{alpha > 0} <lambda + rho, alpha^vee> / <rho, alpha^vee>`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<BigInt> {
    check(rs, lambda)?;
    let rho = rs.rho();
    let shifted = lambda + &rho;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for root in rs.positive_roots() {
        num *= rs.inner_weight_root(&shifted, &root.coords);
        den *= rs.inner_weight_root(&rho, &root.coords);
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    Ok(q)
}

/// Irreducible multiplicities, keyed by highest weight.
pub type Decomposition = BTreeMap<Weight, BigInt>;

/// Writes `f` (grades forgotten) as a combination of irreducible
/// characters by repeatedly peeling off the highest remaining weight.
///
/// "Highest" is the largest height, ties broken by larger weight in lex
/// order; a maximal-height weight of a Weyl-invariant combination is
/// dominant, so a non-dominant pick or a negative multiplicity means `f` is
/// not a character.
pub fn decompose(rs: &RootSystem, f: &GradedCharacter) -> Result<Decomposition> {
    if f.rank() != rs.rank() {
        return Err(Error::RankMismatch { left: rs.rank(), right: f.rank() });
    }
    let mut rest = f.weight_multiplicities();
    let mut out = Decomposition::new();
    let mut cache: BTreeMap<Weight, BTreeMap<Weight, BigInt>> = BTreeMap::new();
    while !rest.is_empty() {
        let (top, coeff) = rest
            .iter()
            .max_by(|a, b| rs.height(a.0).cmp(&rs.height(b.0)).then_with(|| a.0.cmp(b.0)))
            .map(|(w, c)| (w.clone(), c.clone()))
            .expect("nonempty");
        if coeff.is_negative() || !top.is_dominant() {
            return Err(Error::NotACharacter { weight: top, coeff: coeff.to_string() });
        }
        let ch = match cache.get(&top) {
            Some(c) => c,
            None => {
                let c = irreducible_character(rs, &top)?.weight_multiplicities();
                cache.entry(top.clone()).or_insert(c)
            }
        };
        for (w, m) in ch {
            let e = rest.entry(w.clone()).or_insert_with(BigInt::zero);
            *e -= &coeff * m;
            if e.is_zero() {
                rest.remove(w);
            }
        }
        out.insert(top, coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::FiniteType;
    use alloc::vec;

    fn rs(t: FiniteType) -> RootSystem {
        RootSystem::new(t).unwrap()
    }

    fn w(v: &[i64]) -> Weight {
        Weight::from(v)
    }

    #[test]
    fn known_dimensions() {
        let g2 = rs(FiniteType::G2);
        assert_eq!(weyl_dimension(&g2, &w(&[1, 0])).unwrap(), BigInt::from(7));
        assert_eq!(weyl_dimension(&g2, &w(&[0, 1])).unwrap(), BigInt::from(14));
        let f4 = rs(FiniteType::F4);
        assert_eq!(weyl_dimension(&f4, &w(&[1, 0, 0, 0])).unwrap(), BigInt::from(26));
        assert_eq!(weyl_dimension(&f4, &w(&[0, 0, 0, 1])).unwrap(), BigInt::from(52));
        let c2 = rs(FiniteType::C(2));
        assert_eq!(weyl_dimension(&c2, &w(&[0, 1])).unwrap(), BigInt::from(5));
        let e6 = rs(FiniteType::E6);
        assert_eq!(weyl_dimension(&e6, &w(&[1, 0, 0, 0, 0, 0])).unwrap(), BigInt::from(27));
        assert_eq!(weyl_dimension(&e6, &w(&[0, 0, 0, 1, 0, 0])).unwrap(), BigInt::from(78));
    }

    #[test]
    fn freudenthal_matches_weyl_dimension() {
        let cases: Vec<(FiniteType, Vec<i64>)> = vec![
            (FiniteType::G2, vec![1, 1]),
            (FiniteType::G2, vec![2, 1]),
            (FiniteType::C(3), vec![1, 0, 1]),
            (FiniteType::B(3), vec![0, 1, 1]),
            (FiniteType::F4, vec![1, 0, 0, 1]),
            (FiniteType::E6, vec![1, 0, 0, 0, 0, 1]),
            (FiniteType::D(4), vec![1, 1, 0, 1]),
        ];
        for (t, lam) in cases {
            let r = rs(t);
            let ch = irreducible_character(&r, &w(&lam)).unwrap();
            assert_eq!(ch.dimension(), weyl_dimension(&r, &w(&lam)).unwrap(), "{t} {lam:?}");
        }
    }

    #[test]
    fn g2_adjoint_zero_weight_multiplicity() {
        let m = dominant_multiplicities(&rs(FiniteType::G2), &w(&[0, 1])).unwrap();
        assert_eq!(m[&w(&[0, 0])], BigInt::from(2));
        assert_eq!(m[&w(&[1, 0])], BigInt::from(1));
    }

    #[test]
    fn decompose_tensor_square() {
        let a2 = rs(FiniteType::A(2));
        let v = irreducible_character(&a2, &w(&[1, 0])).unwrap();
        let d = decompose(&a2, &v.mul(&v).unwrap()).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d[&w(&[2, 0])], BigInt::one());
        assert_eq!(d[&w(&[0, 1])], BigInt::one());
    }

    #[test]
    fn decompose_rejects_non_characters() {
        let a1 = rs(FiniteType::A(1));
        let f = GradedCharacter::monomial(0, w(&[1]), HalfInt::ZERO);
        assert!(matches!(decompose(&a1, &f), Err(Error::NotACharacter { .. })));
    }
}
