//! Checks that need no characters: the interpolation matrices, the index
//! sets `S`, `S~` and their splittings, and the exponents of the
//! simplified presentations.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::report::{VerificationReport, Witness};
use crate::matrices::{check_instance, random_instance, MatrixCase};
use crate::presentations::{
    build_xi, concat, demazure_exponent, enum_s, enum_s_bounded_above, enum_s_bounded_below, enum_s_tilde,
    enum_s_tilde_below, simplified_relations, split_s, split_s_tilde, theorem_relations, Convention,
    PartitionTuple, RelationDescriptor, RootForm,
};
use crate::root_data::RootSystemData;
use crate::weights::{HalfInt, Weight};
use crate::Result;

fn case_name(case: MatrixCase) -> alloc::string::String {
    match case {
        MatrixCase::First => "m1".to_string(),
        MatrixCase::Second { m } => format!("m2(m={m})"),
    }
}

/// `cases` random instances of one matrix family; every determinant must
/// be nonzero and the two elimination routes must agree.
pub fn verify_matrices(case: MatrixCase, cases: usize, max_size: u32, seed: u64) -> VerificationReport {
    let mut rep = VerificationReport::new("matrices")
        .param("case", case_name(case))
        .param("cases", cases)
        .param("max_size", max_size)
        .param("seed", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut largest = 0;
    for _ in 0..cases {
        let inst = random_instance(&mut rng, case, max_size);
        match check_instance(&inst) {
            Ok(out) => {
                largest = largest.max(out.size);
                if !out.invertible() {
                    rep.fail(Witness::Matrix {
                        instance: format!("parts={:?} z={:?} d={} c={}", inst.parts, inst.z, inst.d, inst.c),
                        determinant: format!("{} (rank {}, routes agree: {})", out.determinant, out.rank, out.routes_agree),
                    });
                }
            }
            Err(e) => rep.fail(Witness::Error(e.to_string())),
        }
    }
    rep.detail(format!("largest size {largest}"));
    rep
}

fn index_fail(rep: &mut VerificationReport, r: HalfInt, s: HalfInt, k: usize, detail: alloc::string::String) {
    rep.fail(Witness::IndexSet { r, s, k, detail });
}

/// Exhaustive checks of the index-set combinatorics for `r <= rmax`,
/// `s <= smax` (half steps for `S~`) and `k <= kmax`:
/// both splittings are bijections, the two support bounds on
/// `S~_{<k+1/2}` and `S~_{<k}` hold, `S(r, s)_k` nonempty forces
/// `s <= (k-1) r`, `_kS(r, kr)` is the single sequence `b_k = r`, and
/// every nonempty cell of the `S~` splitting lies in `T(r, s, k)` for the
/// largest admissible `K`.
pub fn verify_index_sets(rmax: u32, smax: u32, kmax: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("indexsets")
        .param("rmax", rmax)
        .param("smax", smax)
        .param("kmax", kmax);
    let mut elements = 0usize;
    for r in 0..=rmax {
        for s in 0..=smax {
            let full = enum_s(r, s);
            elements += full.len();
            let (rh, sh) = (HalfInt::from_int(r as i64), HalfInt::from_int(s as i64));
            for k in 0..=kmax {
                check_split_s(&mut rep, r, s, k, &full);
                let low = enum_s_bounded_above(r, s, k);
                if !low.is_empty() && (s as i64) > (k as i64 - 1) * r as i64 {
                    index_fail(&mut rep, rh, sh, k, "S(r,s)_k nonempty but s > (k-1)r".to_string());
                }
                if s as u64 == k as u64 * r as u64 {
                    let mut single = alloc::vec![0u32; k + 1];
                    single[k] = r;
                    if r == 0 {
                        single.clear();
                    }
                    if enum_s_bounded_below(r, s, k) != alloc::vec![single] {
                        index_fail(&mut rep, rh, sh, k, "_kS(r,kr) is not the single sequence b_k = r".to_string());
                    }
                }
            }
        }
    }
    for r2 in 0..=2 * rmax as i64 {
        for s2 in 0..=2 * smax as i64 {
            if (r2 + s2) % 2 != 0 {
                continue;
            }
            let (r, s) = (HalfInt::from_halves(r2), HalfInt::from_halves(s2));
            let full = enum_s_tilde(r, s);
            elements += full.len();
            for k in 0..=kmax {
                check_split_s_tilde(&mut rep, r, s, k, &full);
                check_tilde_bounds(&mut rep, r, s, k);
            }
        }
    }
    rep.detail(format!("{elements} sequences enumerated"));
    rep
}

fn check_split_s(rep: &mut VerificationReport, r: u32, s: u32, k: usize, full: &[Vec<u32>]) {
    let split = split_s(r, s, k);
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut count = 0usize;
    let mut duplicate = false;
    for b in &split.high {
        count += 1;
        duplicate |= !seen.insert(b.clone());
    }
    for cell in &split.cells {
        for lo in &cell.low {
            for hi in &cell.high {
                count += 1;
                duplicate |= !seen.insert(concat(lo, hi));
            }
        }
    }
    let target: BTreeSet<Vec<u32>> = full.iter().cloned().collect();
    if duplicate || count != full.len() || seen != target {
        let (r, s) = (HalfInt::from_int(r as i64), HalfInt::from_int(s as i64));
        index_fail(rep, r, s, k, format!("S splitting has {count} elements against {}", full.len()));
    }
}

fn check_split_s_tilde(rep: &mut VerificationReport, r: HalfInt, s: HalfInt, k: usize, full: &[Vec<u32>]) {
    let split = split_s_tilde(r, s, k);
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut count = 0usize;
    let mut duplicate = false;
    for p in &split.high {
        count += 1;
        duplicate |= !seen.insert(p.clone());
    }
    // Largest K with s + r >= (2k+1) r + K, in halves.
    let big_k = s.halves() - 2 * k as i64 * r.halves();
    for cell in &split.cells {
        if big_k >= 0 && cell.s.halves() + cell.r.halves() < (2 * k as i64 + 1) * cell.r.halves() + big_k {
            index_fail(rep, r, s, k, format!("cell ({}, {}) lies outside T(r,s,k) for K = {}", cell.r, cell.s, HalfInt::from_halves(big_k)));
        }
        for lo in &cell.low {
            for hi in &cell.high {
                count += 1;
                duplicate |= !seen.insert(concat(lo, hi));
            }
        }
    }
    let target: BTreeSet<Vec<u32>> = full.iter().cloned().collect();
    if duplicate || count != full.len() || seen != target {
        index_fail(rep, r, s, k, format!("S~ splitting has {count} elements against {}", full.len()));
    }
}

/// `s <= (2k-1) r + sum_{N <= k} p_N` on `S~_{<k+1/2}(r, s)` and
/// `s <= 2(k-1) r + sum_{N <= k-1} p_{N+1/2} / 2` on `S~_{<k}(r, s)`,
/// both in halves.
fn check_tilde_bounds(rep: &mut VerificationReport, r: HalfInt, s: HalfInt, k: usize) {
    let k = k as i64;
    let at = |p: &[u32], j: i64| -> i64 { p.get(j as usize).copied().unwrap_or(0) as i64 };
    for p in enum_s_tilde_below(r, s, HalfInt::from_int(k) + HalfInt::HALF) {
        let integral: i64 = (0..=k).map(|n| at(&p, 2 * n)).sum();
        if s.halves() > (2 * k - 1) * r.halves() + 2 * integral {
            index_fail(rep, r, s, k as usize, format!("{p:?} breaks the bound on S~_<k+1/2"));
        }
    }
    if k >= 1 {
        for p in enum_s_tilde_below(r, s, HalfInt::from_int(k)) {
            let half: i64 = (0..k).map(|n| at(&p, 2 * n + 1)).sum();
            if s.halves() > 2 * (k - 1) * r.halves() + half {
                index_fail(rep, r, s, k as usize, format!("{p:?} breaks the bound on S~_<k"));
            }
        }
    }
}

/// `r` such that the descriptor sits at `d_alpha r` (full) or `r + 1/2`
/// (half).
fn relation_r(rel: &RelationDescriptor, d: i64) -> Option<i64> {
    match rel.form {
        RootForm::Full => {
            let v = rel.delta.to_integer()?;
            (v % d == 0).then_some(v / d)
        }
        RootForm::Half => (rel.delta - HalfInt::HALF).to_integer(),
    }
}

/// The presentation exponents at `r in {s_alpha - 1, s_alpha}` against
/// the Demazure exponents `(lambda(alpha^vee) - l r)_+ + 1` and
/// `(2 lambda(alpha^vee) - l(2r+1))_+ + 1`, for one `(level, lambda)`.
///
/// Rectangular entries carry no relation at `s_alpha - 1`; there the value
/// of the fat-hook formula (`m_alpha + 1`, resp. `(2 m_alpha - l)_+ + 1`)
/// is compared instead. Every descriptor of `simplified_relations` is
/// checked as well.
pub fn verify_presentation(rsd: &RootSystemData, level: i64, lambda: &Weight) -> VerificationReport {
    let mut rep = VerificationReport::new("presentation")
        .param("type", rsd.descriptor().label())
        .param("level", level)
        .param("lambda", lambda);
    if let Err(e) = presentation_into(rsd, level, lambda, &mut rep) {
        rep = rep.error(e);
    }
    rep
}

fn presentation_into(rsd: &RootSystemData, level: i64, lambda: &Weight, rep: &mut VerificationReport) -> Result<()> {
    let xi: PartitionTuple = build_xi(rsd, level, lambda)?;
    let theorem = theorem_relations(rsd, &xi)?;
    let hyper = xi.convention == Convention::Hyperspecial;
    let fin = rsd.finite();
    for root in fin.positive_roots() {
        let pairing = fin.pairing(lambda, root);
        let e = xi.entry(&root.coords).expect("one entry per positive root");
        let (s, m) = (e.s as i64, e.m as i64);
        let mut forms = alloc::vec![RootForm::Full];
        if hyper && rsd.is_long(root) {
            forms.push(RootForm::Half);
        }
        for form in forms {
            for r in [s - 1, s] {
                if r < 0 {
                    continue;
                }
                let expected = demazure_exponent(pairing, level, form, r);
                let listed = theorem
                    .iter()
                    .find(|rel| rel.root == root.coords && rel.form == form && relation_r(rel, root.d) == Some(r));
                let found = match (listed, form) {
                    (Some(rel), _) => rel.exponent,
                    (None, RootForm::Full) if r == s - 1 => (m + 1) as u32,
                    (None, RootForm::Half) if r == s - 1 => ((2 * m - level).max(0) + 1) as u32,
                    (None, _) => 0,
                };
                if found != expected {
                    rep.fail(Witness::Relation {
                        expected: format!("{:?} {:?} r={r}: exponent {expected}", root.coords, form),
                        found: format!("{found}"),
                    });
                }
            }
        }
    }
    for rel in simplified_relations(rsd, &xi)? {
        let root = fin
            .positive_roots()
            .iter()
            .find(|x| x.coords == rel.root)
            .expect("relations are over positive roots");
        let pairing = fin.pairing(lambda, root);
        let expected = relation_r(&rel, root.d).map(|r| demazure_exponent(pairing, level, rel.form, r));
        if expected != Some(rel.exponent) {
            rep.fail(Witness::Relation {
                expected: format!("{expected:?}"),
                found: format!("{rel}"),
            });
        }
    }
    Ok(())
}

/// `verify_presentation` over `1 <= level <= max_level` and every dominant
/// `lambda` with coordinates at most `max_coord`, folded into one report.
pub fn verify_presentation_grid(rsd: &RootSystemData, max_level: i64, max_coord: i64) -> VerificationReport {
    let mut rep = VerificationReport::new("presentation")
        .param("type", rsd.descriptor().label())
        .param("max_level", max_level)
        .param("max_coord", max_coord);
    let n = rsd.rank();
    let mut count = 0usize;
    for level in 1..=max_level {
        let mut coords = alloc::vec![0i64; n];
        loop {
            let one = verify_presentation(rsd, level, &Weight::new(coords.clone()));
            count += 1;
            if one.failed() {
                rep.detail(one.case_id());
                rep.fail(one.witness.clone().unwrap_or(Witness::Error("missing witness".to_string())));
            }
            // Odometer over 0..=max_coord.
            let mut j = 0;
            while j < n && coords[j] == max_coord {
                coords[j] = 0;
                j += 1;
            }
            if j == n {
                break;
            }
            coords[j] += 1;
        }
    }
    rep.detail(format!("{count} (level, lambda) pairs"));
    rep
}
