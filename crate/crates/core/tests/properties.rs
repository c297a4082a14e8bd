use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use twistdem_core::demazure::demazure_character;
use twistdem_core::finite::{decompose, irreducible_character, weyl_dimension};
use twistdem_core::matrices::{check_instance, random_instance, MatrixCase};
use twistdem_core::presentations::{enum_s, enum_s_tilde, phi, tilde_r_s};
use twistdem_core::verify::random_character;
use twistdem_core::weights::{canonical_lift, restrict_parent_weight, sigma_fiber};
use twistdem_core::*;

fn family() -> impl Strategy<Value = RootSystemData> {
    prop_oneof![
        Just((TwistedFamily::A2n, 1)),
        Just((TwistedFamily::A2n, 2)),
        Just((TwistedFamily::A2nMinus1, 3)),
        Just((TwistedFamily::DnPlus1, 4)),
        Just((TwistedFamily::E6, 4)),
        Just((TwistedFamily::D4, 2)),
    ]
    .prop_map(|(f, n)| RootSystemData::for_family(f, n).unwrap())
}

fn small_rank2() -> impl Strategy<Value = RootSystemData> {
    prop_oneof![Just((TwistedFamily::A2n, 1)), Just((TwistedFamily::A2n, 2)), Just((TwistedFamily::D4, 2))]
        .prop_map(|(f, n)| RootSystemData::for_family(f, n).unwrap())
}

fn character(rank: usize, seed: u64) -> GradedCharacter {
    random_character(&mut ChaCha8Rng::seed_from_u64(seed), rank, 0, 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn halfint_text_round_trip(h in -200i64..200) {
        let x = HalfInt::from_halves(h);
        prop_assert_eq!(x.to_string().parse::<HalfInt>().unwrap(), x);
        prop_assert_eq!(x - x, HalfInt::ZERO);
        prop_assert_eq!((x + HalfInt::HALF).halves(), h + 1);
        prop_assert_eq!(x.floor() * 2 <= h, true);
    }

    #[test]
    fn character_ring_laws(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (x, y, z) = (character(2, a), character(2, b), character(2, c));
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        prop_assert_eq!(
            x.mul(&y.add(&z).unwrap()).unwrap(),
            x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(x.mul(&y).unwrap().forget_grade(), x.forget_grade().mul(&y.forget_grade()).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap().dimension(), x.dimension() * y.dimension());
        prop_assert!(x.sub(&x).unwrap().is_empty());
    }

    #[test]
    fn demazure_operators_are_idempotent(rsd in family(), seed in any::<u64>(), node in 0usize..5, level in 1i64..4) {
        let node = node % (rsd.rank() + 1);
        let f = random_character(&mut ChaCha8Rng::seed_from_u64(seed), rsd.rank(), level, 5);
        let action = rsd.action();
        let once = action.demazure_operator(node, &f).unwrap();
        prop_assert_eq!(action.demazure_operator(node, &once).unwrap(), once);
    }

    #[test]
    fn restriction_inverts_canonical_lift(rsd in family(), coords in prop::collection::vec(0i64..4, 4)) {
        let lambda = Weight::new(coords[..rsd.rank()].to_vec());
        let folding = rsd.folding();
        prop_assert_eq!(restrict_parent_weight(folding, &canonical_lift(folding, &lambda)), lambda.clone());
        let fiber = sigma_fiber(folding, &lambda, None).unwrap();
        prop_assert!(fiber.contains(&canonical_lift(folding, &lambda)));
        for lift in fiber {
            prop_assert!(lift.is_dominant());
            prop_assert_eq!(restrict_parent_weight(folding, &lift), lambda.clone());
        }
    }

    #[test]
    fn index_sequences_have_their_r_and_s(r in 0u32..6, s in 0u32..8, rh in 0i64..10, sh in 0i64..10) {
        for b in enum_s(r, s) {
            prop_assert_eq!(b.iter().sum::<u32>(), r);
            prop_assert_eq!(b.iter().enumerate().map(|(p, &x)| p as u32 * x).sum::<u32>(), s);
        }
        let sh = sh + (rh + sh) % 2;
        let (r, s) = (HalfInt::from_halves(rh), HalfInt::from_halves(sh));
        for p in enum_s_tilde(r, s) {
            prop_assert_eq!(tilde_r_s(&p), (r, s));
        }
    }

    #[test]
    fn phi_on_rectangles(l in 1u32..6, s in 2usize..6, k in 0usize..4) {
        // xi_0 = l followed by s parts equal to l.
        let parts = vec![l; s + 1];
        if k + 2 <= s {
            let expected = HalfInt::from_int(((s - k - 1) as u32 * l) as i64) + HalfInt::from_halves(l as i64);
            prop_assert_eq!(phi(&parts, k), expected);
        }
    }

    #[test]
    fn matrix_instances_are_invertible(seed in any::<u64>(), which in 0u32..3) {
        let case = match which {
            0 => MatrixCase::First,
            1 => MatrixCase::Second { m: 2 },
            _ => MatrixCase::Second { m: 3 },
        };
        let inst = random_instance(&mut ChaCha8Rng::seed_from_u64(seed), case, 5);
        prop_assert!(check_instance(&inst).unwrap().invertible());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn demazure_characters_are_weyl_invariant(rsd in small_rank2(), coords in prop::collection::vec(0i64..3, 2), level in 1i64..3) {
        let lambda = Weight::new(coords[..rsd.rank()].to_vec());
        let ch = demazure_character(&rsd, level, &lambda).unwrap();
        prop_assert!(ch.has_nonnegative_coefficients());
        prop_assert_eq!(ch.coefficient(&-&lambda, HalfInt::ZERO), BigInt::from(1));
        let mults = ch.classical().weight_multiplicities();
        let fin = rsd.finite();
        for (mu, c) in &mults {
            for i in 0..fin.rank() {
                let image = fin.reflect_simple(mu, i);
                prop_assert_eq!(mults.get(&image), Some(c));
            }
        }
        // A g-module: it decomposes with nonnegative multiplicities.
        for (_, m) in decompose(fin, &ch.classical()).unwrap() {
            prop_assert!(m > BigInt::from(0));
        }
    }

    #[test]
    fn irreducibles_decompose_to_themselves(rsd in family(), coords in prop::collection::vec(0i64..2, 4)) {
        let lambda = Weight::new(coords[..rsd.rank()].to_vec());
        let fin = rsd.finite();
        let ch = irreducible_character(fin, &lambda).unwrap();
        prop_assert_eq!(ch.dimension(), weyl_dimension(fin, &lambda).unwrap());
        let d = decompose(fin, &ch).unwrap();
        prop_assert_eq!(d.len(), 1);
        prop_assert_eq!(d.get(&lambda), Some(&BigInt::from(1)));
    }
}
