//! Radicals, Loewy series and block decompositions of random algebras with
//! known structure and of centres of small group algebras.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use loewy::field::{prime_divisors, Field, GaloisField};
use loewy::group::builtin;
use loewy::zalg::{
    annotate_blocks, component_loewy, decompose_blocks, loewy_series, radical, radical_basis_single_block,
};

use common::{block_suite, center, class_data, expected_layers, radical_suite, random_algebra, split_center};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_algebra_radical(seed in any::<u64>(), p in proptest::sample::select(vec![2u32, 3, 5, 7])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, pieces) = random_algebra(&mut rng, p, 8);
        prop_assert!(a.is_commutative() && a.is_associative());
        radical_suite(&a).map_err(TestCaseError::fail)?;
        let j = radical(&a).unwrap();
        let top: usize = pieces.len();
        prop_assert_eq!(j.dim(), a.dim() - top);
        prop_assert_eq!(loewy_series(&a).unwrap().layers, expected_layers(&pieces));
    }

    #[test]
    fn random_algebra_blocks(seed in any::<u64>(), p in proptest::sample::select(vec![2u32, 3, 5])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, pieces) = random_algebra(&mut rng, p, 8);
        let d = decompose_blocks(&a).unwrap();
        prop_assert!(d.is_split());
        let mut got: Vec<(usize, Vec<usize>)> = d
            .blocks
            .iter()
            .map(|b| (b.dim, component_loewy(&a, &d.radical, &b.idempotent).unwrap().layers))
            .collect();
        let mut want: Vec<(usize, Vec<usize>)> = pieces.iter().map(|pc| (pc.dim(), pc.layers())).collect();
        got.sort();
        want.sort();
        prop_assert_eq!(got, want);
        // same idempotents on a second run
        let again = decompose_blocks(&a).unwrap();
        prop_assert_eq!(
            d.blocks.iter().map(|b| b.idempotent.clone()).collect::<Vec<_>>(),
            again.blocks.iter().map(|b| b.idempotent.clone()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn base_change_invariance(seed in any::<u64>(), p in proptest::sample::select(vec![2u32, 3]), m in 2u32..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, _) = random_algebra(&mut rng, p, 8);
        let e = a.base_change(GaloisField::new(p, m)).unwrap();
        prop_assert_eq!(loewy_series(&e).unwrap(), loewy_series(&a).unwrap());
        radical_suite(&e).map_err(TestCaseError::fail)?;
    }
}

fn small_groups() -> Vec<loewy::group::EnumeratedGroup> {
    let cap = 100_000;
    ["s3", "s4", "a4", "a5", "d8", "d10", "d12", "c6", "s3xc2", "s5", "m11"]
        .iter()
        .map(|n| builtin::builtin_group(n, cap).unwrap())
        .collect()
}

#[test]
fn group_centres() {
    for g in small_groups() {
        let (data, t) = class_data(&g);
        for p in prime_divisors(g.order() as u128) {
            let a = center(&data, &t, p as u32);
            radical_suite(&a).unwrap_or_else(|e| panic!("{:?} mod {p}: {e}", g.name()));
            let s = split_center(&a);
            radical_suite(&s).unwrap();
            block_suite(&s, &data).unwrap_or_else(|e| panic!("{:?} mod {p}: {e}", g.name()));
            assert_eq!(loewy_series(&s).unwrap(), loewy_series(&a).unwrap());
        }
    }
}

#[test]
fn single_block_radical() {
    for g in small_groups() {
        let (data, t) = class_data(&g);
        for p in prime_divisors(g.order() as u128) {
            let a = split_center(&center(&data, &t, p as u32));
            let d = decompose_blocks(&a).unwrap();
            let r = radical_basis_single_block(&a, &data.sizes);
            if d.len() == 1 {
                assert_eq!(r.unwrap().dim(), radical(&a).unwrap().dim());
            } else {
                assert!(r.is_err());
            }
        }
    }
}

/// When every non-principal block has defect zero, J^n(Z(kG)) = J^n(Z(B0))
/// for n ≥ 1.
#[test]
fn defect_zero_blocks_do_not_change_the_radical() {
    let mut cases = 0;
    for g in small_groups() {
        let (data, t) = class_data(&g);
        for p in prime_divisors(g.order() as u128) {
            let a = split_center(&center(&data, &t, p as u32));
            let mut d = decompose_blocks(&a).unwrap();
            annotate_blocks(&a, &mut d, &data).unwrap();
            if !d.blocks.iter().all(|b| b.is_principal || b.defect == Some(0)) {
                continue;
            }
            cases += 1;
            let whole = loewy_series(&a).unwrap();
            let b0 = component_loewy(&a, &d.radical, &d.principal().unwrap().idempotent).unwrap();
            for n in 1..whole.layers.len().max(b0.layers.len()) {
                assert_eq!(whole.layer(n), b0.layer(n), "{:?} mod {p}, n = {n}", g.name());
            }
        }
    }
    assert!(cases >= 5);
}

#[test]
fn principal_block_of_a_p_group_is_everything() {
    for (g, p) in [(builtin::dihedral(8).unwrap(), 2u32), (builtin::cyclic(9).unwrap(), 3)] {
        let (data, t) = class_data(&g);
        let a = center(&data, &t, p);
        let d = decompose_blocks(&a).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(radical(&a).unwrap().dim(), a.dim() - 1);
        assert!(a.field().characteristic() == p);
    }
}
