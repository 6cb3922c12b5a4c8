//! Structure-constant algebras: centres of group algebras, their radicals,
//! Loewy series and block decompositions.

mod algebra;
mod blocks;
mod radical;

pub use algebra::{center_algebra, extend_scalars, SCAlgebra, Subspace};
pub use blocks::{
    annotate_blocks, augmentation_generators, block_central_character, block_defect, decompose_blocks,
    full_defect_count_check, principal_block, radical_basis_single_block, verify_decomposition, Block,
    BlockDecomposition, FullDefectCount,
};
pub use radical::{
    component, component_loewy, frobenius_depth, frobenius_operator, loewy_chain, loewy_series, power_chain, radical,
    LoewyReport,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, GaloisField, PrimeField};
    use crate::group::{builtin, class_mult_table, ConjugacyClassSet};

    fn group_center(g: &crate::group::EnumeratedGroup, p: u32) -> (SCAlgebra<PrimeField>, crate::classdata::ClassData) {
        let ccs = ConjugacyClassSet::compute(g);
        let data = ccs.to_class_data(g);
        let t = class_mult_table(g, &ccs);
        (center_algebra(PrimeField::new(p), &data, &t).unwrap(), data)
    }

    /// Algebra on basis {1, x} with the given x².
    fn two_dim(field: PrimeField, x2: [i64; 2]) -> SCAlgebra<PrimeField> {
        let f = &field;
        let c = |v: i64| f.from_int(v);
        let consts = vec![c(1), c(0), c(0), c(1), c(0), c(1), c(x2[0]), c(x2[1])];
        SCAlgebra::new(field.clone(), 2, consts, vec![c(1), c(0)], vec!["1".into(), "x".into()]).unwrap()
    }

    #[test]
    fn s3_mod_3_relations() {
        let (a, _) = group_center(&builtin::symmetric(3).unwrap(), 3);
        let f = a.field().clone();
        let (t, c) = (a.basis_vector(1), a.basis_vector(2));
        assert!(a.is_zero(&a.mul(&t, &t)));
        // c² = c + 2
        let want = a.add(&c, &a.scale(&f.from_int(2), a.unit()));
        assert_eq!(a.mul(&c, &c), want);
        assert_eq!(a.mul(&t, &c), a.scale(&f.from_int(2), &t));
        assert_eq!(frobenius_operator(&a).rank(), 1);
        let j = radical(&a).unwrap();
        assert_eq!(j.dim(), 2);
        assert!(j.contains(&t));
        assert!(j.contains(&a.add(&c, a.unit())));
        assert!(a.product_space(&j, &j).unwrap().is_zero());
        let rep = loewy_series(&a).unwrap();
        assert_eq!(rep.layers, vec![3, 2, 0]);
        assert_eq!(rep.loewy_length, 2);
    }

    #[test]
    fn small_radicals() {
        let a = two_dim(PrimeField::new(2), [0, 0]);
        let fr = frobenius_operator(&a);
        assert_eq!(fr.row(0), &[1, 0]);
        assert_eq!(fr.row(1), &[0, 0]);
        assert_eq!(radical(&a).unwrap().dim(), 1);
        // GF(3) × GF(3) as k[x]/(x² − x)
        let b = two_dim(PrimeField::new(3), [0, 1]);
        let fr = frobenius_operator(&b);
        assert_eq!(fr.row(0), &[1, 0]);
        assert_eq!(fr.row(1), &[0, 1]);
        assert_eq!(radical(&b).unwrap().dim(), 0);
    }

    #[test]
    fn s3_blocks() {
        let g = builtin::symmetric(3).unwrap();
        let (a, data) = group_center(&g, 3);
        let mut d = decompose_blocks(&a).unwrap();
        assert_eq!(d.len(), 1);
        annotate_blocks(&a, &mut d, &data).unwrap();
        let b = &d.blocks[0];
        assert!(b.is_principal);
        assert_eq!(b.defect, Some(1));
        assert_eq!(b.central_character.as_ref().unwrap(), &vec![1, 0, 2]);
        assert_eq!(full_defect_count_check(&d, &data, 3).equal, true);

        let (a, data) = group_center(&g, 2);
        let mut d = decompose_blocks(&a).unwrap();
        annotate_blocks(&a, &mut d, &data).unwrap();
        let dims: Vec<usize> = d.blocks.iter().map(|b| b.dim).collect();
        assert_eq!(dims, vec![2, 1]);
        assert!(d.blocks[0].is_principal);
        assert_eq!(d.blocks[0].defect, Some(1));
        assert_eq!(d.blocks[1].defect, Some(0));
        assert_eq!(d.blocks[1].central_character.as_ref().unwrap(), &vec![1, 0, 1]);
        assert_eq!(
            component_loewy(&a, &d.radical, &d.blocks[1].idempotent).unwrap().layers,
            vec![1, 0]
        );
    }

    #[test]
    fn extension_splits_x2_plus_1() {
        let a = two_dim(PrimeField::new(3), [-1, 0]);
        let d = decompose_blocks(&a).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.blocks[0].residue_degree, 2);
        assert_eq!(d.splitting_degree(), 2);
        let e = extend_scalars(&a, 2).unwrap();
        let d2 = decompose_blocks(&e).unwrap();
        assert_eq!(d2.len(), 2);
        assert!(d2.is_split());
        let e1 = extend_scalars(&a, 1).unwrap();
        assert_eq!(e1.dim(), a.dim());
        assert_eq!(decompose_blocks(&e1).unwrap().len(), 1);
    }

    #[test]
    fn trivial_group_center() {
        let g = builtin::cyclic(1).unwrap();
        let (a, _) = group_center(&g, 5);
        assert_eq!(a.dim(), 1);
        assert_eq!(loewy_series(&a).unwrap().layers, vec![1, 0]);
    }

    #[test]
    fn single_block_radical_basis() {
        let g = builtin::symmetric(3).unwrap();
        let (a, data) = group_center(&g, 3);
        assert_eq!(radical_basis_single_block(&a, &data.sizes).unwrap().dim(), 2);
        let (a, data) = group_center(&g, 2);
        assert!(radical_basis_single_block(&a, &data.sizes).is_err());
        // a 2-group is a single block: noncentral class sums lie in the
        // radical as they are, central ones as z − 1
        let d8 = builtin::dihedral(8).unwrap();
        let (a, data) = group_center(&d8, 2);
        let j = radical_basis_single_block(&a, &data.sizes).unwrap();
        for i in 1..a.dim() {
            let v = if data.sizes[i] == 1 {
                a.sub(&a.basis_vector(i), a.unit())
            } else {
                a.basis_vector(i)
            };
            assert!(j.contains(&v));
        }
    }

    #[test]
    fn ambient_mismatch() {
        let a = two_dim(PrimeField::new(2), [0, 0]);
        let b = two_dim(PrimeField::new(2), [0, 0]);
        assert!(matches!(
            a.product_space(&a.whole(), &b.whole()),
            Err(crate::Error::AmbientMismatch)
        ));
        assert!(a.product_space(&a.whole(), &a.zero_subspace()).unwrap().is_zero());
    }

    #[test]
    fn radical_is_base_change_invariant() {
        for (g, p) in [
            (builtin::symmetric(4).unwrap(), 2u32),
            (builtin::alternating(5).unwrap(), 2),
            (builtin::alternating(5).unwrap(), 3),
        ] {
            let (a, _) = group_center(&g, p);
            let base = loewy_series(&a).unwrap();
            for m in [2, 3] {
                let e = a.base_change(GaloisField::new(p, m)).unwrap();
                assert_eq!(loewy_series(&e).unwrap(), base);
            }
        }
    }
}
