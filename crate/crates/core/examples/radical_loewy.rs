//! Radical and Loewy series of centres of group algebras.

use loewy::field::PrimeField;
use loewy::group::{builtin_group, class_mult_table, ConjugacyClassSet, DEFAULT_MAX_ORDER};
use loewy::zalg::{center_algebra, loewy_series, radical};

fn main() -> loewy::Result<()> {
    for (name, p) in [("s3", 3u32), ("s4", 2), ("a5", 2), ("d8", 2), ("psu3_3", 3)] {
        let g = builtin_group(name, DEFAULT_MAX_ORDER)?;
        let ccs = ConjugacyClassSet::compute(&g);
        let data = ccs.to_class_data(&g);
        let a = center_algebra(PrimeField::new(p), &data, &class_mult_table(&g, &ccs))?;
        let j = radical(&a)?;
        let l = loewy_series(&a)?;
        println!(
            "Z(GF({p}){name}): dim {}, dim J {}, Loewy length {}, layers {:?}",
            a.dim(),
            j.dim(),
            l.loewy_length,
            l.layers
        );
    }
    Ok(())
}
