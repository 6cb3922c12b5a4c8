//! Blocks of PSU(3,3) and M11 in characteristic 3: idempotents, defects and
//! the Loewy structure of each block centre.

use loewy::field::{GaloisField, PrimeField};
use loewy::group::{builtin_group, class_mult_table, ConjugacyClassSet, DEFAULT_MAX_ORDER};
use loewy::zalg::{annotate_blocks, center_algebra, component_loewy, decompose_blocks};

fn main() -> loewy::Result<()> {
    for (name, p) in [("psu3_3", 3u32), ("m11", 3), ("a5", 3)] {
        let g = builtin_group(name, DEFAULT_MAX_ORDER)?;
        let ccs = ConjugacyClassSet::compute(&g);
        let data = ccs.to_class_data(&g);
        let a = center_algebra(PrimeField::new(p), &data, &class_mult_table(&g, &ccs))?;
        let m = decompose_blocks(&a)?.splitting_degree() as u32;
        let a = a.base_change(GaloisField::new(p, m))?;
        let mut d = decompose_blocks(&a)?;
        annotate_blocks(&a, &mut d, &data)?;
        println!("{name} mod {p}: {} blocks over GF({p}^{m})", d.len());
        for (i, b) in d.blocks.iter().enumerate() {
            let l = component_loewy(&a, &d.radical, &b.idempotent)?;
            println!(
                "  B{i}{} defect {:?} dim {} layers {:?}",
                if b.is_principal { "*" } else { " " },
                b.defect.unwrap(),
                b.dim,
                l.layers
            );
        }
    }
    Ok(())
}
