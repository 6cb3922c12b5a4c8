//! Enumerates a few permutation groups and reports classes, Sylow subgroups
//! and the trivial-intersection test.

use loewy::field::prime_divisors;
use loewy::group::{builtin_group, is_trivial_intersection, ConjugacyClassSet, DEFAULT_MAX_ORDER};

fn main() -> loewy::Result<()> {
    for name in ["s4", "a5", "d10", "s3xc2", "m11"] {
        let g = builtin_group(name, DEFAULT_MAX_ORDER)?;
        let ccs = ConjugacyClassSet::compute(&g);
        println!(
            "{name}: order {}, degree {}, {} classes",
            g.order(),
            g.degree(),
            ccs.len()
        );
        for c in &ccs.classes {
            println!("  {:<6} order {:>2}  size {:>5}", c.label, c.element_order, c.size);
        }
        for p in prime_divisors(g.order() as u128) {
            let ti = is_trivial_intersection(&g, p)?;
            println!(
                "  p = {p}: {} Sylow subgroups, TI: {}",
                ti.sylow_count, ti.trivial_intersection
            );
        }
    }
    Ok(())
}
