//! Builds PSU(3, q) on its isotropic points and reports orders and classes.

use std::time::Instant;

use loewy::group::{builtin::psu3, ConjugacyClassSet, DEFAULT_MAX_ORDER};
use loewy::unitary::{isotropic_points, psu3_order};

fn main() -> loewy::Result<()> {
    for q in [2u64, 3, 4, 5] {
        let t = Instant::now();
        let geo = isotropic_points(q)?;
        let g = psu3(q, DEFAULT_MAX_ORDER)?;
        let ccs = ConjugacyClassSet::compute(&g);
        println!(
            "PSU(3,{q}): {} points, order {} (formula {}), {} classes, {} reduced generators, {:.2?}",
            geo.points.len(),
            g.order(),
            psu3_order(q),
            ccs.len(),
            g.reduced_generators().len(),
            t.elapsed()
        );
    }
    Ok(())
}
