//! Principal block of PSU(3,q) against that of the Sylow normalizer.

use loewy::group::{builtin_group, DEFAULT_MAX_ORDER};
use loewy::pipeline::{compare_group, AnalysisOptions};

fn main() -> loewy::Result<()> {
    for (q, p) in [(3u64, 3u64), (4, 2), (5, 5)] {
        let g = builtin_group(&format!("psu3_{q}"), DEFAULT_MAX_ORDER)?.with_name(format!("PSU(3,{q})"));
        let c = compare_group(&g, p, &AnalysisOptions::default())?;
        let (b, n) = (c.group.principal(), c.normalizer.principal());
        println!(
            "PSU(3,{q}) p={p}: B0 dim {} J2 {} {:?} | b0 dim {} J2 {} {:?} | delta {}",
            b.dim, b.j2, b.layers, n.dim, n.j2, n.layers, c.delta
        );
    }
    Ok(())
}
