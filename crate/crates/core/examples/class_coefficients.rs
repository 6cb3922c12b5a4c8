//! Class multiplication coefficients of S4 two ways: by counting in the
//! group and from the character table.

use loewy::chartab::{match_classes, CharacterTable, S4_TABLE};
use loewy::group::{builtin, class_mult_table, ConjugacyClassSet};

fn main() -> loewy::Result<()> {
    let g = builtin::symmetric(4)?;
    let ccs = ConjugacyClassSet::compute(&g);
    let (gd, gt) = (ccs.to_class_data(&g), class_mult_table(&g, &ccs));
    let t = CharacterTable::parse(S4_TABLE, "s4")?;
    let (td, tt) = (t.to_class_data(), t.burnside_table()?);
    let r = t.num_classes();
    for i in 0..r {
        for j in i..r {
            let terms: Vec<String> = (0..r)
                .filter(|&k| tt.get(i, j, k) != 0)
                .map(|k| format!("{} {}", tt.get(i, j, k), td.labels[k]))
                .collect();
            println!("{} * {} = {}", td.labels[i], td.labels[j], terms.join(" + "));
        }
    }
    let sigma = match_classes(&td, &tt, &gd, &gt).expect("tables agree");
    println!("table classes -> enumerated classes: {sigma:?}");
    println!("counting identity: {}", gt.counting_identity_holds(&gd.sizes));
    Ok(())
}
