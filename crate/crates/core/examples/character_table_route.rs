//! Analysis from character tables alone: A5 against D10 at p = 5.

use loewy::chartab::{CharacterTable, A5_TABLE};
use loewy::pipeline::{compare_tables, AnalysisOptions};

fn main() -> loewy::Result<()> {
    let g = CharacterTable::parse(A5_TABLE, "a5")?;
    let n = CharacterTable::read(concat!(env!("CARGO_MANIFEST_DIR"), "/data/tables/d10.tbl").as_ref())?;
    let c = compare_tables(&g, &n, 5, &AnalysisOptions::default())?;
    print!("{}", c.to_text());
    Ok(())
}
