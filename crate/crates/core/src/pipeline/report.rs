use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::zalg::FullDefectCount;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Enumeration,
    CharacterTable,
}

/// One block of Z(kG): defect, dim Z(B), Loewy length and layer dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRow {
    pub id: String,
    pub principal: bool,
    pub defect: u32,
    pub dim: usize,
    pub loewy_length: usize,
    pub j2: usize,
    pub layers: Vec<usize>,
    pub residue_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub group: String,
    pub order: u128,
    pub prime: u64,
    pub route: Route,
    pub num_classes: usize,
    /// Degree over GF(p) of the field the blocks were computed over.
    pub field_degree: u32,
    pub trivial_intersection: Option<bool>,
    pub sylow_count: Option<usize>,
    pub blocks: Vec<BlockRow>,
    /// Loewy layers of the whole centre.
    pub center_layers: Vec<usize>,
    pub full_defect: FullDefectCount,
}

impl AnalysisReport {
    pub fn principal(&self) -> &BlockRow {
        self.blocks
            .iter()
            .find(|b| b.principal)
            .expect("every report has a principal block")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let route = match self.route {
            Route::Enumeration => "enumeration",
            Route::CharacterTable => "character table",
        };
        writeln!(
            s,
            "{}  |G| = {}  p = {}  classes = {}  field = GF({}^{})  route = {route}",
            self.group, self.order, self.prime, self.num_classes, self.prime, self.field_degree
        )
        .unwrap();
        if let Some(ti) = self.trivial_intersection {
            let count = self
                .sylow_count
                .map(|n| format!(" ({n} Sylow {}-subgroups)", self.prime))
                .unwrap_or_default();
            writeln!(s, "trivial intersection: {}{count}", if ti { "yes" } else { "no" }).unwrap();
        }
        s.push_str(&block_table(self.blocks.iter().map(|b| ("", b))));
        writeln!(s, "centre layers: {:?}", self.center_layers).unwrap();
        writeln!(
            s,
            "full-defect blocks: {}  p-regular classes of full defect: {}",
            self.full_defect.full_defect_blocks, self.full_defect.full_defect_regular_classes
        )
        .unwrap();
        s
    }
}

fn block_table<'a>(rows: impl Iterator<Item = (&'a str, &'a BlockRow)>) -> String {
    let rows: Vec<_> = rows.collect();
    let with_side = rows.iter().any(|(side, _)| !side.is_empty());
    let mut s = String::new();
    if with_side {
        s.push_str(&format!("{:<8}", "side"));
    }
    writeln!(
        s,
        "{:<7}{:>7}{:>10}{:>10}{:>14}  layers",
        "block", "defect", "dim Z(B)", "LL(Z(B))", "dim J2(Z(B))"
    )
    .unwrap();
    for (side, b) in rows {
        if with_side {
            s.push_str(&format!("{side:<8}"));
        }
        let id = if b.principal {
            format!("{}*", b.id)
        } else {
            b.id.clone()
        };
        writeln!(
            s,
            "{id:<7}{:>7}{:>10}{:>10}{:>14}  {:?}",
            b.defect, b.dim, b.loewy_length, b.j2, b.layers
        )
        .unwrap();
    }
    s
}

/// Principal block of G against the principal block of N_G(P).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub group: AnalysisReport,
    pub normalizer: AnalysisReport,
    /// dim J²(Z(B₀)) − dim J²(Z(b₀))
    pub delta: i64,
    pub layers_equal: bool,
    pub dims_equal: bool,
    /// delta == 1
    pub conjecture_holds: bool,
    /// Layer vectors differ, so the two centres are not isomorphic.
    pub obstruction: bool,
}

impl ComparisonReport {
    pub fn new(group: AnalysisReport, normalizer: AnalysisReport) -> Self {
        let (b, n) = (group.principal(), normalizer.principal());
        let delta = b.j2 as i64 - n.j2 as i64;
        let layers_equal = b.layers == n.layers;
        let dims_equal = b.dim == n.dim;
        ComparisonReport {
            delta,
            layers_equal,
            dims_equal,
            conjecture_holds: delta == 1,
            obstruction: !layers_equal,
            group,
            normalizer,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{}", self.group.to_text()).unwrap();
        writeln!(s, "{}", self.normalizer.to_text()).unwrap();
        let mut b = self.group.principal().clone();
        b.id = "B0".into();
        let mut n = self.normalizer.principal().clone();
        n.id = "b0".into();
        s.push_str(&block_table([("G", &b), ("N_G(P)", &n)].into_iter()));
        let yn = |x: bool| if x { "yes" } else { "no" };
        writeln!(
            s,
            "delta = {}  layers equal: {}  dim Z(B0) = dim Z(b0): {}  delta = 1: {}  centres non-isomorphic: {}",
            self.delta,
            yn(self.layers_equal),
            yn(self.dims_equal),
            yn(self.conjecture_holds),
            yn(self.obstruction)
        )
        .unwrap();
        s
    }
}
