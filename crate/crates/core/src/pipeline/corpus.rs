//! The regression corpus: a TOML manifest of groups and character tables
//! with the block data each one must reproduce.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::group::load_group;

use super::analyze::{analyze_group, analyze_table, compare_group, compare_tables, AnalysisOptions};
use super::report::{AnalysisReport, BlockRow, ComparisonReport};

/// Expected values for a principal block; absent fields are not checked.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockExpect {
    pub defect: Option<u32>,
    pub dim: Option<usize>,
    pub ll: Option<usize>,
    pub j2: Option<usize>,
    pub layers: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    pub prime: u64,
    /// `builtin:NAME` or a generator file, relative to the manifest.
    pub group: Option<String>,
    /// Character table of G, relative to the manifest.
    pub table: Option<String>,
    /// Character table of N_G(P), relative to the manifest.
    pub ntable: Option<String>,
    /// Extension rows and other data that need not be present.
    #[serde(default)]
    pub optional: bool,
    pub max_order: Option<usize>,
    pub classes: Option<usize>,
    pub blocks: Option<usize>,
    pub ti: Option<bool>,
    pub full_defect_blocks: Option<usize>,
    pub expect_g: Option<BlockExpect>,
    pub expect_n: Option<BlockExpect>,
    pub n_classes: Option<usize>,
    pub delta: Option<i64>,
    pub layers_equal: Option<bool>,
}

impl CorpusEntry {
    /// Entries with expectations on the normalizer side run a comparison.
    pub fn is_comparison(&self) -> bool {
        self.ntable.is_some()
            || self.expect_n.is_some()
            || self.n_classes.is_some()
            || self.delta.is_some()
            || self.layers_equal.is_some()
    }

    fn data_files(&self, base: &Path) -> Vec<PathBuf> {
        let mut out = Vec::new();
        if let Some(g) = &self.group {
            if !g.starts_with("builtin:") {
                out.push(base.join(g));
            }
        }
        out.extend(self.table.iter().chain(&self.ntable).map(|t| base.join(t)));
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    #[serde(rename = "entry", default)]
    pub entries: Vec<CorpusEntry>,
    #[serde(skip)]
    pub base: PathBuf,
}

/// The manifest shipped with the crate.
pub fn default_manifest_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join("corpus.toml")
}

impl Manifest {
    pub fn parse(text: &str, base: &Path) -> Result<Self> {
        let mut m: Manifest = toml::from_str(text).map_err(|e| Error::Manifest(e.to_string()))?;
        for e in &m.entries {
            let routes = e.group.is_some() as u8 + e.table.is_some() as u8;
            if routes != 1 {
                return Err(Error::Manifest(format!(
                    "{}: exactly one of `group` and `table` must be given",
                    e.name
                )));
            }
            if e.ntable.is_some() && e.table.is_none() {
                return Err(Error::Manifest(format!("{}: `ntable` needs `table`", e.name)));
            }
            if e.table.is_some() && e.is_comparison() && e.ntable.is_none() {
                return Err(Error::Manifest(format!(
                    "{}: a table comparison needs `ntable`",
                    e.name
                )));
            }
        }
        m.base = base.to_path_buf();
        Ok(m)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, path.parent().unwrap_or(Path::new(".")))
    }

    pub fn entry(&self, name: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn check(&self, opts: &AnalysisOptions) -> CheckReport {
        CheckReport {
            outcomes: self.entries.iter().map(|e| run_entry(e, &self.base, opts)).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryOutcome {
    pub name: String,
    pub prime: u64,
    pub optional: bool,
    pub status: Status,
    /// Mismatches for FAIL, the missing file for SKIPPED.
    pub detail: Vec<String>,
    pub seconds: f64,
    pub analysis: Option<AnalysisReport>,
    pub comparison: Option<ComparisonReport>,
}

pub fn run_entry(e: &CorpusEntry, base: &Path, opts: &AnalysisOptions) -> EntryOutcome {
    let mut out = EntryOutcome {
        name: e.name.clone(),
        prime: e.prime,
        optional: e.optional,
        status: Status::Skipped,
        detail: Vec::new(),
        seconds: 0.0,
        analysis: None,
        comparison: None,
    };
    if let Some(missing) = e.data_files(base).into_iter().find(|f| !f.exists()) {
        out.detail.push(format!("missing {}", missing.display()));
        return out;
    }
    let opts = AnalysisOptions {
        max_order: e.max_order.unwrap_or(opts.max_order),
        ..*opts
    };
    let start = Instant::now();
    let result = evaluate(e, base, &opts);
    out.seconds = start.elapsed().as_secs_f64();
    match result {
        Ok((analysis, comparison)) => {
            let report = comparison
                .as_ref()
                .map(|c| &c.group)
                .or(analysis.as_ref())
                .expect("one report");
            out.detail = mismatches(e, report, comparison.as_ref());
            out.status = if out.detail.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            };
            out.analysis = analysis;
            out.comparison = comparison;
        }
        Err(err) => {
            out.status = Status::Fail;
            out.detail.push(err.to_string());
        }
    }
    out
}

fn evaluate(
    e: &CorpusEntry,
    base: &Path,
    opts: &AnalysisOptions,
) -> Result<(Option<AnalysisReport>, Option<ComparisonReport>)> {
    if let Some(source) = &e.group {
        let source = if source.starts_with("builtin:") {
            source.clone()
        } else {
            base.join(source).display().to_string()
        };
        let g = load_group(&source, opts.max_order)?;
        if e.is_comparison() {
            Ok((None, Some(compare_group(&g, e.prime, opts)?)))
        } else {
            Ok((Some(analyze_group(&g, e.prime, opts)?), None))
        }
    } else {
        let t = CharacterTable::read(&base.join(e.table.as_ref().expect("validated")))?;
        match &e.ntable {
            Some(n) => {
                let n = CharacterTable::read(&base.join(n))?;
                Ok((None, Some(compare_tables(&t, &n, e.prime, opts)?)))
            }
            None => Ok((Some(analyze_table(&t, e.prime, opts)?), None)),
        }
    }
}

fn expect_block(side: &str, want: &BlockExpect, got: &BlockRow, out: &mut Vec<String>) {
    let mut check = |what: &str, w: Option<usize>, g: usize| {
        if let Some(w) = w {
            if w != g {
                out.push(format!("{side} {what}: expected {w}, got {g}"));
            }
        }
    };
    check("defect", want.defect.map(|d| d as usize), got.defect as usize);
    check("dim", want.dim, got.dim);
    check("LL", want.ll, got.loewy_length);
    check("dim J2", want.j2, got.j2);
    if let Some(l) = &want.layers {
        if *l != got.layers {
            out.push(format!("{side} layers: expected {l:?}, got {:?}", got.layers));
        }
    }
}

fn mismatches(e: &CorpusEntry, g: &AnalysisReport, c: Option<&ComparisonReport>) -> Vec<String> {
    let mut out = Vec::new();
    let mut check = |what: &str, want: Option<String>, got: String| {
        if let Some(w) = want {
            if w != got {
                out.push(format!("{what}: expected {w}, got {got}"));
            }
        }
    };
    check("classes", e.classes.map(|x| x.to_string()), g.num_classes.to_string());
    check("blocks", e.blocks.map(|x| x.to_string()), g.blocks.len().to_string());
    check(
        "TI",
        e.ti.map(|x| x.to_string()),
        g.trivial_intersection.map_or("unknown".into(), |x| x.to_string()),
    );
    check(
        "full-defect blocks",
        e.full_defect_blocks.map(|x| x.to_string()),
        g.full_defect.full_defect_blocks.to_string(),
    );
    if let Some(c) = c {
        check(
            "N classes",
            e.n_classes.map(|x| x.to_string()),
            c.normalizer.num_classes.to_string(),
        );
        check("delta", e.delta.map(|x| x.to_string()), c.delta.to_string());
        check(
            "layers equal",
            e.layers_equal.map(|x| x.to_string()),
            c.layers_equal.to_string(),
        );
    }
    if let Some(want) = &e.expect_g {
        expect_block("B0", want, g.principal(), &mut out);
    }
    if let (Some(want), Some(c)) = (&e.expect_n, c) {
        expect_block("b0", want, c.normalizer.principal(), &mut out);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub outcomes: Vec<EntryOutcome>,
}

impl CheckReport {
    fn count(&self, s: Status) -> usize {
        self.outcomes.iter().filter(|o| o.status == s).count()
    }

    pub fn passed(&self) -> usize {
        self.count(Status::Pass)
    }

    pub fn failed(&self) -> usize {
        self.count(Status::Fail)
    }

    pub fn skipped(&self) -> usize {
        self.count(Status::Skipped)
    }

    /// 0 iff nothing failed.
    pub fn exit_code(&self) -> i32 {
        (self.failed() > 0) as i32
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for o in &self.outcomes {
            let status = match o.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIPPED",
            };
            let opt = if o.optional { " (optional)" } else { "" };
            let summary = o
                .comparison
                .as_ref()
                .map(|c| {
                    let (b, n) = (c.group.principal(), c.normalizer.principal());
                    format!(
                        "B0 ({}, {}, {}, {}) b0 ({}, {}, {}, {}) delta {}",
                        b.defect, b.dim, b.loewy_length, b.j2, n.defect, n.dim, n.loewy_length, n.j2, c.delta
                    )
                })
                .or_else(|| {
                    o.analysis.as_ref().map(|a| {
                        let b = a.principal();
                        format!(
                            "{} blocks, B0 ({}, {}, {}, {})",
                            a.blocks.len(),
                            b.defect,
                            b.dim,
                            b.loewy_length,
                            b.j2
                        )
                    })
                })
                .unwrap_or_default();
            let time = if o.status == Status::Skipped {
                String::new()
            } else {
                format!(" [{:.2}s]", o.seconds)
            };
            let line = format!("{status:<8}{} p={}{opt}  {summary}{time}", o.name, o.prime);
            writeln!(s, "{}", line.trim_end()).unwrap();
            for d in &o.detail {
                writeln!(s, "        {d}").unwrap();
            }
        }
        writeln!(
            s,
            "{} passed, {} failed, {} skipped",
            self.passed(),
            self.failed(),
            self.skipped()
        )
        .unwrap();
        s
    }
}
