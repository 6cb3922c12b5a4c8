//! End-to-end analysis: group or character table in, block report out.

mod analyze;
mod corpus;
mod report;

pub use analyze::{
    analyze_class_data, analyze_group, analyze_table, compare_group, compare_tables, AnalysisOptions, FieldDegree,
};
pub use corpus::{
    default_manifest_path, run_entry, BlockExpect, CheckReport, CorpusEntry, EntryOutcome, Manifest, Status,
};
pub use report::{AnalysisReport, BlockRow, ComparisonReport, Route};
