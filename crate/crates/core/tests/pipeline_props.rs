//! Reports, comparisons, the corpus runner and the command line.

use std::path::Path;
use std::process::Command;

use loewy::chartab::{CharacterTable, A5_TABLE, S3_TABLE, TRIVIAL_TABLE};
use loewy::group::builtin;
use loewy::pipeline::{
    analyze_group, analyze_table, compare_group, compare_tables, AnalysisOptions, AnalysisReport, ComparisonReport,
    FieldDegree, Manifest, Route, Status,
};

fn opts() -> AnalysisOptions {
    AnalysisOptions::default()
}

#[test]
fn json_round_trip_is_exact() {
    let g = builtin::symmetric(4).unwrap();
    let r = analyze_group(&g, 2, &opts()).unwrap();
    let s = r.to_json();
    let back = AnalysisReport::from_json(&s).unwrap();
    assert_eq!(back, r);
    assert_eq!(back.to_json(), s);
    let c = compare_group(&builtin::alternating(5).unwrap(), 5, &opts()).unwrap();
    let s = c.to_json();
    assert_eq!(ComparisonReport::from_json(&s).unwrap().to_json(), s);
}

/// With a normal Sylow subgroup N_G(P) = G and the two sides agree.
#[test]
fn normal_sylow_compares_equal() {
    for (name, p) in [("s3", 3u64), ("a4", 2), ("c6", 2), ("c6", 3), ("d8", 2), ("s3xc2", 3)] {
        let g = builtin::builtin_group(name, 1000).unwrap();
        let c = compare_group(&g, p, &opts()).unwrap();
        assert_eq!(c.normalizer.order, c.group.order, "{name}");
        assert_eq!(c.group.blocks, c.normalizer.blocks, "{name}");
        assert_eq!(c.delta, 0);
        assert!(c.layers_equal && c.dims_equal && !c.conjecture_holds && !c.obstruction);
    }
}

#[test]
fn trivial_group() {
    let g = builtin::cyclic(1).unwrap();
    for p in [2, 3, 7] {
        let r = analyze_group(&g, p, &opts()).unwrap();
        assert_eq!(r.blocks.len(), 1);
        let b = r.principal();
        assert_eq!((b.dim, b.loewy_length, b.defect, b.j2), (1, 1, 0, 0));
        assert_eq!(b.layers, vec![1, 0]);
    }
    let t = CharacterTable::parse(TRIVIAL_TABLE, "trivial").unwrap();
    let r = analyze_table(&t, 5, &opts()).unwrap();
    assert_eq!(r.route, Route::CharacterTable);
    assert_eq!(r.principal().dim, 1);
}

#[test]
fn both_routes_agree() {
    let t = CharacterTable::parse(A5_TABLE, "a5").unwrap();
    let g = builtin::alternating(5).unwrap();
    for p in [2, 3, 5] {
        let (x, y) = (
            analyze_table(&t, p, &opts()).unwrap(),
            analyze_group(&g, p, &opts()).unwrap(),
        );
        let key = |r: &AnalysisReport| {
            let mut v: Vec<_> = r
                .blocks
                .iter()
                .map(|b| (b.principal, b.defect, b.dim, b.layers.clone()))
                .collect();
            v.sort();
            v
        };
        assert_eq!(key(&x), key(&y), "p = {p}");
        assert_eq!(x.center_layers, y.center_layers);
    }
}

#[test]
fn field_degree_options() {
    let g = builtin::alternating(5).unwrap();
    // the two blocks of defect zero mod 3 are conjugate over GF(3)
    let auto = analyze_group(&g, 3, &opts()).unwrap();
    assert_eq!(auto.field_degree, 2);
    assert_eq!(auto.blocks.len(), 3);
    let fixed = AnalysisOptions {
        field_degree: FieldDegree::Fixed(4),
        ..opts()
    };
    let wide = analyze_group(&g, 3, &fixed).unwrap();
    assert_eq!(wide.field_degree, 4);
    assert_eq!(wide.center_layers, auto.center_layers);
    assert_eq!(wide.principal().layers, auto.principal().layers);
    let zero = AnalysisOptions {
        field_degree: FieldDegree::Fixed(0),
        ..opts()
    };
    assert!(analyze_group(&g, 3, &zero).is_err());
    let narrow = AnalysisOptions {
        field_degree: FieldDegree::Fixed(1),
        ..opts()
    };
    assert_eq!(analyze_group(&g, 3, &narrow).unwrap().blocks.len(), 2);
    assert!(analyze_group(&g, 4, &opts()).is_err());
}

#[test]
fn table_comparison_rejects_non_normalizers() {
    let a5 = CharacterTable::parse(A5_TABLE, "a5").unwrap();
    let s3 = CharacterTable::parse(S3_TABLE, "s3").unwrap();
    assert!(compare_tables(&a5, &s3, 5, &opts()).is_err());
}

#[test]
fn manifest_edge_cases() {
    let base = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let empty = Manifest::parse("", &base).unwrap();
    let r = empty.check(&opts());
    assert_eq!((r.passed(), r.failed(), r.skipped(), r.exit_code()), (0, 0, 0, 0));
    assert!(r.to_text().contains("0 passed, 0 failed, 0 skipped"));

    let text = r#"
[[entry]]
name = "absent"
prime = 5
table = "tables/nowhere.tbl"
optional = true

[[entry]]
name = "S3 wrong"
prime = 3
group = "builtin:s3"
expect_g = { dim = 4 }

[[entry]]
name = "S3 right"
prime = 3
group = "builtin:s3"
expect_g = { defect = 1, dim = 3, ll = 2, j2 = 0 }
"#;
    let m = Manifest::parse(text, &base).unwrap();
    let r = m.check(&opts());
    let st: Vec<Status> = r.outcomes.iter().map(|o| o.status).collect();
    assert_eq!(st, vec![Status::Skipped, Status::Fail, Status::Pass]);
    assert_eq!(r.exit_code(), 1);

    assert!(Manifest::parse("[[entry]]\nname = \"x\"\nprime = 2\n", &base).is_err());
    let both = "[[entry]]\nname = \"x\"\nprime = 2\ngroup = \"builtin:s3\"\ntable = \"t\"\n";
    assert!(Manifest::parse(both, &base).is_err());
    assert!(Manifest::parse(
        "[[entry]]\nname = \"x\"\nprime = 2\ngroup = \"builtin:s3\"\nbogus = 1\n",
        &base
    )
    .is_err());
}

fn loewy(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_loewy")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn cli_smoke() {
    let (code, out) = loewy(&["classes", "--group", "builtin:s4"]);
    assert_eq!(code, 0);
    assert!(out.contains("o4_1"), "{out}");

    let (code, out) = loewy(&["analyze", "--group", "builtin:s4", "--prime", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let r = AnalysisReport::from_json(&out).unwrap();
    assert_eq!(r.principal().dim, 5);

    let (code, out) = loewy(&[
        "compare",
        "--group",
        "builtin:psu3_3",
        "--prime",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let c = ComparisonReport::from_json(&out).unwrap();
    assert_eq!(
        (c.group.principal().j2, c.normalizer.principal().j2, c.delta),
        (4, 3, 1)
    );

    let tables = concat!(env!("CARGO_MANIFEST_DIR"), "/data/tables/");
    let (code, out) = loewy(&[
        "compare",
        "--table",
        &format!("{tables}a5.tbl"),
        "--ntable",
        &format!("{tables}d10.tbl"),
        "--prime",
        "5",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("delta = 0"), "{out}");

    let (code, out) = loewy(&["coeffs", "--table", &format!("{tables}s3.tbl")]);
    assert_eq!(code, 0);
    assert!(out.lines().count() >= 6, "{out}");

    let (code, _) = loewy(&["analyze", "--group", "builtin:s4", "--prime", "6"]);
    assert_eq!(code, 2);
    let (code, _) = loewy(&["analyze", "--group", "builtin:s5", "--prime", "2", "--max-order", "50"]);
    assert_eq!(code, 2);
    let (code, out) = loewy(&[
        "analyze",
        "--group",
        "builtin:a5",
        "--prime",
        "3",
        "--field-degree",
        "auto",
        "--threads",
        "1",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("GF(3^2)"), "{out}");
}
