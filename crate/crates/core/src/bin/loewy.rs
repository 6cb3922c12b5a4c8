use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use loewy::chartab::CharacterTable;
use loewy::classdata::ClassData;
use loewy::group::{class_mult_table, load_group, ConjugacyClassSet, DEFAULT_MAX_ORDER};
use loewy::pipeline::{
    analyze_group, analyze_table, compare_group, compare_tables, default_manifest_path, AnalysisOptions, FieldDegree,
    Manifest,
};
use loewy::{Error, Result};

#[derive(Parser)]
#[command(
    name = "loewy",
    version,
    about = "Loewy structure of centres of p-blocks of finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Worker threads for coefficient tables (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Refuse to enumerate groups larger than this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Source {
    /// `builtin:NAME` (e.g. builtin:psu3_3, builtin:s4, builtin:m11) or a generator file.
    #[arg(long, conflicts_with = "table")]
    group: Option<String>,
    /// Character table file of G.
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Args)]
struct Analysis {
    #[arg(long)]
    prime: u64,
    /// `auto` (least splitting extension) or a degree m over GF(p).
    #[arg(long, default_value = "auto", value_parser = parse_degree)]
    field_degree: FieldDegree,
}

#[derive(Subcommand)]
enum Command {
    /// Conjugacy classes: sizes, element orders, centralizer orders.
    Classes {
        #[command(flatten)]
        source: Source,
    },
    /// Blocks of Z(kG) with defects and Loewy data.
    Analyze {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        analysis: Analysis,
    },
    /// Principal block of G against the principal block of N_G(P).
    Compare {
        #[command(flatten)]
        source: Source,
        /// Character table of N_G(P) (with --table).
        #[arg(long, requires = "table")]
        ntable: Option<PathBuf>,
        #[command(flatten)]
        analysis: Analysis,
    },
    /// Class multiplication coefficients a_ijk (nonzero entries).
    Coeffs {
        #[command(flatten)]
        source: Source,
    },
    /// Run the regression corpus; exit status 0 iff no entry fails.
    Check {
        /// Manifest to run (default: the one shipped with the crate).
        manifest: Option<PathBuf>,
    },
}

fn parse_degree(s: &str) -> std::result::Result<FieldDegree, String> {
    if s == "auto" {
        return Ok(FieldDegree::Auto);
    }
    match s.parse::<u32>() {
        Ok(m) if m > 0 => Ok(FieldDegree::Fixed(m)),
        _ => Err(format!("expected `auto` or a positive integer, got `{s}`")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn options(g: &Global, a: &Analysis) -> AnalysisOptions {
    AnalysisOptions {
        field_degree: a.field_degree,
        max_order: g.max_order,
    }
}

fn emit(format: Format, text: String, json: String) {
    match format {
        Format::Text => print!("{text}"),
        Format::Json => println!("{json}"),
    }
}

/// Class data and coefficients for either source.
fn class_data(source: &Source, max_order: usize) -> Result<(ClassData, loewy::classdata::CoefficientTable)> {
    match (&source.group, &source.table) {
        (Some(source), None) => {
            let g = load_group(source, max_order)?;
            let ccs = ConjugacyClassSet::compute(&g);
            Ok((ccs.to_class_data(&g), class_mult_table(&g, &ccs)))
        }
        (None, Some(path)) => {
            let t = CharacterTable::read(path)?;
            let coeffs = t.burnside_table()?;
            Ok((t.to_class_data(), coeffs))
        }
        _ => Err(Error::Input("give exactly one of --group and --table".into())),
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let g = &cli.global;
    match &cli.command {
        Command::Classes { source } => {
            let data = match (&source.group, &source.table) {
                (Some(source), None) => {
                    let g = load_group(source, g.max_order)?;
                    ConjugacyClassSet::compute(&g).to_class_data(&g)
                }
                (None, Some(path)) => CharacterTable::read(path)?.to_class_data(),
                _ => return Err(Error::Input("give exactly one of --group and --table".into())),
            };
            let mut text = format!(
                "{}  |G| = {}  classes = {}\n",
                data.name,
                data.order,
                data.num_classes()
            );
            text.push_str(&format!(
                "{:<10}{:>8}{:>14}{:>16}\n",
                "class", "order", "size", "|C_G(g)|"
            ));
            let mut rows = Vec::new();
            for i in 0..data.num_classes() {
                let c = data.centralizer_order(i);
                text.push_str(&format!(
                    "{:<10}{:>8}{:>14}{:>16}\n",
                    data.labels[i], data.element_orders[i], data.sizes[i], c
                ));
                rows.push(serde_json::json!({
                    "label": data.labels[i],
                    "order": data.element_orders[i],
                    "size": data.sizes[i].to_string(),
                    "centralizer": c.to_string(),
                }));
            }
            let json = serde_json::json!({ "group": data.name, "order": data.order.to_string(), "classes": rows });
            emit(g.format, text, serde_json::to_string_pretty(&json).expect("json"));
            Ok(0)
        }
        Command::Coeffs { source } => {
            let (data, t) = class_data(source, g.max_order)?;
            let r = data.num_classes();
            let mut text = String::new();
            let mut rows = Vec::new();
            for i in 0..r {
                for j in i..r {
                    let terms: Vec<String> = (0..r)
                        .filter(|&k| t.get(i, j, k) != 0)
                        .map(|k| {
                            let c = t.get(i, j, k);
                            rows.push(serde_json::json!([
                                data.labels[i],
                                data.labels[j],
                                data.labels[k],
                                c.to_string()
                            ]));
                            if c == 1 {
                                data.labels[k].clone()
                            } else {
                                format!("{c}*{}", data.labels[k])
                            }
                        })
                        .collect();
                    text.push_str(&format!(
                        "{} * {} = {}\n",
                        data.labels[i],
                        data.labels[j],
                        terms.join(" + ")
                    ));
                }
            }
            let json = serde_json::json!({ "group": data.name, "labels": data.labels, "coefficients": rows });
            emit(g.format, text, serde_json::to_string_pretty(&json).expect("json"));
            Ok(0)
        }
        Command::Analyze { source, analysis } => {
            let opts = options(g, analysis);
            let report = match (&source.group, &source.table) {
                (Some(source), None) => analyze_group(&load_group(source, g.max_order)?, analysis.prime, &opts)?,
                (None, Some(path)) => analyze_table(&CharacterTable::read(path)?, analysis.prime, &opts)?,
                _ => return Err(Error::Input("give exactly one of --group and --table".into())),
            };
            emit(g.format, report.to_text(), report.to_json());
            Ok(0)
        }
        Command::Compare {
            source,
            ntable,
            analysis,
        } => {
            let opts = options(g, analysis);
            let report = match (&source.group, &source.table, ntable) {
                (Some(source), None, None) => compare_group(&load_group(source, g.max_order)?, analysis.prime, &opts)?,
                (None, Some(t), Some(n)) => compare_tables(
                    &CharacterTable::read(t)?,
                    &CharacterTable::read(n)?,
                    analysis.prime,
                    &opts,
                )?,
                (None, Some(_), None) => return Err(Error::Input("--table needs --ntable for N_G(P)".into())),
                _ => return Err(Error::Input("give exactly one of --group and --table".into())),
            };
            emit(g.format, report.to_text(), report.to_json());
            Ok(0)
        }
        Command::Check { manifest } => {
            let path = manifest.clone().unwrap_or_else(default_manifest_path);
            let m = Manifest::load(&path)?;
            let opts = AnalysisOptions {
                field_degree: FieldDegree::Auto,
                max_order: g.max_order,
            };
            let report = m.check(&opts);
            emit(g.format, report.to_text(), report.to_json());
            Ok(report.exit_code() as u8)
        }
    }
}
