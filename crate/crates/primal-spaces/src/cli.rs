//! Command-line surface: the space file format, report documents, and
//! the five commands (`validate`, `compute`, `check`, `verify-paper`,
//! `enumerate`).
//!
//! Exit codes are part of the contract: 0 for success or a formula
//! that holds, 1 for a falsified formula or a battery with failures,
//! 2 for usage, validation, capacity, and I/O errors.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::dsl::{eval_formula, eval_set, parse, parse_expr, Verdict};
use crate::enumerate::{primals, spaces, topologies};
use crate::operators::OperatorTable;
use crate::setcore::{GroundSet, SetFamily, SubsetCode};
use crate::spaces::{Primal, PrimalSpace, Topology};
use crate::verify::{describe_space, run_battery, BatteryReport, ReportWitness};

/// Finite-model workbench for primal topological spaces.
#[derive(Debug, Parser)]
#[command(name = "primal", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a space file against the space axioms.
    Validate {
        /// Path to a space file.
        file: PathBuf,
    },
    /// Evaluate a set expression on the space in a file.
    Compute {
        /// Path to a space file.
        file: PathBuf,
        /// Expression to evaluate, e.g. "cl(d(A)) & ~B".
        #[arg(long)]
        expr: String,
        /// Variable binding VAR=SET, where SET is the subset code as a
        /// decimal, 0b-binary, or 0x-hex integer. Repeatable.
        #[arg(long = "bind", value_name = "VAR=SET")]
        bind: Vec<String>,
    },
    /// Check a formula on one space, or over every space of one size.
    Check {
        /// Scan every space with N points instead of reading a file.
        #[arg(long = "all-n", value_name = "N")]
        all_n: Option<u8>,
        /// `<file> "<formula>"`, or `"<formula>"` alone with --all-n.
        #[arg(value_name = "ARG")]
        args: Vec<String>,
    },
    /// Run the whole named check battery over every space of one size.
    #[command(name = "verify-paper")]
    VerifyPaper {
        /// Number of points.
        #[arg(long)]
        n: u8,
        /// Write the report to a file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report format.
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Count or list topologies, primals, or whole spaces.
    #[command(group = ArgGroup::new("mode").required(true).args(["count", "list"]))]
    Enumerate {
        /// What to enumerate.
        #[arg(value_enum)]
        kind: EnumKind,
        /// Number of points.
        #[arg(long)]
        n: u8,
        /// Print only how many there are.
        #[arg(long)]
        count: bool,
        /// Print one canonical JSON document per line.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumKind {
    Topologies,
    Primals,
    Spaces,
}

// ------------------------------------------------------------------
// Space files.

/// The on-disk space document: point count, open-set codes, and a
/// primal given either by its principal generator or by its full
/// member list. Unknown fields are rejected.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceFile {
    n: u8,
    open: Vec<u32>,
    primal: PrimalField,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PrimalField {
    #[serde(skip_serializing_if = "Option::is_none")]
    generator: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sets: Option<Vec<u32>>,
}

fn load_space(path: &Path) -> Result<PrimalSpace, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let file: SpaceFile =
        serde_json::from_str(&text).map_err(|e| format!("malformed space file: {e}"))?;
    let ground = GroundSet::new(file.n).map_err(|e| e.to_string())?;
    for &code in &file.open {
        ground.check_code(SubsetCode(code)).map_err(|e| e.to_string())?;
    }
    let topology = Topology::validate(
        ground,
        SetFamily::from_codes(file.open.iter().map(|&c| SubsetCode(c))),
    )
    .map_err(|e| e.to_string())?;
    let primal = match (file.primal.generator, file.primal.sets) {
        (Some(g), None) => {
            Primal::from_generator(ground, SubsetCode(g)).map_err(|e| e.to_string())?
        }
        (None, Some(sets)) => {
            for &code in &sets {
                ground.check_code(SubsetCode(code)).map_err(|e| e.to_string())?;
            }
            Primal::validate(ground, SetFamily::from_codes(sets.iter().map(|&c| SubsetCode(c))))
                .map_err(|e| e.to_string())?
        }
        (Some(_), Some(_)) => {
            return Err("primal must have exactly one of \"generator\" or \"sets\", got both"
                .to_string())
        }
        (None, None) => {
            return Err("primal must have exactly one of \"generator\" or \"sets\", got neither"
                .to_string())
        }
    };
    PrimalSpace::new(topology, primal).map_err(|e| e.to_string())
}

// ------------------------------------------------------------------
// Report document.

/// The full machine-readable report: tool identity, command echo, and
/// the battery tallies. Field order is fixed and serialization is
/// deterministic, so identical inputs produce byte-identical
/// documents; for that reason elapsed time appears only in the text
/// rendering, never here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportDoc {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub report: BatteryReport,
}

fn render_text_report(doc: &ReportDoc, elapsed_seconds: f64) -> String {
    let mut out = String::new();
    out.push_str(&format!("tool: {} {}\n", doc.tool, doc.version));
    out.push_str(&format!("command: {}\n", doc.command));
    out.push_str(&format!("spaces: {}\n", doc.report.spaces));
    let failures: u64 = doc.report.checks.iter().map(|c| c.fail).sum();
    out.push_str(&format!("checks: {}\n", doc.report.checks.len()));
    out.push_str(&format!("failures: {failures}\n"));
    out.push_str(&format!("elapsed: {elapsed_seconds:.3}s\n"));
    out.push('\n');
    out.push_str(&format!(
        "{:<34} {:>8} {:>8} {:>8}\n",
        "check", "pass", "fail", "skipped"
    ));
    for tally in &doc.report.checks {
        out.push_str(&format!(
            "{:<34} {:>8} {:>8} {:>8}\n",
            tally.name, tally.pass, tally.fail, tally.hypothesis_not_met
        ));
    }
    let witnesses: Vec<(&str, &ReportWitness)> = doc
        .report
        .checks
        .iter()
        .filter_map(|t| t.first_witness.as_ref().map(|w| (t.name.as_str(), w)))
        .collect();
    if !witnesses.is_empty() {
        out.push('\n');
        for (name, witness) in witnesses {
            out.push_str(&format!(
                "first witness for {name}: space {}",
                serde_json::to_string(&witness.space).expect("space serializes")
            ));
            for binding in &witness.bindings {
                let code = SubsetCode(binding.set);
                out.push_str(&format!(
                    "; {} = {} = {}",
                    binding.var,
                    code.binary(witness.space.n),
                    code.roster()
                ));
            }
            out.push('\n');
        }
    }
    out
}

// ------------------------------------------------------------------
// Commands.

fn fail(message: impl AsRef<str>) -> i32 {
    eprintln!("error: {}", message.as_ref());
    2
}

fn cmd_validate(file: &Path) -> i32 {
    match load_space(file) {
        Ok(_) => {
            println!("valid");
            0
        }
        Err(message) => fail(message),
    }
}

fn parse_binding(ground: GroundSet, raw: &str) -> Result<(String, SubsetCode), String> {
    let (name, value) = raw
        .split_once('=')
        .ok_or_else(|| format!("binding \"{raw}\" is not of the form VAR=SET"))?;
    let name = name.trim();
    let value = value.trim();
    if name.is_empty() {
        return Err(format!("binding \"{raw}\" has an empty variable name"));
    }
    let parsed = if let Some(bits) = value.strip_prefix("0b").or_else(|| value.strip_prefix("0B")) {
        u32::from_str_radix(bits, 2)
    } else if let Some(hex) = value.strip_prefix("0x").or_else(|| value.strip_prefix("0X")) {
        u32::from_str_radix(hex, 16)
    } else {
        value.parse()
    }
    .map_err(|_| format!("binding \"{raw}\" has no readable subset code"))?;
    let code = SubsetCode(parsed);
    ground.check_code(code).map_err(|e| e.to_string())?;
    Ok((name.to_string(), code))
}

fn cmd_compute(file: &Path, expr: &str, bind: &[String]) -> i32 {
    let space = match load_space(file) {
        Ok(space) => space,
        Err(message) => return fail(message),
    };
    let expr = match parse_expr(expr) {
        Ok(expr) => expr,
        Err(e) => return fail(format!("in --expr: {e}")),
    };
    let ground = space.ground();
    let mut bindings = BTreeMap::new();
    for raw in bind {
        match parse_binding(ground, raw) {
            Ok((name, code)) => {
                bindings.insert(name, code);
            }
            Err(message) => return fail(message),
        }
    }
    let table = OperatorTable::new(space);
    match eval_set(&expr, &table, &bindings) {
        Ok(code) => {
            println!("{} = {}", code.binary(ground.points()), code.roster());
            0
        }
        Err(e) => fail(e.to_string()),
    }
}

fn print_bindings(n: u8, bindings: &[(String, SubsetCode)]) {
    for (var, code) in bindings {
        println!("{} = {} = {}", var, code.binary(n), code.roster());
    }
}

fn cmd_check(all_n: Option<u8>, args: &[String]) -> i32 {
    match all_n {
        Some(n) => {
            let [formula_text] = args else {
                return fail("with --all-n, check takes exactly one argument: the formula");
            };
            let formula = match parse(formula_text) {
                Ok(formula) => formula,
                Err(e) => return fail(format!("in formula: {e}")),
            };
            let stream = match spaces(n) {
                Ok(stream) => stream,
                Err(e) => return fail(e.to_string()),
            };
            let total = stream.len();
            let mut scanned = 0u64;
            for space in stream {
                scanned += 1;
                let table = OperatorTable::new(space);
                if let Verdict::Fail(bindings) = eval_formula(&formula, &table) {
                    println!("FAIL after {scanned} of {total} spaces");
                    println!(
                        "space: {}",
                        serde_json::to_string(&describe_space(table.space()))
                            .expect("space serializes")
                    );
                    print_bindings(n, &bindings);
                    return 1;
                }
            }
            println!("PASS over {total} spaces");
            0
        }
        None => {
            let [file, formula_text] = args else {
                return fail(
                    "without --all-n, check takes exactly two arguments: a space file and the formula",
                );
            };
            let space = match load_space(Path::new(file)) {
                Ok(space) => space,
                Err(message) => return fail(message),
            };
            let formula = match parse(formula_text) {
                Ok(formula) => formula,
                Err(e) => return fail(format!("in formula: {e}")),
            };
            let n = space.ground().points();
            let table = OperatorTable::new(space);
            match eval_formula(&formula, &table) {
                Verdict::Pass => {
                    println!("PASS");
                    0
                }
                Verdict::HypothesisNotMet => {
                    println!("HYPOTHESIS NOT MET");
                    0
                }
                Verdict::Fail(bindings) => {
                    println!("FAIL");
                    print_bindings(n, &bindings);
                    1
                }
            }
        }
    }
}

fn cmd_verify_paper(n: u8, out: Option<&Path>, format: ReportFormat) -> i32 {
    let started = Instant::now();
    let report = match run_battery(n) {
        Ok(report) => report,
        Err(e) => return fail(e.to_string()),
    };
    let elapsed_seconds = started.elapsed().as_secs_f64();
    let failures: u64 = report.checks.iter().map(|c| c.fail).sum();
    let doc = ReportDoc {
        tool: "primal",
        version: env!("CARGO_PKG_VERSION"),
        command: format!("verify-paper --n {n}"),
        report,
    };
    let rendered = match format {
        ReportFormat::Json => {
            let mut json = serde_json::to_string_pretty(&doc).expect("report serializes");
            json.push('\n');
            json
        }
        ReportFormat::Text => render_text_report(&doc, elapsed_seconds),
    };
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                return fail(format!("cannot write {}: {e}", path.display()));
            }
        }
        None => print!("{rendered}"),
    }
    if failures == 0 {
        0
    } else {
        1
    }
}

#[derive(Serialize)]
struct TopologyLine {
    n: u8,
    open: Vec<u32>,
}

#[derive(Serialize)]
struct PrimalLine {
    n: u8,
    generator: u32,
    sets: Vec<u32>,
}

fn cmd_enumerate(kind: EnumKind, n: u8, count: bool) -> i32 {
    macro_rules! with_stream {
        ($ctor:ident, $line:expr) => {
            match $ctor(n) {
                Err(e) => fail(e.to_string()),
                Ok(stream) => {
                    if count {
                        println!("{}", stream.len());
                    } else {
                        for item in stream {
                            let line = $line(item);
                            println!(
                                "{}",
                                serde_json::to_string(&line).expect("listing serializes")
                            );
                        }
                    }
                    0
                }
            }
        };
    }
    match kind {
        EnumKind::Topologies => with_stream!(topologies, |t: Topology| TopologyLine {
            n,
            open: t.open_sets().iter().map(|c| c.0).collect(),
        }),
        EnumKind::Primals => with_stream!(primals, |p: Primal| PrimalLine {
            n,
            generator: p.generator().0,
            sets: p.sets().iter().map(|c| c.0).collect(),
        }),
        EnumKind::Spaces => with_stream!(spaces, |s: PrimalSpace| describe_space(&s)),
    }
}

/// Run one parsed invocation and return its exit code.
pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Validate { file } => cmd_validate(&file),
        Command::Compute { file, expr, bind } => cmd_compute(&file, &expr, &bind),
        Command::Check { all_n, args } => cmd_check(all_n, &args),
        Command::VerifyPaper { n, out, format } => cmd_verify_paper(n, out.as_deref(), format),
        Command::Enumerate { kind, n, count, list } => {
            debug_assert!(count != list);
            cmd_enumerate(kind, n, count)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn bindings_parse_in_all_three_radixes() {
        let ground = GroundSet::new(3).unwrap();
        assert_eq!(
            parse_binding(ground, "A=0b101").unwrap(),
            ("A".to_string(), SubsetCode(5))
        );
        assert_eq!(
            parse_binding(ground, "B=7").unwrap(),
            ("B".to_string(), SubsetCode(7))
        );
        assert_eq!(
            parse_binding(ground, "C=0x6").unwrap(),
            ("C".to_string(), SubsetCode(6))
        );
        assert_eq!(
            parse_binding(ground, " D = 0 ").unwrap(),
            ("D".to_string(), SubsetCode(0))
        );
    }

    #[test]
    fn bad_bindings_are_rejected() {
        let ground = GroundSet::new(2).unwrap();
        assert!(parse_binding(ground, "A").is_err());
        assert!(parse_binding(ground, "=1").is_err());
        assert!(parse_binding(ground, "A=ten").is_err());
        // Out of range for two points.
        assert!(parse_binding(ground, "A=4").is_err());
    }

    #[test]
    fn space_files_round_trip_through_the_loader() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("space.json");
        std::fs::write(&path, r#"{"n":3,"open":[0,1,7],"primal":{"generator":4}}"#).unwrap();
        let space = load_space(&path).unwrap();
        assert_eq!(space.ground().points(), 3);
        assert_eq!(space.primal().generator(), SubsetCode(4));

        std::fs::write(&path, r#"{"n":3,"open":[0,1,7],"primal":{"sets":[0,1,2,3]}}"#).unwrap();
        let space = load_space(&path).unwrap();
        assert_eq!(space.primal().generator(), SubsetCode(4));
    }

    #[test]
    fn loader_rejects_malformed_documents() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("space.json");

        let cases: &[(&str, &str)] = &[
            (r#"{"n":3,"open":[0,1,2,7],"primal":{"generator":4}}"#, "union"),
            (r#"{"n":3,"open":[0,1,7],"primal":{"sets":[0,7]}}"#, "full set"),
            (r#"{"n":3,"open":[0,1,7],"primal":{"generator":4},"extra":1}"#, "unknown field"),
            (r#"{"n":3,"open":[0,1,7],"primal":{"generator":4,"sets":[0]}}"#, "both"),
            (r#"{"n":3,"open":[0,1,7],"primal":{}}"#, "neither"),
            (r#"{"n":3,"open":[0,9,7],"primal":{"generator":4}}"#, "outside"),
            (r#"{"n":0,"open":[0],"primal":{"generator":0}}"#, "between 1 and"),
        ];
        for (text, needle) in cases {
            std::fs::write(&path, text).unwrap();
            let err = load_space(&path).unwrap_err();
            assert!(
                err.contains(needle),
                "error for {text} should mention {needle:?}, got: {err}"
            );
        }

        assert!(load_space(Path::new("/nonexistent/space.json"))
            .unwrap_err()
            .contains("cannot read"));
    }

    #[test]
    fn text_report_lists_every_check() {
        let report = run_battery(1).unwrap();
        let doc = ReportDoc {
            tool: "primal",
            version: "test",
            command: "verify-paper --n 1".to_string(),
            report,
        };
        let text = render_text_report(&doc, 0.25);
        assert!(text.contains("spaces: 2\n"));
        assert!(text.contains("failures: 0\n"));
        assert!(text.contains("elapsed: 0.250s\n"));
        for def in crate::verify::REGISTRY {
            assert!(text.contains(def.name), "text report is missing {}", def.name);
        }
    }
}
