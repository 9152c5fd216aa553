//! File-driven front end: instance parsing, report formatting, and the
//! subcommand implementations used by the `toric` binary.
//!
//! Exit codes: 0 success, 2 validation failure, 3 I/O or parse failure,
//! 4 verification failure.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::core::{CoreError, Monomial, Presentation, RawInstance, Warning};
use crate::decompose::{decomposition_report, DecompositionReport};
use crate::groebner::{reduced_groebner_basis, GroebnerResult};
use crate::verify::{
    brute_min_rep, default_oracle_depth, fiber_oracle, spair_check, DivisorStrategy,
    DEFAULT_ORACLE_BUDGET, DEFAULT_REDUCTION_CAP,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_VERIFICATION: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "toric",
    about = "Grevlex initial ideals and reduced Groebner bases of simplicial toric ideals"
)]
pub struct Cli {
    /// Worker threads for the verification oracles (default: TORIC_THREADS
    /// env var, then all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse and validate an instance file; print the normalized instance.
    Validate { path: PathBuf },
    /// Compute the initial ideal and reduced Groebner basis.
    Groebner {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include the degree-bound report.
        #[arg(long)]
        with_report: bool,
    },
    /// Compute the equivalence-class decomposition and ring flags.
    Decompose {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the brute-force oracles against the pipeline result.
    Verify {
        path: PathBuf,
        /// Oracle depth; default is max degree over the minimal
        /// generators plus 2.
        #[arg(long)]
        oracle_degree: Option<u32>,
        /// Seed for the sampled minimal-representation cross-check.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Corrupt one basis tail before verification (testing only).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    M2,
}

/// Parses an instance file: a JSON document `{"d":…, "alpha":…,
/// "generators":[[…],…]}`, or a plain-text form with a `d alpha` header
/// line followed by one vector per line (`#` starts a comment).
pub fn parse_instance(content: &str) -> Result<RawInstance, String> {
    let trimmed = content.trim_start();
    if trimmed.starts_with('{') {
        return serde_json::from_str(content).map_err(|e| format!("invalid JSON instance: {}", e));
    }
    let mut lines = content
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines.next().ok_or("empty instance file")?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(format!("header must be `d alpha`, got `{}`", header));
    }
    let d: usize = head[0]
        .parse()
        .map_err(|e| format!("bad d in header: {}", e))?;
    let alpha: i64 = head[1]
        .parse()
        .map_err(|e| format!("bad alpha in header: {}", e))?;
    let mut generators = Vec::new();
    for line in lines {
        let row: Result<Vec<i64>, _> = line.split_whitespace().map(str::parse).collect();
        generators.push(row.map_err(|e| format!("bad generator line `{}`: {}", line, e))?);
    }
    Ok(RawInstance {
        d,
        alpha,
        generators,
    })
}

fn load_presentation(path: &Path) -> Result<(Presentation, Vec<Warning>), (i32, String)> {
    let content = std::fs::read_to_string(path)
        .map_err(|e| (EXIT_IO, format!("cannot read {}: {}", path.display(), e)))?;
    let raw = parse_instance(&content).map_err(|e| (EXIT_IO, e))?;
    Presentation::validate(&raw).map_err(|e| (EXIT_VALIDATION, validation_error_json(&e)))
}

fn validation_error_json(e: &CoreError) -> String {
    let kind = match e {
        CoreError::NonNegativityViolation { .. } => "NonNegativityViolation",
        CoreError::WrongDegree { .. } => "WrongDegree",
        CoreError::DuplicateGenerator { .. } => "DuplicateGenerator",
        CoreError::AxisGenerator { .. } => "AxisGenerator",
        CoreError::BadDimensions { .. } => "BadDimensions",
        CoreError::NotGraded { .. } => "NotGraded",
        CoreError::NotCongruent { .. } => "NotCongruent",
        CoreError::NotInA { .. } => "NotInA",
    };
    serde_json::to_string_pretty(&json!({
        "errors": [{ "kind": kind, "message": e.to_string() }]
    }))
    .unwrap()
}

/// M2-compatible rendering: underscored indexed variables.
fn m2_monomial(m: &Monomial) -> String {
    if m.is_unit() {
        return "1".into();
    }
    let mut parts = Vec::new();
    for (i, &e) in m.mu.iter().enumerate() {
        if e > 0 {
            parts.push(if e == 1 {
                format!("x_{}", i + 1)
            } else {
                format!("x_{}^{}", i + 1, e)
            });
        }
    }
    for (i, &e) in m.nu.iter().enumerate() {
        if e > 0 {
            parts.push(if e == 1 {
                format!("y_{}", i + 1)
            } else {
                format!("y_{}^{}", i + 1, e)
            });
        }
    }
    parts.join("*")
}

fn groebner_text(result: &GroebnerResult, with_report: bool) -> String {
    let mut out = String::new();
    writeln!(out, "N0 ({} generators):", result.n0.len()).unwrap();
    for n in &result.n0 {
        writeln!(out, "  {}", n).unwrap();
    }
    writeln!(out, "reduced Groebner basis ({} binomials):", result.basis.len()).unwrap();
    for g in &result.basis {
        writeln!(out, "  {}", g).unwrap();
    }
    writeln!(out, "max degree over candidates: {}", result.max_degree).unwrap();
    if with_report {
        let r = &result.degree_bound_report;
        writeln!(
            out,
            "reduction number + 1: {}",
            r.reduction_number_plus_one
        )
        .unwrap();
        writeln!(out, "degree-one decomposition condition: {}", r.thm46_condition).unwrap();
        writeln!(out, "candidate degrees within bound: {}", r.bound_holds_for_n).unwrap();
    }
    out
}

fn groebner_json(result: &GroebnerResult, with_report: bool) -> serde_json::Value {
    let mut v = json!({
        "n0": result.n0.iter().map(|m| json!({
            "monomial": m.to_string(),
            "mu": m.mu,
            "nu": m.nu,
        })).collect::<Vec<_>>(),
        "basis": result.basis.iter().map(|g| json!({
            "binomial": g.to_string(),
            "lead": { "mu": g.lead.mu, "nu": g.lead.nu },
            "tail": { "mu": g.tail.mu, "nu": g.tail.nu },
        })).collect::<Vec<_>>(),
        "max_degree": result.max_degree,
    });
    if with_report {
        v["degree_bound_report"] = serde_json::to_value(&result.degree_bound_report).unwrap();
    }
    v
}

fn groebner_m2(result: &GroebnerResult, pres: &Presentation) -> String {
    let mut vars = Vec::new();
    if pres.c() > 0 {
        vars.push(format!("x_1..x_{}", pres.c()));
    }
    vars.push(format!("y_1..y_{}", pres.d()));
    let mut out = String::new();
    writeln!(
        out,
        "R = QQ[{}, MonomialOrder => GRevLex];",
        vars.join(", ")
    )
    .unwrap();
    if result.basis.is_empty() {
        writeln!(out, "I = ideal(0_R);").unwrap();
    } else {
        let body = result
            .basis
            .iter()
            .map(|g| format!("  {} - {}", m2_monomial(&g.lead), m2_monomial(&g.tail)))
            .collect::<Vec<_>>()
            .join(",\n");
        writeln!(out, "I = ideal(\n{}\n);", body).unwrap();
    }
    out
}

fn decompose_text(report: &DecompositionReport) -> String {
    let mut out = String::new();
    writeln!(out, "e = {} equivalence classes", report.e).unwrap();
    let unit_classes = report.classes.iter().filter(|c| c.is_singleton()).count();
    let mut summary: Vec<String> = Vec::new();
    for c in report.classes.iter().filter(|c| !c.is_singleton()) {
        let gens = c
            .ideal_gens
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        summary.push(format!("1 x ({})", gens));
    }
    if unit_classes > 0 {
        summary.push(format!("{} x T", unit_classes));
    }
    writeln!(out, "decomposition: {}", summary.join(" + ")).unwrap();
    for (i, c) in report.classes.iter().enumerate() {
        let members = c
            .members
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        let gens = c
            .ideal_gens
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        writeln!(out, "class {}: members {{{}}}, h = {}, ideal = ({})", i + 1, members, c.h, gens)
            .unwrap();
    }
    writeln!(out, "cohen_macaulay: {}", report.is_cohen_macaulay).unwrap();
    writeln!(out, "buchsbaum: {}", report.is_buchsbaum).unwrap();
    writeln!(out, "degree_one_condition: {}", report.thm46_condition).unwrap();
    writeln!(out, "reduction_number: {}", report.reduction_number).unwrap();
    out
}

fn setup_threads(threads: Option<usize>) {
    #[cfg(feature = "parallel")]
    {
        let n = threads.or_else(|| {
            std::env::var("TORIC_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        });
        if let Some(n) = n {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
}

/// Runs a parsed command line and returns the process exit code. Output
/// goes to stdout, diagnostics to stderr.
pub fn run(cli: Cli) -> i32 {
    setup_threads(cli.threads);
    match cli.command {
        Command::Validate { path } => cmd_validate(&path),
        Command::Groebner {
            path,
            format,
            with_report,
        } => cmd_groebner(&path, format, with_report),
        Command::Decompose { path, format } => cmd_decompose(&path, format),
        Command::Verify {
            path,
            oracle_degree,
            seed,
            inject_fault,
        } => cmd_verify(&path, oracle_degree, seed, inject_fault),
    }
}

fn load_or_report(path: &Path) -> Result<Presentation, i32> {
    match load_presentation(path) {
        Ok((pres, warnings)) => {
            for w in warnings {
                eprintln!("{}", w);
            }
            Ok(pres)
        }
        Err((code, msg)) => {
            if code == EXIT_VALIDATION {
                println!("{}", msg);
            } else {
                eprintln!("{}", msg);
            }
            Err(code)
        }
    }
}

pub fn cmd_validate(path: &Path) -> i32 {
    match load_or_report(path) {
        Ok(pres) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&pres.raw()).unwrap()
            );
            EXIT_OK
        }
        Err(code) => code,
    }
}

pub fn cmd_groebner(path: &Path, format: Format, with_report: bool) -> i32 {
    let pres = match load_or_report(path) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let result = match reduced_groebner_basis(&pres) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("internal error: {}", e);
            return EXIT_IO;
        }
    };
    match format {
        Format::Text => print!("{}", groebner_text(&result, with_report)),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&groebner_json(&result, with_report)).unwrap()
        ),
        Format::M2 => print!("{}", groebner_m2(&result, &pres)),
    }
    EXIT_OK
}

pub fn cmd_decompose(path: &Path, format: Format) -> i32 {
    let pres = match load_or_report(path) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let report = match decomposition_report(&pres) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("internal error: {}", e);
            return EXIT_IO;
        }
    };
    match format {
        Format::Text => print!("{}", decompose_text(&report)),
        Format::Json | Format::M2 => {
            println!("{}", serde_json::to_string_pretty(&report).unwrap())
        }
    }
    EXIT_OK
}

pub fn cmd_verify(path: &Path, oracle_degree: Option<u32>, seed: u64, inject_fault: bool) -> i32 {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    let pres = match load_or_report(path) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let mut result = match reduced_groebner_basis(&pres) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("internal error: {}", e);
            return EXIT_IO;
        }
    };
    if inject_fault {
        if let Some(g) = result.basis.first_mut() {
            g.tail = g.tail.mul(&g.tail);
        }
    }

    let depth = oracle_degree.unwrap_or_else(|| default_oracle_depth(&result));
    let mut pass = true;

    match fiber_oracle(&pres, &result, depth, DEFAULT_ORACLE_BUDGET) {
        Ok(report) => {
            println!(
                "fiber oracle (depth {}): {} fibers, {}",
                depth,
                report.fibers_checked,
                if report.is_pass() { "pass" } else { "FAIL" }
            );
            for f in &report.failures {
                println!("  {} at {}: {}", f.monomial, f.point, f.reason);
            }
            pass &= report.is_pass();
        }
        Err(e) => {
            println!("fiber oracle: FAIL ({})", e);
            pass = false;
        }
    }

    match spair_check(&result, DivisorStrategy::SmallestLead, DEFAULT_REDUCTION_CAP) {
        Ok(out) => {
            println!(
                "s-pair check: {} pairs, {}",
                out.pairs_checked,
                if out.is_pass() { "pass" } else { "FAIL" }
            );
            pass &= out.is_pass();
        }
        Err(e) => {
            println!("s-pair check: FAIL ({})", e);
            pass = false;
        }
    }

    // Cross-check stored minimal representations against exhaustive
    // search; sampled when the table is large.
    const SAMPLE_CAP: usize = 64;
    let mut entries: Vec<_> = result.table.entries().collect();
    if entries.len() > SAMPLE_CAP {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        entries.shuffle(&mut rng);
        entries.truncate(SAMPLE_CAP);
    }
    let mut rep_failures = 0;
    for e in &entries {
        match brute_min_rep(&pres, &e.value) {
            Ok(m) if m.mu == e.mu => {}
            _ => {
                println!("  minimal representation mismatch at {}", e.value);
                rep_failures += 1;
            }
        }
    }
    println!(
        "minimal representations: {} entries checked, {}",
        entries.len(),
        if rep_failures == 0 { "pass" } else { "FAIL" }
    );
    pass &= rep_failures == 0;

    if pass {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_json_instance() {
        let raw = parse_instance(r#"{"d":3,"alpha":4,"generators":[[0,1,3],[2,0,2],[3,1,0]]}"#)
            .unwrap();
        assert_eq!(raw.d, 3);
        assert_eq!(raw.generators.len(), 3);
    }

    #[test]
    fn parses_text_instance() {
        let raw = parse_instance("# fixture\n3 4\n0 1 3\n2 0 2\n3 1 0\n").unwrap();
        assert_eq!(raw.alpha, 4);
        assert_eq!(raw.generators, vec![vec![0, 1, 3], vec![2, 0, 2], vec![3, 1, 0]]);
    }

    #[test]
    fn rejects_malformed_text() {
        assert!(parse_instance("").is_err());
        assert!(parse_instance("3\n1 2 3\n").is_err());
        assert!(parse_instance("2 4\n1 x\n").is_err());
    }

    #[test]
    fn instance_json_round_trip() {
        let raw = parse_instance("2 12\n11 1\n9 3\n4 8\n1 11\n").unwrap();
        let (pres, _) = Presentation::validate(&raw).unwrap();
        let text = serde_json::to_string(&pres.raw()).unwrap();
        let reparsed = parse_instance(&text).unwrap();
        let (pres2, _) = Presentation::validate(&reparsed).unwrap();
        assert_eq!(pres, pres2);
    }

    #[test]
    fn m2_rendering() {
        let m = Monomial {
            mu: vec![2, 1, 0],
            nu: vec![1, 0, 0],
        };
        assert_eq!(m2_monomial(&m), "x_1^2*x_2*y_1");
    }
}
