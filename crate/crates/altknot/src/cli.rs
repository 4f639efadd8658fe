//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
//! or input errors.  Output is deterministic: two runs with the same
//! arguments produce identical bytes.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::bounds::{alt_bounds, alt_exact, asymptotic_lower, csv_row, tau_upsilon_bound, CSV_HEADER};
use crate::braid::BraidWord;
use crate::construction::{build_deformation, verify_certificate, DeformationCertificate};
use crate::diagram::closure_diagram;
use crate::invariants::{invariant_set, KnotSpec, TorusKnot};
use crate::upsilon::{exponents_of, staircase_of, upsilon1, upsilon_fn};

#[derive(Parser)]
#[command(
    name = "altknot",
    version,
    about = "Exact torus-knot invariants, alternation bounds, and crossing-change certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariant set of a knot (Alexander, Jones, signature, ...)
    Invariants {
        #[command(flatten)]
        knot: KnotSelector,
        /// Emit machine-readable JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Print the upsilon function of a torus knot as exact breakpoints
    Upsilon {
        /// Torus knot parameters, e.g. 3,4
        #[arg(long, value_name = "P,Q")]
        torus: String,
        /// Emit machine-readable JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Bounds and (when known) the exact alternation number of a torus knot
    Bounds {
        /// Torus knot parameters, e.g. 4,9
        #[arg(long, value_name = "P,Q")]
        torus: String,
        /// Emit machine-readable JSON instead of text
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// Emit a CSV header plus one row instead of text
        #[arg(long)]
        csv: bool,
    },
    /// CSV table of alternation bounds over all torus knots with p <= 4
    Table {
        /// Largest q to include (default 21)
        #[arg(long, value_name = "N", default_value_t = 21)]
        max_n: i64,
        /// Emit machine-readable JSON instead of CSV
        #[arg(long)]
        json: bool,
        /// Write the table to a file instead of stdout
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Build and emit the crossing-change certificate for T(4,2n+1)
    Certify {
        /// Family parameter n >= 2; the source knot is T(4,2n+1)
        #[arg(long, value_name = "N")]
        n: i64,
        /// Write the certificate to a file instead of stdout
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Re-verify a certificate file, printing one line per check
    Verify {
        /// Path of a certificate JSON file
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Recompute every certified table and certificate; report each case
    VerifyPaper {
        /// Largest family parameter n to certify (default 6)
        #[arg(long, value_name = "N", default_value_t = 6)]
        max_n: i64,
    },
    /// Alternation report for one diagram: crossings, distance to alternating
    DealternateDiagram {
        #[command(flatten)]
        knot: KnotSelector,
        /// Emit machine-readable JSON instead of text
        #[arg(long)]
        json: bool,
    },
}

/// Exactly one way to name a knot: torus parameters or an explicit braid word.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct KnotSelector {
    /// Torus knot parameters, e.g. 3,4
    #[arg(long, value_name = "P,Q")]
    torus: Option<String>,
    /// Braid word as signed generator indices, e.g. "1 -2 1 3"
    #[arg(long, value_name = "WORD")]
    braid: Option<String>,
}

impl KnotSelector {
    /// Resolves to a knot description plus a printable label.
    fn resolve(&self) -> Result<(KnotSpec, String), String> {
        if let Some(text) = &self.torus {
            let k = parse_torus(text)?;
            return Ok((KnotSpec::Torus(k), k.to_string()));
        }
        let text = self.braid.as_deref().expect("clap group guarantees one selector");
        let w = BraidWord::parse(text, None).map_err(|e| e.to_string())?;
        let label = format!("closure of [{}] on {} strands", join_letters(w.letters()), w.strands());
        Ok((KnotSpec::BraidClosure(w), label))
    }

    /// Resolves to a braid word (torus knots contribute their standard braid).
    fn resolve_braid(&self) -> Result<(BraidWord, String), String> {
        match self.resolve()? {
            (KnotSpec::Torus(k), label) => Ok((k.braid(), label)),
            (KnotSpec::BraidClosure(w), label) => Ok((w, label)),
            _ => unreachable!("selector resolves to a torus knot or a braid closure"),
        }
    }
}

fn parse_torus(text: &str) -> Result<TorusKnot, String> {
    let (p, q) = text
        .split_once(',')
        .ok_or_else(|| format!("expected torus parameters as P,Q; got {text:?}"))?;
    let p: i64 = p.trim().parse().map_err(|e| format!("bad p in {text:?}: {e}"))?;
    let q: i64 = q.trim().parse().map_err(|e| format!("bad q in {text:?}: {e}"))?;
    TorusKnot::new(p, q).map_err(|e| e.to_string())
}

fn join_letters(letters: &[i32]) -> String {
    letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

/// Prints to stdout or, when a path is given, writes the file and prints a
/// one-line confirmation.
fn emit(out: &Option<PathBuf>, body: &str) -> Result<(), String> {
    match out {
        None => {
            print!("{body}");
            Ok(())
        }
        Some(path) => {
            std::fs::write(path, body).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            println!("wrote {}", path.display());
            Ok(())
        }
    }
}

/// Parses the process arguments, dispatches, and returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Invariants { knot, json } => cmd_invariants(&knot, json),
        Command::Upsilon { torus, json } => cmd_upsilon(&torus, json),
        Command::Bounds { torus, json, csv } => cmd_bounds(&torus, json, csv),
        Command::Table { max_n, json, out } => cmd_table(max_n, json, &out),
        Command::Certify { n, out } => cmd_certify(n, &out),
        Command::Verify { input } => cmd_verify(&input),
        Command::VerifyPaper { max_n } => cmd_verify_paper(max_n),
        Command::DealternateDiagram { knot, json } => cmd_dealternate(&knot, json),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn cmd_invariants(knot: &KnotSelector, json: bool) -> Result<i32, String> {
    let (spec, label) = knot.resolve()?;
    let set = invariant_set(&spec).map_err(|e| e.to_string())?;
    if json {
        println!("{}", pretty(&set)?);
        return Ok(0);
    }
    let mut body = String::new();
    let _ = writeln!(body, "knot = {label}");
    let _ = writeln!(body, "alexander = {}", set.alexander);
    let _ = writeln!(body, "jones = {}", set.jones);
    let _ = writeln!(body, "signature = {}", set.signature);
    let _ = writeln!(body, "determinant = {}", set.determinant);
    for (name, value) in [
        ("genus", set.genus),
        ("tau", set.tau),
        ("s", set.s),
        ("upsilon1", set.upsilon1),
    ] {
        if let Some(v) = value {
            let _ = writeln!(body, "{name} = {v}");
        }
    }
    print!("{body}");
    Ok(0)
}

fn cmd_upsilon(torus: &str, json: bool) -> Result<i32, String> {
    let k = parse_torus(torus)?;
    let delta = crate::invariants::alexander_torus(k);
    let staircase = staircase_of(&exponents_of(&delta).map_err(|e| e.to_string())?);
    let envelope = upsilon_fn(&staircase);
    let value = upsilon1(k).map_err(|e| e.to_string())?;
    if json {
        let breakpoints: Vec<serde_json::Value> = envelope
            .breakpoints()
            .iter()
            .map(|(t, v)| serde_json::json!([t.to_string(), v.to_string()]))
            .collect();
        let doc = serde_json::json!({
            "torus": [k.p(), k.q()],
            "breakpoints": breakpoints,
            "upsilon1": value,
        });
        println!("{}", pretty(&doc)?);
        return Ok(0);
    }
    let mut body = String::new();
    for (t, v) in envelope.breakpoints() {
        let _ = writeln!(body, "t={t} v={v}");
    }
    let _ = writeln!(body, "upsilon1 = {value}");
    print!("{body}");
    Ok(0)
}

fn cmd_bounds(torus: &str, json: bool, csv: bool) -> Result<i32, String> {
    let k = parse_torus(torus)?;
    if csv {
        println!("{CSV_HEADER}");
        println!("{}", csv_row(k).map_err(|e| e.to_string())?);
        return Ok(0);
    }
    let b = alt_bounds(k).map_err(|e| e.to_string())?;
    if json {
        let provenance: Vec<serde_json::Value> = b
            .provenance
            .iter()
            .map(|(tag, description)| serde_json::json!({"tag": tag, "description": description}))
            .collect();
        let doc = serde_json::json!({
            "p": k.p(),
            "q": k.q(),
            "genus": k.genus(),
            "lower": b.lower,
            "upper": b.upper,
            "exact": b.exact,
            "provenance": provenance,
        });
        println!("{}", pretty(&doc)?);
        return Ok(0);
    }
    let mut body = String::new();
    let _ = writeln!(body, "knot = {k}");
    let _ = writeln!(body, "genus = {}", k.genus());
    let _ = writeln!(body, "lower = {}", b.lower);
    match b.upper {
        Some(u) => {
            let _ = writeln!(body, "upper = {u}");
        }
        None => {
            let _ = writeln!(body, "upper = unknown");
        }
    }
    match b.exact {
        Some(e) => {
            let _ = writeln!(body, "exact = {e}");
        }
        None => {
            let _ = writeln!(body, "exact = unknown");
        }
    }
    let _ = writeln!(body, "provenance:");
    for (tag, description) in &b.provenance {
        let _ = writeln!(body, "  {tag}: {description}");
    }
    print!("{body}");
    Ok(0)
}

fn cmd_table(max_n: i64, json: bool, out: &Option<PathBuf>) -> Result<i32, String> {
    if max_n < 3 {
        return Err(format!("--max-n must be at least 3, got {max_n}"));
    }
    let mut rows = Vec::new();
    for p in [2i64, 3, 4] {
        for q in (p + 1)..=max_n {
            if num::integer::gcd(p, q) != 1 {
                continue;
            }
            let k = TorusKnot::new(p, q).map_err(|e| e.to_string())?;
            rows.push(csv_row(k).map_err(|e| e.to_string())?);
        }
    }
    let body = if json {
        let columns: Vec<&str> = CSV_HEADER.split(',').collect();
        let cells: Vec<Vec<&str>> = rows.iter().map(|r| r.split(',').collect()).collect();
        let doc = serde_json::json!({"columns": columns, "rows": cells});
        format!("{}\n", pretty(&doc)?)
    } else {
        let mut text = String::new();
        let _ = writeln!(text, "{CSV_HEADER}");
        for row in &rows {
            let _ = writeln!(text, "{row}");
        }
        text
    };
    emit(out, &body)?;
    Ok(0)
}

fn cmd_certify(n: i64, out: &Option<PathBuf>) -> Result<i32, String> {
    let certificate = build_deformation(n).map_err(|e| e.to_string())?;
    let body = format!("{}\n", pretty(&certificate)?);
    emit(out, &body)?;
    Ok(0)
}

fn cmd_verify(input: &PathBuf) -> Result<i32, String> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| format!("cannot read {}: {e}", input.display()))?;
    let certificate: DeformationCertificate =
        serde_json::from_str(&text).map_err(|e| format!("bad certificate JSON: {e}"))?;
    let checks = verify_certificate(&certificate);
    let mut failed = 0usize;
    for check in &checks {
        let verdict = if check.pass { "PASS" } else { "FAIL" };
        println!("{verdict} {}: {}", check.name, check.detail);
        if !check.pass {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("certificate OK ({} checks)", checks.len());
        Ok(0)
    } else {
        println!("certificate INVALID ({failed} of {} checks failed)", checks.len());
        Ok(1)
    }
}

fn cmd_dealternate(knot: &KnotSelector, json: bool) -> Result<i32, String> {
    let (word, label) = knot.resolve_braid()?;
    let diagram = closure_diagram(&word);
    let alternating = diagram.is_alternating().map_err(|e| e.to_string())?;
    let distance = diagram.alternating_distance().map_err(|e| e.to_string())?;
    if json {
        let doc = serde_json::json!({
            "diagram": label,
            "crossings": diagram.crossing_count(),
            "writhe": diagram.writhe(),
            "alternating": alternating,
            "alternating_distance": distance,
        });
        println!("{}", pretty(&doc)?);
        return Ok(0);
    }
    let mut body = String::new();
    let _ = writeln!(body, "diagram = {label}");
    let _ = writeln!(body, "crossings = {}", diagram.crossing_count());
    let _ = writeln!(body, "writhe = {}", diagram.writhe());
    let _ = writeln!(body, "alternating = {alternating}");
    let _ = writeln!(body, "alternating-distance = {distance}");
    print!("{body}");
    Ok(0)
}

/// One batch-verification case: a sortable key, a kebab-case check name, a
/// human-readable subject, and the outcome.
struct Case {
    key: (u8, i64, i64),
    name: &'static str,
    subject: String,
    pass: bool,
    detail: String,
}

fn push_case(cases: &mut Vec<Case>, key: (u8, i64, i64), name: &'static str, subject: String, pass: bool, detail: String) {
    cases.push(Case { key, name, subject, pass, detail });
}

/// Recomputes, from scratch, every certified fact this crate ships: the
/// upsilon-value table, the tau/upsilon lower bound, the exact alternation
/// table for braid index at most 4, the crossing-change certificates, and the
/// asymptotic slope table.  Prints one line per case in sorted order.
fn cmd_verify_paper(max_n: i64) -> Result<i32, String> {
    if max_n < 1 {
        return Err(format!("--max-n must be at least 1, got {max_n}"));
    }
    let mut cases: Vec<Case> = Vec::new();

    // Upsilon values and the tau/upsilon lower bound on the three families
    // T(3,3n+1), T(3,3n+2), T(4,2n+1).
    for n in 1..=max_n {
        let families = [
            TorusKnot::new(3, 3 * n + 1),
            TorusKnot::new(3, 3 * n + 2),
            TorusKnot::new(4, 2 * n + 1),
        ];
        let expected_upsilon = [-2 * n, -2 * n - 1, -2 * n];
        for (k, expected) in families.into_iter().zip(expected_upsilon) {
            let k = k.map_err(|e| e.to_string())?;
            let got = upsilon1(k).map_err(|e| e.to_string())?;
            push_case(
                &mut cases,
                (1, k.p(), k.q()),
                "upsilon-values",
                k.to_string(),
                got == expected,
                format!("upsilon1 = {got}, expected {expected}"),
            );
            let bound = tau_upsilon_bound(k).map_err(|e| e.to_string())?;
            push_case(
                &mut cases,
                (2, k.p(), k.q()),
                "tau-upsilon-bound",
                k.to_string(),
                bound == n,
                format!("|tau + upsilon1| = {bound}, expected {n}"),
            );
        }
    }

    // Exact alternation numbers for every torus knot of braid index <= 4
    // with q <= 21: floor(g/3) for braid index 3 and 4, zero for index 2.
    for p in [2i64, 3, 4] {
        for q in (p + 1)..=21 {
            if num::integer::gcd(p, q) != 1 {
                continue;
            }
            let k = TorusKnot::new(p, q).map_err(|e| e.to_string())?;
            let expected = if p == 2 { 0 } else { k.genus() / 3 };
            let b = alt_bounds(k).map_err(|e| e.to_string())?;
            let pass = b.exact == Some(expected) && b.lower == expected && b.upper == Some(expected);
            push_case(
                &mut cases,
                (3, p, q),
                "alternation-table",
                k.to_string(),
                pass,
                format!(
                    "lower = {}, upper = {:?}, exact = {:?}, expected {expected}",
                    b.lower, b.upper, b.exact
                ),
            );
        }
    }

    // Crossing-change certificates T(4,2n+1) -> T(2,2n+1) # T(2,2n+1).
    for n in 2..=max_n {
        let subject = format!("n={n}");
        match build_deformation(n) {
            Ok(certificate) => {
                let checks = verify_certificate(&certificate);
                let failed: Vec<&str> = checks
                    .iter()
                    .filter(|c| !c.pass)
                    .map(|c| c.name.as_str())
                    .collect();
                push_case(
                    &mut cases,
                    (4, n, 0),
                    "deformation-certificate",
                    subject,
                    failed.is_empty(),
                    if failed.is_empty() {
                        format!("{} checks passed", checks.len())
                    } else {
                        format!("failed: {}", failed.join(", "))
                    },
                );
            }
            Err(e) => push_case(
                &mut cases,
                (4, n, 0),
                "deformation-certificate",
                subject,
                false,
                e.to_string(),
            ),
        }
    }

    // Asymptotic slopes: the per-full-twist growth of the exact table must
    // match the asymptotic lower bound for each braid index.
    for (p, expected) in [(3i64, 1i64), (4, 2)] {
        let bound = asymptotic_lower(p).map_err(|e| e.to_string())?;
        push_case(
            &mut cases,
            (5, p, 0),
            "asymptotic-lower",
            format!("p={p}"),
            bound.lower == crate::algebra::rat_int(expected),
            format!("per-full-twist bound = {}, expected {expected}", bound.lower),
        );
        for q in (p + 1)..=(21 - p) {
            if num::integer::gcd(p, q) != 1 {
                continue;
            }
            let low = alt_exact(TorusKnot::new(p, q).map_err(|e| e.to_string())?);
            let high = alt_exact(TorusKnot::new(p, q + p).map_err(|e| e.to_string())?);
            let (Some(low), Some(high)) = (low, high) else {
                push_case(
                    &mut cases,
                    (6, p, q),
                    "asymptotic-slope",
                    format!("T({p},{q}) + full twist"),
                    false,
                    "exact value unavailable".to_string(),
                );
                continue;
            };
            push_case(
                &mut cases,
                (6, p, q),
                "asymptotic-slope",
                format!("T({p},{q}) + full twist"),
                high - low == expected,
                format!("alt(T({p},{})) - alt(T({p},{q})) = {}, expected {expected}", q + p, high - low),
            );
        }
    }

    cases.sort_by_key(|c| c.key);
    let mut failed = 0usize;
    for case in &cases {
        let verdict = if case.pass { "PASS" } else { "FAIL" };
        println!("{verdict} {} {}: {}", case.name, case.subject, case.detail);
        if !case.pass {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("all {} checks passed", cases.len());
        Ok(0)
    } else {
        println!("{failed} of {} checks failed", cases.len());
        Ok(1)
    }
}

fn pretty<T: serde::Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value).map_err(|e| e.to_string())
}
