//! Command-line front end. Exit codes: 0 all pass, 1 violation found,
//! 2 usage or configuration error.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::catalog::{self, TableFormat};
use crate::exponents::{self, Provenance, ResidueClass};
use crate::field::{Field, FieldElement};
use crate::permcheck::{self, DeltaPolicy, PPInstance};
use crate::prooflab::{self, Suite};
use crate::selftest;

#[derive(Parser)]
#[command(
    name = "niho-pp",
    about = "Construct and exhaustively verify permutation polynomials (x^(2^m)+x+d)^(i(2^m-1)+1)+x over GF(2^(2m))"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical GF(2^n) (modulus and generator) as JSON.
    Field {
        /// Field degree, 2..=32.
        #[arg(long)]
        n: u32,
    },
    /// Solve (2^k+1)·i = c (mod 2^m+1) and print the construction witness.
    Solve {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: u32,
        /// Residue class: 1 or 2k.
        #[arg(long, default_value = "1")]
        class: String,
        /// Accept k outside 1..=m-1 (reported non-canonical).
        #[arg(long)]
        override_k_range: bool,
    },
    /// Exhaustively check f over GF(2^(2m)) for a construction index i.
    Verify {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        i: u64,
        /// Sweep every delta (degree 2m <= 12).
        #[arg(long, conflicts_with_all = ["delta", "sample"])]
        all_deltas: bool,
        /// Check a single delta, lowercase hex without prefix.
        #[arg(long, conflicts_with = "sample")]
        delta: Option<String>,
        /// Sweep a seeded sample of this many deltas.
        #[arg(long)]
        sample: Option<u64>,
        /// Seed for --sample.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Emit the catalog of known constructions with verification status.
    Table {
        #[arg(long, default_value_t = 2)]
        m_min: u32,
        #[arg(long, default_value_t = 8)]
        m_max: u32,
        /// json (lines) or csv.
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Run one numerical suite over GF(2^(2m)).
    Prooflab {
        /// lemma22 | lemma23 | lemma24 | partition | eq309 | eq315 | trace-pair | case2
        #[arg(long)]
        suite: String,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Run the acceptance suite (all criteria, or one).
    Selftest {
        /// Criterion id 1..=11; omit to run all.
        #[arg(long)]
        criterion: Option<u32>,
    },
}

#[derive(Serialize)]
struct SolveOutput {
    m: u32,
    k: u32,
    class: &'static str,
    i: Option<u64>,
    j: Option<u64>,
    s: Option<u64>,
    provenance: Option<&'static str>,
    applicable: bool,
    reason: String,
    canonical: bool,
}

#[derive(Serialize)]
struct SweepSummaryOutput {
    m: u32,
    i: u64,
    s: u64,
    total: usize,
    passed: usize,
    failed: usize,
    all_passed: bool,
}

fn provenance_label(p: Provenance) -> &'static str {
    match p {
        Provenance::Theorem3_1 => "Theorem3.1",
        Provenance::Theorem3_3 => "Theorem3.3",
        Provenance::CatalogExternal => "CatalogExternal",
    }
}

/// Parses argv and dispatches; output goes to `out`, diagnostics to `err`.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, String> {
    match command {
        Command::Field { n } => {
            let field = Field::new(n).map_err(|e| e.to_string())?;
            let line = serde_json::to_string(&field.spec_record()).expect("serializable");
            let _ = writeln!(out, "{line}");
            Ok(0)
        }
        Command::Solve {
            m,
            k,
            class,
            override_k_range,
        } => run_solve(m, k, &class, override_k_range, out),
        Command::Verify {
            m,
            i,
            all_deltas,
            delta,
            sample,
            seed,
        } => run_verify(m, i, all_deltas, delta, sample, seed, out),
        Command::Table {
            m_min,
            m_max,
            format,
        } => {
            let format = TableFormat::parse(&format)
                .ok_or_else(|| format!("unknown format {format:?}, expected json or csv"))?;
            let rows = catalog::build_table(m_min, m_max).map_err(|e| e.to_string())?;
            let _ = write!(out, "{}", catalog::render_table(&rows, format));
            let violation = rows
                .iter()
                .any(|r| r.delta_policy != "none" && !r.verified);
            Ok(if violation { 1 } else { 0 })
        }
        Command::Prooflab { suite, m, k } => {
            let suite = Suite::parse(&suite)
                .ok_or_else(|| format!("unknown suite {suite:?}"))?;
            let summary = prooflab::run_suite(suite, m, k).map_err(|e| e.to_string())?;
            let _ = writeln!(out, "{}", summary.to_json_line());
            Ok(if summary.clean() { 0 } else { 1 })
        }
        Command::Selftest { criterion } => {
            let results = match criterion {
                Some(id) => {
                    if !(1..=selftest::NUM_CRITERIA).contains(&id) {
                        return Err(format!(
                            "criterion {id} out of range 1..={}",
                            selftest::NUM_CRITERIA
                        ));
                    }
                    vec![selftest::run_criterion(id)]
                }
                None => selftest::run_all(),
            };
            let mut all_pass = true;
            for r in &results {
                all_pass &= r.passed;
                let _ = writeln!(out, "{}", r.line());
            }
            Ok(if all_pass { 0 } else { 1 })
        }
    }
}

fn run_solve(
    m: u32,
    k: u32,
    class: &str,
    override_k_range: bool,
    out: &mut dyn Write,
) -> Result<i32, String> {
    let class = match class {
        "1" => ResidueClass::One,
        "2k" | "2K" => ResidueClass::TwoPowK,
        other => return Err(format!("unknown class {other:?}, expected 1 or 2k")),
    };
    let output = match exponents::construct_i_with(m, k, class, override_k_range) {
        Ok(w) => SolveOutput {
            m,
            k,
            class: class.label(),
            i: Some(w.i),
            j: Some(exponents::dual_index(m, w.i)),
            s: Some(exponents::niho_exponent(m, w.i).s),
            provenance: w.provenance.map(provenance_label),
            applicable: w.applicable,
            reason: w.reason,
            canonical: w.params.canonical,
        },
        Err(e @ exponents::ExponentError::NoSolution { .. }) => SolveOutput {
            m,
            k,
            class: class.label(),
            i: None,
            j: None,
            s: None,
            provenance: None,
            applicable: false,
            reason: e.to_string(),
            canonical: (1..m.max(1)).contains(&k),
        },
        Err(e) => return Err(e.to_string()),
    };
    let _ = writeln!(out, "{}", serde_json::to_string(&output).expect("serializable"));
    Ok(0)
}

fn run_verify(
    m: u32,
    i: u64,
    all_deltas: bool,
    delta: Option<String>,
    sample: Option<u64>,
    seed: u64,
    out: &mut dyn Write,
) -> Result<i32, String> {
    let field = Field::new(2 * m).map_err(|e| e.to_string())?;

    if let Some(hex) = delta {
        let delta = FieldElement::from_hex(&hex).map_err(|e| e.to_string())?;
        field.element(delta.bits()).map_err(|e| e.to_string())?;
        let mut report = PPInstance::from_index(&field, delta, i)
            .map_err(|e| e.to_string())?
            .check_exhaustive()
            .map_err(|e| e.to_string())?;
        report.i = Some(i);
        let _ = writeln!(out, "{}", report.to_json_line());
        return Ok(if report.is_permutation { 0 } else { 1 });
    }

    let policy = if all_deltas {
        DeltaPolicy::All
    } else if let Some(count) = sample {
        DeltaPolicy::Sample { count, seed }
    } else if field.degree() <= permcheck::ALL_SWEEP_DEGREE_LIMIT {
        DeltaPolicy::All
    } else {
        DeltaPolicy::Sample { count: 64, seed }
    };
    let sweep = permcheck::verify_construction(&field, i, policy).map_err(|e| e.to_string())?;
    for report in &sweep.reports {
        let _ = writeln!(out, "{}", report.to_json_line());
    }
    let summary = SweepSummaryOutput {
        m,
        i,
        s: sweep.s,
        total: sweep.reports.len(),
        passed: sweep.passed(),
        failed: sweep.failed(),
        all_passed: sweep.all_passed(),
    };
    let _ = writeln!(out, "{}", serde_json::to_string(&summary).expect("serializable"));
    Ok(if sweep.all_passed() { 0 } else { 1 })
}
