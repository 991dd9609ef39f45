use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use logder::arrangement::{Arrangement, Multiarrangement};
use logder::classify::{self, ClassificationReport, NT2Report};
use logder::{arrfile, golden, logderiv, oracle, resolution, Error};

#[derive(Parser)]
#[command(name = "arrtool", version, about = "Logarithmic derivation modules of hyperplane arrangements")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degrees of a minimal generating set of D(A, m).
    Ds { file: PathBuf },
    /// Minimal free resolution of D(A, m).
    Resolve { file: PathBuf },
    /// Free, SPOG or other, with the consistency checks.
    Classify { file: PathBuf },
    /// Delete hyperplanes and print the result as an arrangement file.
    Delete {
        file: PathBuf,
        /// Comma-separated 1-based indices.
        #[arg(long, value_delimiter = ',', required = true)]
        indices: Vec<usize>,
    },
    /// Single deletion of a free arrangement.
    Nt1 {
        file: PathBuf,
        #[arg(long)]
        i: usize,
    },
    /// Double deletion of a free arrangement.
    Nt2 {
        file: PathBuf,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// dim D(A, m)_d and new generators per degree, by direct linear algebra.
    Oracle {
        file: PathBuf,
        /// Highest degree to tabulate; defaults to |A|.
        #[arg(long)]
        max_degree: Option<i64>,
    },
    /// Check every embedded worked example.
    VerifyPaper,
}

enum Failure {
    Input(String),
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse { .. } | Error::PolynomialSyntax(_) => Failure::Input(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn read(path: &Path) -> Result<Multiarrangement, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(arrfile::parse(&text)?)
}

fn read_simple(path: &Path) -> Result<Arrangement, Failure> {
    read(path)?
        .into_simple()
        .ok_or_else(|| Failure::Precondition("expected a simple arrangement (all multiplicities 1)".into()))
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

fn fmt_degrees(v: &[i64]) -> String {
    logderiv::DegreeSequence(v.to_vec()).to_string()
}

fn report_text(r: &ClassificationReport) -> String {
    let mut s = format!("verdict: {}\n", r.verdict);
    if let Some(e) = &r.exponents {
        s += &format!("exponents: {}\n", fmt_degrees(e));
    }
    if let Some(po) = &r.po_exponents {
        s += &format!("PO-exponents: {}\n", fmt_degrees(po));
    }
    if let Some(l) = r.level {
        s += &format!("level: {l}\n");
    }
    if let Some(c) = &r.level_coefficient {
        s += &format!("level coefficient: {c}\n");
    }
    s += &format!("DS = {}\npd: {}\n", fmt_degrees(&r.ds), r.pd);
    if let Some(t) = r.case_tag {
        s += &format!("case: {t}\n");
    }
    s += &checks_text(&r.checks);
    s
}

fn checks_text(checks: &std::collections::BTreeMap<String, bool>) -> String {
    let failed: Vec<&String> = checks.iter().filter(|(_, v)| !**v).map(|(k, _)| k).collect();
    if failed.is_empty() {
        format!("checks: {} passed\n", checks.len())
    } else {
        let names: Vec<&str> = failed.iter().map(|s| s.as_str()).collect();
        format!("checks: {} failed: {}\n", failed.len(), names.join(", "))
    }
}

fn nt2_text(r: &NT2Report) -> String {
    let mut s = format!("A: {}\n", golden::summary(&r.a));
    s += &format!("A_{}: {}\n", r.indices.0, golden::summary(&r.a_i));
    s += &format!("A_{}: {}\n", r.indices.1, golden::summary(&r.a_j));
    s += &format!("|A_X| for H{} ∩ H{}: {}\n", r.indices.0, r.indices.1, r.flat_multiplicity);
    if let Some((c1, c2)) = r.levels {
        s += &format!("levels: {c1}, {c2}\n");
    }
    s += &format!("A_{{{},{}}}:\n", r.indices.0, r.indices.1);
    for line in report_text(&r.a_ij).lines().filter(|l| !l.starts_with("checks")) {
        s += &format!("  {line}\n");
    }
    if let Some(t) = r.case_tag {
        s += &format!("case: {t}\n");
    }
    s += &checks_text(&r.checks);
    s
}

fn run(cli: &Cli) -> Outcome {
    let as_json = cli.json;
    match &cli.command {
        Command::Ds { file } => {
            let ds = logderiv::degree_sequence(&read(file)?)?;
            Ok((if as_json { json(&ds.degrees()) } else { format!("DS = {ds}\n") }, true))
        }
        Command::Resolve { file } => {
            let d = logderiv::derivation_module(&read(file)?)?;
            let table = resolution::minimal_free_resolution(&d)?.betti_table();
            if as_json {
                return Ok((json(&table), true));
            }
            let mut s = format!("{}\npd: {}\n", table.shape(), table.projective_dimension());
            for (j, step) in table.steps().iter().enumerate() {
                let parts: Vec<String> = step.iter().map(|(d, n)| format!("{d}:{n}")).collect();
                s += &format!("F{j}: {}\n", parts.join(" "));
            }
            Ok((s, true))
        }
        Command::Classify { file } => {
            let am = read(file)?;
            let r = classify::analyze(&am)?.report;
            Ok((if as_json { json(&r) } else { report_text(&r) }, true))
        }
        Command::Delete { file, indices } => {
            let a = read_simple(file)?;
            let (b, kept) = a.delete(indices)?;
            if as_json {
                #[derive(Serialize)]
                struct Deleted {
                    removed: Vec<usize>,
                    kept: Vec<usize>,
                    arrangement: String,
                }
                let mut removed = indices.clone();
                removed.sort_unstable();
                let text = arrfile::serialize(&Multiarrangement::simple(b));
                return Ok((json(&Deleted { removed, kept, arrangement: text }), true));
            }
            Ok((arrfile::serialize(&Multiarrangement::simple(b)), true))
        }
        Command::Nt1 { file, i } => {
            let r = classify::nt1_report(&read_simple(file)?, *i)?;
            let ok = r.all_checks_pass();
            Ok((if as_json { json(&r) } else { report_text(&r) }, ok))
        }
        Command::Nt2 { file, i, j } => {
            let r = classify::nt2_report(&read_simple(file)?, *i, *j)?;
            let ok = r.all_checks_pass();
            Ok((if as_json { json(&r) } else { nt2_text(&r) }, ok))
        }
        Command::Oracle { file, max_degree } => {
            let am = read(file)?;
            let top = max_degree.unwrap_or(am.total() as i64);
            let rows = oracle::oracle_table(&am, top)?;
            if as_json {
                #[derive(Serialize)]
                struct Row {
                    degree: i64,
                    dim: usize,
                    new_generators: usize,
                }
                let rows: Vec<Row> = rows
                    .iter()
                    .map(|r| Row { degree: r.degree, dim: r.dim, new_generators: r.new_generators })
                    .collect();
                return Ok((json(&rows), true));
            }
            Ok((oracle::table_tsv(&rows), true))
        }
        Command::VerifyPaper => {
            let all = golden::verify_examples();
            let ok = all.iter().all(|e| e.pass());
            if as_json {
                #[derive(Serialize)]
                struct Line<'a> {
                    case: &'a str,
                    criterion: u8,
                    claim: &'a str,
                    expected: &'a str,
                    actual: &'a str,
                    pass: bool,
                }
                let lines: Vec<Line> = all
                    .iter()
                    .map(|e| Line {
                        case: e.case,
                        criterion: e.criterion,
                        claim: &e.claim,
                        expected: &e.expected,
                        actual: &e.actual,
                        pass: e.pass(),
                    })
                    .collect();
                return Ok((json(&lines), ok));
            }
            let mut s = String::new();
            for e in &all {
                if e.pass() {
                    s += &format!("PASS {}: {}: {}\n", e.case, e.claim, e.actual);
                } else {
                    s += &format!("FAIL {}: {}: expected {}, got {}\n", e.case, e.claim, e.expected, e.actual);
                }
            }
            let passed = all.iter().filter(|e| e.pass()).count();
            s += &format!("{passed}/{} expectations hold\n", all.len());
            Ok((s, ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = std::env::var("ARRTOOL_THREADS").ok().and_then(|v| v.parse::<usize>().ok());
    if let Some(n) = threads.filter(|&n| n > 0) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(&cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Precondition(m)) => {
            eprintln!("arrtool: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("arrtool: {m}");
            ExitCode::from(2)
        }
    }
}
