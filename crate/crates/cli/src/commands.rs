//! Command implementations. Each returns the text for standard output and
//! standard error plus the process exit code, so they can be tested without
//! spawning a process.
//!
//! Exit codes: 0 success / primarily orientable, 1 negative answer or
//! sweep disagreement, 2 parse or usage error, 3 oracle budget exhausted.

use std::fmt::Write as _;

use primorient::generators::FamilySpec;
use primorient::oracle::{self, Mismatch, OracleOutcome, SweepReport};
use primorient::{build, decide, maximal_smodules, primality, Decision};

use crate::document::{to_dot, EdgeListDocument, OrientationDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            ..Outcome::default()
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Outcome {
            stderr: format!("error: {}\n", message.into()),
            code: EXIT_USAGE,
            ..Outcome::default()
        }
    }
}

fn set_text(set: &[usize]) -> String {
    let items: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

pub fn check(doc: &EdgeListDocument) -> Outcome {
    match decide(&doc.graph) {
        Decision::PrimarilyOrientable { .. } => Outcome::ok("primarily orientable\n".into()),
        Decision::NotPrimarilyOrientable(reason) => Outcome {
            stdout: format!("not primarily orientable: {reason}\n"),
            code: EXIT_NEGATIVE,
            ..Outcome::default()
        },
    }
}

pub fn orient(doc: &EdgeListDocument, dot: bool, certify: bool) -> Outcome {
    if let Decision::NotPrimarilyOrientable(reason) = decide(&doc.graph) {
        return Outcome {
            stderr: format!("not primarily orientable: {reason}\n"),
            code: EXIT_NEGATIVE,
            ..Outcome::default()
        };
    }
    let orientation = match build(&doc.graph) {
        Ok(o) => o,
        Err(e) => {
            return Outcome {
                stderr: format!("error: {e}\n"),
                code: EXIT_NEGATIVE,
                ..Outcome::default()
            }
        }
    };
    let mut stderr = String::new();
    if certify {
        if orientation.is_orientation_of(&doc.graph) && primality(&orientation).prime {
            stderr.push_str("certified prime\n");
        } else {
            return Outcome {
                stderr: "error: certification failed\n".into(),
                code: EXIT_NEGATIVE,
                ..Outcome::default()
            };
        }
    }
    let stdout = if dot {
        to_dot(&orientation, &doc.names)
    } else {
        OrientationDocument { orientation }.to_string()
    };
    Outcome {
        stdout,
        stderr,
        code: EXIT_OK,
    }
}

pub fn modules(doc: &EdgeListDocument) -> Outcome {
    let g = &doc.graph;
    let mut out = String::new();
    let classes = maximal_smodules(g);
    if classes.is_empty() {
        out.push_str("sduo-free\n");
    }
    for class in classes {
        let degree = g.degree(class[0]);
        writeln!(out, "class {} degree {degree}", set_text(&class)).unwrap();
    }
    let report = primality(g);
    match (report.prime, report.witness) {
        (true, _) => out.push_str("prime\n"),
        (false, Some(w)) => writeln!(out, "decomposable, module {}", set_text(&w)).unwrap(),
        (false, None) => out.push_str("decomposable, fewer than 3 vertices\n"),
    }
    Outcome::ok(out)
}

pub fn oracle(doc: &EdgeListDocument, budget: Option<u64>) -> Outcome {
    match oracle::exists_prime_orientation(&doc.graph, budget) {
        OracleOutcome::Found { witness, tried } => Outcome {
            stdout: format!(
                "# prime orientation found after {tried} orientations\n{}",
                OrientationDocument {
                    orientation: witness
                }
            ),
            ..Outcome::default()
        },
        OracleOutcome::NoneExists { tried } => Outcome {
            stdout: format!("no prime orientation ({tried} orientations checked)\n"),
            code: EXIT_NEGATIVE,
            ..Outcome::default()
        },
        OracleOutcome::Exhausted { tried } => Outcome {
            stdout: format!("inconclusive: budget exhausted after {tried} orientations\n"),
            code: EXIT_INCONCLUSIVE,
            ..Outcome::default()
        },
    }
}

fn sweep_text(report: &SweepReport) -> String {
    let mut out = format!(
        "{} graphs, {} disagreements",
        report.graphs_checked,
        report.disagreements.len()
    );
    if report.inconclusive > 0 {
        write!(out, ", {} inconclusive", report.inconclusive).unwrap();
    }
    out.push('\n');
    for d in &report.disagreements {
        let edges: Vec<String> = d.graph.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        let what = match &d.mismatch {
            Mismatch::Verdict {
                decided,
                oracle_found,
            } => format!("decided {decided:?}, oracle found orientation: {oracle_found}"),
            Mismatch::Build(e) => format!("build failed: {e}"),
        };
        writeln!(out, "graph #{} [{}]: {what}", d.index, edges.join(" ")).unwrap();
    }
    out
}

pub fn sweep(n: usize, sample: Option<usize>, seed: u64) -> Outcome {
    let report = match sample {
        Some(count) => oracle::sample_sweep(n, count, seed),
        None => oracle::sweep_all_graphs(n),
    };
    match report {
        Ok(report) => Outcome {
            stdout: sweep_text(&report),
            code: if report.passed() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            },
            ..Outcome::default()
        },
        Err(e) => Outcome::usage(e.to_string()),
    }
}

pub fn gen(spec: &FamilySpec) -> Outcome {
    match spec.generate() {
        Ok(graph) => Outcome::ok(EdgeListDocument::new(graph).to_string()),
        Err(e) => Outcome::usage(e.to_string()),
    }
}
