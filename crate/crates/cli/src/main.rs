use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use primorient::generators::FamilySpec;
use primorient_cli::commands::{self, Outcome};
use primorient_cli::EdgeListDocument;

#[derive(Parser)]
#[command(version, about = "Decide and build prime orientations of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the graph has a prime orientation.
    Check { input: PathBuf },
    /// Print a prime orientation of the graph.
    Orient {
        input: PathBuf,
        /// Emit Graphviz DOT instead of an orientation document.
        #[arg(long)]
        dot: bool,
        /// Re-check the result for primality.
        #[arg(long)]
        certify: bool,
    },
    /// List maximal stable modules and the primality of the graph.
    Modules { input: PathBuf },
    /// Search all orientations for a prime one.
    Oracle {
        input: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Compare the decision procedure with the oracle over labeled graphs.
    Sweep {
        #[arg(long)]
        n: usize,
        /// Check this many random graphs instead of all of them.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a graph from a named family as an edge list.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Edge probability (erdos_renyi only).
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Star,
    Path,
    Cycle,
    #[value(name = "half_graph")]
    HalfGraph,
    #[value(name = "erdos_renyi")]
    ErdosRenyi,
}

fn read_document(path: &PathBuf) -> Result<EdgeListDocument, Outcome> {
    let text = if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Outcome::usage(format!("reading standard input: {e}")))?;
        text
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Outcome::usage(format!("reading {}: {e}", path.display())))?
    };
    EdgeListDocument::parse(&text).map_err(|e| Outcome::usage(format!("{}: {e}", path.display())))
}

fn run(command: Command) -> Outcome {
    let with_doc =
        |path: &PathBuf, f: &dyn Fn(&EdgeListDocument) -> Outcome| match read_document(path) {
            Ok(doc) => f(&doc),
            Err(outcome) => outcome,
        };
    match command {
        Command::Check { input } => with_doc(&input, &commands::check),
        Command::Orient {
            input,
            dot,
            certify,
        } => with_doc(&input, &|doc| commands::orient(doc, dot, certify)),
        Command::Modules { input } => with_doc(&input, &commands::modules),
        Command::Oracle { input, budget } => with_doc(&input, &|doc| commands::oracle(doc, budget)),
        Command::Sweep { n, sample, seed } => commands::sweep(n, sample, seed),
        Command::Gen { family, n, p, seed } => {
            let spec = match family {
                Family::Complete => FamilySpec::Complete { n },
                Family::Star => FamilySpec::Star { n },
                Family::Path => FamilySpec::Path { n },
                Family::Cycle => FamilySpec::Cycle { n },
                Family::HalfGraph => FamilySpec::HalfGraph { n },
                Family::ErdosRenyi => FamilySpec::ErdosRenyi { n, p, seed },
            };
            commands::gen(&spec)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(cli.command);
    // a closed pipe is not worth a panic
    let _ = io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
