use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use semitopo_core::axioms::evaluate;
use semitopo_core::document::WitnessDocument;
use semitopo_core::search::properties::{registry, Property, SpaceContext, Tally};
use semitopo_core::search::{
    enumerate_topologies, find_witness, verify_with, Query, WitnessOutcome, MAX_ENUMERATION_POINTS,
};
use semitopo_core::{AxiomFlag, Report, SpaceDocument};

/// Default bound on `verify --n-max` without `--allow-large`.
const VERIFY_CAP: usize = 4;

const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_EXHAUSTED: u8 = 3;

#[derive(Parser)]
#[command(name = "semitopo", version, about = "Semi-open set calculus on finite spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a space file: axiom profile and per-subset classes.
    Classify {
        file: PathBuf,
        /// Include the subset table even above six points.
        #[arg(long)]
        all_subsets: bool,
        /// Print every evaluation route of every axiom flag on stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Check every registered property on all spaces up to a size.
    Verify {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        /// Allow --n-max above 4.
        #[arg(long)]
        allow_large: bool,
        /// Add a property that is known to be false (harness self-test).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Find the smallest space satisfying a query.
    Witness {
        #[arg(long)]
        query: String,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
    /// List all spaces on n points, one document per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// One representative per homeomorphism class.
        #[arg(long)]
        canonical: bool,
    },
}

fn input_error(kind: &str, message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {kind}: {message}");
    ExitCode::from(EXIT_INPUT)
}

/// Writes one line to stdout; a closed pipe is not an error.
fn emit(line: &str) {
    let _ = writeln!(io::stdout().lock(), "{line}");
}

fn print_json(value: &impl serde::Serialize) {
    emit(&serde_json::to_string_pretty(value).expect("document serializes"));
}

fn classify(file: PathBuf, all_subsets: bool, trace: bool) -> ExitCode {
    let text = match fs::read_to_string(&file) {
        Ok(t) => t,
        Err(e) => return input_error("Io", format!("{}: {e}", file.display())),
    };
    let doc = match SpaceDocument::from_json(&text) {
        Ok(d) => d,
        Err(e) => return input_error(e.kind(), e),
    };
    let space = match doc.to_space() {
        Ok(s) => s,
        Err(e) => return input_error(e.kind(), e),
    };
    if trace {
        for flag in AxiomFlag::ALL {
            let routes: Vec<String> =
                evaluate(&space, flag).iter().map(|p| format!("{}={}", p.path, p.holds)).collect();
            eprintln!("{flag}: {}", routes.join(" "));
        }
    }
    match Report::build(&doc, &space, all_subsets) {
        Ok(report) => {
            print_json(&report);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_VIOLATION)
        }
    }
}

fn semi_open_is_open(c: &SpaceContext<'_>, t: &mut Tally) {
    for a in c.space.semi_open_family().iter() {
        t.check(c.space.is_open(a), || format!("A={a}"));
    }
}

fn verify(n_max: usize, allow_large: bool, inject_fault: bool) -> ExitCode {
    if n_max == 0 {
        return input_error("InvalidGroundSize", "--n-max must be at least 1");
    }
    if n_max > VERIFY_CAP && !allow_large {
        return input_error("GroundTooLarge", format!("--n-max {n_max} exceeds {VERIFY_CAP}; pass --allow-large"));
    }
    let mut properties: Vec<Property> = registry().to_vec();
    if inject_fault {
        properties.push(Property {
            name: "injected_semi_open_is_open",
            statement: "every semi-open set is open (deliberately false)",
            check: semi_open_is_open,
        });
    }
    let report = match verify_with(n_max, &properties) {
        Ok(r) => r,
        Err(e) => return input_error(e.kind(), e),
    };
    print_json(&report);
    eprintln!(
        "checked {} properties on {} spaces in {:.3}s",
        report.properties.len(),
        report.spaces_per_n.iter().map(|c| c.spaces).sum::<usize>(),
        report.wall_time.as_secs_f64()
    );
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        for p in report.properties.iter().filter(|p| p.violation_count > 0) {
            eprintln!("violated: {} ({} instances)", p.name, p.violation_count);
        }
        ExitCode::from(EXIT_VIOLATION)
    }
}

fn witness(query: &str, n_max: usize) -> ExitCode {
    let parsed = match Query::parse(query) {
        Ok(q) => q,
        Err(e) => return input_error(e.kind(), e),
    };
    if n_max == 0 {
        return input_error("InvalidGroundSize", "--n-max must be at least 1");
    }
    let outcome = match find_witness(&parsed, n_max) {
        Ok(o) => o,
        Err(e) => return input_error(e.kind(), e),
    };
    print_json(&WitnessDocument::new(query, n_max, &outcome));
    match outcome {
        WitnessOutcome::Found(_) => ExitCode::SUCCESS,
        WitnessOutcome::ExhaustedNone { n_max } => {
            eprintln!("no space on at most {n_max} points satisfies the query");
            ExitCode::from(EXIT_EXHAUSTED)
        }
    }
}

fn enumerate(n: usize, canonical: bool) -> ExitCode {
    if n > MAX_ENUMERATION_POINTS {
        return input_error("GroundTooLarge", format!("--n {n} exceeds {MAX_ENUMERATION_POINTS}"));
    }
    let spaces = match enumerate_topologies(n, canonical) {
        Ok(s) => s,
        Err(e) => return input_error(e.kind(), e),
    };
    for sp in &spaces {
        emit(&SpaceDocument::from_space(sp).to_json());
    }
    emit(&json!({ "count": spaces.len() }).to_string());
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Classify { file, all_subsets, trace } => classify(file, all_subsets, trace),
        Command::Verify { n_max, allow_large, inject_fault } => verify(n_max, allow_large, inject_fault),
        Command::Witness { query, n_max } => witness(&query, n_max),
        Command::Enumerate { n, canonical } => enumerate(n, canonical),
    }
}
