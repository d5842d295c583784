//! The `freqmine` command line: `count`, `mine`, and `bench` subcommands
//! over files or standard input. All results go to standard output as TSV;
//! diagnostics go to standard error with a distinct exit status per
//! failure class.

use std::fmt;
use std::fs;
use std::io::Read;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use freqmine_core::counters::UnknownBackend;
use freqmine_core::ingest::{parse_transactions, tokenize, IngestError};
use freqmine_core::{apriori, BackendKind, FrequencyCounter, MinSupport};

use crate::bench::{run_benchmark, Workload, WorkloadError, WorkloadKind};
use crate::report;

const INPUT_HELP: &str = "Input file, or '-' for standard input";

const BACKEND_HELP: &str = "Frequency-counter backend: bst, avl, hash, or sorted_array";

const COUNT_AFTER_HELP: &str = "\
Input is free text. Tokens are whitespace-separated words, lowercased, with
leading and trailing punctuation (.,;:!?\"'()[]{}) stripped; interior
punctuation such as hyphens is kept.

Output is TSV, one line per distinct token in ascending order:
  <token>\\t<count>

All backends produce identical output; they differ only in internal
structure and speed.";

const MINE_AFTER_HELP: &str = "\
Input is a transaction database, one transaction per line. With --tid the
first whitespace-separated field is a transaction identifier; the rest of
the line is a comma-separated item list (whitespace around items is
ignored, duplicates collapse, blank lines and empty transactions are
skipped):
  T100\tI1,I2,I5

--min-support takes an absolute transaction count (an integer >= 1) or a
relative fraction in (0, 1], converted to ceiling(fraction x |D|) where |D|
counts the nonempty transactions. Ceiling is used so a fractional threshold
never admits an itemset the equivalent absolute threshold would reject.

Output is TSV, one line per frequent itemset, levels ascending and itemsets
in lexicographic order within a level:
  <k>\\t<item1,item2,...>\\t<support>

With --summary a trailing comment line reports the run:
  # |D|=<n> min_sup=<s> levels=<m>

Exit status: 0 success, 2 unreadable input, 3 malformed line, 4 invalid
--min-support.";

const BENCH_AFTER_HELP: &str = "\
Generates a deterministic insert workload (ChaCha8 PRNG keyed by --seed),
runs insert / lookup / inorder phases three times on a fresh counter each,
and reports the minimum wall time per phase. Keys are zero-padded synthetic
tokens (k000, k001, ...) so lexicographic and numeric order agree; every
key appears at least once, so --distinct <= --n is required.

Kinds: 'random' inserts uniformly drawn keys in shuffled order, 'ascending'
inserts sorted keys (the unbalanced-tree worst case), 'zipf' draws keys
with frequency proportional to 1/rank (exponent 1), shuffled.

--backend and --kind accept comma-separated lists and default to the full
grid; one row is emitted per (backend, kind) pair:
  backend\\tkind\\tn\\tdistinct\\tseed\\tinsert_ns\\tlookup_ns\\tinorder_ns\\theight\\tcomparisons

The height column is '-' for backends without a tree height. Timing
columns are machine-dependent; all other columns are deterministic given
the flags.

Exit status: 0 success, 4 invalid workload parameters.";

#[derive(Parser, Debug)]
#[command(
    name = "freqmine",
    version,
    about = "Frequency counting and frequent-itemset mining over plain-text input",
    propagate_version = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count token frequencies in text
    #[command(after_help = COUNT_AFTER_HELP)]
    Count {
        #[arg(long, default_value = "avl", value_parser = parse_backend, help = BACKEND_HELP)]
        backend: BackendKind,
        #[arg(default_value = "-", help = INPUT_HELP)]
        input: String,
    },
    /// Mine frequent itemsets from a transaction file
    #[command(after_help = MINE_AFTER_HELP)]
    Mine {
        /// Support threshold: absolute count (>= 1) or fraction in (0, 1]
        #[arg(long, allow_hyphen_values = true)]
        min_support: String,
        /// Treat the first whitespace-separated field of each line as a
        /// transaction identifier
        #[arg(long)]
        tid: bool,
        #[arg(long, default_value = "avl", value_parser = parse_backend, help = BACKEND_HELP)]
        backend: BackendKind,
        /// Append a `# |D|=.. min_sup=.. levels=..` comment line
        #[arg(long)]
        summary: bool,
        #[arg(default_value = "-", help = INPUT_HELP)]
        input: String,
    },
    /// Benchmark counter backends on synthetic workloads
    #[command(after_help = BENCH_AFTER_HELP)]
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Comma-separated backends to run (default: all)
    #[arg(long, value_delimiter = ',')]
    backend: Vec<String>,
    /// Comma-separated workload kinds: random, ascending, zipf (default: all)
    #[arg(long, value_delimiter = ',')]
    kind: Vec<String>,
    /// Number of insert operations per run
    #[arg(long)]
    n: usize,
    /// Number of distinct keys (must not exceed --n)
    #[arg(long)]
    distinct: usize,
    /// Workload PRNG seed
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn parse_backend(s: &str) -> Result<BackendKind, UnknownBackend> {
    BackendKind::from_str(s)
}

#[derive(Debug)]
pub enum CliError {
    /// The input file (or stdin) could not be read.
    Input {
        path: String,
        source: std::io::Error,
    },
    /// The transaction file failed to parse.
    Malformed { path: String, source: IngestError },
    /// `--min-support` is neither a count >= 1 nor a fraction in (0, 1].
    MinSupport { given: String },
    /// Bench flags violate the workload invariants.
    Workload(WorkloadError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input { .. } => 2,
            CliError::Malformed { .. } => 3,
            CliError::MinSupport { .. } | CliError::Workload(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input { path, source } => write!(f, "cannot read {path}: {source}"),
            CliError::Malformed { path, source } => write!(f, "{path}: {source}"),
            CliError::MinSupport { given } => write!(
                f,
                "invalid --min-support '{given}': expected an integer >= 1 or a fraction in (0, 1]"
            ),
            CliError::Workload(err) => write!(f, "{err}"),
        }
    }
}

impl std::error::Error for CliError {}

/// A validated `--min-support`, resolved against |D| once the input is
/// parsed.
#[derive(Clone, Copy, PartialEq, Debug)]
enum MinSupportArg {
    Absolute(u64),
    Relative(f64),
}

impl MinSupportArg {
    fn parse(given: &str) -> Result<MinSupportArg, CliError> {
        if let Ok(count) = given.parse::<u64>() {
            return MinSupport::new(count)
                .map(|_| MinSupportArg::Absolute(count))
                .ok_or_else(|| CliError::MinSupport {
                    given: given.to_string(),
                });
        }
        if let Ok(fraction) = given.parse::<f64>() {
            if MinSupport::from_fraction(fraction, 1).is_some() {
                return Ok(MinSupportArg::Relative(fraction));
            }
        }
        Err(CliError::MinSupport {
            given: given.to_string(),
        })
    }

    fn resolve(self, db_size: usize) -> MinSupport {
        match self {
            MinSupportArg::Absolute(count) => {
                MinSupport::new(count).expect("validated at parse time")
            }
            MinSupportArg::Relative(fraction) => {
                MinSupport::from_fraction(fraction, db_size).expect("validated at parse time")
            }
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    let attempt = if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map(|_| text)
    } else {
        fs::read_to_string(path)
    };
    attempt.map_err(|source| CliError::Input {
        path: display_name(path).to_string(),
        source,
    })
}

fn display_name(path: &str) -> &str {
    if path == "-" {
        "<stdin>"
    } else {
        path
    }
}

/// Runs a parsed command and returns the full standard-output payload.
pub fn execute(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Count { backend, input } => run_count(backend, &input),
        Command::Mine {
            min_support,
            tid,
            backend,
            summary,
            input,
        } => run_mine(backend, &min_support, tid, summary, &input),
        Command::Bench(args) => run_bench(&args),
    }
}

fn run_count(backend: BackendKind, input: &str) -> Result<String, CliError> {
    let text = read_input(input)?;
    let mut counter = FrequencyCounter::new(backend);
    for token in tokenize(&text) {
        counter.insert(token);
    }
    Ok(report::count_report(&counter))
}

fn run_mine(
    backend: BackendKind,
    min_support: &str,
    tid: bool,
    summary: bool,
    input: &str,
) -> Result<String, CliError> {
    let threshold = MinSupportArg::parse(min_support)?;
    let text = read_input(input)?;
    let db = parse_transactions(&text, tid).map_err(|source| CliError::Malformed {
        path: display_name(input).to_string(),
        source,
    })?;
    let result = apriori(&db, threshold.resolve(db.len()), backend);
    Ok(report::mine_report(&result, summary))
}

fn run_bench(args: &BenchArgs) -> Result<String, CliError> {
    let backends: Vec<BackendKind> = if args.backend.is_empty() {
        BackendKind::ALL.to_vec()
    } else {
        args.backend
            .iter()
            .map(|name| {
                BackendKind::from_str(name).map_err(|_| {
                    CliError::Workload(WorkloadError::UnknownKind(format!("backend {name}")))
                })
            })
            .collect::<Result<_, _>>()?
    };
    let kinds: Vec<WorkloadKind> = if args.kind.is_empty() {
        WorkloadKind::ALL.to_vec()
    } else {
        args.kind
            .iter()
            .map(|name| WorkloadKind::from_str(name).map_err(CliError::Workload))
            .collect::<Result<_, _>>()?
    };

    let mut workloads = Vec::with_capacity(kinds.len());
    for kind in kinds {
        workloads.push(
            Workload::new(kind, args.n, args.distinct, args.seed).map_err(CliError::Workload)?,
        );
    }

    let mut reports = Vec::with_capacity(backends.len() * workloads.len());
    for backend in &backends {
        for workload in &workloads {
            reports.push(run_benchmark(*backend, workload));
        }
    }
    Ok(report::bench_report(&reports))
}
