//! Command-line front end. Exit codes: 0 = verdict true / nothing found,
//! 1 = verdict false / counterexample found, 2 = usage or input error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fheavy::conditions::{
    is_2_heavy, is_family_f_heavy, is_family_free, satisfies_fan, theorem4_condition, theorem5_condition,
    ConditionReport,
};
use fheavy::cycles::find_hamilton_cycle;
use fheavy::harness::{default_workers, hunt, verify_corpus, CorpusSource, Theorem, VerifyOptions, DEFAULT_SEED};
use fheavy::io::{encode_graph6, read_corpus_str, write_report, CorpusFormat, ReportFormat, VerdictRecord};
use fheavy::witness::{build_witness, classify_witness, WitnessSpec};
use fheavy::{Graph, Pattern};

#[derive(Parser)]
#[command(name = "fheavy", version, about = "Check f-heavy conditions and Hamiltonicity theorems on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one condition on every graph in a file.
    Check {
        /// graph6 lines or edge-list blocks; `-` reads stdin
        file: String,
        #[arg(long)]
        condition: Condition,
        /// Comma-separated patterns for `f-heavy` and `free`
        /// (claw, p4..p7, deer, hourglass, g6:<graph6>)
        #[arg(long, value_delimiter = ',')]
        patterns: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Input format; detected from the first line when omitted
        #[arg(long, value_enum)]
        input: Option<Input>,
    },
    /// Check "hypothesis implies Hamiltonian" over a corpus.
    Verify {
        /// `-`, a graph6 file, `builtin:N`, `all:N` or `random:COUNT:MAXN`
        #[arg(long)]
        corpus: String,
        #[arg(long)]
        theorem: Theorem,
        #[arg(long, default_value_t = default_workers())]
        workers: usize,
        /// Also test graphs that are not 2-connected
        #[arg(long)]
        allow_separable: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Find the first 2-connected, {claw, R, S}-f-heavy, non-Hamiltonian graph.
    Hunt {
        #[arg(long)]
        r: String,
        #[arg(long)]
        s: String,
        #[arg(long)]
        corpus: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = default_workers())]
        workers: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Emit the two-clique separating graph on n vertices.
    Witness {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Emit::Graph6)]
        emit: Emit,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Condition {
    Fan,
    #[value(name = "2heavy")]
    TwoHeavy,
    #[value(name = "f-heavy")]
    FHeavy,
    Free,
    Thm4,
    Thm5,
    Hamiltonian,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Input {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Graph6,
    Report,
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn evaluate(condition: Condition, patterns: &[Pattern], g: &Graph) -> ConditionReport {
    match condition {
        Condition::Fan => satisfies_fan(g),
        Condition::TwoHeavy => is_2_heavy(g),
        Condition::FHeavy => is_family_f_heavy(g, patterns).expect("patterns checked"),
        Condition::Free => is_family_free(g, patterns).expect("patterns checked"),
        Condition::Thm4 => theorem4_condition(g),
        Condition::Thm5 => theorem5_condition(g),
        Condition::Hamiltonian => ConditionReport {
            condition: "hamiltonian".into(),
            verdict: find_hamilton_cycle(g).is_some(),
            violations: Vec::new(),
        },
    }
}

fn check(file: &str, condition: Condition, pattern_names: &[String], format: Format, input: Option<Input>) -> ExitCode {
    let patterns = match pattern_names.iter().map(|p| Pattern::by_name(p)).collect::<Result<Vec<_>, _>>() {
        Ok(p) => p,
        Err(e) => return usage_error(e),
    };
    if matches!(condition, Condition::FHeavy | Condition::Free) && patterns.is_empty() {
        return usage_error("this condition needs --patterns");
    }
    let mut text = String::new();
    let read = if file == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(file).map(|t| text = t)
    };
    if let Err(e) = read {
        return usage_error(format!("{file}: {e}"));
    }
    let fmt = match input {
        Some(Input::Graph6) => CorpusFormat::Graph6,
        Some(Input::Edgelist) => CorpusFormat::EdgeList,
        None => CorpusFormat::detect(&text),
    };

    let mut records = Vec::new();
    let mut input_error = false;
    for item in read_corpus_str(&text, fmt) {
        match item {
            Ok((i, g)) => records.push(VerdictRecord::from_report(i, evaluate(condition, &patterns, &g))),
            Err(e) => {
                eprintln!("error: {e}");
                input_error = true;
            }
        }
    }
    if records.is_empty() && !input_error {
        return usage_error(format!("{file}: no graphs"));
    }
    let format = match format {
        Format::Json => ReportFormat::Json,
        Format::Table => ReportFormat::Table,
    };
    print!("{}", write_report(&records, format));
    if input_error {
        ExitCode::from(2)
    } else if records.iter().all(|r| r.verdict == Some(true)) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check { file, condition, patterns, format, input } => check(&file, condition, &patterns, format, input),
        Command::Verify { corpus, theorem, workers, allow_separable, seed } => {
            let source: CorpusSource = match corpus.parse() {
                Ok(s) => s,
                Err(e) => return usage_error(e),
            };
            let graphs = match source.open(seed) {
                Ok(g) => g,
                Err(e) => return usage_error(e),
            };
            let opts = VerifyOptions { require_two_connected: !allow_separable, workers };
            let summary = verify_corpus(graphs, theorem, opts);
            println!("{}", to_json(&summary));
            for e in &summary.errors {
                eprintln!("error: {}", e.message);
            }
            if summary.counterexamples.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Hunt { r, s, corpus, max_n, workers, seed } => {
            let (r, s) = match (Pattern::by_name(&r), Pattern::by_name(&s)) {
                (Ok(r), Ok(s)) => (r, s),
                (Err(e), _) | (_, Err(e)) => return usage_error(e),
            };
            let graphs = match corpus.parse::<CorpusSource>().map_err(|e| e.to_string()).and_then(|c| c.open(seed).map_err(|e| e.to_string())) {
                Ok(g) => g,
                Err(e) => return usage_error(e),
            };
            let result = hunt(graphs, &r, &s, max_n, workers);
            println!("{}", to_json(&result));
            if result.counterexample.is_some() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Witness { n, emit } => {
            let spec = match WitnessSpec::new(n) {
                Ok(s) => s,
                Err(e) => return usage_error(e),
            };
            let g = build_witness(&spec);
            match emit {
                Emit::Graph6 => println!("{}", encode_graph6(&g).expect("small graph")),
                Emit::Report => println!("{}", to_json(&classify_witness(&g))),
            }
            ExitCode::SUCCESS
        }
    }
}
