//! Corpus-scale verification of "hypothesis implies Hamiltonian" and the
//! counterexample hunt for pattern triples.
//!
//! Corpora are read on the calling thread in fixed-size batches; each batch
//! is checked on a worker pool and merged back in input order, so results
//! do not depend on the worker count.

use std::fmt;
use std::fs::File;
use std::io::BufReader;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::conditions::{is_family_f_heavy, satisfies_fan, theorem4_condition, theorem5_condition, ConditionReport};
use crate::cycles::find_hamilton_cycle;
use crate::error::{Error, Result};
use crate::generate::{all_graphs, random_graph, two_connected_graphs, MAX_EXHAUSTIVE_ORDER};
use crate::graph::Graph;
use crate::io::{encode_graph6, read_corpus};
use crate::patterns::Pattern;

const BATCH: usize = 4096;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    /// Fan's distance-two degree condition.
    Thm1,
    /// 2-heavy plus `{P7, deer}`- or `{P7, hourglass}`-freeness.
    Thm4,
    /// `{claw, P7, deer}`- or `{claw, P7, hourglass}`-f-heavy.
    Thm5,
}

impl Theorem {
    pub fn hypothesis(self, g: &Graph) -> ConditionReport {
        match self {
            Theorem::Thm1 => satisfies_fan(g),
            Theorem::Thm4 => theorem4_condition(g),
            Theorem::Thm5 => theorem5_condition(g),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Thm1 => "thm1",
            Theorem::Thm4 => "thm4",
            Theorem::Thm5 => "thm5",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "thm1" | "fan" => Ok(Theorem::Thm1),
            "thm4" => Ok(Theorem::Thm4),
            "thm5" => Ok(Theorem::Thm5),
            _ => Err(format!("unknown theorem {s:?} (expected thm1, thm4 or thm5)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub index: usize,
    pub n: usize,
    pub graph6: String,
}

impl Counterexample {
    fn of(index: usize, g: &Graph) -> Self {
        Counterexample { index, n: g.n(), graph6: encode_graph6(g).unwrap_or_default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusError {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    pub message: String,
}

impl From<Error> for CorpusError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { line, .. } => CorpusError { line: Some(line), message: e.to_string() },
            other => CorpusError { line: None, message: other.to_string() },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub theorem: Theorem,
    pub corpus_size: usize,
    /// Graphs that passed the connectivity gate (all graphs if the gate is off).
    pub gated: usize,
    pub hypothesis_holds: usize,
    pub hamiltonian: usize,
    pub counterexamples: Vec<Counterexample>,
    pub errors: Vec<CorpusError>,
    pub elapsed_ms: u64,
}

impl VerificationSummary {
    /// Everything except wall-clock time.
    pub fn same_counts(&self, other: &VerificationSummary) -> bool {
        self.theorem == other.theorem
            && self.corpus_size == other.corpus_size
            && self.gated == other.gated
            && self.hypothesis_holds == other.hypothesis_holds
            && self.hamiltonian == other.hamiltonian
            && self.counterexamples == other.counterexamples
            && self.errors == other.errors
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub require_two_connected: bool,
    pub workers: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { require_two_connected: true, workers: default_workers() }
    }
}

pub fn default_workers() -> usize {
    std::thread::available_parallelism().map(usize::from).unwrap_or(1)
}

fn pool(workers: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool")
}

/// Drains `corpus` in batches, mapping each graph on the pool; `sink`
/// receives results in input order and may stop the run by returning false.
fn run_batches<I, T, F, S>(corpus: I, workers: usize, check: F, mut sink: S) -> Vec<CorpusError>
where
    I: IntoIterator<Item = Result<(usize, Graph)>>,
    T: Send,
    F: Fn(&Graph) -> T + Sync,
    S: FnMut(usize, &Graph, T) -> bool,
{
    let pool = pool(workers);
    let mut errors = Vec::new();
    let mut it = corpus.into_iter();
    loop {
        let mut batch = Vec::with_capacity(BATCH);
        for item in it.by_ref() {
            match item {
                Ok(x) => batch.push(x),
                Err(e) => errors.push(CorpusError::from(e)),
            }
            if batch.len() == BATCH {
                break;
            }
        }
        if batch.is_empty() {
            return errors;
        }
        let results: Vec<T> = pool.install(|| batch.par_iter().map(|(_, g)| check(g)).collect());
        for ((i, g), r) in batch.iter().zip(results) {
            if !sink(*i, g, r) {
                return errors;
            }
        }
    }
}

enum Outcome {
    Gated,
    NoHypothesis,
    Hamiltonian,
    Counterexample,
}

/// Checks "hypothesis implies Hamiltonian" on every graph of `corpus`.
pub fn verify_corpus<I>(corpus: I, theorem: Theorem, opts: VerifyOptions) -> VerificationSummary
where
    I: IntoIterator<Item = Result<(usize, Graph)>>,
{
    let started = Instant::now();
    let mut s = VerificationSummary {
        theorem,
        corpus_size: 0,
        gated: 0,
        hypothesis_holds: 0,
        hamiltonian: 0,
        counterexamples: Vec::new(),
        errors: Vec::new(),
        elapsed_ms: 0,
    };
    let check = |g: &Graph| {
        if opts.require_two_connected && !g.is_two_connected() {
            Outcome::Gated
        } else if !theorem.hypothesis(g).verdict {
            Outcome::NoHypothesis
        } else if find_hamilton_cycle(g).is_some() {
            Outcome::Hamiltonian
        } else {
            Outcome::Counterexample
        }
    };
    let errors = run_batches(corpus, opts.workers, check, |i, g, out| {
        s.corpus_size += 1;
        if !matches!(out, Outcome::Gated) {
            s.gated += 1;
        }
        match out {
            Outcome::Gated | Outcome::NoHypothesis => {}
            Outcome::Hamiltonian => {
                s.hypothesis_holds += 1;
                s.hamiltonian += 1;
            }
            Outcome::Counterexample => {
                s.hypothesis_holds += 1;
                s.counterexamples.push(Counterexample::of(i, g));
            }
        }
        true
    });
    s.errors = errors;
    s.elapsed_ms = started.elapsed().as_millis() as u64;
    s
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HuntResult {
    /// Pattern names: claw first, then the two supplied patterns.
    pub triple: Vec<String>,
    pub max_n: Option<usize>,
    pub examined: usize,
    pub counterexample: Option<Counterexample>,
    pub errors: Vec<CorpusError>,
}

/// The first graph of `corpus` (within `max_n` vertices) that is
/// 2-connected, `{claw, r, s}`-f-heavy and not Hamiltonian.
pub fn hunt<I>(corpus: I, r: &Pattern, s: &Pattern, max_n: Option<usize>, workers: usize) -> HuntResult
where
    I: IntoIterator<Item = Result<(usize, Graph)>>,
{
    let family = [Pattern::claw(), r.clone(), s.clone()];
    let mut examined = 0;
    let mut hit = None;
    let check = |g: &Graph| {
        max_n.is_none_or(|m| g.n() <= m)
            && g.is_two_connected()
            && is_family_f_heavy(g, &family).expect("non-empty family").verdict
            && find_hamilton_cycle(g).is_none()
    };
    let errors = run_batches(corpus, workers, check, |i, g, found| {
        examined += 1;
        if found {
            hit = Some(Counterexample::of(i, g));
        }
        !found
    });
    HuntResult {
        triple: family.iter().map(Pattern::name).collect(),
        max_n,
        examined,
        counterexample: hit,
        errors,
    }
}

/// Where a corpus comes from.
///
/// * `-`: graph6 lines on stdin
/// * `builtin:N`: every 2-connected graph on 3..=N vertices, up to isomorphism
/// * `all:N`: every graph on 1..=N vertices, up to isomorphism
/// * `random:COUNT:MAXN`: seeded `G(n, p)` graphs, `n` in 1..=MAXN, `p` in [0.1, 0.9)
/// * anything else: a graph6 file path
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSource {
    Stdin,
    Builtin(usize),
    All(usize),
    Random { count: usize, max_n: usize },
    File(String),
}

impl FromStr for CorpusSource {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |x: &str| x.parse::<usize>().map_err(|_| format!("bad number {x:?} in corpus source {s:?}"));
        let bounded = |x: &str| {
            let n = num(x)?;
            if n > MAX_EXHAUSTIVE_ORDER {
                Err(format!("built-in corpora stop at n = {MAX_EXHAUSTIVE_ORDER}"))
            } else {
                Ok(n)
            }
        };
        if s == "-" {
            Ok(CorpusSource::Stdin)
        } else if let Some(n) = s.strip_prefix("builtin:") {
            Ok(CorpusSource::Builtin(bounded(n)?))
        } else if let Some(n) = s.strip_prefix("all:") {
            Ok(CorpusSource::All(bounded(n)?))
        } else if let Some(rest) = s.strip_prefix("random:") {
            let (c, m) = rest.split_once(':').ok_or_else(|| format!("expected random:COUNT:MAXN, got {s:?}"))?;
            Ok(CorpusSource::Random { count: num(c)?, max_n: num(m)?.max(1) })
        } else {
            Ok(CorpusSource::File(s.to_string()))
        }
    }
}

pub type CorpusIter = Box<dyn Iterator<Item = Result<(usize, Graph)>> + Send>;

impl CorpusSource {
    pub fn open(&self, seed: u64) -> Result<CorpusIter> {
        let indexed = |gs: Vec<Graph>| -> CorpusIter { Box::new(gs.into_iter().enumerate().map(Ok)) };
        Ok(match self {
            CorpusSource::Stdin => Box::new(read_corpus(BufReader::new(std::io::stdin()))),
            CorpusSource::File(path) => {
                let f = File::open(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
                Box::new(read_corpus(BufReader::new(f)))
            }
            CorpusSource::Builtin(max_n) => indexed(builtin_two_connected(*max_n)),
            CorpusSource::All(max_n) => indexed((1..=*max_n).flat_map(all_graphs).collect()),
            CorpusSource::Random { count, max_n } => indexed(random_corpus(seed, *count, *max_n)),
        })
    }
}

/// All 2-connected graphs on `3..=max_n` vertices, grouped by order.
pub fn builtin_two_connected(max_n: usize) -> Vec<Graph> {
    (3..=max_n).flat_map(two_connected_graphs).collect()
}

pub fn random_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p = rng.gen_range(0.1..0.9);
            random_graph(&mut rng, n, p)
        })
        .collect()
}
