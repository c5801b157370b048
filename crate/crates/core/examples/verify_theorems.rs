//! Checks "hypothesis implies Hamiltonian" for all three theorems over
//! every 2-connected graph up to a given order.
//!
//! cargo run --release --example verify_theorems [-- MAX_N]

use fheavy::harness::{default_workers, verify_corpus, CorpusSource, Theorem, VerifyOptions, DEFAULT_SEED};

fn main() -> fheavy::Result<()> {
    let max_n: usize = std::env::args().nth(1).map_or(Ok(8), |a| a.parse()).expect("MAX_N must be a number");
    let opts = VerifyOptions { require_two_connected: true, workers: default_workers() };
    for theorem in [Theorem::Thm1, Theorem::Thm4, Theorem::Thm5] {
        let corpus = CorpusSource::Builtin(max_n).open(DEFAULT_SEED)?;
        let s = verify_corpus(corpus, theorem, opts);
        println!(
            "{theorem}: {} graphs, hypothesis holds on {}, {} counterexamples ({} ms)",
            s.corpus_size,
            s.hypothesis_holds,
            s.counterexamples.len(),
            s.elapsed_ms
        );
    }
    Ok(())
}
