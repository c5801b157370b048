//! Searches for the smallest 2-connected non-Hamiltonian graph that is
//! {claw, R, S}-f-heavy, for a few pattern pairs.
//!
//! cargo run --release --example hunt_triples [-- MAX_N]

use fheavy::harness::{default_workers, hunt, CorpusSource, DEFAULT_SEED};
use fheavy::Pattern;

fn main() -> fheavy::Result<()> {
    let max_n: usize = std::env::args().nth(1).map_or(Ok(9), |a| a.parse()).expect("MAX_N must be a number");
    let pairs = [("p7", "deer"), ("p7", "hourglass"), ("deer", "hourglass"), ("p7", "p7")];
    for (r, s) in pairs {
        let corpus = CorpusSource::Builtin(max_n).open(DEFAULT_SEED)?;
        let result = hunt(corpus, &Pattern::by_name(r)?, &Pattern::by_name(s)?, None, default_workers());
        match result.counterexample {
            Some(c) => println!("{{claw, {r}, {s}}}: non-Hamiltonian graph {} on {} vertices", c.graph6, c.n),
            None => println!("{{claw, {r}, {s}}}: none among {} graphs", result.examined),
        }
    }
    Ok(())
}
