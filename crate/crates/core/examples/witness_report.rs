//! Builds the two-clique witness graph and checks every property claimed
//! for it, showing where computation and claim disagree.
//!
//! cargo run --example witness_report [-- N]

use fheavy::witness::{build_witness, classify_witness, WitnessSpec};

fn main() -> fheavy::Result<()> {
    let n = std::env::args().nth(1).map_or(Ok(16), |a| a.parse()).expect("N must be a number");
    let spec = WitnessSpec::new(n)?;
    let g = build_witness(&spec);
    let r = classify_witness(&g);
    println!("n={} graph6={}", r.n, r.graph6);
    if let Some(c) = &r.hamilton_cycle {
        println!("Hamilton cycle: {:?}", c.vertices());
    }
    for (name, flag) in [
        ("hamiltonian", &r.hamiltonian),
        ("fan", &r.fan_condition),
        ("thm4", &r.thm4_condition),
        ("thm5", &r.thm5_condition),
        ("claw-free", &r.claw_free),
    ] {
        let claim = flag.claimed.map_or("-".to_string(), |c| c.to_string());
        println!("{name:<12} computed {:<5} claimed {claim:<5}", flag.verified);
        if let Some(v) = flag.violations.first() {
            println!("             {v}");
        }
    }
    println!("discrepancies: {:?}", r.discrepancies());
    Ok(())
}
