//! Lists induced copies of the catalog patterns and their distance-two
//! pairs.
//!
//! cargo run --example induced_copies

use fheavy::conditions::copy_is_f_heavy;
use fheavy::patterns::{catalog, distance2_pairs, enumerate_induced_copies};
use fheavy::witness::{build_witness, WitnessSpec};

fn main() -> fheavy::Result<()> {
    let g = build_witness(&WitnessSpec::new(16)?);
    println!("witness graph on {} vertices, {} edges\n", g.n(), g.edge_count());

    for p in catalog() {
        let copies = enumerate_induced_copies(&g, &p);
        println!("{:<10} {:>4} induced copies, distance-2 pairs in pattern: {:?}", p.name(), copies.len(), distance2_pairs(p.graph()));
        let mut light = copies.iter().filter(|c| !copy_is_f_heavy(&g, &c.subset).unwrap().verdict);
        if let Some(c) = light.next() {
            let report = copy_is_f_heavy(&g, &c.subset)?;
            println!("           not f-heavy: {}", report.violation().unwrap());
        }
    }
    Ok(())
}
