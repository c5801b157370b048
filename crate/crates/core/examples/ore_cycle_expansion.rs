//! Turns a cycle that uses degree-sum pairs into a real cycle of the graph
//! covering the same vertices.
//!
//! cargo run --example ore_cycle_expansion

use fheavy::cycles::expand_o_cycle;
use fheavy::{Graph, OCycle};

fn main() -> fheavy::Result<()> {
    // K4 minus the edge 0-1: d(0) + d(1) = 4 = n, so 0-1 counts as a virtual edge.
    let g = Graph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;
    println!("0-1 Ore-adjacent: {}", g.ore_adjacent(0, 1)?);

    let oc = OCycle::new(&g, vec![0, 1, 2])?;
    println!("o-cycle {:?}, virtual edges {:?}", oc.vertices(), oc.virtual_edges());
    let c = expand_o_cycle(&g, &oc)?;
    println!("real cycle {:?}", c.vertices());

    // A sequence using a pair that is neither an edge nor heavy enough is rejected.
    let path = Graph::path(4);
    match OCycle::new(&path, vec![0, 1, 2, 3]) {
        Ok(_) => println!("unexpected o-cycle"),
        Err(e) => println!("P4: {e}"),
    }
    Ok(())
}
