//! Hamilton cycles and cycles through a required vertex set.
//!
//! cargo run --example hamilton_search

use fheavy::cycles::{find_cycle_through, find_hamilton_cycle, heavy_vertices};
use fheavy::Graph;

fn main() {
    let graphs = [
        ("C5", Graph::cycle(5)),
        ("K2,3", Graph::complete_bipartite(2, 3)),
        ("K3,3", Graph::complete_bipartite(3, 3)),
        ("Petersen", Graph::petersen()),
    ];
    for (name, g) in &graphs {
        match find_hamilton_cycle(g) {
            Some(c) => println!("{name:<9} Hamiltonian: {:?}", c.vertices()),
            None => println!("{name:<9} not Hamiltonian"),
        }
        let heavy = heavy_vertices(g);
        match find_cycle_through(g, &heavy) {
            Some(c) => println!("          cycle through heavy vertices {heavy:?}: {:?}", c.vertices()),
            None => println!("          no cycle through heavy vertices {heavy:?}"),
        }
    }

    // No Hamilton cycle, but cycles through smaller vertex sets exist.
    let p = Graph::petersen();
    let c = find_cycle_through(&p, &[1, 4, 5, 7, 9]).expect("cycle exists");
    println!("\nPetersen cycle through 1, 4, 5, 7, 9: {:?}", c.vertices());
}
