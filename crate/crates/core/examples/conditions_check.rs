//! Evaluates each degree condition on a few small graphs and prints the
//! first violation found.
//!
//! cargo run --example conditions_check

use fheavy::conditions::{is_2_heavy, is_family_f_heavy, satisfies_fan, theorem4_condition, theorem5_condition};
use fheavy::{Graph, Pattern};

fn main() -> fheavy::Result<()> {
    let graphs = [
        ("C5", Graph::cycle(5)),
        ("K4", Graph::complete(4)),
        ("K2,3", Graph::complete_bipartite(2, 3)),
        ("Petersen", Graph::petersen()),
    ];
    let family = [Pattern::claw(), Pattern::path(7), Pattern::deer()];

    for (name, g) in &graphs {
        println!("{name} (n={}, m={})", g.n(), g.edge_count());
        let reports = [
            satisfies_fan(g),
            is_2_heavy(g),
            is_family_f_heavy(g, &family)?,
            theorem4_condition(g),
            theorem5_condition(g),
        ];
        for r in reports {
            match r.violation() {
                None => println!("  {:<24} {}", r.condition, r.verdict),
                Some(v) => println!("  {:<24} {}  ({v})", r.condition, r.verdict),
            }
        }
    }
    Ok(())
}
