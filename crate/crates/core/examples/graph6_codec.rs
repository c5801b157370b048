//! Encodes graphs as graph6 and edge lists and reads them back.
//!
//! cargo run --example graph6_codec

use fheavy::io::{decode_graph6, encode_graph6, read_corpus_str, read_edge_list, write_edge_list, CorpusFormat};
use fheavy::Graph;

fn main() -> fheavy::Result<()> {
    for (name, g) in [("K4", Graph::complete(4)), ("C5", Graph::cycle(5)), ("Petersen", Graph::petersen())] {
        let s = encode_graph6(&g)?;
        assert_eq!(decode_graph6(&s)?, g);
        println!("{name:<9} {s}");
    }

    let p4 = Graph::path(4);
    let text = write_edge_list(&p4);
    print!("\nP4 as an edge list:\n{text}");
    assert_eq!(read_edge_list(&text)?, p4);

    // Bad lines are reported with their line number; the rest still parse.
    println!("\nreading a corpus with one bad line:");
    for item in read_corpus_str("Dhc\nC~\nD!!\nBw\n", CorpusFormat::Graph6) {
        match item {
            Ok((i, g)) => println!("  graph {i}: n={} m={}", g.n(), g.edge_count()),
            Err(e) => println!("  {e}"),
        }
    }
    Ok(())
}
