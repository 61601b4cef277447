//! graph6 encoding and decoding.

use bkcheck::graph::Graph;
use bkcheck::harness::{parse_graph6, write_graph6};

fn main() {
    for (name, g) in [
        ("empty 5", Graph::empty(5)),
        ("K2", Graph::complete(2)),
        ("C5", Graph::cycle(5)),
        ("Petersen", Graph::petersen()),
    ] {
        let s = write_graph6(&g);
        println!("{name}: {s} round-trips: {}", parse_graph6(&s).unwrap() == g);
    }
    let long = write_graph6(&Graph::complete(63));
    println!("K63 uses the long form: {}...", &long[..8]);
    println!("bad input: {}", parse_graph6("A~").unwrap_err());
}
