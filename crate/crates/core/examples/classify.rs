//! Forbidden induced patterns and class membership.

use bkcheck::graph::Graph;
use bkcheck::patterns::{classify_graph, dense_check, find_induced, DenseQuantifier, GraphClass, Pattern};

fn main() {
    let c5k3 = Graph::cycle(5).lexicographic_product(&Graph::complete(3)).unwrap();
    let samples = [
        ("C6", Graph::cycle(6)),
        ("K1,3", Graph::star(3)),
        ("Petersen", Graph::petersen()),
        ("C5[K3]", c5k3),
    ];
    for (name, g) in &samples {
        let m = classify_graph(g);
        let classes: Vec<_> = GraphClass::ALL.iter().filter(|&&c| m.is_member(c)).map(|c| c.name()).collect();
        println!("{name}: classes {classes:?}");
        for p in [Pattern::P4, Pattern::Claw, Pattern::Chair] {
            if let Some(e) = find_induced(g, p) {
                println!("  induced {} at {e:?}", p.name());
            }
        }
    }

    let star = Graph::star(9);
    match dense_check(&star, 3, DenseQuantifier::ForAll) {
        Ok(()) => println!("K1,9 dense"),
        Err(v) => println!("K1,9 not dense: {v:?}"),
    }
}
