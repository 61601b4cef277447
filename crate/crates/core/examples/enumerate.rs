//! Isomorph-free generation and canonical certificates.

use bkcheck::enumeration::{canonical_form, canonical_labeling, enumerate_graphs, DEFAULT_CANON_BUDGET};
use bkcheck::graph::Graph;

fn main() {
    for n in 1..=7 {
        let graphs = enumerate_graphs(n).unwrap();
        let connected = graphs.iter().filter(|g| g.is_connected()).count();
        println!("n={n}: {} graphs, {connected} connected", graphs.len());
    }

    let c5 = Graph::cycle(5);
    let pentagram = c5.permuted(&[0, 2, 4, 1, 3]);
    println!("C5 {}", canonical_form(&c5).unwrap());
    println!("C5 relabelled {}", canonical_form(&pentagram).unwrap());
    println!("self-complementary: {}", canonical_form(&c5.complement()).unwrap() == canonical_form(&c5).unwrap());

    let (cert, labels) = canonical_labeling(&Graph::petersen(), DEFAULT_CANON_BUDGET).unwrap();
    println!("Petersen {cert}, labels {labels:?}");
}
