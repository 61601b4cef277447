//! Extending a colouring of G − u to G by Kempe swaps and local moves.

use bkcheck::graph::Graph;
use bkcheck::recolor::{delete_and_recolor, extend_coloring, replay, ExtensionBudget};
use bkcheck::Coloring;

fn main() {
    // C5 with u = 0 uncoloured: both neighbours carry distinct colours out of two.
    let c5 = Graph::cycle(5);
    let start = Coloring::from_partial(3, &[None, Some(0), Some(1), Some(0), Some(1)]).unwrap();
    let r = extend_coloring(&c5, 0, &start, ExtensionBudget::default()).unwrap();
    println!("C5: {}", serde_json::to_string(&r).unwrap());

    // K4 with three colours cannot be finished; the exact solver certifies it.
    let k4 = Graph::complete(4);
    let start = Coloring::from_partial(3, &[None, Some(0), Some(1), Some(2)]).unwrap();
    let r = extend_coloring(&k4, 0, &start, ExtensionBudget::default()).unwrap();
    println!("K4 with 3 colours: {:?}", r.outcome);

    // Δ − 1 colours on a dense multipartite graph via deletion at a maximum-degree vertex.
    let g = Graph::complete_multipartite(&[2, 2, 3, 3, 3, 4, 4, 4, 1, 2]).unwrap();
    let u = g.max_degree_vertex().unwrap();
    let k = g.max_degree() - 1;
    let out = delete_and_recolor(&g, u, k, ExtensionBudget::default()).unwrap().unwrap();
    println!("multipartite: u={u} k={k} route={:?} moves={}", out.route, out.move_trace.len());
    assert!(out.coloring.is_proper(&g));

    let lifted = {
        let mut c = out.coloring.clone();
        c.set(u, None).unwrap();
        c
    };
    if !out.move_trace.is_empty() {
        println!("replay reproduces a proper colouring: {}", replay(&g, &lifted, &out.move_trace).is_ok());
    }
}
