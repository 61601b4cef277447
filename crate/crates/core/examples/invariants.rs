//! Exact ω and χ, Brooks' bound, and the max{ω, Δ − 1} predicate.

use bkcheck::graph::Graph;
use bkcheck::invariants::{bk_bound, brooks_verdict, chromatic_number, max_clique};

fn main() {
    let c5k3 = Graph::cycle(5).lexicographic_product(&Graph::complete(3)).unwrap();
    let samples = [
        ("K10", Graph::complete(10)),
        ("C7", Graph::cycle(7)),
        ("Petersen", Graph::petersen()),
        ("K3,3,3", Graph::complete_multipartite(&[3, 3, 3]).unwrap()),
        ("C5[K3]", c5k3),
    ];
    for (name, g) in &samples {
        let omega = max_clique(g).unwrap();
        let chi = chromatic_number(g).unwrap();
        let delta = g.max_degree();
        println!(
            "{name}: Δ={delta} ω={} χ={} brooks={:?} χ ≤ max{{ω, Δ−1}}: {}",
            omega.omega,
            chi.chi,
            brooks_verdict(g).unwrap(),
            chi.chi <= bk_bound(omega.omega, delta)
        );
        assert!(chi.witness.is_proper(g) && g.is_clique(omega.witness));
    }
}
