mod common;

use bkcheck::enumeration::{enumerate_graphs, random_graph};
use bkcheck::invariants::{chromatic_number, max_clique};
use bkcheck::patterns::{classify_graph, find_induced, is_induced_embedding, GraphClass, Pattern};
use bkcheck::Graph;
use common::*;

#[test]
fn burnside_matches_known_counts() {
    let counts: Vec<u64> = (1..=7).map(burnside_count).collect();
    assert_eq!(counts, [1, 2, 4, 11, 34, 156, 1044]);
}

#[test]
fn enumeration_matches_mask_dedup() {
    for n in 1..=6 {
        let expected = brute_min_masks(n);
        let got: std::collections::BTreeSet<u64> = enumerate_graphs(n).unwrap().iter().map(min_mask).collect();
        assert_eq!(got, expected, "n={n}");
        assert_eq!(enumerate_graphs(n).unwrap().len(), expected.len());
    }
}

#[test]
fn solvers_match_brute_force_exhaustively() {
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let omega = max_clique(&g).unwrap();
            let chi = chromatic_number(&g).unwrap();
            assert_eq!(omega.omega, brute_omega(&g));
            assert_eq!(chi.chi, brute_chi(&g));
            assert!(g.is_clique(omega.witness) && omega.witness.len() == omega.omega);
            assert!(chi.witness.is_proper(&g) && chi.witness.colors_used() == chi.chi);
            assert!(omega.omega <= chi.chi && chi.chi <= g.max_degree() + 1);
        }
    }
}

#[test]
fn solvers_match_brute_force_on_random_graphs() {
    for seed in 0..200 {
        let g = random_graph(9, 0.5, seed).unwrap();
        assert_eq!(max_clique(&g).unwrap().omega, brute_omega(&g), "seed {seed}");
        assert_eq!(chromatic_number(&g).unwrap().chi, brute_chi(&g), "seed {seed}");
    }
}

#[test]
fn pattern_detection_matches_injective_scan() {
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            for p in Pattern::ALL {
                let h = p.graph();
                match find_induced(&g, p) {
                    Some(e) => assert!(is_induced_embedding(&g, &h, &e)),
                    None => assert!(!brute_contains(&g, &h), "{} in {:?}", p.name(), g),
                }
            }
        }
    }
}

#[test]
fn classification_is_hereditary() {
    for g in enumerate_graphs(6).unwrap() {
        let m = classify_graph(&g);
        for v in 0..g.n() {
            let sub = classify_graph(&g.remove_vertex(v).unwrap());
            for c in GraphClass::ALL {
                if c.forbidden().is_some() && m.is_member(c) {
                    assert!(sub.is_member(c), "{} lost on deleting {v}", c.name());
                }
            }
        }
    }
}

#[test]
fn spec_example_graphs() {
    let c5k3 = Graph::cycle(5).lexicographic_product(&Graph::complete(3)).unwrap();
    assert_eq!(brute_omega(&c5k3), 6);
    assert!(!brute_colorable(&c5k3, 7));
    assert_eq!(brute_chi(&Graph::petersen()), 3);
}
