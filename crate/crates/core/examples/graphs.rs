//! Building graphs: named families, products and derived graphs.

use bkcheck::graph::{Graph, VertexSet};

fn main() {
    let c5k3 = Graph::cycle(5).lexicographic_product(&Graph::complete(3)).unwrap();
    println!("C5[K3]: n={} m={} Δ={}", c5k3.n(), c5k3.edge_count(), c5k3.max_degree());

    let petersen = Graph::petersen();
    println!("Petersen: {:?}", petersen.degree_profile());

    let line = Graph::complete(5).line_graph().unwrap();
    println!("L(K5): n={} Δ={} (complement of Petersen: {})", line.n(), line.max_degree(),
        line.complement().edge_count() == petersen.edge_count());

    let k3x4 = Graph::complete_multipartite(&[3, 3, 3, 3]).unwrap();
    let part: VertexSet = (0..3).collect();
    println!("K3,3,3,3: Δ={} first part independent: {}", k3x4.max_degree(),
        k3x4.induced(part).unwrap().edge_count() == 0);

    let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    println!("P4 connected={} remove 1 -> connected={}", g.is_connected(), g.remove_vertex(1).unwrap().is_connected());
}
