//! Neighbourhood spectra and Kempe swaps.

use bkcheck::graph::Graph;
use bkcheck::recolor::{kempe_component, kempe_swap, spectrum};
use bkcheck::Coloring;

fn main() {
    let c6 = Graph::cycle(6);
    let c = Coloring::from_colors(3, &[0, 1, 0, 1, 0, 2]).unwrap();
    let s = spectrum(&c6, &c, 0).unwrap();
    println!("spectrum at 0: unique {:?}, repeated {:?}, missing {:?}",
        s.unique_vertices, s.repeat_colors, s.missing_colors);

    let comp = kempe_component(&c6, &c, 1, 0, 1).unwrap();
    println!("0/1 component through vertex 1: {:?}", comp.members.to_vec());
    let swapped = kempe_swap(&c6, &c, &comp).unwrap();
    println!("after swap: {:?} proper={}", swapped.to_vec(), swapped.is_proper(&c6));

    // A component describes one colouring state; it cannot be replayed on another.
    println!("stale swap rejected: {}", kempe_swap(&c6, &swapped, &comp).is_err());
    let back = kempe_swap(&c6, &swapped, &kempe_component(&c6, &swapped, 1, 0, 1).unwrap()).unwrap();
    println!("swap is an involution: {}", back == c);
}
