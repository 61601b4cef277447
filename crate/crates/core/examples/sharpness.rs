//! C5[K3] shows the Δ ≥ 9 threshold cannot drop to 8.

use bkcheck::harness::{sharpness_witness, VerifyOptions};
use bkcheck::patterns::GraphClass;

fn main() {
    let r = sharpness_witness(&VerifyOptions::default());
    println!("n={} Δ={} ω={:?} χ={:?} holds={:?}", r.n, r.delta, r.omega, r.chi, r.inequality_holds);
    for c in GraphClass::CLAIMED {
        println!("  {}: {}", c.name(), r.memberships.is_member(c));
    }
    println!("{}", serde_json::to_string_pretty(&r).unwrap());
}
