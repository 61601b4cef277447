//! Exhaustive checks over every graph on at most 7 vertices.

use bkcheck::harness::{sweep_enumerated, RunConfig};

fn main() {
    let summary = sweep_enumerated(7, &RunConfig::default()).unwrap();
    for l in &summary.levels {
        println!(
            "n={} graphs={} connected={} brooks(complete={}, odd_cycle={}, violations={}) bound_failures={} clean={}",
            l.n, l.graphs, l.connected, l.brooks_complete, l.brooks_odd_cycle, l.brooks_violations,
            l.bound_failures, l.is_clean()
        );
    }
    assert!(summary.totals.is_clean());
}
