//! Seeded family sampling: every instance has Δ ≥ 9 and lies in a claimed class.

use bkcheck::harness::families::{claimed_members, class_counts};
use bkcheck::harness::{sample_families, RunConfig};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let cfg = RunConfig { samples: 50, seed, ..Default::default() };
    let (summary, reports) = sample_families(&cfg).unwrap();
    for f in &summary.families {
        println!(
            "{:?}: generated {}/{} in {} attempts, holds {}, critical {}, fallback rate {:.3}",
            f.family.unwrap(), f.generated, f.requested, f.attempts, f.inequality_holds, f.critical, f.fallback_rate
        );
    }
    println!("claimed-class members: {}", claimed_members(&reports));
    for (class, count) in class_counts(&reports) {
        println!("  {}: {count}", class.name());
    }
}
