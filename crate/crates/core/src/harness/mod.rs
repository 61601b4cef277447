//! Batch verification: per-graph reports, the lemma check, exhaustive and
//! sampled sweeps, the Δ = 8 sharpness example, and graph6 I/O.

pub mod config;
pub mod families;
pub mod graph6;
pub mod report;
pub mod sweep;

pub use config::RunConfig;
pub use families::{sample_families, Family, FamilySummary, SampleSummary};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use report::{
    lemma_check, sharpness_witness, verify_graph, ConjectureReport, LemmaReport, ReportWitness,
    SolverStats, VerifyOptions,
};
pub use sweep::{sweep_enumerated, LevelSummary, SweepSummary};

use rayon::prelude::*;

/// Order-preserving parallel map on a pool with `jobs` threads (`0` lets
/// rayon decide).
pub fn par_map<T, R, F>(jobs: usize, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
    pool.install(|| items.par_iter().map(&f).collect())
}
