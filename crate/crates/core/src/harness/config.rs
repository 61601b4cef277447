use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::invariants::DEFAULT_NODE_BUDGET;
use crate::patterns::{DenseOptions, GraphClass};
use crate::recolor::ExtensionBudget;

/// Settings shared by every batch run. Missing fields in a JSON config file
/// take the defaults below, and the whole struct is echoed into the header
/// record of each output so a run can be reproduced from its output alone.
///
/// Random draws come from ChaCha8 seeded with `seed` through
/// `SeedableRng::seed_from_u64`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Free-form label for the run; the CLI records the subcommand here.
    pub mode: String,
    pub n_min: usize,
    pub n_max: usize,
    /// Instances to generate per family in `sample`.
    pub samples: usize,
    /// Edge probability range `[lo, hi]` for filtered random graphs.
    pub edge_probability: (f64, f64),
    pub seed: u64,
    /// Classes a filtered random graph must belong to (any one suffices).
    /// Empty means the four claimed classes.
    pub class_filter: Vec<GraphClass>,
    pub budget_nodes: u64,
    pub extension_states: usize,
    pub extension_swaps: usize,
    pub dense: DenseOptions,
    /// Rejection-sampling attempts per requested random instance.
    pub attempts_per_sample: usize,
    pub output: Option<PathBuf>,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    /// Wall-clock timings in reports. Off by default so output is byte-stable.
    pub record_timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            mode: "sample".into(),
            n_min: 12,
            n_max: 20,
            samples: 200,
            edge_probability: (0.6, 0.9),
            seed: 1,
            class_filter: Vec::new(),
            budget_nodes: DEFAULT_NODE_BUDGET,
            extension_states: 100_000,
            extension_swaps: 3,
            dense: DenseOptions::default(),
            attempts_per_sample: 50,
            output: None,
            jobs: 0,
            record_timings: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        let (lo, hi) = self.edge_probability;
        if !(0.0..=1.0).contains(&lo) || !(0.0..=1.0).contains(&hi) || lo > hi {
            return Err(format!("edge probability range [{lo}, {hi}] is invalid"));
        }
        if self.n_min > self.n_max || self.n_max > crate::graph::MAX_VERTICES {
            return Err(format!("vertex range {}..={} is invalid", self.n_min, self.n_max));
        }
        Ok(())
    }

    pub fn filter_classes(&self) -> Vec<GraphClass> {
        if self.class_filter.is_empty() {
            GraphClass::CLAIMED.to_vec()
        } else {
            self.class_filter.clone()
        }
    }

    pub fn extension_budget(&self) -> ExtensionBudget {
        ExtensionBudget {
            max_states: self.extension_states,
            max_swaps: self.extension_swaps,
            solver: crate::invariants::Budget::nodes(self.budget_nodes),
            certify: true,
        }
    }
}
