//! Seeded families of class members with Δ ≥ 9.
//!
//! * complete multipartite graphs with 10 to 14 parts of size 1 to 4; these
//!   are P4-free and so lie in every claimed class;
//! * line graphs of random graphs, which are claw-free and hence chair-free;
//! * dense random graphs kept only if they land in a requested class.
//!
//! Instances are generated sequentially from one ChaCha8 stream so the set
//! of graphs depends only on the configuration, then verified in parallel.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::enumeration::random_graph;
use crate::graph::{Graph, MAX_VERTICES};
use crate::harness::par_map;
use crate::harness::report::{attach_extension, verify_graph, ConjectureReport, VerifyOptions, HYPOTHESIS_MIN_DELTA};
use crate::harness::RunConfig;
use crate::invariants::Budget;
use crate::patterns::{classify_graph_with, GraphClass};
use crate::recolor::Route;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Multipartite,
    LineGraph,
    FilteredRandom,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Multipartite, Family::LineGraph, Family::FilteredRandom];
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct FamilySummary {
    pub family: Option<Family>,
    pub requested: usize,
    pub generated: usize,
    pub attempts: usize,
    /// Requested instances the generator could not produce.
    pub shortfall: usize,
    pub inequality_holds: usize,
    pub critical: usize,
    pub incomplete: usize,
    /// Instances with ω ≤ Δ − 1, where a (Δ − 1)-colouring is sought.
    pub extension_attempts: usize,
    pub by_extension: usize,
    pub by_fallback: usize,
    /// Attempts that produced no verified colouring.
    pub extension_failures: usize,
    pub fallback_rate: f64,
}

impl FamilySummary {
    fn absorb(&mut self, o: &FamilySummary) {
        self.requested += o.requested;
        self.generated += o.generated;
        self.attempts += o.attempts;
        self.shortfall += o.shortfall;
        self.inequality_holds += o.inequality_holds;
        self.critical += o.critical;
        self.incomplete += o.incomplete;
        self.extension_attempts += o.extension_attempts;
        self.by_extension += o.by_extension;
        self.by_fallback += o.by_fallback;
        self.extension_failures += o.extension_failures;
    }

    fn finish(&mut self) {
        self.fallback_rate = if self.extension_attempts == 0 {
            0.0
        } else {
            self.by_fallback as f64 / self.extension_attempts as f64
        };
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleSummary {
    pub seed: u64,
    pub families: Vec<FamilySummary>,
    pub totals: FamilySummary,
}

/// A report tagged with the family that produced the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampledReport {
    pub family: Family,
    #[serde(flatten)]
    pub report: ConjectureReport,
}

struct Generated {
    family: Family,
    graphs: Vec<Graph>,
    attempts: usize,
}

fn multipartite(rng: &mut ChaCha8Rng, count: usize) -> Generated {
    let graphs = (0..count)
        .map(|_| {
            let parts: Vec<usize> = (0..rng.gen_range(10..=14)).map(|_| rng.gen_range(1..=4)).collect();
            Graph::complete_multipartite(&parts).expect("at most 56 vertices")
        })
        .collect();
    Generated { family: Family::Multipartite, graphs, attempts: count }
}

fn line_graphs(rng: &mut ChaCha8Rng, count: usize, max_attempts: usize) -> Result<Generated, Error> {
    let mut graphs = Vec::new();
    let mut attempts = 0;
    while graphs.len() < count && attempts < max_attempts {
        attempts += 1;
        let n = rng.gen_range(7..=11);
        let p = rng.gen_range(0.35..0.6);
        let base = random_graph(n, p, rng.gen())?;
        if base.edge_count() > MAX_VERTICES {
            continue;
        }
        let line = base.line_graph()?;
        if line.max_degree() >= HYPOTHESIS_MIN_DELTA {
            graphs.push(line);
        }
    }
    Ok(Generated { family: Family::LineGraph, graphs, attempts })
}

fn filtered_random(rng: &mut ChaCha8Rng, cfg: &RunConfig, max_attempts: usize) -> Result<Generated, Error> {
    let classes = cfg.filter_classes();
    let (lo, hi) = cfg.edge_probability;
    let mut graphs = Vec::new();
    let mut attempts = 0;
    while graphs.len() < cfg.samples && attempts < max_attempts {
        attempts += 1;
        let n = rng.gen_range(cfg.n_min..=cfg.n_max);
        let p = if lo < hi { rng.gen_range(lo..=hi) } else { lo };
        let g = random_graph(n, p, rng.gen())?;
        if g.max_degree() < HYPOTHESIS_MIN_DELTA {
            continue;
        }
        let m = classify_graph_with(&g, cfg.dense);
        if classes.iter().any(|&c| m.is_member(c)) {
            graphs.push(g);
        }
    }
    Ok(Generated { family: Family::FilteredRandom, graphs, attempts })
}

/// Generates `cfg.samples` instances per family, verifies each, and seeks a
/// (Δ − 1)-colouring wherever ω ≤ Δ − 1.
pub fn sample_families(cfg: &RunConfig) -> Result<(SampleSummary, Vec<SampledReport>), Error> {
    cfg.validate().map_err(Error::Config)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let max_attempts = cfg.samples.saturating_mul(cfg.attempts_per_sample);
    let generated = vec![
        multipartite(&mut rng, cfg.samples),
        line_graphs(&mut rng, cfg.samples, max_attempts)?,
        filtered_random(&mut rng, cfg, max_attempts)?,
    ];

    let opts = VerifyOptions {
        budget: Budget::nodes(cfg.budget_nodes),
        dense: cfg.dense,
        record_timings: cfg.record_timings,
    };
    let ext_budget = cfg.extension_budget();
    let mut families = Vec::new();
    let mut reports = Vec::new();
    let mut totals = FamilySummary::default();
    for generated in generated {
        let verified = par_map(cfg.jobs, &generated.graphs, |g| {
            let mut report = verify_graph(g, &opts);
            let wants_extension = report.omega.is_some_and(|w| w < report.delta);
            let ext = if wants_extension { attach_extension(g, &mut report, ext_budget).err() } else { None };
            (report, ext)
        });
        let mut s = FamilySummary {
            family: Some(generated.family),
            requested: cfg.samples,
            generated: generated.graphs.len(),
            attempts: generated.attempts,
            shortfall: cfg.samples - generated.graphs.len(),
            ..Default::default()
        };
        for (report, ext_err) in verified {
            debug_assert!(
                report.hypothesis_met || generated.family != Family::Multipartite,
                "multipartite instances are P4-free"
            );
            s.inequality_holds += usize::from(report.inequality_holds == Some(true));
            s.critical += usize::from(report.critical);
            s.incomplete += usize::from(!report.complete || ext_err.is_some());
            if let Some(ext) = &report.extension {
                s.extension_attempts += 1;
                match (ext.route, ext.verified) {
                    (Some(Route::Extension), true) => s.by_extension += 1,
                    (Some(Route::Fallback), true) => s.by_fallback += 1,
                    _ => s.extension_failures += 1,
                }
            } else if ext_err.is_some() {
                s.extension_attempts += 1;
                s.extension_failures += 1;
            }
            reports.push(SampledReport { family: generated.family, report });
        }
        s.finish();
        totals.absorb(&s);
        families.push(s);
    }
    totals.finish();
    Ok((SampleSummary { seed: cfg.seed, families, totals }, reports))
}

/// Members of the claimed classes among `reports`.
pub fn claimed_members(reports: &[SampledReport]) -> usize {
    reports
        .iter()
        .filter(|r| r.report.delta >= HYPOTHESIS_MIN_DELTA && r.report.memberships.in_claimed_class())
        .count()
}

/// Which claimed classes each family's instances fall in, for reporting.
pub fn class_counts(reports: &[SampledReport]) -> Vec<(GraphClass, usize)> {
    GraphClass::CLAIMED
        .into_iter()
        .map(|c| (c, reports.iter().filter(|r| r.report.memberships.is_member(c)).count()))
        .collect()
}
