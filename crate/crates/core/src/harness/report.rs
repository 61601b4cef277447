use std::time::Instant;

use serde::Serialize;

use crate::coloring::Coloring;
use crate::graph::{Graph, VertexSet};
use crate::harness::graph6::write_graph6;
use crate::invariants::{
    bk_bound, chromatic_number_with, max_clique_with, Budget, SolverError,
};
use crate::patterns::{classify_graph_with, ClassMembership, DenseOptions};
use crate::recolor::{delete_and_recolor, ExtensionBudget, RecolorError, Route};

/// Smallest maximum degree at which the bound is claimed.
pub const HYPOTHESIS_MIN_DELTA: usize = 9;

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct VerifyOptions {
    pub budget: Budget,
    pub dense: DenseOptions,
    pub record_timings: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SolverStats {
    pub clique_nodes: u64,
    pub chromatic_nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

/// Evidence attached to a report: an optimal colouring when the bound holds,
/// the offending numbers when it fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportWitness {
    Coloring(Coloring),
    Violation { chi: usize, bound: usize },
}

/// Outcome of colouring `G` with `Δ - 1` colours by deleting the
/// maximum-degree vertex and extending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionRecord {
    pub vertex: usize,
    pub k: usize,
    pub route: Option<Route>,
    pub trace_len: usize,
    pub verified: bool,
}

/// Per-graph verdict on `χ ≤ max{Δ − 1, ω}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    /// graph6 of the input unless a label was supplied.
    pub graph_id: String,
    pub n: usize,
    pub delta: usize,
    pub omega: Option<usize>,
    pub chi: Option<usize>,
    pub memberships: ClassMembership,
    pub inequality_holds: Option<bool>,
    /// Δ ≥ 9 and member of at least one claimed class.
    pub hypothesis_met: bool,
    /// Hypothesis met yet the bound fails.
    pub critical: bool,
    /// False when a solver ran out of budget; numbers are then left empty.
    pub complete: bool,
    pub clique: Option<VertexSet>,
    pub witness: Option<ReportWitness>,
    pub stats: SolverStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extension: Option<ExtensionRecord>,
}

impl ConjectureReport {
    /// Re-checks the recorded numbers against the witnesses.
    pub fn recheck(&self, g: &Graph) -> bool {
        if !self.complete {
            return self.omega.is_none() && self.chi.is_none() && !self.critical;
        }
        let (Some(omega), Some(chi), Some(holds)) = (self.omega, self.chi, self.inequality_holds) else {
            return false;
        };
        let clique_ok = self.clique.is_some_and(|c| c.len() == omega && g.is_clique(c));
        let bound = bk_bound(omega, self.delta);
        let witness_ok = match &self.witness {
            Some(ReportWitness::Coloring(c)) => {
                holds && c.is_total() && c.is_proper(g) && c.colors_used() == chi
            }
            Some(ReportWitness::Violation { chi: wc, bound: wb }) => !holds && *wc == chi && *wb == bound,
            None => false,
        };
        clique_ok
            && witness_ok
            && holds == (chi <= bound)
            && self.critical == (self.hypothesis_met && !holds)
            && self.hypothesis_met == (self.delta >= HYPOTHESIS_MIN_DELTA && self.memberships.in_claimed_class())
    }
}

pub fn verify_graph(g: &Graph, opts: &VerifyOptions) -> ConjectureReport {
    verify_labeled(g, None, opts)
}

/// [`verify_graph`] with an explicit identifier for the report.
pub fn verify_labeled(g: &Graph, label: Option<&str>, opts: &VerifyOptions) -> ConjectureReport {
    let start = Instant::now();
    let delta = g.max_degree();
    let memberships = classify_graph_with(g, opts.dense);
    let hypothesis_met = delta >= HYPOTHESIS_MIN_DELTA && memberships.in_claimed_class();
    let mut report = ConjectureReport {
        graph_id: label.map_or_else(|| write_graph6(g), str::to_owned),
        n: g.n(),
        delta,
        omega: None,
        chi: None,
        memberships,
        inequality_holds: None,
        hypothesis_met,
        critical: false,
        complete: false,
        clique: None,
        witness: None,
        stats: SolverStats::default(),
        extension: None,
    };
    let solved = max_clique_with(g, opts.budget)
        .and_then(|clique| chromatic_number_with(g, opts.budget).map(|chi| (clique, chi)));
    if let Ok((clique, chi)) = solved {
        let bound = bk_bound(clique.omega, delta);
        let holds = chi.chi <= bound;
        report.omega = Some(clique.omega);
        report.chi = Some(chi.chi);
        report.clique = Some(clique.witness);
        report.inequality_holds = Some(holds);
        report.critical = hypothesis_met && !holds;
        report.complete = true;
        report.witness = Some(if holds {
            ReportWitness::Coloring(chi.witness)
        } else {
            ReportWitness::Violation { chi: chi.chi, bound }
        });
        report.stats.clique_nodes = clique.nodes;
        report.stats.chromatic_nodes = chi.nodes;
    }
    if opts.record_timings {
        report.stats.elapsed_us = Some(start.elapsed().as_micros() as u64);
    }
    report
}

/// Runs [`delete_and_recolor`] at the maximum-degree vertex (lowest index on
/// ties) with `Δ - 1` colours and records the route taken. Only meaningful
/// when the report says `ω ≤ Δ - 1`.
pub fn attach_extension(
    g: &Graph,
    report: &mut ConjectureReport,
    budget: ExtensionBudget,
) -> Result<(), RecolorError> {
    let Some(u) = g.max_degree_vertex() else {
        return Ok(());
    };
    let k = report.delta.saturating_sub(1);
    let outcome = delete_and_recolor(g, u, k, budget)?;
    report.extension = Some(match outcome {
        Some(r) => ExtensionRecord {
            vertex: u,
            k,
            route: Some(r.route),
            trace_len: r.move_trace.len(),
            verified: r.coloring.is_total() && r.coloring.is_proper(g) && r.coloring.k() == k,
        },
        None => ExtensionRecord { vertex: u, k, route: None, trace_len: 0, verified: false },
    });
    Ok(())
}

/// Structure forced on a smallest counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub graph_id: String,
    /// Connected, not complete, Δ ≥ 9 and χ > max{Δ − 1, ω}.
    pub candidate: bool,
    /// χ = Δ > ω, when a candidate.
    pub chi_equals_delta: Option<bool>,
    /// Per vertex u, whether χ(G − u) = χ − 1, when a candidate.
    pub deletion_drops: Option<Vec<bool>>,
}

/// Cheap structural tests first; the solvers run only on graphs that pass.
pub fn lemma_check(g: &Graph, budget: Budget) -> Result<LemmaReport, SolverError> {
    let mut report =
        LemmaReport { graph_id: write_graph6(g), candidate: false, chi_equals_delta: None, deletion_drops: None };
    let delta = g.max_degree();
    if !g.is_connected() || g.is_complete() || delta < HYPOTHESIS_MIN_DELTA {
        return Ok(report);
    }
    let omega = max_clique_with(g, budget)?.omega;
    let chi = chromatic_number_with(g, budget)?.chi;
    if chi <= bk_bound(omega, delta) {
        return Ok(report);
    }
    report.candidate = true;
    report.chi_equals_delta = Some(chi == delta && delta > omega);
    let mut drops = Vec::with_capacity(g.n());
    for u in 0..g.n() {
        let rest = g.remove_vertex(u).expect("vertex in range");
        drops.push(chromatic_number_with(&rest, budget)?.chi + 1 == chi);
    }
    report.deletion_drops = Some(drops);
    Ok(report)
}

/// `C5[K3]`: Δ = 8, ω = 6, χ = 8, in every claimed class, and the bound
/// fails, so the Δ ≥ 9 hypothesis cannot be lowered to 8.
pub fn sharpness_witness(opts: &VerifyOptions) -> ConjectureReport {
    let g = Graph::cycle(5).lexicographic_product(&Graph::complete(3)).expect("15 vertices");
    assert_eq!(g.max_degree(), 8);
    verify_labeled(&g, Some("C5[K3]"), opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::GraphClass;

    #[test]
    fn k10_report() {
        let g = Graph::complete(10);
        let r = verify_graph(&g, &VerifyOptions::default());
        assert_eq!((r.delta, r.omega, r.chi), (9, Some(10), Some(10)));
        assert_eq!(r.inequality_holds, Some(true));
        assert!(r.hypothesis_met && !r.critical);
        assert!(r.recheck(&g));
    }

    #[test]
    fn sharpness_report() {
        let r = sharpness_witness(&VerifyOptions::default());
        assert_eq!((r.n, r.delta, r.omega, r.chi), (15, 8, Some(6), Some(8)));
        assert_eq!(r.inequality_holds, Some(false));
        assert!(!r.hypothesis_met && !r.critical);
        for c in GraphClass::CLAIMED {
            assert!(r.memberships.is_member(c), "{c:?}");
        }
        assert_eq!(r.witness, Some(ReportWitness::Violation { chi: 8, bound: 7 }));
    }

    #[test]
    fn petersen_report_is_informational() {
        let g = Graph::petersen();
        let r = verify_graph(&g, &VerifyOptions::default());
        assert_eq!(r.inequality_holds, Some(false));
        assert_eq!(r.delta, 3);
        assert!(!r.critical);
        assert!(r.recheck(&g));
    }

    #[test]
    fn budget_marks_incomplete() {
        let g = Graph::cycle(5).lexicographic_product(&Graph::complete(3)).unwrap();
        let opts = VerifyOptions { budget: Budget::nodes(3), ..Default::default() };
        let r = verify_graph(&g, &opts);
        assert!(!r.complete);
        assert_eq!(r.chi, None);
        assert!(r.recheck(&g));
    }

    #[test]
    fn lemma_examples() {
        let b = Budget::default();
        assert!(!lemma_check(&Graph::complete(10), b).unwrap().candidate);
        let c5k3 = Graph::cycle(5).lexicographic_product(&Graph::complete(3)).unwrap();
        let r = lemma_check(&c5k3, b).unwrap();
        assert!(!r.candidate && r.chi_equals_delta.is_none() && r.deletion_drops.is_none());
    }

    #[test]
    fn extension_record() {
        let g = Graph::complete_multipartite(&[3; 10]).unwrap();
        let mut r = verify_graph(&g, &VerifyOptions::default());
        attach_extension(&g, &mut r, ExtensionBudget::default()).unwrap();
        let ext = r.extension.unwrap();
        assert_eq!(ext.k, 26);
        assert!(ext.verified);
    }

    #[test]
    fn report_json_keys() {
        let r = verify_graph(&Graph::complete(3), &VerifyOptions::default());
        let v = serde_json::to_value(&r).unwrap();
        for key in [
            "graph_id", "n", "delta", "omega", "chi", "memberships", "inequality_holds",
            "hypothesis_met", "critical", "complete", "witness", "stats",
        ] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["witness"]["coloring"]["colors"], serde_json::json!([1, 2, 3]));
    }
}
