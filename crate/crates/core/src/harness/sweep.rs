use std::collections::HashSet;

use serde::Serialize;

use crate::enumeration::Enumerator;
use crate::graph::{Graph, VertexSet};
use crate::harness::graph6::{parse_graph6, write_graph6};
use crate::harness::par_map;
use crate::harness::report::{lemma_check, verify_graph, VerifyOptions};
use crate::harness::RunConfig;
use crate::invariants::{brooks_verdict_with, Budget, BrooksVerdict};
use crate::patterns::{find_induced, ClassMembership, GraphClass, Pattern};
use crate::Error;

/// Counts for one vertex order of an exhaustive sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LevelSummary {
    pub n: usize,
    pub graphs: usize,
    pub connected: usize,
    pub brooks_within_delta: usize,
    pub brooks_complete: usize,
    pub brooks_odd_cycle: usize,
    pub brooks_violations: usize,
    pub inclusion_violations: usize,
    pub detector_mismatches: usize,
    pub graph6_mismatches: usize,
    /// Graphs with χ > max{ω, Δ − 1}; informational, all have Δ < 9 here.
    pub bound_failures: usize,
    pub lemma_candidates: usize,
    pub critical: usize,
    pub incomplete: usize,
}

impl LevelSummary {
    fn absorb(&mut self, other: &LevelSummary) {
        self.graphs += other.graphs;
        self.connected += other.connected;
        self.brooks_within_delta += other.brooks_within_delta;
        self.brooks_complete += other.brooks_complete;
        self.brooks_odd_cycle += other.brooks_odd_cycle;
        self.brooks_violations += other.brooks_violations;
        self.inclusion_violations += other.inclusion_violations;
        self.detector_mismatches += other.detector_mismatches;
        self.graph6_mismatches += other.graph6_mismatches;
        self.bound_failures += other.bound_failures;
        self.lemma_candidates += other.lemma_candidates;
        self.critical += other.critical;
        self.incomplete += other.incomplete;
    }

    /// No Brooks, inclusion, detector, graph6 or critical failures.
    pub fn is_clean(&self) -> bool {
        self.brooks_violations == 0
            && self.inclusion_violations == 0
            && self.detector_mismatches == 0
            && self.graph6_mismatches == 0
            && self.critical == 0
            && self.incomplete == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub n_max: usize,
    pub levels: Vec<LevelSummary>,
    pub totals: LevelSummary,
}

/// The class implications that hold by pattern containment:
/// `(stronger, weaker)` means membership in `stronger` forces `weaker`.
pub const INCLUSIONS: [(GraphClass, GraphClass); 6] = [
    (GraphClass::ClawFree, GraphClass::ChairFree),
    (GraphClass::ThreeK1Free, GraphClass::P4UnionK1Free),
    (GraphClass::P3UnionK1Free, GraphClass::P4UnionK1Free),
    (GraphClass::K2Union2K1Free, GraphClass::P4UnionK1Free),
    (GraphClass::P4Free, GraphClass::P5Free),
    (GraphClass::P4Free, GraphClass::P4UnionK1Free),
];

pub fn inclusion_violations(m: &ClassMembership) -> usize {
    INCLUSIONS.iter().filter(|(strong, weak)| m.is_member(*strong) && !m.is_member(*weak)).count()
}

/// Subset-scan oracle for induced patterns: every labelled copy of each
/// pattern is listed as an upper-triangle mask, and each vertex subset of the
/// right size is looked up in that list.
pub struct BruteDetector {
    copies: Vec<(Pattern, usize, HashSet<u64>)>,
}

impl Default for BruteDetector {
    fn default() -> Self {
        let copies = Pattern::ALL
            .into_iter()
            .map(|p| {
                let g = p.graph();
                let k = g.n();
                let mut masks = HashSet::new();
                for_each_permutation(k, &mut |perm| {
                    masks.insert(pair_mask(&g.permuted(perm), &(0..k).collect::<Vec<_>>()));
                });
                (p, k, masks)
            })
            .collect();
        BruteDetector { copies }
    }
}

impl BruteDetector {
    pub fn contains(&self, g: &Graph, pattern: Pattern) -> bool {
        let (_, k, masks) = self.copies.iter().find(|(p, _, _)| *p == pattern).expect("known pattern");
        let mut found = false;
        for_each_subset(g.n(), *k, &mut |subset| {
            if !found && masks.contains(&pair_mask(g, subset)) {
                found = true;
            }
        });
        found
    }
}

fn pair_mask(g: &Graph, vs: &[usize]) -> u64 {
    let mut mask = 0u64;
    let mut bit = 0;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if g.has_edge(vs[i], vs[j]) {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

fn for_each_permutation(k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(perm: &mut Vec<usize>, used: VertexSet, k: usize, f: &mut dyn FnMut(&[usize])) {
        if perm.len() == k {
            f(perm);
            return;
        }
        for v in VertexSet::full(k) - used {
            perm.push(v);
            rec(perm, used.with(v), k, f);
            perm.pop();
        }
    }
    rec(&mut Vec::with_capacity(k), VertexSet::EMPTY, k, f);
}

fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

fn check_one(g: &Graph, n: usize, detector: &BruteDetector, budget: Budget) -> LevelSummary {
    let mut s = LevelSummary { n, graphs: 1, ..Default::default() };
    let opts = VerifyOptions { budget, ..Default::default() };
    let report = verify_graph(g, &opts);
    if !report.complete {
        s.incomplete += 1;
    }
    if report.inequality_holds == Some(false) {
        s.bound_failures += 1;
    }
    if report.critical {
        s.critical += 1;
    }
    s.inclusion_violations += inclusion_violations(&report.memberships);
    for p in Pattern::ALL {
        if find_induced(g, p).is_some() != detector.contains(g, p) {
            s.detector_mismatches += 1;
        }
    }
    if parse_graph6(&write_graph6(g)).as_ref() != Ok(g) {
        s.graph6_mismatches += 1;
    }
    if g.is_connected() {
        s.connected += 1;
        match brooks_verdict_with(g, budget) {
            Ok(BrooksVerdict::WithinDelta) => s.brooks_within_delta += 1,
            Ok(BrooksVerdict::CompleteException) => s.brooks_complete += 1,
            Ok(BrooksVerdict::OddCycleException) => s.brooks_odd_cycle += 1,
            Ok(BrooksVerdict::Violation) => s.brooks_violations += 1,
            Err(_) => s.incomplete += 1,
        }
    }
    match lemma_check(g, budget) {
        Ok(l) if l.candidate => s.lemma_candidates += 1,
        Ok(_) => {}
        Err(_) => s.incomplete += 1,
    }
    s
}

/// Runs every check on every isomorphism class of order `1..=n_max`.
/// Deterministic for a given configuration regardless of `cfg.jobs`.
pub fn sweep_enumerated(n_max: usize, cfg: &RunConfig) -> Result<SweepSummary, Error> {
    let levels = Enumerator::default().levels(n_max)?;
    let detector = BruteDetector::default();
    let budget = Budget::nodes(cfg.budget_nodes);
    let mut out = Vec::new();
    let mut totals = LevelSummary::default();
    for (n, graphs) in levels.iter().enumerate().skip(1) {
        let per_graph = par_map(cfg.jobs, graphs, |g| check_one(g, n, &detector, budget));
        let mut level = LevelSummary { n, ..Default::default() };
        for s in &per_graph {
            level.absorb(s);
        }
        totals.absorb(&level);
        out.push(level);
    }
    Ok(SweepSummary { n_max, levels: out, totals })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_detector_basics() {
        let d = BruteDetector::default();
        assert!(d.contains(&Graph::cycle(6), Pattern::P5));
        assert!(!d.contains(&Graph::cycle(5), Pattern::P5));
        assert!(d.contains(&Graph::star(3), Pattern::Claw));
        assert!(!d.contains(&Graph::complete(6), Pattern::ThreeK1));
    }

    #[test]
    fn sweep_small() {
        let s = sweep_enumerated(4, &RunConfig::default()).unwrap();
        assert_eq!(s.levels.len(), 4);
        assert_eq!(s.levels[3].graphs, 11);
        assert!(s.totals.is_clean());
        let trivial = sweep_enumerated(1, &RunConfig::default()).unwrap();
        assert_eq!(trivial.totals.graphs, 1);
        assert!(trivial.totals.is_clean());
    }

    #[test]
    fn sweep_is_deterministic_across_jobs() {
        let one = sweep_enumerated(5, &RunConfig { jobs: 1, ..Default::default() }).unwrap();
        let many = sweep_enumerated(5, &RunConfig { jobs: 4, ..Default::default() }).unwrap();
        assert_eq!(serde_json::to_string(&one).unwrap(), serde_json::to_string(&many).unwrap());
    }
}
