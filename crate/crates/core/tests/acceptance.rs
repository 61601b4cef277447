//! One PASS/FAIL line per acceptance criterion. Set `BKCHECK_LONG=1` to add
//! the n = 8 enumeration count.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bkcheck::enumeration::{enumerate_graphs, random_graph, Enumerator};
use bkcheck::harness::families::claimed_members;
use bkcheck::harness::sweep::inclusion_violations;
use bkcheck::harness::{parse_graph6, sample_families, sharpness_witness, write_graph6, RunConfig, VerifyOptions};
use bkcheck::invariants::{brooks_verdict, chromatic_number, k_colorable, max_clique, BrooksVerdict};
use bkcheck::patterns::{classify_graph, find_induced, GraphClass, Pattern};
use bkcheck::recolor::{delete_and_recolor, kempe_component, kempe_swap, ExtensionBudget, Route};
use bkcheck::{Coloring, Graph};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn all_graphs(n_max: usize) -> Vec<Graph> {
    Enumerator::default().levels(n_max).unwrap().into_iter().skip(1).flatten().collect()
}

fn enumeration_counts() -> Outcome {
    let start = Instant::now();
    let expected = [1usize, 2, 4, 11, 34, 156, 1044];
    let levels = Enumerator::default().levels(7).unwrap();
    let got: Vec<usize> = levels[1..].iter().map(Vec::len).collect();
    let burnside: Vec<usize> = (1..=7).map(|n| burnside_count(n) as usize).collect();
    let mut ok = got == expected && burnside == expected;
    for (n, level) in levels.iter().enumerate().take(7).skip(1) {
        let masks: BTreeSet<u64> = level.iter().map(min_mask).collect();
        ok &= masks == brute_min_masks(n);
    }
    let mut detail = format!("counts {got:?}");
    if std::env::var_os("BKCHECK_LONG").is_some() {
        let n8 = enumerate_graphs(8).unwrap().len();
        ok &= n8 == 12346 && burnside_count(8) == 12346;
        detail.push_str(&format!(", n=8 {n8}"));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(60);
    outcome(ok, format!("{detail} in {:.2?}", elapsed))
}

fn solver_oracles() -> Outcome {
    let mut mismatches = 0;
    let mut checked = 0;
    let mut check = |g: &Graph| {
        let omega = max_clique(g).unwrap();
        let chi = chromatic_number(g).unwrap();
        let witnesses_ok = g.is_clique(omega.witness)
            && omega.witness.len() == omega.omega
            && chi.witness.is_proper(g)
            && chi.witness.colors_used() == chi.chi;
        if omega.omega != brute_omega(g) || chi.chi != brute_chi(g) || !witnesses_ok {
            mismatches += 1;
        }
        checked += 1;
    };
    all_graphs(6).iter().for_each(&mut check);
    (0..200).for_each(|seed| check(&random_graph(9, 0.5, seed).unwrap()));
    outcome(mismatches == 0, format!("{checked} graphs, {mismatches} mismatches"))
}

fn brooks_control() -> Outcome {
    let mut connected = 0;
    let (mut complete, mut odd, mut violations, mut misattributed) = (0, 0, 0, 0);
    for g in all_graphs(8).iter().filter(|g| g.is_connected()) {
        connected += 1;
        match brooks_verdict(g).unwrap() {
            BrooksVerdict::WithinDelta => {}
            BrooksVerdict::CompleteException => {
                complete += 1;
                misattributed += usize::from(!g.is_complete());
            }
            BrooksVerdict::OddCycleException => {
                odd += 1;
                misattributed += usize::from(!g.is_odd_cycle());
            }
            BrooksVerdict::Violation => violations += 1,
        }
    }
    outcome(
        violations == 0 && misattributed == 0,
        format!("{connected} connected graphs, {complete} complete and {odd} odd-cycle exceptions, {violations} violations"),
    )
}

fn sharpness() -> Outcome {
    let start = Instant::now();
    let r = sharpness_witness(&VerifyOptions::default());
    let elapsed = start.elapsed();
    let classes = GraphClass::CLAIMED.iter().all(|&c| r.memberships.is_member(c));
    let ok = (r.delta, r.omega, r.chi) == (8, Some(6), Some(8))
        && r.inequality_holds == Some(false)
        && classes
        && elapsed < Duration::from_secs(10);
    outcome(ok, format!("Δ={} ω={:?} χ={:?} in all four classes: {classes}, {:.2?}", r.delta, r.omega, r.chi, elapsed))
}

fn conjecture_sweep() -> Outcome {
    let cfg = RunConfig::default();
    let (summary, reports) = sample_families(&cfg).unwrap();
    let members = claimed_members(&reports);
    let mut unverified = 0;
    let mut wanted = 0;
    for r in &reports {
        let g = parse_graph6(&r.report.graph_id).unwrap();
        unverified += usize::from(!r.report.recheck(&g));
        if r.report.omega.is_some_and(|w| w < r.report.delta) {
            wanted += 1;
            unverified += usize::from(!r.report.extension.as_ref().is_some_and(|e| e.verified));
        }
    }
    let t = &summary.totals;
    let ok = members >= 500 && t.critical == 0 && t.incomplete == 0 && unverified == 0;
    outcome(
        ok,
        format!(
            "{members} members, {} critical, {wanted} (Δ−1)-colourings sought, {unverified} unverified, fallback rate {:.3} ({} by extension, {} by fallback)",
            t.critical, t.fallback_rate, t.by_extension, t.by_fallback
        ),
    )
}

fn detector_equivalence() -> Outcome {
    let patterns: Vec<(Pattern, Graph)> = Pattern::ALL.iter().map(|&p| (p, p.graph())).collect();
    let mut mismatches = 0;
    let graphs = all_graphs(7);
    for g in &graphs {
        for (p, h) in &patterns {
            mismatches += usize::from(find_induced(g, *p).is_some() != brute_contains(g, h));
        }
    }
    outcome(mismatches == 0, format!("{} graphs x 10 patterns, {mismatches} mismatches", graphs.len()))
}

fn inclusion_lattice() -> Outcome {
    let graphs = all_graphs(7);
    let violations: usize = graphs.iter().map(|g| inclusion_violations(&classify_graph(g))).sum();
    outcome(violations == 0, format!("{} graphs, {violations} violations", graphs.len()))
}

fn random_proper_coloring(g: &Graph, rng: &mut ChaCha8Rng) -> Coloring {
    let mut order: Vec<usize> = (0..g.n()).collect();
    for i in (1..order.len()).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let k = g.max_degree() + 2;
    let mut colors = vec![0; g.n()];
    let mut done = vec![false; g.n()];
    for &v in &order {
        let used: Vec<usize> = g.neighbors(v).iter().filter(|&w| done[w]).map(|w| colors[w]).collect();
        let free: Vec<usize> = (0..k).filter(|c| !used.contains(c)).collect();
        colors[v] = free[rng.gen_range(0..free.len())];
        done[v] = true;
    }
    Coloring::from_colors(k, &colors).unwrap()
}

fn kempe_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut failures = 0;
    let trials = 10_000;
    for _ in 0..trials {
        let n = rng.gen_range(2..=24);
        let g = random_graph(n, rng.gen_range(0.1..0.7), rng.gen()).unwrap();
        let c = random_proper_coloring(&g, &mut rng);
        let v = rng.gen_range(0..n);
        let i = c.get(v).unwrap();
        let j = (i + rng.gen_range(1..c.k())) % c.k();
        let comp = kempe_component(&g, &c, v, i, j).unwrap();
        let in_pair = |w: usize| matches!(c.get(w), Some(x) if x == i || x == j);
        let maximal = comp.members.iter().all(|m| (g.neighbors(m) - comp.members).iter().all(|w| !in_pair(w)))
            && comp.members.iter().all(in_pair);
        let swapped = kempe_swap(&g, &c, &comp).unwrap();
        let back = kempe_swap(&g, &swapped, &kempe_component(&g, &swapped, v, i, j).unwrap()).unwrap();
        if !maximal || !swapped.is_proper(&g) || back != c {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("{trials} trials, {failures} failures"))
}

fn extension_completeness() -> Outcome {
    let (mut cases, mut missed, mut improper, mut fallbacks) = (0, 0, 0, 0);
    for g in all_graphs(7) {
        let k = g.max_degree();
        let colorable = k_colorable(&g, k).unwrap().is_some();
        for u in 0..g.n() {
            cases += 1;
            match delete_and_recolor(&g, u, k, ExtensionBudget::default()).unwrap() {
                Some(r) => {
                    improper += usize::from(!(r.coloring.is_total() && r.coloring.is_proper(&g) && r.coloring.k() == k));
                    fallbacks += usize::from(r.route == Route::Fallback);
                }
                None => missed += usize::from(colorable),
            }
        }
    }
    outcome(
        missed == 0 && improper == 0,
        format!("{cases} (graph, u) cases, {missed} missed, {improper} improper, {fallbacks} fallbacks"),
    )
}

fn graph6_round_trip() -> Outcome {
    let graphs = all_graphs(7);
    let bad = graphs.iter().filter(|g| parse_graph6(&write_graph6(g)).as_ref() != Ok(*g)).count();
    let fixed = parse_graph6("D??") == Ok(Graph::empty(5))
        && write_graph6(&Graph::empty(5)) == "D??"
        && parse_graph6("A_") == Ok(Graph::complete(2))
        && write_graph6(&Graph::complete(2)) == "A_";
    outcome(bad == 0 && fixed, format!("{} graphs, {bad} mismatches, fixed strings ok: {fixed}", graphs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("enumeration counts", enumeration_counts),
        ("solver oracle equivalence", solver_oracles),
        ("Brooks control", brooks_control),
        ("sharpness at Δ = 8", sharpness),
        ("conjecture sweep", conjecture_sweep),
        ("pattern detector equivalence", detector_equivalence),
        ("class inclusion lattice", inclusion_lattice),
        ("Kempe properties", kempe_properties),
        ("extension completeness", extension_completeness),
        ("graph6 round trip", graph6_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        failed += usize::from(!o.pass);
        println!("{} {:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
