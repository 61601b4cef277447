//! Exact clique number and chromatic number, plus Brooks' bound and the
//! `max{ω, Δ − 1}` predicate built on them.
//!
//! Both solvers are branch-and-bound over vertex bitsets and count search
//! nodes against a [`Budget`]; running out is reported as
//! [`SolverError::BudgetExceeded`], never as an answer.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("solver exceeded its budget of {0} branch nodes")]
    BudgetExceeded(u64),
    #[error("graph is disconnected")]
    Disconnected,
}

/// Limit on branch nodes for one solver call.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: DEFAULT_NODE_BUDGET }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes }
    }
}

#[derive(Debug)]
struct Counter {
    used: u64,
    limit: u64,
}

impl Counter {
    fn new(budget: Budget) -> Self {
        Counter { used: 0, limit: budget.max_nodes }
    }

    #[inline]
    fn tick(&mut self) -> Result<(), SolverError> {
        self.used += 1;
        if self.used > self.limit {
            Err(SolverError::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    pub omega: usize,
    pub witness: VertexSet,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticResult {
    pub chi: usize,
    pub witness: Coloring,
    pub nodes: u64,
}

pub fn max_clique(g: &Graph) -> Result<CliqueResult, SolverError> {
    max_clique_with(g, Budget::default())
}

/// Maximum clique by colour-bounded branch and bound.
///
/// Vertices are processed in descending-degree order (lowest index on ties);
/// each subproblem is greedily coloured and a branch is cut once the clique
/// so far plus the colour count of the remaining candidates cannot beat the
/// incumbent. The witness is the first maximum clique reached.
pub fn max_clique_with(g: &Graph, budget: Budget) -> Result<CliqueResult, SolverError> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    // Position i in the search graph is original vertex order[i].
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let h = g.permuted(&rank);
    let mut search = CliqueSearch { g: &h, best: VertexSet::EMPTY, counter: Counter::new(budget) };
    search.expand(VertexSet::EMPTY, h.vertices())?;
    let witness: VertexSet = search.best.iter().map(|i| order[i]).collect();
    Ok(CliqueResult { omega: witness.len(), witness, nodes: search.counter.used })
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    best: VertexSet,
    counter: Counter,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, clique: VertexSet, mut cand: VertexSet) -> Result<(), SolverError> {
        self.counter.tick()?;
        if cand.is_empty() {
            if clique.len() > self.best.len() {
                self.best = clique;
            }
            return Ok(());
        }
        let (vertices, bounds) = greedy_color_bound(self.g, cand);
        for (&v, &bound) in vertices.iter().zip(bounds.iter()).rev() {
            if clique.len() + bound <= self.best.len() {
                return Ok(());
            }
            self.expand(clique.with(v), cand & self.g.neighbors(v))?;
            cand.remove(v);
        }
        Ok(())
    }
}

/// Sequential greedy colouring of `cand` by colour classes. Returns the
/// vertices in colour order with, for each, the number of colours used up to
/// and including it.
fn greedy_color_bound(g: &Graph, cand: VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut vertices = Vec::with_capacity(cand.len());
    let mut bounds = Vec::with_capacity(cand.len());
    let mut uncolored = cand;
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut avail = uncolored;
        while let Some(v) = avail.first() {
            avail = avail - g.closed_neighbors(v);
            uncolored.remove(v);
            vertices.push(v);
            bounds.push(color);
        }
    }
    (vertices, bounds)
}

pub fn k_colorable(g: &Graph, k: usize) -> Result<Option<Coloring>, SolverError> {
    k_colorable_with(g, k, Budget::default())
}

/// Proper colouring with palette `0..k`, if one exists.
pub fn k_colorable_with(g: &Graph, k: usize, budget: Budget) -> Result<Option<Coloring>, SolverError> {
    let mut counter = Counter::new(budget);
    let clique = max_clique_with(g, budget)?;
    counter.used += clique.nodes;
    color_search(g, k, clique.witness, &mut counter)
}

/// DSATUR backtracking with the clique pre-coloured `0..|clique|` and a new
/// colour opened only as the next unused index.
fn color_search(
    g: &Graph,
    k: usize,
    clique: VertexSet,
    counter: &mut Counter,
) -> Result<Option<Coloring>, SolverError> {
    let n = g.n();
    if clique.len() > k {
        return Ok(None);
    }
    // A palette beyond n colours is never needed.
    let palette = k.min(n);
    let mut state = DsaturState {
        g,
        palette,
        color: vec![None; n],
        classes: vec![VertexSet::EMPTY; palette],
        uncolored: g.vertices(),
    };
    for (c, v) in clique.iter().enumerate() {
        state.assign(v, c);
    }
    if state.search(clique.len(), counter)? {
        let colors: Vec<usize> = state.color.iter().map(|c| c.expect("total")).collect();
        let coloring = Coloring::from_colors(k, &colors).expect("colours within palette");
        debug_assert!(coloring.is_proper(g));
        Ok(Some(coloring))
    } else {
        Ok(None)
    }
}

struct DsaturState<'a> {
    g: &'a Graph,
    palette: usize,
    color: Vec<Option<usize>>,
    classes: Vec<VertexSet>,
    uncolored: VertexSet,
}

impl DsaturState<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = Some(c);
        self.classes[c].insert(v);
        self.uncolored.remove(v);
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = None;
        self.classes[c].remove(v);
        self.uncolored.insert(v);
    }

    /// Bitmask of colours `< used` present around `v`.
    fn forbidden(&self, v: usize, used: usize) -> u64 {
        let nb = self.g.neighbors(v);
        (0..used).filter(|&c| !(self.classes[c] & nb).is_empty()).fold(0, |m, c| m | 1 << c)
    }

    fn search(&mut self, used: usize, counter: &mut Counter) -> Result<bool, SolverError> {
        counter.tick()?;
        // Highest saturation, then most uncoloured neighbours, then lowest index.
        let mut pick = None;
        for v in self.uncolored {
            let forb = self.forbidden(v, used);
            let sat = forb.count_ones() as usize;
            let deg = (self.g.neighbors(v) & self.uncolored).len();
            if sat >= self.palette {
                return Ok(false);
            }
            if pick.is_none_or(|(_, s, d, _)| (sat, deg) > (s, d)) {
                pick = Some((v, sat, deg, forb));
            }
        }
        let Some((v, _, _, forb)) = pick else {
            return Ok(true);
        };
        let limit = (used + 1).min(self.palette);
        for c in 0..limit {
            if forb >> c & 1 == 1 {
                continue;
            }
            self.assign(v, c);
            if self.search(used.max(c + 1), counter)? {
                return Ok(true);
            }
            self.unassign(v, c);
        }
        Ok(false)
    }
}

/// Greedy DSATUR colouring (no backtracking); an upper bound on χ.
pub fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.n();
    let mut color: Vec<Option<usize>> = vec![None; n];
    let mut uncolored = g.vertices();
    let mut classes: Vec<VertexSet> = Vec::new();
    while !uncolored.is_empty() {
        let mut pick = None;
        for v in uncolored {
            let nb = g.neighbors(v);
            let sat = classes.iter().filter(|c| !(**c & nb).is_empty()).count();
            let deg = (nb & uncolored).len();
            if pick.is_none_or(|(_, s, d)| (sat, deg) > (s, d)) {
                pick = Some((v, sat, deg));
            }
        }
        let v = pick.unwrap().0;
        let nb = g.neighbors(v);
        let c = match classes.iter().position(|c| (*c & nb).is_empty()) {
            Some(c) => c,
            None => {
                classes.push(VertexSet::EMPTY);
                classes.len() - 1
            }
        };
        classes[c].insert(v);
        color[v] = Some(c);
        uncolored.remove(v);
    }
    let colors: Vec<usize> = color.into_iter().map(Option::unwrap).collect();
    Coloring::from_colors(classes.len().max(1), &colors).expect("greedy colours in range")
}

pub fn chromatic_number(g: &Graph) -> Result<ChromaticResult, SolverError> {
    chromatic_number_with(g, Budget::default())
}

/// χ with a witness using exactly χ colours. Tries `k = ω, ω+1, ..` below the
/// greedy upper bound; the budget is shared by all calls.
pub fn chromatic_number_with(g: &Graph, budget: Budget) -> Result<ChromaticResult, SolverError> {
    if g.n() == 0 {
        return Ok(ChromaticResult { chi: 0, witness: Coloring::uncolored(0, 0), nodes: 0 });
    }
    let clique = max_clique_with(g, budget)?;
    let mut counter = Counter::new(budget);
    counter.used = clique.nodes;
    let greedy = dsatur_greedy(g);
    let upper = greedy.colors_used();
    for k in clique.omega..upper {
        if let Some(witness) = color_search(g, k, clique.witness, &mut counter)? {
            return Ok(ChromaticResult { chi: k, witness, nodes: counter.used });
        }
    }
    Ok(ChromaticResult { chi: upper, witness: greedy.with_palette(upper).unwrap(), nodes: counter.used })
}

/// How a connected graph relates to Brooks' bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BrooksVerdict {
    /// χ ≤ Δ.
    WithinDelta,
    /// χ = Δ + 1 because the graph is complete.
    CompleteException,
    /// χ = Δ + 1 because the graph is an odd cycle.
    OddCycleException,
    /// χ > Δ for a graph that is neither; never expected.
    Violation,
}

pub fn brooks_verdict(g: &Graph) -> Result<BrooksVerdict, SolverError> {
    brooks_verdict_with(g, Budget::default())
}

pub fn brooks_verdict_with(g: &Graph, budget: Budget) -> Result<BrooksVerdict, SolverError> {
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    let chi = chromatic_number_with(g, budget)?.chi;
    Ok(if chi <= g.max_degree() {
        BrooksVerdict::WithinDelta
    } else if g.is_complete() {
        BrooksVerdict::CompleteException
    } else if g.is_odd_cycle() {
        BrooksVerdict::OddCycleException
    } else {
        BrooksVerdict::Violation
    })
}

/// True iff χ ≤ Δ or the graph is complete or an odd cycle. Connected input only.
pub fn brooks_check(g: &Graph) -> Result<bool, SolverError> {
    Ok(brooks_verdict(g)? != BrooksVerdict::Violation)
}

/// `max{ω, Δ - 1}`, with `Δ - 1` floored at zero.
pub fn bk_bound(omega: usize, delta: usize) -> usize {
    omega.max(delta.saturating_sub(1))
}

/// χ ≤ max{ω, Δ − 1}. Holds or fails regardless of Δ; the Δ ≥ 9 hypothesis
/// is the caller's concern.
pub fn bk_holds(g: &Graph) -> Result<bool, SolverError> {
    bk_holds_with(g, Budget::default())
}

pub fn bk_holds_with(g: &Graph, budget: Budget) -> Result<bool, SolverError> {
    let omega = max_clique_with(g, budget)?.omega;
    let chi = chromatic_number_with(g, budget)?.chi;
    Ok(chi <= bk_bound(omega, g.max_degree()))
}
