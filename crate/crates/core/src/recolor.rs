//! Recolouring moves around a deleted vertex.
//!
//! The setting throughout is a proper colouring of `G - u` (stored over all
//! of `G` with `u` uncoloured) that we want to extend to `u` without growing
//! the palette. The vocabulary is:
//!
//! * the [`NeighborhoodSpectrum`] of `u`: which colours appear exactly once
//!   (unique), at least twice (repeat) or not at all (missing) on `N(u)`;
//! * bicolour [`KempeComponent`]s and the swap that exchanges their colours;
//! * [`extend_coloring`], a breadth-first search over short move sequences
//!   that ends by giving `u` a colour.

use std::collections::{BTreeMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Coloring, ColoringError};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{k_colorable_with, Budget, SolverError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecolorError {
    #[error("neighbour {0} of the centre is uncoloured")]
    UncoloredNeighbor(usize),
    #[error("vertex {vertex} has colour {actual:?}, expected one of {i} and {j}")]
    ColorMismatch { vertex: usize, actual: Option<usize>, i: usize, j: usize },
    #[error("a Kempe component needs two distinct colours, got {0} twice")]
    SameColors(usize),
    #[error("component was computed for a different state of the colouring")]
    StaleComponent,
    #[error("input colouring is not proper")]
    Improper,
    #[error("vertex {0} is uncoloured in the input colouring")]
    Partial(usize),
    #[error("colouring has {got} vertices, graph has {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("move does not apply: {0}")]
    BadMove(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// Colour census of `N(center)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighborhoodSpectrum {
    pub center: usize,
    /// Occurrences of each palette colour on the neighbourhood.
    pub counts: Vec<usize>,
    /// Unique colour to the one neighbour carrying it.
    pub unique_vertices: BTreeMap<usize, usize>,
    pub repeat_colors: Vec<usize>,
    pub missing_colors: Vec<usize>,
}

impl NeighborhoodSpectrum {
    pub fn unique_vertex(&self, color: usize) -> Option<usize> {
        self.unique_vertices.get(&color).copied()
    }
}

/// Spectrum of `u` under `coloring`; every neighbour must be coloured.
pub fn spectrum(g: &Graph, coloring: &Coloring, u: usize) -> Result<NeighborhoodSpectrum, RecolorError> {
    check_sizes(g, coloring)?;
    check_vertex(g, u)?;
    let k = coloring.k();
    let mut counts = vec![0; k];
    let mut holder = vec![usize::MAX; k];
    for v in g.neighbors(u) {
        let c = coloring.get(v).ok_or(RecolorError::UncoloredNeighbor(v))?;
        counts[c] += 1;
        holder[c] = v;
    }
    let mut unique_vertices = BTreeMap::new();
    let mut repeat_colors = Vec::new();
    let mut missing_colors = Vec::new();
    for c in 0..k {
        match counts[c] {
            0 => missing_colors.push(c),
            1 => {
                unique_vertices.insert(c, holder[c]);
            }
            _ => repeat_colors.push(c),
        }
    }
    Ok(NeighborhoodSpectrum { center: u, counts, unique_vertices, repeat_colors, missing_colors })
}

/// A connected component of the subgraph induced by colour classes `i`, `j`,
/// tied to the colouring state it was computed from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KempeComponent {
    pub colors: (usize, usize),
    pub members: VertexSet,
    #[serde(skip)]
    version: u64,
}

impl KempeComponent {
    pub fn is_current(&self, coloring: &Coloring) -> bool {
        self.version == coloring.version()
    }
}

/// The `i`/`j` component containing `v`; `v` must be coloured `i` or `j`.
pub fn kempe_component(
    g: &Graph,
    coloring: &Coloring,
    v: usize,
    i: usize,
    j: usize,
) -> Result<KempeComponent, RecolorError> {
    check_sizes(g, coloring)?;
    check_vertex(g, v)?;
    if i == j {
        return Err(RecolorError::SameColors(i));
    }
    let actual = coloring.get(v);
    if actual != Some(i) && actual != Some(j) {
        return Err(RecolorError::ColorMismatch { vertex: v, actual, i, j });
    }
    let within = coloring.class(i) | coloring.class(j);
    Ok(KempeComponent { colors: (i, j), members: g.component_within(v, within), version: coloring.version() })
}

/// Exchanges the component's two colours on its members.
pub fn kempe_swap(g: &Graph, coloring: &Coloring, comp: &KempeComponent) -> Result<Coloring, RecolorError> {
    check_sizes(g, coloring)?;
    if !comp.is_current(coloring) {
        return Err(RecolorError::StaleComponent);
    }
    Ok(swap_unchecked(coloring, comp.colors, comp.members))
}

fn swap_unchecked(coloring: &Coloring, (i, j): (usize, usize), members: VertexSet) -> Coloring {
    let mut colors = coloring.to_vec();
    for v in members {
        colors[v] = match colors[v] {
            Some(c) if c == i => Some(j),
            Some(c) if c == j => Some(i),
            other => other,
        };
    }
    Coloring::from_partial(coloring.k(), &colors).expect("swap stays in palette")
}

/// One recolouring step. Colours serialize 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    /// Colour the centre.
    Assign {
        vertex: usize,
        #[serde(with = "one_based")]
        color: usize,
    },
    /// Give a unique neighbour a colour missing around it.
    Recolor {
        vertex: usize,
        #[serde(with = "one_based")]
        from: usize,
        #[serde(with = "one_based")]
        to: usize,
    },
    /// Non-adjacent unique neighbours `first`, `second` both take colour
    /// `to`, whose unique holder `pivot` takes `pivot_to` (the old colour of
    /// `first`).
    Pair {
        first: usize,
        second: usize,
        #[serde(with = "one_based")]
        to: usize,
        pivot: usize,
        #[serde(with = "one_based")]
        pivot_to: usize,
    },
    /// Swap the two colours on a bicolour component.
    Kempe {
        #[serde(with = "one_based_pair")]
        colors: (usize, usize),
        members: Vec<usize>,
    },
}

mod one_based {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(c: &usize, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(*c as u64 + 1)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<usize, D::Error> {
        let c = usize::deserialize(d)?;
        c.checked_sub(1).ok_or_else(|| serde::de::Error::custom("colours are 1-based"))
    }
}

mod one_based_pair {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(c: &(usize, usize), s: S) -> Result<S::Ok, S::Error> {
        [c.0 + 1, c.1 + 1].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(usize, usize), D::Error> {
        let [a, b] = <[usize; 2]>::deserialize(d)?;
        match (a.checked_sub(1), b.checked_sub(1)) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(serde::de::Error::custom("colours are 1-based")),
        }
    }
}

/// Applies `moves` in order, checking each one against the current state.
pub fn replay(g: &Graph, start: &Coloring, moves: &[Move]) -> Result<Coloring, RecolorError> {
    check_sizes(g, start)?;
    let mut colors = start.to_vec();
    let expect = |colors: &[Option<usize>], v: usize, c: usize| {
        if colors.get(v).copied().flatten() == Some(c) {
            Ok(())
        } else {
            Err(RecolorError::BadMove(format!("vertex {v} is not coloured {c}")))
        }
    };
    for mv in moves {
        match *mv {
            Move::Assign { vertex, color } => {
                check_vertex(g, vertex)?;
                colors[vertex] = Some(color);
            }
            Move::Recolor { vertex, from, to } => {
                expect(&colors, vertex, from)?;
                colors[vertex] = Some(to);
            }
            Move::Pair { first, second, to, pivot, pivot_to } => {
                expect(&colors, pivot, to)?;
                expect(&colors, first, pivot_to)?;
                check_vertex(g, second)?;
                colors[first] = Some(to);
                colors[second] = Some(to);
                colors[pivot] = Some(pivot_to);
            }
            Move::Kempe { colors: (i, j), ref members } => {
                for &v in members {
                    check_vertex(g, v)?;
                    colors[v] = match colors[v] {
                        Some(c) if c == i => Some(j),
                        Some(c) if c == j => Some(i),
                        other => {
                            return Err(RecolorError::BadMove(format!(
                                "vertex {v} coloured {other:?} in an {i}/{j} swap"
                            )))
                        }
                    };
                }
            }
        }
    }
    let out = Coloring::from_partial(start.k(), &colors)?;
    if !out.is_proper(g) {
        return Err(RecolorError::BadMove("replay produced an improper colouring".into()));
    }
    Ok(out)
}

/// Limits for [`extend_coloring`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionBudget {
    /// Colouring states admitted to the search.
    pub max_states: usize,
    /// Longest chain of Kempe swaps explored before the finishing moves.
    pub max_swaps: usize,
    /// Budget for the exact solver that certifies impossibility.
    pub solver: Budget,
    /// Run the exact solver when the search fails; without it a failed
    /// search is always reported as exhausted.
    pub certify: bool,
}

impl Default for ExtensionBudget {
    fn default() -> Self {
        ExtensionBudget { max_states: 100_000, max_swaps: 3, solver: Budget::default(), certify: true }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub states: usize,
    pub deepest_swaps: usize,
    pub hit_state_limit: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ExtensionOutcome {
    Extended { coloring: Coloring },
    Exhausted,
    Impossible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionResult {
    #[serde(flatten)]
    pub outcome: ExtensionOutcome,
    pub move_trace: Vec<Move>,
    pub stats: SearchStats,
}

impl ExtensionResult {
    pub fn coloring(&self) -> Option<&Coloring> {
        match &self.outcome {
            ExtensionOutcome::Extended { coloring } => Some(coloring),
            _ => None,
        }
    }
}

/// Tries to extend a proper colouring of `G - u` to `G` without new colours.
///
/// States are colourings of `G - u` reached by Kempe swaps on components that
/// meet `N(u)`, explored breadth-first with a transposition set. Each state is
/// tested, in order, for: a colour missing on `N(u)`; a unique neighbour that
/// can move to a colour missing around it; and the paired recolouring of two
/// non-adjacent unique neighbours through a third. The returned trace replays
/// from `coloring` to the extended colouring.
pub fn extend_coloring(
    g: &Graph,
    u: usize,
    coloring: &Coloring,
    budget: ExtensionBudget,
) -> Result<ExtensionResult, RecolorError> {
    check_sizes(g, coloring)?;
    check_vertex(g, u)?;
    let mut start = coloring.clone();
    if start.get(u).is_some() {
        start.set(u, None)?;
    }
    if let Some(v) = (g.vertices().without(u) - start.colored()).first() {
        return Err(RecolorError::Partial(v));
    }
    if !start.is_proper(g) {
        return Err(RecolorError::Improper);
    }

    struct Node {
        coloring: Coloring,
        parent: usize,
        step: Option<Move>,
        swaps: usize,
    }

    let mut stats = SearchStats::default();
    let mut arena = vec![Node { coloring: start.clone(), parent: usize::MAX, step: None, swaps: 0 }];
    let mut seen: HashSet<Vec<Option<usize>>> = HashSet::new();
    seen.insert(start.to_vec());
    let mut queue = VecDeque::from([0usize]);
    stats.states = 1;

    let path = |arena: &[Node], mut idx: usize| {
        let mut moves = Vec::new();
        while idx != usize::MAX {
            if let Some(m) = &arena[idx].step {
                moves.push(m.clone());
            }
            idx = arena[idx].parent;
        }
        moves.reverse();
        moves
    };

    if let Some((finish, done)) = assign_missing(g, u, &start)? {
        return Ok(ExtensionResult {
            outcome: ExtensionOutcome::Extended { coloring: done },
            move_trace: vec![finish],
            stats,
        });
    }

    while let Some(idx) = queue.pop_front() {
        let state = arena[idx].coloring.clone();
        if let Some((finishing, done)) = finish_by_recolor(g, u, &state)? {
            let mut moves = path(&arena, idx);
            moves.extend(finishing);
            return Ok(ExtensionResult { outcome: ExtensionOutcome::Extended { coloring: done }, move_trace: moves, stats });
        }
        let swaps = arena[idx].swaps;
        if swaps >= budget.max_swaps {
            continue;
        }
        for (colors, members) in swaps_touching(g, u, &state) {
            if stats.states >= budget.max_states {
                stats.hit_state_limit = true;
                break;
            }
            let child = swap_unchecked(&state, colors, members);
            if !seen.insert(child.to_vec()) {
                continue;
            }
            stats.states += 1;
            stats.deepest_swaps = stats.deepest_swaps.max(swaps + 1);
            let step = Move::Kempe { colors, members: members.to_vec() };
            if let Some((finish, done)) = assign_missing(g, u, &child)? {
                let mut moves = path(&arena, idx);
                moves.push(step);
                moves.push(finish);
                return Ok(ExtensionResult { outcome: ExtensionOutcome::Extended { coloring: done }, move_trace: moves, stats });
            }
            arena.push(Node { coloring: child, parent: idx, step: Some(step), swaps: swaps + 1 });
            queue.push_back(arena.len() - 1);
        }
        if stats.hit_state_limit {
            break;
        }
    }

    let outcome = if budget.certify && k_colorable_with(g, start.k(), budget.solver)?.is_none() {
        ExtensionOutcome::Impossible
    } else {
        ExtensionOutcome::Exhausted
    };
    Ok(ExtensionResult { outcome, move_trace: Vec::new(), stats })
}

/// Colours `u` with its lowest missing colour, if any. A vertex with no
/// neighbours takes colour 0.
fn assign_missing(g: &Graph, u: usize, c: &Coloring) -> Result<Option<(Move, Coloring)>, RecolorError> {
    let spec = spectrum(g, c, u)?;
    Ok(spec.missing_colors.first().map(|&color| {
        let mut done = c.clone();
        done.set(u, Some(color)).expect("missing colour is in palette");
        (Move::Assign { vertex: u, color }, done)
    }))
}

/// Finishing moves that need no swap: move a unique neighbour to a colour
/// missing around it, or the paired recolouring through a third unique
/// neighbour.
fn finish_by_recolor(g: &Graph, u: usize, c: &Coloring) -> Result<Option<(Vec<Move>, Coloring)>, RecolorError> {
    let spec = spectrum(g, c, u)?;
    let k = c.k();
    let classes: Vec<VertexSet> = (0..k).map(|col| c.class(col)).collect();

    for (&i, &a) in &spec.unique_vertices {
        let nb = g.neighbors(a);
        if let Some(to) = (0..k).find(|&col| col != i && (classes[col] & nb).is_empty()) {
            let mut done = c.clone();
            done.set(a, Some(to))?;
            done.set(u, Some(i))?;
            debug_assert!(done.is_proper(g));
            return Ok(Some((
                vec![Move::Recolor { vertex: a, from: i, to }, Move::Assign { vertex: u, color: i }],
                done,
            )));
        }
    }

    // A_i, A_j -> m, A_m -> i, u -> j. A_i and A_j must be non-adjacent and
    // see no m-vertex other than A_m; A_m must see no i-vertex other than A_i.
    for (&i, &ai) in &spec.unique_vertices {
        for (&j, &aj) in &spec.unique_vertices {
            if i == j || g.has_edge(ai, aj) {
                continue;
            }
            for (&m, &am) in &spec.unique_vertices {
                if m == i || m == j {
                    continue;
                }
                let only_am = VertexSet::singleton(am);
                let ok = (classes[m] & g.neighbors(ai)).is_subset(only_am)
                    && (classes[m] & g.neighbors(aj)).is_subset(only_am)
                    && (classes[i] & g.neighbors(am)).is_subset(VertexSet::singleton(ai));
                if !ok {
                    continue;
                }
                let mut done = c.clone();
                done.set(ai, Some(m))?;
                done.set(aj, Some(m))?;
                done.set(am, Some(i))?;
                done.set(u, Some(j))?;
                debug_assert!(done.is_proper(g));
                return Ok(Some((
                    vec![
                        Move::Pair { first: ai, second: aj, to: m, pivot: am, pivot_to: i },
                        Move::Assign { vertex: u, color: j },
                    ],
                    done,
                )));
            }
        }
    }
    Ok(None)
}

/// Distinct bicolour components meeting `N(u)`, in a fixed order.
fn swaps_touching(g: &Graph, u: usize, c: &Coloring) -> Vec<((usize, usize), VertexSet)> {
    let k = c.k();
    let classes: Vec<VertexSet> = (0..k).map(|col| c.class(col)).collect();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for w in g.neighbors(u) {
        let cw = c.get(w).expect("neighbours are coloured");
        for other in 0..k {
            if other == cw {
                continue;
            }
            let members = g.component_within(w, classes[cw] | classes[other]);
            let key = (cw.min(other), cw.max(other), members);
            if seen.insert(key) {
                out.push(((cw.min(other), cw.max(other)), members));
            }
        }
    }
    out
}

/// How [`delete_and_recolor`] obtained its colouring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Extension,
    Fallback,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Recolored {
    pub coloring: Coloring,
    pub route: Route,
    pub move_trace: Vec<Move>,
}

/// Colours `G - u` with `k` colours exactly, then extends to `u`; falls back
/// to an exact `k`-colouring of `G` when the extension search gives up.
pub fn delete_and_recolor(
    g: &Graph,
    u: usize,
    k: usize,
    budget: ExtensionBudget,
) -> Result<Option<Recolored>, RecolorError> {
    check_vertex(g, u)?;
    let rest = g.remove_vertex(u).expect("u in range");
    let Some(partial) = k_colorable_with(&rest, k, budget.solver)? else {
        return Ok(None);
    };
    let mut lifted = Coloring::uncolored(g.n(), k);
    for v in 0..g.n() {
        if v != u {
            let idx = if v < u { v } else { v - 1 };
            lifted.set(v, partial.get(idx))?;
        }
    }
    let result = extend_coloring(g, u, &lifted, ExtensionBudget { certify: false, ..budget })?;
    match result.outcome {
        ExtensionOutcome::Extended { coloring } => {
            Ok(Some(Recolored { coloring, route: Route::Extension, move_trace: result.move_trace }))
        }
        ExtensionOutcome::Impossible => Ok(None),
        ExtensionOutcome::Exhausted => Ok(k_colorable_with(g, k, budget.solver)?
            .map(|coloring| Recolored { coloring, route: Route::Fallback, move_trace: Vec::new() })),
    }
}

fn check_sizes(g: &Graph, c: &Coloring) -> Result<(), RecolorError> {
    if g.n() != c.n() {
        return Err(RecolorError::SizeMismatch { expected: g.n(), got: c.n() });
    }
    Ok(())
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), RecolorError> {
    if v >= g.n() {
        return Err(RecolorError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(())
}
