//! Canonical certificates, isomorph-free generation and seeded random graphs.
//!
//! Canonical labelling is individualisation-refinement: an equitable ordered
//! partition is refined by neighbour counts, then the first non-singleton cell
//! is split on every member in turn until the partition is discrete. Each leaf
//! yields an upper-triangle bitstring; the certificate is the least one found.
//! A child is skipped when it is a twin of an already-tried member of the
//! cell, or lies in the same orbit as one under automorphisms (found from
//! leaves with equal certificates) that fix every individualised vertex; in
//! both cases its subtree yields the same certificates.
//!
//! Generation is extend-and-canonize: every representative on `n - 1`
//! vertices is augmented by one vertex over all `2^(n-1)` attachment masks,
//! and the first graph seen per certificate is kept.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet, MAX_VERTICES};

/// Default cap on the canonical search tree.
pub const DEFAULT_CANON_BUDGET: u64 = 10_000_000;

/// Default largest order accepted by [`enumerate_graphs`].
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnumerationError {
    #[error("canonical search exceeded its budget of {0} nodes")]
    BudgetExceeded(u64),
    #[error("enumeration of order {n} exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("edge probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Canonical form of a graph: the order followed by the upper triangle of the
/// canonically relabelled adjacency matrix, row-major, packed MSB-first.
///
/// Two graphs have equal certificates iff they are isomorphic. Certificates
/// order first by vertex count and then lexicographically by bitstring.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate {
    n: usize,
    words: Vec<u64>,
}

impl Certificate {
    fn from_order(g: &Graph, order: &[usize]) -> Certificate {
        let n = order.len();
        let pairs = n * n.saturating_sub(1) / 2;
        let mut words = vec![0u64; pairs.div_ceil(64)];
        let mut k = 0;
        for i in 0..n {
            let row = g.neighbors(order[i]);
            for &w in &order[i + 1..] {
                if row.contains(w) {
                    words[k / 64] |= 1u64 << (63 - k % 64);
                }
                k += 1;
            }
        }
        Certificate { n, words }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// The canonical representative this certificate describes.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        let mut k = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.words[k / 64] >> (63 - k % 64) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::new(self.n, &edges).expect("certificate describes a valid graph")
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for w in &self.words {
            write!(f, "{w:016x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Certificate({self})")
    }
}

/// Canonical certificate with the default node budget.
pub fn canonical_form(g: &Graph) -> Result<Certificate, EnumerationError> {
    canonical_labeling(g, DEFAULT_CANON_BUDGET).map(|(c, _)| c)
}

/// Certificate plus the labelling achieving it: `labels[v]` is the canonical
/// position of vertex `v`, so `g.permuted(&labels) == cert.to_graph()`.
pub fn canonical_labeling(g: &Graph, budget: u64) -> Result<(Certificate, Vec<usize>), EnumerationError> {
    let mut search = CanonSearch { g, budget, nodes: 0, best: None, autos: Vec::new() };
    let cells = if g.n() == 0 { Vec::new() } else { vec![g.vertices()] };
    search.descend(cells, &mut Vec::new())?;
    let (cert, order) = search.best.expect("search visits at least one leaf");
    let mut labels = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        labels[v] = pos;
    }
    Ok((cert, labels))
}

struct CanonSearch<'a> {
    g: &'a Graph,
    budget: u64,
    nodes: u64,
    best: Option<(Certificate, Vec<usize>)>,
    /// Automorphisms discovered from pairs of leaves with equal certificates.
    autos: Vec<Vec<usize>>,
}

impl CanonSearch<'_> {
    fn descend(&mut self, mut cells: Vec<VertexSet>, prefix: &mut Vec<usize>) -> Result<(), EnumerationError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(EnumerationError::BudgetExceeded(self.budget));
        }
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(cells.iter().map(|c| c.first().unwrap()).collect());
            return Ok(());
        };
        let cell = cells[target];
        let mut tried = VertexSet::EMPTY;
        for v in cell {
            if tried.iter().any(|w| is_twin(self.g, v, w)) || self.same_orbit(prefix, v, tried) {
                continue;
            }
            tried.insert(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(VertexSet::singleton(v));
            next.push(cell.without(v));
            next.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            let r = self.descend(next, prefix);
            prefix.pop();
            r?;
        }
        Ok(())
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let cert = Certificate::from_order(self.g, &order);
        match &self.best {
            Some((b, best_order)) if cert == *b => {
                // Both orders relabel the graph identically.
                let mut gamma = vec![0; order.len()];
                for (&a, &b) in order.iter().zip(best_order) {
                    gamma[a] = b;
                }
                if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                    self.autos.push(gamma);
                }
            }
            Some((b, _)) if cert > *b => {}
            _ => self.best = Some((cert, order)),
        }
    }

    /// Whether `v` shares an orbit with a tried vertex under the stored
    /// automorphisms that fix every individualised vertex.
    fn same_orbit(&self, prefix: &[usize], v: usize, tried: VertexSet) -> bool {
        if tried.is_empty() {
            return false;
        }
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.autos {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, v);
        tried.iter().any(|w| find(&mut parent, w) == root)
    }
}

fn is_twin(g: &Graph, v: usize, w: usize) -> bool {
    g.neighbors(v).without(w) == g.neighbors(w).without(v)
}

/// Splits cells by neighbour counts into every cell until stable. The result
/// depends only on the graph structure and the incoming cell order.
fn refine(g: &Graph, cells: &mut Vec<VertexSet>) {
    loop {
        let mut next = Vec::with_capacity(g.n());
        for &cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell);
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|v| {
                    let nb = g.neighbors(v);
                    (cells.iter().map(|&c| (nb & c).len()).collect(), v)
                })
                .collect();
            keyed.sort();
            let mut current = VertexSet::EMPTY;
            for (i, (sig, v)) in keyed.iter().enumerate() {
                if i > 0 && *sig != keyed[i - 1].0 {
                    next.push(current);
                    current = VertexSet::EMPTY;
                }
                current.insert(*v);
            }
            next.push(current);
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}

/// Isomorph-free generator with a configurable order cap and canonical budget.
#[derive(Debug, Clone)]
pub struct Enumerator {
    pub cap: usize,
    pub budget: u64,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator { cap: DEFAULT_ENUMERATION_CAP, budget: DEFAULT_CANON_BUDGET }
    }
}

impl Enumerator {
    /// One list per order `0..=n_max`, each holding one canonical
    /// representative per isomorphism class in ascending certificate order.
    pub fn levels(&self, n_max: usize) -> Result<Vec<Vec<Graph>>, EnumerationError> {
        if n_max > self.cap {
            return Err(EnumerationError::CapExceeded { n: n_max, cap: self.cap });
        }
        let mut levels = vec![vec![Graph::empty(0)]];
        for n in 1..=n_max {
            let prev = levels.last().unwrap();
            let next = self.extend(prev, n)?;
            levels.push(next);
        }
        Ok(levels)
    }

    pub fn graphs(&self, n: usize) -> Result<Vec<Graph>, EnumerationError> {
        Ok(self.levels(n)?.pop().unwrap())
    }

    fn extend(&self, prev: &[Graph], n: usize) -> Result<Vec<Graph>, EnumerationError> {
        let mut seen: BTreeMap<Certificate, ()> = BTreeMap::new();
        let new_vertex = n - 1;
        for g in prev {
            let base: Vec<VertexSet> = (0..new_vertex).map(|v| g.neighbors(v)).collect();
            for mask in 0..1u64 << new_vertex {
                let attach = VertexSet::from_bits(mask);
                let mut adj = base.clone();
                for v in attach {
                    adj[v].insert(new_vertex);
                }
                adj.push(attach);
                let h = Graph::from_adjacency(adj)?;
                let (cert, _) = canonical_labeling(&h, self.budget)?;
                seen.entry(cert).or_insert(());
            }
        }
        Ok(seen.into_keys().map(|c| c.to_graph()).collect())
    }
}

/// All graphs on `n` vertices up to isomorphism, `n <= 8`.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    Enumerator::default().graphs(n)
}

/// Erdős–Rényi `G(n, p)` drawn from ChaCha8 seeded via `seed_from_u64(seed)`.
///
/// Pairs `(i, j)`, `i < j`, are visited in lexicographic order; each consumes
/// exactly one `f64` draw in `[0, 1)` and becomes an edge iff the draw is `< p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, EnumerationError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(EnumerationError::InvalidProbability(p));
    }
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::new(n, &edges)?)
}
