//! Simple undirected graphs on at most 64 vertices.
//!
//! Every neighbourhood is a single `u64` bitset, so the solvers elsewhere in
//! the crate reduce to word-level set arithmetic. Graphs are immutable values:
//! operations such as [`Graph::induced`] or [`Graph::complement`] build new
//! graphs rather than mutating in place.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Hard cap on the vertex count; one neighbourhood fits in a machine word.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),
}

/// A set of vertex indices packed into one 64-bit word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Lowest member, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Highest member, if any.
    #[inline]
    pub const fn last(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in ascending order.
    #[inline]
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Serializes as the ascending list of members.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

macro_rules! set_op {
    ($tr:ident, $f:ident, $op:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $f(self, rhs: VertexSet) -> VertexSet {
                VertexSet(self.0 $op rhs.0)
            }
        }
    };
}
set_op!(BitAnd, bitand, &);
set_op!(BitOr, bitor, |);
set_op!(BitXor, bitxor, ^);

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Per-vertex degrees together with the maximum degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
}

/// An immutable simple undirected graph on vertices `0..n`, `n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse to one edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph::from_valid(n, adj))
    }

    /// Builds a graph from neighbourhood bitsets, validating every invariant.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let all = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if nb.contains(v) {
                return Err(GraphError::Loop(v));
            }
            if let Some(w) = (nb - all).first() {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
            for w in nb {
                if !adj[w].contains(v) {
                    return Err(GraphError::Asymmetric(v, w));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    fn from_valid(n: usize, adj: Vec<VertexSet>) -> Self {
        let g = Graph { n, adj };
        debug_assert!(g.check_invariants());
        g
    }

    fn check_invariants(&self) -> bool {
        let all = VertexSet::full(self.n);
        self.adj.len() == self.n
            && (0..self.n).all(|v| {
                let nb = self.adj[v];
                !nb.contains(v) && nb.is_subset(all) && nb.iter().all(|w| self.adj[w].contains(v))
            })
    }

    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        Graph::from_valid(n, vec![VertexSet::EMPTY; n])
    }

    pub fn complete(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        let all = VertexSet::full(n);
        Graph::from_valid(n, (0..n).map(|v| all.without(v)).collect())
    }

    /// The path `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).expect("path fits")
    }

    /// The cycle `0 - 1 - .. - (n-1) - 0`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::new(n, &edges).expect("cycle fits")
    }

    /// The star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::new(leaves + 1, &edges).expect("star fits")
    }

    /// Complete multipartite graph; parts occupy consecutive index ranges.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self, GraphError> {
        let n: usize = parts.iter().sum();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let all = VertexSet::full(n);
        let mut adj = Vec::with_capacity(n);
        let mut start = 0;
        for &size in parts {
            let part = VertexSet::full(start + size) - VertexSet::full(start);
            adj.extend(std::iter::repeat_n(all - part, size));
            start += size;
        }
        Ok(Graph::from_valid(n, adj))
    }

    /// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, &edges).expect("petersen fits")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighbourhood `N(v) ∪ {v}`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (self.adj[u] - VertexSet::full(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile { degrees, max_degree }
    }

    /// Δ; zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Maximum-degree vertex, lowest index on ties.
    pub fn max_degree_vertex(&self) -> Option<usize> {
        let delta = self.max_degree();
        (0..self.n).find(|&v| self.degree(v) == delta)
    }

    /// Subgraph induced by `s`, relabelled `0..|s|` in ascending original order.
    pub fn induced(&self, s: VertexSet) -> Result<Graph, GraphError> {
        if let Some(v) = (s - self.vertices()).first() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let members = s.to_vec();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in members.iter().enumerate() {
            pos[v] = i;
        }
        let adj = members
            .iter()
            .map(|&v| (self.adj[v] & s).iter().map(|w| pos[w]).collect())
            .collect();
        Ok(Graph::from_valid(members.len(), adj))
    }

    /// `G - v`, with the remaining vertices relabelled in ascending order.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        self.induced(self.vertices().without(v))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n).map(|v| all - self.adj[v] - VertexSet::singleton(v)).collect();
        Graph::from_valid(self.n, adj)
    }

    /// Lexicographic product `self[h]`: vertex `(g, x)` has index `g * |h| + x`.
    pub fn lexicographic_product(&self, h: &Graph) -> Result<Graph, GraphError> {
        let m = h.n;
        let n = self.n * m;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let fiber = |g: usize| VertexSet::full((g + 1) * m) - VertexSet::full(g * m);
        let mut adj = Vec::with_capacity(n);
        for g in 0..self.n {
            let outer = self.adj[g].iter().fold(VertexSet::EMPTY, |acc, g2| acc | fiber(g2));
            for x in 0..m {
                let inner = VertexSet::from_bits(h.adj[x].bits() << (g * m));
                adj.push(outer | inner);
            }
        }
        Ok(Graph::from_valid(n, adj))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|s| VertexSet::from_bits(s.bits() << self.n)));
        Ok(Graph::from_valid(n, adj))
    }

    /// Line graph; vertex `i` is the `i`-th edge of [`Graph::edges`].
    pub fn line_graph(&self) -> Result<Graph, GraphError> {
        let edges: Vec<_> = self.edges().collect();
        if edges.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(edges.len()));
        }
        let mut adj = vec![VertexSet::EMPTY; edges.len()];
        for (i, &(a, b)) in edges.iter().enumerate() {
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Ok(Graph::from_valid(edges.len(), adj))
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].iter().map(|w| perm[w]).collect();
        }
        Graph::from_valid(self.n, adj)
    }

    /// True for `n <= 1`.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.component_of(0) == self.vertices()
    }

    pub fn component_of(&self, v: usize) -> VertexSet {
        self.component_within(v, self.vertices())
    }

    /// Connected component of `v` in the subgraph induced by `within`.
    pub fn component_within(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while let Some(w) = frontier.first() {
            frontier.remove(w);
            let fresh = (self.adj[w] & within) - seen;
            seen = seen | fresh;
            frontier = frontier | fresh;
        }
        seen
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    /// Connected, 2-regular, odd order.
    pub fn is_odd_cycle(&self) -> bool {
        self.n >= 3 && self.n % 2 == 1 && (0..self.n).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    /// True when every pair in `s` is adjacent.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset(self.adj[v]))
    }
}
