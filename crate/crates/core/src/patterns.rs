//! Forbidden induced subgraphs and the hereditary classes they define.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// The fixed patterns on at most five vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pattern {
    #[serde(rename = "claw")]
    Claw,
    #[serde(rename = "c4")]
    C4,
    #[serde(rename = "p3")]
    P3,
    #[serde(rename = "p4")]
    P4,
    #[serde(rename = "p5")]
    P5,
    #[serde(rename = "chair")]
    Chair,
    #[serde(rename = "p4+k1")]
    P4UnionK1,
    #[serde(rename = "p3+k1")]
    P3UnionK1,
    #[serde(rename = "k2+2k1")]
    K2Union2K1,
    #[serde(rename = "3k1")]
    ThreeK1,
}

impl Pattern {
    pub const ALL: [Pattern; 10] = [
        Pattern::Claw,
        Pattern::C4,
        Pattern::P3,
        Pattern::P4,
        Pattern::P5,
        Pattern::Chair,
        Pattern::P4UnionK1,
        Pattern::P3UnionK1,
        Pattern::K2Union2K1,
        Pattern::ThreeK1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pattern::Claw => "claw",
            Pattern::C4 => "c4",
            Pattern::P3 => "p3",
            Pattern::P4 => "p4",
            Pattern::P5 => "p5",
            Pattern::Chair => "chair",
            Pattern::P4UnionK1 => "p4+k1",
            Pattern::P3UnionK1 => "p3+k1",
            Pattern::K2Union2K1 => "k2+2k1",
            Pattern::ThreeK1 => "3k1",
        }
    }

    /// The pattern graph. Chair is `c=0, l1=1, l2=2, m=3, t=4` with edges
    /// `c-l1, c-l2, c-m, m-t`; disjoint unions put the isolated vertices last.
    pub fn graph(self) -> Graph {
        let (n, edges): (usize, &[(usize, usize)]) = match self {
            Pattern::Claw => (4, &[(0, 1), (0, 2), (0, 3)]),
            Pattern::C4 => (4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
            Pattern::P3 => (3, &[(0, 1), (1, 2)]),
            Pattern::P4 => (4, &[(0, 1), (1, 2), (2, 3)]),
            Pattern::P5 => (5, &[(0, 1), (1, 2), (2, 3), (3, 4)]),
            Pattern::Chair => (5, &[(0, 1), (0, 2), (0, 3), (3, 4)]),
            Pattern::P4UnionK1 => (5, &[(0, 1), (1, 2), (2, 3)]),
            Pattern::P3UnionK1 => (4, &[(0, 1), (1, 2)]),
            Pattern::K2Union2K1 => (4, &[(0, 1)]),
            Pattern::ThreeK1 => (3, &[]),
        };
        Graph::new(n, edges).expect("pattern graphs are valid")
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pattern {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Pattern::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown pattern {s:?}"))
    }
}

/// Injective map from pattern vertices to graph vertices, `embedding[x] = m(x)`.
pub type Embedding = Vec<usize>;

/// First induced copy of `pattern` in `g`, searching graph vertices in
/// ascending order.
pub fn find_induced(g: &Graph, pattern: Pattern) -> Option<Embedding> {
    find_induced_graph(g, &pattern.graph())
}

/// Backtracking induced-embedding search for a small pattern graph.
///
/// Pattern vertices are placed highest-degree first; each step's candidates
/// are the intersection of the neighbourhoods (or non-neighbourhoods) of the
/// already-placed images, filtered by degree.
pub fn find_induced_graph(g: &Graph, pattern: &Graph) -> Option<Embedding> {
    let k = pattern.n();
    if k > g.n() {
        return None;
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&x| (std::cmp::Reverse(pattern.degree(x)), x));
    let mut image = vec![usize::MAX; k];
    if place(g, pattern, &order, 0, VertexSet::EMPTY, &mut image) {
        Some(image)
    } else {
        None
    }
}

fn place(
    g: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    used: VertexSet,
    image: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    let mut candidates = g.vertices() - used;
    for &y in &order[..depth] {
        let gy = image[y];
        candidates = if pattern.has_edge(x, y) {
            candidates & g.neighbors(gy)
        } else {
            candidates - g.closed_neighbors(gy)
        };
    }
    let need = pattern.degree(x);
    for v in candidates {
        if g.degree(v) < need {
            continue;
        }
        image[x] = v;
        if place(g, pattern, order, depth + 1, used.with(v), image) {
            return true;
        }
    }
    image[x] = usize::MAX;
    false
}

/// Checks an embedding edge by edge against the pattern.
pub fn is_induced_embedding(g: &Graph, pattern: &Graph, embedding: &[usize]) -> bool {
    if embedding.len() != pattern.n() || embedding.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let distinct: VertexSet = embedding.iter().copied().collect();
    if distinct.len() != embedding.len() {
        return false;
    }
    (0..pattern.n()).all(|x| {
        (x + 1..pattern.n()).all(|y| pattern.has_edge(x, y) == g.has_edge(embedding[x], embedding[y]))
    })
}

pub fn is_free(g: &Graph, pattern: Pattern) -> bool {
    find_induced(g, pattern).is_none()
}

/// Which vertices the dense-neighbourhood condition is required at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DenseQuantifier {
    /// Every vertex `u`.
    #[default]
    ForAll,
    /// At least one maximum-degree vertex `u`.
    SomeMaxDegree,
}

/// A neighbour `vertex` of `center` that misses more than `t` other
/// neighbours of `center`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenseViolation {
    pub center: usize,
    pub vertex: usize,
    pub non_adjacent: Vec<usize>,
}

/// Neighbours of `center` missing more than `t` others within `N(center)`,
/// first offender only.
fn dense_violation_at(g: &Graph, center: usize, t: usize) -> Option<DenseViolation> {
    let nb = g.neighbors(center);
    nb.iter().find_map(|v| {
        let missed = nb - g.closed_neighbors(v);
        (missed.len() > t).then(|| DenseViolation { center, vertex: v, non_adjacent: missed.to_vec() })
    })
}

/// Every neighbour of `u` is non-adjacent to at most `t` other neighbours of
/// `u`, for every vertex `u`.
pub fn dense_neighborhoods(g: &Graph, t: usize) -> bool {
    dense_check(g, t, DenseQuantifier::ForAll).is_ok()
}

/// Dense-neighbourhood test under either quantifier. On failure returns the
/// violation at the first offending centre (for [`DenseQuantifier::SomeMaxDegree`],
/// the violation at the lowest-index maximum-degree vertex).
pub fn dense_check(g: &Graph, t: usize, quantifier: DenseQuantifier) -> Result<(), DenseViolation> {
    match quantifier {
        DenseQuantifier::ForAll => match (0..g.n()).find_map(|u| dense_violation_at(g, u, t)) {
            Some(v) => Err(v),
            None => Ok(()),
        },
        DenseQuantifier::SomeMaxDegree => {
            let delta = g.max_degree();
            let mut first = None;
            for u in (0..g.n()).filter(|&u| g.degree(u) == delta) {
                match dense_violation_at(g, u, t) {
                    None => return Ok(()),
                    Some(v) => {
                        first.get_or_insert(v);
                    }
                }
            }
            first.map_or(Ok(()), Err)
        }
    }
}

/// The classes tracked per graph. Serialized names match the pattern names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GraphClass {
    #[serde(rename = "p4+k1")]
    P4UnionK1Free,
    #[serde(rename = "p5")]
    P5Free,
    #[serde(rename = "chair")]
    ChairFree,
    #[serde(rename = "claw")]
    ClawFree,
    #[serde(rename = "c4")]
    C4Free,
    #[serde(rename = "3k1")]
    ThreeK1Free,
    #[serde(rename = "p3+k1")]
    P3UnionK1Free,
    #[serde(rename = "k2+2k1")]
    K2Union2K1Free,
    #[serde(rename = "p4")]
    P4Free,
    #[serde(rename = "dense3")]
    Dense3,
}

impl GraphClass {
    pub const ALL: [GraphClass; 10] = [
        GraphClass::P4UnionK1Free,
        GraphClass::P5Free,
        GraphClass::ChairFree,
        GraphClass::ClawFree,
        GraphClass::C4Free,
        GraphClass::ThreeK1Free,
        GraphClass::P3UnionK1Free,
        GraphClass::K2Union2K1Free,
        GraphClass::P4Free,
        GraphClass::Dense3,
    ];

    /// The four classes for which the bound is claimed when `Δ >= 9`.
    pub const CLAIMED: [GraphClass; 4] =
        [GraphClass::P4UnionK1Free, GraphClass::P5Free, GraphClass::ChairFree, GraphClass::Dense3];

    pub fn forbidden(self) -> Option<Pattern> {
        Some(match self {
            GraphClass::P4UnionK1Free => Pattern::P4UnionK1,
            GraphClass::P5Free => Pattern::P5,
            GraphClass::ChairFree => Pattern::Chair,
            GraphClass::ClawFree => Pattern::Claw,
            GraphClass::C4Free => Pattern::C4,
            GraphClass::ThreeK1Free => Pattern::ThreeK1,
            GraphClass::P3UnionK1Free => Pattern::P3UnionK1,
            GraphClass::K2Union2K1Free => Pattern::K2Union2K1,
            GraphClass::P4Free => Pattern::P4,
            GraphClass::Dense3 => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self.forbidden() {
            Some(p) => p.name(),
            None => "dense3",
        }
    }
}

impl FromStr for GraphClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown class {s:?}"))
    }
}

/// Evidence that a graph is outside a class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Embedding(Embedding),
    DenseViolation(DenseViolation),
}

/// Class flags plus a witness for every flag that is false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassMembership {
    pub flags: BTreeMap<GraphClass, bool>,
    pub witnesses: BTreeMap<GraphClass, Witness>,
    pub dense_threshold: usize,
    pub dense_quantifier: DenseQuantifier,
}

impl ClassMembership {
    pub fn is_member(&self, class: GraphClass) -> bool {
        self.flags[&class]
    }

    /// Member of at least one of [`GraphClass::CLAIMED`].
    pub fn in_claimed_class(&self) -> bool {
        GraphClass::CLAIMED.iter().any(|&c| self.is_member(c))
    }

    pub fn claimed_memberships(&self) -> Vec<GraphClass> {
        GraphClass::CLAIMED.into_iter().filter(|&c| self.is_member(c)).collect()
    }
}

/// Options for [`classify_graph_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenseOptions {
    pub threshold: usize,
    pub quantifier: DenseQuantifier,
}

impl Default for DenseOptions {
    fn default() -> Self {
        DenseOptions { threshold: 3, quantifier: DenseQuantifier::ForAll }
    }
}

pub fn classify_graph(g: &Graph) -> ClassMembership {
    classify_graph_with(g, DenseOptions::default())
}

/// Computes every class flag; witnesses are re-checked before they are stored.
pub fn classify_graph_with(g: &Graph, dense: DenseOptions) -> ClassMembership {
    let mut flags = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    for class in GraphClass::ALL {
        let witness = match class.forbidden() {
            Some(p) => find_induced(g, p).map(|emb| {
                assert!(is_induced_embedding(g, &p.graph(), &emb), "invalid {p} witness");
                Witness::Embedding(emb)
            }),
            None => dense_check(g, dense.threshold, dense.quantifier).err().map(|v| {
                assert!(v.non_adjacent.len() > dense.threshold);
                Witness::DenseViolation(v)
            }),
        };
        flags.insert(class, witness.is_none());
        if let Some(w) = witness {
            witnesses.insert(class, w);
        }
    }
    ClassMembership {
        flags,
        witnesses,
        dense_threshold: dense.threshold,
        dense_quantifier: dense.quantifier,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5_k3() -> Graph {
        Graph::cycle(5).lexicographic_product(&Graph::complete(3)).unwrap()
    }

    fn k333() -> Graph {
        Graph::complete_multipartite(&[3, 3, 3]).unwrap()
    }

    #[test]
    fn pattern_shapes() {
        let chair = Pattern::Chair.graph();
        let mut degrees = chair.degree_profile().degrees;
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 1, 2, 3]);
        assert_eq!(Pattern::Claw.graph(), Graph::star(3));
        assert_eq!(Pattern::ThreeK1.graph(), Graph::empty(3));
        assert_eq!(
            Pattern::P4UnionK1.graph(),
            Graph::path(4).disjoint_union(&Graph::empty(1)).unwrap()
        );
        for p in Pattern::ALL {
            assert_eq!(p.name().parse::<Pattern>().unwrap(), p);
            assert!(p.graph().n() <= 5);
        }
    }

    #[test]
    fn find_induced_examples() {
        assert_eq!(find_induced(&Graph::star(3), Pattern::Claw), Some(vec![0, 1, 2, 3]));
        assert_eq!(find_induced(&Graph::cycle(5), Pattern::P5), None);
        let emb = find_induced(&Graph::cycle(6), Pattern::P5).unwrap();
        assert!(is_induced_embedding(&Graph::cycle(6), &Pattern::P5.graph(), &emb));
    }

    #[test]
    fn is_free_examples() {
        assert!(is_free(&k333(), Pattern::P4));
        assert!(!is_free(&k333(), Pattern::Claw));
        assert!(is_free(&c5_k3(), Pattern::P5));
    }

    #[test]
    fn dense_examples() {
        assert!(dense_neighborhoods(&Graph::complete(10), 3));
        assert!(!dense_neighborhoods(&Graph::star(9), 3));
        assert!(dense_neighborhoods(&Graph::petersen(), 3));
        let v = dense_check(&Graph::star(9), 3, DenseQuantifier::ForAll).unwrap_err();
        assert_eq!(v.center, 0);
        assert_eq!(v.non_adjacent.len(), 8);
    }

    #[test]
    fn dense_quantifiers_differ() {
        // K4 with a star of 6 leaves hanging off vertex 4: the star centre
        // is the unique max-degree vertex and its neighbourhood is sparse,
        // while the K4 part is fine.
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        edges.extend((5..11).map(|v| (4, v)));
        let g = Graph::new(11, &edges).unwrap();
        assert!(dense_check(&g, 3, DenseQuantifier::SomeMaxDegree).is_err());
        // Two max-degree centres, one dense, one not.
        let mut edges: Vec<(usize, usize)> = (1..5).map(|v| (0, v)).collect();
        for a in 1..5 {
            for b in a + 1..5 {
                edges.push((a, b));
            }
        }
        edges.extend((6..10).map(|v| (5, v)));
        let g = Graph::new(10, &edges).unwrap();
        assert!(dense_check(&g, 2, DenseQuantifier::ForAll).is_err());
        assert!(dense_check(&g, 2, DenseQuantifier::SomeMaxDegree).is_ok());
    }

    #[test]
    fn classify_examples() {
        let m = classify_graph(&c5_k3());
        for class in [
            GraphClass::P4UnionK1Free,
            GraphClass::P5Free,
            GraphClass::ChairFree,
            GraphClass::ClawFree,
            GraphClass::ThreeK1Free,
            GraphClass::Dense3,
        ] {
            assert!(m.is_member(class), "{class:?}");
        }
        let m = classify_graph(&k333());
        assert!(m.is_member(GraphClass::ChairFree));
        assert!(!m.is_member(GraphClass::ClawFree));

        let m = classify_graph(&Graph::path(5));
        assert!(!m.is_member(GraphClass::P5Free));
        assert_eq!(m.witnesses[&GraphClass::P5Free], Witness::Embedding(vec![0, 1, 2, 3, 4]));
    }

    #[test]
    fn witnesses_present_iff_flag_false() {
        for g in [Graph::petersen(), Graph::cycle(7), Graph::star(9), k333()] {
            let m = classify_graph(&g);
            for class in GraphClass::ALL {
                assert_eq!(m.is_member(class), !m.witnesses.contains_key(&class));
            }
        }
    }

    #[test]
    fn serialized_names() {
        let m = classify_graph(&Graph::path(5));
        let json = serde_json::to_value(&m).unwrap();
        let keys: Vec<&str> = json["flags"].as_object().unwrap().keys().map(|k| k.as_str()).collect();
        for name in ["claw", "c4", "p4", "p5", "chair", "p4+k1", "p3+k1", "k2+2k1", "3k1", "dense3"] {
            assert!(keys.contains(&name), "{name}");
        }
    }
}
