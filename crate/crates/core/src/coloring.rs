//! Vertex colourings with a fixed palette `0..k`.

use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("colour {color} at vertex {vertex} is outside the palette 0..{k}")]
    ColorOutOfRange { vertex: usize, color: usize, k: usize },
    #[error("colouring covers {got} vertices, graph has {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

static NEXT_VERSION: AtomicU64 = AtomicU64::new(1);

fn fresh_version() -> u64 {
    NEXT_VERSION.fetch_add(1, Ordering::Relaxed)
}

/// A total or partial assignment of palette colours to vertices.
///
/// Every mutation stamps the colouring with a process-unique version, so
/// objects derived from one particular state (such as a Kempe component)
/// can detect that the colouring has since changed. Clones share the version
/// of the state they copy. Equality and hashing ignore the version.
#[derive(Debug, Clone)]
pub struct Coloring {
    colors: Vec<Option<u8>>,
    k: usize,
    version: u64,
}

impl PartialEq for Coloring {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.colors == other.colors
    }
}

impl Eq for Coloring {}

impl Hash for Coloring {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.k.hash(state);
        self.colors.hash(state);
    }
}

impl Coloring {
    /// All `n` vertices uncoloured.
    pub fn uncolored(n: usize, k: usize) -> Self {
        assert!(k <= 256, "palette larger than 256 colours");
        Coloring { colors: vec![None; n], k, version: fresh_version() }
    }

    /// Total colouring from a colour per vertex.
    pub fn from_colors(k: usize, colors: &[usize]) -> Result<Self, ColoringError> {
        Self::from_partial(k, &colors.iter().map(|&c| Some(c)).collect::<Vec<_>>())
    }

    pub fn from_partial(k: usize, colors: &[Option<usize>]) -> Result<Self, ColoringError> {
        let mut c = Coloring::uncolored(colors.len(), k);
        for (v, &col) in colors.iter().enumerate() {
            c.set(v, col)?;
        }
        Ok(c)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.colors.len()
    }

    /// Palette size.
    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn version(&self) -> u64 {
        self.version
    }

    #[inline]
    pub fn get(&self, v: usize) -> Option<usize> {
        self.colors[v].map(usize::from)
    }

    pub fn set(&mut self, v: usize, color: Option<usize>) -> Result<(), ColoringError> {
        if let Some(c) = color {
            if c >= self.k {
                return Err(ColoringError::ColorOutOfRange { vertex: v, color: c, k: self.k });
            }
        }
        self.colors[v] = color.map(|c| c as u8);
        self.version = fresh_version();
        Ok(())
    }

    /// Same assignment over a larger or smaller palette.
    pub fn with_palette(&self, k: usize) -> Result<Self, ColoringError> {
        Coloring::from_partial(k, &self.to_vec())
    }

    pub fn to_vec(&self) -> Vec<Option<usize>> {
        self.colors.iter().map(|c| c.map(usize::from)).collect()
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn colored(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.colors[v].is_some()).collect()
    }

    /// Vertices currently coloured `color`.
    pub fn class(&self, color: usize) -> VertexSet {
        (0..self.n()).filter(|&v| self.get(v) == Some(color)).collect()
    }

    /// Number of distinct colours in use.
    pub fn colors_used(&self) -> usize {
        let mut seen = [false; 256];
        for c in self.colors.iter().flatten() {
            seen[*c as usize] = true;
        }
        seen.iter().filter(|&&b| b).count()
    }

    /// No edge joins two vertices of the same colour (uncoloured vertices
    /// never conflict).
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.n() == g.n()
            && g.edges().all(|(u, v)| match (self.colors[u], self.colors[v]) {
                (Some(a), Some(b)) => a != b,
                _ => true,
            })
    }

    /// Colours rendered `1..=k` for reports, `None` for uncoloured.
    pub fn one_based(&self) -> Vec<Option<usize>> {
        self.colors.iter().map(|c| c.map(|c| c as usize + 1)).collect()
    }
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Coloring", 2)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("colors", &self.one_based())?;
        st.end()
    }
}
