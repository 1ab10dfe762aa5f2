//! Proper 4-colorings of the triangular grid, with the basepoint pinned to 0.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::grid::{TriGrid, TriEdge};

use super::ValidationError;

/// Vertex index of `(r, p)` with `r + p <= n`, rows bottom-up.
pub(crate) fn tri_vertex_index(n: usize, r: usize, p: usize) -> Option<usize> {
    (r <= n && p <= n - r).then(|| r * (n + 1) - r * r.saturating_sub(1) / 2 + p)
}

pub(crate) fn tri_vertex_count(n: usize) -> usize {
    (n + 1) * (n + 2) / 2
}

/// A proper coloring of the vertices of `Δ_n` with colors `{0,1,2,3}` and
/// color 0 at the basepoint `(0,0)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ColoringDoc", into = "ColoringDoc")]
pub struct TriangleColoring {
    side: usize,
    colors: Vec<u8>,
}

impl TriangleColoring {
    /// Build from colors indexed by [`tri_vertex_index`].
    pub fn from_colors(side: usize, colors: Vec<u8>) -> Result<Self, ValidationError> {
        let expected = tri_vertex_count(side);
        if colors.len() != expected {
            return Err(ValidationError::RowShape { row: side, found: colors.len(), expected });
        }
        if let Some(&c) = colors.iter().find(|&&c| c > 3) {
            return Err(ValidationError::BadLabel { label: c.to_string() });
        }
        if colors[0] != 0 {
            return Err(ValidationError::BaseNotZero { found: colors[0] });
        }
        let grid = TriGrid::new(side);
        for &e in grid.edges() {
            let (a, b) = e.endpoints();
            let ca = colors[tri_vertex_index(side, a.0, a.1).unwrap()];
            let cb = colors[tri_vertex_index(side, b.0, b.1).unwrap()];
            if ca == cb {
                return Err(ValidationError::AdjacentSameColor { a, b, color: ca });
            }
        }
        Ok(TriangleColoring { side, colors })
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color(&self, r: usize, p: usize) -> u8 {
        self.colors[tri_vertex_index(self.side, r, p).expect("vertex outside the grid")]
    }

    /// Colors of the two endpoints of an edge.
    pub fn edge_colors(&self, e: TriEdge) -> (u8, u8) {
        let (a, b) = e.endpoints();
        (self.color(a.0, a.1), self.color(b.0, b.1))
    }
}

impl fmt::Debug for TriangleColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TriangleColoring(side {}, colors {:?})", self.side, self.colors)
    }
}

#[derive(Serialize, Deserialize, Clone)]
struct ColoringDoc {
    colors: BTreeMap<String, u8>,
    side: usize,
    #[serde(rename = "type")]
    kind: String,
}

const COLORING_DOC_TYPE: &str = "coloring";

impl TryFrom<ColoringDoc> for TriangleColoring {
    type Error = ValidationError;

    fn try_from(doc: ColoringDoc) -> Result<Self, Self::Error> {
        if doc.kind != COLORING_DOC_TYPE {
            return Err(ValidationError::WrongDocType {
                expected: COLORING_DOC_TYPE.to_string(),
                found: doc.kind,
            });
        }
        let mut colors = vec![u8::MAX; tri_vertex_count(doc.side)];
        for (key, &c) in &doc.colors {
            let mut it = key.split(',');
            let rp = (|| {
                let r: usize = it.next()?.parse().ok()?;
                let p: usize = it.next()?.parse().ok()?;
                if it.next().is_some() {
                    return None;
                }
                tri_vertex_index(doc.side, r, p)
            })();
            let idx = rp.ok_or_else(|| ValidationError::UnknownKey {
                key: key.clone(),
                side: doc.side,
            })?;
            colors[idx] = c;
        }
        if let Some(pos) = colors.iter().position(|&c| c == u8::MAX) {
            return Err(ValidationError::MissingEdge { edge: format!("vertex #{pos}") });
        }
        TriangleColoring::from_colors(doc.side, colors)
    }
}

impl From<TriangleColoring> for ColoringDoc {
    fn from(c: TriangleColoring) -> Self {
        let mut colors = BTreeMap::new();
        for r in 0..=c.side {
            for p in 0..=c.side - r {
                colors.insert(format!("{r},{p}"), c.color(r, p));
            }
        }
        ColoringDoc { colors, side: c.side, kind: COLORING_DOC_TYPE.to_string() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_indexing_is_dense() {
        for n in 0..5 {
            let mut seen = vec![false; tri_vertex_count(n)];
            for r in 0..=n {
                for p in 0..=n - r {
                    let i = tri_vertex_index(n, r, p).unwrap();
                    assert!(!seen[i]);
                    seen[i] = true;
                }
            }
            assert!(seen.iter().all(|&s| s));
            assert_eq!(tri_vertex_index(n, 0, n + 1), None);
        }
    }

    #[test]
    fn base_must_be_zero_and_neighbors_distinct() {
        // Δ_1: vertices (0,0), (0,1), (1,0).
        assert!(TriangleColoring::from_colors(1, vec![0, 1, 2]).is_ok());
        assert!(matches!(
            TriangleColoring::from_colors(1, vec![1, 0, 2]),
            Err(ValidationError::BaseNotZero { found: 1 })
        ));
        assert!(matches!(
            TriangleColoring::from_colors(1, vec![0, 1, 1]),
            Err(ValidationError::AdjacentSameColor { .. })
        ));
    }

    #[test]
    fn json_round_trip_is_byte_exact() {
        let c = TriangleColoring::from_colors(1, vec![0, 1, 2]).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        let back: TriangleColoring = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
