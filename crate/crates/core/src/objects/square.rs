//! Edge labelings of the square grid `□_n` with labels `{1,2,3,4}`.
//!
//! A labeling is valid when every face on the southwest-to-northeast diagonal
//! has four distinct edge labels, and every off-diagonal face uses exactly two
//! labels, matched either west-with-south / north-with-east, or
//! north-with-south / west-with-east.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::grid::{sq_edge_index, SqEdge, SquareGrid};

use super::ValidationError;

/// The face rule: `diagonal` faces need four distinct labels; off-diagonal
/// faces pair up as west/south + north/east or north/south + west/east.
pub(crate) fn square_face_ok(w: u8, n: u8, e: u8, s: u8, diagonal: bool) -> bool {
    if diagonal {
        w != n && w != e && w != s && n != e && n != s && e != s
    } else {
        (w == s && n == e && w != n) || (n == s && w == e && w != n)
    }
}

/// A validated edge labeling of `□_n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SquareDoc", into = "SquareDoc")]
pub struct SquareLabeling {
    side: usize,
    labels: Vec<u8>,
}

impl SquareLabeling {
    /// Build from labels indexed by [`sq_edge_index`].
    pub fn from_edge_labels(side: usize, labels: Vec<u8>) -> Result<Self, ValidationError> {
        let expected = 2 * side * (side + 1);
        if labels.len() != expected {
            return Err(ValidationError::RowShape { row: side, found: labels.len(), expected });
        }
        if let Some(&l) = labels.iter().find(|&&l| !(1..=4).contains(&l)) {
            return Err(ValidationError::BadLabel { label: l.to_string() });
        }
        for x in 0..side {
            for y in 0..side {
                let [w, n, e, s] =
                    SquareGrid::face_edges(x, y).map(|e| labels[sq_edge_index(side, e).unwrap()]);
                if !square_face_ok(w, n, e, s, x == y) {
                    return Err(ValidationError::FaceViolation {
                        face: format!("({x},{y})"),
                        labels: vec![w, n, e, s].iter().map(|l| l.to_string()).collect(),
                    });
                }
            }
        }
        Ok(SquareLabeling { side, labels })
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn label(&self, e: SqEdge) -> u8 {
        self.labels[sq_edge_index(self.side, e).expect("edge outside the grid")]
    }
}

impl fmt::Debug for SquareLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SquareLabeling(side {})", self.side)
    }
}

#[derive(Serialize, Deserialize, Clone)]
struct SquareDoc {
    labels: BTreeMap<String, u8>,
    side: usize,
    #[serde(rename = "type")]
    kind: String,
}

const SQUARE_DOC_TYPE: &str = "square_labeling";

impl TryFrom<SquareDoc> for SquareLabeling {
    type Error = ValidationError;

    fn try_from(doc: SquareDoc) -> Result<Self, Self::Error> {
        if doc.kind != SQUARE_DOC_TYPE {
            return Err(ValidationError::WrongDocType {
                expected: SQUARE_DOC_TYPE.to_string(),
                found: doc.kind,
            });
        }
        let grid = SquareGrid::new(doc.side);
        let mut labels = vec![0u8; grid.edge_count()];
        let mut seen = 0usize;
        for (key, &val) in &doc.labels {
            let edge = SqEdge::parse_key(key).ok_or_else(|| ValidationError::UnknownKey {
                key: key.clone(),
                side: doc.side,
            })?;
            let idx = sq_edge_index(doc.side, edge).ok_or_else(|| {
                ValidationError::UnknownKey { key: key.clone(), side: doc.side }
            })?;
            labels[idx] = val;
            seen += 1;
        }
        if seen != labels.len() {
            let missing = grid
                .edges()
                .iter()
                .find(|&&e| !doc.labels.contains_key(&e.key()))
                .map(|e| e.key())
                .unwrap_or_default();
            return Err(ValidationError::MissingEdge { edge: missing });
        }
        SquareLabeling::from_edge_labels(doc.side, labels)
    }
}

impl From<SquareLabeling> for SquareDoc {
    fn from(l: SquareLabeling) -> Self {
        let grid = SquareGrid::new(l.side);
        let labels =
            grid.edges().iter().map(|&e| (e.key(), l.label(e))).collect();
        SquareDoc { labels, side: l.side, kind: SQUARE_DOC_TYPE.to_string() }
    }
}
