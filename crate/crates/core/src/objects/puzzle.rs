//! Triangle puzzles in the `1/2/3` and `0/1/10` label systems.
//!
//! A `1/2/3`-puzzle labels every edge of `Δ_n` with 1, 2 or 3 so that the
//! three edges of every face carry distinct labels.  A `0/1/10`-puzzle is the
//! image of such a labeling under a direction-dependent relabeling; its valid
//! faces are, by construction, the images of the six distinct-label faces.
//! The relabeling table is stored once, below; the inverse table and the
//! valid `0/1/10` face set are derived from it.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::grid::{tri_edge_index, TriDir, TriEdge, TriFace, TriGrid};

use super::ValidationError;

/// Direction-dependent relabeling of `1/2/3` edge labels into `0/1/10`.
pub fn label_to_0110(dir: TriDir, label: u8) -> Option<Label0110> {
    use Label0110::*;
    match (dir, label) {
        (TriDir::NW, 2) => Some(Zero),
        (TriDir::NW, 3) => Some(One),
        (TriDir::NW, 1) => Some(Ten),
        (TriDir::S, 3) => Some(Zero),
        (TriDir::S, 1) => Some(One),
        (TriDir::S, 2) => Some(Ten),
        (TriDir::NE, 1) => Some(Zero),
        (TriDir::NE, 2) => Some(One),
        (TriDir::NE, 3) => Some(Ten),
        _ => None,
    }
}

/// Inverse of [`label_to_0110`], derived by searching the table.
pub fn label_from_0110(dir: TriDir, label: Label0110) -> u8 {
    (1..=3)
        .find(|&x| label_to_0110(dir, x) == Some(label))
        .expect("each direction table is a bijection")
}

/// A `0/1/10` edge label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label0110 {
    Zero,
    One,
    Ten,
}

impl Label0110 {
    pub fn as_str(self) -> &'static str {
        match self {
            Label0110::Zero => "0",
            Label0110::One => "1",
            Label0110::Ten => "10",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "0" => Some(Label0110::Zero),
            "1" => Some(Label0110::One),
            "10" => Some(Label0110::Ten),
            _ => None,
        }
    }

    /// The binary bit for boundary reading; `Ten` has none.
    pub fn bit(self) -> Option<u8> {
        match self {
            Label0110::Zero => Some(0),
            Label0110::One => Some(1),
            Label0110::Ten => None,
        }
    }
}

fn check_faces_distinct(side: usize, labels: &[u8]) -> Result<(), ValidationError> {
    let grid = TriGrid::new(side);
    for &face in grid.faces() {
        let ls = face.edges().map(|e| labels[tri_edge_index(side, e).unwrap()]);
        if ls[0] == ls[1] || ls[0] == ls[2] || ls[1] == ls[2] {
            return Err(ValidationError::FaceViolation {
                face: format!("{face:?}"),
                labels: ls.iter().map(|l| l.to_string()).collect(),
            });
        }
    }
    Ok(())
}

/// A validated `1/2/3`-puzzle on `Δ_n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Puzzle123Doc", into = "Puzzle123Doc")]
pub struct TrianglePuzzle123 {
    side: usize,
    labels: Vec<u8>,
}

impl TrianglePuzzle123 {
    /// Build from labels indexed by [`tri_edge_index`].
    pub fn from_edge_labels(side: usize, labels: Vec<u8>) -> Result<Self, ValidationError> {
        let expected = 3 * side * (side + 1) / 2;
        if labels.len() != expected {
            return Err(ValidationError::RowShape { row: side, found: labels.len(), expected });
        }
        if let Some(&l) = labels.iter().find(|&&l| !(1..=3).contains(&l)) {
            return Err(ValidationError::BadLabel { label: l.to_string() });
        }
        check_faces_distinct(side, &labels)?;
        Ok(TrianglePuzzle123 { side, labels })
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn label(&self, e: TriEdge) -> u8 {
        self.labels[tri_edge_index(self.side, e).expect("edge outside the grid")]
    }

    /// Boundary labels `(λ^{(1)}, λ^{(2)}, λ^{(3)})`, read clockwise from the
    /// basepoint and split into the NW, NE and base sides.
    pub fn boundary(&self) -> [Vec<u8>; 3] {
        let grid = TriGrid::new(self.side);
        let edges = grid.boundary(self.side);
        let all: Vec<u8> = edges.into_iter().map(|e| self.label(e)).collect();
        let n = self.side;
        [all[..n].to_vec(), all[n..2 * n].to_vec(), all[2 * n..].to_vec()]
    }

    /// True if the face converts to the all-`10` face of the `0/1/10` system.
    pub fn face_is_ten(&self, face: TriFace) -> bool {
        let [nw, s, ne] = face.edges();
        label_to_0110(TriDir::NW, self.label(nw)) == Some(Label0110::Ten)
            && label_to_0110(TriDir::S, self.label(s)) == Some(Label0110::Ten)
            && label_to_0110(TriDir::NE, self.label(ne)) == Some(Label0110::Ten)
    }
}

impl fmt::Debug for TrianglePuzzle123 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TrianglePuzzle123(side {}, boundary {:?})", self.side, self.boundary())
    }
}

#[derive(Serialize, Deserialize, Clone)]
struct Puzzle123Doc {
    labels: BTreeMap<String, String>,
    side: usize,
    #[serde(rename = "type")]
    kind: String,
}

const PUZZLE123_DOC_TYPE: &str = "puzzle123";

impl TryFrom<Puzzle123Doc> for TrianglePuzzle123 {
    type Error = ValidationError;

    fn try_from(doc: Puzzle123Doc) -> Result<Self, Self::Error> {
        if doc.kind != PUZZLE123_DOC_TYPE {
            return Err(ValidationError::WrongDocType {
                expected: PUZZLE123_DOC_TYPE.to_string(),
                found: doc.kind,
            });
        }
        let grid = TriGrid::new(doc.side);
        let mut labels = vec![0u8; grid.edge_count()];
        let mut seen = 0usize;
        for (key, val) in &doc.labels {
            let edge = TriEdge::parse_key(key).ok_or_else(|| ValidationError::UnknownKey {
                key: key.clone(),
                side: doc.side,
            })?;
            let idx = tri_edge_index(doc.side, edge).ok_or_else(|| {
                ValidationError::UnknownKey { key: key.clone(), side: doc.side }
            })?;
            labels[idx] = val
                .parse::<u8>()
                .ok()
                .filter(|l| (1..=3).contains(l))
                .ok_or_else(|| ValidationError::BadLabel { label: val.clone() })?;
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
        TrianglePuzzle123::from_edge_labels(doc.side, labels)
    }
}

impl From<TrianglePuzzle123> for Puzzle123Doc {
    fn from(p: TrianglePuzzle123) -> Self {
        let grid = TriGrid::new(p.side);
        let labels = grid
            .edges()
            .iter()
            .map(|&e| (e.key(), p.label(e).to_string()))
            .collect();
        Puzzle123Doc { labels, side: p.side, kind: PUZZLE123_DOC_TYPE.to_string() }
    }
}

/// A validated `0/1/10`-puzzle on `Δ_n`.
///
/// A face (of either orientation) is valid when the three direction-wise
/// preimages under the relabeling table are distinct, which reproduces the
/// six allowed label triples per orientation.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Puzzle0110Doc", into = "Puzzle0110Doc")]
pub struct TrianglePuzzle0110 {
    side: usize,
    labels: Vec<Label0110>,
}

impl TrianglePuzzle0110 {
    pub fn from_edge_labels(side: usize, labels: Vec<Label0110>) -> Result<Self, ValidationError> {
        let expected = 3 * side * (side + 1) / 2;
        if labels.len() != expected {
            return Err(ValidationError::RowShape { row: side, found: labels.len(), expected });
        }
        let grid = TriGrid::new(side);
        for &face in grid.faces() {
            let [nw, s, ne] = face.edges();
            let pre = [
                label_from_0110(TriDir::NW, labels[tri_edge_index(side, nw).unwrap()]),
                label_from_0110(TriDir::S, labels[tri_edge_index(side, s).unwrap()]),
                label_from_0110(TriDir::NE, labels[tri_edge_index(side, ne).unwrap()]),
            ];
            if pre[0] == pre[1] || pre[0] == pre[2] || pre[1] == pre[2] {
                let ls = face
                    .edges()
                    .map(|e| labels[tri_edge_index(side, e).unwrap()].as_str().to_string());
                return Err(ValidationError::FaceViolation {
                    face: format!("{face:?}"),
                    labels: ls.to_vec(),
                });
            }
        }
        Ok(TrianglePuzzle0110 { side, labels })
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn labels(&self) -> &[Label0110] {
        &self.labels
    }

    pub fn label(&self, e: TriEdge) -> Label0110 {
        self.labels[tri_edge_index(self.side, e).expect("edge outside the grid")]
    }

    /// Clockwise boundary labels split into the three sides.
    pub fn boundary(&self) -> [Vec<Label0110>; 3] {
        let grid = TriGrid::new(self.side);
        let all: Vec<Label0110> =
            grid.boundary(self.side).into_iter().map(|e| self.label(e)).collect();
        let n = self.side;
        [all[..n].to_vec(), all[n..2 * n].to_vec(), all[2 * n..].to_vec()]
    }

    /// Boundary sides as 0/1 strings; `None` if any boundary edge is `10`.
    pub fn boundary_strings(&self) -> Option<[super::BinaryString; 3]> {
        let sides = self.boundary();
        let mut out = Vec::with_capacity(3);
        for side in sides {
            let bits: Option<Vec<u8>> = side.into_iter().map(Label0110::bit).collect();
            out.push(super::BinaryString::new(bits?).unwrap());
        }
        out.try_into().ok()
    }

    /// True if all three edges of the face are labeled `10`.
    pub fn face_is_ten(&self, face: TriFace) -> bool {
        face.edges().iter().all(|&e| self.label(e) == Label0110::Ten)
    }
}

impl fmt::Debug for TrianglePuzzle0110 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TrianglePuzzle0110(side {})", self.side)
    }
}

#[derive(Serialize, Deserialize, Clone)]
struct Puzzle0110Doc {
    labels: BTreeMap<String, String>,
    side: usize,
    #[serde(rename = "type")]
    kind: String,
}

const PUZZLE0110_DOC_TYPE: &str = "puzzle0110";

impl TryFrom<Puzzle0110Doc> for TrianglePuzzle0110 {
    type Error = ValidationError;

    fn try_from(doc: Puzzle0110Doc) -> Result<Self, Self::Error> {
        if doc.kind != PUZZLE0110_DOC_TYPE {
            return Err(ValidationError::WrongDocType {
                expected: PUZZLE0110_DOC_TYPE.to_string(),
                found: doc.kind,
            });
        }
        let grid = TriGrid::new(doc.side);
        let mut labels = vec![Label0110::Zero; grid.edge_count()];
        let mut seen = 0usize;
        for (key, val) in &doc.labels {
            let edge = TriEdge::parse_key(key).ok_or_else(|| ValidationError::UnknownKey {
                key: key.clone(),
                side: doc.side,
            })?;
            let idx = tri_edge_index(doc.side, edge).ok_or_else(|| {
                ValidationError::UnknownKey { key: key.clone(), side: doc.side }
            })?;
            labels[idx] = Label0110::parse(val)
                .ok_or_else(|| ValidationError::BadLabel { label: val.clone() })?;
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
        TrianglePuzzle0110::from_edge_labels(doc.side, labels)
    }
}

impl From<TrianglePuzzle0110> for Puzzle0110Doc {
    fn from(p: TrianglePuzzle0110) -> Self {
        let grid = TriGrid::new(p.side);
        let labels = grid
            .edges()
            .iter()
            .map(|&e| (e.key(), p.label(e).as_str().to_string()))
            .collect();
        Puzzle0110Doc { labels, side: p.side, kind: PUZZLE0110_DOC_TYPE.to_string() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direction_tables_are_bijections() {
        for dir in [TriDir::NW, TriDir::S, TriDir::NE] {
            let imgs: Vec<_> = (1..=3).map(|l| label_to_0110(dir, l).unwrap()).collect();
            assert_eq!(imgs.len(), 3);
            assert!(imgs.contains(&Label0110::Zero));
            assert!(imgs.contains(&Label0110::One));
            assert!(imgs.contains(&Label0110::Ten));
            for l in 1..=3 {
                assert_eq!(label_from_0110(dir, label_to_0110(dir, l).unwrap()), l);
            }
        }
        assert_eq!(label_to_0110(TriDir::NW, 4), None);
    }

    #[test]
    fn distinct_faces_map_onto_six_allowed_triples() {
        // The images of the 6 distinct-label faces, in (NW, S, NE) order,
        // must form the expected set, identically for both orientations
        // (the rule only looks at edge directions).
        use Label0110::*;
        let mut imgs = Vec::new();
        for a in 1..=3u8 {
            for b in 1..=3u8 {
                for c in 1..=3u8 {
                    if a != b && a != c && b != c {
                        imgs.push((
                            label_to_0110(TriDir::NW, a).unwrap(),
                            label_to_0110(TriDir::S, b).unwrap(),
                            label_to_0110(TriDir::NE, c).unwrap(),
                        ));
                    }
                }
            }
        }
        imgs.sort();
        let mut expected = vec![
            (Zero, Zero, Zero),
            (One, One, One),
            (Zero, One, Ten),
            (One, Ten, Zero),
            (Ten, Zero, One),
            (Ten, Ten, Ten),
        ];
        expected.sort();
        assert_eq!(imgs, expected);
    }

    #[test]
    fn single_face_puzzle_validates() {
        // Δ_1 edges in index order: NW(0,0), NE(0,1) after the S block; the
        // S block is S(0,0).
        let p = TrianglePuzzle123::from_edge_labels(1, vec![2, 1, 3]).unwrap();
        assert_eq!(p.boundary(), [vec![1], vec![3], vec![2]]);
        assert!(TrianglePuzzle123::from_edge_labels(1, vec![2, 2, 3]).is_err());
    }

    #[test]
    fn json_round_trip_is_byte_exact() {
        let p = TrianglePuzzle123::from_edge_labels(1, vec![2, 1, 3]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        let back: TrianglePuzzle123 = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn ten_face_detection() {
        // (NW, S, NE) = (1, 2, 3) converts to (10, 10, 10).
        let p = TrianglePuzzle123::from_edge_labels(1, vec![2, 1, 3]).unwrap();
        assert!(p.face_is_ten(TriFace::Up { r: 0, c: 0 }));
        let q = TrianglePuzzle123::from_edge_labels(1, vec![3, 1, 2]).unwrap();
        assert!(!q.face_is_ten(TriFace::Up { r: 0, c: 0 }));
    }
}
