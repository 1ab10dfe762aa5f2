//! Conversions between the `1/2/3` and direction-dependent `0/1/10` label
//! systems, the matching boundary word translations, and the 120-degree
//! rotation of labeled triangles.

use crate::grid::TriGrid;
use crate::maps::MapError;
use crate::objects::{
    label_from_0110, label_to_0110, BinaryString, Label0110, TrianglePuzzle0110, TrianglePuzzle123,
};

/// Re-reads every edge through the per-direction translation table.
pub fn convert_123_to_0110(p: &TrianglePuzzle123) -> TrianglePuzzle0110 {
    let n = p.side();
    let grid = TriGrid::new(n);
    let labels: Vec<Label0110> = grid
        .edges()
        .iter()
        .map(|&e| label_to_0110(e.dir, p.label(e)).expect("labels 1..=3 always translate"))
        .collect();
    TrianglePuzzle0110::from_edge_labels(n, labels)
        .expect("translated faces stay valid, the tables are direction-wise bijections")
}

/// Inverse of [`convert_123_to_0110`].
pub fn convert_0110_to_123(p: &TrianglePuzzle0110) -> TrianglePuzzle123 {
    let n = p.side();
    let grid = TriGrid::new(n);
    let labels: Vec<u8> = grid
        .edges()
        .iter()
        .map(|&e| label_from_0110(e.dir, p.label(e)))
        .collect();
    TrianglePuzzle123::from_edge_labels(n, labels)
        .expect("translated faces stay valid, the tables are direction-wise bijections")
}

/// Expands the binary word for side `i` (1-based, of `m` sides) into the
/// `1..=m` letters that a rank-`m` array carries on that side of its top
/// row: sides `i < m` read `0` as `m - i` and `1` as `m - i + 1`; the last
/// side reads `0` as `m` and `1` as `1`.
pub fn toprow(xi: &BinaryString, i: usize, m: usize) -> Vec<u8> {
    let (zero, one) = if i < m {
        ((m - i) as u8, (m - i + 1) as u8)
    } else {
        (m as u8, 1)
    };
    xi.bits().iter().map(|&b| if b == 0 { zero } else { one }).collect()
}

/// Inverse of [`toprow`]: reads a side word of a rank-`m` top row back into
/// a binary word, failing if a letter does not belong on side `i`.
pub fn partn(side_word: &[u8], i: usize, m: usize) -> Result<BinaryString, MapError> {
    let (zero, one) = if i < m {
        ((m - i) as u8, (m - i + 1) as u8)
    } else {
        (m as u8, 1)
    };
    let bits: Vec<u8> = side_word
        .iter()
        .map(|&l| {
            if l == zero {
                Ok(0)
            } else if l == one {
                Ok(1)
            } else {
                Err(MapError::TopRowShapeMismatch {
                    reason: format!("letter {l} cannot appear on side {i} of {m}"),
                })
            }
        })
        .collect::<Result<_, _>>()?;
    Ok(BinaryString::new(bits).expect("bits are 0 or 1"))
}

/// Rotates a labeled triangle 120 degrees counterclockwise about its
/// center.  Labels travel with their edges; directions cycle, so the three
/// boundary words shift cyclically and validity is preserved.
pub fn rotate_0110(p: &TrianglePuzzle0110) -> TrianglePuzzle0110 {
    let n = p.side();
    let grid = TriGrid::new(n);
    let mut labels = vec![Label0110::Zero; grid.edge_count()];
    for &e in grid.edges() {
        let target = grid.rotate_edge(e);
        let idx = grid.edge_index(target).expect("rotation stays in range");
        labels[idx] = p.label(e);
    }
    TrianglePuzzle0110::from_edge_labels(n, labels)
        .expect("the allowed face set is closed under rotation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::TriDir;

    #[test]
    fn conversion_round_trips_per_edge_and_puzzle() {
        for dir in [TriDir::NW, TriDir::S, TriDir::NE] {
            for l in 1u8..=3 {
                let t = label_to_0110(dir, l).unwrap();
                assert_eq!(label_from_0110(dir, t), l);
            }
        }
        let p = TrianglePuzzle123::from_edge_labels(1, vec![2, 1, 3]).unwrap();
        assert_eq!(convert_0110_to_123(&convert_123_to_0110(&p)), p);
    }

    #[test]
    fn side_word_expansion_round_trips() {
        let xi = BinaryString::parse("0101").unwrap();
        for m in 3..=5 {
            for i in 1..=m {
                let word = toprow(&xi, i, m);
                assert_eq!(partn(&word, i, m).unwrap(), xi);
            }
        }
        assert_eq!(toprow(&xi, 1, 4), vec![3, 4, 3, 4]);
        assert_eq!(toprow(&xi, 4, 4), vec![4, 1, 4, 1]);
    }

    #[test]
    fn foreign_letter_fails_side_reading() {
        assert!(partn(&[2, 2], 1, 4).is_err());
    }

    #[test]
    fn rotation_cycles_boundary_words() {
        let p = TrianglePuzzle123::from_edge_labels(1, vec![2, 1, 3]).unwrap();
        let q = convert_123_to_0110(&p);
        let r = rotate_0110(&q);
        let qb = q.boundary();
        let rb = r.boundary();
        assert_eq!(rb[0], qb[1]);
        assert_eq!(rb[1], qb[2]);
        assert_eq!(rb[2], qb[0]);
        assert_eq!(rotate_0110(&rotate_0110(&r)), q);
    }
}
