//! Face-by-face backtracking over triangle puzzles, in both label systems.

use crate::enumerate::{backtrack_faces, EnumerateError};
use crate::grid::{TriFace, TriGrid};
use crate::objects::{
    label_to_0110, BinaryString, Label0110, TrianglePuzzle0110, TrianglePuzzle123,
    ValidationError,
};

/// Restriction on all-`10` faces by orientation; selecting one binds a
/// puzzle enumeration to an expansion basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieceFilter {
    /// No restriction.
    None,
    /// Forbid downward faces labeled `10` on all sides.
    NoDownTens,
    /// Forbid upward faces labeled `10` on all sides.
    NoUpTens,
    /// Forbid both orientations.
    NoTens,
}

impl PieceFilter {
    fn forbids(self, up: bool) -> bool {
        match self {
            PieceFilter::None => false,
            PieceFilter::NoDownTens => !up,
            PieceFilter::NoUpTens => up,
            PieceFilter::NoTens => true,
        }
    }
}

const LABEL_PERMS: [[u8; 3]; 6] = [
    [1, 2, 3],
    [1, 3, 2],
    [2, 1, 3],
    [2, 3, 1],
    [3, 1, 2],
    [3, 2, 1],
];

/// Faces in processing order: outward by shell when growing freely, inward
/// from the boundary when it is fixed.
fn face_order(grid: &TriGrid, fixed_boundary: bool) -> Vec<TriFace> {
    let mut faces = grid.faces().to_vec();
    faces.sort_by_key(|f| {
        let (up, r, c) = match *f {
            TriFace::Up { r, c } => (0, r, c),
            TriFace::Down { r, c } => (1, r, c),
        };
        (f.shell(), up, r, c)
    });
    if fixed_boundary {
        faces.reverse();
    }
    faces
}

fn face_edge_indices(grid: &TriGrid, f: &TriFace) -> [usize; 3] {
    let e = f.edges();
    [
        grid.edge_index(e[0]).expect("face edge in range"),
        grid.edge_index(e[1]).expect("face edge in range"),
        grid.edge_index(e[2]).expect("face edge in range"),
    ]
}

/// All puzzles over labels `1..=3`, optionally with the boundary words
/// fixed (left, right, bottom in clockwise reading order).  Results are
/// sorted by their edge label vectors.
pub fn enumerate_puzzles_123(
    n: usize,
    boundary: Option<&[Vec<u8>; 3]>,
) -> Result<Vec<TrianglePuzzle123>, EnumerateError> {
    let grid = TriGrid::new(n);
    let mut labels: Vec<Option<u8>> = vec![None; grid.edge_count()];
    if let Some(sides) = boundary {
        if sides.iter().any(|w| w.len() != n) {
            return Err(EnumerateError::BadBoundaryShape { expected: 3, len: n });
        }
        let flat: Vec<u8> = sides.concat();
        for (&e, &l) in grid.boundary(n).iter().zip(flat.iter()) {
            if !(1..=3).contains(&l) {
                return Err(EnumerateError::BadBoundary(ValidationError::BadLabel {
                    label: l.to_string(),
                }));
            }
            labels[grid.edge_index(e).expect("boundary edge in range")] = Some(l);
        }
    }
    let faces: Vec<([usize; 3], Vec<[u8; 3]>)> = face_order(&grid, boundary.is_some())
        .iter()
        .map(|f| (face_edge_indices(&grid, f), LABEL_PERMS.to_vec()))
        .collect();
    let mut out = Vec::new();
    backtrack_faces(&mut labels, &faces, 0, &mut |ls| {
        let vals: Vec<u8> = ls.iter().map(|o| o.expect("all edges lie on faces")).collect();
        out.push(
            TrianglePuzzle123::from_edge_labels(n, vals)
                .expect("backtracking enforces the face rule"),
        );
    });
    let edges = grid.edges().to_vec();
    out.sort_by_cached_key(|p| edges.iter().map(|&e| p.label(e)).collect::<Vec<_>>());
    Ok(out)
}

/// The six allowed `(NW, S, NE)` label tuples in the `0/1/10` system,
/// derived from the per-direction translation tables.
fn allowed_0110_tuples() -> Vec<[Label0110; 3]> {
    use crate::grid::TriDir;
    LABEL_PERMS
        .iter()
        .map(|p| {
            [
                label_to_0110(TriDir::NW, p[0]).expect("labels 1..=3 translate"),
                label_to_0110(TriDir::S, p[1]).expect("labels 1..=3 translate"),
                label_to_0110(TriDir::NE, p[2]).expect("labels 1..=3 translate"),
            ]
        })
        .collect()
}

/// All puzzles in the `0/1/10` system, optionally with fixed binary
/// boundary words and with all-`10` faces forbidden per orientation.
/// Results are sorted by their edge label vectors.
pub fn enumerate_puzzles_0110(
    n: usize,
    boundary: Option<&[BinaryString; 3]>,
    filter: PieceFilter,
) -> Result<Vec<TrianglePuzzle0110>, EnumerateError> {
    let grid = TriGrid::new(n);
    let mut labels: Vec<Option<Label0110>> = vec![None; grid.edge_count()];
    if let Some(sides) = boundary {
        if sides.iter().any(|w| w.len() != n) {
            return Err(EnumerateError::BadBoundaryShape { expected: 3, len: n });
        }
        let flat: Vec<u8> = sides.iter().flat_map(|w| w.bits().to_vec()).collect();
        for (&e, &b) in grid.boundary(n).iter().zip(flat.iter()) {
            let l = if b == 0 { Label0110::Zero } else { Label0110::One };
            labels[grid.edge_index(e).expect("boundary edge in range")] = Some(l);
        }
    }
    let base = allowed_0110_tuples();
    let all_tens = [Label0110::Ten; 3];
    let with_tens = base.clone();
    let without_tens: Vec<[Label0110; 3]> =
        base.into_iter().filter(|t| *t != all_tens).collect();
    let faces: Vec<([usize; 3], Vec<[Label0110; 3]>)> = face_order(&grid, boundary.is_some())
        .iter()
        .map(|f| {
            let cands = if filter.forbids(f.is_up()) {
                without_tens.clone()
            } else {
                with_tens.clone()
            };
            (face_edge_indices(&grid, f), cands)
        })
        .collect();
    let mut out = Vec::new();
    backtrack_faces(&mut labels, &faces, 0, &mut |ls| {
        let vals: Vec<Label0110> =
            ls.iter().map(|o| o.expect("all edges lie on faces")).collect();
        out.push(
            TrianglePuzzle0110::from_edge_labels(n, vals)
                .expect("backtracking enforces the face rule"),
        );
    });
    let edges = grid.edges().to_vec();
    out.sort_by_cached_key(|p| edges.iter().map(|&e| p.label(e) as u8).collect::<Vec<_>>());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_puzzle_counts() {
        let expected = [1usize, 6, 48, 528];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(enumerate_puzzles_123(n, None).unwrap().len(), e, "n = {n}");
            assert_eq!(
                enumerate_puzzles_0110(n, None, PieceFilter::None).unwrap().len(),
                e,
                "n = {n}"
            );
        }
    }

    #[test]
    fn boundary_splits_the_free_count() {
        let n = 2;
        let all = enumerate_puzzles_123(n, None).unwrap();
        let mut grouped = 0usize;
        let mut boundaries: Vec<[Vec<u8>; 3]> = all.iter().map(|p| p.boundary()).collect();
        boundaries.sort();
        boundaries.dedup();
        for b in &boundaries {
            grouped += enumerate_puzzles_123(n, Some(b)).unwrap().len();
        }
        assert_eq!(grouped, all.len());
    }

    #[test]
    fn piece_filters_only_shrink() {
        let n = 3;
        let all = enumerate_puzzles_0110(n, None, PieceFilter::None).unwrap().len();
        let no_down = enumerate_puzzles_0110(n, None, PieceFilter::NoDownTens).unwrap().len();
        let no_up = enumerate_puzzles_0110(n, None, PieceFilter::NoUpTens).unwrap().len();
        let none = enumerate_puzzles_0110(n, None, PieceFilter::NoTens).unwrap().len();
        assert!(no_down <= all && no_up <= all && none <= no_down && none <= no_up);
        let survivors = enumerate_puzzles_0110(n, None, PieceFilter::NoDownTens).unwrap();
        let grid = crate::grid::TriGrid::new(n);
        for p in &survivors {
            for f in grid.faces() {
                if !f.is_up() {
                    assert!(!p.face_is_ten(*f));
                }
            }
        }
    }

    #[test]
    fn bad_boundary_shapes_are_rejected() {
        let sides = [vec![1u8], vec![2], vec![3, 3]];
        assert!(matches!(
            enumerate_puzzles_123(1, Some(&sides)),
            Err(EnumerateError::BadBoundaryShape { .. })
        ));
        let bad = [vec![9u8], vec![2], vec![3]];
        assert!(matches!(
            enumerate_puzzles_123(1, Some(&bad)),
            Err(EnumerateError::BadBoundary(_))
        ));
    }
}
