//! Face-by-face backtracking over square-grid labelings.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::enumerate::{backtrack_faces, EnumerateError};
use crate::grid::SquareGrid;
use crate::objects::{SquareLabeling, ValidationError};

/// Valid `(W, N, E, S)` label tuples for a diagonal face: all four labels
/// distinct.
fn diagonal_tuples() -> Vec<[u8; 4]> {
    let mut out = Vec::with_capacity(24);
    for w in 1u8..=4 {
        for n in 1u8..=4 {
            for e in 1u8..=4 {
                for s in 1u8..=4 {
                    let t = [w, n, e, s];
                    let distinct = (0..4).all(|i| (i + 1..4).all(|j| t[i] != t[j]));
                    if distinct {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

/// Valid `(W, N, E, S)` label tuples for an off-diagonal face: opposite
/// pairs in one of the two allowed orientations, with distinct values.
fn off_diagonal_tuples() -> Vec<[u8; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 1u8..=4 {
        for b in 1u8..=4 {
            if a != b {
                out.push([a, b, b, a]); // W = S, N = E
                out.push([b, a, b, a]); // N = S, W = E
            }
        }
    }
    out
}

fn face_tuples(grid: &SquareGrid, fixed_boundary: bool) -> Vec<([usize; 4], Vec<[u8; 4]>)> {
    let diag = diagonal_tuples();
    let off = off_diagonal_tuples();
    let mut order = grid.faces_hook_order();
    if fixed_boundary {
        order.reverse();
    }
    order
        .into_iter()
        .map(|(x, y)| {
            let e = SquareGrid::face_edges(x, y);
            let idx = [
                grid.edge_index(e[0]).expect("face edge in range"),
                grid.edge_index(e[1]).expect("face edge in range"),
                grid.edge_index(e[2]).expect("face edge in range"),
                grid.edge_index(e[3]).expect("face edge in range"),
            ];
            let cands = if x == y { diag.clone() } else { off.clone() };
            (idx, cands)
        })
        .collect()
}

/// All valid labelings of the `n` by `n` grid, optionally with the four
/// boundary words fixed (west up, north right, east down, south leftward,
/// i.e. clockwise from the origin corner).  Results are sorted by their
/// edge label vectors.
pub fn enumerate_square_labelings(
    n: usize,
    boundary: Option<&[Vec<u8>; 4]>,
) -> Result<Vec<SquareLabeling>, EnumerateError> {
    let grid = SquareGrid::new(n);
    let mut labels: Vec<Option<u8>> = vec![None; grid.edge_count()];
    if let Some(sides) = boundary {
        if sides.iter().any(|w| w.len() != n) {
            return Err(EnumerateError::BadBoundaryShape { expected: 4, len: n });
        }
        let flat: Vec<u8> = sides.concat();
        for (&e, &l) in grid.boundary(n).iter().zip(flat.iter()) {
            if !(1..=4).contains(&l) {
                return Err(EnumerateError::BadBoundary(ValidationError::BadLabel {
                    label: l.to_string(),
                }));
            }
            labels[grid.edge_index(e).expect("boundary edge in range")] = Some(l);
        }
    }
    let faces = face_tuples(&grid, boundary.is_some());
    let mut out = Vec::new();
    backtrack_faces(&mut labels, &faces, 0, &mut |ls| {
        let vals: Vec<u8> = ls.iter().map(|o| o.expect("all edges lie on faces")).collect();
        out.push(
            SquareLabeling::from_edge_labels(n, vals).expect("backtracking enforces face rules"),
        );
    });
    let edges = grid.edges().to_vec();
    out.sort_by_cached_key(|d| edges.iter().map(|&e| d.label(e)).collect::<Vec<_>>());
    Ok(out)
}

/// Counts labelings where every face, diagonal or not, carries four
/// distinct labels.  Parallelized over the first face's choices; heavier
/// sides take a while.
pub fn count_face_distinct_square_labelings(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::from(1u8);
    }
    let grid = SquareGrid::new(n);
    let diag = diagonal_tuples();
    let order = grid.faces_hook_order();
    let faces: Vec<([usize; 4], Vec<[u8; 4]>)> = order
        .into_iter()
        .map(|(x, y)| {
            let e = SquareGrid::face_edges(x, y);
            (
                [
                    grid.edge_index(e[0]).expect("face edge in range"),
                    grid.edge_index(e[1]).expect("face edge in range"),
                    grid.edge_index(e[2]).expect("face edge in range"),
                    grid.edge_index(e[3]).expect("face edge in range"),
                ],
                diag.clone(),
            )
        })
        .collect();
    let first = faces[0].clone();
    let rest = &faces[1..];
    let total: u64 = first
        .1
        .par_iter()
        .map(|tuple| {
            let mut labels: Vec<Option<u8>> = vec![None; grid.edge_count()];
            for (t, &idx) in first.0.iter().enumerate() {
                labels[idx] = Some(tuple[t]);
            }
            let mut count = 0u64;
            backtrack_faces(&mut labels, rest, 0, &mut |_| count += 1);
            count
        })
        .sum();
    BigUint::from(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_tables_have_expected_sizes() {
        assert_eq!(diagonal_tuples().len(), 24);
        assert_eq!(off_diagonal_tuples().len(), 24);
    }

    #[test]
    fn free_labeling_counts() {
        let expected = [1usize, 24, 1344];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(enumerate_square_labelings(n, None).unwrap().len(), e, "n = {n}");
        }
    }

    #[test]
    fn face_distinct_counts_match_for_small_sides() {
        assert_eq!(count_face_distinct_square_labelings(0), BigUint::from(1u8));
        assert_eq!(count_face_distinct_square_labelings(1), BigUint::from(24u8));
        assert_eq!(count_face_distinct_square_labelings(2), BigUint::from(1344u16));
    }

    #[test]
    fn fixed_boundary_restricts_enumeration() {
        let n = 2;
        let all = enumerate_square_labelings(n, None).unwrap();
        let mut boundaries: Vec<Vec<u8>> = all
            .iter()
            .map(|d| {
                let grid = SquareGrid::new(n);
                grid.boundary(n).iter().map(|&e| d.label(e)).collect()
            })
            .collect();
        boundaries.sort();
        boundaries.dedup();
        let mut grouped = 0usize;
        for b in &boundaries {
            let sides: [Vec<u8>; 4] = [
                b[0..n].to_vec(),
                b[n..2 * n].to_vec(),
                b[2 * n..3 * n].to_vec(),
                b[3 * n..4 * n].to_vec(),
            ];
            grouped += enumerate_square_labelings(n, Some(&sides)).unwrap().len();
        }
        assert_eq!(grouped, all.len());
    }
}
