//! Triangle puzzles vs rank-3 interlacing arrays.

use itertools::Itertools;

use crate::grid::{TriDir, TriEdge, TriGrid};
use crate::maps::MapError;
use crate::objects::{InterlacingArray, TrianglePuzzle123};

/// Reads a puzzle into a rank-3 array: flat row `k` is the clockwise
/// boundary of the size-`k` sub-triangle hanging off the basepoint.
pub fn array_from_puzzle(p: &TrianglePuzzle123) -> InterlacingArray {
    let n = p.side();
    let grid = TriGrid::new(n);
    let rows: Vec<Vec<u8>> = (1..=n)
        .map(|k| grid.boundary(k).iter().map(|&e| p.label(e)).collect())
        .collect();
    InterlacingArray::from_flat_rows(&InterlacingArray::standard_alphabet(3), rows)
        .expect("clockwise sub-triangle readings of a valid puzzle interlace")
}

fn third(x: u8, y: u8, context: &str) -> Result<u8, MapError> {
    if x == y {
        return Err(MapError::NotInterlacing {
            reason: format!("{context}: labels {x} and {y} clash"),
        });
    }
    Ok(6 - x - y)
}

/// Completes one strip of faces between boundary words `a` (outer, length
/// `k + 2`) and `b` (inner, length `k - 1`).  Labels are forced face by
/// face; the result lists the `2(k - 1)` interior edges in propagation
/// order, alternating between the lower and upper edge of each zigzag step.
///
/// Fails exactly when the pair `(a, b)` is not interlacing in the strip
/// sense checked by [`strip_interlacing`].
pub fn fill_one_row(a: &[u8], b: &[u8]) -> Result<Vec<u8>, MapError> {
    if a.len() != b.len() + 3 {
        return Err(MapError::StripShape {
            a_len: a.len(),
            b_len: b.len(),
        });
    }
    let k = b.len() + 1;
    let mut out = Vec::with_capacity(2 * (k - 1));
    let mut cur = third(a[0], a[1], "first face")?;
    for t in 0..k - 1 {
        out.push(cur);
        let nw = third(cur, b[t], "downward face")?;
        out.push(nw);
        cur = third(nw, a[t + 2], "upward face")?;
    }
    if cur != a[k + 1] {
        return Err(MapError::NotInterlacing {
            reason: format!("last face forces {cur}, boundary has {}", a[k + 1]),
        });
    }
    Ok(out)
}

/// Checks the strip interlacing condition on words `a` (length `k + 2`) and
/// `b` (length `k - 1`) over `{1, 2, 3}`: every symbol occurs once more in
/// `a` than in `b`, and the occurrences alternate.  Positions compare with
/// `a` indexed from 0 and `b` indexed from 1, reflecting that `b` sits one
/// half-step inset under `a`: consecutive `a` positions of a symbol must
/// bracket exactly one `b` position.
pub fn strip_interlacing(a: &[u8], b: &[u8]) -> bool {
    if a.len() != b.len() + 3 {
        return false;
    }
    for s in 1u8..=3 {
        let ja: Vec<usize> = a.iter().positions(|&x| x == s).collect();
        let kb: Vec<usize> = b.iter().positions(|&x| x == s).map(|p| p + 1).collect();
        if ja.len() != kb.len() + 1 {
            return false;
        }
        for (t, &kpos) in kb.iter().enumerate() {
            if !(ja[t] <= kpos && kpos < ja[t + 1]) {
                return false;
            }
        }
    }
    true
}

/// Rebuilds the puzzle whose clockwise sub-triangle readings give the array.
/// Works layer by layer: layer `k` contributes the new boundary edges of the
/// size-`k` sub-triangle and fills the strip between layers `k - 1` and `k`.
pub fn puzzle_from_array(t: &InterlacingArray) -> Result<TrianglePuzzle123, MapError> {
    if t.rank() != 3 {
        return Err(MapError::WrongRank {
            expected: 3,
            found: t.rank(),
        });
    }
    if t.alphabet() != [1, 2, 3] {
        return Err(MapError::NonStandardAlphabet { rank: 3 });
    }
    let n = t.height();
    let grid = TriGrid::new(n);
    let mut labels = vec![0u8; grid.edge_count()];
    let set = |labels: &mut Vec<u8>, e: TriEdge, v: u8| {
        let idx = grid.edge_index(e).expect("edge in range");
        debug_assert_eq!(labels[idx], 0, "edge assigned twice");
        labels[idx] = v;
    };
    for k in 1..=n {
        set(&mut labels, TriEdge::new(k - 1, 0, TriDir::NW), t.entry(1, k, k));
        for j in 1..=k {
            set(&mut labels, TriEdge::new(k - j, j, TriDir::NE), t.entry(2, j, k));
        }
        set(&mut labels, TriEdge::new(0, k - 1, TriDir::S), t.entry(3, 1, k));
        if k >= 2 {
            let mut a = Vec::with_capacity(k + 2);
            a.push(t.entry(1, k, k));
            a.extend_from_slice(t.triangle_row(2, k));
            a.push(t.entry(3, 1, k));
            let b = t.triangle_row(2, k - 1);
            let inner = fill_one_row(&a, b).map_err(|e| MapError::InvariantViolation {
                context: format!("strip fill at layer {k} of a validated array: {e}"),
            })?;
            for (step, pair) in inner.chunks_exact(2).enumerate() {
                set(&mut labels, TriEdge::new(k - 1 - step, step, TriDir::S), pair[0]);
                set(&mut labels, TriEdge::new(k - 2 - step, step + 1, TriDir::NW), pair[1]);
            }
        }
    }
    TrianglePuzzle123::from_edge_labels(n, labels).map_err(|e| MapError::InvariantViolation {
        context: format!("rebuilt labeling failed validation: {e}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_row_fill_matches_worked_example() {
        let a = [3, 1, 3, 3, 2, 1];
        let b = [3, 3, 1];
        assert!(strip_interlacing(&a, &b));
        assert_eq!(fill_one_row(&a, &b).unwrap(), vec![2, 1, 2, 1, 2, 3]);
    }

    #[test]
    fn one_row_fill_rejects_clashes() {
        let a = [1, 1, 2];
        assert!(!strip_interlacing(&a, &[]));
        assert!(matches!(
            fill_one_row(&a, &[]),
            Err(MapError::NotInterlacing { .. })
        ));
    }

    #[test]
    fn smallest_strip_checks_the_single_face() {
        assert!(strip_interlacing(&[1, 2, 3], &[]));
        assert_eq!(fill_one_row(&[1, 2, 3], &[]).unwrap(), Vec::<u8>::new());
        assert!(fill_one_row(&[1, 2, 1], &[]).is_err());
    }

    #[test]
    fn fill_agrees_with_strip_check() {
        for a0 in 1u8..=3 {
            for a1 in 1u8..=3 {
                for a2 in 1u8..=3 {
                    for a3 in 1u8..=3 {
                        for b0 in 1u8..=3 {
                            let a = [a0, a1, a2, a3];
                            let b = [b0];
                            assert_eq!(
                                fill_one_row(&a, &b).is_ok(),
                                strip_interlacing(&a, &b),
                                "a={a:?} b={b:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn round_trip_on_a_small_array() {
        let t = InterlacingArray::from_triangles(
            &InterlacingArray::standard_alphabet(3),
            &[
                vec![vec![1], vec![1, 2], vec![1, 2, 1]],
                vec![vec![2], vec![1, 3], vec![3, 1, 2]],
                vec![vec![3], vec![2, 3], vec![3, 2, 3]],
            ],
        )
        .unwrap();
        let p = puzzle_from_array(&t).unwrap();
        assert_eq!(array_from_puzzle(&p), t);
    }

    #[test]
    fn non_standard_alphabet_is_rejected() {
        let t = InterlacingArray::from_flat_rows(&[2, 3, 4], vec![vec![2, 3, 4]]).unwrap();
        assert!(matches!(
            puzzle_from_array(&t),
            Err(MapError::NonStandardAlphabet { .. })
        ));
    }
}
