//! Square-grid labelings vs rank-4 interlacing arrays.

use crate::grid::{SqDir, SqEdge, SquareGrid};
use crate::maps::MapError;
use crate::objects::{InterlacingArray, SquareLabeling};

/// Reads a labeling into a rank-4 array: flat row `k` is the clockwise
/// boundary of the `k` by `k` subgrid at the origin corner.
pub fn array_from_labeling(d: &SquareLabeling) -> InterlacingArray {
    let n = d.side();
    let grid = SquareGrid::new(n);
    let rows: Vec<Vec<u8>> = (1..=n)
        .map(|k| grid.boundary(k).iter().map(|&e| d.label(e)).collect())
        .collect();
    InterlacingArray::from_flat_rows(&InterlacingArray::standard_alphabet(4), rows)
        .expect("clockwise subgrid readings of a valid labeling interlace")
}

/// Rebuilds the labeling whose clockwise subgrid readings give the array.
/// Hook by hook, the new outer boundary edges come straight from flat row
/// `k` and the interior edges of the hook are forced one face at a time.
pub fn labeling_from_array(t: &InterlacingArray) -> Result<SquareLabeling, MapError> {
    if t.rank() != 4 {
        return Err(MapError::WrongRank {
            expected: 4,
            found: t.rank(),
        });
    }
    if t.alphabet() != [1, 2, 3, 4] {
        return Err(MapError::NonStandardAlphabet { rank: 4 });
    }
    let n = t.height();
    let grid = SquareGrid::new(n);
    let mut labels = vec![0u8; grid.edge_count()];
    let get = |labels: &[u8], e: SqEdge| -> u8 {
        let v = labels[grid.edge_index(e).expect("edge in range")];
        debug_assert_ne!(v, 0, "edge read before assignment");
        v
    };
    let set = |labels: &mut [u8], e: SqEdge, v: u8| {
        let idx = grid.edge_index(e).expect("edge in range");
        debug_assert_eq!(labels[idx], 0, "edge assigned twice");
        labels[idx] = v;
    };
    let bug = |what: String| MapError::InvariantViolation { context: what };

    for k in 1..=n {
        // New boundary edges of the k-by-k subgrid, read clockwise:
        // west side up, north side right, east side down, south side left.
        set(&mut labels, SqEdge::new(0, k - 1, SqDir::V), t.entry(1, k, k));
        for x in 0..k {
            set(&mut labels, SqEdge::new(x, k, SqDir::H), t.entry(2, x + 1, k));
        }
        for y in 0..k {
            set(&mut labels, SqEdge::new(k, y, SqDir::V), t.entry(3, k - y, k));
        }
        set(&mut labels, SqEdge::new(k - 1, 0, SqDir::H), t.entry(4, 1, k));
        if k == 1 {
            let f = SquareGrid::face_edges(0, 0).map(|e| get(&labels, e));
            if !all_distinct(&f) {
                return Err(bug(format!("corner face of layer 1 got labels {f:?}")));
            }
            continue;
        }
        // Horizontal leg of the hook: faces (x, k-1) for x < k-1, each
        // forcing its east edge from the three known sides.
        for x in 0..k - 1 {
            let [w, nn, e, s] = SquareGrid::face_edges(x, k - 1);
            let (wv, nv, sv) = (get(&labels, w), get(&labels, nn), get(&labels, s));
            let ev = if sv == wv {
                nv
            } else if sv == nv {
                wv
            } else {
                return Err(bug(format!(
                    "face ({x}, {}) admits no east label with W={wv} N={nv} S={sv}",
                    k - 1
                )));
            };
            if wv == nv {
                return Err(bug(format!("face ({x}, {}) repeats the pair rule", k - 1)));
            }
            set(&mut labels, e, ev);
        }
        // Vertical leg: faces (k-1, y) for y < k-1, each forcing its north
        // edge.
        for y in 0..k - 1 {
            let [w, nn, e, s] = SquareGrid::face_edges(k - 1, y);
            let (wv, ev, sv) = (get(&labels, w), get(&labels, e), get(&labels, s));
            let nv = if wv == sv {
                ev
            } else if wv == ev {
                sv
            } else {
                return Err(bug(format!(
                    "face ({}, {y}) admits no north label with W={wv} E={ev} S={sv}",
                    k - 1
                )));
            };
            if sv == ev {
                return Err(bug(format!("face ({}, {y}) repeats the pair rule", k - 1)));
            }
            set(&mut labels, nn, nv);
        }
        // Diagonal corner face of the hook is now fully labeled.
        let f = SquareGrid::face_edges(k - 1, k - 1).map(|e| get(&labels, e));
        if !all_distinct(&f) {
            return Err(bug(format!(
                "corner face of layer {k} got labels {f:?}"
            )));
        }
    }
    SquareLabeling::from_edge_labels(n, labels).map_err(|e| MapError::InvariantViolation {
        context: format!("rebuilt labeling failed validation: {e}"),
    })
}

fn all_distinct(f: &[u8; 4]) -> bool {
    for i in 0..4 {
        for j in i + 1..4 {
            if f[i] == f[j] {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_face_round_trip() {
        let t = InterlacingArray::from_flat_rows(
            &InterlacingArray::standard_alphabet(4),
            vec![vec![1, 2, 3, 4]],
        )
        .unwrap();
        let d = labeling_from_array(&t).unwrap();
        assert_eq!(d.label(SqEdge::new(0, 0, SqDir::V)), 1);
        assert_eq!(d.label(SqEdge::new(0, 1, SqDir::H)), 2);
        assert_eq!(d.label(SqEdge::new(1, 0, SqDir::V)), 3);
        assert_eq!(d.label(SqEdge::new(0, 0, SqDir::H)), 4);
        assert_eq!(array_from_labeling(&d), t);
    }

    #[test]
    fn wrong_rank_is_rejected() {
        let t = InterlacingArray::from_flat_rows(
            &InterlacingArray::standard_alphabet(3),
            vec![vec![1, 2, 3]],
        )
        .unwrap();
        assert!(matches!(
            labeling_from_array(&t),
            Err(MapError::WrongRank { expected: 4, .. })
        ));
    }
}
