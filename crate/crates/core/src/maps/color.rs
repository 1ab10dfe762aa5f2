//! Vertex 4-colorings vs triangle puzzles.
//!
//! The edge label is determined by its endpoint colors (sum, folded back
//! into `1..=3`), and conversely a puzzle determines the coloring once the
//! basepoint color is pinned to `0`.

use crate::grid::{TriDir, TriEdge, TriGrid};
use crate::maps::MapError;
use crate::objects::{TriangleColoring, TrianglePuzzle123};

fn edge_label(a: u8, b: u8) -> u8 {
    let i = a + b;
    if i <= 3 {
        i
    } else {
        6 - i
    }
}

fn step_color(cur: u8, label: u8) -> u8 {
    if cur == 0 {
        label
    } else if cur == label {
        0
    } else {
        6 - cur - label
    }
}

/// Labels every edge by the folded sum of its endpoint colors.
pub fn coloring_to_puzzle(c: &TriangleColoring) -> TrianglePuzzle123 {
    let n = c.side();
    let grid = TriGrid::new(n);
    let labels: Vec<u8> = grid
        .edges()
        .iter()
        .map(|&e| {
            let (u, v) = c.edge_colors(e);
            edge_label(u, v)
        })
        .collect();
    TrianglePuzzle123::from_edge_labels(n, labels)
        .expect("edge labels induced by a proper coloring form a puzzle")
}

/// Recovers the coloring with basepoint color `0` by propagating colors
/// across edges from the bottom-left corner.
pub fn puzzle_to_coloring(p: &TrianglePuzzle123) -> Result<TriangleColoring, MapError> {
    let n = p.side();
    let grid = TriGrid::new(n);
    let vague = u8::MAX;
    let mut colors = vec![vague; (n + 1) * (n + 2) / 2];
    let at = |r: usize, pp: usize| -> usize { r * (n + 1) - r * r.saturating_sub(1) / 2 + pp };
    colors[at(0, 0)] = 0;
    // Sweep rows bottom-up; within a row left to right.  Each vertex other
    // than the basepoint has a neighbor earlier in this order.
    for r in 0..=n {
        for pp in 0..=(n - r) {
            if colors[at(r, pp)] != vague {
                continue;
            }
            let (e, from) = if pp > 0 {
                (TriEdge::new(r, pp - 1, TriDir::S), at(r, pp - 1))
            } else {
                (TriEdge::new(r - 1, 0, TriDir::NW), at(r - 1, 0))
            };
            colors[at(r, pp)] = step_color(colors[from], p.label(e));
        }
    }
    // The sweep used one spanning tree; validation of the result checks
    // every remaining edge agrees with the labels.
    let c = TriangleColoring::from_colors(n, colors).map_err(|e| MapError::InvariantViolation {
        context: format!("propagated colors are not proper: {e}"),
    })?;
    for &e in grid.edges() {
        let (u, v) = c.edge_colors(e);
        if edge_label(u, v) != p.label(e) {
            return Err(MapError::InvariantViolation {
                context: format!("edge {} disagrees with propagated colors", e.key()),
            });
        }
    }
    Ok(c)
}

/// Colors of the `3n` boundary vertices, clockwise from the basepoint,
/// forced by the boundary words alone.  `sides` holds the left, right and
/// bottom words in clockwise reading order.  Fails when the propagation
/// does not close up around the corner.
pub fn boundary_colors(sides: &[Vec<u8>; 3]) -> Result<Vec<u8>, MapError> {
    let n = sides[0].len();
    if sides.iter().any(|s| s.len() != n) {
        return Err(MapError::UnrealizableBoundary {
            reason: "side words have different lengths".into(),
        });
    }
    if let Some(&l) = sides.iter().flatten().find(|&&l| !(1..=3).contains(&l)) {
        return Err(MapError::UnrealizableBoundary {
            reason: format!("label {l} is not in 1..=3"),
        });
    }
    let mut out = Vec::with_capacity(3 * n);
    let mut cur = 0u8;
    for &l in sides.iter().flatten() {
        out.push(cur);
        cur = step_color(cur, l);
    }
    if cur != 0 {
        return Err(MapError::UnrealizableBoundary {
            reason: format!("walk returns to the basepoint with color {cur}"),
        });
    }
    Ok(out)
}

/// Inverse of [`boundary_colors`]: reads the boundary words off a cyclic
/// sequence of `3n` boundary vertex colors starting at the basepoint.
pub fn boundary_labels(colors: &[u8]) -> Result<[Vec<u8>; 3], MapError> {
    if colors.len() % 3 != 0 || colors.is_empty() {
        return Err(MapError::UnrealizableBoundary {
            reason: format!("{} colors cannot wrap a triangle", colors.len()),
        });
    }
    if colors[0] != 0 {
        return Err(MapError::UnrealizableBoundary {
            reason: format!("walk starts with color {}, not 0", colors[0]),
        });
    }
    let n = colors.len() / 3;
    let mut labels = Vec::with_capacity(3 * n);
    for i in 0..colors.len() {
        let a = colors[i];
        let b = colors[(i + 1) % colors.len()];
        if a == b || a > 3 || b > 3 {
            return Err(MapError::UnrealizableBoundary {
                reason: format!("consecutive colors {a}, {b} admit no label"),
            });
        }
        labels.push(edge_label(a, b));
    }
    let bottom = labels.split_off(2 * n);
    let right = labels.split_off(n);
    Ok([labels, right, bottom])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_face_coloring_round_trip() {
        // Edge order for side 1: S(0,0), NW(0,0), NE(0,1).
        let p = TrianglePuzzle123::from_edge_labels(1, vec![2, 1, 3]).unwrap();
        let c = puzzle_to_coloring(&p).unwrap();
        assert_eq!(c.color(0, 0), 0);
        assert_eq!(c.color(1, 0), 1);
        assert_eq!(c.color(0, 1), 2);
        assert_eq!(coloring_to_puzzle(&c), p);
    }

    #[test]
    fn boundary_walk_matches_corner_colors() {
        let kappa = boundary_colors(&[vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(kappa, vec![0, 1, 3]);
    }

    #[test]
    fn boundary_walk_rejects_non_closing_words() {
        let err = boundary_colors(&[vec![1], vec![2], vec![2]]).unwrap_err();
        assert!(matches!(err, MapError::UnrealizableBoundary { .. }));
    }

    #[test]
    fn boundary_words_recovered_from_colors() {
        let sides = [vec![1, 2], vec![1, 3], vec![3, 2]];
        let kappa = boundary_colors(&sides).unwrap();
        assert_eq!(boundary_labels(&kappa).unwrap(), sides);
    }
}
