//! Row-by-row color counting on the triangular lattice and on king graphs,
//! plus exhaustive enumeration of basepointed triangle colorings.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::objects::{coloring::tri_vertex_index, TriangleColoring};

/// Proper rows of length `width` over `colors` colors, consecutive entries
/// distinct.
fn proper_rows(width: usize, colors: u8, first_fixed: Option<u8>) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut row = Vec::with_capacity(width);
    fn rec(width: usize, colors: u8, row: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if row.len() == width {
            out.push(row.clone());
            return;
        }
        for c in 0..colors {
            if row.last() != Some(&c) {
                row.push(c);
                rec(width, colors, row, out);
                row.pop();
            }
        }
    }
    if width == 0 {
        return vec![Vec::new()];
    }
    match first_fixed {
        Some(c) => {
            row.push(c);
            rec(width, colors, &mut row, &mut out);
        }
        None => rec(width, colors, &mut row, &mut out),
    }
    out
}

fn triangle_count(n: usize, fix_base: bool) -> BigUint {
    // Bottom row has n + 1 vertices; vertex (r + 1, p) is adjacent to
    // (r, p) and (r, p + 1) below, and to its row neighbors.
    let bottom = proper_rows(n + 1, 4, fix_base.then_some(0));
    let mut level: HashMap<Vec<u8>, BigUint> = HashMap::new();
    for row in bottom {
        *level.entry(row).or_default() += 1u8;
    }
    for r in 1..=n {
        let width = n + 1 - r;
        let uppers = proper_rows(width, 4, None);
        let mut next: HashMap<Vec<u8>, BigUint> = HashMap::new();
        for (t, count) in &level {
            for u in &uppers {
                if (0..width).all(|p| u[p] != t[p] && u[p] != t[p + 1]) {
                    *next.entry(u.clone()).or_default() += count;
                }
            }
        }
        level = next;
    }
    level.values().sum()
}

/// Number of proper 4-colorings of the side-`n` triangular lattice with the
/// basepoint colored 0.
pub fn count_triangle_colorings(n: usize) -> BigUint {
    triangle_count(n, true)
}

/// Number of proper 4-colorings with no basepoint restriction.
pub fn count_colorings_free_base(n: usize) -> BigUint {
    triangle_count(n, false)
}

/// Number of proper colorings of the king graph on `side` by `side`
/// vertices: horizontal, vertical and both diagonal neighbors must differ.
pub fn count_colorings_king(side: usize, colors: u8) -> BigUint {
    if side == 0 {
        return BigUint::from(1u8);
    }
    let rows = proper_rows(side, colors, None);
    let mut level: HashMap<Vec<u8>, BigUint> = HashMap::new();
    for row in &rows {
        *level.entry(row.clone()).or_default() += 1u8;
    }
    for _ in 1..side {
        let mut next: HashMap<Vec<u8>, BigUint> = HashMap::new();
        for (t, count) in &level {
            for u in &rows {
                let ok = (0..side).all(|p| {
                    u[p] != t[p]
                        && (p == 0 || u[p] != t[p - 1])
                        && (p + 1 == side || u[p] != t[p + 1])
                });
                if ok {
                    *next.entry(u.clone()).or_default() += count;
                }
            }
        }
        level = next;
    }
    level.values().sum()
}

/// All proper 4-colorings with basepoint color 0, as objects.
pub fn enumerate_colorings(n: usize) -> Vec<TriangleColoring> {
    let total = (n + 1) * (n + 2) / 2;
    let mut colors = vec![u8::MAX; total];
    let mut out = Vec::new();
    // Vertices in row-major order from the bottom; each new vertex checks
    // its already-colored neighbors.
    let coords: Vec<(usize, usize)> = (0..=n)
        .flat_map(|r| (0..=(n - r)).map(move |p| (r, p)))
        .collect();
    fn rec(
        n: usize,
        coords: &[(usize, usize)],
        at: usize,
        colors: &mut Vec<u8>,
        out: &mut Vec<TriangleColoring>,
    ) {
        if at == coords.len() {
            out.push(
                TriangleColoring::from_colors(n, colors.clone())
                    .expect("backtracking keeps colorings proper"),
            );
            return;
        }
        let vid = |r, p| tri_vertex_index(n, r, p).expect("vertex in range");
        let (r, p) = coords[at];
        let idx = vid(r, p);
        let choices: Vec<u8> = if (r, p) == (0, 0) {
            vec![0]
        } else {
            (0..4).collect()
        };
        for c in choices {
            let clash = (p > 0 && colors[vid(r, p - 1)] == c)
                || (r > 0 && colors[vid(r - 1, p)] == c)
                || (r > 0 && colors[vid(r - 1, p + 1)] == c);
            if !clash {
                colors[idx] = c;
                rec(n, coords, at + 1, colors, out);
                colors[idx] = u8::MAX;
            }
        }
    }
    rec(n, &coords, 0, &mut colors, &mut out);
    out.sort_by_cached_key(|c| {
        (0..=n)
            .flat_map(|r| (0..=(n - r)).map(move |p| (r, p)))
            .map(|(r, p)| c.color(r, p))
            .collect::<Vec<_>>()
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_coloring_counts() {
        let free = [4u32, 24, 192, 2112, 32640];
        let based = [1u32, 6, 48, 528, 8160];
        for n in 0..=4 {
            assert_eq!(count_colorings_free_base(n), BigUint::from(free[n]), "free n = {n}");
            assert_eq!(count_triangle_colorings(n), BigUint::from(based[n]), "based n = {n}");
        }
    }

    #[test]
    fn king_graph_counts() {
        let expected = [5u32, 120, 6720, 935040];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(count_colorings_king(i + 1, 5), BigUint::from(e), "side = {}", i + 1);
        }
    }

    #[test]
    fn enumeration_agrees_with_the_count() {
        for n in 0..=3 {
            let all = enumerate_colorings(n);
            assert_eq!(BigUint::from(all.len()), count_triangle_colorings(n));
        }
    }
}
