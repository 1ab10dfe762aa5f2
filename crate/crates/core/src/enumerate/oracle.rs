//! A deliberately naive second opinion: enumerate arrays by generating
//! every content-valid row and testing the interlacing condition with a
//! direct per-symbol scan.  Shares no pruning or window logic with the
//! row-extension engine, so agreement between the two is meaningful.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::objects::{array::row_scale, InterlacingArray};

/// Every row of length `alphabet.len() * k` containing each symbol exactly
/// `k` times, in lexicographic slot order.
fn all_content_rows(alphabet: &[u8], k: usize) -> Vec<Vec<u8>> {
    fn rec(alphabet: &[u8], left: &mut [usize], row: &mut Vec<u8>, len: usize, out: &mut Vec<Vec<u8>>) {
        if row.len() == len {
            out.push(row.clone());
            return;
        }
        for s in 0..alphabet.len() {
            if left[s] > 0 {
                left[s] -= 1;
                row.push(alphabet[s]);
                rec(alphabet, left, row, len, out);
                row.pop();
                left[s] += 1;
            }
        }
    }
    let mut out = Vec::new();
    let mut left = vec![k; alphabet.len()];
    rec(alphabet, &mut left, &mut Vec::new(), alphabet.len() * k, &mut out);
    out
}

/// Direct alternation test: for each symbol, the doubled coordinates in the
/// longer row and the shorter row must strictly alternate, starting and
/// ending with the longer row.
fn rows_interlace(
    alphabet: &[u8],
    lower: &[u8],
    lower_scale: &[i64],
    upper: &[u8],
    upper_scale: &[i64],
) -> bool {
    for &s in alphabet {
        let c: Vec<i64> = upper
            .iter()
            .zip(upper_scale)
            .filter_map(|(&x, &h)| (x == s).then_some(h))
            .collect();
        let p: Vec<i64> = lower
            .iter()
            .zip(lower_scale)
            .filter_map(|(&x, &h)| (x == s).then_some(h))
            .collect();
        if c.len() != p.len() + 1 {
            return false;
        }
        for t in 0..p.len() {
            if !(c[t] < p[t] && p[t] < c[t + 1]) {
                return false;
            }
        }
    }
    true
}

/// Enumerates all arrays of the given alphabet and height by generate and
/// test.  Results are sorted by their flat rows.
pub fn oracle_enumerate_arrays(alphabet: &[u8], height: usize) -> Vec<InterlacingArray> {
    let m = alphabet.len();
    let mut stacks: Vec<Vec<Vec<u8>>> = vec![Vec::new()];
    for k in 1..=height {
        let candidates = all_content_rows(alphabet, k);
        if k == 1 {
            stacks = candidates.into_iter().map(|r| vec![r]).collect();
            continue;
        }
        let lower_scale = row_scale(m, height, k - 1);
        let upper_scale = row_scale(m, height, k);
        let distinct_tops: HashSet<&Vec<u8>> =
            stacks.iter().map(|st| st.last().expect("nonempty stack")).collect();
        let fits: HashMap<Vec<u8>, Vec<usize>> = distinct_tops
            .into_par_iter()
            .map(|top| {
                let idx: Vec<usize> = candidates
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| {
                        rows_interlace(alphabet, top, &lower_scale, c, &upper_scale)
                    })
                    .map(|(i, _)| i)
                    .collect();
                (top.clone(), idx)
            })
            .collect();
        stacks = stacks
            .into_par_iter()
            .flat_map_iter(|st| {
                let good = &fits[st.last().expect("nonempty stack")];
                good.iter()
                    .map(|&i| {
                        let mut next = st.clone();
                        next.push(candidates[i].clone());
                        next
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    let mut arrays: Vec<InterlacingArray> = stacks
        .into_par_iter()
        .map(|rows| {
            InterlacingArray::from_flat_rows(alphabet, rows)
                .expect("oracle output passes validation")
        })
        .collect();
    arrays.par_sort_unstable_by(|a, b| a.flat_rows().cmp(b.flat_rows()));
    arrays
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_counts_for_small_ranks() {
        assert_eq!(oracle_enumerate_arrays(&[1], 3).len(), 1);
        assert_eq!(oracle_enumerate_arrays(&[1, 2], 3).len(), 8);
        assert_eq!(oracle_enumerate_arrays(&[1, 2, 3], 2).len(), 48);
    }

    #[test]
    fn content_row_generation_counts_multiset_permutations() {
        // 3 symbols twice each: 6! / 2^3 = 90 arrangements.
        assert_eq!(all_content_rows(&[1, 2, 3], 2).len(), 90);
    }
}
