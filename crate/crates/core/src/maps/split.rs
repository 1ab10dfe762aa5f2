//! Rank lowering: splitting a rank-`m` array (`m >= 4`) into a rank-3 piece
//! and a rank-`(m - 1)` piece that share a dual triangle, and merging back.

use num_bigint::BigUint;

use crate::enumerate::{count_arrays, PatternFilter};
use crate::maps::MapError;
use crate::objects::{dual_string, InterlacingArray};
use crate::report::CheckReport;

/// Splits an array of rank `m >= 4` whose first two triangles use only the
/// letters `m - 2`, `m - 1`, `m` into
///
/// * a rank-3 piece over `{m - 2, m - 1, m}` made of the first two
///   triangles plus a forced third triangle, and
/// * a rank-`(m - 1)` piece over `[m]` minus `m - 1` whose first triangle
///   is the row-wise dual (reverse and swap `m - 2` with `m`) of that
///   forced triangle, followed by triangles `3..=m` of the input.
///
/// Row `k` of the forced triangle adds the single letter of multiplicity
/// `k` among `m - 2`, `m - 1`, `m` not accounted for by the first two
/// triangles, in front of row `k - 1`.
pub fn split(t: &InterlacingArray) -> Result<(InterlacingArray, InterlacingArray), MapError> {
    let m = t.rank();
    if m < 4 {
        return Err(MapError::RankTooSmall { found: m });
    }
    if t.alphabet() != InterlacingArray::standard_alphabet(m) {
        return Err(MapError::NonStandardAlphabet { rank: m });
    }
    let n = t.height();
    let big = [(m - 2) as u8, (m - 1) as u8, m as u8];
    let mut forced: Vec<Vec<u8>> = Vec::with_capacity(n);
    let mut prev: Vec<u8> = Vec::new();
    for k in 1..=n {
        let mut budget = [k, k, k];
        for &s in t.triangle_row(1, k).iter().chain(t.triangle_row(2, k)).chain(prev.iter()) {
            let Some(slot) = big.iter().position(|&b| b == s) else {
                return Err(MapError::TopRowShapeMismatch {
                    reason: format!(
                        "letter {s} in row {k} of the first two triangles is below {}",
                        m - 2
                    ),
                });
            };
            if budget[slot] == 0 {
                return Err(MapError::TopRowShapeMismatch {
                    reason: format!("letter {s} occurs more than {k} times around row {k}"),
                });
            }
            budget[slot] -= 1;
        }
        let leftovers: Vec<u8> = big
            .iter()
            .zip(budget)
            .flat_map(|(&s, c)| std::iter::repeat(s).take(c))
            .collect();
        if leftovers.len() != 1 {
            return Err(MapError::TopRowShapeMismatch {
                reason: format!("row {k} leaves {leftovers:?} unaccounted, expected one letter"),
            });
        }
        let single = leftovers[0];
        if single == (m - 1) as u8 {
            return Err(MapError::TopRowShapeMismatch {
                reason: format!(
                    "row {k} forces glue letter {single}, which the rank-{} piece cannot carry",
                    m - 1
                ),
            });
        }
        let mut row = Vec::with_capacity(k);
        row.push(single);
        row.extend_from_slice(&prev);
        prev = row.clone();
        forced.push(row);
    }

    let small_rows: Vec<Vec<u8>> = (1..=n)
        .map(|k| {
            let mut row = Vec::with_capacity(3 * k);
            row.extend_from_slice(t.triangle_row(1, k));
            row.extend_from_slice(t.triangle_row(2, k));
            row.extend_from_slice(&forced[k - 1]);
            row
        })
        .collect();
    let small = InterlacingArray::from_flat_rows(&big, small_rows).map_err(|e| {
        MapError::TopRowShapeMismatch {
            reason: format!("first piece is not interlacing: {e}"),
        }
    })?;

    let mut rest_alphabet: Vec<u8> = (1..=m as u8).collect();
    rest_alphabet.remove(m - 2);
    let rest_rows: Vec<Vec<u8>> = (1..=n)
        .map(|k| {
            let mut row = dual_string(&forced[k - 1], ((m - 2) as u8, m as u8))
                .expect("glue letters were checked while forcing the rows");
            for i in 3..=m {
                row.extend_from_slice(t.triangle_row(i, k));
            }
            row
        })
        .collect();
    let rest = InterlacingArray::from_flat_rows(&rest_alphabet, rest_rows).map_err(|e| {
        MapError::TopRowShapeMismatch {
            reason: format!("second piece is not interlacing: {e}"),
        }
    })?;
    Ok((small, rest))
}

/// Inverse of [`split`]: glues a rank-3 piece over `{m - 2, m - 1, m}` to a
/// rank-`(m - 1)` piece over `[m]` minus `m - 1` along dual first and last
/// triangles.
pub fn merge(
    small: &InterlacingArray,
    rest: &InterlacingArray,
) -> Result<InterlacingArray, MapError> {
    if small.rank() != 3 {
        return Err(MapError::WrongRank {
            expected: 3,
            found: small.rank(),
        });
    }
    let m = rest.rank() + 1;
    if m < 4 {
        return Err(MapError::RankTooSmall { found: m });
    }
    let big = [(m - 2) as u8, (m - 1) as u8, m as u8];
    if small.alphabet() != big {
        return Err(MapError::TopRowShapeMismatch {
            reason: format!(
                "first piece uses alphabet {:?}, expected {:?}",
                small.alphabet(),
                big
            ),
        });
    }
    let mut rest_alphabet: Vec<u8> = (1..=m as u8).collect();
    rest_alphabet.remove(m - 2);
    if rest.alphabet() != rest_alphabet {
        return Err(MapError::TopRowShapeMismatch {
            reason: format!(
                "second piece uses alphabet {:?}, expected {:?}",
                rest.alphabet(),
                rest_alphabet
            ),
        });
    }
    let n = small.height();
    if rest.height() != n {
        return Err(MapError::TopRowShapeMismatch {
            reason: format!("piece heights {n} and {} differ", rest.height()),
        });
    }
    for k in 1..=n {
        let glued = dual_string(small.triangle_row(3, k), ((m - 2) as u8, m as u8)).map_err(
            |_| MapError::TopRowShapeMismatch {
                reason: format!(
                    "glue triangle of the first piece uses letter {} at row {k}",
                    m - 1
                ),
            },
        )?;
        if glued != rest.triangle_row(1, k) {
            return Err(MapError::TopRowShapeMismatch {
                reason: format!("glue triangles are not dual at row {k}"),
            });
        }
    }
    let rows: Vec<Vec<u8>> = (1..=n)
        .map(|k| {
            let mut row = Vec::with_capacity(m * k);
            row.extend_from_slice(small.triangle_row(1, k));
            row.extend_from_slice(small.triangle_row(2, k));
            for i in 2..m {
                row.extend_from_slice(rest.triangle_row(i, k));
            }
            row
        })
        .collect();
    InterlacingArray::from_flat_rows(&InterlacingArray::standard_alphabet(m), rows).map_err(|e| {
        MapError::TopRowShapeMismatch {
            reason: format!("glued rows are not interlacing: {e}"),
        }
    })
}

/// All words over the given letters with exactly the given multiplicities,
/// built by choosing each position from the remaining budget.
fn words_with_content(content: &[(u8, usize)]) -> Vec<Vec<u8>> {
    let total: usize = content.iter().map(|&(_, c)| c).sum();
    let mut budget: Vec<(u8, usize)> = content.to_vec();
    let mut word = Vec::with_capacity(total);
    let mut out = Vec::new();
    fn go(budget: &mut Vec<(u8, usize)>, word: &mut Vec<u8>, total: usize, out: &mut Vec<Vec<u8>>) {
        if word.len() == total {
            out.push(word.clone());
            return;
        }
        for slot in 0..budget.len() {
            if budget[slot].1 == 0 {
                continue;
            }
            budget[slot].1 -= 1;
            word.push(budget[slot].0);
            go(budget, word, total, out);
            word.pop();
            budget[slot].1 += 1;
        }
    }
    go(&mut budget, &mut word, total, &mut out);
    out
}

/// Checks the counting consequence of the rank-lowering bijection for rank 4
/// at every height up to `n_max`: for each chain `0 <= d1 <= d2 <= d3 <= n`
/// and each tuple of top words with the matching letter contents, the rank-4
/// count with that boundary equals the sum, over glue words `mu` with
/// `n - d2` twos and `d2` fours, of the product of the two lower-rank counts
/// with boundaries `(w1, w2, mu)` over `{2, 3, 4}` and `(mu reversed with 2
/// and 4 swapped, w3, w4)` over `{1, 2, 4}`.
pub fn verify_splitting_convolution(n_max: usize) -> CheckReport {
    let whole = InterlacingArray::standard_alphabet(4);
    let first = [2u8, 3, 4];
    let second = [1u8, 2, 4];
    let mut report = CheckReport::default();
    for n in 0..=n_max {
        for d1 in 0..=n {
            for d2 in d1..=n {
                for d3 in d2..=n {
                    let glue_words = words_with_content(&[(2, n - d2), (4, d2)]);
                    for w1 in words_with_content(&[(3, d3), (4, n - d3)]) {
                        for w2 in words_with_content(&[(2, d2), (4, d3 - d2), (3, n - d3)]) {
                            for w3 in words_with_content(&[(1, d1), (4, d2 - d1), (2, n - d2)]) {
                                for w4 in words_with_content(&[(4, d1), (1, n - d1)]) {
                                    report.checked += 1;
                                    let top =
                                        [w1.clone(), w2.clone(), w3.clone(), w4.clone()];
                                    let lhs =
                                        count_arrays(&whole, n, Some(&top), PatternFilter::None)
                                            .expect("typed boundary has valid shape");
                                    let mut rhs = BigUint::default();
                                    for mu in &glue_words {
                                        let mu_dual = dual_string(mu, (2, 4))
                                            .expect("glue words use only 2 and 4");
                                        let left = count_arrays(
                                            &first,
                                            n,
                                            Some(&[w1.clone(), w2.clone(), mu.clone()]),
                                            PatternFilter::None,
                                        )
                                        .expect("glue boundary has valid shape");
                                        let right = count_arrays(
                                            &second,
                                            n,
                                            Some(&[mu_dual, w3.clone(), w4.clone()]),
                                            PatternFilter::None,
                                        )
                                        .expect("glue boundary has valid shape");
                                        rhs += left * right;
                                    }
                                    if lhs != rhs {
                                        report.failures.push(format!(
                                            "n = {n}, chain ({d1}, {d2}, {d3}), top {top:?}: \
                                             whole count {lhs} but glued convolution {rhs}"
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_words_cover_all_arrangements() {
        let words = words_with_content(&[(2, 2), (4, 1)]);
        assert_eq!(words, vec![vec![2, 2, 4], vec![2, 4, 2], vec![4, 2, 2]]);
        assert_eq!(words_with_content(&[]), vec![Vec::<u8>::new()]);
    }

    #[test]
    fn splitting_convolution_holds_for_tiny_sides() {
        let report = verify_splitting_convolution(2);
        assert!(report.ok(), "{:?}", report.failures);
        assert!(report.checked > 0);
    }

    #[test]
    fn rank_below_four_cannot_split() {
        let t = InterlacingArray::from_flat_rows(
            &InterlacingArray::standard_alphabet(3),
            vec![vec![1, 2, 3]],
        )
        .unwrap();
        assert!(matches!(split(&t), Err(MapError::RankTooSmall { found: 3 })));
    }

    #[test]
    fn split_then_merge_is_identity_on_a_small_case() {
        let t = InterlacingArray::from_flat_rows(
            &InterlacingArray::standard_alphabet(4),
            vec![vec![3, 2, 1, 4]],
        )
        .unwrap();
        let (small, rest) = split(&t).unwrap();
        assert_eq!(small.alphabet(), &[2, 3, 4]);
        assert_eq!(rest.alphabet(), &[1, 2, 4]);
        assert_eq!(small.flat_rows(), &[vec![3, 2, 4]]);
        assert_eq!(rest.flat_rows(), &[vec![2, 1, 4]]);
        assert_eq!(merge(&small, &rest).unwrap(), t);
    }

    #[test]
    fn low_letters_in_leading_triangles_fail() {
        let t = InterlacingArray::from_flat_rows(
            &InterlacingArray::standard_alphabet(4),
            vec![vec![1, 2, 3, 4]],
        )
        .unwrap();
        assert!(matches!(
            split(&t),
            Err(MapError::TopRowShapeMismatch { .. })
        ));
    }
}
