//! Row-extension engine: builds arrays row by row, pruning with the
//! per-symbol windows that the interlacing condition forces on each new
//! occurrence.

use std::collections::HashMap;
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::enumerate::{boundary_key, CountReport, EnumerateError};
use crate::objects::{array::row_scale, InterlacingArray, ValidationError};

/// Restriction on adjacent triangle rows, applied to triangles `2..m`
/// while extending; selecting a filter binds the enumeration to one of the
/// expansion bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternFilter {
    /// No restriction.
    None,
    /// Forbid the patterns matching downward all-`10` faces.
    KTheory,
    /// Forbid the mirrored patterns matching upward all-`10` faces.
    DualKTheory,
    /// Forbid both families.
    Both,
}

fn has_k_pattern(lower: &[u8], upper: &[u8], m: u8, i: u8) -> bool {
    for j in 0..lower.len() {
        if lower[j] == m && upper[j] == m - i {
            return true;
        }
        if j >= 1 && upper[j] == m && lower[j - 1] == m - i + 1 && lower[j] == m {
            return true;
        }
    }
    false
}

fn has_dual_k_pattern(lower: &[u8], upper: &[u8], m: u8, i: u8) -> bool {
    for j in 0..lower.len() {
        if lower[j] == m - i && upper[j] == m {
            return true;
        }
        if lower[j] == m && upper[j] == m && upper[j + 1] == m - i + 1 {
            return true;
        }
    }
    false
}

impl PatternFilter {
    /// True when the pair of adjacent flat rows is allowed.  `lower` is the
    /// flat row at level `k - 1`, `upper` at level `k` (`k >= 2`), over the
    /// standard alphabet `1..=m`.
    pub fn allows(self, m: usize, lower: &[u8], upper: &[u8]) -> bool {
        if self == PatternFilter::None {
            return true;
        }
        let k = upper.len() / m;
        for i in 2..m {
            let lo = &lower[(i - 1) * (k - 1)..i * (k - 1)];
            let up = &upper[(i - 1) * k..i * k];
            let (mu, iu) = (m as u8, i as u8);
            let blocked = match self {
                PatternFilter::None => false,
                PatternFilter::KTheory => has_k_pattern(lo, up, mu, iu),
                PatternFilter::DualKTheory => has_dual_k_pattern(lo, up, mu, iu),
                PatternFilter::Both => {
                    has_k_pattern(lo, up, mu, iu) || has_dual_k_pattern(lo, up, mu, iu)
                }
            };
            if blocked {
                return false;
            }
        }
        true
    }
}

/// Positions (doubled coordinates) of each alphabet symbol in a flat row.
fn symbol_positions(alphabet: &[u8], row: &[u8], scale: &[i64]) -> Vec<Vec<i64>> {
    let mut pos = vec![Vec::new(); alphabet.len()];
    for (idx, &s) in row.iter().enumerate() {
        let slot = alphabet
            .iter()
            .position(|&a| a == s)
            .expect("row uses the alphabet");
        pos[slot].push(scale[idx]);
    }
    pos
}

struct Extender<'a> {
    alphabet: &'a [u8],
    /// Occurrences of each symbol in the generated row.
    cap: usize,
    /// Per-symbol doubled coordinates in the known neighboring row.
    prev_pos: Vec<Vec<i64>>,
    /// Doubled coordinates of the cells being filled.
    scale: Vec<i64>,
    /// True when the generated row is the shorter one.
    down: bool,
}

impl<'a> Extender<'a> {
    fn window(&self, slot: usize, used: usize) -> (i64, i64) {
        let p = &self.prev_pos[slot];
        if self.down {
            (p[used], p[used + 1])
        } else {
            let lo = if used >= 1 { p[used - 1] } else { i64::MIN };
            let hi = if used < p.len() { p[used] } else { i64::MAX };
            (lo, hi)
        }
    }

    /// Emits every row interlacing with the known row.  Returns the number
    /// of cell decisions tried, as a work measure.
    fn emit(&self, out: &mut Vec<Vec<u8>>) -> u64 {
        let mut row = vec![0u8; self.alphabet.len() * self.cap];
        let mut used = vec![0usize; self.alphabet.len()];
        let mut nodes = 0u64;
        self.rec(0, &mut row, &mut used, out, &mut nodes);
        nodes
    }

    fn rec(
        &self,
        idx: usize,
        row: &mut Vec<u8>,
        used: &mut Vec<usize>,
        out: &mut Vec<Vec<u8>>,
        nodes: &mut u64,
    ) {
        if idx == row.len() {
            out.push(row.clone());
            return;
        }
        let h = self.scale[idx];
        // A symbol whose next window closes at or before this cell can never
        // be placed again; prune the whole branch.
        for slot in 0..self.alphabet.len() {
            if used[slot] < self.cap && self.window(slot, used[slot]).1 <= h {
                return;
            }
        }
        for slot in 0..self.alphabet.len() {
            if used[slot] == self.cap {
                continue;
            }
            let (lo, hi) = self.window(slot, used[slot]);
            if lo < h && h < hi {
                *nodes += 1;
                row[idx] = self.alphabet[slot];
                used[slot] += 1;
                self.rec(idx + 1, row, used, out, nodes);
                used[slot] -= 1;
            }
        }
    }
}

/// All rows at level `k` compatible with `prev` at level `prev_k`, which is
/// `k - 1` (growing) or `k + 1` (shrinking).  `height` is the height of the
/// array being built; the doubled coordinates depend on it.
fn extensions(
    alphabet: &[u8],
    height: usize,
    prev: &[u8],
    prev_k: usize,
    k: usize,
) -> (Vec<Vec<u8>>, u64) {
    let m = alphabet.len();
    let prev_scale = row_scale(m, height, prev_k);
    let ext = Extender {
        alphabet,
        cap: k,
        prev_pos: symbol_positions(alphabet, prev, &prev_scale),
        scale: row_scale(m, height, k),
        down: k < prev_k,
    };
    let mut out = Vec::new();
    let nodes = ext.emit(&mut out);
    (out, nodes)
}

/// All permutations of the alphabet, the possible rows at level 1.
fn first_rows(alphabet: &[u8]) -> Vec<Vec<u8>> {
    fn rec(alphabet: &[u8], row: &mut Vec<u8>, taken: &mut [bool], out: &mut Vec<Vec<u8>>) {
        if row.len() == alphabet.len() {
            out.push(row.clone());
            return;
        }
        for s in 0..alphabet.len() {
            if !taken[s] {
                taken[s] = true;
                row.push(alphabet[s]);
                rec(alphabet, row, taken, out);
                row.pop();
                taken[s] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(alphabet, &mut Vec::new(), &mut vec![false; alphabet.len()], &mut out);
    out
}

/// Flattens and checks a fixed boundary: `m` side words of length `height`,
/// every alphabet symbol exactly `height` times in total.
fn check_boundary(
    alphabet: &[u8],
    height: usize,
    top: &[Vec<u8>],
) -> Result<Vec<u8>, EnumerateError> {
    let m = alphabet.len();
    if top.len() != m || top.iter().any(|w| w.len() != height) {
        return Err(EnumerateError::BadBoundaryShape {
            expected: m,
            len: height,
        });
    }
    let flat: Vec<u8> = top.concat();
    for &s in &flat {
        if !alphabet.contains(&s) {
            return Err(EnumerateError::BadBoundary(ValidationError::ForeignSymbol {
                symbol: s,
                alphabet: alphabet.to_vec(),
            }));
        }
    }
    for &s in alphabet {
        let found = flat.iter().filter(|&&x| x == s).count();
        if found != height {
            return Err(EnumerateError::BadBoundary(ValidationError::ContentViolation {
                row: height,
                symbol: s,
                found,
                expected: height,
            }));
        }
    }
    Ok(flat)
}

/// Completes stacks downward from `row` at level `k` to level 1, invoking
/// `sink` with each full stack (ordered bottom row first).
#[allow(clippy::too_many_arguments)]
fn complete_down(
    alphabet: &[u8],
    height: usize,
    filter: PatternFilter,
    k: usize,
    row: &[u8],
    suffix: &mut Vec<Vec<u8>>,
    sink: &mut impl FnMut(&[Vec<u8>]),
    nodes: &mut u64,
) {
    if k == 1 {
        let mut stack: Vec<Vec<u8>> = Vec::with_capacity(height);
        stack.push(row.to_vec());
        stack.extend(suffix.iter().rev().cloned());
        sink(&stack);
        return;
    }
    let m = alphabet.len();
    let (cands, n) = extensions(alphabet, height, row, k, k - 1);
    *nodes += n;
    suffix.push(row.to_vec());
    for cand in cands {
        if filter.allows(m, &cand, row) {
            complete_down(alphabet, height, filter, k - 1, &cand, suffix, sink, nodes);
        }
    }
    suffix.pop();
}

/// Enumerates arrays by pure row extension.  `top` fixes the boundary (one
/// word per side, each of length `height`).  Results are sorted by their
/// flat rows.
pub fn enumerate_arrays_by_rows(
    alphabet: &[u8],
    height: usize,
    top: Option<&[Vec<u8>]>,
    filter: PatternFilter,
) -> Result<Vec<InterlacingArray>, EnumerateError> {
    let m = alphabet.len();
    if filter != PatternFilter::None && alphabet != InterlacingArray::standard_alphabet(m) {
        return Err(EnumerateError::FilterNeedsStandardAlphabet);
    }
    if height == 0 {
        let empty = InterlacingArray::from_flat_rows(alphabet, Vec::new())
            .expect("empty arrays are valid");
        return Ok(vec![empty]);
    }

    let tops: Vec<Vec<u8>> = match top {
        Some(words) => vec![check_boundary(alphabet, height, words)?],
        None => {
            // Grow all the way up keeping only the distinct rows per level;
            // stacks are rebuilt downward afterwards so both modes share
            // the downward path.
            let mut rows: Vec<Vec<u8>> = first_rows(alphabet);
            for k in 2..=height {
                let mut next: Vec<Vec<u8>> = rows
                    .par_iter()
                    .flat_map_iter(|r| {
                        let (cands, _) = extensions(alphabet, height, r, k - 1, k);
                        cands
                            .into_iter()
                            .filter(|c| filter.allows(m, r, c))
                            .collect::<Vec<_>>()
                    })
                    .collect();
                next.par_sort_unstable();
                next.dedup();
                rows = next;
            }
            rows
        }
    };

    let mut arrays: Vec<InterlacingArray> = tops
        .par_iter()
        .flat_map_iter(|t| {
            let mut found: Vec<InterlacingArray> = Vec::new();
            let mut nodes = 0u64;
            complete_down(
                alphabet,
                height,
                filter,
                height,
                t,
                &mut Vec::new(),
                &mut |stack| {
                    found.push(InterlacingArray::from_flat_rows_unchecked(
                        alphabet.to_vec(),
                        stack.to_vec(),
                    ));
                },
                &mut nodes,
            );
            found
        })
        .collect();
    arrays.par_sort_unstable_by(|a, b| a.flat_rows().cmp(b.flat_rows()));
    Ok(arrays)
}

/// Counts arrays without materializing them: a level-by-level dynamic
/// program over distinct rows, upward when the boundary is free and
/// downward from the fixed boundary otherwise.
pub fn count_arrays_report(
    alphabet: &[u8],
    height: usize,
    top: Option<&[Vec<u8>]>,
    filter: PatternFilter,
    per_boundary: bool,
) -> Result<CountReport, EnumerateError> {
    let started = Instant::now();
    let m = alphabet.len();
    if filter != PatternFilter::None && alphabet != InterlacingArray::standard_alphabet(m) {
        return Err(EnumerateError::FilterNeedsStandardAlphabet);
    }
    let finish = |total: BigUint,
                  by_boundary: Option<std::collections::BTreeMap<String, BigUint>>,
                  nodes: u64| CountReport {
        total,
        by_boundary,
        wall_ms: started.elapsed().as_millis() as u64,
        nodes,
    };
    if height == 0 {
        let one = BigUint::from(1u8);
        let breakdown = per_boundary.then(|| {
            std::iter::once((String::new(), one.clone())).collect()
        });
        return Ok(finish(one, breakdown, 0));
    }

    let mut nodes = 0u64;
    if let Some(words) = top {
        let flat = check_boundary(alphabet, height, words)?;
        let mut level: HashMap<Vec<u8>, BigUint> = HashMap::new();
        level.insert(flat.clone(), BigUint::from(1u8));
        for k in (1..height).rev() {
            let parts: Vec<(Vec<(Vec<u8>, BigUint)>, u64)> = level
                .par_iter()
                .map(|(row, count)| {
                    let (cands, n) = extensions(alphabet, height, row, k + 1, k);
                    let kept: Vec<(Vec<u8>, BigUint)> = cands
                        .into_iter()
                        .filter(|c| filter.allows(m, c, row))
                        .map(|c| (c, count.clone()))
                        .collect();
                    (kept, n)
                })
                .collect();
            let mut next: HashMap<Vec<u8>, BigUint> = HashMap::new();
            for (kept, n) in parts {
                nodes += n;
                for (c, count) in kept {
                    *next.entry(c).or_default() += count;
                }
            }
            level = next;
        }
        let total: BigUint = level.values().sum();
        let breakdown = per_boundary.then(|| {
            std::iter::once((boundary_key(m, &flat), total.clone())).collect()
        });
        return Ok(finish(total, breakdown, nodes));
    }

    let mut level: HashMap<Vec<u8>, BigUint> = first_rows(alphabet)
        .into_iter()
        .map(|r| {
            nodes += 1;
            (r, BigUint::from(1u8))
        })
        .collect();
    for k in 2..=height {
        let parts: Vec<(Vec<(Vec<u8>, BigUint)>, u64)> = level
            .par_iter()
            .map(|(row, count)| {
                let (cands, n) = extensions(alphabet, height, row, k - 1, k);
                let kept: Vec<(Vec<u8>, BigUint)> = cands
                    .into_iter()
                    .filter(|c| filter.allows(m, row, c))
                    .map(|c| (c, count.clone()))
                    .collect();
                (kept, n)
            })
            .collect();
        let mut next: HashMap<Vec<u8>, BigUint> = HashMap::new();
        for (kept, n) in parts {
            nodes += n;
            for (c, count) in kept {
                *next.entry(c).or_default() += count;
            }
        }
        level = next;
    }
    let total: BigUint = level.values().sum();
    let breakdown = per_boundary.then(|| {
        level
            .iter()
            .map(|(row, count)| (boundary_key(m, row), count.clone()))
            .collect()
    });
    Ok(finish(total, breakdown, nodes))
}

/// Total number of arrays with the given alphabet, height, optional fixed
/// boundary and filter.
pub fn count_arrays(
    alphabet: &[u8],
    height: usize,
    top: Option<&[Vec<u8>]>,
    filter: PatternFilter,
) -> Result<BigUint, EnumerateError> {
    Ok(count_arrays_report(alphabet, height, top, filter, false)?.total)
}
