//! Expansion coefficients for products of Schubert-type classes on
//! Grassmannians and partial flag varieties, computed by counting
//! interlacing arrays with fixed boundaries.
//!
//! A query names a basis and the factor classes.  For the K-theory, dual
//! K-theory and Segre-Schwartz-MacPherson bases the factors are binary
//! words with a common number of zeros; for the cohomology basis they are
//! typed letter words (or minimal coset representatives plus a dimension
//! vector).  The expansion iterates over candidate classes for the missing
//! side, counts arrays under the basis-specific row filter, and applies
//! the sign rule.

mod lr;

pub use lr::{lr_coefficient, partitions_in_box, verify_lr_agreement};

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use serde_json::json;
use thiserror::Error;

use crate::enumerate::{
    count_arrays, enumerate_arrays_by_rows, enumerate_puzzles_0110, EnumerateError,
    PatternFilter, PieceFilter,
};
use crate::maps::{array_from_puzzle, convert_0110_to_123, rotate_0110, toprow};
use crate::objects::{BinaryString, InterlacingArray, Permutation, ValidationError};

/// The four expansion bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    KTheory,
    DualKTheory,
    SegreSchwartzMacPherson,
    Cohomology,
}

impl BasisKind {
    /// Row filter that selects exactly the arrays counted by this basis.
    pub fn pattern_filter(self) -> PatternFilter {
        match self {
            BasisKind::KTheory => PatternFilter::KTheory,
            BasisKind::DualKTheory => PatternFilter::DualKTheory,
            BasisKind::SegreSchwartzMacPherson => PatternFilter::None,
            BasisKind::Cohomology => PatternFilter::Both,
        }
    }

    /// Equivalent restriction on all-`10` puzzle faces (rank 3).
    pub fn piece_filter(self) -> PieceFilter {
        match self {
            BasisKind::KTheory => PieceFilter::NoDownTens,
            BasisKind::DualKTheory => PieceFilter::NoUpTens,
            BasisKind::SegreSchwartzMacPherson => PieceFilter::None,
            BasisKind::Cohomology => PieceFilter::NoTens,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BasisKind::KTheory => "k",
            BasisKind::DualKTheory => "dual-k",
            BasisKind::SegreSchwartzMacPherson => "ssm",
            BasisKind::Cohomology => "cohomology",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "k" => Some(BasisKind::KTheory),
            "dual-k" => Some(BasisKind::DualKTheory),
            "ssm" => Some(BasisKind::SegreSchwartzMacPherson),
            "cohomology" => Some(BasisKind::Cohomology),
            _ => None,
        }
    }
}

/// The factor classes of a product.
#[derive(Debug, Clone)]
pub enum FactorInput {
    /// Binary side words; K-theory, dual K-theory and Segre bases.
    Binary(Vec<BinaryString>),
    /// Typed letter words; cohomology basis.
    Typed(Vec<Vec<u8>>),
    /// Minimal coset representatives; cohomology basis, needs `d`.
    Permutations(Vec<Permutation>),
}

/// A product of classes whose expansion is wanted.
#[derive(Debug, Clone)]
pub struct ProductQuery {
    pub basis: BasisKind,
    pub factors: FactorInput,
    /// Dimension vector `0 = d_0 <= ... <= d_m = n`.  Required for
    /// permutation factors; a cross-check otherwise.
    pub d: Option<Vec<usize>>,
}

/// Basis element appearing in an expansion.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum TargetKey {
    Word(BinaryString),
    Perm(Permutation),
}

impl fmt::Display for TargetKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TargetKey::Word(w) => write!(f, "{w}"),
            TargetKey::Perm(p) => write!(f, "{p}"),
        }
    }
}

/// One term of an expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionTerm {
    pub target: TargetKey,
    /// Signed coefficient: `sign * array_count`.
    pub coefficient: BigInt,
    /// Number of arrays counted for this target.
    pub array_count: BigUint,
    /// `+1` or `-1`; always `+1` in cohomology.
    pub sign: i8,
}

/// A fully expanded product: nonzero terms sorted by target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub basis: BasisKind,
    pub n: usize,
    pub terms: Vec<ExpansionTerm>,
}

impl Expansion {
    /// Coefficient of one target, zero if absent.
    pub fn coefficient(&self, target: &TargetKey) -> BigInt {
        self.terms
            .iter()
            .find(|t| &t.target == target)
            .map(|t| t.coefficient.clone())
            .unwrap_or_default()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "basis": self.basis.name(),
            "n": self.n,
            "terms": self
                .terms
                .iter()
                .map(|t| {
                    json!({
                        "target": t.target.to_string(),
                        "coefficient": t.coefficient.to_string(),
                        "count": t.array_count.to_string(),
                        "sign": t.sign,
                    })
                })
                .collect::<Vec<_>>(),
        })
    }
}

#[derive(Debug, Error)]
pub enum QueryError {
    #[error("a product needs at least one factor")]
    NoFactors,
    #[error("factors must share one length, got {0:?}")]
    MixedLengths(Vec<usize>),
    #[error("factors must share the number of zeros, got {0:?}")]
    MixedContent(Vec<usize>),
    #[error("the {0} basis does not take this factor kind")]
    WrongFactorKind(&'static str),
    #[error("permutation factors need a dimension vector")]
    MissingDimensionVector,
    #[error("typed factors disagree with the dimension vector: {reason}")]
    TypeMismatch { reason: String },
    #[error("factor {index} is malformed: {source}")]
    BadFactor { index: usize, source: ValidationError },
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
}

/// All binary words of the given length with the given number of zeros.
pub fn binary_words(len: usize, zeros: usize) -> Vec<BinaryString> {
    fn rec(len: usize, zeros: usize, word: &mut Vec<u8>, out: &mut Vec<BinaryString>) {
        if word.len() == len {
            out.push(BinaryString::new(word.clone()).expect("bits are 0 or 1"));
            return;
        }
        let left = len - word.len();
        let zeros_used = word.iter().filter(|&&b| b == 0).count();
        if zeros_used < zeros {
            word.push(0);
            rec(len, zeros, word, out);
            word.pop();
        }
        if left > zeros - zeros_used {
            word.push(1);
            rec(len, zeros, word, out);
            word.pop();
        }
    }
    if zeros > len {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(len, zeros, &mut Vec::new(), &mut out);
    out
}

fn parity_sign(exp: usize) -> i8 {
    if exp % 2 == 0 {
        1
    } else {
        -1
    }
}

fn signed(sign: i8, count: &BigUint) -> BigInt {
    let s = if sign >= 0 { Sign::Plus } else { Sign::Minus };
    if count == &BigUint::default() {
        BigInt::default()
    } else {
        BigInt::from_biguint(s, count.clone())
    }
}

fn expand_binary(
    basis: BasisKind,
    factors: &[BinaryString],
    d_hint: Option<&[usize]>,
) -> Result<Expansion, QueryError> {
    if factors.is_empty() {
        return Err(QueryError::NoFactors);
    }
    let n = factors[0].len();
    if factors.iter().any(|f| f.len() != n) {
        return Err(QueryError::MixedLengths(
            factors.iter().map(|f| f.len()).collect(),
        ));
    }
    let d = factors[0].zeros();
    if factors.iter().any(|f| f.zeros() != d) {
        return Err(QueryError::MixedContent(
            factors.iter().map(|f| f.zeros()).collect(),
        ));
    }
    if let Some(dv) = d_hint {
        if dv != [0, d, n] {
            return Err(QueryError::TypeMismatch {
                reason: format!("dimension vector {dv:?} does not match (0, {d}, {n})"),
            });
        }
    }
    let m = factors.len() + 1;
    let filter = basis.pattern_filter();
    let alphabet = InterlacingArray::standard_alphabet(m);
    let base_inv: usize = factors.iter().map(|f| f.inversions()).sum();
    let mut terms = Vec::new();
    for last in binary_words(n, d) {
        let mut top: Vec<Vec<u8>> = factors
            .iter()
            .enumerate()
            .map(|(idx, f)| toprow(f, idx + 1, m))
            .collect();
        top.push(toprow(&last, m, m));
        let count = count_arrays(&alphabet, n, Some(&top), filter)?;
        if count == BigUint::default() {
            continue;
        }
        let sign = parity_sign(d * (n - d) + base_inv + last.inversions());
        terms.push(ExpansionTerm {
            target: TargetKey::Word(last.reversed()),
            coefficient: signed(sign, &count),
            array_count: count,
            sign,
        });
    }
    terms.sort_by(|a, b| a.target.cmp(&b.target));
    Ok(Expansion { basis, n, terms })
}

/// Recovers the dimension vector from typed factor words: side 1 carries
/// the letter `m - 1` on `d_{m-1}` positions and `m` elsewhere; side
/// `i >= 2` carries `m - i` on `d_{m-i}` positions, `m` on
/// `d_{m-i+1} - d_{m-i}` and `m - i + 1` on the rest.  Overlapping sides
/// must agree.
fn recover_dimension_vector(typed: &[Vec<u8>], n: usize) -> Result<Vec<usize>, QueryError> {
    let m = typed.len() + 1;
    let mut d = vec![usize::MAX; m + 1];
    d[0] = 0;
    d[m] = n;
    for (idx, word) in typed.iter().enumerate() {
        let i = idx + 1;
        let bad_letters = |letters: Vec<u8>| QueryError::BadFactor {
            index: idx,
            source: ValidationError::NotOverLetters { found: word.clone(), letters },
        };
        if i == 1 {
            let lo = (m - 1) as u8;
            let mid = m as u8;
            let mut low = 0usize;
            for &l in word {
                if l == lo {
                    low += 1;
                } else if l != mid {
                    return Err(bad_letters(vec![lo, mid]));
                }
            }
            d[m - 1] = low;
            continue;
        }
        let (lo, mid, hi) = ((m - i) as u8, m as u8, (m - i + 1) as u8);
        let mut counts = (0usize, 0usize, 0usize);
        for &l in word {
            if l == lo {
                counts.0 += 1;
            } else if l == mid {
                counts.1 += 1;
            } else if l == hi {
                counts.2 += 1;
            } else {
                return Err(bad_letters(vec![lo, mid, hi]));
            }
        }
        let lower = counts.0;
        let upper = lower + counts.1;
        if d[m - i] == usize::MAX {
            d[m - i] = lower;
        } else if d[m - i] != lower {
            return Err(QueryError::TypeMismatch {
                reason: format!(
                    "side {i} gives d_{} = {lower}, earlier sides gave {}",
                    m - i,
                    d[m - i]
                ),
            });
        }
        if d[m - i + 1] == usize::MAX {
            d[m - i + 1] = upper;
        } else if d[m - i + 1] != upper {
            return Err(QueryError::TypeMismatch {
                reason: format!(
                    "side {i} gives d_{} = {upper}, earlier sides gave {}",
                    m - i + 1,
                    d[m - i + 1]
                ),
            });
        }
    }
    for w in d.windows(2) {
        if w[0] == usize::MAX || w[1] == usize::MAX || w[0] > w[1] {
            return Err(QueryError::TypeMismatch {
                reason: format!("recovered dimension vector {d:?} is not ascending"),
            });
        }
    }
    Ok(d)
}

fn typed_factors_from_perms(
    perms: &[Permutation],
    d: &[usize],
) -> Result<Vec<Vec<u8>>, QueryError> {
    let m = perms.len() + 1;
    let n = *d.last().expect("dimension vector is nonempty");
    perms
        .iter()
        .enumerate()
        .map(|(idx, w)| {
            let i = idx + 1;
            if w.n() != n {
                return Err(QueryError::MixedLengths(
                    perms.iter().map(|p| p.n()).collect(),
                ));
            }
            // Letter order must match block order: the first block of the
            // sorted word carries the smallest letter of the side.
            let (sigma, cuts): (Vec<u8>, Vec<usize>) = if i == 1 {
                (vec![(m - 1) as u8, m as u8], vec![0, d[m - 1], n])
            } else {
                (
                    vec![(m - i) as u8, m as u8, (m - i + 1) as u8],
                    vec![0, d[m - i], d[m - i + 1], n],
                )
            };
            w.to_string_over(&sigma, &cuts)
                .map_err(|source| QueryError::BadFactor { index: idx, source })
        })
        .collect()
}

fn expand_cohomology(
    typed: &[Vec<u8>],
    d_hint: Option<&[usize]>,
) -> Result<Expansion, QueryError> {
    if typed.is_empty() {
        return Err(QueryError::NoFactors);
    }
    let n = typed[0].len();
    if typed.iter().any(|w| w.len() != n) {
        return Err(QueryError::MixedLengths(
            typed.iter().map(|w| w.len()).collect(),
        ));
    }
    let m = typed.len() + 1;
    let d = recover_dimension_vector(typed, n)?;
    if let Some(dv) = d_hint {
        if dv != d {
            return Err(QueryError::TypeMismatch {
                reason: format!("given dimension vector {dv:?}, factors imply {d:?}"),
            });
        }
    }
    let alphabet = InterlacingArray::standard_alphabet(m);
    let mut terms = Vec::new();
    // The missing side carries the letter m on d_1 positions and 1 elsewhere.
    for pattern in binary_words(n, d[1]) {
        let last: Vec<u8> = pattern
            .bits()
            .iter()
            .map(|&b| if b == 0 { m as u8 } else { 1u8 })
            .collect();
        let mut top: Vec<Vec<u8>> = typed.to_vec();
        top.push(last.clone());
        let count = count_arrays(&alphabet, n, Some(&top), PatternFilter::Both)?;
        if count == BigUint::default() {
            continue;
        }
        let w = Permutation::from_string(&last, &[m as u8, 1])
            .expect("the missing side uses the letters m and 1");
        let target = w.dual(&d).expect("recovered dimension vector is valid");
        terms.push(ExpansionTerm {
            target: TargetKey::Perm(target),
            coefficient: signed(1, &count),
            array_count: count,
            sign: 1,
        });
    }
    terms.sort_by(|a, b| a.target.cmp(&b.target));
    Ok(Expansion {
        basis: BasisKind::Cohomology,
        n,
        terms,
    })
}

/// Expands a product into its basis, dropping zero terms.
pub fn expand_product(query: &ProductQuery) -> Result<Expansion, QueryError> {
    match (query.basis, &query.factors) {
        (BasisKind::Cohomology, FactorInput::Typed(words)) => {
            expand_cohomology(words, query.d.as_deref())
        }
        (BasisKind::Cohomology, FactorInput::Permutations(ws)) => {
            let d = query
                .d
                .as_deref()
                .ok_or(QueryError::MissingDimensionVector)?;
            let typed = typed_factors_from_perms(ws, d)?;
            expand_cohomology(&typed, Some(d))
        }
        (BasisKind::Cohomology, FactorInput::Binary(_)) => {
            Err(QueryError::WrongFactorKind("cohomology"))
        }
        (basis, FactorInput::Binary(words)) => expand_binary(basis, words, query.d.as_deref()),
        (basis, _) => Err(QueryError::WrongFactorKind(basis.name())),
    }
}

/// Coefficient of a single basis element in the expansion, zero when the
/// element never appears.
pub fn structure_constant(query: &ProductQuery, target: &TargetKey) -> Result<BigInt, QueryError> {
    let expansion = expand_product(query)?;
    Ok(expansion.coefficient(target))
}

/// The arrays behind one expansion term: every array passing the basis
/// filter whose boundary joins the factors to the given target.  Their
/// number is the `count` field of that term, zero when the term is absent.
pub fn witness_arrays(
    query: &ProductQuery,
    target: &TargetKey,
) -> Result<Vec<InterlacingArray>, QueryError> {
    let type_mismatch = |reason: String| QueryError::TypeMismatch { reason };
    let (top, n, m) = match (query.basis, &query.factors, target) {
        (BasisKind::Cohomology, FactorInput::Binary(_), _) => {
            return Err(QueryError::WrongFactorKind("cohomology"));
        }
        (BasisKind::Cohomology, factors, TargetKey::Perm(t)) => {
            let typed = match factors {
                FactorInput::Typed(words) => words.clone(),
                FactorInput::Permutations(ws) => {
                    let d = query
                        .d
                        .as_deref()
                        .ok_or(QueryError::MissingDimensionVector)?;
                    typed_factors_from_perms(ws, d)?
                }
                FactorInput::Binary(_) => unreachable!("handled above"),
            };
            if typed.is_empty() {
                return Err(QueryError::NoFactors);
            }
            let n = typed[0].len();
            let m = typed.len() + 1;
            let d = recover_dimension_vector(&typed, n)?;
            if t.n() != n {
                return Err(type_mismatch(format!(
                    "target permutes {} letters, factors have length {n}",
                    t.n()
                )));
            }
            let w = t
                .dual(&d)
                .map_err(|e| type_mismatch(format!("target does not fit {d:?}: {e}")))?;
            let last = w
                .to_string_over(&[m as u8, 1], &[0, d[1], n])
                .map_err(|e| type_mismatch(format!("target does not fit {d:?}: {e}")))?;
            let mut top = typed;
            top.push(last);
            (top, n, m)
        }
        (_, FactorInput::Binary(factors), TargetKey::Word(t)) => {
            if factors.is_empty() {
                return Err(QueryError::NoFactors);
            }
            let n = factors[0].len();
            if factors.iter().any(|f| f.len() != n) {
                return Err(QueryError::MixedLengths(
                    factors.iter().map(|f| f.len()).collect(),
                ));
            }
            let d = factors[0].zeros();
            if factors.iter().any(|f| f.zeros() != d) {
                return Err(QueryError::MixedContent(
                    factors.iter().map(|f| f.zeros()).collect(),
                ));
            }
            if t.len() != n || t.zeros() != d {
                return Err(type_mismatch(format!(
                    "target {t} does not have length {n} and {d} zeros"
                )));
            }
            let m = factors.len() + 1;
            let mut top: Vec<Vec<u8>> = factors
                .iter()
                .enumerate()
                .map(|(idx, f)| toprow(f, idx + 1, m))
                .collect();
            top.push(toprow(&t.reversed(), m, m));
            (top, n, m)
        }
        (basis, _, _) => return Err(QueryError::WrongFactorKind(basis.name())),
    };
    Ok(enumerate_arrays_by_rows(
        &InterlacingArray::standard_alphabet(m),
        n,
        Some(&top),
        query.basis.pattern_filter(),
    )?)
}

pub use crate::report::CheckReport;

/// Checks that the 120-degree rotation is a bijection of puzzles cycling
/// the boundary words, for every puzzle up to the given side length.  This
/// is the geometric fact behind the cyclic symmetry of the structure
/// constants.
pub fn verify_symmetry(n_max: usize) -> CheckReport {
    let mut report = CheckReport::default();
    for n in 0..=n_max {
        let all = enumerate_puzzles_0110(n, None, PieceFilter::None)
            .expect("free enumeration takes no boundary");
        let grid = crate::grid::TriGrid::new(n);
        for p in &all {
            report.checked += 1;
            let r = rotate_0110(p);
            let pb = p.boundary();
            let rb = r.boundary();
            if rb[0] != pb[1] || rb[1] != pb[2] || rb[2] != pb[0] {
                report
                    .failures
                    .push(format!("n = {n}: rotation does not cycle the boundary of {pb:?}"));
            }
            let tens = |q: &crate::objects::TrianglePuzzle0110| {
                let mut up = 0usize;
                let mut down = 0usize;
                for f in grid.faces() {
                    if q.face_is_ten(*f) {
                        if f.is_up() {
                            up += 1;
                        } else {
                            down += 1;
                        }
                    }
                }
                (up, down)
            };
            if tens(p) != tens(&r) {
                report
                    .failures
                    .push(format!("n = {n}: rotation changes all-10 face counts"));
            }
        }
    }
    report
}

/// Checks the duality of the cohomology basis on a two-step flag variety
/// (dimension vector `0 <= d_1 <= d_2 <= n`): the top class appears in a
/// two-factor product exactly when the factors are dual, and then with
/// coefficient 1.  Pairs whose first factor cannot sit on side 1 (a
/// descent below the coarser cut) are swapped if possible and otherwise
/// skipped.
pub fn duality_check(n: usize, d: &[usize]) -> CheckReport {
    let mut report = CheckReport::default();
    if d.len() != 4 {
        report.failures.push(format!(
            "two-factor products need a dimension vector (0, d_1, d_2, {n}), got {d:?}"
        ));
        return report;
    }
    let w0d = match Permutation::longest_parabolic(d, n) {
        Ok(w) => w,
        Err(e) => {
            report.failures.push(format!("bad dimension vector: {e}"));
            return report;
        }
    };
    let top = Permutation::longest(n).compose(&w0d);
    let interior: Vec<usize> = d[1..d.len() - 1].to_vec();
    let reps: Vec<Permutation> = all_permutations(n)
        .into_iter()
        .filter(|w| w.descents().iter().all(|p| interior.contains(p)))
        .collect();
    // Side 1 of a two-factor product only admits words over two letters,
    // so its permutation may descend only at the coarser cut d_2.
    let side1_ok = |w: &Permutation| w.descents().iter().all(|&p| p == d[d.len() - 2]);
    for u in &reps {
        for v in &reps {
            let (a, b) = if side1_ok(u) {
                (u, v)
            } else if side1_ok(v) {
                (v, u)
            } else {
                report.skipped += 1;
                continue;
            };
            report.checked += 1;
            let query = ProductQuery {
                basis: BasisKind::Cohomology,
                factors: FactorInput::Permutations(vec![a.clone(), b.clone()]),
                d: Some(d.to_vec()),
            };
            let got = match structure_constant(&query, &TargetKey::Perm(top.clone())) {
                Ok(c) => c,
                Err(e) => {
                    report.failures.push(format!("query ({a}, {b}) failed: {e}"));
                    continue;
                }
            };
            let dual = a.dual(d).expect("valid dimension vector");
            let expected = if *b == dual { BigInt::from(1) } else { BigInt::default() };
            if got != expected {
                report.failures.push(format!(
                    "top coefficient of ({a}, {b}) is {got}, expected {expected}"
                ));
            }
        }
    }
    report
}

type MiddlePattern = fn(&[u8], &[u8], usize) -> bool;

/// Patterns on adjacent rows of the middle triangle of a rank-3 array,
/// anchored at position `j` of the shorter row `s` with `l` the longer row
/// below it in reading order.  Each orientation of all-`10` puzzle face has
/// two equivalent forbidden families; the primary ones are what
/// [`PatternFilter`] implements rank-3.
fn up_primary(s: &[u8], l: &[u8], j: usize) -> bool {
    s[j] == 1 && l[j] == 3 || s[j] == 3 && l[j] == 3 && l[j + 1] == 2
}

fn up_alternate(s: &[u8], l: &[u8], j: usize) -> bool {
    s[j] == 2 && l[j + 1] == 3 || s[j] == 3 && l[j] == 1 && l[j + 1] == 3
}

fn down_primary(s: &[u8], l: &[u8], j: usize) -> bool {
    s[j] == 3 && l[j] == 1 || j >= 1 && l[j] == 3 && s[j - 1] == 2 && s[j] == 3
}

fn down_alternate(s: &[u8], l: &[u8], j: usize) -> bool {
    s[j] == 3 && l[j + 1] == 2 || j >= 1 && l[j] == 3 && s[j - 1] == 3 && s[j] == 1
}

fn middle_has(arr: &InterlacingArray, pattern: MiddlePattern) -> bool {
    let flat = arr.flat_rows();
    for k in 1..arr.height() {
        let s = &flat[k - 1][k..2 * k];
        let l = &flat[k][k + 1..2 * (k + 1)];
        if (0..k).any(|j| pattern(s, l, j)) {
            return true;
        }
    }
    false
}

/// Sweeps every rank-3 array of height at most `n_max` whose first side
/// word uses only the letters 2 and 3 and whose third uses only 1 and 3,
/// and checks that four selections agree exactly per face orientation:
/// puzzles with no all-`10` face of that orientation, pulled through the
/// bijection; arrays avoiding the matching middle-triangle patterns;
/// arrays avoiding the equivalent alternate patterns; and arrays passing
/// the row filter the counting engines use.
pub fn verify_piece_pattern_agreement(n_max: usize) -> CheckReport {
    let alphabet = InterlacingArray::standard_alphabet(3);
    let typed = |arr: &InterlacingArray| {
        let top = arr.top_row();
        top[0].iter().all(|&x| x == 2 || x == 3) && top[2].iter().all(|&x| x == 1 || x == 3)
    };
    let mut report = CheckReport::default();
    for n in 0..=n_max {
        let arrays = match enumerate_arrays_by_rows(&alphabet, n, None, PatternFilter::None) {
            Ok(all) => all,
            Err(e) => {
                report.failures.push(format!("n = {n}: array enumeration failed: {e}"));
                continue;
            }
        };
        let typed_arrays: Vec<&InterlacingArray> =
            arrays.iter().filter(|a| typed(a)).collect();
        for &up in &[true, false] {
            let orientation = if up { "upward" } else { "downward" };
            let (piece, engine, primary, alternate): (_, _, MiddlePattern, MiddlePattern) = if up
            {
                (
                    PieceFilter::NoUpTens,
                    PatternFilter::DualKTheory,
                    up_primary,
                    up_alternate,
                )
            } else {
                (
                    PieceFilter::NoDownTens,
                    PatternFilter::KTheory,
                    down_primary,
                    down_alternate,
                )
            };
            let via_puzzles: BTreeSet<Vec<Vec<u8>>> = match enumerate_puzzles_0110(n, None, piece)
            {
                Ok(ps) => ps
                    .iter()
                    .map(|p| array_from_puzzle(&convert_0110_to_123(p)))
                    .filter(|a| typed(a))
                    .map(|a| a.flat_rows().to_vec())
                    .collect(),
                Err(e) => {
                    report
                        .failures
                        .push(format!("n = {n}: puzzle enumeration failed: {e}"));
                    continue;
                }
            };
            let select = |keep: &dyn Fn(&InterlacingArray) -> bool| -> BTreeSet<Vec<Vec<u8>>> {
                typed_arrays
                    .iter()
                    .filter(|a| keep(a))
                    .map(|a| a.flat_rows().to_vec())
                    .collect()
            };
            let by_primary = select(&|a| !middle_has(a, primary));
            let by_alternate = select(&|a| !middle_has(a, alternate));
            let by_engine = select(&|a| {
                let flat = a.flat_rows();
                (1..a.height()).all(|k| engine.allows(3, &flat[k - 1], &flat[k]))
            });
            report.checked += typed_arrays.len();
            for (name, set) in [
                ("pattern", &by_primary),
                ("alternate pattern", &by_alternate),
                ("row filter", &by_engine),
            ] {
                if set != &via_puzzles {
                    let missing = via_puzzles.difference(set).count();
                    let extra = set.difference(&via_puzzles).count();
                    report.failures.push(format!(
                        "n = {n}, {orientation} faces: {name} route selects {} arrays, \
                         puzzle route {} ({missing} missing, {extra} extra)",
                        set.len(),
                        via_puzzles.len()
                    ));
                }
            }
        }
    }
    report
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(n: usize, word: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if word.len() == n {
            out.push(Permutation::new(word.clone()).expect("built as a permutation"));
            return;
        }
        for x in 1..=n {
            if !used[x] {
                used[x] = true;
                word.push(x);
                rec(n, word, used, out);
                word.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
    out
}

/// Partition inside the `d` by `n - d` box read off a Grassmannian minimal
/// representative: part `t` (1-based from the largest) is `w(d + 1 - t)`
/// minus its position, zeros dropped.
pub fn permutation_to_partition(w: &Permutation, d: usize) -> Vec<usize> {
    let mut parts: Vec<usize> = (0..d)
        .map(|t| w.word()[t] - (t + 1))
        .filter(|&p| p > 0)
        .collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Typed word of a partition inside the `d` by `n - d` box: the first
/// letter lands at the `d` positions `part[d - 1 - t] + t + 1`, the second
/// everywhere else.
pub fn partition_to_word(
    partition: &[usize],
    n: usize,
    d: usize,
    letters: (u8, u8),
) -> Result<Vec<u8>, QueryError> {
    if partition.len() > d
        || partition.iter().any(|&p| p > n - d)
        || partition.windows(2).any(|w| w[0] < w[1])
    {
        return Err(QueryError::TypeMismatch {
            reason: format!("{partition:?} does not fit the {d} by {} box", n - d),
        });
    }
    let mut padded = partition.to_vec();
    padded.resize(d, 0);
    let mut word = vec![letters.1; n];
    for t in 0..d {
        let pos = padded[d - 1 - t] + t + 1;
        word[pos - 1] = letters.0;
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(ss: &[&str]) -> Vec<BinaryString> {
        ss.iter().map(|s| BinaryString::parse(s).unwrap()).collect()
    }

    #[test]
    fn binary_word_generation() {
        assert_eq!(binary_words(4, 2).len(), 6);
        assert_eq!(binary_words(3, 0).len(), 1);
        assert_eq!(binary_words(2, 3).len(), 0);
    }

    #[test]
    fn single_factor_expands_to_itself() {
        // A one-factor product is the class itself: one target, sign +1,
        // exactly one array behind it.
        for basis in [BasisKind::KTheory, BasisKind::SegreSchwartzMacPherson] {
            for s in binary_words(3, 1).into_iter().chain(binary_words(4, 2)) {
                let q = ProductQuery {
                    basis,
                    factors: FactorInput::Binary(vec![s.clone()]),
                    d: None,
                };
                let e = expand_product(&q).unwrap();
                assert_eq!(e.terms.len(), 1, "expansion of {s}");
                assert_eq!(e.terms[0].target, TargetKey::Word(s.clone()));
                assert_eq!(e.terms[0].coefficient, BigInt::from(1));
                assert_eq!(e.terms[0].array_count, BigUint::from(1u32));
            }
        }
    }

    #[test]
    fn grassmannian_point_products() {
        // In the 1 by 1 box the empty partition is the identity class.
        let s1 = partition_to_word(&[], 2, 1, (2, 3)).unwrap();
        let s2 = partition_to_word(&[], 2, 1, (1, 2)).unwrap();
        let q = ProductQuery {
            basis: BasisKind::Cohomology,
            factors: FactorInput::Typed(vec![s1, s2]),
            d: None,
        };
        let e = expand_product(&q).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.terms[0].coefficient, BigInt::from(1));
        match &e.terms[0].target {
            TargetKey::Perm(w) => assert!(permutation_to_partition(w, 1).is_empty()),
            TargetKey::Word(_) => panic!("cohomology targets are permutations"),
        }
        // The point class squared on the projective line is zero.
        let s1 = partition_to_word(&[1], 2, 1, (2, 3)).unwrap();
        let s2 = partition_to_word(&[1], 2, 1, (1, 2)).unwrap();
        let q = ProductQuery {
            basis: BasisKind::Cohomology,
            factors: FactorInput::Typed(vec![s1, s2]),
            d: None,
        };
        assert!(expand_product(&q).unwrap().terms.is_empty());
    }

    #[test]
    fn duality_on_the_smallest_flag() {
        let r = duality_check(2, &[0, 1, 2, 2]);
        assert!(r.ok(), "{:?}", r.failures);
        assert!(r.checked > 0);
    }

    #[test]
    fn mixed_factor_shapes_fail() {
        let q = ProductQuery {
            basis: BasisKind::KTheory,
            factors: FactorInput::Binary(words(&["01", "011"])),
            d: None,
        };
        assert!(matches!(expand_product(&q), Err(QueryError::MixedLengths(_))));
        let q = ProductQuery {
            basis: BasisKind::KTheory,
            factors: FactorInput::Binary(words(&["01", "11"])),
            d: None,
        };
        assert!(matches!(expand_product(&q), Err(QueryError::MixedContent(_))));
    }

    #[test]
    fn dimension_vector_recovery() {
        // m = 3, n = 4, d = (0, 1, 2, 4): side 1 over {2, 3} with two 2s,
        // side 2 over {1, 3, 2} with one 1, one 3, two 2s.
        let typed = vec![vec![2, 3, 2, 3], vec![1, 3, 2, 2]];
        assert_eq!(recover_dimension_vector(&typed, 4).unwrap(), vec![0, 1, 2, 4]);
        let clash = vec![vec![2, 3, 2, 3], vec![1, 3, 3, 2]];
        assert!(recover_dimension_vector(&clash, 4).is_err());
    }

    #[test]
    fn partition_word_round_trip() {
        // d = 2, n = 4, partition (2, 1).
        let word = partition_to_word(&[2, 1], 4, 2, (2, 3)).unwrap();
        assert_eq!(word, vec![3, 2, 3, 2]);
        let w = Permutation::from_string(&word, &[2, 3]).unwrap();
        assert_eq!(permutation_to_partition(&w, 2), vec![2, 1]);
    }

    #[test]
    fn symmetry_sweep_passes_for_tiny_sides() {
        let report = verify_symmetry(2);
        assert!(report.ok(), "{:?}", report.failures);
        assert!(report.checked > 0);
    }

    #[test]
    fn piece_pattern_agreement_holds_for_tiny_sides() {
        let report = verify_piece_pattern_agreement(2);
        assert!(report.ok(), "{:?}", report.failures);
        assert!(report.checked > 0);
    }
}
