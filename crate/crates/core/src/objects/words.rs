//! Boundary vocabulary: binary strings, two-letter duals, and permutations
//! with dimension-vector bookkeeping.
//!
//! A binary string of weight `d` (number of zeros) encodes a boundary side;
//! `reverse` is the involution written `ξ^⊥`.  A permutation `w` is stored in
//! one-line notation with values `1..=n`.  The dimension vector
//! `d = (0 = d_0 <= d_1 <= ... <= d_m = n)` selects the parabolic quotient:
//! `w` is a minimal coset representative when its descents all lie in `d`.

use std::fmt;

use super::ValidationError;

/// A 0/1 string.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryString(Vec<u8>);

impl BinaryString {
    pub fn new(bits: Vec<u8>) -> Result<Self, ValidationError> {
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(ValidationError::NotOverLetters { found: vec![b], letters: vec![0, 1] });
        }
        Ok(BinaryString(bits))
    }

    pub fn parse(s: &str) -> Result<Self, ValidationError> {
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => return Err(ValidationError::BadLabel { label: s.to_string() }),
            }
        }
        Ok(BinaryString(bits))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn zeros(&self) -> usize {
        self.0.iter().filter(|&&b| b == 0).count()
    }

    pub fn ones(&self) -> usize {
        self.0.len() - self.zeros()
    }

    /// Number of (1, 0) pairs in this order, the inversion count.
    pub fn inversions(&self) -> usize {
        let mut ones = 0;
        let mut inv = 0;
        for &b in &self.0 {
            if b == 1 {
                ones += 1;
            } else {
                inv += ones;
            }
        }
        inv
    }

    /// The reversed string, written `ξ^⊥`.
    pub fn reversed(&self) -> Self {
        BinaryString(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryString({self})")
    }
}

/// Reverse a two-letter string and swap its letters.
pub fn dual_string(s: &[u8], letters: (u8, u8)) -> Result<Vec<u8>, ValidationError> {
    let (a, b) = letters;
    s.iter()
        .rev()
        .map(|&x| {
            if x == a {
                Ok(b)
            } else if x == b {
                Ok(a)
            } else {
                Err(ValidationError::NotOverLetters { found: vec![x], letters: vec![a, b] })
            }
        })
        .collect()
}

/// Check that a dimension vector weakly increases from 0 to `n`.
pub(crate) fn check_dimension_vector(d: &[usize], n: usize) -> Result<(), ValidationError> {
    let ok = d.first() == Some(&0)
        && d.last() == Some(&n)
        && d.windows(2).all(|w| w[0] <= w[1]);
    if ok {
        Ok(())
    } else {
        Err(ValidationError::BadDimensionVector { d: d.to_vec(), n })
    }
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self, ValidationError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || seen[x] {
                return Err(ValidationError::NotAPermutation { word, n });
            }
            seen[x] = true;
        }
        Ok(Permutation(word))
    }

    /// Parse either one-line digits ("2413") or a comma list ("2,4,1,3").
    pub fn parse(s: &str) -> Result<Self, ValidationError> {
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse().map_err(|_| ValidationError::BadLabel {
                    label: s.to_string(),
                }))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10).map(|d| d as usize).ok_or(ValidationError::BadLabel {
                        label: s.to_string(),
                    })
                })
                .collect::<Result<_, _>>()?
        };
        Self::new(word)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The longest element `n, n-1, ..., 1`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    /// Longest element of the parabolic subgroup fixed by the dimension
    /// vector: each block `d_i+1 ..= d_{i+1}` is reversed in place.
    pub fn longest_parabolic(d: &[usize], n: usize) -> Result<Self, ValidationError> {
        check_dimension_vector(d, n)?;
        let mut word: Vec<usize> = (1..=n).collect();
        for w in d.windows(2) {
            word[w[0]..w[1]].reverse();
        }
        Ok(Permutation(word))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    /// Value at `x` (1-based).
    pub fn apply(&self, x: usize) -> usize {
        self.0[x - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Composition `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation(other.0.iter().map(|&x| self.0[x - 1]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            word[v - 1] = i + 1;
        }
        Permutation(word)
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let mut len = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    len += 1;
                }
            }
        }
        len
    }

    /// Positions `i` with `w(i) > w(i+1)`, 1-based.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.0.len()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    /// The dual `w0 ∘ w ∘ w0(d)` with respect to a dimension vector.
    pub fn dual(&self, d: &[usize]) -> Result<Permutation, ValidationError> {
        let n = self.n();
        let w0 = Permutation::longest(n);
        let w0d = Permutation::longest_parabolic(d, n)?;
        Ok(w0.compose(&self.compose(&w0d)))
    }

    /// Build `w(λ)_Σ` from a string: positions of `sigma[0]` in ascending
    /// order, then positions of `sigma[1]`, and so on.
    pub fn from_string(lam: &[u8], sigma: &[u8]) -> Result<Permutation, ValidationError> {
        if let Some(&x) = lam.iter().find(|x| !sigma.contains(x)) {
            return Err(ValidationError::NotOverLetters {
                found: vec![x],
                letters: sigma.to_vec(),
            });
        }
        let mut word = Vec::with_capacity(lam.len());
        for &letter in sigma {
            word.extend(
                lam.iter().enumerate().filter(|(_, &x)| x == letter).map(|(p, _)| p + 1),
            );
        }
        Permutation::new(word)
    }

    /// Inverse of [`Permutation::from_string`]: write `sigma[t]` at the
    /// positions `w(d_t + 1), ..., w(d_{t+1})`.  Requires `w` to be a minimal
    /// coset representative (ascending within the blocks of `d`).
    pub fn to_string_over(&self, sigma: &[u8], d: &[usize]) -> Result<Vec<u8>, ValidationError> {
        let n = self.n();
        check_dimension_vector(d, n)?;
        if d.len() != sigma.len() + 1 {
            return Err(ValidationError::BadDimensionVector { d: d.to_vec(), n });
        }
        for w in d.windows(2) {
            for i in w[0] + 1..w[1] {
                if self.0[i - 1] > self.0[i] {
                    return Err(ValidationError::DescentOutsideD {
                        position: i,
                        d: d.to_vec(),
                    });
                }
            }
        }
        let mut out = vec![0u8; n];
        for (t, &letter) in sigma.iter().enumerate() {
            for i in d[t]..d[t + 1] {
                out[self.0[i] - 1] = letter;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() <= 9 {
            for &v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let words: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", words.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Length of the longest minimal coset representative for the dimension
/// vector: `C(n,2) - Σ C(d_{i+1} - d_i, 2)`.
pub fn coset_top_length(d: &[usize], n: usize) -> Result<usize, ValidationError> {
    check_dimension_vector(d, n)?;
    let choose2 = |x: usize| x * x.saturating_sub(1) / 2;
    Ok(choose2(n) - d.windows(2).map(|w| choose2(w[1] - w[0])).sum::<usize>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inversions_count_one_before_zero_pairs() {
        assert_eq!(BinaryString::parse("0101").unwrap().inversions(), 1);
        assert_eq!(BinaryString::parse("1100").unwrap().inversions(), 4);
        assert_eq!(BinaryString::parse("0011").unwrap().inversions(), 0);
        assert_eq!(BinaryString::parse("").unwrap().inversions(), 0);
    }

    #[test]
    fn reversal_complements_inversions() {
        let s = BinaryString::parse("011010").unwrap();
        let d = s.zeros();
        let total = d * (s.len() - d);
        assert_eq!(s.inversions() + s.reversed().inversions(), total);
    }

    #[test]
    fn dual_string_swaps_and_reverses() {
        assert_eq!(dual_string(&[4, 2, 4, 2, 4], (2, 4)).unwrap(), vec![2, 4, 2, 4, 2]);
        assert!(dual_string(&[1, 2], (2, 4)).is_err());
    }

    #[test]
    fn compose_applies_right_first() {
        let u = Permutation::parse("231").unwrap();
        let v = Permutation::parse("132").unwrap();
        // (u ∘ v)(1) = u(1) = 2, (u ∘ v)(2) = u(3) = 1, (u ∘ v)(3) = u(2) = 3
        assert_eq!(u.compose(&v), Permutation::parse("213").unwrap());
    }

    #[test]
    fn longest_parabolic_reverses_blocks() {
        let w = Permutation::longest_parabolic(&[0, 2, 2, 4], 4).unwrap();
        assert_eq!(w, Permutation::parse("2143").unwrap());
        let w = Permutation::longest_parabolic(&[0, 4], 4).unwrap();
        assert_eq!(w, Permutation::parse("4321").unwrap());
    }

    #[test]
    fn dual_matches_known_value() {
        let w = Permutation::parse("1324").unwrap();
        assert_eq!(w.dual(&[0, 2, 2, 2, 4]).unwrap(), Permutation::parse("2413").unwrap());
    }

    #[test]
    fn string_permutation_round_trip() {
        let lam = [4u8, 1, 4, 1];
        let w = Permutation::from_string(&lam, &[4, 1]).unwrap();
        assert_eq!(w, Permutation::parse("1324").unwrap());
        let back = w.to_string_over(&[4, 1], &[0, 2, 4]).unwrap();
        assert_eq!(back, lam);
    }

    #[test]
    fn descent_outside_d_is_reported() {
        let w = Permutation::parse("2134").unwrap();
        let err = w.to_string_over(&[0, 1], &[0, 2, 4]).unwrap_err();
        assert_eq!(err, ValidationError::DescentOutsideD { position: 1, d: vec![0, 2, 4] });
    }

    #[test]
    fn top_coset_length_formula() {
        assert_eq!(coset_top_length(&[0, 2, 4], 4).unwrap(), 6 - 1 - 1);
        assert_eq!(coset_top_length(&[0, 4], 4).unwrap(), 0);
        assert_eq!(coset_top_length(&[0, 0, 2, 2, 4], 4).unwrap(), 4);
    }
}
