//! The combinatorial objects: arrays, puzzles, colorings, square labelings,
//! and the binary-string / permutation vocabulary for boundary data.
//!
//! Every object validates on construction and deserialization, so a value of
//! one of these types is always structurally sound.  JSON serialization is
//! canonical: maps are emitted with sorted keys and documents carry a `type`
//! tag, so serialize-parse-serialize is byte-identical.

pub(crate) mod array;
pub(crate) mod coloring;
pub(crate) mod puzzle;
pub(crate) mod square;
pub(crate) mod words;

pub use array::{validate_flat_rows, InterlacingArray};
pub use coloring::TriangleColoring;
pub use puzzle::{label_from_0110, label_to_0110, Label0110, TrianglePuzzle0110, TrianglePuzzle123};
pub use square::SquareLabeling;
pub use words::{coset_top_length, dual_string, BinaryString, Permutation};

use thiserror::Error;

/// Everything that can be wrong with an object under construction.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValidationError {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("alphabet must hold {rank} distinct symbols, got {found:?}")]
    BadAlphabet { rank: usize, found: Vec<u8> },
    #[error("row {row} has {found} entries, expected {expected}")]
    RowShape { row: usize, found: usize, expected: usize },
    #[error("symbol {symbol} is not in the alphabet {alphabet:?}")]
    ForeignSymbol { symbol: u8, alphabet: Vec<u8> },
    #[error("row {row}: symbol {symbol} occurs {found} times, expected {expected}")]
    ContentViolation { row: usize, symbol: u8, found: usize, expected: usize },
    #[error(
        "row {row}: consecutive occurrences of symbol {symbol} at doubled horizontal \
         positions {} and {} have no occurrence in row {} between them",
        .positions.0, .positions.1, .row - 1
    )]
    InterlacingViolation { row: usize, symbol: u8, positions: (i64, i64) },
    #[error("missing label for edge {edge}")]
    MissingEdge { edge: String },
    #[error("unknown edge or vertex key {key:?} for side length {side}")]
    UnknownKey { key: String, side: usize },
    #[error("bad label {label:?}")]
    BadLabel { label: String },
    #[error("face at {face}: labels {labels:?} violate the face rule")]
    FaceViolation { face: String, labels: Vec<String> },
    #[error("vertices ({},{}) and ({},{}) are adjacent but share color {color}", .a.0, .a.1, .b.0, .b.1)]
    AdjacentSameColor { a: (usize, usize), b: (usize, usize), color: u8 },
    #[error("basepoint must be colored 0, got {found}")]
    BaseNotZero { found: u8 },
    #[error("expected a document of type {expected:?}, got {found:?}")]
    WrongDocType { expected: String, found: String },
    #[error("string {found:?} is not over the letters {letters:?}")]
    NotOverLetters { found: Vec<u8>, letters: Vec<u8> },
    #[error("{word:?} is not a permutation of 1..={n}")]
    NotAPermutation { word: Vec<usize>, n: usize },
    #[error("permutation has a descent at position {position}, outside the dimension vector {d:?}")]
    DescentOutsideD { position: usize, d: Vec<usize> },
    #[error("dimension vector {d:?} must weakly increase from 0 to {n}")]
    BadDimensionVector { d: Vec<usize>, n: usize },
}
