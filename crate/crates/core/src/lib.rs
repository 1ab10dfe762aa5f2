//! Interlacing triangular arrays and their combinatorial companions.
//!
//! An interlacing triangular array of rank `m` and height `n` is a stack of `m`
//! number triangles over an `m`-letter alphabet in which row `k` (across all
//! triangles) contains every letter exactly `k` times, and equal letters in
//! adjacent rows strictly alternate along a common horizontal scale.  This
//! crate provides:
//!
//! * the core objects ([`objects`]): arrays, triangle puzzles in both the
//!   `1/2/3` and `0/1/10` label systems, vertex colorings of the triangular
//!   grid, edge labelings of the square grid, and the binary-string /
//!   permutation vocabulary used for boundary data;
//! * the bijections between them ([`maps`]), plus the rank-lowering
//!   split/merge pair;
//! * exhaustive and boundary-restricted enumeration with pattern and piece
//!   filters ([`enumerate`]), together with the chromatic counts the array
//!   counts are compared against;
//! * expansion coefficients of products of Schubert-type classes in four
//!   bases, computed by filtered enumeration ([`schubert`]).
//!
//! Geometry conventions (side order, clockwise reading, sub-grid basepoints)
//! live in [`grid`] and are shared by every module.

pub mod enumerate;
pub mod grid;
pub mod maps;
pub mod objects;
mod report;
pub mod schubert;

pub use enumerate::{CountReport, PatternFilter, PieceFilter};
pub use objects::{
    BinaryString, InterlacingArray, Permutation, SquareLabeling, TriangleColoring,
    TrianglePuzzle0110, TrianglePuzzle123, ValidationError,
};
pub use report::CheckReport;
pub use schubert::{BasisKind, Expansion, ProductQuery};
