//! Multidimensional matrices of small order and the combinatorics of their
//! permanents.
//!
//! The crate covers dense exact-rational hypermatrices, bit-vector supports,
//! the equivalence group with lex-min canonical forms, permanents and
//! positive-diagonal search, realizability by polystochastic matrices,
//! unitrades and bitrades, and block permutations of order 4.

pub mod block;
pub mod catalog;
pub mod error;
pub mod format;
pub mod group;
pub mod latin;
pub mod matrix;
pub mod permanent;
pub mod realize;
pub mod shape;
pub mod simplex;
pub mod support;
pub mod trade;

pub use error::{Error, Result};
pub use group::{canonical_form, EquivalenceElement};
pub use matrix::{q, HyperMatrix, Q};
pub use permanent::{has_positive_diagonal, permanent_exact, Diagonal, PermanentOptions, PositivityWitness};
pub use shape::{hamming, line_through, Index, PlaneSelector, Shape};
pub use support::SupportSet;
