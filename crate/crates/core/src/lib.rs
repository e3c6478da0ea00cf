//! Finite skew braces and set-theoretic solutions of the Yang–Baxter equation.
//!
//! Elements of every finite structure are the indices `0..n`; the shared
//! identity of a skew brace is always `0`.

pub mod brace;
pub mod bword;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod group;
pub mod ideals;
pub mod perm;
pub mod presentation;
pub mod solution;
pub mod structure;

pub use brace::{make_almost_trivial, make_trivial, semidirect, solution_from_brace, FiniteSkewBrace, Violation};
pub use bword::{parse_bword, print_bword, Assignment, BWord};
pub use enumerate::{enumerate_skew_braces, enumerate_solutions, BraceCatalog, EnumerationMethod};
pub use error::{Error, Result};
pub use group::GroupTable;
pub use ideals::{AscendingSeries, ElementSubset, Quotient};
pub use perm::Perm;
pub use presentation::SkewBracePresentation;
pub use solution::{make_flip, SolutionTable};
pub use structure::{permutation_brace, PermBraceResult, PermPair};
