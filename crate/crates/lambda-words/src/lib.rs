//! Exact arithmetic for groups of infinite words and the trees they act on.
//!
//! The value group for lengths and distances is Λ = ℤⁿ with the
//! right-lexicographic order (higher coordinates dominate), a discretely
//! ordered abelian group whose minimal positive element is `(1, 0, …, 0)`.
//! Words are functions from closed Λ-segments `[1, |w|]` to letters; the
//! shipped representation ([`words::Word`]) is a block normal form built from
//! finite segments and eventually-periodic "tail" segments, closed under
//! inverse, restriction, concatenation, longest common prefix and the
//! cancellation product `∗`.
//!
//! On top of the word algebra sit finitely generated groups of reduced words
//! ([`group_core::GroupDef`]), the universal tree on which such a group acts
//! freely by isometries ([`tree`]), and ready-made instances
//! ([`constructions`]): free groups and two HNN extensions of a free group
//! embedded in the words over ℤ².
//!
//! Everything is integer-exact: no floating point, no tolerances.
//!
//! See the crate examples for end-to-end tours of each capability, and the
//! `lambda-words` binary for the command-line front end.

pub mod cli;
pub mod constructions;
pub mod defs;
pub mod group_core;
pub mod oracle;
pub mod ordered_group;
pub mod tree;
pub mod words;

pub use ordered_group::LambdaElem;
pub use words::{Alphabet, FiniteWord, Letter, Word};
