//! Computing with finite skew braces.
//!
//! A skew brace is a set carrying two group structures `+` and `∘` tied
//! together by `a ∘ (b + c) = a ∘ b - a + a ∘ c`. This crate represents
//! finite skew braces by Cayley tables on `{0..n-1}` (with `0` the identity
//! of both groups) and provides:
//!
//! * axiom validation with replayable witnesses ([`brace`]),
//! * ideals, quotients and semiprimality verdicts ([`ideals`]),
//! * semidirect and wreath products ([`products`]),
//! * the induced set-theoretic Yang–Baxter solution ([`ybe`]),
//! * constructors, holomorph enumeration and a text format ([`corpus`]),
//! * automorphism and action enumeration ([`actions`]),
//! * exhaustive verification sweeps ([`verify`]).

pub mod actions;
pub mod brace;
pub mod corpus;
mod error;
pub(crate) mod group;
pub mod ideals;
pub mod limits;
pub mod products;
mod subset;
pub mod verify;
pub mod ybe;

pub use brace::{FiniteSkewBrace, Rule, TableKind, ValidationReport, Violation};
pub use error::{Error, Result};
pub use ideals::{Ideal, SemiprimeMethod, SemiprimeVerdict};
pub use products::{SigmaAction, WreathContext};
pub use subset::SubSet;
