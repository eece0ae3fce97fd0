//! Computational tools for the geometry of finitely generated monoids.
//!
//! The crate covers presentations and rewriting ([`presentation`],
//! [`rewriting`]), truncated right Cayley graphs with their directed
//! semimetric ([`cayley`]), the directed 2-complexes `K_n` over them
//! ([`complex`]), quasi-isometry checks between finite semimetric spaces
//! ([`qi`]) and the M(X) monoids whose Cayley graphs are trees independent
//! of X ([`families`]).

pub mod cayley;
pub mod complex;
pub mod error;
pub mod families;
pub mod growth;
pub mod presentation;
pub mod qi;
pub mod rewriting;
pub mod word;

pub use error::{Error, Result};
pub use growth::{GrowthTable, GrowthValue};
pub use word::{Alphabet, Gen, Word};

/// Exact arithmetic for quasi-isometry constants.
pub type Rational = num_rational::Ratio<i64>;
