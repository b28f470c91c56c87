//! Class-group arithmetic for positive definite binary quadratic forms.
//!
//! The crate computes with forms `(A, B, C)` of negative discriminant: Gauss
//! reduction, Dirichlet composition, the Šimerka map from forms onto factored
//! rationals, factor-base relation collection, class-group structure via
//! Hermite/Smith normal forms, exact element orders, and integer factorization
//! by extracting ambiguous forms. Everything runs on exact arbitrary-precision
//! integers; nothing here is floating point.
//!
//! # Modules
//!
//! - [`arith`] — Kronecker symbol, modular square roots, primality,
//!   smoothness factoring, divisor sums, Carmichael/Fermat-number checks.
//! - [`bqf`] — form representation, reduction, equivalence, ambiguity,
//!   represented-value scans, and brute-force class enumeration.
//! - [`compose`] — Dirichlet composition, inverses, and fast powers.
//! - [`map`] — prime forms, factor bases, and the Šimerka map `ŝ` sending a
//!   form and a smooth represented value to a signed factored rational.
//! - [`relations`] — relation collection over a factor base, HNF/SNF lattice
//!   reduction, group structure, and exact element orders.
//! - [`factor`] — the end-to-end factorization pipeline via ambiguous forms.
//! - [`cli`] — the batch command-line front end (see `src/main.rs`).
//!
//! The `examples/` directory has one runnable program per capability; start
//! with `cargo run --example class_group`.

pub mod arith;
pub mod bqf;
pub mod cli;
pub mod compose;
mod error;
pub mod factor;
mod linalg;
pub mod map;
pub mod relations;

pub use error::{Error, Result};
