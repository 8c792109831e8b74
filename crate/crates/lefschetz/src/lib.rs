//! Exact computations with positive Dehn twist factorizations of Lefschetz
//! pencils and fibrations.
//!
//! A genus-g pencil with m base points is encoded by a positive factorization
//! of the boundary multi-twist in the mapping class group of the compact
//! surface with m boundary components. This crate works with the homological
//! shadow of that data: every twist curve is a named integer homology class
//! on the surface, a Dehn twist acts as a symplectic transvection, and the
//! factorization condition becomes an exact matrix identity. On top of that
//! sit the moves (Hurwitz moves, global and partial conjugation, relation
//! substitution with machine-checked certificates), the total-space
//! invariants (Euler characteristic, first homology via Smith normal form,
//! reducible-fiber bookkeeping), partial doubling arithmetic, and the
//! inequivalence certificates the doubling recipe produces.
//!
//! All integer arithmetic is arbitrary precision; there is no tolerance
//! anywhere. With the default `parallel` feature, long transvection products
//! and batch verification fan out through rayon; disabling the feature gives
//! a fully sequential build with identical results.

pub mod corpus;
pub mod curves;
pub mod doubling;
mod error;
pub mod factorization;
pub mod format;
pub mod homlin;
pub mod pencil;
pub mod surface;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
