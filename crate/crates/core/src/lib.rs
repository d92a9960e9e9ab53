//! Exact combinatorics for the groups of the Freudenthal magic square.
//!
//! The crate covers root systems and Weyl groups in Bourbaki numbering,
//! parabolic double cosets, Poincaré polynomials of flag varieties,
//! J-invariant upper-motive polynomials, divisibility in `ℤ[t]` versus
//! `ℕ₀[t]`, bookkeeping for motivic decompositions, real quadratic forms
//! (including the Allison–Faulkner Killing form of type E₇) and the
//! classification tables of the magic square as queryable data.
//!
//! Everything is exact: polynomial coefficients are arbitrary-precision
//! integers and no floating point is used anywhere.

pub mod cgmb;
pub mod error;
pub mod jinv;
pub mod magictables;
pub mod output;
pub mod poincare;
pub mod polyring;
pub mod qform;
pub mod rootsys;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use polyring::IntPoly;
pub use rootsys::{CartanType, DiagramAut, NodeSet, RootSystem, Series};
pub use weyl::WeylElement;
