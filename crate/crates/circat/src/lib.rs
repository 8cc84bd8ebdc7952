//! Exact, compositional circuit semantics.
//!
//! Circuits are labeled graphs with input and output boundaries. They compose
//! by gluing boundaries, and every circuit denotes a relation between the
//! potentials and currents at its terminals, computed exactly over the field
//! of rational functions Q(s). The crate provides the full pipeline:
//!
//! ```text
//! terms ----> circuits ----> cospans ----> corelations
//!   |            |                             |
//!   |            | blackbox                    | wire_relation
//!   v            v                             v
//! signal-flow x linear / affine relations over Q(s)
//! ```
//!
//! Relations are kept in canonical form (reduced row echelon bases, offsets
//! reduced modulo the linear part), so structural equality is mathematical
//! equality throughout.

pub mod circuit;
pub mod error;
pub mod freeprop;
pub mod kfield;
pub mod laws;
pub mod linrel;
pub mod setcat;
pub mod symplag;

pub use error::Error;
