//! Exact arithmetic in the ground field Q(s): arbitrary-precision rationals,
//! univariate polynomials in the formal variable `s`, and rational functions
//! kept in canonical form (reduced, monic denominator).
//!
//! `s` stands for the complex frequency of the Laplace transform, so an
//! inductance L contributes the impedance s*L and a capacitance C the
//! impedance 1/(s*C). All arithmetic is exact; canonical form makes
//! structural equality coincide with equality in the field.

mod parse;
mod poly;
mod scalar;

pub use poly::Polynomial;
pub use scalar::Scalar;

/// Arbitrary-precision rational number, always reduced, denominator positive.
pub type Rational = num::BigRational;

/// Convenience constructor for small rationals.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
