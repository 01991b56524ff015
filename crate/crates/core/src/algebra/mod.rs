//! Exact rational scalars and dense univariate polynomials.
//!
//! Everything in here is exact except [`hp`], which supplies fixed-point
//! decimal reals and complex numbers for the places where an irrational or
//! complex value has to be written down (roots, pi powers, convergent sums).

pub mod hp;
mod interp;
mod parity;
mod poly;

use num_bigint::BigInt;
use thiserror::Error;

pub use hp::{HpComplex, HpReal, DEFAULT_PRECISION, MIN_PRECISION};
pub use interp::{interpolate, NewtonTable, Point};
pub use parity::{parity_about, Parity};
pub use poly::{PolyOp, Polynomial};

/// Arbitrary-precision exact fraction, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `num / den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("duplicate abscissa x = {0}")]
    DuplicateAbscissa(Rational),
    #[error("interpolation needs at least one point")]
    EmptyInput,
}
