//! Exact values for divergent alternating series.
//!
//! The odd- and even-indexed partial sums of series such as
//! `1 - 2^n + 3^n - 4^n + ...` lie exactly on two polynomials in the index.
//! Where those polynomials intersect (the anti-limit) their common value is
//! the value assigned to the series. The crate fits the polynomials exactly
//! ([`engine`]), solves for their intersections ([`solver`]) and checks the
//! results against Bernoulli/Euler closed forms and functional equations
//! ([`oracle`]).

pub mod algebra;
pub mod engine;
pub mod oracle;
pub mod series;
pub mod solver;

pub use algebra::{Polynomial, Rational};
pub use engine::{characterize, CharacteristicPair, EngineError, FitOptions};
pub use series::{Family, SeriesSpec};
pub use solver::{evaluate, intersect, AntiLimit, AntiLimitValue, SolverError};
