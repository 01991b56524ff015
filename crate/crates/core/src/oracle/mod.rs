//! Independent closed forms for eta, beta and zeta at non-positive
//! integers, built on Bernoulli and Euler numbers.
//!
//! Bernoulli numbers use the `B_1 = +1/2` convention. With it
//! `eta(-n) = (2^(n+1) - 1) B_(n+1) / (n+1)` and `zeta(-n) = -B_(n+1)/(n+1)`
//! hold at `n = 0` as well, giving `eta(0) = 1/2` and `zeta(0) = -1/2`.

mod functional;
mod reference;

use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::Rational;

pub use functional::{convergent_sum, functional_check, sin_half_pi, CertifiedSum, FunctionalCheck, MAX_TERMS};
pub use reference::{reference_row, reference_rows, Erratum, ReferenceRow};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("closed form needs s <= 0, got {0}")]
    PositiveArgument(i64),
    #[error("eta/zeta conversion factor 1 - 2^(1-s) vanishes at s = 1")]
    SingularConversion,
    #[error("{0} is not an alternating convergent eta/beta series")]
    NotConvergent(String),
    #[error("functional check needs s <= -1, got {0}")]
    NotNegative(i64),
    #[error("cannot certify {digits} digits: {reason}")]
    PrecisionUnachievable { digits: u32, reason: String },
}

/// Row `m` of Pascal's triangle.
fn binomial_row(m: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..m {
        let next = &row[k] * BigInt::from(m - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

/// Cached Bernoulli numbers, `B_1 = +1/2`.
#[derive(Clone, Debug)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl Default for BernoulliTable {
    fn default() -> Self {
        Self { values: vec![Rational::one()] }
    }
}

impl BernoulliTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn prefix(&self) -> &[Rational] {
        &self.values
    }

    /// `B_n`, extending the cache through `sum_{j<=m} C(m+1, j) B_j = m + 1`.
    pub fn get(&mut self, n: usize) -> Rational {
        while self.values.len() <= n {
            let m = self.values.len();
            let row = binomial_row(m + 1);
            let partial: Rational = self
                .values
                .iter()
                .zip(&row)
                .map(|(b, c)| b * Rational::from_integer(c.clone()))
                .sum();
            let target = Rational::from_integer(BigInt::from(m + 1));
            self.values.push((target - partial) / Rational::from_integer(row[m].clone()));
        }
        self.values[n].clone()
    }

    /// Re-checks the defining recurrence on every cached prefix.
    pub fn recurrence_holds(&self) -> bool {
        (0..self.values.len()).all(|m| {
            let row = binomial_row(m + 1);
            let lhs: Rational = self.values[..=m]
                .iter()
                .zip(&row)
                .map(|(b, c)| b * Rational::from_integer(c.clone()))
                .sum();
            lhs == Rational::from_integer(BigInt::from(m + 1))
        })
    }
}

/// Cached Euler (secant) numbers.
#[derive(Clone, Debug)]
pub struct EulerTable {
    values: Vec<BigInt>,
}

impl Default for EulerTable {
    fn default() -> Self {
        Self { values: vec![BigInt::one()] }
    }
}

impl EulerTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn prefix(&self) -> &[BigInt] {
        &self.values
    }

    /// `E_n`; odd indices vanish and `E_2n = -sum_{k<n} C(2n, 2k) E_2k`.
    pub fn get(&mut self, n: usize) -> BigInt {
        while self.values.len() <= n {
            let m = self.values.len();
            if m % 2 == 1 {
                self.values.push(BigInt::zero());
                continue;
            }
            let row = binomial_row(m);
            let partial: BigInt = (0..m / 2).map(|k| &row[2 * k] * &self.values[2 * k]).sum();
            self.values.push(-partial);
        }
        self.values[n].clone()
    }

    pub fn recurrence_holds(&self) -> bool {
        let odd_zero = self.values.iter().skip(1).step_by(2).all(Zero::is_zero);
        let secant = (1..=(self.values.len() - 1) / 2).all(|n| {
            let row = binomial_row(2 * n);
            (0..=n).map(|k| &row[2 * k] * &self.values[2 * k]).sum::<BigInt>().is_zero()
        });
        self.values[0].is_one() && odd_zero && secant
    }
}

static BERNOULLI: LazyLock<Mutex<BernoulliTable>> = LazyLock::new(Default::default);
static EULER: LazyLock<Mutex<EulerTable>> = LazyLock::new(Default::default);

pub fn bernoulli(n: usize) -> Rational {
    BERNOULLI.lock().expect("bernoulli table").get(n)
}

pub fn euler(n: usize) -> BigInt {
    EULER.lock().expect("euler table").get(n)
}

fn order(s: i64) -> Result<usize, OracleError> {
    if s > 0 {
        return Err(OracleError::PositiveArgument(s));
    }
    Ok(s.unsigned_abs() as usize)
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

/// `eta(s)` for `s <= 0`: `(2^(n+1) - 1) B_(n+1) / (n+1)` with `n = -s`.
pub fn eta_closed(s: i64) -> Result<Rational, OracleError> {
    let n = order(s)?;
    let factor = Rational::from_integer(pow2(n + 1) - 1);
    Ok(factor * bernoulli(n + 1) / Rational::from_integer(BigInt::from(n + 1)))
}

/// `beta(s)` for `s <= 0`: `E_n / 2` with `n = -s`.
pub fn beta_closed(s: i64) -> Result<Rational, OracleError> {
    let n = order(s)?;
    Ok(Rational::new(euler(n), BigInt::from(2)))
}

/// `zeta(s)` for `s <= 0`: `-B_(n+1) / (n+1)` with `n = -s`.
pub fn zeta_closed(s: i64) -> Result<Rational, OracleError> {
    let n = order(s)?;
    Ok(-bernoulli(n + 1) / Rational::from_integer(BigInt::from(n + 1)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnownValue {
    Eta(Rational),
    Zeta(Rational),
}

/// Converts between `eta(s)` and `zeta(s)` through
/// `eta(s) = (1 - 2^(1-s)) zeta(s)`; returns the other function's value.
pub fn eta_zeta_convert(s: i64, known: &KnownValue) -> Result<Rational, OracleError> {
    if s == 1 {
        return Err(OracleError::SingularConversion);
    }
    let exp = 1 - s;
    let power = if exp >= 0 {
        Rational::from_integer(pow2(exp as usize))
    } else {
        Rational::new(BigInt::one(), pow2(exp.unsigned_abs() as usize))
    };
    let factor = Rational::one() - power;
    Ok(match known {
        KnownValue::Eta(eta) => eta / factor,
        KnownValue::Zeta(zeta) => zeta * factor,
    })
}
