//! Directly summed convergent eta/beta values and the functional equations
//! that tie them to the values at negative integers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::OracleError;
use crate::algebra::{HpReal, Rational, MIN_PRECISION};
use crate::series::{Family, SeriesSpec};

/// Hard cap on summed terms.
pub const MAX_TERMS: usize = 1_000_000;

/// Guard digits absorbing per-term rounding (one half-ulp per term).
const SUM_GUARD: u32 = 10;

/// Partial sum of an alternating convergent series together with a bound
/// on `|sum - value|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedSum {
    pub value: HpReal,
    pub error_bound: Rational,
    pub terms: usize,
}

fn pow10(n: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u8), n as usize)
}

/// `(family, s)` for the alternating series the summation supports.
fn alternating_target(spec: &SeriesSpec) -> Result<(Family, u32), OracleError> {
    match spec {
        SeriesSpec::Eta(s) if *s >= 1 => Ok((Family::Eta, *s as u32)),
        SeriesSpec::Beta(s) if *s >= 1 => Ok((Family::Beta, *s as u32)),
        other => Err(OracleError::NotConvergent(other.to_string())),
    }
}

fn base(family: Family, k: usize) -> BigInt {
    match family {
        Family::Eta => BigInt::from(k),
        Family::Beta => BigInt::from(2 * k - 1),
    }
}

/// Sums `eta(s)` (`s >= 1`) or `beta(s)` (`s >= 1`) term by term until the
/// alternating-series remainder `|a_(N+1)|` drops below half of
/// `10^-precision`.
pub fn convergent_sum(spec: &SeriesSpec, precision: u32) -> Result<CertifiedSum, OracleError> {
    let (family, s) = alternating_target(spec)?;
    let threshold = pow10(precision) * 2u8;
    // |a_k| = 1 / base(k)^s; find the first k with base(k)^s >= 2 * 10^precision
    let estimate = ((precision as f64 + 0.31) / s as f64 * std::f64::consts::LN_10).exp();
    let mut first_small = match family {
        Family::Eta => estimate,
        Family::Beta => (estimate + 1.0) / 2.0,
    }
    .floor()
    .max(1.0);
    if first_small > (MAX_TERMS + 1) as f64 * 1.01 {
        return Err(OracleError::PrecisionUnachievable {
            digits: precision,
            reason: format!("{spec} needs more than {MAX_TERMS} terms"),
        });
    }
    let mut k = first_small as usize;
    while k > 1 && num_traits::pow(base(family, k - 1), s as usize) >= threshold {
        k -= 1;
    }
    while num_traits::pow(base(family, k), s as usize) < threshold {
        k += 1;
    }
    first_small = k as f64;
    let terms = first_small as usize - 1;
    if terms > MAX_TERMS {
        return Err(OracleError::PrecisionUnachievable {
            digits: precision,
            reason: format!("{spec} needs {terms} terms, cap is {MAX_TERMS}"),
        });
    }

    let working = (precision + SUM_GUARD).max(MIN_PRECISION);
    let unit = pow10(working);
    let mut acc = BigInt::zero();
    for k in 1..=terms {
        let den = num_traits::pow(base(family, k), s as usize);
        let term = (&unit + (&den >> 1usize)) / &den;
        if k % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let remainder = Rational::new(BigInt::one(), num_traits::pow(base(family, terms + 1), s as usize));
    let rounding = Rational::new(BigInt::from(terms), unit * 2u8);
    Ok(CertifiedSum {
        value: HpReal::from_scaled(acc, working),
        error_bound: remainder + rounding,
        terms,
    })
}

/// `sin(pi k / 2)` for integer `k`.
pub fn sin_half_pi(k: i64) -> i8 {
    match k.rem_euclid(4) {
        1 => 1,
        3 => -1,
        _ => 0,
    }
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Right-hand side of a functional equation evaluated numerically, with
/// its distance from the claimed rational value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalCheck {
    pub rhs: HpReal,
    pub residual: HpReal,
    /// Convergent-sum terms used (zero when the sine factor vanishes).
    pub terms: usize,
}

/// Checks a value at `s_negative = -n <= -1` against the functional
/// equation:
///
/// ```text
/// eta(-n)  = 2n (1 - 2^-(1+n)) / ((1 - 2^-n) pi^(n+1)) sin(pi n/2) Gamma(n) eta(n+1)
/// beta(-n) = (pi/2)^-(n+1) sin(pi (n+1)/2) Gamma(n+1) beta(n+1)
/// ```
///
/// Both reduce to `R * L(n+1) / pi^(n+1)` with `R` rational, so only the
/// pi power and the convergent sum are approximate.
pub fn functional_check(
    family: Family,
    s_negative: i64,
    value: &Rational,
    precision: u32,
) -> Result<FunctionalCheck, OracleError> {
    if s_negative > -1 {
        return Err(OracleError::NotNegative(s_negative));
    }
    let n = s_negative.unsigned_abs();
    let precision = precision.max(MIN_PRECISION);
    let rational_factor = match family {
        Family::Eta => {
            let num = Rational::one() - Rational::new(BigInt::one(), BigInt::one() << (n as usize + 1));
            let den = Rational::one() - Rational::new(BigInt::one(), BigInt::one() << n as usize);
            Rational::from_integer(BigInt::from(2 * n) * factorial(n - 1)) * num / den
                * Rational::from_integer(sin_half_pi(n as i64).into())
        }
        Family::Beta => Rational::from_integer(
            (BigInt::one() << (n as usize + 1)) * factorial(n) * BigInt::from(sin_half_pi(n as i64 + 1)),
        ),
    };
    let value_hp = HpReal::from_rational(value, precision);
    if rational_factor.is_zero() {
        return Ok(FunctionalCheck { rhs: HpReal::zero(precision), residual: value_hp.abs(), terms: 0 });
    }

    let magnitude = rational_factor.abs().ceil().to_integer().to_string().len() as u32;
    let working = precision + magnitude + 10;
    let pi = HpReal::pi(working).ok_or_else(|| OracleError::PrecisionUnachievable {
        digits: working,
        reason: "stored pi literal is too short".into(),
    })?;
    let spec = family.spec(n as i64 + 1);
    let sum = convergent_sum(&spec, working)?;
    let rhs = &(&HpReal::from_rational(&rational_factor, working) * &sum.value) / &pi.powu(n as u32 + 1);
    let residual = (&rhs - &value_hp.with_precision(working)).abs();
    Ok(FunctionalCheck { rhs, residual, terms: sum.terms })
}
