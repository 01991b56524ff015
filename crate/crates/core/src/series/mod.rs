//! Symbolic series, exact terms and partial sums, and the
//! alternating/divergent classifier.

mod parse;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{Point, Rational};

pub use parse::ParseError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("explicit series has only {available} terms, term {requested} requested")]
    OutOfTerms { requested: usize, available: usize },
    #[error("series terms are indexed from 1")]
    ZeroIndex,
}

/// A series described symbolically.
///
/// `Eta`, `Beta` and `Zeta` take an integer argument of either sign. The
/// combinators nest arbitrarily; `Explicit` holds finitely many leading
/// terms and fails with [`SeriesError::OutOfTerms`] past them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SeriesSpec {
    /// `sum (-1)^(k-1) / k^s`
    Eta(i64),
    /// `sum (-1)^(k-1) / (2k-1)^s`
    Beta(i64),
    /// `sum 1 / k^s`
    Zeta(i64),
    Scaled(Rational, Box<SeriesSpec>),
    Sum(Box<SeriesSpec>, Box<SeriesSpec>),
    Prepended(Rational, Box<SeriesSpec>),
    Explicit(Vec<Rational>),
}

/// `base^(-s)` for an integer base.
fn inverse_power(base: u64, s: i64) -> Rational {
    let p = num_traits::pow(BigInt::from(base), s.unsigned_abs() as usize);
    if s <= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

fn alternating_sign(n: usize, value: Rational) -> Rational {
    if n % 2 == 1 {
        value
    } else {
        -value
    }
}

impl SeriesSpec {
    pub fn scaled(mu: Rational, inner: SeriesSpec) -> Self {
        Self::Scaled(mu, Box::new(inner))
    }

    pub fn sum(left: SeriesSpec, right: SeriesSpec) -> Self {
        Self::Sum(Box::new(left), Box::new(right))
    }

    pub fn prepended(nu: Rational, inner: SeriesSpec) -> Self {
        Self::Prepended(nu, Box::new(inner))
    }

    /// Exact `n`th term, `n >= 1`.
    pub fn term(&self, n: usize) -> Result<Rational, SeriesError> {
        if n == 0 {
            return Err(SeriesError::ZeroIndex);
        }
        Ok(match self {
            Self::Eta(s) => alternating_sign(n, inverse_power(n as u64, *s)),
            Self::Beta(s) => alternating_sign(n, inverse_power(2 * n as u64 - 1, *s)),
            Self::Zeta(s) => inverse_power(n as u64, *s),
            Self::Scaled(mu, inner) => mu * inner.term(n)?,
            Self::Sum(a, b) => a.term(n)? + b.term(n)?,
            Self::Prepended(nu, inner) => {
                if n == 1 {
                    nu.clone()
                } else {
                    inner.term(n - 1)?
                }
            }
            Self::Explicit(terms) => terms.get(n - 1).cloned().ok_or(SeriesError::OutOfTerms {
                requested: n,
                available: terms.len(),
            })?,
        })
    }

    /// Running sums `S_1, S_2, ...`; stops after the first error.
    pub fn partial_sum_iter(&self) -> impl Iterator<Item = Result<Rational, SeriesError>> + '_ {
        let mut acc = Rational::zero();
        let mut failed = false;
        (1..).map_while(move |n| {
            if failed {
                return None;
            }
            match self.term(n) {
                Ok(t) => {
                    acc += t;
                    Some(Ok(acc.clone()))
                }
                Err(e) => {
                    failed = true;
                    Some(Err(e))
                }
            }
        })
    }

    pub fn partial_sums(&self, count: usize) -> Result<PartialSums, SeriesError> {
        let values = self.partial_sum_iter().take(count).collect::<Result<Vec<_>, _>>()?;
        Ok(PartialSums { values, spec: self.clone() })
    }

    /// Classification over the first `window` terms (at least 4 are
    /// inspected).
    ///
    /// A series is alternating when consecutive terms are nonzero with
    /// opposite signs. It counts as divergent when the magnitudes of the
    /// odd-indexed terms and of the even-indexed terms are each
    /// non-decreasing and the last inspected term is larger than the first.
    /// Checking the two parities separately admits combinations such as
    /// `2 - 1 + 4 - 3 + ...` whose magnitudes zig-zag but never shrink. A
    /// prepended term does not change the class of the series behind it.
    pub fn classify(&self, window: usize) -> SeriesClass {
        if let Self::Prepended(_, inner) = self {
            return inner.classify(window);
        }
        let terms: Vec<Rational> = (1..=window.max(4)).map_while(|n| self.term(n).ok()).collect();
        if terms.len() < 4 || terms.iter().any(Zero::is_zero) {
            return SeriesClass::Indeterminate;
        }
        let mags: Vec<Rational> = terms.iter().map(Signed::abs).collect();
        let alternating = terms.windows(2).all(|w| w[0].is_positive() != w[1].is_positive());
        let same_sign = terms.iter().all(|t| t.is_positive() == terms[0].is_positive());
        let non_decreasing = |step_start: usize| {
            mags.iter()
                .skip(step_start)
                .step_by(2)
                .zip(mags.iter().skip(step_start + 2).step_by(2))
                .all(|(a, b)| a <= b)
        };
        let growing = mags.last() > mags.first();

        if alternating {
            if non_decreasing(0) && non_decreasing(1) && growing {
                SeriesClass::AlternatingDivergent
            } else if mags.windows(2).all(|w| w[1] < w[0]) {
                SeriesClass::AlternatingConvergent
            } else {
                SeriesClass::Indeterminate
            }
        } else if same_sign && mags.windows(2).all(|w| w[0] <= w[1]) {
            SeriesClass::MonotoneDivergent
        } else {
            SeriesClass::Indeterminate
        }
    }
}

/// The two function families the engine characterizes directly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Eta,
    Beta,
}

impl Family {
    pub fn spec(self, s: i64) -> SeriesSpec {
        match self {
            Family::Eta => SeriesSpec::Eta(s),
            Family::Beta => SeriesSpec::Beta(s),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Eta => "eta",
            Family::Beta => "beta",
        }
    }
}

pub const DEFAULT_CLASSIFY_WINDOW: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesClass {
    AlternatingDivergent,
    AlternatingConvergent,
    MonotoneDivergent,
    Indeterminate,
}

/// `values[m - 1]` is `S_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialSums {
    pub values: Vec<Rational>,
    pub spec: SeriesSpec,
}

impl PartialSums {
    /// Odd- and even-indexed sums as `(m, S_m)` points, `m` 1-based.
    pub fn split(&self) -> (Vec<Point>, Vec<Point>) {
        let mut odd = Vec::new();
        let mut even = Vec::new();
        for (i, s) in self.values.iter().enumerate() {
            let m = i + 1;
            let point = (Rational::from_integer(m.into()), s.clone());
            if m % 2 == 1 {
                odd.push(point);
            } else {
                even.push(point);
            }
        }
        (odd, even)
    }
}

/// Canonical text form; [`str::parse`] reads it back.
impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Eta(s) => write!(f, "eta({s})"),
            Self::Beta(s) => write!(f, "beta({s})"),
            Self::Zeta(s) => write!(f, "zeta({s})"),
            Self::Scaled(mu, inner) => match **inner {
                Self::Sum(..) => write!(f, "{mu}*({inner})"),
                _ => write!(f, "{mu}*{inner}"),
            },
            Self::Sum(a, b) => match **b {
                Self::Sum(..) => write!(f, "{a}+({b})"),
                _ => write!(f, "{a}+{b}"),
            },
            Self::Prepended(nu, inner) => write!(f, "prepend({nu},{inner})"),
            Self::Explicit(terms) => {
                f.write_str("explicit[")?;
                for (i, t) in terms.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{t}")?;
                }
                f.write_str("]")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn points(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| (int(x), int(y))).collect()
    }

    #[test]
    fn terms() {
        assert_eq!(SeriesSpec::Eta(-1).term(4).unwrap(), int(-4));
        assert_eq!(SeriesSpec::scaled(int(1), SeriesSpec::Beta(-1)).term(1).unwrap(), int(1));
        let combo = SeriesSpec::sum(SeriesSpec::Eta(-1), SeriesSpec::Zeta(0));
        let t: Vec<_> = (1..=4).map(|n| combo.term(n).unwrap()).collect();
        assert_eq!(t, ints(&[2, -1, 4, -3]));
        assert_eq!(SeriesSpec::Eta(2).term(3).unwrap(), rat(1, 9));
        assert_eq!(SeriesSpec::Beta(1).term(2).unwrap(), rat(-1, 3));
        assert_eq!(SeriesSpec::Eta(0).term(1), Ok(int(1)));
        assert_eq!(SeriesSpec::Eta(0).term(0), Err(SeriesError::ZeroIndex));
    }

    #[test]
    fn prepend_and_explicit_terms() {
        let p = SeriesSpec::prepended(rat(1, 2), SeriesSpec::Eta(-1));
        let t: Vec<_> = (1..=4).map(|n| p.term(n).unwrap()).collect();
        assert_eq!(t, vec![rat(1, 2), int(1), int(-2), int(3)]);
        let e = SeriesSpec::Explicit(ints(&[1, -2]));
        assert_eq!(e.term(3), Err(SeriesError::OutOfTerms { requested: 3, available: 2 }));
        assert!(e.partial_sums(3).is_err());
    }

    #[test]
    fn partial_sum_examples() {
        assert_eq!(SeriesSpec::Eta(-1).partial_sums(4).unwrap().values, ints(&[1, -1, 2, -2]));
        assert_eq!(SeriesSpec::Beta(-2).partial_sums(3).unwrap().values, ints(&[1, -8, 17]));
        let combo = SeriesSpec::sum(SeriesSpec::Beta(-2), SeriesSpec::Eta(-3));
        assert_eq!(combo.partial_sums(3).unwrap().values, ints(&[2, -15, 37]));
    }

    #[test]
    fn split_examples() {
        let (odd, even) = SeriesSpec::Eta(-1).partial_sums(6).unwrap().split();
        assert_eq!(odd, points(&[(1, 1), (3, 2), (5, 3)]));
        assert_eq!(even, points(&[(2, -1), (4, -2), (6, -3)]));

        let (odd, even) = SeriesSpec::Eta(-1).partial_sums(1).unwrap().split();
        assert_eq!(odd, points(&[(1, 1)]));
        assert!(even.is_empty());

        let (odd, even) = SeriesSpec::Beta(-2).partial_sums(6).unwrap().split();
        assert_eq!(odd, points(&[(1, 1), (3, 17), (5, 49)]));
        assert_eq!(even, points(&[(2, -8), (4, -32), (6, -72)]));
    }

    #[test]
    fn classification() {
        use SeriesClass::*;
        let w = DEFAULT_CLASSIFY_WINDOW;
        assert_eq!(SeriesSpec::Eta(-3).classify(w), AlternatingDivergent);
        assert_eq!(SeriesSpec::Eta(2).classify(w), AlternatingConvergent);
        assert_eq!(SeriesSpec::Zeta(0).classify(w), MonotoneDivergent);
        assert_eq!(SeriesSpec::Eta(0).classify(w), Indeterminate);
        assert_eq!(SeriesSpec::Zeta(2).classify(w), Indeterminate);
        let combo = SeriesSpec::sum(SeriesSpec::Eta(-1), SeriesSpec::Zeta(0));
        assert_eq!(combo.classify(w), AlternatingDivergent);
        let pre = SeriesSpec::prepended(int(5), SeriesSpec::Beta(-2));
        assert_eq!(pre.classify(w), AlternatingDivergent);
        assert_eq!(SeriesSpec::Explicit(ints(&[1, -2, 10])).classify(w), Indeterminate);
        assert_eq!(
            SeriesSpec::Explicit(ints(&[1, -2, 10, -10, 26, -26])).classify(w),
            AlternatingDivergent
        );
    }

    #[test]
    fn negative_arguments_always_alternating_divergent() {
        for s in -12..=-1 {
            for window in [4, 5, 9, 16, 40] {
                assert_eq!(SeriesSpec::Eta(s).classify(window), SeriesClass::AlternatingDivergent);
                assert_eq!(SeriesSpec::Beta(s).classify(window), SeriesClass::AlternatingDivergent);
            }
        }
    }

    fn family() -> impl Strategy<Value = SeriesSpec> {
        prop_oneof![
            (-6i64..3).prop_map(SeriesSpec::Eta),
            (-6i64..3).prop_map(SeriesSpec::Beta),
            (-4i64..3).prop_map(SeriesSpec::Zeta),
        ]
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-9i64..10, 1i64..6).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn sums_are_linear(a in family(), b in family(), mu in small_rational(), m in 1usize..20) {
            let sa = a.partial_sums(m).unwrap().values;
            let sb = b.partial_sums(m).unwrap().values;
            let sum = SeriesSpec::sum(a.clone(), b).partial_sums(m).unwrap().values;
            for i in 0..m {
                prop_assert_eq!(&sum[i], &(&sa[i] + &sb[i]));
            }
            let scaled = SeriesSpec::scaled(mu.clone(), a).partial_sums(m).unwrap().values;
            for i in 0..m {
                prop_assert_eq!(&scaled[i], &(&mu * &sa[i]));
            }
        }

        #[test]
        fn prepend_shifts(a in family(), nu in small_rational(), m in 2usize..20) {
            let inner = a.partial_sums(m - 1).unwrap().values;
            let pre = SeriesSpec::prepended(nu.clone(), a).partial_sums(m).unwrap().values;
            prop_assert_eq!(&pre[0], &nu);
            for k in 2..=m {
                prop_assert_eq!(&pre[k - 1], &(&nu + &inner[k - 2]));
            }
        }

        #[test]
        fn consecutive_sums_differ_by_term(a in family(), m in 2usize..25) {
            let sums = a.partial_sums(m).unwrap().values;
            for k in 2..=m {
                prop_assert_eq!(&sums[k - 1] - &sums[k - 2], a.term(k).unwrap());
            }
        }
    }
}
