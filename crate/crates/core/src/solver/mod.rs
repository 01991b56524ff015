//! Intersections of the odd and even characteristic polynomials and the
//! value read off at them.
//!
//! With `D = p_odd - p_even` the pipeline is: square-free part of `D`,
//! Sturm isolation of its real roots, exact detection of rational roots,
//! bisection of the irrational ones, then complex roots of what is left.
//! The value is exact whenever `p_odd` reduces to a constant modulo the
//! square-free part (always the case when `p_odd + p_even` is constant);
//! every root is additionally checked numerically.

mod aberth;
mod roots;

use std::cmp::Ordering;

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{rat, HpComplex, HpReal, Polynomial, Rational, MIN_PRECISION};
use crate::engine::{characterize, CharacteristicPair, EngineError, FitOptions};
use crate::series::{Family, SeriesSpec};

pub use aberth::all_roots;
pub use roots::{isolate, refine, Refined, RootInterval, SturmSequence};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("p_odd - p_even is the nonzero constant {0}; the branches never meet")]
    NoIntersection(Rational),
    #[error("p_odd and p_even coincide; every point is an intersection")]
    IdenticalBranches,
    #[error("p_odd at {root} deviates from {value} by more than 1e{exponent}")]
    InconsistentValue { root: String, value: String, exponent: i64 },
    #[error("complex root iteration did not converge")]
    RootFindingFailed,
    #[error("{0} is not a summand of the combined series")]
    SpecMismatch(SeriesSpec),
    #[error("combined series has no exact rational value")]
    InexactValue,
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// An irrational real root: its isolating interval and a decimal
/// approximation at the working precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub interval: RootInterval,
    pub approx: HpReal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealRoot {
    Rational(Rational),
    Isolated(IsolatedRoot),
}

impl RealRoot {
    fn sort_key(&self) -> Rational {
        match self {
            RealRoot::Rational(r) => r.clone(),
            RealRoot::Isolated(iso) => iso.interval.midpoint(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AntiLimitValue {
    Exact(Rational),
    Approx(HpComplex),
}

/// Everything known about where and at what value the branches meet.
///
/// Root lists are ordered by descending real part, then descending
/// imaginary part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiLimit {
    pub value: AntiLimitValue,
    pub rational_roots: Vec<Rational>,
    pub real_roots: Vec<IsolatedRoot>,
    /// Kept at the working precision, like the real approximations.
    pub complex_roots: Vec<HpComplex>,
    /// Largest real root, the one reached first when coming in from the
    /// right. Absent when all intersections are complex.
    pub first_intersection: Option<RealRoot>,
    /// `p_odd - p_even`.
    pub difference: Polynomial,
    pub precision: u32,
}

impl AntiLimit {
    pub fn value_exact(&self) -> bool {
        matches!(self.value, AntiLimitValue::Exact(_))
    }

    pub fn exact_value(&self) -> Option<&Rational> {
        match &self.value {
            AntiLimitValue::Exact(v) => Some(v),
            AntiLimitValue::Approx(_) => None,
        }
    }

    /// All real roots, descending.
    pub fn real_intersections(&self) -> Vec<RealRoot> {
        let mut all: Vec<RealRoot> = self
            .rational_roots
            .iter()
            .cloned()
            .map(RealRoot::Rational)
            .chain(self.real_roots.iter().cloned().map(RealRoot::Isolated))
            .collect();
        all.sort_by_key(|r| std::cmp::Reverse(r.sort_key()));
        all
    }
}

/// Extra digits carried while polishing roots and evaluating `p_odd` at
/// them, on top of the caller's precision.
fn guard_digits(pair: &CharacteristicPair, difference: &Polynomial) -> u32 {
    20 + roots::coefficient_digits(&pair.p_odd).max(roots::coefficient_digits(difference))
}

fn descending_complex(a: &HpComplex, b: &HpComplex) -> Ordering {
    b.re().cmp(a.re()).then_with(|| b.im().cmp(a.im()))
}

/// Solves `p_odd(X) = p_even(X)` and extracts the common value.
pub fn intersect(pair: &CharacteristicPair, precision: u32) -> Result<AntiLimit, SolverError> {
    let precision = precision.max(MIN_PRECISION);
    let difference = pair.difference();
    if difference.is_zero() {
        return Err(SolverError::IdenticalBranches);
    }
    if difference.is_constant() {
        return Err(SolverError::NoIntersection(difference.coeff(0)));
    }
    let working = precision + guard_digits(pair, &difference);

    let square_free = difference.square_free();
    let sturm = SturmSequence::new(&square_free);
    let lead = roots::integer_lead(&square_free);
    let width = roots::pow10_inv(working);

    let mut rational_roots = Vec::new();
    let mut real_roots = Vec::new();
    for iv in isolate(&square_free, &sturm) {
        match refine(&square_free, &sturm, &iv, &lead, &width) {
            Refined::Rational(r) => rational_roots.push(r),
            Refined::Irrational(interval) => {
                let approx = HpReal::from_rational(&interval.midpoint(), working);
                real_roots.push(IsolatedRoot { interval, approx });
            }
        }
    }
    rational_roots.sort_by(|a, b| b.cmp(a));
    real_roots.sort_by(|a, b| b.interval.lo.cmp(&a.interval.lo));

    let mut remainder = square_free.clone();
    for r in &rational_roots {
        remainder = remainder.div_rem(&Polynomial::linear_root(r)).expect("nonzero").0;
    }
    let mut complex_roots =
        aberth::complex_roots(&remainder, real_roots.len(), working).ok_or(SolverError::RootFindingFailed)?;
    complex_roots.sort_by(descending_complex);

    let reduced = pair.p_odd.div_rem(&square_free).expect("nonzero").1;
    let value = match &pair.structural_k {
        Some(k) => AntiLimitValue::Exact(k / rat(2, 1)),
        None if reduced.is_constant() => AntiLimitValue::Exact(reduced.coeff(0)),
        None => match rational_roots.first() {
            Some(r) => AntiLimitValue::Exact(pair.p_odd.eval(r)),
            None => {
                let z = match real_roots.first() {
                    Some(iso) => HpComplex::real(iso.approx.clone()),
                    None => complex_roots.first().cloned().ok_or(SolverError::RootFindingFailed)?,
                };
                AntiLimitValue::Approx(pair.p_odd.eval_complex(&z).with_precision(precision))
            }
        },
    };

    check_common_value(pair, &value, &rational_roots, &real_roots, &complex_roots, precision, working)?;

    let mut out = AntiLimit {
        value,
        rational_roots,
        real_roots,
        complex_roots,
        first_intersection: None,
        difference,
        precision,
    };
    out.first_intersection = out.real_intersections().into_iter().next();
    Ok(out)
}

fn check_common_value(
    pair: &CharacteristicPair,
    value: &AntiLimitValue,
    rational_roots: &[Rational],
    real_roots: &[IsolatedRoot],
    complex_roots: &[HpComplex],
    precision: u32,
    working: u32,
) -> Result<(), SolverError> {
    let exponent = 5 - precision as i64;
    let (target, shown) = match value {
        AntiLimitValue::Exact(v) => (HpComplex::from_rational(v, working), v.to_string()),
        AntiLimitValue::Approx(z) => (z.with_precision(working), z.to_string()),
    };
    let fail = |root: String| SolverError::InconsistentValue { root, value: shown.clone(), exponent };
    for r in rational_roots {
        let v = pair.p_odd.eval(r);
        match value {
            AntiLimitValue::Exact(e) if &v != e => return Err(fail(r.to_string())),
            _ => {
                if !(&HpComplex::from_rational(&v, working) - &target).abs_below_pow10(exponent) {
                    return Err(fail(r.to_string()));
                }
            }
        }
    }
    let numeric = real_roots
        .iter()
        .map(|iso| HpComplex::real(iso.approx.clone()))
        .chain(complex_roots.iter().cloned());
    for z in numeric {
        if !(&pair.p_odd.eval_complex(&z) - &target).abs_below_pow10(exponent) {
            return Err(fail(z.to_fixed(12)));
        }
    }
    Ok(())
}

/// Whether `D = p_odd - p_even` vanishes at the intersection point that the
/// family and the parity of `s` prescribe: eta with even `s` at 0 and -1,
/// eta with odd `s` at -1/2, beta with odd `s` at 0, beta with even `s` at
/// 1/2.
pub fn common_point_check(pair: &CharacteristicPair, family: Family, s: i64) -> bool {
    let d = pair.difference();
    let even = s % 2 == 0;
    let points = match (family, even) {
        (Family::Eta, true) => vec![rat(0, 1), rat(-1, 1)],
        (Family::Eta, false) => vec![rat(-1, 2)],
        (Family::Beta, false) => vec![rat(0, 1)],
        (Family::Beta, true) => vec![rat(1, 2)],
    };
    points.iter().all(|x| d.eval(x).is_zero())
}

/// Characterizes `spec` and intersects its branches.
pub fn evaluate(spec: &SeriesSpec, opts: &FitOptions, precision: u32) -> Result<(CharacteristicPair, AntiLimit), SolverError> {
    let pair = characterize(spec, opts)?;
    let anti = intersect(&pair, precision)?;
    Ok((pair, anti))
}

/// Value of one summand of `combined = a + b` given the other: the value of
/// `combined` minus `known_value`.
pub fn deduce(
    combined: &SeriesSpec,
    known: &SeriesSpec,
    known_value: &Rational,
    opts: &FitOptions,
    precision: u32,
) -> Result<Rational, SolverError> {
    match combined {
        SeriesSpec::Sum(a, b) if **a == *known || **b == *known => {}
        _ => return Err(SolverError::SpecMismatch(known.clone())),
    }
    let (_, anti) = evaluate(combined, opts, precision)?;
    let total = anti.exact_value().ok_or(SolverError::InexactValue)?;
    Ok(total - known_value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::engine::characterize_unchecked;

    const P: u32 = 50;

    fn solve(spec: SeriesSpec) -> AntiLimit {
        evaluate(&spec, &FitOptions::default(), P).unwrap().1
    }

    /// `[1, -2, 10, -10, 26, -26, ...]`: odd sums (2m-1)^2, even sums -1.
    fn imaginary_series(terms: usize) -> SeriesSpec {
        let mut out = Vec::new();
        let mut prev = int(0);
        for m in 1..=terms {
            let target = if m % 2 == 1 { int((m * m) as i64) } else { int(-1) };
            out.push(&target - &prev);
            prev = target;
        }
        SeriesSpec::Explicit(out)
    }

    #[test]
    fn eta_minus_one() {
        let a = solve(SeriesSpec::Eta(-1));
        assert_eq!(a.value, AntiLimitValue::Exact(rat(1, 4)));
        assert_eq!(a.rational_roots, vec![rat(-1, 2)]);
        assert!(a.real_roots.is_empty() && a.complex_roots.is_empty());
        assert_eq!(a.first_intersection, Some(RealRoot::Rational(rat(-1, 2))));
    }

    #[test]
    fn beta_minus_one() {
        let a = solve(SeriesSpec::Beta(-1));
        assert_eq!(a.value, AntiLimitValue::Exact(int(0)));
        assert_eq!(a.rational_roots, vec![int(0)]);
    }

    #[test]
    fn imaginary_anti_limit() {
        let spec = imaginary_series(12);
        assert_eq!(spec.term(3).unwrap(), int(10));
        let pair = characterize_unchecked(&spec, &FitOptions::default()).unwrap();
        assert_eq!(pair.p_odd, Polynomial::from_integers(&[0, 0, 1]));
        assert_eq!(pair.p_even, Polynomial::constant(int(-1)));
        let a = intersect(&pair, P).unwrap();
        assert_eq!(a.value, AntiLimitValue::Exact(int(-1)));
        let shown: Vec<_> = a.complex_roots.iter().map(|z| z.with_precision(P)).collect();
        assert_eq!(shown, vec![HpComplex::i(P), HpComplex::i(P).conj()]);
        assert!(a.first_intersection.is_none());
    }

    #[test]
    fn non_structural_linear_case() {
        // 2 - 1 + 4 - 3 + ...: p_odd = 3x/2 + 1/2, p_even = x/2
        let a = solve(SeriesSpec::sum(SeriesSpec::Eta(-1), SeriesSpec::Zeta(0)));
        assert_eq!(a.rational_roots, vec![rat(-1, 2)]);
        assert_eq!(a.value, AntiLimitValue::Exact(rat(-1, 4)));
    }

    #[test]
    fn grandi_has_no_intersection() {
        let pair = characterize_unchecked(&SeriesSpec::Eta(0), &FitOptions::default()).unwrap();
        assert_eq!(intersect(&pair, P), Err(SolverError::NoIntersection(int(1))));
    }

    #[test]
    fn identical_branches_rejected() {
        let mut pair = characterize(&SeriesSpec::Eta(-2), &FitOptions::default()).unwrap();
        pair.p_even = pair.p_odd.clone();
        assert_eq!(intersect(&pair, P), Err(SolverError::IdenticalBranches));
    }

    #[test]
    fn inconsistent_values_detected() {
        // p_odd = x^2, p_even = x: roots 0 and 1 give values 0 and 1
        let mut pair = characterize(&SeriesSpec::Eta(-2), &FitOptions::default()).unwrap();
        pair.p_odd = Polynomial::from_integers(&[0, 0, 1]);
        pair.p_even = Polynomial::x();
        pair.structural_k = None;
        assert!(matches!(intersect(&pair, P), Err(SolverError::InconsistentValue { .. })));
    }

    #[test]
    fn common_points() {
        let opts = FitOptions::default();
        for (family, s) in [(Family::Eta, -4), (Family::Beta, -2), (Family::Eta, -5), (Family::Beta, -3)] {
            let pair = characterize(&family.spec(s), &opts).unwrap();
            assert!(common_point_check(&pair, family, s), "{family:?} {s}");
        }
        let pair = characterize(&SeriesSpec::Eta(-3), &opts).unwrap();
        assert!(!common_point_check(&pair, Family::Eta, -4));
    }

    #[test]
    fn eta_minus_three_meets_slightly_below_zero() {
        let a = solve(SeriesSpec::Eta(-3));
        assert_eq!(a.value, AntiLimitValue::Exact(rat(-1, 8)));
        assert_eq!(a.rational_roots, vec![rat(-1, 2)]);
        assert_eq!(a.real_roots.len(), 2);
        let Some(RealRoot::Isolated(first)) = &a.first_intersection else { panic!() };
        assert!(first.approx.to_f64() > 0.0 && first.approx.to_f64() < 0.5);
    }

    #[test]
    fn deductions() {
        let opts = FitOptions::default();
        let eta0 = deduce(&SeriesSpec::sum(SeriesSpec::Eta(-1), SeriesSpec::Eta(0)), &SeriesSpec::Eta(-1), &rat(1, 4), &opts, P);
        assert_eq!(eta0, Ok(rat(1, 2)));
        let zeta0 = deduce(&SeriesSpec::sum(SeriesSpec::Eta(-1), SeriesSpec::Zeta(0)), &SeriesSpec::Eta(-1), &rat(1, 4), &opts, P);
        assert_eq!(zeta0, Ok(rat(-1, 2)));
        let beta0 = deduce(&SeriesSpec::sum(SeriesSpec::Beta(0), SeriesSpec::Beta(-1)), &SeriesSpec::Beta(-1), &int(0), &opts, P);
        assert_eq!(beta0, Ok(rat(1, 2)));
        let self_sum = deduce(&SeriesSpec::sum(SeriesSpec::Eta(-5), SeriesSpec::Eta(-5)), &SeriesSpec::Eta(-5), &rat(1, 4), &opts, P);
        assert_eq!(self_sum, Ok(rat(1, 4)));
        let bad = deduce(&SeriesSpec::sum(SeriesSpec::Eta(-1), SeriesSpec::Eta(0)), &SeriesSpec::Beta(-1), &int(0), &opts, P);
        assert_eq!(bad, Err(SolverError::SpecMismatch(SeriesSpec::Beta(-1))));
    }
}

#[cfg(test)]
mod bound_tests {
    use super::*;
    use crate::algebra::int;

    fn roots_above_two(spec: SeriesSpec) -> usize {
        let pair = characterize(&spec, &FitOptions::default()).unwrap();
        SturmSequence::new(&pair.difference().square_free()).count_above(&int(2))
    }

    /// Intersections can lie right of x = 2 once |s| grows: eta from s = -19,
    /// beta from s = -14 (both cross-checked by exact sign changes).
    #[test]
    fn intersections_right_of_two() {
        assert_eq!(roots_above_two(SeriesSpec::Eta(-18)), 0);
        assert_eq!(roots_above_two(SeriesSpec::Eta(-19)), 1);
        assert_eq!(roots_above_two(SeriesSpec::Beta(-13)), 0);
        assert_eq!(roots_above_two(SeriesSpec::Beta(-14)), 1);
        let pair = characterize(&SeriesSpec::Eta(-19), &FitOptions::default()).unwrap();
        let d = pair.difference();
        assert!(d.sign_at(&rat(235, 100)) * d.sign_at(&rat(236, 100)) < 0);
    }
}
