//! Exact characteristic polynomials for the odd and even partial-sum
//! branches.
//!
//! A branch is fitted by escalating the degree until the Newton form stops
//! changing: the interpolant through `d + 1` points must reproduce the next
//! `verify_count` points exactly. Sequences that never settle below
//! `max_degree` are rejected as not polynomial.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{parity_about, rat, NewtonTable, Parity, Point, Polynomial, Rational};
use crate::series::{Family, SeriesClass, SeriesError, SeriesSpec, DEFAULT_CLASSIFY_WINDOW};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("partial sums admit no exact polynomial of degree <= {max_degree}")]
    NotPolynomial { max_degree: usize },
    #[error("series is not alternating and divergent (classified {0:?})")]
    NotAlternatingDivergent(SeriesClass),
    #[error("only {available} points supplied; the degree search needs more")]
    InsufficientPoints { available: usize },
    #[error("points are not on a uniform stride")]
    NonUniformStride,
    #[error("max_degree and verify_count must both be at least 1")]
    InvalidOptions,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FitOptions {
    pub max_degree: usize,
    pub verify_count: usize,
}

impl Default for FitOptions {
    fn default() -> Self {
        Self { max_degree: 64, verify_count: 3 }
    }
}

impl FitOptions {
    fn validate(&self) -> Result<(), EngineError> {
        if self.max_degree == 0 || self.verify_count == 0 {
            return Err(EngineError::InvalidOptions);
        }
        Ok(())
    }

    /// Points per branch after which the search gives up.
    pub fn point_budget(&self) -> usize {
        self.max_degree + self.verify_count + 1
    }
}

enum Progress {
    Searching,
    Found,
    Exhausted,
}

/// Degree search over a growing divided-difference table.
struct StableFit {
    table: NewtonTable,
    opts: FitOptions,
    found: Option<usize>,
}

impl StableFit {
    fn new(opts: FitOptions) -> Self {
        Self { table: NewtonTable::new(), opts, found: None }
    }

    fn push(&mut self, (x, y): Point) -> Progress {
        if self.found.is_some() {
            return Progress::Found;
        }
        self.table.push(x, y).expect("partial-sum indices are distinct");
        let count = self.table.len();
        let Some(d) = count.checked_sub(self.opts.verify_count + 1) else {
            return Progress::Searching;
        };
        if d > self.opts.max_degree {
            return Progress::Exhausted;
        }
        // c_{d+1} .. c_{d+verify} vanish: the degree-d interpolant reproduces
        // the verification points and adding a point leaves it unchanged.
        if self.table.coeffs()[d + 1..].iter().all(Zero::is_zero) {
            self.found = Some(d);
            Progress::Found
        } else if d == self.opts.max_degree {
            Progress::Exhausted
        } else {
            Progress::Searching
        }
    }

    fn polynomial(&self) -> Option<Polynomial> {
        self.found.map(|d| self.table.polynomial(d + 1))
    }
}

/// Minimal-degree polynomial that interpolates the leading points and
/// reproduces the following `verify_count` points exactly.
pub fn fit_stable(points: &[Point], opts: &FitOptions) -> Result<Polynomial, EngineError> {
    opts.validate()?;
    if points.len() >= 2 {
        let stride = &points[1].0 - &points[0].0;
        if stride.is_zero() || points.windows(2).any(|w| &w[1].0 - &w[0].0 != stride) {
            return Err(EngineError::NonUniformStride);
        }
    }
    let mut fit = StableFit::new(*opts);
    for p in points {
        match fit.push(p.clone()) {
            Progress::Found => return Ok(fit.polynomial().expect("found")),
            Progress::Exhausted => return Err(EngineError::NotPolynomial { max_degree: opts.max_degree }),
            Progress::Searching => {}
        }
    }
    Err(EngineError::InsufficientPoints { available: points.len() })
}

/// Fitted odd/even polynomials for one series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicPair {
    pub p_odd: Polynomial,
    pub p_even: Polynomial,
    pub spec: SeriesSpec,
    /// Larger of the two stable degrees.
    pub fit_degree: usize,
    /// Points interpolated per branch, `fit_degree + 1`.
    pub points_used: usize,
    pub verify_count: usize,
    /// `p_odd + p_even` when that sum is a constant polynomial.
    pub structural_k: Option<Rational>,
}

impl CharacteristicPair {
    /// `p_odd - p_even`, whose roots are the intersection points.
    pub fn difference(&self) -> Polynomial {
        &self.p_odd - &self.p_even
    }
}

/// Fits both branches of an alternating divergent series.
pub fn characterize(spec: &SeriesSpec, opts: &FitOptions) -> Result<CharacteristicPair, EngineError> {
    match spec.classify(DEFAULT_CLASSIFY_WINDOW) {
        SeriesClass::AlternatingDivergent => characterize_unchecked(spec, opts),
        other => Err(EngineError::NotAlternatingDivergent(other)),
    }
}

/// [`characterize`] without the classification gate, for explicit series
/// and degenerate cases such as `eta(0)`.
pub fn characterize_unchecked(spec: &SeriesSpec, opts: &FitOptions) -> Result<CharacteristicPair, EngineError> {
    opts.validate()?;
    let mut odd = StableFit::new(*opts);
    let mut even = StableFit::new(*opts);
    let mut done = (false, false);
    for (i, sum) in spec.partial_sum_iter().take(2 * opts.point_budget()).enumerate() {
        let sum = sum?;
        let m = i + 1;
        let point = (Rational::from_integer(BigInt::from(m)), sum);
        let (fit, flag) = if m % 2 == 1 { (&mut odd, &mut done.0) } else { (&mut even, &mut done.1) };
        match fit.push(point) {
            Progress::Found => *flag = true,
            Progress::Exhausted => return Err(EngineError::NotPolynomial { max_degree: opts.max_degree }),
            Progress::Searching => {}
        }
        if done.0 && done.1 {
            break;
        }
    }
    let (Some(p_odd), Some(p_even)) = (odd.polynomial(), even.polynomial()) else {
        return Err(EngineError::NotPolynomial { max_degree: opts.max_degree });
    };
    let fit_degree = odd.found.max(even.found).expect("both branches found");
    let sum = &p_odd + &p_even;
    let structural_k = sum.is_constant().then(|| sum.coeff(0));
    Ok(CharacteristicPair {
        p_odd,
        p_even,
        spec: spec.clone(),
        fit_degree,
        points_used: fit_degree + 1,
        verify_count: opts.verify_count,
        structural_k,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of the structural checks on an eta or beta pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub family: Family,
    pub s: i64,
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn support(p: &Polynomial) -> Vec<usize> {
    p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i).collect()
}

/// Degrees carrying nonzero coefficients in the odd polynomial, highest
/// first: eta keeps `n, n-1, n-3, n-5, ...`, beta keeps `n, n-2, n-4, ...`.
fn expected_support(family: Family, n: usize) -> Vec<usize> {
    let mut out = vec![n];
    let start = match family {
        Family::Eta => n.checked_sub(1),
        Family::Beta => n.checked_sub(2),
    };
    let mut next = start;
    while let Some(k) = next {
        out.push(k);
        next = k.checked_sub(2);
    }
    out.reverse();
    out
}

/// Structural checks on a pair fitted from `Eta(s)` or `Beta(s)`, `s <= -1`.
pub fn table_properties(pair: &CharacteristicPair, family: Family, s: i64) -> PropertyReport {
    let n = s.unsigned_abs() as usize;
    let odd_s = n % 2 == 1;
    let zero = Rational::zero();
    let (po, pe) = (&pair.p_odd, &pair.p_even);
    let mut checks = Vec::new();
    let mut check = |name, passed, detail: String| checks.push(PropertyCheck { name, passed, detail });
    let deg = |p: &Polynomial| p.degree().map_or("-inf".to_string(), |d| d.to_string());

    check(
        "degree",
        po.degree() == Some(n) && pe.degree() == Some(n) && pair.fit_degree == n,
        format!("deg p_odd = {}, deg p_even = {}, expected {n}", deg(po), deg(pe)),
    );
    check("even-constant", pe.coeff(0).is_zero(), format!("p_even(0) = {}", pe.coeff(0)));

    let constant_expected = match family {
        Family::Eta => odd_s,
        Family::Beta => !odd_s,
    };
    check(
        "odd-constant",
        !po.coeff(0).is_zero() == constant_expected,
        format!("p_odd(0) = {}, nonzero expected: {constant_expected}", po.coeff(0)),
    );

    let expected = expected_support(family, n);
    let even_expected: Vec<usize> = expected.iter().copied().filter(|&k| k != 0).collect();
    check(
        "power-structure",
        support(po) == expected && support(pe) == even_expected,
        format!("p_odd support {:?}, expected {:?}", support(po), expected),
    );

    let boundary: Vec<(&str, Rational)> = match (family, odd_s) {
        (Family::Eta, false) => vec![
            ("p_odd(0)", po.eval(&zero)),
            ("p_even(0)", pe.eval(&zero)),
            ("p_odd(-1)", po.eval(&rat(-1, 1))),
            ("p_even(-1)", pe.eval(&rat(-1, 1))),
        ],
        (Family::Eta, true) => vec![("p_even(0)", pe.eval(&zero)), ("p_odd(-1)", po.eval(&rat(-1, 1)))],
        (Family::Beta, false) => vec![("p_even(0)", pe.eval(&zero))],
        (Family::Beta, true) => vec![("p_even(0)", pe.eval(&zero)), ("p_odd(0)", po.eval(&zero))],
    };
    check(
        "boundary",
        boundary.iter().all(|(_, v)| v.is_zero()),
        boundary.iter().map(|(k, v)| format!("{k} = {v}")).collect::<Vec<_>>().join(", "),
    );

    let checked = pair.points_used + pair.verify_count;
    let reproduces = family
        .spec(s)
        .partial_sums(2 * checked)
        .map(|sums| {
            let (odd, even) = sums.split();
            odd.iter().all(|(x, y)| &po.eval(x) == y) && even.iter().all(|(x, y)| &pe.eval(x) == y)
        })
        .unwrap_or(false);
    check(
        "reproduces-sums",
        reproduces,
        format!("first {checked} odd and even partial sums"),
    );

    let value = pair.structural_k.as_ref().map(|k| k / rat(2, 1));
    check(
        "structural-constant",
        match (&value, family, odd_s) {
            (None, ..) => false,
            (Some(v), Family::Eta, false) | (Some(v), Family::Beta, true) => v.is_zero(),
            (Some(_), ..) => true,
        },
        match &pair.structural_k {
            Some(k) => format!("p_odd + p_even = {k}"),
            None => "p_odd + p_even is not constant".to_string(),
        },
    );

    let (center, offset, want) = match (family, odd_s) {
        (Family::Eta, true) => (rat(-1, 2), value.clone().unwrap_or_else(Rational::zero), Parity::Odd),
        (Family::Eta, false) => (rat(-1, 2), zero.clone(), Parity::Even),
        (Family::Beta, true) => (zero.clone(), zero.clone(), Parity::Odd),
        (Family::Beta, false) => (zero.clone(), zero.clone(), Parity::Even),
    };
    let got = (parity_about(po, &center, &offset), parity_about(pe, &center, &offset));
    check(
        "parity",
        got == (want, want),
        format!("about {center} with offset {offset}: {got:?}, expected {want:?}"),
    );

    PropertyReport { family, s, checks }
}
