//! Output documents. Every command builds one of these and hands it to a
//! renderer; the JSON form is their serde serialization.

use antilimit::algebra::{HpComplex, HpReal, Polynomial, Rational};
use antilimit::engine::{CharacteristicPair, PropertyReport};
use antilimit::solver::{AntiLimit, AntiLimitValue, RealRoot};
use serde::{Deserialize, Serialize};

/// `{"num": "...", "den": "..."}` with the sign on the numerator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalDoc {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for RationalDoc {
    fn from(r: &Rational) -> Self {
        Self { num: r.numer().to_string(), den: r.denom().to_string() }
    }
}

impl RationalDoc {
    pub fn to_rational(&self) -> Option<Rational> {
        Some(Rational::new(self.num.parse().ok()?, self.den.parse().ok()?))
    }
}

/// Ascending coefficients.
pub fn poly_doc(p: &Polynomial) -> Vec<RationalDoc> {
    p.coeffs().iter().map(RationalDoc::from).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDoc {
    pub re: String,
    pub im: String,
}

impl ComplexDoc {
    pub fn new(z: &HpComplex, digits: u32) -> Self {
        Self { re: z.re().to_fixed(digits), im: z.im().to_fixed(digits) }
    }

    pub fn real(x: &HpReal, digits: u32) -> Self {
        Self { re: x.to_fixed(digits), im: HpReal::zero(x.precision()).to_fixed(digits) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootKind {
    Rational,
    Real,
    Complex,
}

impl RootKind {
    pub fn name(self) -> &'static str {
        match self {
            RootKind::Rational => "rational",
            RootKind::Real => "real",
            RootKind::Complex => "complex",
        }
    }
}

/// One intersection point. `exact` is set for rational roots, `interval`
/// (an isolating interval) for irrational real ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDoc {
    pub kind: RootKind,
    pub approx: ComplexDoc,
    pub exact: Option<RationalDoc>,
    pub interval: Option<[RationalDoc; 2]>,
    /// `|p_odd(X) - value|`.
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueField {
    Exact(RationalDoc),
    Approx(ComplexDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueDoc {
    pub series: String,
    pub precision: u32,
    pub value: ValueField,
    pub decimal: ComplexDoc,
    pub first_intersection: Option<RootDoc>,
    /// Descending real part, then descending imaginary part.
    pub roots: Vec<RootDoc>,
}

fn value_hp(anti: &AntiLimit, working: u32) -> HpComplex {
    match &anti.value {
        AntiLimitValue::Exact(v) => HpComplex::from_rational(v, working),
        AntiLimitValue::Approx(z) => z.with_precision(working),
    }
}

fn root_doc(pair: &CharacteristicPair, anti: &AntiLimit, kind: RootKind, x: &HpComplex, digits: u32) -> RootDoc {
    let working = x.precision();
    let residual = (&pair.p_odd.eval_complex(x) - &value_hp(anti, working)).abs();
    RootDoc { kind, approx: ComplexDoc::new(x, digits), exact: None, interval: None, residual: residual.to_fixed(digits) }
}

fn real_root_doc(pair: &CharacteristicPair, anti: &AntiLimit, root: &RealRoot, digits: u32) -> RootDoc {
    match root {
        RealRoot::Rational(r) => {
            let exact_residual = pair.p_odd.eval(r);
            let residual = match &anti.value {
                AntiLimitValue::Exact(v) => HpReal::from_rational(&(exact_residual - v), anti.precision).abs(),
                AntiLimitValue::Approx(z) => {
                    (&HpComplex::from_rational(&exact_residual, z.precision()) - z).abs()
                }
            };
            RootDoc {
                kind: RootKind::Rational,
                approx: ComplexDoc::real(&HpReal::from_rational(r, anti.precision), digits),
                exact: Some(r.into()),
                interval: None,
                residual: residual.to_fixed(digits),
            }
        }
        RealRoot::Isolated(iso) => {
            let mut doc = root_doc(pair, anti, RootKind::Real, &HpComplex::real(iso.approx.clone()), digits);
            doc.interval = Some([(&iso.interval.lo).into(), (&iso.interval.hi).into()]);
            doc
        }
    }
}

/// All roots in reporting order: real ones descending, then complex.
pub fn root_docs(pair: &CharacteristicPair, anti: &AntiLimit, digits: u32) -> Vec<RootDoc> {
    let mut out: Vec<RootDoc> =
        anti.real_intersections().iter().map(|r| real_root_doc(pair, anti, r, digits)).collect();
    out.extend(anti.complex_roots.iter().map(|z| root_doc(pair, anti, RootKind::Complex, z, digits)));
    out
}

impl ValueDoc {
    pub fn new(pair: &CharacteristicPair, anti: &AntiLimit, digits: u32) -> Self {
        let value = match &anti.value {
            AntiLimitValue::Exact(v) => ValueField::Exact(v.into()),
            AntiLimitValue::Approx(z) => ValueField::Approx(ComplexDoc::new(z, digits)),
        };
        Self {
            series: pair.spec.to_string(),
            precision: digits,
            value,
            decimal: ComplexDoc::new(&value_hp(anti, anti.precision), digits),
            first_intersection: anti.first_intersection.as_ref().map(|r| real_root_doc(pair, anti, r, digits)),
            roots: root_docs(pair, anti, digits),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub series: String,
    pub p_odd: Vec<RationalDoc>,
    pub p_even: Vec<RationalDoc>,
    /// `p_odd - p_even`.
    pub difference: Vec<RationalDoc>,
    /// `p_odd + p_even` when constant.
    pub structural_k: Option<RationalDoc>,
    pub fit_degree: usize,
    pub points_used: usize,
    pub verify_count: usize,
    /// Structural checks, present for plain eta/beta at s <= -1.
    pub checks: Option<Vec<CheckDoc>>,
}

impl PolyDoc {
    pub fn new(pair: &CharacteristicPair, report: Option<&PropertyReport>) -> Self {
        Self {
            series: pair.spec.to_string(),
            p_odd: poly_doc(&pair.p_odd),
            p_even: poly_doc(&pair.p_even),
            difference: poly_doc(&pair.difference()),
            structural_k: pair.structural_k.as_ref().map(RationalDoc::from),
            fit_degree: pair.fit_degree,
            points_used: pair.points_used,
            verify_count: pair.verify_count,
            checks: report.map(|r| {
                r.checks
                    .iter()
                    .map(|c| CheckDoc { name: c.name.to_string(), passed: c.passed, detail: c.detail.clone() })
                    .collect()
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub s: i64,
    pub p_odd: Vec<RationalDoc>,
    pub p_even: Vec<RationalDoc>,
    pub structural_k: Option<RationalDoc>,
    pub value: RationalDoc,
    /// Footnote marker into `TableDoc::notes`.
    pub note: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub family: String,
    pub rows: Vec<TableRow>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeduceDoc {
    pub series: String,
    pub known: String,
    pub known_value: RationalDoc,
    pub combined_value: RationalDoc,
    pub target: String,
    pub value: RationalDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseDoc {
    pub case: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteDoc {
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<CaseDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub suites: Vec<SuiteDoc>,
    pub passed: usize,
    pub failed: usize,
}

impl VerifyDoc {
    pub fn new(suites: Vec<SuiteDoc>) -> Self {
        let passed = suites.iter().map(|s| s.passed).sum();
        let failed = suites.iter().map(|s| s.failed).sum();
        Self { suites, passed, failed }
    }
}

impl SuiteDoc {
    pub fn new(suite: &str, cases: Vec<CaseDoc>) -> Self {
        let passed = cases.iter().filter(|c| c.passed).count();
        Self { suite: suite.into(), passed, failed: cases.len() - passed, cases }
    }
}

/// Polynomial from an ascending coefficient array.
pub fn poly_from_doc(coeffs: &[RationalDoc]) -> Option<Polynomial> {
    coeffs.iter().map(RationalDoc::to_rational).collect::<Option<Vec<_>>>().map(Polynomial::from_coeffs)
}
