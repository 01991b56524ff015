//! Verification suites behind `antilimit verify`.

use antilimit::algebra::{Polynomial, Rational};
use antilimit::engine::{characterize, table_properties, FitOptions};
use antilimit::oracle::{beta_closed, eta_closed, functional_check, reference_rows, ReferenceRow};
use antilimit::series::{Family, SeriesSpec};
use antilimit::solver::evaluate;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::args::Suite;
use crate::doc::{CaseDoc, SuiteDoc, VerifyDoc};

/// Digits at which solver values are computed inside the suites.
const SOLVE_PRECISION: u32 = 50;
/// Functional-equation checks: digits carried and the residual bound.
pub const FUNCTIONAL_PRECISION: u32 = 40;
pub const FUNCTIONAL_EXPONENT: i64 = -30;
/// Oracle sweep covers s = -1..-ORACLE_DEPTH for both families.
pub const ORACLE_DEPTH: i64 = 30;

pub fn run(suite: Suite, seed: u64, cases: usize) -> VerifyDoc {
    let suites = match suite {
        Suite::Tables => vec![tables()],
        Suite::Oracle => vec![oracle()],
        Suite::Hardy => vec![hardy(seed, cases)],
        Suite::Functional => vec![functional()],
        Suite::All => vec![tables(), oracle(), hardy(seed, cases), functional()],
    };
    VerifyDoc::new(suites)
}

fn case(name: impl Into<String>, outcome: Result<(), String>) -> CaseDoc {
    let (passed, detail) = match outcome {
        Ok(()) => (true, String::new()),
        Err(d) => (false, d),
    };
    CaseDoc { case: name.into(), passed, detail }
}

/// Exact value through the polynomial pipeline.
fn pe_value(spec: &SeriesSpec) -> Result<Rational, String> {
    let (_, anti) = evaluate(spec, &FitOptions::default(), SOLVE_PRECISION).map_err(|e| e.to_string())?;
    anti.exact_value().cloned().ok_or_else(|| format!("{spec}: value is not exact"))
}

fn expect_eq<T: PartialEq + std::fmt::Display>(what: &str, got: &T, want: &T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn table_case(row: &ReferenceRow) -> Result<(), String> {
    let spec = row.family.spec(row.s);
    let pair = characterize(&spec, &FitOptions::default()).map_err(|e| e.to_string())?;
    expect_eq("P_o", &pair.p_odd, &row.corrected_p_odd())?;
    expect_eq("P_e", &pair.p_even, &row.corrected_p_even())?;
    expect_eq("value", &pe_value(&spec)?, &row.value)?;
    let report = table_properties(&pair, row.family, row.s);
    if let Some(f) = report.failures().next() {
        return Err(format!("{}: {}", f.name, f.detail));
    }
    if row.erratum.is_some() {
        let one = Rational::from_integer(1.into());
        if row.p_odd.eval(&one) == one {
            return Err("listed misprint unexpectedly reproduces S_1".into());
        }
    }
    Ok(())
}

pub fn tables() -> SuiteDoc {
    let rows: Vec<ReferenceRow> = [Family::Eta, Family::Beta].into_iter().flat_map(reference_rows).collect();
    let cases = rows.par_iter().map(|r| case(r.family.spec(r.s).to_string(), table_case(r))).collect();
    SuiteDoc::new("tables", cases)
}

pub fn oracle() -> SuiteDoc {
    let specs: Vec<(Family, i64)> =
        [Family::Eta, Family::Beta].into_iter().flat_map(|f| (1..=ORACLE_DEPTH).map(move |n| (f, -n))).collect();
    let cases = specs
        .par_iter()
        .map(|&(f, s)| {
            let spec = f.spec(s);
            let closed = match f {
                Family::Eta => eta_closed(s),
                Family::Beta => beta_closed(s),
            }
            .expect("s <= 0");
            case(spec.to_string(), pe_value(&spec).and_then(|v| expect_eq("value", &v, &closed)))
        })
        .collect();
    SuiteDoc::new("oracle", cases)
}

/// Randomized cases for the three axioms.
#[derive(Clone, Debug)]
pub enum AxiomCase {
    /// value(mu * a) = mu * value(a)
    Scaling(Rational, SeriesSpec),
    /// value(a + b) = value(a) + value(b)
    Addition(SeriesSpec, SeriesSpec),
    /// value(prepend(nu, a)) = nu + value(a)
    Prepend(Rational, SeriesSpec),
}

impl AxiomCase {
    pub fn label(&self) -> String {
        match self {
            AxiomCase::Scaling(mu, a) => format!("A: {}", SeriesSpec::scaled(mu.clone(), a.clone())),
            AxiomCase::Addition(a, b) => format!("B: {}", SeriesSpec::sum(a.clone(), b.clone())),
            AxiomCase::Prepend(nu, a) => format!("C: {}", SeriesSpec::prepended(nu.clone(), a.clone())),
        }
    }

    pub fn check(&self) -> Result<(), String> {
        match self {
            AxiomCase::Scaling(mu, a) => {
                let lhs = pe_value(&SeriesSpec::scaled(mu.clone(), a.clone()))?;
                expect_eq("mu*value", &lhs, &(mu * pe_value(a)?))
            }
            AxiomCase::Addition(a, b) => {
                let lhs = pe_value(&SeriesSpec::sum(a.clone(), b.clone()))?;
                expect_eq("sum", &lhs, &(pe_value(a)? + pe_value(b)?))
            }
            AxiomCase::Prepend(nu, a) => {
                let lhs = pe_value(&SeriesSpec::prepended(nu.clone(), a.clone()))?;
                expect_eq("nu+value", &lhs, &(nu + pe_value(a)?))
            }
        }
    }
}

fn random_base(rng: &mut StdRng) -> SeriesSpec {
    let s = -rng.gen_range(1..=10);
    if rng.gen_bool(0.5) {
        SeriesSpec::Eta(s)
    } else {
        SeriesSpec::Beta(s)
    }
}

fn random_rational(rng: &mut StdRng) -> Rational {
    let mut num = 0;
    while num == 0 {
        num = rng.gen_range(-9..=9);
    }
    Rational::new(num.into(), rng.gen_range(1..=6).into())
}

/// `per_axiom` cases for each axiom, reproducible from `seed`.
pub fn axiom_cases(seed: u64, per_axiom: usize) -> Vec<AxiomCase> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(3 * per_axiom);
    for _ in 0..per_axiom {
        out.push(AxiomCase::Scaling(random_rational(&mut rng), random_base(&mut rng)));
        out.push(AxiomCase::Addition(random_base(&mut rng), random_base(&mut rng)));
        out.push(AxiomCase::Prepend(random_rational(&mut rng), random_base(&mut rng)));
    }
    out
}

/// `beta(-2) + eta(-3)`: odd sums 2, 37, 130, ... on x^3/2 + 11x^2/4 - 5/4,
/// value -5/8.
fn mixed_sum_case() -> Result<(), String> {
    let spec = SeriesSpec::sum(SeriesSpec::Beta(-2), SeriesSpec::Eta(-3));
    let pair = characterize(&spec, &FitOptions::default()).map_err(|e| e.to_string())?;
    let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
    expect_eq("P_o", &pair.p_odd, &Polynomial::from_coeffs(vec![r(-5, 4), r(0, 1), r(11, 4), r(1, 2)]))?;
    expect_eq("P_e", &pair.p_even, &(-&pair.p_odd - Polynomial::constant(r(5, 4))))?;
    expect_eq("value", &pe_value(&spec)?, &r(-5, 8))
}

pub fn hardy(seed: u64, per_axiom: usize) -> SuiteDoc {
    let axioms = axiom_cases(seed, per_axiom);
    let mut cases: Vec<CaseDoc> = axioms.par_iter().map(|c| case(c.label(), c.check())).collect();
    cases.push(case("B: beta(-2)+eta(-3) = -5/8", mixed_sum_case()));
    SuiteDoc::new("hardy", cases)
}

/// Orders checked against the functional equations; the sine factor
/// vanishes for even eta and odd beta orders.
pub const FUNCTIONAL_CASES: [(Family, i64); 10] = [
    (Family::Eta, -15),
    (Family::Eta, -17),
    (Family::Eta, -19),
    (Family::Eta, -20),
    (Family::Eta, -21),
    (Family::Beta, -16),
    (Family::Beta, -18),
    (Family::Beta, -19),
    (Family::Beta, -20),
    (Family::Beta, -22),
];

pub fn functional() -> SuiteDoc {
    let cases = FUNCTIONAL_CASES
        .par_iter()
        .map(|&(f, s)| {
            let spec = f.spec(s);
            let outcome = pe_value(&spec).and_then(|v| {
                let check = functional_check(f, s, &v, FUNCTIONAL_PRECISION).map_err(|e| e.to_string())?;
                if check.residual.abs_below_pow10(FUNCTIONAL_EXPONENT) {
                    Ok(())
                } else {
                    Err(format!("residual {} not below 1e{FUNCTIONAL_EXPONENT}", check.residual))
                }
            });
            case(spec.to_string(), outcome)
        })
        .collect();
    SuiteDoc::new("functional", cases)
}
