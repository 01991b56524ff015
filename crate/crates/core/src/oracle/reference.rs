//! Reference characteristic polynomials for eta and beta, transcribed
//! for s = -1..-10, -19 and -20, with one known misprint flagged.

use std::str::FromStr;

use crate::algebra::{Polynomial, Rational};
use crate::series::Family;

/// A coefficient listed differently from what the partial sums give.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub degree: usize,
    pub listed: Rational,
    pub derived: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceRow {
    pub family: Family,
    pub s: i64,
    /// Odd-branch polynomial exactly as listed.
    pub p_odd: Polynomial,
    pub value: Rational,
    pub erratum: Option<Erratum>,
}

impl ReferenceRow {
    /// Listed polynomial with any erratum applied.
    pub fn corrected_p_odd(&self) -> Polynomial {
        match &self.erratum {
            None => self.p_odd.clone(),
            Some(e) => {
                let mut c = self.p_odd.coeffs().to_vec();
                c[e.degree] = e.derived.clone();
                Polynomial::from_coeffs(c)
            }
        }
    }

    /// `p_even = -(p_odd - 2 value)`.
    pub fn corrected_p_even(&self) -> Polynomial {
        let k = Polynomial::constant(&self.value * Rational::from_integer(2.into()));
        -(&self.corrected_p_odd() - &k)
    }
}

type Terms = &'static [(usize, &'static str)];

const ETA: &[(i64, Terms, &str)] = &[
    (-1, &[(1, "1/2"), (0, "1/2")], "1/4"),
    (-2, &[(2, "1/2"), (1, "1/2")], "0"),
    (-3, &[(3, "1/2"), (2, "3/4"), (0, "-1/4")], "-1/8"),
    (-4, &[(4, "1/2"), (3, "1"), (1, "-1/2")], "0"),
    (-5, &[(5, "1/2"), (4, "5/4"), (2, "-5/4"), (0, "1/2")], "1/4"),
    (-6, &[(6, "1/2"), (5, "3/2"), (3, "-5/2"), (1, "3/2")], "0"),
    (-7, &[(7, "1/2"), (6, "7/4"), (4, "-35/8"), (2, "21/4"), (0, "-17/8")], "-17/16"),
    (-8, &[(8, "1/2"), (7, "2"), (5, "-7"), (3, "14"), (1, "-17/2")], "0"),
    (-9, &[(9, "1/2"), (8, "9/4"), (6, "-21/2"), (4, "63/2"), (2, "-153/4"), (0, "31/2")], "31/4"),
    (-10, &[(10, "1/2"), (9, "5/2"), (7, "-15"), (5, "63"), (3, "-255/2"), (1, "155/2")], "0"),
    (
        -19,
        &[
            (19, "1/2"),
            (18, "19/4"),
            (16, "-969/8"),
            (14, "2907"),
            (12, "-214149/4"),
            (10, "1431859/2"),
            (8, "-26113581/4"),
            (6, "37041963"),
            (4, "-900752361/8"),
            (2, "547591761/4"),
            (0, "-221930581/4"),
        ],
        "-221930581/8",
    ),
    (
        -20,
        &[
            (20, "1/2"),
            (19, "5"),
            (17, "-285/2"),
            (15, "3876"),
            (13, "-82365"),
            (11, "1301690"),
            (9, "-14507545"),
            (7, "105834180"),
            (5, "-900752361/2"),
            (3, "912652935"),
            (1, "-1109652905/2"),
        ],
        "0",
    ),
];

const BETA: &[(i64, Terms, &str)] = &[
    (-1, &[(1, "1")], "0"),
    (-2, &[(2, "2"), (0, "-1")], "-1/2"),
    (-3, &[(3, "4"), (1, "-3")], "0"),
    (-4, &[(4, "8"), (2, "-12"), (0, "5")], "5/2"),
    (-5, &[(5, "16"), (3, "-40"), (1, "25")], "0"),
    (-6, &[(6, "32"), (4, "-120"), (2, "150"), (0, "-61")], "-61/2"),
    (-7, &[(7, "64"), (5, "-336"), (3, "7000"), (1, "-427")], "0"),
    (-8, &[(8, "128"), (6, "-896"), (4, "2800"), (2, "-3416"), (0, "1385")], "1385/2"),
    (-9, &[(9, "256"), (7, "-2304"), (5, "10080"), (3, "-20496"), (1, "12465")], "0"),
    (
        -10,
        &[(10, "512"), (8, "-5760"), (6, "33600"), (4, "-102480"), (2, "124650"), (0, "-50521")],
        "-50521/2",
    ),
    (
        -19,
        &[
            (19, "262144"),
            (17, "-11206656"),
            (15, "317521920"),
            (13, "-6779092992"),
            (11, "107193415680"),
            (9, "-1194759408128"),
            (7, "8715963060480"),
            (5, "-37090711793088"),
            (3, "75161501074020"),
            (1, "-45692713833379"),
        ],
        "0",
    ),
    (
        -20,
        &[
            (20, "524288"),
            (18, "-24903680"),
            (16, "793804800"),
            (14, "-19368837120"),
            (12, "357311385600"),
            (10, "-4779037632512"),
            (8, "43579815302400"),
            (6, "-247271411953920"),
            (4, "751615010740200"),
            (2, "-913854276667580"),
            (0, "370371188237525"),
        ],
        "370371188237525/2",
    ),
];

fn parse(text: &str) -> Rational {
    Rational::from_str(text).expect("reference literal")
}

fn build(family: Family, s: i64, terms: Terms, value: &str) -> ReferenceRow {
    let degree = terms.iter().map(|(d, _)| *d).max().unwrap_or(0);
    let mut coeffs = vec![Rational::default(); degree + 1];
    for (d, c) in terms {
        coeffs[*d] = parse(c);
    }
    let erratum = (family == Family::Beta && s == -7).then(|| Erratum {
        degree: 3,
        listed: parse("7000"),
        derived: parse("700"),
    });
    ReferenceRow { family, s, p_odd: Polynomial::from_coeffs(coeffs), value: parse(value), erratum }
}

/// All reference rows for `family`, in listed order.
pub fn reference_rows(family: Family) -> Vec<ReferenceRow> {
    let data = match family {
        Family::Eta => ETA,
        Family::Beta => BETA,
    };
    data.iter().map(|(s, terms, value)| build(family, *s, terms, value)).collect()
}

pub fn reference_row(family: Family, s: i64) -> Option<ReferenceRow> {
    reference_rows(family).into_iter().find(|r| r.s == s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn rows_present() {
        assert_eq!(reference_rows(Family::Eta).len(), 12);
        assert_eq!(reference_rows(Family::Beta).len(), 12);
        assert_eq!(reference_row(Family::Eta, -7).unwrap().value, rat(-17, 16));
        assert!(reference_row(Family::Eta, -11).is_none());
    }

    #[test]
    fn misprint_breaks_first_partial_sum() {
        let row = reference_row(Family::Beta, -7).unwrap();
        assert_ne!(row.p_odd.eval(&int(1)), int(1));
        assert_eq!(row.corrected_p_odd().eval(&int(1)), int(1));
    }

    #[test]
    fn listed_values_are_half_the_constant() {
        for family in [Family::Eta, Family::Beta] {
            for row in reference_rows(family) {
                assert_eq!(row.p_odd.coeff(0), &row.value * int(2), "{family:?} {}", row.s);
            }
        }
    }
}
