//! Property tests for the engine, solver and oracle invariants.

use antilimit::algebra::{rat, HpComplex, PolyOp, Polynomial, Rational};
use antilimit::engine::{characterize, FitOptions};
use antilimit::oracle::{beta_closed, eta_closed, eta_zeta_convert, zeta_closed, KnownValue};
use antilimit::series::{Family, SeriesSpec};
use antilimit::solver::{deduce, evaluate, intersect, SturmSequence};
use num_traits::Zero;
use proptest::prelude::*;

const PRECISION: u32 = 50;

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![Just(Family::Eta), Just(Family::Beta)]
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_filter("nonzero", |(n, _)| *n != 0).prop_map(|(n, d)| rat(n, d))
}

fn closed(family: Family, s: i64) -> Rational {
    match family {
        Family::Eta => eta_closed(s).unwrap(),
        Family::Beta => beta_closed(s).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn fit_is_stable_and_has_degree_abs_s(family in family(), s in -20i64..=-1) {
        let spec = family.spec(s);
        let pair = characterize(&spec, &FitOptions::default()).unwrap();
        prop_assert_eq!(pair.fit_degree, s.unsigned_abs() as usize);
        let wider = characterize(&spec, &FitOptions { verify_count: pair.verify_count + 5, ..FitOptions::default() }).unwrap();
        prop_assert_eq!(&wider.p_odd, &pair.p_odd);
        prop_assert_eq!(&wider.p_even, &pair.p_even);
        prop_assert_eq!(&wider.structural_k, &pair.structural_k);

        let k = pair.structural_k.clone().expect("structural constant");
        prop_assert_eq!(pair.p_odd.arith(&pair.p_even, PolyOp::Add), Polynomial::constant(k));
    }

    #[test]
    fn every_root_carries_the_same_value(family in family(), s in -12i64..=-1) {
        let pair = characterize(&family.spec(s), &FitOptions::default()).unwrap();
        let anti = intersect(&pair, PRECISION).unwrap();
        let k = pair.structural_k.clone().unwrap();
        let value = anti.exact_value().cloned().unwrap();
        prop_assert_eq!(&value * rat(2, 1), k.clone());
        prop_assert_eq!(value.clone(), closed(family, s));

        let d = pair.difference();
        prop_assert_eq!(d.arith(&Polynomial::constant(k), PolyOp::Add), pair.p_odd.scale(&rat(2, 1)));

        for r in &anti.rational_roots {
            prop_assert!(d.eval(r).is_zero());
        }
        // intervals isolate roots of the square-free part; D itself may repeat roots
        let square_free = d.square_free();
        let sturm = SturmSequence::new(&square_free);
        for iso in &anti.real_roots {
            let (lo, hi) = (&iso.interval.lo, &iso.interval.hi);
            prop_assert!(square_free.sign_at(lo) * square_free.sign_at(hi) < 0, "no sign change on ({lo}, {hi}]");
            prop_assert_eq!(sturm.count_in(lo, hi), 1);
        }

        let target = HpComplex::from_rational(&value, PRECISION);
        let points = anti
            .rational_roots
            .iter()
            .map(|r| HpComplex::from_rational(r, PRECISION))
            .chain(anti.real_roots.iter().map(|iso| HpComplex::real(iso.approx.clone())))
            .chain(anti.complex_roots.iter().cloned());
        for x in points {
            let gap = &pair.p_odd.eval_complex(&x) - &target;
            prop_assert!(
                gap.re().abs_below_pow10(-(PRECISION as i64) + 5) && gap.im().abs_below_pow10(-(PRECISION as i64) + 5),
                "p_odd(X) drifts from {value} at X = {}", x.re().to_fixed(20)
            );
        }
    }

    #[test]
    fn value_scales_with_the_series(family in family(), s in -8i64..=-1, mu in nonzero_rational()) {
        let base = characterize(&family.spec(s), &FitOptions::default()).unwrap();
        let scaled = characterize(&SeriesSpec::scaled(mu.clone(), family.spec(s)), &FitOptions::default()).unwrap();
        prop_assert_eq!(scaled.p_odd, base.p_odd.scale(&mu));
        prop_assert_eq!(scaled.p_even, base.p_even.scale(&mu));
    }

    #[test]
    fn zeta_converts_to_eta(s in -30i64..=0) {
        let eta = eta_zeta_convert(s, &KnownValue::Zeta(zeta_closed(s).unwrap())).unwrap();
        prop_assert_eq!(eta, eta_closed(s).unwrap());
    }
}

#[test]
fn both_deduction_routes_agree_at_zero() {
    let opts = FitOptions::default();
    let route = |family: Family| {
        let known = family.spec(-1);
        let (_, anti) = evaluate(&known, &opts, PRECISION).unwrap();
        let combined = SeriesSpec::sum(known.clone(), family.spec(0));
        deduce(&combined, &known, anti.exact_value().unwrap(), &opts, PRECISION).unwrap()
    };
    assert_eq!(route(Family::Eta), rat(1, 2));
    assert_eq!(route(Family::Beta), rat(1, 2));
}
