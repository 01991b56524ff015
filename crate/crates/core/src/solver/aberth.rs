//! Complex roots by Aberth-Ehrlich simultaneous iteration.
//!
//! A double-precision pass finds all roots from points on a circle; a
//! fixed-point pass then polishes them to the working precision. Only
//! square-free polynomials are handed in, so every root is simple.

use num_complex::Complex64;

use crate::algebra::{HpComplex, HpReal, Polynomial, Rational};
use num_traits::{Signed, ToPrimitive, Zero};

const F64_ITERATIONS: usize = 500;
const HP_ITERATIONS: usize = 80;

fn eval_f64(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn aberth_f64(p: &Polynomial) -> Vec<Complex64> {
    let lead = p.leading().expect("nonzero").clone();
    // monic in f64 keeps magnitudes tame
    let coeffs: Vec<f64> = p.coeffs().iter().map(|c| (c / &lead).to_f64().unwrap_or(0.0)).collect();
    let n = coeffs.len() - 1;
    // Fujiwara-style radius for the starting circle
    let radius = (0..n)
        .map(|i| coeffs[i].abs().powf(1.0 / (n - i) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..F64_ITERATIONS {
        let mut worst = 0.0f64;
        for k in 0..n {
            let (pv, dv) = eval_f64(&coeffs, z[k]);
            if pv == Complex64::zero() {
                continue;
            }
            let ratio = pv / dv;
            let repulsion: Complex64 = (0..n).filter(|&j| j != k).map(|j| 1.0 / (z[k] - z[j])).sum();
            let step = ratio / (1.0 - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                worst = worst.max(step.norm() / z[k].norm().max(1.0));
            }
        }
        if worst < 1e-15 {
            break;
        }
    }
    z
}

fn eval_hp(coeffs: &[HpComplex], z: &HpComplex) -> (HpComplex, HpComplex) {
    let prec = z.precision();
    let mut p = HpComplex::zero(prec);
    let mut dp = HpComplex::zero(prec);
    for c in coeffs.iter().rev() {
        dp = &(&dp * z) + &p;
        p = &(&p * z) + c;
    }
    (p, dp)
}

/// All roots of a square-free `p`, polished at `precision` digits, or
/// `None` if the fixed-point iteration does not settle.
pub fn all_roots(p: &Polynomial, precision: u32) -> Option<Vec<HpComplex>> {
    let n = p.degree()?;
    if n == 0 {
        return Some(Vec::new());
    }
    let prim = p.primitive();
    let coeffs: Vec<HpComplex> = prim.coeffs().iter().map(|c| HpComplex::from_rational(c, precision)).collect();
    let mut z: Vec<HpComplex> = aberth_f64(&prim).into_iter().map(|r| HpComplex::from_f64(r, precision)).collect();
    let target = precision as i64 - 5;
    let one = HpComplex::from_rational(&Rational::from_integer(1.into()), precision);
    for _ in 0..HP_ITERATIONS {
        let mut settled = true;
        for k in 0..n {
            let (pv, dv) = eval_hp(&coeffs, &z[k]);
            if pv.is_zero() {
                continue;
            }
            if dv.is_zero() {
                return None;
            }
            let ratio = &pv / &dv;
            let mut repulsion = HpComplex::zero(precision);
            for j in (0..n).filter(|&j| j != k) {
                let gap = &z[k] - &z[j];
                if gap.is_zero() {
                    return None;
                }
                repulsion = &repulsion + &(&one / &gap);
            }
            let denom = &one - &(&ratio * &repulsion);
            if denom.is_zero() {
                return None;
            }
            let step = &ratio / &denom;
            if !step.abs_below_pow10(-target) {
                settled = false;
            }
            z[k] = &z[k] - &step;
        }
        if settled {
            return Some(z);
        }
    }
    None
}

/// Roots with nonzero imaginary part of a real square-free polynomial that
/// has exactly `real_count` real roots, as conjugate pairs.
pub fn complex_roots(p: &Polynomial, real_count: usize, precision: u32) -> Option<Vec<HpComplex>> {
    let n = p.degree().unwrap_or(0);
    let pairs = n.checked_sub(real_count)? / 2;
    if pairs == 0 {
        return Some(Vec::new());
    }
    if n == 2 {
        return Some(quadratic_pair(p, precision));
    }
    let mut upper: Vec<HpComplex> = all_roots(p, precision)?
        .into_iter()
        .filter(|z| z.im().is_positive())
        .collect();
    upper.sort_by(|a, b| b.im().abs().cmp(&a.im().abs()));
    if upper.len() < pairs {
        return None;
    }
    upper.truncate(pairs);
    Some(upper.iter().flat_map(|z| [z.clone(), z.conj()]).collect())
}

/// Closed form for a quadratic with negative discriminant.
fn quadratic_pair(p: &Polynomial, precision: u32) -> Vec<HpComplex> {
    let (c, b, a) = (p.coeff(0), p.coeff(1), p.coeff(2));
    let two_a = &a * Rational::from_integer(2.into());
    let disc = &b * &b - Rational::from_integer(4.into()) * &a * &c;
    let re = HpReal::from_rational(&(-&b / &two_a), precision);
    let root = HpReal::from_rational(&-disc, precision).sqrt().expect("negative discriminant");
    let im = &root / &HpReal::from_rational(&two_a.abs(), precision);
    let z = HpComplex::new(re, im);
    vec![z.clone(), z.conj()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_imaginary_pair() {
        let p = Polynomial::from_integers(&[1, 0, 1]);
        let roots = complex_roots(&p, 0, 50).unwrap();
        assert_eq!(roots, vec![HpComplex::i(50), HpComplex::i(50).conj()]);
    }

    #[test]
    fn quartic_with_two_real_roots() {
        // (x^2 - 2)(x^2 + x + 1)
        let p = &Polynomial::from_integers(&[-2, 0, 1]) * &Polynomial::from_integers(&[1, 1, 1]);
        let roots = complex_roots(&p, 2, 60).unwrap();
        assert_eq!(roots.len(), 2);
        for z in &roots {
            assert!(p.eval_complex(z).abs_below_pow10(-50));
        }
        let half = HpReal::from_rational(&Rational::new((-1).into(), 2.into()), 60);
        assert!((&roots[0].re().clone() - &half).abs_below_pow10(-55));
    }

    #[test]
    fn all_roots_of_degree_nine() {
        // distinct integer and complex roots mixed
        let mut p = Polynomial::from_integers(&[1]);
        for r in -3..=2 {
            p = &p * &Polynomial::from_integers(&[-r, 1]);
        }
        p = &p * &Polynomial::from_integers(&[5, 2, 1]);
        p = &p * &Polynomial::from_integers(&[-7, 1]);
        let roots = all_roots(&p, 50).unwrap();
        assert_eq!(roots.len(), 9);
        for z in &roots {
            assert!(p.eval_complex(z).abs_below_pow10(-35), "{z}");
        }
    }
}
