use num_traits::Zero;

use super::{Polynomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Neither,
}

/// Symmetry of `q(t) = (p - offset)(center + t)`, decided on the
/// coefficients of `q`.
///
/// A vanishing `q` is reported as `Even`.
pub fn parity_about(p: &Polynomial, center: &Rational, offset: &Rational) -> Parity {
    let q = (p - &Polynomial::constant(offset.clone())).shift(center);
    let coeffs = q.coeffs();
    let odd_part_vanishes = coeffs.iter().skip(1).step_by(2).all(Zero::is_zero);
    let even_part_vanishes = coeffs.iter().step_by(2).all(Zero::is_zero);
    if odd_part_vanishes {
        Parity::Even
    } else if even_part_vanishes {
        Parity::Odd
    } else {
        Parity::Neither
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn examples() {
        let zero = int(0);
        assert_eq!(parity_about(&Polynomial::from_integers(&[-1, 0, 2]), &zero, &zero), Parity::Even);
        assert_eq!(parity_about(&Polynomial::x(), &zero, &zero), Parity::Odd);
        let po = Polynomial::from_coeffs(vec![rat(1, 2), rat(1, 2)]);
        assert_eq!(parity_about(&po, &rat(-1, 2), &rat(1, 4)), Parity::Odd);
        assert_eq!(parity_about(&po, &rat(-1, 2), &zero), Parity::Neither);
    }

    #[test]
    fn shifted_quartic_is_even() {
        // 1/2 x^4 + x^3 - 1/2 x becomes t^4/2 - 3t^2/4 + 5/32 about -1/2
        let p = Polynomial::from_coeffs(vec![int(0), rat(-1, 2), int(0), int(1), rat(1, 2)]);
        assert_eq!(parity_about(&p, &rat(-1, 2), &int(0)), Parity::Even);
        assert_eq!(parity_about(&Polynomial::zero(), &int(3), &int(0)), Parity::Even);
    }
}
