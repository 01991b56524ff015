//! Exact real-root machinery: Sturm sequences, isolation by bisection and
//! refinement of isolating intervals down to rational roots or a target
//! width.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::algebra::{Polynomial, Rational};

/// Half-open interval `(lo, hi]` holding exactly one root of a square-free
/// polynomial, with the polynomial changing sign between its endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }
}

/// Result of refining one isolating interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refined {
    Rational(Rational),
    Irrational(RootInterval),
}

#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<Polynomial>,
}

impl SturmSequence {
    /// Signed remainder chain `p, p', -rem(p, p'), ...`. Each member is
    /// rescaled by a positive constant to keep coefficients small.
    pub fn new(p: &Polynomial) -> Self {
        let mut chain = vec![p.primitive()];
        if p.is_constant() {
            return Self { chain };
        }
        chain.push(p.derivative().primitive());
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero divisor");
            if r.is_zero() {
                break;
            }
            chain.push((-r).primitive());
        }
        Self { chain }
    }

    fn changes(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn sign_changes(&self, x: &Rational) -> usize {
        Self::changes(self.chain.iter().map(|p| p.sign_at(x)))
    }

    fn changes_at_infinity(&self, positive: bool) -> usize {
        Self::changes(self.chain.iter().map(|p| {
            let lead = p.leading().map_or(0, |l| if l.is_positive() { 1 } else { -1 });
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if !positive && odd {
                -lead
            } else {
                lead
            }
        }))
    }

    /// Distinct roots in `(lo, hi]`.
    pub fn count_in(&self, lo: &Rational, hi: &Rational) -> usize {
        self.sign_changes(lo).saturating_sub(self.sign_changes(hi))
    }

    /// Distinct roots in `(a, +inf)`.
    pub fn count_above(&self, a: &Rational) -> usize {
        self.sign_changes(a).saturating_sub(self.changes_at_infinity(true))
    }

    /// Distinct real roots.
    pub fn count_real(&self) -> usize {
        self.changes_at_infinity(false).saturating_sub(self.changes_at_infinity(true))
    }
}

fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

/// Isolating intervals for every real root of a square-free polynomial,
/// ascending.
pub fn isolate(p: &Polynomial, sturm: &SturmSequence) -> Vec<RootInterval> {
    if p.is_constant() {
        return Vec::new();
    }
    let bound = Rational::from_integer(p.root_bound().ceil().to_integer());
    let mut pending = vec![(-bound.clone(), bound)];
    let mut out = Vec::new();
    while let Some((lo, hi)) = pending.pop() {
        match sturm.count_in(&lo, &hi) {
            0 => {}
            1 => out.push(RootInterval { lo, hi }),
            _ => {
                let mid = (&lo + &hi) * half();
                pending.push((lo, mid.clone()));
                pending.push((mid, hi));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Shrinks an isolating interval of a square-free `p` until either a
/// rational root is pinned down or the width is at most `width`.
///
/// `lead` is the leading coefficient of the primitive integer form of `p`:
/// any rational root has the shape `m / lead`, so once the interval is
/// narrower than `1 / lead` a single candidate is tested exactly.
pub fn refine(
    p: &Polynomial,
    sturm: &SturmSequence,
    interval: &RootInterval,
    lead: &BigInt,
    width: &Rational,
) -> Refined {
    let (mut lo, mut hi) = (interval.lo.clone(), interval.hi.clone());
    if p.sign_at(&hi) == 0 {
        return Refined::Rational(hi);
    }
    // lo may be a root owned by the neighbouring interval
    while p.sign_at(&lo) == 0 {
        let mid = (&lo + &hi) * half();
        if sturm.count_in(&mid, &hi) == 1 {
            lo = mid;
        } else {
            hi = mid;
            if p.sign_at(&hi) == 0 {
                return Refined::Rational(hi);
            }
        }
    }
    let lo_sign = p.sign_at(&lo);
    let lead = lead.abs();
    let grid = Rational::new(BigInt::one(), lead.clone());
    let mut tested = false;
    loop {
        let w = &hi - &lo;
        if !tested && w < grid {
            tested = true;
            // multiples of 1/lead inside (lo, hi]: at most one
            let m = (&hi * Rational::from_integer(lead.clone())).floor().to_integer();
            let cand = Rational::new(m, lead.clone());
            if cand > lo && p.sign_at(&cand) == 0 {
                return Refined::Rational(cand);
            }
        }
        if tested && &w <= width {
            return Refined::Irrational(RootInterval { lo, hi });
        }
        let mid = (&lo + &hi) * half();
        match p.sign_at(&mid) {
            0 => return Refined::Rational(mid),
            s if s == lo_sign => lo = mid,
            _ => hi = mid,
        }
    }
}

/// `10^-digits`
pub fn pow10_inv(digits: u32) -> Rational {
    Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10u8), digits as usize))
}

/// Decimal digits in the largest coefficient of the primitive integer form.
pub fn coefficient_digits(p: &Polynomial) -> u32 {
    p.primitive_integer()
        .iter()
        .map(|c| c.abs().to_string().len() as u32)
        .max()
        .unwrap_or(1)
}

/// Leading coefficient of the primitive integer form.
pub fn integer_lead(p: &Polynomial) -> BigInt {
    p.primitive_integer().last().cloned().unwrap_or_else(BigInt::one)
}
