//! Fixed-point decimal reals and complex numbers.
//!
//! A value carries `precision` decimal digits after the point and is stored
//! as the integer `value * 10^precision`. Binary operations run at the
//! smaller precision of their operands. Rounding is to nearest, ties away
//! from zero, except for `sqrt` which truncates.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

pub const MIN_PRECISION: u32 = 30;
pub const DEFAULT_PRECISION: u32 = 50;

const PI_LITERAL: &str = "3141592653589793238462643383279502884197169399375105820974944592307816406286208998628034825342117067982148086513282306647";
/// Fractional digits carried by [`PI_LITERAL`].
pub const PI_DIGITS: u32 = 120;

fn pow10(n: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u8), n as usize)
}

/// `n / d` rounded to nearest, ties away from zero.
fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    let (n, d) = if d.is_negative() { (-n, -d) } else { (n.clone(), d.clone()) };
    let (q, r) = n.abs().div_rem(&d);
    let q = if r * 2 >= d { q + 1 } else { q };
    if n.is_negative() {
        -q
    } else {
        q
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HpReal {
    scaled: BigInt,
    precision: u32,
}

impl HpReal {
    /// Raw constructor: the value is `scaled / 10^precision`. Precision below
    /// [`MIN_PRECISION`] is raised to it.
    pub fn from_scaled(scaled: BigInt, precision: u32) -> Self {
        let p = precision.max(MIN_PRECISION);
        let scaled = if p > precision { scaled * pow10(p - precision) } else { scaled };
        Self { scaled, precision: p }
    }

    pub fn zero(precision: u32) -> Self {
        Self::from_scaled(BigInt::zero(), precision)
    }

    pub fn from_int(n: impl Into<BigInt>, precision: u32) -> Self {
        let p = precision.max(MIN_PRECISION);
        Self { scaled: n.into() * pow10(p), precision: p }
    }

    pub fn from_rational(r: &Rational, precision: u32) -> Self {
        let p = precision.max(MIN_PRECISION);
        Self { scaled: div_round(&(r.numer() * pow10(p)), r.denom()), precision: p }
    }

    /// Pi rounded to `precision` digits, or `None` past the stored literal.
    pub fn pi(precision: u32) -> Option<Self> {
        let p = precision.max(MIN_PRECISION);
        if p > PI_DIGITS {
            return None;
        }
        let full: BigInt = PI_LITERAL.parse().expect("pi literal");
        Some(Self { scaled: div_round(&full, &pow10(PI_DIGITS - p)), precision: p })
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn scaled(&self) -> &BigInt {
        &self.scaled
    }

    /// Rescales, rounding when digits are dropped.
    pub fn with_precision(&self, precision: u32) -> Self {
        let p = precision.max(MIN_PRECISION);
        match p.cmp(&self.precision) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => Self { scaled: &self.scaled * pow10(p - self.precision), precision: p },
            Ordering::Less => Self {
                scaled: div_round(&self.scaled, &pow10(self.precision - p)),
                precision: p,
            },
        }
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let p = self.precision.min(other.precision);
        (
            self.with_precision(p).scaled,
            other.with_precision(p).scaled,
            p,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.scaled.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.scaled.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.scaled.is_positive()
    }

    pub fn abs(&self) -> Self {
        Self { scaled: self.scaled.abs(), precision: self.precision }
    }

    /// Truncated square root; `None` for negative input.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        Some(Self {
            scaled: (&self.scaled * pow10(self.precision)).sqrt(),
            precision: self.precision,
        })
    }

    pub fn powu(&self, n: u32) -> Self {
        (0..n).fold(Self::from_int(1, self.precision), |acc, _| &acc * self)
    }

    /// Exact value of the stored fixed-point number.
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.scaled.clone(), pow10(self.precision))
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }

    /// `|self| < 10^exp`.
    pub fn abs_below_pow10(&self, exp: i64) -> bool {
        let shift = exp + self.precision as i64;
        if shift < 0 {
            return self.scaled.is_zero();
        }
        self.scaled.abs() < pow10(shift as u32)
    }

    /// Fixed notation with `digits` fractional digits.
    pub fn to_fixed(&self, digits: u32) -> String {
        let scaled = if digits >= self.precision {
            &self.scaled * pow10(digits - self.precision)
        } else {
            div_round(&self.scaled, &pow10(self.precision - digits))
        };
        let neg = scaled.sign() == Sign::Minus;
        let s = scaled.abs().to_string();
        let d = digits as usize;
        let s = if s.len() <= d { format!("{}{}", "0".repeat(d + 1 - s.len()), s) } else { s };
        let (int_part, frac) = s.split_at(s.len() - d);
        let sign = if neg { "-" } else { "" };
        if d == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac}")
        }
    }
}

impl PartialOrd for HpReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HpReal {
    fn cmp(&self, other: &Self) -> Ordering {
        let p = self.precision.max(other.precision);
        self.with_precision(p).scaled.cmp(&other.with_precision(p).scaled)
    }
}

impl Add for &HpReal {
    type Output = HpReal;
    fn add(self, rhs: &HpReal) -> HpReal {
        let (a, b, p) = self.aligned(rhs);
        HpReal { scaled: a + b, precision: p }
    }
}

impl Sub for &HpReal {
    type Output = HpReal;
    fn sub(self, rhs: &HpReal) -> HpReal {
        let (a, b, p) = self.aligned(rhs);
        HpReal { scaled: a - b, precision: p }
    }
}

impl Mul for &HpReal {
    type Output = HpReal;
    fn mul(self, rhs: &HpReal) -> HpReal {
        let (a, b, p) = self.aligned(rhs);
        HpReal { scaled: div_round(&(a * b), &pow10(p)), precision: p }
    }
}

/// Panics on division by zero, like integer division.
impl Div for &HpReal {
    type Output = HpReal;
    fn div(self, rhs: &HpReal) -> HpReal {
        let (a, b, p) = self.aligned(rhs);
        assert!(!b.is_zero(), "fixed-point division by zero");
        HpReal { scaled: div_round(&(a * pow10(p)), &b), precision: p }
    }
}

impl Neg for &HpReal {
    type Output = HpReal;
    fn neg(self) -> HpReal {
        HpReal { scaled: -&self.scaled, precision: self.precision }
    }
}

impl fmt::Display for HpReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_fixed(self.precision))
    }
}

/// Fixed-point complex number; both parts share one precision.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HpComplex {
    re: HpReal,
    im: HpReal,
}

impl HpComplex {
    pub fn new(re: HpReal, im: HpReal) -> Self {
        let p = re.precision.min(im.precision);
        Self { re: re.with_precision(p), im: im.with_precision(p) }
    }

    pub fn zero(precision: u32) -> Self {
        Self::real(HpReal::zero(precision))
    }

    pub fn real(re: HpReal) -> Self {
        let im = HpReal::zero(re.precision);
        Self { re, im }
    }

    /// The imaginary unit.
    pub fn i(precision: u32) -> Self {
        Self::new(HpReal::zero(precision), HpReal::from_int(1, precision))
    }

    pub fn from_rational(r: &Rational, precision: u32) -> Self {
        Self::real(HpReal::from_rational(r, precision))
    }

    pub fn from_rationals(re: &Rational, im: &Rational, precision: u32) -> Self {
        Self::new(HpReal::from_rational(re, precision), HpReal::from_rational(im, precision))
    }

    pub fn from_f64(z: Complex64, precision: u32) -> Self {
        let conv = |v: f64| {
            Rational::from_float(v).map_or_else(|| HpReal::zero(precision), |r| HpReal::from_rational(&r, precision))
        };
        Self::new(conv(z.re), conv(z.im))
    }

    pub fn re(&self) -> &HpReal {
        &self.re
    }

    pub fn im(&self) -> &HpReal {
        &self.im
    }

    pub fn precision(&self) -> u32 {
        self.re.precision
    }

    pub fn with_precision(&self, precision: u32) -> Self {
        Self { re: self.re.with_precision(precision), im: self.im.with_precision(precision) }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> HpReal {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> HpReal {
        self.norm_sqr().sqrt().expect("nonnegative")
    }

    /// `|self| < 10^exp`, decided exactly on the squared modulus of the
    /// stored value.
    pub fn abs_below_pow10(&self, exp: i64) -> bool {
        let re = self.re.to_rational();
        let im = self.im.to_rational();
        let norm = &re * &re + &im * &im;
        let limit = if exp >= 0 {
            Rational::from_integer(pow10((2 * exp) as u32))
        } else {
            Rational::new(BigInt::one(), pow10((-2 * exp) as u32))
        };
        norm < limit
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// `a+bi` / `a-bi` with `digits` fractional digits on each part.
    pub fn to_fixed(&self, digits: u32) -> String {
        let re = self.re.to_fixed(digits);
        let im = self.im.abs().to_fixed(digits);
        let sign = if self.im.is_negative() { '-' } else { '+' };
        format!("{re}{sign}{im}i")
    }
}

impl Add for &HpComplex {
    type Output = HpComplex;
    fn add(self, rhs: &HpComplex) -> HpComplex {
        HpComplex { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &HpComplex {
    type Output = HpComplex;
    fn sub(self, rhs: &HpComplex) -> HpComplex {
        HpComplex { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &HpComplex {
    type Output = HpComplex;
    fn mul(self, rhs: &HpComplex) -> HpComplex {
        let p = self.precision().min(rhs.precision());
        let (a, b) = (&self.re.with_precision(p).scaled, &self.im.with_precision(p).scaled);
        let (c, d) = (&rhs.re.with_precision(p).scaled, &rhs.im.with_precision(p).scaled);
        let scale = pow10(p);
        HpComplex {
            re: HpReal { scaled: div_round(&(a * c - b * d), &scale), precision: p },
            im: HpReal { scaled: div_round(&(a * d + b * c), &scale), precision: p },
        }
    }
}

/// Panics on division by zero.
impl Div for &HpComplex {
    type Output = HpComplex;
    fn div(self, rhs: &HpComplex) -> HpComplex {
        let p = self.precision().min(rhs.precision());
        let (a, b) = (&self.re.with_precision(p).scaled, &self.im.with_precision(p).scaled);
        let (c, d) = (&rhs.re.with_precision(p).scaled, &rhs.im.with_precision(p).scaled);
        let den = c * c + d * d;
        assert!(!den.is_zero(), "fixed-point complex division by zero");
        let scale = pow10(p);
        HpComplex {
            re: HpReal { scaled: div_round(&((a * c + b * d) * &scale), &den), precision: p },
            im: HpReal { scaled: div_round(&((b * c - a * d) * &scale), &den), precision: p },
        }
    }
}

impl Neg for &HpComplex {
    type Output = HpComplex;
    fn neg(self) -> HpComplex {
        HpComplex { re: -&self.re, im: -&self.im }
    }
}

impl fmt::Display for HpComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_fixed(self.precision()))
    }
}
