use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::hp::HpComplex;
use super::Rational;

/// Dense polynomial with rational coefficients; `coeffs[i]` multiplies `x^i`.
///
/// The representation is canonical: the last stored coefficient is never
/// zero, and the zero polynomial stores no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

/// Coefficient-wise operations exposed as a single entry point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    ScaleBy(Rational),
    Negate,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// `x - r`
    pub fn linear_root(r: &Rational) -> Self {
        Self::from_coeffs(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and every nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at a fixed-point complex point; coefficients are
    /// rounded at the precision of `z`.
    pub fn eval_complex(&self, z: &HpComplex) -> HpComplex {
        let prec = z.precision();
        self.coeffs.iter().rev().fold(HpComplex::zero(prec), |acc, c| {
            &(&acc * z) + &HpComplex::from_rational(c, prec)
        })
    }

    /// Sign of `p(x)`, computed without gcd reductions.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        let (num, den) = (x.numer(), x.denom());
        let n = self.coeffs.len();
        if n == 0 {
            return 0;
        }
        // sum c_i num^i den^(n-1-i) scaled by the lcm of coefficient denominators
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut den_pow = BigInt::one();
        let mut acc = ints[n - 1].clone();
        for c in ints[..n - 1].iter().rev() {
            den_pow *= den;
            acc = acc * num + c * &den_pow;
        }
        match acc.sign() {
            num_bigint::Sign::Plus => 1,
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
        }
    }

    pub fn scale(&self, mu: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * mu).collect())
    }

    pub fn arith(&self, other: &Self, op: PolyOp) -> Self {
        match op {
            PolyOp::Add => self + other,
            PolyOp::Sub => self - other,
            PolyOp::ScaleBy(mu) => self.scale(&mu),
            PolyOp::Negate => -self,
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    /// `q(t) = p(center + t)`.
    pub fn shift(&self, center: &Rational) -> Self {
        let step = Self::from_coeffs(vec![center.clone(), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &step) + &Self::constant(c.clone()))
    }

    /// Euclidean division; `None` when dividing by the zero polynomial.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading()?.clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] / &lead;
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * d;
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Some((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Scales to leading coefficient one; the zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Square-free part `p / gcd(p, p')`, made monic.
    pub fn square_free(&self) -> Self {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).expect("nonzero gcd").0.monic()
    }

    /// Integer coefficients of the same polynomial scaled by a positive
    /// rational so that they are coprime. Signs are preserved.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &g).collect()
    }

    /// Same polynomial divided by a positive rational so the coefficients are
    /// coprime integers. Root locations and signs are unchanged.
    pub fn primitive(&self) -> Self {
        Self::from_coeffs(
            self.primitive_integer()
                .into_iter()
                .map(Rational::from_integer)
                .collect(),
        )
    }

    /// Cauchy bound: every complex root has modulus strictly below it.
    pub fn root_bound(&self) -> Rational {
        let Some(lead) = self.leading() else {
            return Rational::one();
        };
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| (c / lead).abs())
            .max()
            .unwrap_or_else(Rational::zero);
        Rational::one() + max
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Descending powers, e.g. `1/2 x^3 + 3/4 x^2 - 1/4`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag} {var}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn p(c: &[(i64, i64)]) -> Polynomial {
        Polynomial::from_coeffs(c.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn zero_is_canonical() {
        let z = Polynomial::from_coeffs(vec![int(0), int(0)]);
        assert_eq!(z, Polynomial::zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.eval(&rat(7, 3)), int(0));
        assert_eq!(Polynomial::constant(int(0)), Polynomial::zero());
    }

    #[test]
    fn horner_eval() {
        // x/2 + 1/2 at 3 is the third odd partial sum of 1 - 2 + 3 - ...
        assert_eq!(p(&[(1, 2), (1, 2)]).eval(&int(3)), int(2));
        assert_eq!(Polynomial::from_integers(&[-1, 0, 2]).eval(&int(3)), int(17));
    }

    #[test]
    fn add_sub_scale() {
        let po = p(&[(1, 2), (1, 2)]);
        let half_x = p(&[(0, 1), (-1, 2)]);
        assert_eq!(po.arith(&half_x, PolyOp::Add), Polynomial::constant(rat(1, 2)));
        assert_eq!(po.arith(&po, PolyOp::ScaleBy(int(1))), po);
        assert_eq!(po.arith(&po, PolyOp::Negate), p(&[(-1, 2), (-1, 2)]));

        let eta3 = p(&[(-1, 4), (0, 1), (3, 4), (1, 2)]);
        let even = &(-&eta3) - &Polynomial::constant(rat(1, 4));
        let d = eta3.arith(&even, PolyOp::Sub);
        assert_eq!(d, p(&[(-1, 4), (0, 1), (3, 2), (1, 1)]));
        assert_eq!(d, &eta3.scale(&int(2)) - &Polynomial::constant(rat(-1, 4)));
    }

    #[test]
    fn division_and_gcd() {
        // (x - 1)^2 (x + 2)
        let f = Polynomial::from_integers(&[2, -3, 0, 1]);
        let (q, r) = f.div_rem(&Polynomial::from_integers(&[-1, 1])).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, Polynomial::from_integers(&[-2, 1, 1]));
        assert_eq!(f.square_free(), Polynomial::from_integers(&[-2, 1, 1]));
        assert!(f.div_rem(&Polynomial::zero()).is_none());
    }

    #[test]
    fn shift_and_primitive() {
        let q = Polynomial::from_integers(&[0, 0, 1]).shift(&int(1));
        assert_eq!(q, Polynomial::from_integers(&[1, 2, 1]));
        let prim = p(&[(-1, 4), (0, 1), (3, 2), (1, 1)]).primitive_integer();
        assert_eq!(prim, vec![(-1).into(), 0.into(), 6.into(), 4.into()]);
    }

    #[test]
    fn sign_at_matches_eval() {
        let f = p(&[(-1, 4), (0, 1), (3, 2), (1, 1)]);
        for x in [rat(-3, 2), rat(-1, 2), rat(0, 1), rat(1, 3), rat(5, 7)] {
            let v = f.eval(&x);
            let expect = if v.is_zero() { 0 } else if v.is_positive() { 1 } else { -1 };
            assert_eq!(f.sign_at(&x), expect, "at {x}");
        }
    }

    #[test]
    fn display_descending() {
        assert_eq!(p(&[(-1, 4), (0, 1), (3, 4), (1, 2)]).to_string(), "1/2 x^3 + 3/4 x^2 - 1/4");
        assert_eq!(Polynomial::from_integers(&[0, -1]).to_string(), "-x");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
