use num_traits::{One, Zero};

use super::{AlgebraError, Polynomial, Rational};

/// An `(x, y)` sample.
pub type Point = (Rational, Rational);

/// Incrementally built Newton divided-difference table.
///
/// Only the newest diagonal is kept, so adding the `n`th point costs `O(n)`
/// rational operations. `coeffs()[k]` is the `k`th-order divided difference
/// `f[x_0, ..., x_k]`, i.e. the Newton-form coefficient.
#[derive(Clone, Debug, Default)]
pub struct NewtonTable {
    xs: Vec<Rational>,
    diagonal: Vec<Rational>,
    coeffs: Vec<Rational>,
}

impl NewtonTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn abscissae(&self) -> &[Rational] {
        &self.xs
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn push(&mut self, x: Rational, y: Rational) -> Result<(), AlgebraError> {
        if self.xs.contains(&x) {
            return Err(AlgebraError::DuplicateAbscissa(x));
        }
        let n = self.xs.len();
        let mut next = Vec::with_capacity(n + 1);
        next.push(y);
        for j in 1..=n {
            let dd = (&next[j - 1] - &self.diagonal[j - 1]) / (&x - &self.xs[n - j]);
            next.push(dd);
        }
        self.coeffs.push(next[n].clone());
        self.diagonal = next;
        self.xs.push(x);
        Ok(())
    }

    /// Monomial form of the interpolant through the first `count` points.
    pub fn polynomial(&self, count: usize) -> Polynomial {
        let count = count.min(self.xs.len());
        let mut p = Polynomial::zero();
        for i in (0..count).rev() {
            let factor = Polynomial::from_coeffs(vec![-self.xs[i].clone(), Rational::one()]);
            p = &(&p * &factor) + &Polynomial::constant(self.coeffs[i].clone());
        }
        p
    }

    /// Degree of the interpolant through every point pushed so far.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }
}

/// Exact interpolating polynomial of degree at most `points.len() - 1`,
/// computed by Newton divided differences.
pub fn interpolate(points: &[Point]) -> Result<Polynomial, AlgebraError> {
    if points.is_empty() {
        return Err(AlgebraError::EmptyInput);
    }
    let mut table = NewtonTable::new();
    for (x, y) in points {
        table.push(x.clone(), y.clone())?;
    }
    Ok(table.polynomial(points.len()))
}
