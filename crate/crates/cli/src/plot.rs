use antilimit::algebra::{HpReal, Rational};
use antilimit::solver::{AntiLimit, RealRoot};

/// Samples `n` evenly spaced points of `[a, b]` plus one row per real
/// intersection inside the interval that is not already a sample, in
/// ascending `x`.
pub fn rows(anti: Option<&AntiLimit>, a: &Rational, b: &Rational, n: usize) -> Vec<Rational> {
    let steps = Rational::from_integer((n - 1).into());
    let mut xs: Vec<Rational> =
        (0..n).map(|i| a + (b - a) * Rational::from_integer(i.into()) / &steps).collect();
    if let Some(anti) = anti {
        for root in anti.real_intersections() {
            let x = match root {
                RealRoot::Rational(r) => r,
                RealRoot::Isolated(iso) => iso.approx.to_rational(),
            };
            if &x >= a && &x <= b && !xs.contains(&x) {
                xs.push(x);
            }
        }
    }
    xs.sort();
    xs
}

pub fn fixed(v: &Rational, digits: u32) -> String {
    HpReal::from_rational(v, digits).to_fixed(digits)
}
