use std::str::FromStr;

use antilimit::algebra::Rational;
use num_traits::pow;

use crate::error::CliError;

fn split(text: &str) -> Result<(&str, &str), CliError> {
    text.split_once("..").ok_or_else(|| CliError::Parse(format!("expected a range `a..b`, got `{text}`")))
}

/// `a..b` over integers, walked from `a` towards `b` inclusive.
pub fn int_range(text: &str) -> Result<Vec<i64>, CliError> {
    let (a, b) = split(text)?;
    let parse = |t: &str| {
        t.trim().parse::<i64>().map_err(|_| CliError::Parse(format!("`{t}` is not an integer in range `{text}`")))
    };
    let (a, b) = (parse(a)?, parse(b)?);
    Ok(if a <= b { (a..=b).collect() } else { (b..=a).rev().collect() })
}

/// Integer, `p/q` or a plain decimal such as `-0.25`.
pub fn rational(text: &str) -> Result<Rational, CliError> {
    let t = text.trim();
    let bad = || CliError::Parse(format!("`{text}` is not a rational number"));
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        let num: Rational = Rational::from_str(&digits).map_err(|_| bad())?;
        let scale = Rational::from_integer(pow(10.into(), frac.len()));
        let v = num / scale;
        return Ok(if negative { -v } else { v });
    }
    Rational::from_str(t).map_err(|_| bad())
}

/// `a..b` with rational endpoints and `a < b`.
pub fn rational_range(text: &str) -> Result<(Rational, Rational), CliError> {
    let (a, b) = split(text)?;
    let (a, b) = (rational(a)?, rational(b)?);
    if a >= b {
        return Err(CliError::Parse(format!("range `{text}` needs a < b")));
    }
    Ok((a, b))
}
