//! Text form of [`SeriesSpec`]:
//!
//! ```text
//! expr     := term ('+' term)*
//! term     := rational '*' term | atom
//! atom     := ('eta' | 'beta' | 'zeta') '(' integer ')'
//!           | 'prepend' '(' rational ',' expr ')'
//!           | 'explicit' '[' rational (',' rational)* ']'
//!           | '(' expr ')'
//! rational := '-'? digits ('/' digits)?
//! ```
//!
//! Whitespace is ignored between tokens; `+` associates to the left.

use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use super::SeriesSpec;
use crate::algebra::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{message} at offset {offset}")]
pub struct ParseError {
    pub message: String,
    pub offset: usize,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { message: message.into(), offset: self.pos })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            return self.err("expected digits");
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let neg = self.eat('-');
        let d: BigInt = self.digits()?.parse().expect("ascii digits");
        Ok(if neg { -d } else { d })
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let num = self.integer()?;
        if self.eat('/') {
            let at = self.pos;
            let den: BigInt = self.digits()?.parse().expect("ascii digits");
            if den == BigInt::from(0) {
                return Err(ParseError { message: "zero denominator".into(), offset: at });
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn small_integer(&mut self) -> Result<i64, ParseError> {
        let at = self.pos;
        let n = self.integer()?;
        i64::try_from(n).map_err(|_| ParseError { message: "argument out of range".into(), offset: at })
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_alphabetic()).unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn expr(&mut self) -> Result<SeriesSpec, ParseError> {
        let mut acc = self.term()?;
        while self.eat('+') {
            acc = SeriesSpec::sum(acc, self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SeriesSpec, ParseError> {
        match self.peek() {
            Some(c) if c == '-' || c.is_ascii_digit() => {
                let mu = self.rational()?;
                self.expect('*')?;
                Ok(SeriesSpec::scaled(mu, self.term()?))
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<SeriesSpec, ParseError> {
        if self.eat('(') {
            let inner = self.expr()?;
            self.expect(')')?;
            return Ok(inner);
        }
        let start = self.pos;
        match self.word() {
            name @ ("eta" | "beta" | "zeta") => {
                self.expect('(')?;
                let s = self.small_integer()?;
                self.expect(')')?;
                Ok(match name {
                    "eta" => SeriesSpec::Eta(s),
                    "beta" => SeriesSpec::Beta(s),
                    _ => SeriesSpec::Zeta(s),
                })
            }
            "prepend" => {
                self.expect('(')?;
                let nu = self.rational()?;
                self.expect(',')?;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(SeriesSpec::prepended(nu, inner))
            }
            "explicit" => {
                self.expect('[')?;
                let mut terms = vec![self.rational()?];
                while self.eat(',') {
                    terms.push(self.rational()?);
                }
                self.expect(']')?;
                Ok(SeriesSpec::Explicit(terms))
            }
            "" => self.err("expected a series"),
            other => Err(ParseError { message: format!("unknown series '{other}'"), offset: start }),
        }
    }
}

impl FromStr for SeriesSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut p = Parser { src: s, pos: 0 };
        let spec = p.expr()?;
        if p.peek().is_some() {
            return p.err("unexpected trailing input");
        }
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn documented_forms() {
        assert_eq!("eta(-3)".parse(), Ok(SeriesSpec::Eta(-3)));
        assert_eq!(
            "beta(-2)+eta(-3)".parse(),
            Ok(SeriesSpec::sum(SeriesSpec::Beta(-2), SeriesSpec::Eta(-3)))
        );
        assert_eq!("3/2*eta(-1)".parse(), Ok(SeriesSpec::scaled(rat(3, 2), SeriesSpec::Eta(-1))));
        assert_eq!(
            "prepend(1, eta(0))".parse(),
            Ok(SeriesSpec::prepended(int(1), SeriesSpec::Eta(0)))
        );
        assert_eq!(
            "explicit[1,-2,10,-10,26,-26]".parse(),
            Ok(SeriesSpec::Explicit([1, -2, 10, -10, 26, -26].iter().map(|&v| int(v)).collect()))
        );
    }

    #[test]
    fn precedence_and_grouping() {
        let s: SeriesSpec = " -1/2 * ( eta(-1) + zeta(0) ) + beta(-1) ".parse().unwrap();
        assert_eq!(
            s,
            SeriesSpec::sum(
                SeriesSpec::scaled(rat(-1, 2), SeriesSpec::sum(SeriesSpec::Eta(-1), SeriesSpec::Zeta(0))),
                SeriesSpec::Beta(-1)
            )
        );
    }

    #[test]
    fn errors_carry_offsets() {
        let e = "eta(-3".parse::<SeriesSpec>().unwrap_err();
        assert_eq!(e.offset, 6);
        assert_eq!("gamma(2)".parse::<SeriesSpec>().unwrap_err().offset, 0);
        assert!("1/0*eta(1)".parse::<SeriesSpec>().is_err());
        assert!("eta(-1) eta(-2)".parse::<SeriesSpec>().is_err());
        assert!("".parse::<SeriesSpec>().is_err());
        assert!("explicit[]".parse::<SeriesSpec>().is_err());
    }

    fn spec() -> impl Strategy<Value = SeriesSpec> {
        let leaf = prop_oneof![
            (-30i64..30).prop_map(SeriesSpec::Eta),
            (-30i64..30).prop_map(SeriesSpec::Beta),
            (-30i64..30).prop_map(SeriesSpec::Zeta),
            prop::collection::vec((-50i64..50, 1i64..7), 1..6)
                .prop_map(|v| SeriesSpec::Explicit(v.into_iter().map(|(n, d)| rat(n, d)).collect())),
        ];
        leaf.prop_recursive(4, 24, 2, |inner| {
            let r = (-20i64..20, 1i64..9).prop_map(|(n, d)| rat(n, d));
            prop_oneof![
                (r.clone(), inner.clone()).prop_map(|(m, s)| SeriesSpec::scaled(m, s)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| SeriesSpec::sum(a, b)),
                (r, inner).prop_map(|(n, s)| SeriesSpec::prepended(n, s)),
            ]
        })
    }

    proptest! {
        #[test]
        fn canonical_text_round_trips(s in spec()) {
            let text = s.to_string();
            prop_assert_eq!(text.parse::<SeriesSpec>(), Ok(s));
        }
    }
}
