//! Text format for quartics: signed sums of integer-coefficient monomials in
//! `x, y, z, w`, with `^` exponents and optional `*`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact_algebra::{push_term, QuarticForm};

const VARS: [char; 4] = ['x', 'y', 'z', 'w'];

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn bump(&mut self) -> char {
        let c = self.src[self.pos..].chars().next().unwrap();
        self.pos += c.len_utf8();
        c
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }

    fn exponent(&mut self) -> Result<u32> {
        let at = self.pos;
        let e = self.integer()?;
        u32::try_from(&e).or_else(|_| {
            self.pos = at;
            self.err("exponent too large")
        })
    }

    /// One monomial with its coefficient (sign not included).
    fn term(&mut self) -> Result<(BigInt, [u32; 4])> {
        let mut coeff = BigInt::one();
        let mut exps = [0u32; 4];
        let mut factors = 0;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coeff *= self.integer()?;
                    if self.peek() == Some('^') {
                        return self.err("exponents on numbers are not supported");
                    }
                }
                Some(c) if VARS.contains(&c) => {
                    self.bump();
                    let i = VARS.iter().position(|&v| v == c).unwrap();
                    let e = if self.peek() == Some('^') {
                        self.bump();
                        self.exponent()?
                    } else {
                        1
                    };
                    exps[i] += e;
                }
                Some(c) if factors == 0 => return self.err(format!("unexpected '{c}'")),
                None if factors == 0 => return self.err("unexpected end of input"),
                _ => return self.err("expected a factor after '*'"),
            }
            factors += 1;
            match self.peek() {
                Some('*') => {
                    self.bump();
                }
                Some(c) if c.is_ascii_digit() || VARS.contains(&c) => {}
                _ => return Ok((coeff, exps)),
            }
        }
    }
}

fn monomial_text(e: &[u32; 4]) -> String {
    let parts: Vec<String> = e
        .iter()
        .zip(VARS)
        .filter(|(k, _)| **k > 0)
        .map(|(k, v)| if *k == 1 { v.to_string() } else { format!("{v}^{k}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Parses a homogeneous quartic; like terms are collected.
pub fn parse_quartic(text: &str) -> Result<QuarticForm> {
    let mut p = Parser { src: text, pos: 0 };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let mut sign = 1;
        match p.peek() {
            None if first => return p.err("empty expression"),
            None => break,
            Some('+') => {
                p.bump();
            }
            Some('-') => {
                p.bump();
                sign = -1;
            }
            Some(c) if !first => return p.err(format!("expected '+' or '-', found '{c}'")),
            _ => {}
        }
        let (c, e) = p.term()?;
        terms.push((c * sign, e));
        first = false;
    }
    let mut bad: Vec<String> = terms
        .iter()
        .filter(|(_, e)| e.iter().sum::<u32>() != 4)
        .map(|(_, e)| monomial_text(e))
        .collect();
    bad.dedup();
    if !bad.is_empty() {
        return Err(Error::NotQuartic { offending: bad.join(", ") });
    }
    QuarticForm::from_terms(terms.into_iter().map(|(c, e)| (e.map(|k| k as u8), c)))
}

/// Canonical text of a quartic, terms in descending lexicographic order.
pub fn format_quartic(f: &QuarticForm) -> String {
    let mut s = String::new();
    for (e, c) in f.terms() {
        let e = e.map(u32::from);
        push_term(&mut s, &BigRational::from_integer(c.clone()), &monomial_text(&e));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl serde::Serialize for QuarticForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_quartic(self))
    }
}

/// Parses exactly `n` comma-separated integers.
pub fn parse_int_list(text: &str, n: usize) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    let mut pos = 0;
    for part in text.split(',') {
        let t = part.trim();
        let v: i64 = t.parse().map_err(|_| Error::Parse { pos, msg: format!("invalid integer '{t}'") })?;
        out.push(v);
        pos += part.len() + 1;
    }
    if out.len() != n {
        return Err(Error::Parse { pos: 0, msg: format!("expected {n} integers, found {}", out.len()) });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let f = parse_quartic("x^4+y^4+z^4+w^4").unwrap();
        assert_eq!(f.terms().count(), 4);
        let g = parse_quartic("x^4 - x*y^3 - z^4 + z*w^3").unwrap();
        assert_eq!(format_quartic(&g), "x^4 - x*y^3 - z^4 + z*w^3");
        assert_eq!(parse_quartic("x^3+y^4"), Err(Error::NotQuartic { offending: "x^3".into() }));
    }

    #[test]
    fn implicit_products_and_like_terms() {
        let f = parse_quartic("2x^2 y z + 3 * x*x*y*z - w^4").unwrap();
        assert_eq!(format_quartic(&f), "5*x^2*y*z - w^4");
        assert_eq!(parse_quartic("x^4 - x^4"), Err(Error::ZeroForm));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_quartic("x^4 + + y^4") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_quartic("x^4 y^"), Err(Error::Parse { .. })));
        assert!(matches!(parse_quartic("x^4 + t^4"), Err(Error::Parse { .. })));
        assert!(matches!(parse_quartic(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_quartic("x^4 y^4)"), Err(Error::Parse { .. })));
    }
}
