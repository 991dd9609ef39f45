//! Text syntax for polynomials: `x1 - 2*x2 + 3/4*x1^2*x3`, `*` optional.

use num_bigint::BigInt;

use crate::poly::{Monomial, Polynomial};
use crate::rational::Rational;
use crate::Error;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<Tok>, String> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Tok::Num(s.parse().map_err(|_| format!("bad number `{s}`"))?));
            }
            'x' | 'X' => {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err("variable `x` must be followed by an index".into());
                }
                let s: String = chars[start..i].iter().collect();
                let idx: usize = s.parse().map_err(|_| format!("bad variable index `{s}`"))?;
                out.push(Tok::Var(idx));
            }
            other => return Err(format!("unexpected character `{other}`")),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    nvars: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn small_int(&mut self) -> Result<u32, String> {
        match self.next() {
            Some(Tok::Num(n)) => u32::try_from(n).map_err(|_| "exponent too large".to_string()),
            _ => Err("expected an exponent".into()),
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational), String> {
        let mut coeff = Rational::one();
        let mut mono = Monomial::one(self.nvars);
        let mut seen = false;
        loop {
            match self.peek() {
                Some(Tok::Num(_)) => {
                    let Some(Tok::Num(n)) = self.next() else { unreachable!() };
                    let mut v = Rational::from_bigint(n);
                    if self.peek() == Some(&Tok::Slash) {
                        self.next();
                        match self.next() {
                            Some(Tok::Num(d)) if d != BigInt::from(0) => {
                                v = &v / &Rational::from_bigint(d);
                            }
                            _ => return Err("expected a nonzero denominator".into()),
                        }
                    }
                    coeff = &coeff * &v;
                }
                Some(Tok::Var(_)) => {
                    let Some(Tok::Var(idx)) = self.next() else { unreachable!() };
                    if idx == 0 || idx > self.nvars {
                        return Err(format!("variable x{idx} outside x1..x{}", self.nvars));
                    }
                    let mut e = 1;
                    if self.peek() == Some(&Tok::Caret) {
                        self.next();
                        e = self.small_int()?;
                    }
                    let mut exps = vec![0u32; self.nvars];
                    exps[idx - 1] = e;
                    mono = mono.mul(&Monomial::from_exponents(&exps));
                }
                _ => {
                    if !seen {
                        return Err("expected a term".into());
                    }
                    break;
                }
            }
            seen = true;
            if self.peek() == Some(&Tok::Star) {
                self.next();
                if !matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Var(_))) {
                    return Err("dangling `*`".into());
                }
            }
        }
        Ok((mono, coeff))
    }

    fn polynomial(&mut self) -> Result<Polynomial, String> {
        let mut terms = Vec::new();
        let mut sign = Rational::one();
        let mut expect_term = true;
        if self.peek().is_none() {
            return Err("empty expression".into());
        }
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus if expect_term || !terms.is_empty() => {
                    self.next();
                    expect_term = true;
                }
                Tok::Minus => {
                    self.next();
                    sign = -sign;
                    expect_term = true;
                }
                _ => {
                    if !expect_term {
                        return Err("missing operator between terms".into());
                    }
                    let (m, c) = self.term()?;
                    terms.push((m, &c * &sign));
                    sign = Rational::one();
                    expect_term = false;
                }
            }
        }
        if expect_term {
            return Err("expression ends with an operator".into());
        }
        Ok(Polynomial::from_terms(self.nvars, terms))
    }
}

pub fn parse_polynomial(text: &str, nvars: usize) -> Result<Polynomial, Error> {
    let toks = tokenize(text).map_err(Error::PolynomialSyntax)?;
    let mut p = Parser { toks, pos: 0, nvars };
    p.polynomial().map_err(Error::PolynomialSyntax)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_optional_star_and_rationals() {
        let a = parse_polynomial("2x1 - 1/2 x2^2 + x3", 3).unwrap();
        let b = parse_polynomial("2*x1 - 1/2*x2^2 + x3", 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "-1/2*x2^2 + 2*x1 + x3");
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "x", "x1 +", "x4", "x1 x2 +* 3", "1/0*x1", "y1", "x1 x2 x3 ^"] {
            assert!(parse_polynomial(bad, 3).is_err(), "{bad} should fail");
        }
        assert!(parse_polynomial("x1 x2", 3).is_ok());
    }
}
