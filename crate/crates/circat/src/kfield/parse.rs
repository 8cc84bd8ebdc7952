//! Recursive-descent parser for the scalar text grammar:
//!
//! ```text
//! integer  := ["-"] digits
//! rational := integer | integer "/" positive-integer
//! monomial := rational | rational "*" "s" ["^" nat] | "s" ["^" nat]
//! poly     := monomial (("+" | "-") monomial)*
//! scalar   := poly | "(" poly ")" "/" "(" poly ")"
//! ```
//!
//! Whitespace is ignored everywhere. Errors carry the byte offset of the
//! offending token.

use num::{BigInt, Zero};

use super::{Polynomial, Rational, Scalar};
use crate::error::Error;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    S,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, Error> {
    Err(Error::Parse {
        pos,
        msg: msg.into(),
    })
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, Error> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                toks.push((Tok::Int(digits.parse().expect("digits")), start));
                continue;
            }
            b's' => Tok::S,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => return err(i, format!("unexpected character {:?}", text[i..].chars().next().unwrap())),
        };
        toks.push((tok, i));
        i += 1;
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    at: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |&(_, p)| p)
    }

    fn bump(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.at).map(|(t, _)| t);
        self.at += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), Error> {
        let pos = self.pos();
        match self.bump() {
            Some(t) if *t == want => Ok(()),
            _ => err(pos, format!("expected {what}")),
        }
    }

    fn parse_nat(&mut self) -> Result<usize, Error> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(n)) => usize::try_from(n).map_err(|_| Error::Parse {
                pos,
                msg: "exponent too large".into(),
            }),
            _ => err(pos, "expected an exponent"),
        }
    }

    fn parse_rational(&mut self) -> Result<Rational, Error> {
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let pos = self.pos();
        let mut n = match self.bump() {
            Some(Tok::Int(n)) => n.clone(),
            _ => return err(pos, "expected digits"),
        };
        if negative {
            n = -n;
        }
        if self.peek() == Some(&Tok::Slash) {
            self.bump();
            let dpos = self.pos();
            match self.bump() {
                Some(Tok::Int(d)) if !d.is_zero() => Ok(Rational::new(n, d.clone())),
                Some(Tok::Int(_)) => err(dpos, "denominator must be positive"),
                _ => return err(dpos, "expected a positive integer denominator"),
            }
        } else {
            Ok(Rational::from_integer(n))
        }
    }

    fn parse_monomial(&mut self) -> Result<Polynomial, Error> {
        match self.peek() {
            Some(Tok::S) => {
                self.bump();
                let power = if self.peek() == Some(&Tok::Caret) {
                    self.bump();
                    self.parse_nat()?
                } else {
                    1
                };
                Ok(Polynomial::monomial(Rational::from_integer(1.into()), power))
            }
            Some(Tok::Int(_)) | Some(Tok::Minus) => {
                let c = self.parse_rational()?;
                if self.peek() == Some(&Tok::Star) {
                    self.bump();
                    self.expect(Tok::S, "the variable s")?;
                    let power = if self.peek() == Some(&Tok::Caret) {
                        self.bump();
                        self.parse_nat()?
                    } else {
                        1
                    };
                    Ok(Polynomial::monomial(c, power))
                } else {
                    Ok(Polynomial::from_rational(c))
                }
            }
            _ => err(self.pos(), "expected a number or s"),
        }
    }

    fn parse_poly(&mut self) -> Result<Polynomial, Error> {
        let mut acc = self.parse_monomial()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.parse_monomial()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.parse_monomial()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn finish(&mut self) -> Result<(), Error> {
        if self.at == self.toks.len() {
            Ok(())
        } else {
            err(self.pos(), "trailing input")
        }
    }
}

pub(super) fn parse_scalar(text: &str) -> Result<Scalar, Error> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return err(0, "empty input");
    }
    let mut p = Parser {
        toks: &toks,
        at: 0,
        end: text.len(),
    };
    if p.peek() == Some(&Tok::LParen) {
        p.bump();
        let num = p.parse_poly()?;
        p.expect(Tok::RParen, "closing parenthesis")?;
        p.expect(Tok::Slash, "a / between numerator and denominator")?;
        let dpos = p.pos();
        p.expect(Tok::LParen, "opening parenthesis")?;
        let den = p.parse_poly()?;
        p.expect(Tok::RParen, "closing parenthesis")?;
        p.finish()?;
        if den.is_zero() {
            return err(dpos, "denominator is zero");
        }
        Scalar::new(num, den)
    } else {
        let poly = p.parse_poly()?;
        p.finish()?;
        Ok(Scalar::from_poly(poly))
    }
}
