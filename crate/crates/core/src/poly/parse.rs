//! Text syntax for polynomials.
//!
//! Sums and differences of products; factors are numbers (`3`, `2/5`), variables
//! (`A[1,2,1]`, `s`, `x1`), parenthesised expressions, and `^n` powers.

use crate::error::AlgebraError;
use crate::poly::polynomial::Polynomial;
use crate::poly::ring::{RingRef, Var};
use crate::poly::scalar::Scalar;

struct Parser<'a, C> {
    src: &'a [u8],
    pos: usize,
    ring: &'a RingRef,
    _c: std::marker::PhantomData<C>,
}

pub fn parse_polynomial<C: Scalar>(ring: &RingRef, text: &str) -> Result<Polynomial<C>, AlgebraError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring, _c: std::marker::PhantomData };
    let r = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(r)
}

impl<'a, C: Scalar> Parser<'a, C> {
    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial<C>, AlgebraError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<C>, AlgebraError> {
        let mut acc = self.power()?;
        while let Some(c) = self.peek() {
            if c == b'*' {
                self.pos += 1;
                acc = acc * self.power()?;
            } else if c == b'(' || c.is_ascii_alphabetic() || c == b'_' {
                // juxtaposition
                acc = acc * self.power()?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial<C>, AlgebraError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.err("expected exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<C>, AlgebraError> {
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_digit() || self.src[self.pos] == b'.') {
                    self.pos += 1;
                }
                // a `/` directly followed by digits is part of the literal
                if self.pos + 1 < self.src.len() && self.src[self.pos] == b'/' && self.src[self.pos + 1].is_ascii_digit() {
                    self.pos += 1;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                }
                let lit = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let c = C::parse_literal(lit).ok_or_else(|| AlgebraError::Parse { pos: start, msg: format!("bad number `{}`", lit) })?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string();
                let var = if self.pos < self.src.len() && self.src[self.pos] == b'[' {
                    let close = self.src[self.pos..]
                        .iter()
                        .position(|&b| b == b']')
                        .ok_or_else(|| self.err("expected `]`"))?;
                    let inner = std::str::from_utf8(&self.src[self.pos + 1..self.pos + close]).unwrap();
                    self.pos += close + 1;
                    let idx: Vec<usize> = inner
                        .split(',')
                        .map(|x| x.trim().parse::<usize>())
                        .collect::<Result<_, _>>()
                        .map_err(|_| AlgebraError::Parse { pos: start, msg: format!("bad index `{}`", inner) })?;
                    if name != "A" || idx.len() != 3 {
                        return Err(AlgebraError::Parse { pos: start, msg: "expected A[i,j,k]".into() });
                    }
                    Var::slice(idx[0], idx[1], idx[2])
                } else {
                    Var::named(&name)
                };
                Polynomial::var_named(self.ring, &var)
            }
            Some(_) => Err(self.err("unexpected character")),
        }
    }
}
