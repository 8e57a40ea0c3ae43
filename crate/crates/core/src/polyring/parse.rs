//! Parser for the polynomial text syntax.
//!
//! Grammar (whitespace insensitive):
//!   poly   := ['-'] term (('+' | '-') term)*
//!   term   := factor ('*' factor)*
//!   factor := integer | var ['^' integer]
//!
//! Coefficients are reduced mod p; the result must be homogeneous.

use crate::error::{EngineError, Result};

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::Ring;

struct Cursor<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, bytes: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn err(&self, msg: impl Into<String>) -> EngineError {
        EngineError::Parse { line: 1, col: self.pos + 1, msg: msg.into() }
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        self.text[start..self.pos]
            .parse::<u64>()
            .map_err(|_| self.err("integer literal too large"))
    }

    fn identifier(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        // an identifier must start with a letter or underscore
        if start == self.pos || self.bytes[start].is_ascii_digit() {
            self.pos = start;
            return None;
        }
        Some(&self.text[start..self.pos])
    }
}

pub(super) fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    let mut cur = Cursor::new(text);
    let mut pairs: Vec<(u64, Monomial)> = Vec::new();
    let field = ring.field();

    let mut sign_negative = false;
    match cur.peek() {
        Some(b'-') => {
            cur.bump();
            sign_negative = true;
        }
        Some(b'+') => {
            cur.bump();
        }
        Some(_) => {}
        None => return Err(cur.err("empty polynomial")),
    }

    loop {
        let (coeff, mono) = parse_term(ring, &mut cur)?;
        let coeff = if sign_negative { field.neg(coeff) } else { coeff };
        pairs.push((coeff, mono));

        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.bump();
                sign_negative = false;
            }
            Some(b'-') => {
                cur.bump();
                sign_negative = true;
            }
            Some(c) => return Err(cur.err(format!("unexpected character `{}`", c as char))),
        }
    }

    Polynomial::from_terms(ring.clone(), pairs)
}

fn parse_term(ring: &Ring, cur: &mut Cursor) -> Result<(u64, Monomial)> {
    let field = ring.field();
    let mut coeff = 1u64;
    let mut exps = vec![0u32; ring.num_vars()];

    loop {
        match cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = cur.integer()?;
                coeff = field.mul(coeff, field.reduce(n));
            }
            _ => {
                let before = cur.pos;
                match cur.identifier() {
                    Some(name) => {
                        let idx = ring.var_index(name).ok_or_else(|| EngineError::Parse {
                            line: 1,
                            col: before + 1,
                            msg: format!("unknown variable `{name}`"),
                        })?;
                        let exp = if cur.peek() == Some(b'^') {
                            cur.bump();
                            let e = cur.integer()?;
                            u32::try_from(e).map_err(|_| cur.err("exponent too large"))?
                        } else {
                            1
                        };
                        exps[idx] = exps[idx]
                            .checked_add(exp)
                            .ok_or(EngineError::ExponentOverflow)?;
                    }
                    None => return Err(cur.err("expected a coefficient or variable")),
                }
            }
        }
        if cur.peek() == Some(b'*') {
            cur.bump();
            continue;
        }
        break;
    }

    Ok((coeff, Monomial::new(exps)?))
}
