//! Parser for the text form printed by `Display`.

use num_bigint::BigInt;

use crate::{CoeffError, Laurent, Rat};

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, what: &str) -> Result<T, CoeffError> {
        Err(CoeffError::Parse(format!("{what} at byte {}", self.pos)))
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn exponent(&mut self) -> Result<i32, CoeffError> {
        let neg = self.eat(b'-');
        match self.digits().and_then(|d| d.parse::<i32>().ok()) {
            Some(e) => Ok(if neg { -e } else { e }),
            None => self.err("expected exponent"),
        }
    }

    fn term(&mut self) -> Result<(i32, BigInt), CoeffError> {
        let coeff = self.digits().map(|d| d.parse::<BigInt>().unwrap());
        if coeff.is_some() {
            self.eat(b'*');
        }
        if self.eat(b'v') {
            let e = if self.eat(b'^') { self.exponent()? } else { 1 };
            Ok((e, coeff.unwrap_or_else(|| 1.into())))
        } else {
            match coeff {
                Some(c) => Ok((0, c)),
                None => self.err("expected term"),
            }
        }
    }

    fn laurent(&mut self) -> Result<Laurent, CoeffError> {
        let mut terms = Vec::new();
        let mut neg = self.eat(b'-');
        loop {
            let (e, c) = self.term()?;
            terms.push((e, if neg { -c } else { c }));
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                break;
            }
        }
        Ok(Laurent::from_terms(terms))
    }

    fn group(&mut self) -> Result<Laurent, CoeffError> {
        if self.eat(b'(') {
            let l = self.laurent()?;
            if !self.eat(b')') {
                return self.err("expected ')'");
            }
            Ok(l)
        } else {
            self.laurent()
        }
    }
}

/// Parses `v^3 - 2 + v^-1` or `(num)/(den)`.
pub fn parse_rat(s: &str) -> Result<Rat, CoeffError> {
    let mut c = Cursor { s: s.as_bytes(), pos: 0 };
    let num = c.group()?;
    let den = if c.eat(b'/') { c.group()? } else { Laurent::one() };
    if c.peek().is_some() {
        return c.err("trailing input");
    }
    Rat::new(num, den)
}
