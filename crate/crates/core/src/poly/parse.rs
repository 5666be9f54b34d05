//! Text grammar for polynomials:
//!
//! ```text
//! poly    := ['-'] term (('+'|'-') term)*
//! term    := coeff ['*' factors] | factors
//! factors := factor ('*' factor)*
//! factor  := var ['^' nat]
//! var     := 'x' nat | 'x(' nat ')'
//! coeff   := nat | nat '/' nat
//! ```
//!
//! Whitespace is ignored and `//` starts a comment running to the end of the line.

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::{Monomial, Polynomial, Ring, Scalar};

/// Parses `text` in `ring`. Coefficients with a denominator divisible by the
/// characteristic are rejected.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Polynomial> {
    let mut parser = Parser { src: text.as_bytes(), pos: 0, ring: *ring };
    let p = parser.poly()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: Ring,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        loop {
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
            if self.src[self.pos..].starts_with(b"//") {
                while self.pos < self.src.len() && self.src[self.pos] != b'\n' {
                    self.pos += 1;
                }
                continue;
            }
            break;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn nat(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a natural number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn small_nat(&mut self) -> Result<u32> {
        let at = self.pos;
        let n = self.nat()?;
        u32::try_from(n).map_err(|_| Error::Parse { position: at, message: "number too large".into() })
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        if self.peek().is_none() {
            return Err(self.error("empty polynomial"));
        }
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (m, c) = self.term()?;
            let c = if negative { -c } else { c };
            acc.add_term(m, &c);
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<(Monomial, Scalar)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.coeff()?;
                if self.eat(b'*') {
                    Ok((self.factors()?, coeff))
                } else {
                    Ok((Monomial::one(self.ring.num_vars()), coeff))
                }
            }
            Some(b'x') => Ok((self.factors()?, self.ring.one())),
            _ => Err(self.error("expected a coefficient or a variable")),
        }
    }

    fn coeff(&mut self) -> Result<Scalar> {
        let at = self.pos;
        let num = self.nat()?;
        let den = if self.eat(b'/') { self.nat()? } else { BigInt::from(1) };
        if den == BigInt::from(0) {
            return Err(Error::Parse { position: at, message: "zero denominator".into() });
        }
        Scalar::from_fraction(&num, &den, self.ring.characteristic())
    }

    fn factors(&mut self) -> Result<Monomial> {
        let mut exps = vec![0u32; self.ring.num_vars()];
        loop {
            let (var, e) = self.factor()?;
            exps[var] += e;
            if !self.eat(b'*') {
                break;
            }
        }
        Ok(Monomial::new(exps))
    }

    fn factor(&mut self) -> Result<(usize, u32)> {
        self.expect(b'x')?;
        let index = if self.eat(b'(') {
            let i = self.small_nat()?;
            self.expect(b')')?;
            i
        } else {
            self.small_nat()?
        };
        let n = self.ring.num_vars();
        if index == 0 || index as usize > n {
            return Err(Error::VariableOutOfRange { index: index as usize, num_vars: n });
        }
        let e = if self.eat(b'^') { self.small_nat()? } else { 1 };
        Ok((index as usize - 1, e))
    }
}
