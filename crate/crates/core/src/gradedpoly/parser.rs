//! Reader for the ASCII polynomial grammar
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := integer | var ('^' uint)?
//! var    := 'x' uint
//! ```
//!
//! Integers may appear anywhere in a product and are reduced into the field.
//! Error positions are 1-based character columns.

use num_bigint::BigInt;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::exactalg::Field;

pub fn parse_polynomial<F: Field>(text: &str, n: usize, field: F) -> Result<Polynomial<F>> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        nvars: n + 1,
        field,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.syntax(format!("unexpected '{}'", p.chars[p.pos])));
    }
    Ok(poly)
}

struct Parser<F: Field> {
    chars: Vec<char>,
    pos: usize,
    nvars: usize,
    field: F,
}

impl<F: Field> Parser<F> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn syntax(&self, msg: String) -> Error {
        Error::Syntax {
            pos: self.pos + 1,
            msg,
        }
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let f = self.field;
        let mut out = Polynomial::zero(f, self.nvars);
        let mut negative = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (c, m) = self.term()?;
            let c = if negative { f.neg(&c) } else { c };
            out.add_term(m, c);
            match self.peek() {
                Some('+') => negative = false,
                Some('-') => negative = true,
                _ => return Ok(out),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(F::Elem, Monomial)> {
        let f = self.field;
        let mut coeff = f.one();
        let mut mono = Monomial::one(self.nvars);
        loop {
            match self.peek() {
                Some(ch) if ch.is_ascii_digit() => {
                    let v = self.integer()?;
                    coeff = f.mul(&coeff, &f.from_bigint(&v));
                }
                Some('x') => {
                    let start = self.pos;
                    let m = self.variable_power()?;
                    mono = mono
                        .checked_mul(&m)
                        .ok_or(Error::ExponentOverflow { pos: start + 1 })?;
                }
                Some(ch) => return Err(self.syntax(format!("expected a factor, found '{ch}'"))),
                None => return Err(self.syntax("expected a factor, found end of input".into())),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                return Ok((coeff, mono));
            }
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn integer(&mut self) -> Result<BigInt> {
        let s = self
            .digits()
            .ok_or_else(|| self.syntax("expected an integer".into()))?;
        Ok(s.parse().expect("ascii digits"))
    }

    fn variable_power(&mut self) -> Result<Monomial> {
        let start = self.pos;
        self.pos += 1; // 'x'
        let idx = self
            .digits()
            .ok_or_else(|| self.syntax("expected a variable index after 'x'".into()))?;
        let index = idx.parse::<u64>().unwrap_or(u64::MAX);
        if index >= self.nvars as u64 {
            return Err(Error::UnknownVariable {
                pos: start + 1,
                index,
                max: self.nvars - 1,
            });
        }
        let mut exp: u16 = 1;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let epos = self.pos;
            let e = self
                .digits()
                .ok_or_else(|| self.syntax("expected an exponent after '^'".into()))?;
            exp = e
                .parse::<u16>()
                .map_err(|_| Error::ExponentOverflow { pos: epos + 1 })?;
        }
        let mut exps = vec![0u16; self.nvars];
        exps[index as usize] = exp;
        Ok(Monomial::new(&exps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{PrimeField, Rationals};

    #[test]
    fn parses_examples() {
        let f = PrimeField::default();
        let p = parse_polynomial("x0^2 - 3*x1*x2", 2, f).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.homogeneous_degree(), Some(2));
        assert!(parse_polynomial("0", 3, f).unwrap().is_zero());
        let mixed = parse_polynomial("x0 + x1^2", 2, f).unwrap();
        assert_eq!(mixed.homogeneous_degree(), None);
    }

    #[test]
    fn signs_and_coefficients() {
        let q = Rationals;
        let p = parse_polynomial(" - 2 * x1 + x0*x0 -x0^2", 1, q).unwrap();
        assert_eq!(p.to_string(), "-2*x1");
        let big = parse_polynomial("100000000000000000000*x0", 0, PrimeField::default()).unwrap();
        assert_eq!(big.num_terms(), 1);
    }

    #[test]
    fn errors_carry_positions() {
        let f = PrimeField::default();
        assert_eq!(
            parse_polynomial("x0 + x5", 2, f),
            Err(Error::UnknownVariable {
                pos: 6,
                index: 5,
                max: 2
            })
        );
        assert_eq!(
            parse_polynomial("x0^70000", 2, f),
            Err(Error::ExponentOverflow { pos: 4 })
        );
        assert!(matches!(
            parse_polynomial("x0 +", 2, f),
            Err(Error::Syntax { pos: 5, .. })
        ));
        assert!(matches!(
            parse_polynomial("x0 x1", 2, f),
            Err(Error::Syntax { pos: 4, .. })
        ));
        assert!(matches!(
            parse_polynomial("x^2", 2, f),
            Err(Error::Syntax { .. })
        ));
    }
}
