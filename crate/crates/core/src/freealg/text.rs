use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{GaussianRational, Rational};

use super::poly::NcPoly;
use super::word::{Symbol, Word};

/// Error produced by [`parse_poly`], with a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {reason}")]
pub struct PolyParseError {
    pub pos: usize,
    pub reason: String,
}

/// Parses the polynomial text grammar:
///
/// ```text
/// poly   := ['-'] term (('+'|'-') term)*
/// term   := factor ('*' factor)*
/// factor := rational | 'i' | '(' poly-of-constants ')' | sym ['^' int]
/// sym    := 'e[' int ',' int ']' | 'x[' int ']'
/// ```
///
/// `e[1,1]^5 - e[1,1]` and `(1/2+1/2*i)*x[1]*x[2]` are both accepted.
pub fn parse_poly(input: &str) -> Result<NcPoly, PolyParseError> {
    let mut cur = Cursor {
        bytes: input.as_bytes(),
        pos: 0,
    };
    let poly = cur.parse_sum()?;
    cur.skip_ws();
    if cur.pos != cur.bytes.len() {
        return Err(cur.err("trailing input"));
    }
    Ok(poly)
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, reason: impl Into<String>) -> PolyParseError {
        PolyParseError {
            pos: self.pos,
            reason: reason.into(),
        }
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

    fn expect(&mut self, b: u8) -> Result<(), PolyParseError> {
        match self.peek() {
            Some(got) if got == b => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(format!("expected `{}`", b as char))),
        }
    }

    fn parse_sum(&mut self) -> Result<NcPoly, PolyParseError> {
        let mut out = NcPoly::zero();
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let term = self.parse_term()?;
            out += &(if negate { -&term } else { term });
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => return Ok(out),
            }
        }
    }

    fn parse_term(&mut self) -> Result<NcPoly, PolyParseError> {
        let mut coeff = GaussianRational::one();
        let mut word = Vec::new();
        loop {
            self.parse_factor(&mut coeff, &mut word)?;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(NcPoly::monomial(Word::from_symbols(word), coeff))
    }

    fn parse_factor(
        &mut self,
        coeff: &mut GaussianRational,
        word: &mut Vec<Symbol>,
    ) -> Result<(), PolyParseError> {
        match self.peek() {
            Some(b'i') => {
                self.pos += 1;
                *coeff = &*coeff * &GaussianRational::i();
                Ok(())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.parse_sum()?;
                self.expect(b')')?;
                let c = inner
                    .coeff(&Word::empty())
                    .cloned()
                    .unwrap_or_else(GaussianRational::zero);
                if inner.term_count() > usize::from(!c.is_zero()) {
                    return Err(self.err("parenthesized scalar must be a constant"));
                }
                *coeff = &*coeff * &c;
                Ok(())
            }
            Some(b'e') | Some(b'x') => {
                let sym = self.parse_symbol()?;
                let count = if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.parse_usize()?
                } else {
                    1
                };
                word.extend(std::iter::repeat_n(sym, count));
                Ok(())
            }
            Some(b) if b == b'-' || b.is_ascii_digit() => {
                let r = self.parse_rational()?;
                *coeff = &*coeff * &GaussianRational::from_rational(r);
                Ok(())
            }
            _ => Err(self.err("expected a scalar, `i`, or a symbol")),
        }
    }

    fn parse_symbol(&mut self) -> Result<Symbol, PolyParseError> {
        match self.bump() {
            Some(b'e') => {
                self.expect(b'[')?;
                let row = self.parse_usize()?;
                self.expect(b',')?;
                let col = self.parse_usize()?;
                self.expect(b']')?;
                if row == 0 || col == 0 || row > 255 || col > 255 {
                    return Err(self.err("matrix indices must lie in 1..=255"));
                }
                Ok(Symbol::matrix(row, col))
            }
            Some(b'x') => {
                self.expect(b'[')?;
                let id = self.parse_usize()?;
                self.expect(b']')?;
                if id == 0 || id > u16::MAX as usize {
                    return Err(self.err("generic index out of range"));
                }
                Ok(Symbol::generic(id))
            }
            _ => Err(self.err("expected a symbol")),
        }
    }

    fn parse_usize(&mut self) -> Result<usize, PolyParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|e| self.err(format!("integer overflow: {e}")))
    }

    fn parse_rational(&mut self) -> Result<Rational, PolyParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start || (self.pos == start + 1 && self.bytes[start] == b'-') {
            return Err(self.err("expected digits"));
        }
        let numer: BigInt = std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .unwrap();
        let denom = if self.bytes.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            let dstart = self.pos;
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if dstart == self.pos {
                return Err(self.err("expected digits after `/`"));
            }
            let d: BigInt = std::str::from_utf8(&self.bytes[dstart..self.pos])
                .unwrap()
                .parse()
                .unwrap();
            if d.is_zero() {
                return Err(self.err("zero denominator"));
            }
            d
        } else {
            BigInt::one()
        };
        Ok(Rational::new(numer, denom))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_power_sugar() {
        let p = parse_poly("e[1,1]^5 - e[1,1]").unwrap();
        assert_eq!(p.to_string(), "e[1,1]^5 - e[1,1]");
        assert_eq!(p.term_count(), 2);
        assert_eq!(
            p.leading_monomial().unwrap(),
            &Word::power(Symbol::matrix(1, 1), 5)
        );
    }

    #[test]
    fn parses_scalar_coefficients() {
        for s in [
            "1/2*e[1,1]*e[1,2] + e[2,1]",
            "-e[1,1] + 3*x[1]",
            "i*e[1,2]",
            "-1/2*i*e[1,1]^3",
            "(1/2+1/2*i)*e[1,1] - 2",
            "(-1/2-1/2*i)",
            "0",
        ] {
            let p = parse_poly(s).unwrap();
            let back = parse_poly(&p.to_string()).unwrap();
            assert_eq!(p, back, "canonical form of `{s}` is `{p}`");
        }
    }

    #[test]
    fn rejects_garbage() {
        for s in [
            "e[1]",
            "x[1,2]",
            "e[0,1]",
            "1/",
            "e[1,1]^",
            "(e[1,1])*e[1,2]",
            "+",
            "1 2",
        ] {
            assert!(parse_poly(s).is_err(), "accepted `{s}`");
        }
    }

    #[test]
    fn mixed_constant_round_trip() {
        let p = parse_poly("e[1,1] + 1/2+1/3*i").unwrap();
        // Splitting the complex constant across two addends parses to the
        // same polynomial as the parenthesized rendering.
        assert_eq!(p.to_string(), "e[1,1] + (1/2+1/3*i)");
        assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }

    fn arb_coeff() -> impl Strategy<Value = GaussianRational> {
        (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d)| {
            GaussianRational::new(
                Rational::new(BigInt::from(a), BigInt::from(b)),
                Rational::new(BigInt::from(c), BigInt::from(d)),
            )
        })
    }

    fn arb_poly() -> impl Strategy<Value = NcPoly> {
        let sym = prop_oneof![(1usize..=3, 1usize..=3).prop_map(|(i, j)| Symbol::matrix(i, j)),];
        let word = prop::collection::vec(sym, 0..5);
        prop::collection::vec((word, arb_coeff()), 0..6).prop_map(|terms| {
            let mut p = NcPoly::zero();
            for (w, c) in terms {
                p.add_term(Word::from_symbols(w), c);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(p in arb_poly()) {
            let s = p.to_string();
            let back = parse_poly(&s).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
