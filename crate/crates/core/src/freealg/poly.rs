use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::Zero;

use crate::arith::GaussianRational;

use super::word::Word;

/// A noncommutative polynomial: a finitely supported map `Word → ℚ(i)`.
///
/// The support is kept in ascending deglex order and never stores a zero
/// coefficient, so the leading monomial is the last entry and rendering
/// and reduction scans are deterministic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, GaussianRational>,
}

impl NcPoly {
    pub fn zero() -> NcPoly {
        NcPoly::default()
    }

    pub fn one() -> NcPoly {
        NcPoly::monomial(Word::empty(), GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> NcPoly {
        NcPoly::monomial(Word::empty(), c)
    }

    pub fn monomial(word: Word, coeff: GaussianRational) -> NcPoly {
        let mut p = NcPoly::zero();
        p.add_term(word, coeff);
        p
    }

    pub fn word(word: Word) -> NcPoly {
        NcPoly::monomial(word, GaussianRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterates terms in ascending deglex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &GaussianRational)> {
        self.terms.iter()
    }

    /// Iterates terms in descending deglex order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Word, &GaussianRational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, word: &Word) -> Option<&GaussianRational> {
        self.terms.get(word)
    }

    /// The deglex-greatest term of a nonzero polynomial.
    pub fn leading_term(&self) -> Option<(&Word, &GaussianRational)> {
        self.terms.last_key_value()
    }

    pub fn leading_monomial(&self) -> Option<&Word> {
        self.terms.last_key_value().map(|(w, _)| w)
    }

    /// Degree of the leading monomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.leading_monomial().map(Word::degree)
    }

    /// Adds `coeff · word`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, word: Word, coeff: GaussianRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scaled(&self, c: &GaussianRational) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    /// Divides by the leading coefficient.  `None` for the zero polynomial.
    pub fn monic(&self) -> Option<NcPoly> {
        let (_, c) = self.leading_term()?;
        if c.is_one() {
            return Some(self.clone());
        }
        let inv = c
            .inv()
            .expect("leading coefficient of stored term is nonzero");
        Some(self.scaled(&inv))
    }

    /// Subtracts `c · left · g · right` in place.  This is the elementary
    /// rewriting step; reduction certificates replay sequences of it.
    pub fn sub_scaled_conjugate(
        &mut self,
        c: &GaussianRational,
        left: &Word,
        g: &NcPoly,
        right: &Word,
    ) {
        for (w, a) in g.terms() {
            let shifted = left.concat(w).concat(right);
            self.add_term(shifted, -&(c * a));
        }
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    /// Bilinear extension of word concatenation.
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (u, a) in self.terms() {
            for (v, b) in rhs.terms() {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for NcPoly {
            type Output = NcPoly;
            fn $method(self, rhs: NcPoly) -> NcPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl Neg for NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        -&self
    }
}

impl AddAssign<&NcPoly> for NcPoly {
    fn add_assign(&mut self, rhs: &NcPoly) {
        for (w, c) in rhs.terms() {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl fmt::Display for NcPoly {
    /// Canonical form: terms in descending deglex, `1*` suppressed, sign
    /// pulled into the `+`/`-` separators, complex coefficients with both
    /// parts nonzero parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (word, coeff)) in self.terms_desc().enumerate() {
            let mixed = !coeff.re().is_zero() && !coeff.im().is_zero();
            let (sep, magnitude) = if mixed {
                ("+", coeff.clone())
            } else if coeff.is_display_negative() {
                ("-", -coeff)
            } else {
                ("+", coeff.clone())
            };
            if k == 0 {
                if sep == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sep} ")?;
            }
            if word.is_empty() {
                if mixed {
                    write!(f, "({magnitude})")?;
                } else {
                    write!(f, "{magnitude}")?;
                }
            } else if mixed {
                write!(f, "({magnitude})*{word}")?;
            } else if magnitude.is_one() {
                write!(f, "{word}")?;
            } else if magnitude == GaussianRational::i() {
                write!(f, "i*{word}")?;
            } else {
                write!(f, "{magnitude}*{word}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Symbol;

    fn e(i: usize, j: usize) -> Symbol {
        Symbol::matrix(i, j)
    }

    fn w(syms: &[Symbol]) -> Word {
        syms.iter().copied().collect()
    }

    #[test]
    fn unit_monomial_is_identity() {
        let f =
            NcPoly::word(w(&[e(1, 2), e(2, 1)])) + NcPoly::constant(GaussianRational::ratio(-1, 2));
        assert_eq!(&NcPoly::one() * &f, f);
        assert_eq!(&f * &NcPoly::one(), f);
    }

    #[test]
    fn concatenation_product() {
        let f = NcPoly::word(Word::single(e(1, 2)));
        let g = NcPoly::word(Word::single(e(2, 1)));
        assert_eq!(&f * &g, NcPoly::word(w(&[e(1, 2), e(2, 1)])));
    }

    #[test]
    fn four_term_expansion_without_cancellation() {
        let f = NcPoly::word(Word::single(e(1, 1))) + NcPoly::word(Word::single(e(1, 2)));
        let g = NcPoly::word(Word::single(e(1, 1))) - NcPoly::word(Word::single(e(1, 2)));
        let p = &f * &g;
        assert_eq!(p.term_count(), 4);
        assert_eq!(
            p.coeff(&w(&[e(1, 1), e(1, 2)])),
            Some(&GaussianRational::integer(-1))
        );
        assert_eq!(
            p.coeff(&w(&[e(1, 2), e(1, 1)])),
            Some(&GaussianRational::one())
        );
    }

    #[test]
    fn leading_monomial_examples() {
        // Two degree-3 words: the one starting with the larger symbol wins.
        let mut p = NcPoly::word(w(&[e(1, 2), e(2, 3), e(3, 1)]));
        p.add_term(
            w(&[e(3, 1), e(2, 3), e(1, 2)]),
            GaussianRational::integer(-1),
        );
        p.add_term(Word::single(e(1, 1)), GaussianRational::integer(-1));
        let (lm, c) = p.leading_term().unwrap();
        assert_eq!(lm, &w(&[e(3, 1), e(2, 3), e(1, 2)]));
        assert_eq!(c, &GaussianRational::integer(-1));

        let m = NcPoly::monomial(w(&[e(2, 2)]), GaussianRational::ratio(3, 4));
        assert_eq!(
            m.leading_term().map(|(w, c)| (w.clone(), c.clone())),
            Some((w(&[e(2, 2)]), GaussianRational::ratio(3, 4)))
        );

        let c = NcPoly::constant(GaussianRational::i());
        assert_eq!(c.leading_monomial(), Some(&Word::empty()));
        assert!(NcPoly::zero().leading_term().is_none());
    }

    #[test]
    fn zero_terms_are_dropped() {
        let f = NcPoly::word(Word::single(e(1, 1)));
        let g = &f - &f;
        assert!(g.is_zero());
        assert_eq!(g.term_count(), 0);
    }
}
