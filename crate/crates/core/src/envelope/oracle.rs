//! Closed-form products of basis monomials, written as explicit
//! Kronecker-delta expressions.  This is a standalone code path with no
//! reduction machinery behind it; comparing it entry-by-entry against
//! the Gröbner-quotient table is the strongest cross-check in the crate.

use rayon::prelude::*;

use crate::arith::GaussianRational;
use crate::freealg::{NcPoly, Symbol, Word};

use super::{EnvelopeAlgebra, EnvelopeError};

/// Shape of a basis monomial of the envelope.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    /// 1
    Unit,
    /// e_ij
    Gen(usize, usize),
    /// e_i1 e_1j (e_11² at i = j = 1)
    RowCol(usize, usize),
    /// e_1i e_j1 with (i,j) ≠ (1,1)
    ColRow(usize, usize),
    /// e_1i e_11 e_j1 with j ≠ 1
    Bridge(usize, usize),
    /// e_11² e_1k (e_11³ at k = 1)
    SquareRow(usize),
    /// e_11⁴
    Quartic,
}

fn classify(word: &Word) -> Option<Shape> {
    let ij = |s: Symbol| match s {
        Symbol::Matrix { row, col } => Some((row as usize, col as usize)),
        Symbol::Generic(_) => None,
    };
    let syms = word.symbols();
    match syms.len() {
        0 => Some(Shape::Unit),
        1 => {
            let (i, j) = ij(syms[0])?;
            Some(Shape::Gen(i, j))
        }
        2 => {
            let (a, b) = ij(syms[0])?;
            let (c, d) = ij(syms[1])?;
            if b == 1 && c == 1 {
                Some(Shape::RowCol(a, d))
            } else if a == 1 && d == 1 && (b, c) != (1, 1) {
                Some(Shape::ColRow(b, c))
            } else {
                None
            }
        }
        3 => {
            let (a, b) = ij(syms[0])?;
            let (c, d) = ij(syms[1])?;
            let (e, f) = ij(syms[2])?;
            if (c, d) != (1, 1) {
                return None;
            }
            if a == 1 && f == 1 && e != 1 {
                Some(Shape::Bridge(b, e))
            } else if (a, b) == (1, 1) && e == 1 {
                Some(Shape::SquareRow(f))
            } else {
                None
            }
        }
        4 => {
            for &s in syms {
                if ij(s)? != (1, 1) {
                    return None;
                }
            }
            Some(Shape::Quartic)
        }
        _ => None,
    }
}

fn d(a: usize, b: usize) -> i64 {
    (a == b) as i64
}

fn nd(a: usize, b: usize) -> i64 {
    (a != b) as i64
}

fn ri(k: i64) -> GaussianRational {
    GaussianRational::integer(k)
}

fn rh(k: i64) -> GaussianRational {
    GaussianRational::ratio(k, 2)
}

fn sym(i: usize, j: usize) -> Symbol {
    Symbol::matrix(i, j)
}

fn w_gen(i: usize, j: usize) -> Word {
    Word::single(sym(i, j))
}

fn w_rowcol(i: usize, j: usize) -> Word {
    Word::from_symbols(vec![sym(i, 1), sym(1, j)])
}

fn w_colrow(i: usize, j: usize) -> Word {
    Word::from_symbols(vec![sym(1, i), sym(j, 1)])
}

fn w_bridge(i: usize, j: usize) -> Word {
    Word::from_symbols(vec![sym(1, i), sym(1, 1), sym(j, 1)])
}

fn w_sqrow(k: usize) -> Word {
    Word::from_symbols(vec![sym(1, 1), sym(1, 1), sym(1, k)])
}

fn w_e11(count: usize) -> Word {
    Word::power(sym(1, 1), count)
}

struct Out(NcPoly);

impl Out {
    fn new() -> Self {
        Out(NcPoly::zero())
    }

    fn add(&mut self, c: GaussianRational, w: Word) {
        self.0.add_term(w, c);
    }
}

/// The product of two basis monomials of the envelope as its closed-form
/// expansion over basis monomials.  Fails with
/// [`EnvelopeError::UncoveredOracleCase`] on a pair no formula covers;
/// for genuine basis words of the same envelope that never happens, and
/// a firing of this error is itself a completeness failure.
pub fn oracle_product(n: usize, u: &Word, v: &Word) -> Result<NcPoly, EnvelopeError> {
    let uncovered = || EnvelopeError::UncoveredOracleCase {
        u: u.clone(),
        v: v.clone(),
    };
    let su = classify(u).ok_or_else(uncovered)?;
    let sv = classify(v).ok_or_else(uncovered)?;
    use Shape::*;
    let out = match (su, sv) {
        (Unit, _) => NcPoly::word(v.clone()),
        (_, Unit) => NcPoly::word(u.clone()),
        (Gen(i, j), Gen(k, l)) => gen_gen(i, j, k, l),
        (Gen(i, j), RowCol(k, l)) => gen_rowcol(i, j, k, l),
        (Gen(i, j), ColRow(k, l)) => gen_colrow(i, j, k, l),
        (Gen(i, j), Bridge(k, l)) => gen_bridge(i, j, k, l),
        (Gen(i, j), SquareRow(k)) => gen_sqrow(i, j, k),
        (Gen(i, j), Quartic) => gen_quartic(i, j),
        (RowCol(a, b), Gen(c, e)) => rowcol_gen(a, b, c, e),
        (RowCol(i, j), RowCol(k, l)) => rowcol_rowcol(i, j, k, l),
        (RowCol(i, j), ColRow(k, l)) => rowcol_colrow(i, j, k, l),
        (RowCol(i, j), Bridge(k, l)) => rowcol_bridge(i, j, k, l),
        (RowCol(i, j), SquareRow(k)) => rowcol_sqrow(i, j, k),
        (RowCol(i, j), Quartic) => rowcol_quartic(i, j),
        (ColRow(a, b), Gen(c, e)) => colrow_gen(a, b, c, e),
        (ColRow(i, j), RowCol(k, l)) => colrow_rowcol(i, j, k, l),
        (ColRow(i, j), ColRow(k, l)) => colrow_colrow(i, j, k, l),
        (ColRow(i, j), Bridge(k, l)) => colrow_bridge(i, j, k, l),
        (ColRow(i, j), SquareRow(k)) => colrow_sqrow(i, j, k),
        (ColRow(i, j), Quartic) => colrow_quartic(i, j),
        (Bridge(k, l), Gen(i, j)) => bridge_gen(k, l, i, j),
        (Bridge(_, _), RowCol(_, _)) => NcPoly::zero(),
        (Bridge(k, l), ColRow(i, j)) => bridge_colrow(k, l, i, j),
        (Bridge(i, j), Bridge(k, l)) => bridge_bridge(i, j, k, l),
        (Bridge(_, _), SquareRow(_)) => NcPoly::zero(),
        (Bridge(_, _), Quartic) => NcPoly::zero(),
        (SquareRow(k), Gen(i, j)) => sqrow_gen(k, i, j),
        (SquareRow(k), RowCol(i, j)) => sqrow_rowcol(k, i, j),
        (SquareRow(k), ColRow(i, j)) => sqrow_colrow(k, i, j),
        (SquareRow(k), Bridge(j, l)) => sqrow_bridge(k, j, l),
        (SquareRow(k), SquareRow(j)) => sqrow_sqrow(k, j),
        (SquareRow(j), Quartic) => sqrow_quartic(j),
        (Quartic, Gen(i, j)) => quartic_gen(i, j),
        (Quartic, RowCol(i, j)) => quartic_rowcol(i, j),
        (Quartic, ColRow(i, j)) => quartic_colrow(i, j),
        (Quartic, Bridge(i, j)) => quartic_bridge(i, j),
        (Quartic, SquareRow(j)) => quartic_sqrow(j),
        (Quartic, Quartic) => NcPoly::word(w_e11(4)),
    };
    let _ = n;
    Ok(out)
}

/// e_ij · e_kl
fn gen_gen(i: usize, j: usize, k: usize, l: usize) -> NcPoly {
    let mut o = Out::new();
    o.add(
        ri(d(j, k) * d(i, l) * (d(i, 1) + nd(i, 1) * nd(j, 1))),
        w_colrow(j, j),
    );
    o.add(
        ri(d(j, k) * d(i, l) * (d(j, 1) * nd(i, 1) + nd(i, 1) * nd(j, 1))),
        w_rowcol(i, i),
    );
    o.add(
        ri(-(d(j, k) * d(i, l) * nd(i, 1) * nd(j, 1))),
        w_rowcol(1, 1),
    );
    o.add(ri(d(j, k) * nd(i, l)), w_rowcol(i, l));
    o.add(ri(nd(j, k) * d(i, l)), w_colrow(j, k));
    o.0
}

/// e_ij · e_k1 e_1l
fn gen_rowcol(i: usize, j: usize, k: usize, l: usize) -> NcPoly {
    let mut o = Out::new();
    let i1 = d(i, 1);
    o.add(
        rh(i1 * (d(j, k) * d(l, 1) * (2 * d(l, j) + nd(l, j)) + nd(j, k) * d(k, l) * d(j, 1))),
        w_e11(3),
    );
    o.add(ri(i1 * nd(j, k) * d(k, l) * nd(j, 1)), w_sqrow(j));
    o.add(
        ri(i1 * d(j, k) * (2 * d(l, j) * nd(l, 1) + nd(l, j) * (d(j, 1) + nd(j, 1) * nd(l, 1)))),
        w_sqrow(l),
    );
    o.add(
        rh(i1 * (d(l, 1) * d(j, k) * nd(l, j) - nd(j, k) * d(k, l) * d(j, 1))),
        w_gen(1, 1),
    );
    o.add(
        ri(-i1 * (d(j, k) * d(l, j) * nd(l, 1) + nd(j, k) * d(k, l) * nd(j, 1))),
        w_gen(1, j),
    );
    o.add(ri(nd(i, 1) * d(j, k)), w_bridge(l, i));
    o.add(ri(nd(i, 1) * d(j, k)), w_gen(i, l));
    o.0
}

/// e_l1 e_1k · e_ji  (the mirror of `gen_rowcol` under the transpose
/// anti-automorphism, re-reduced to basis monomials)
fn rowcol_gen(l: usize, k: usize, j: usize, i: usize) -> NcPoly {
    let mut o = Out::new();
    let i1 = d(i, 1);
    o.add(
        rh(i1 * (d(j, k) * d(l, 1) * (2 * d(l, j) + nd(l, j)) + nd(j, k) * d(k, l) * d(j, 1))),
        w_e11(3),
    );
    o.add(ri(i1 * nd(j, k) * d(k, l) * nd(j, 1)), w_bridge(1, j));
    let mid = i1 * d(j, k) * (2 * d(l, j) * nd(l, 1) + nd(l, j) * (d(j, 1) + nd(j, 1) * nd(l, 1)));
    o.add(ri(mid), w_bridge(1, l));
    o.add(ri(mid), w_gen(l, 1));
    o.add(
        rh(i1 * (d(l, 1) * d(j, k) * nd(l, j) - nd(j, k) * d(k, l) * d(j, 1))),
        w_gen(1, 1),
    );
    o.add(ri(-i1 * d(j, k) * d(l, j) * nd(l, 1)), w_gen(j, 1));
    o.add(ri(nd(i, 1) * d(j, k) * d(l, 1)), w_sqrow(i));
    o.add(ri(nd(i, 1) * d(j, k) * nd(l, 1)), w_bridge(i, l));
    o.add(ri(nd(i, 1) * d(j, k) * nd(l, 1)), w_gen(l, i));
    o.0
}

/// e_ij · e_1k e_l1, (k,l) ≠ (1,1)
fn gen_colrow(i: usize, j: usize, k: usize, l: usize) -> NcPoly {
    let mut o = Out::new();
    let j1 = d(j, 1);
    o.add(
        rh(j1 * (d(i, k) * d(l, 1) * nd(i, 1) + nd(i, k) * nd(l, 1) * d(k, l) * d(i, 1))),
        w_e11(3),
    );
    o.add(
        ri(j1 * nd(i, k) * d(k, l) * nd(i, 1) * nd(l, 1)),
        w_bridge(1, i),
    );
    o.add(
        ri(j1 * d(i, k) * (d(i, 1) + nd(i, 1) * nd(l, 1) * (2 * d(i, l) + nd(i, l)))),
        w_bridge(1, l),
    );
    o.add(
        rh(j1 * (nd(i, k) * nd(l, 1) * d(k, l) * d(i, 1) - d(i, k) * d(l, 1) * nd(i, 1))),
        w_gen(1, 1),
    );
    o.add(
        ri(j1 * nd(i, 1) * nd(l, 1) * (d(i, k) * d(i, l) + nd(i, k) * d(k, l))),
        w_gen(i, 1),
    );
    o.add(ri(nd(j, 1) * d(i, k) * d(l, 1)), w_sqrow(j));
    o.add(ri(-nd(j, 1) * d(i, k) * d(l, 1)), w_gen(1, j));
    o.add(ri(nd(j, 1) * d(i, k) * nd(l, 1)), w_bridge(j, l));
    o.0
}

/// e_1l e_k1 · e_ji  (the mirror of `gen_colrow`)
fn colrow_gen(l: usize, k: usize, j: usize, i: usize) -> NcPoly {
    let mut o = Out::new();
    let j1 = d(j, 1);
    o.add(
        rh(j1 * (d(i, k) * d(l, 1) * nd(i, 1) + nd(i, k) * nd(l, 1) * d(k, l) * d(i, 1))),
        w_e11(3),
    );
    o.add(
        ri(j1 * nd(i, k) * d(k, l) * nd(i, 1) * nd(l, 1)),
        w_sqrow(i),
    );
    let mid = j1 * d(i, k) * (d(i, 1) + nd(i, 1) * nd(l, 1) * (2 * d(i, l) + nd(i, l)));
    o.add(ri(mid), w_sqrow(l));
    o.add(ri(-mid), w_gen(1, l));
    o.add(
        rh(j1 * (nd(i, k) * nd(l, 1) * d(k, l) * d(i, 1) - d(i, k) * d(l, 1) * nd(i, 1))),
        w_gen(1, 1),
    );
    o.add(
        ri(j1 * nd(i, 1) * nd(l, 1) * d(i, k) * d(i, l)),
        w_gen(1, i),
    );
    o.add(ri(nd(j, 1) * d(i, k) * d(l, 1)), w_bridge(1, j));
    o.add(ri(nd(j, 1) * d(i, k) * nd(l, 1)), w_bridge(l, j));
    o.0
}

/// e_ij · e_1k e_11 e_l1, l ≠ 1
fn gen_bridge(i: usize, j: usize, k: usize, l: usize) -> NcPoly {
    let mut o = Out::new();
    o.add(ri(-d(i, k)), w_colrow(j, l));
    o.add(rh(d(i, k) * nd(j, 1) * d(j, l)), w_e11(4));
    o.add(rh(d(i, k) * nd(j, 1) * d(j, l)), w_rowcol(1, 1));
    o.0
}

/// e_ij · e_11² e_1k
fn gen_sqrow(i: usize, j: usize, k: usize) -> NcPoly {
    let mut o = Out::new();
    let j1 = d(j, 1);
    o.add(ri(j1 * d(i, 1) * d(k, 1)), w_e11(4));
    o.add(ri(j1 * d(i, 1) * nd(k, 1)), w_rowcol(1, k));
    o.add(rh(j1 * nd(i, 1) * d(i, k)), w_e11(4));
    o.add(rh(-j1 * nd(i, 1) * d(i, k)), w_rowcol(1, 1));
    o.add(ri(j1 * nd(i, 1)), w_rowcol(i, k));
    o.add(ri(-nd(j, 1) * d(i, 1) * d(k, 1)), w_colrow(j, 1));
    o.0
}

/// e_ij · e_11⁴
fn gen_quartic(i: usize, j: usize) -> NcPoly {
    let mut o = Out::new();
    o.add(ri(d(j, 1) * d(i, 1)), w_gen(1, 1));
    o.add(ri(d(j, 1) * nd(i, 1)), w_bridge(1, i));
    o.add(ri(d(j, 1) * nd(i, 1)), w_gen(i, 1));
    o.add(ri(-nd(j, 1) * d(i, 1)), w_sqrow(j));
    o.add(ri(nd(j, 1) * d(i, 1)), w_gen(1, j));
    o.0
}

/// e_i1 e_1j · e_k1 e_1l
fn rowcol_rowcol(i: usize, j: usize, k: usize, l: usize) -> NcPoly {
    let mut o = Out::new();
    o.add(ri(d(j, k) * d(l, 1) * d(l, j) * d(i, 1)), w_e11(4));
    let c1 = d(j, k) * d(l, 1) * nd(l, j) * d(i, 1);
    o.add(rh(c1), w_e11(4));
    o.add(rh(c1), w_rowcol(1, 1));
    let c2 = d(j, k)
        * nd(i, 1)
        * d(i, l)
        * (2 * d(l, j) * nd(l, 1) + nd(l, j) * (d(j, 1) + nd(j, 1) * nd(l, 1)))
        + nd(j, k) * d(k, l) * (nd(j, 1) * nd(i, 1) * d(i, j) + d(j, 1) * d(i, 1));
    o.add(rh(c2), w_e11(4));
    o.add(rh(-c2), w_rowcol(1, 1));
    o.add(
        ri(d(j, k)
            * (d(l, 1) * nd(i, 1)
                + d(l, j) * nd(l, 1)
                + nd(l, j) * (d(j, 1) + nd(j, 1) * nd(l, 1)))),
        w_rowcol(i, l),
    );
    o.0
}

/// e_i1 e_1j · e_1k e_l1, (k,l) ≠ (1,1)
fn rowcol_colrow(i: usize, j: usize, k: usize, l: usize) -> NcPoly {
    let mut o = Out::new();
    let c1 = d(j, 1) * nd(k, 1) * d(k, l);
    o.add(rh(c1 * d(i, 1)), w_e11(4));
    o.add(rh(c1 * d(i, 1)), w_rowcol(1, 1));
    o.add(ri(c1 * nd(i, 1)), w_rowcol(i, 1));
    o.add(
        ri(-d(k, 1) * (d(j, 1) * d(i, 1) + nd(j, 1) * nd(l, 1) * d(i, j))),
        w_colrow(1, l),
    );
    o.0
}

/// e_i1 e_1j · e_1k e_11 e_l1, l ≠ 1
fn rowcol_bridge(i: usize, j: usize, k: usize, l: usize) -> NcPoly {
    let mut o = Out::new();
    o.add(
        ri(-d(k, 1) * (d(i, 1) * d(j, 1) + nd(j, 1) * d(i, j))),
        w_bridge(1, l),
    );
    o.0
}

/// e_i1 e_1j · e_11² e_1k
fn rowcol_sqrow(i: usize, j: usize, k: usize) -> NcPoly {
    let mut o = Out::new();
    let j1 = d(j, 1);
    o.add(ri(j1 * d(k, 1) * d(i, 1)), w_gen(1, 1));
    o.add(ri(j1 * d(k, 1) * nd(i, 1)), w_bridge(1, i));
    o.add(ri(j1 * d(k, 1) * nd(i, 1)), w_gen(i, 1));
    o.add(ri(j1 * nd(k, 1) * d(i, 1)), w_sqrow(k));
    o.add(ri(j1 * nd(k, 1) * nd(i, 1)), w_bridge(k, i));
    o.add(ri(j1 * nd(k, 1) * nd(i, 1)), w_gen(i, k));
    let c = nd(j, 1) * d(k, 1) * d(i, j);
    o.add(rh(-c), w_e11(3));
    o.add(rh(c), w_gen(1, 1));
    o.0
}

/// e_i1 e_1j · e_11⁴
fn rowcol_quartic(i: usize, j: usize) -> NcPoly {
    let mut o = Out::new();
    o.add(ri(d(j, 1)), w_rowcol(i, 1));
    let c = nd(j, 1) * d(j, i);
    o.add(rh(c), w_rowcol(1, 1));
    o.add(rh(-c), w_e11(4));
    o.0
}

/// e_1i e_j1 · e_k1 e_1l  (the mirror of `rowcol_colrow`)
fn colrow_rowcol(i: usize, j: usize, k: usize, l: usize) -> NcPoly {
    let mut o = Out::new();
    let c1 = d(k, 1) * nd(j, 1) * d(i, j);
    o.add(rh(c1 * d(l, 1)), w_e11(4));
    o.add(rh(c1 * d(l, 1)), w_rowcol(1, 1));
    o.add(ri(c1 * nd(l, 1)), w_rowcol(1, l));
    o.add(
        ri(-d(j, 1) * (d(k, 1) * d(l, 1) + nd(k, 1) * nd(i, 1) * d(l, k))),
        w_colrow(i, 1),
    );
    o.0
}

/// e_1i e_j1 · e_1k e_l1, both (i,j) and (k,l) ≠ (1,1)
fn colrow_colrow(i: usize, j: usize, k: usize, l: usize) -> NcPoly {
    let mut o = Out::new();
    let c1 = d(i, 1) * d(j, k) * d(l, 1) * nd(j, 1);
    o.add(rh(c1), w_e11(4));
    o.add(rh(-c1), w_rowcol(1, 1));
    let c2 =
        d(j, k) * nd(i, 1) * d(i, l) * (d(j, 1) + nd(j, 1) * nd(l, 1) * (2 * d(j, l) + nd(j, l)))
            + nd(j, k) * nd(l, 1) * d(k, l) * (nd(j, 1) * nd(j, l) * d(i, j) + d(i, 1) * d(j, 1));
    o.add(rh(c2), w_e11(4));
    o.add(rh(c2), w_rowcol(1, 1));
    o.add(
        ri(-d(j, k) * (d(j, 1) + nd(j, 1) * (d(l, 1) * nd(i, 1) + nd(l, 1)))),
        w_colrow(i, l),
    );
    o.0
}

/// e_1i e_j1 · e_1k e_11 e_l1, l ≠ 1
fn colrow_bridge(i: usize, j: usize, k: usize, l: usize) -> NcPoly {
    let mut o = Out::new();
    o.add(ri(-d(j, k)), w_bridge(i, l));
    o.0
}

/// e_1i e_j1 · e_11² e_1k
fn colrow_sqrow(i: usize, j: usize, k: usize) -> NcPoly {
    let mut o = Out::new();
    o.add(
        ri(-d(j, 1) * nd(i, 1) * d(k, 1) + nd(j, 1) * d(i, j) * d(k, i)),
        w_sqrow(i),
    );
    o.add(ri(d(j, 1) * d(k, 1) * nd(i, 1)), w_gen(1, i));
    let c = d(i, j) * nd(j, 1);
    o.add(rh(c * d(k, 1)), w_e11(3));
    o.add(rh(c * d(k, 1)), w_gen(1, 1));
    o.add(ri(c * nd(k, i) * nd(k, 1)), w_sqrow(k));
    o.0
}

/// e_1i e_j1 · e_11⁴
fn colrow_quartic(i: usize, j: usize) -> NcPoly {
    let mut o = Out::new();
    o.add(ri(d(j, 1)), w_colrow(i, 1));
    let c = nd(j, 1) * nd(i, 1) * d(i, j);
    o.add(rh(c), w_e11(4));
    o.add(rh(c), w_rowcol(1, 1));
    o.0
}

/// e_1k e_11 e_l1 · e_ij, l ≠ 1
fn bridge_gen(k: usize, l: usize, i: usize, j: usize) -> NcPoly {
    let mut o = Out::new();
    let jl = d(j, l);
    let c1 = d(k, 1) * nd(j, 1) * d(i, 1);
    let c2 = nd(i, 1) * d(i, k);
    o.add(rh(jl * (c1 + c2)), w_e11(4));
    o.add(rh(jl * (c2 - c1)), w_rowcol(1, 1));
    o.add(ri(-jl * nd(i, 1) * d(k, 1)), w_colrow(1, i));
    o.add(ri(-jl * nd(k, 1)), w_colrow(k, i));
    o.0
}

/// e_1k e_11 e_l1 · e_1i e_j1, l ≠ 1, (i,j) ≠ (1,1)
fn bridge_colrow(k: usize, l: usize, i: usize, j: usize) -> NcPoly {
    let mut o = Out::new();
    let il = d(i, l);
    o.add(rh(il * d(k, 1) * d(j, 1)), w_gen(1, 1));
    o.add(rh(-il * d(k, 1) * d(j, 1)), w_e11(3));
    o.add(ri(-il * d(k, 1) * nd(j, 1)), w_bridge(1, j));
    o.add(ri(-il * nd(k, 1) * nd(j, 1)), w_bridge(k, j));
    o.add(ri(-il * nd(k, 1) * d(j, 1)), w_sqrow(k));
    o.add(ri(il * nd(k, 1) * d(j, 1)), w_gen(1, k));
    o.0
}

/// e_1i e_11 e_j1 · e_1k e_11 e_l1, j ≠ 1, l ≠ 1
fn bridge_bridge(i: usize, j: usize, k: usize, l: usize) -> NcPoly {
    let mut o = Out::new();
    o.add(ri(d(j, k)), w_colrow(i, l));
    let c = d(j, k) * nd(i, 1) * d(i, l);
    o.add(rh(-c), w_e11(4));
    o.add(rh(-c), w_rowcol(1, 1));
    o.0
}

/// e_11² e_1k · e_ij
fn sqrow_gen(k: usize, i: usize, j: usize) -> NcPoly {
    let mut o = Out::new();
    let ki = d(k, i);
    o.add(ri(ki * d(j, 1) * d(k, 1)), w_e11(4));
    o.add(rh(ki * d(j, 1) * nd(k, 1)), w_e11(4));
    o.add(rh(ki * d(j, 1) * nd(k, 1)), w_rowcol(1, 1));
    o.add(ri(ki * nd(j, 1)), w_rowcol(1, j));
    o.add(ri(-nd(k, i) * d(j, 1) * d(k, 1)), w_colrow(1, i));
    o.0
}

/// e_11² e_1k · e_i1 e_1j
fn sqrow_rowcol(k: usize, i: usize, j: usize) -> NcPoly {
    let mut o = Out::new();
    o.add(
        ri(d(k, i) * d(j, 1) * d(k, 1))
            + rh(d(k, i) * d(j, 1) * nd(k, 1))
            + rh(nd(k, i) * d(k, 1) * nd(i, 1) * d(i, j)),
        w_gen(1, 1),
    );
    o.add(
        rh(d(k, i) * nd(k, 1) * d(j, 1) - nd(k, i) * d(k, 1) * nd(i, 1) * d(i, j)),
        w_e11(3),
    );
    o.add(
        ri(d(k, 1) * (d(k, i) * nd(j, 1) - nd(k, i) * d(i, 1)) + d(k, i) * nd(k, 1) * nd(j, 1)),
        w_sqrow(j),
    );
    o.0
}

/// e_11² e_1k · e_1i e_j1, (i,j) ≠ (1,1)
fn sqrow_colrow(k: usize, i: usize, j: usize) -> NcPoly {
    let mut o = Out::new();
    o.add(ri(-d(k, 1) * d(i, 1)), w_bridge(1, j));
    let c = d(k, 1) * nd(i, 1) * d(i, j);
    o.add(rh(c), w_e11(3));
    o.add(rh(c), w_gen(1, 1));
    o.0
}

/// e_11² e_1k · e_1j e_11 e_l1, l ≠ 1
fn sqrow_bridge(k: usize, j: usize, l: usize) -> NcPoly {
    let mut o = Out::new();
    o.add(ri(d(k, 1) * d(j, 1)), w_colrow(1, l));
    o.0
}

/// e_11² e_1k · e_11² e_1j
fn sqrow_sqrow(k: usize, j: usize) -> NcPoly {
    let mut o = Out::new();
    o.add(ri(d(k, 1)), w_rowcol(1, j));
    o.0
}

/// e_11² e_1j · e_11⁴
fn sqrow_quartic(j: usize) -> NcPoly {
    let mut o = Out::new();
    o.add(ri(d(j, 1)), w_e11(3));
    o.0
}

/// e_11⁴ · e_ij
fn quartic_gen(i: usize, j: usize) -> NcPoly {
    let mut o = Out::new();
    o.add(ri(d(i, 1) * d(j, 1)), w_gen(1, 1));
    o.add(ri(d(i, 1) * nd(j, 1)), w_sqrow(j));
    o.add(ri(-nd(i, 1) * d(j, 1)), w_bridge(1, i));
    o.0
}

/// e_11⁴ · e_i1 e_1j
fn quartic_rowcol(i: usize, j: usize) -> NcPoly {
    let mut o = Out::new();
    o.add(ri(d(i, 1)), w_rowcol(1, j));
    let c = nd(i, 1) * d(i, j);
    o.add(rh(c), w_rowcol(1, 1));
    o.add(rh(-c), w_e11(4));
    o.0
}

/// e_11⁴ · e_1i e_j1, (i,j) ≠ (1,1)
fn quartic_colrow(i: usize, j: usize) -> NcPoly {
    let mut o = Out::new();
    o.add(ri(d(i, 1)), w_colrow(1, j));
    let c = nd(i, 1) * nd(j, 1) * d(i, j);
    o.add(rh(c), w_e11(4));
    o.add(rh(c), w_rowcol(1, 1));
    o.0
}

/// e_11⁴ · e_1i e_11 e_j1, j ≠ 1
fn quartic_bridge(i: usize, j: usize) -> NcPoly {
    let mut o = Out::new();
    o.add(ri(d(i, 1)), w_bridge(1, j));
    o.0
}

/// e_11⁴ · e_11² e_1j
fn quartic_sqrow(j: usize) -> NcPoly {
    NcPoly::word(w_sqrow(j))
}

/// One table entry where the engine and the closed-form oracle disagree.
#[derive(Debug, Clone)]
pub struct OracleMismatch {
    pub i: usize,
    pub j: usize,
    pub engine: NcPoly,
    pub oracle: NcPoly,
}

/// Compares every basis-pair product of the envelope table against the
/// closed-form oracle.  Returns all mismatches (empty means the two
/// independent routes agree everywhere).
pub fn oracle_diff(alg: &EnvelopeAlgebra) -> Result<Vec<OracleMismatch>, EnvelopeError> {
    let dim = alg.dim();
    let results: Vec<Result<Option<OracleMismatch>, EnvelopeError>> = (0..dim * dim)
        .into_par_iter()
        .map(|flat| {
            let (i, j) = (flat / dim, flat % dim);
            let u = alg.basis_word(i);
            let v = alg.basis_word(j);
            let oracle = oracle_product(alg.n(), u, v)?;
            let mut engine = NcPoly::zero();
            for (k, c) in alg.table_entry(i, j) {
                engine.add_term(alg.basis_word(*k).clone(), c.clone());
            }
            Ok((engine != oracle).then_some(OracleMismatch {
                i,
                j,
                engine,
                oracle,
            }))
        })
        .collect();
    let mut out = Vec::new();
    for r in results {
        if let Some(m) = r? {
            out.push(m);
        }
    }
    Ok(out)
}
