//! Words, the deglex order, and noncommutative polynomials of the free
//! unital associative algebra F⟨X⟩ with F = ℚ(i).
//!
//! Two alphabets are supported: the matrix alphabet `e[i,j]` (ordered
//! row-major: `e[i,j] < e[k,l]` iff `i < k`, or `i = k` and `j < l`) and a
//! generic alphabet `x[1] < x[2] < …` for user-defined triple systems.

mod poly;
mod text;
mod word;

pub use poly::NcPoly;
pub use text::{parse_poly, PolyParseError};
pub use word::{Symbol, Word};

use serde::{Deserialize, Serialize};

/// The generator set of a free algebra, with its total symbol order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Alphabet {
    /// Symbols `e[i,j]` for `1 ≤ i, j ≤ n`.
    Matrix { n: usize },
    /// Symbols `x[1] … x[size]`.
    Generic { size: usize },
}

impl Alphabet {
    pub fn len(&self) -> usize {
        match self {
            Alphabet::Matrix { n } => n * n,
            Alphabet::Generic { size } => *size,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All symbols in ascending order.
    pub fn symbols(&self) -> Vec<Symbol> {
        match self {
            Alphabet::Matrix { n } => {
                let mut out = Vec::with_capacity(n * n);
                for row in 1..=*n {
                    for col in 1..=*n {
                        out.push(Symbol::matrix(row, col));
                    }
                }
                out
            }
            Alphabet::Generic { size } => (1..=*size).map(Symbol::generic).collect(),
        }
    }

    /// Maps a 1-based basis index to its symbol.  For the matrix alphabet
    /// index `(i−1)·n + j` corresponds to `e[i,j]`.
    pub fn symbol_at(&self, index: usize) -> Symbol {
        debug_assert!((1..=self.len()).contains(&index));
        match self {
            Alphabet::Matrix { n } => {
                let row = (index - 1) / n + 1;
                let col = (index - 1) % n + 1;
                Symbol::matrix(row, col)
            }
            Alphabet::Generic { .. } => Symbol::generic(index),
        }
    }

    /// Inverse of [`Alphabet::symbol_at`]; `None` when the symbol does not
    /// belong to this alphabet.
    pub fn index_of(&self, sym: Symbol) -> Option<usize> {
        match (self, sym) {
            (Alphabet::Matrix { n }, Symbol::Matrix { row, col }) => {
                let (row, col) = (row as usize, col as usize);
                (row >= 1 && row <= *n && col >= 1 && col <= *n).then(|| (row - 1) * n + col)
            }
            (Alphabet::Generic { size }, Symbol::Generic(id)) => {
                let id = id as usize;
                (id >= 1 && id <= *size).then_some(id)
            }
            _ => None,
        }
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        self.index_of(sym).is_some()
    }
}

/// Applies the linear anti-homomorphism determined by a symbol bijection:
/// each word `x₁…x_k` maps to `σ(x_k)…σ(x₁)`.
///
/// With `σ = transpose` on the matrix alphabet this is the transpose
/// anti-automorphism `η` (an involution).
pub fn apply_antihom<F>(f: &NcPoly, sigma: F) -> NcPoly
where
    F: Fn(Symbol) -> Symbol,
{
    let mut out = NcPoly::zero();
    for (word, coeff) in f.terms() {
        let image: Word = word.symbols().iter().rev().map(|&s| sigma(s)).collect();
        out.add_term(image, coeff.clone());
    }
    out
}
