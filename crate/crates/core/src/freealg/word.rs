use std::cmp::Ordering;
use std::fmt;

/// A generator symbol of the free algebra.
///
/// The derived ordering is the symbol order used throughout: matrix
/// symbols compare row-first then column, generic symbols by id.  The two
/// families are never mixed inside one algebra.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Matrix { row: u8, col: u8 },
    Generic(u16),
}

impl Symbol {
    /// The matrix symbol `e[row,col]` (1-based).
    pub fn matrix(row: usize, col: usize) -> Symbol {
        debug_assert!(row >= 1 && col >= 1);
        Symbol::Matrix {
            row: row as u8,
            col: col as u8,
        }
    }

    /// The generic symbol `x[id]` (1-based).
    pub fn generic(id: usize) -> Symbol {
        debug_assert!(id >= 1);
        Symbol::Generic(id as u16)
    }

    /// Swaps row and column of a matrix symbol; identity on generic ones.
    pub fn transposed(self) -> Symbol {
        match self {
            Symbol::Matrix { row, col } => Symbol::Matrix { row: col, col: row },
            s => s,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Matrix { row, col } => write!(f, "e[{row},{col}]"),
            Symbol::Generic(id) => write!(f, "x[{id}]"),
        }
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A finite sequence of symbols; the empty word is the unit monomial 1.
///
/// `Ord` is the degree-lexicographical order: shorter words come first,
/// equal-length words compare left to right by symbol.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn single(sym: Symbol) -> Word {
        Word(vec![sym])
    }

    pub fn from_symbols(syms: Vec<Symbol>) -> Word {
        Word(syms)
    }

    /// `sym` repeated `count` times.
    pub fn power(sym: Symbol, count: usize) -> Word {
        Word(vec![sym; count])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The word `self[range.start..range.end]`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// First position at which `factor` occurs as a contiguous subword,
    /// scanning left to right.
    pub fn find_factor(&self, factor: &Word) -> Option<usize> {
        if factor.is_empty() {
            return Some(0);
        }
        if factor.0.len() > self.0.len() {
            return None;
        }
        (0..=self.0.len() - factor.0.len()).find(|&pos| self.matches_at(factor.symbols(), pos))
    }

    /// Whether `syms` occurs at position `pos`.
    pub fn matches_at(&self, syms: &[Symbol], pos: usize) -> bool {
        pos + syms.len() <= self.0.len() && &self.0[pos..pos + syms.len()] == syms
    }

    pub fn ends_with(&self, syms: &[Symbol]) -> bool {
        syms.len() <= self.0.len() && self.matches_at(syms, self.0.len() - syms.len())
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<T: IntoIterator<Item = Symbol>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    /// Canonical rendering: symbols joined by `*`, with runs of one symbol
    /// contracted to `sym^k`.  The empty word renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut pos = 0;
        while pos < self.0.len() {
            let sym = self.0[pos];
            let mut run = 1;
            while pos + run < self.0.len() && self.0[pos + run] == sym {
                run += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if run == 1 {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{sym}^{run}")?;
            }
            pos += run;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
