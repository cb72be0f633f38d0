//! Normal forms, compositions, self-reduction, diamond-lemma completion
//! and normal-word analysis for two-sided ideals of the free algebra.
//!
//! A [`RewriteSystem`] is an ordered list of monic polynomials whose
//! leading words act as rewriting obstructions.  [`complete`] closes a
//! generating set under compositions; the result is a Gröbner basis
//! (every composition reduces to zero), certified by a final exhaustive
//! sweep over all composition pairs.

mod complete;
mod growth;
mod reduce;

pub use complete::{complete, compositions, ideal_equal, self_reduce};
pub use growth::NormalWordReport;
pub use reduce::ReductionStep;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::freealg::{Alphabet, NcPoly, Symbol, Word};

/// Errors surfaced by self-reduction and completion.
#[derive(Debug, Clone, Error)]
pub enum GroebnerError {
    /// A nonzero scalar was produced: the ideal is the whole algebra.
    #[error("the ideal contains a nonzero scalar; the quotient is trivial")]
    UnitIdeal,
    /// Completion produced an element above the degree cap.  Carries the
    /// offending normal form and the partial basis computed so far.
    #[error("degree bound {bound} exceeded by an element of degree {degree}")]
    DegreeBound {
        bound: usize,
        degree: usize,
        offending: NcPoly,
        partial: Vec<NcPoly>,
    },
}

/// An ordered list of monic polynomials with an index over their leading
/// words, supporting fast "find an obstruction inside this word" queries.
///
/// Elements are kept in ascending deglex order of leading word, so the
/// element index doubles as the leading-word rank.  Leading words are
/// pairwise distinct whenever the system was produced by [`self_reduce`]
/// or [`complete`].
#[derive(Debug, Clone, Default)]
pub struct RewriteSystem {
    elements: Vec<NcPoly>,
    singles: HashMap<Symbol, Vec<usize>>,
    pairs: HashMap<(Symbol, Symbol), Vec<usize>>,
}

impl RewriteSystem {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a rewrite system from arbitrary generators: zeros are
    /// dropped, every element is made monic, and the list is sorted.
    /// The result is *not* self-reduced; see [`self_reduce`] for that.
    pub fn new(gens: Vec<NcPoly>) -> Result<Self, GroebnerError> {
        let mut elems = Vec::with_capacity(gens.len());
        for g in gens {
            if g.is_zero() {
                continue;
            }
            if g.degree() == Some(0) {
                return Err(GroebnerError::UnitIdeal);
            }
            elems.push(g.monic().expect("nonzero polynomial"));
        }
        sort_canonical(&mut elems);
        elems.dedup();
        let mut sys = RewriteSystem {
            elements: elems,
            singles: HashMap::new(),
            pairs: HashMap::new(),
        };
        sys.rebuild_index();
        Ok(sys)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[NcPoly] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<NcPoly> {
        self.elements
    }

    pub fn element(&self, idx: usize) -> &NcPoly {
        &self.elements[idx]
    }

    pub fn leading(&self, idx: usize) -> &Word {
        self.elements[idx]
            .leading_monomial()
            .expect("system elements are nonzero")
    }

    /// Leading words in ascending deglex order.
    pub fn obstructions(&self) -> impl Iterator<Item = &Word> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().expect("system elements are nonzero"))
    }

    fn rebuild_index(&mut self) {
        self.singles.clear();
        self.pairs.clear();
        for (idx, g) in self.elements.iter().enumerate() {
            let lm = g.leading_monomial().expect("nonzero");
            let syms = lm.symbols();
            match syms.len() {
                0 => unreachable!("constant elements are rejected at construction"),
                1 => self.singles.entry(syms[0]).or_default().push(idx),
                _ => self.pairs.entry((syms[0], syms[1])).or_default().push(idx),
            }
        }
    }

    /// Inserts a monic polynomial, keeping the order invariant.
    pub(crate) fn insert(&mut self, poly: NcPoly) {
        debug_assert!(poly.leading_term().is_some_and(|(_, c)| c.is_one()));
        let pos = self.elements.partition_point(|g| canonical_lt(g, &poly));
        self.elements.insert(pos, poly);
        self.rebuild_index();
    }

    /// Removes all elements matching `pred` and returns them.
    pub(crate) fn remove_where<F>(&mut self, mut pred: F) -> Vec<NcPoly>
    where
        F: FnMut(&NcPoly) -> bool,
    {
        let mut removed = Vec::new();
        let mut kept = Vec::with_capacity(self.elements.len());
        for g in self.elements.drain(..) {
            if pred(&g) {
                removed.push(g);
            } else {
                kept.push(g);
            }
        }
        self.elements = kept;
        if !removed.is_empty() {
            self.rebuild_index();
        }
        removed
    }

    /// Finds the reduction site for `w` under the deterministic strategy:
    /// the element with the smallest leading word among those whose
    /// leading word is a factor of `w`, at its leftmost occurrence.
    pub fn find_reduction(&self, w: &Word) -> Option<(usize, usize)> {
        let syms = w.symbols();
        let mut best: Option<(usize, usize)> = None;
        for pos in 0..syms.len() {
            if let Some(bucket) = self.singles.get(&syms[pos]) {
                for &idx in bucket {
                    if best.is_none_or(|(b, _)| idx < b) {
                        best = Some((idx, pos));
                    }
                }
            }
            if pos + 1 < syms.len() {
                if let Some(bucket) = self.pairs.get(&(syms[pos], syms[pos + 1])) {
                    for &idx in bucket {
                        if best.is_none_or(|(b, _)| idx < b)
                            && w.matches_at(self.leading(idx).symbols(), pos)
                        {
                            best = Some((idx, pos));
                        }
                    }
                }
            }
        }
        best
    }

    /// All `(element, position)` pairs at which some leading word occurs
    /// inside `w`, in ascending `(position, element)` order.
    pub fn all_matches(&self, w: &Word) -> Vec<(usize, usize)> {
        let syms = w.symbols();
        let mut out = Vec::new();
        for pos in 0..syms.len() {
            let mut here = Vec::new();
            if let Some(bucket) = self.singles.get(&syms[pos]) {
                here.extend(bucket.iter().copied());
            }
            if pos + 1 < syms.len() {
                if let Some(bucket) = self.pairs.get(&(syms[pos], syms[pos + 1])) {
                    for &idx in bucket {
                        if w.matches_at(self.leading(idx).symbols(), pos) {
                            here.push(idx);
                        }
                    }
                }
            }
            here.sort_unstable();
            out.extend(here.into_iter().map(|idx| (idx, pos)));
        }
        out
    }

    pub fn is_reducible(&self, w: &Word) -> bool {
        self.find_reduction(w).is_some()
    }

    /// True when every element is in normal form modulo the others.
    pub fn is_self_reduced(&self) -> bool {
        for (i, g) in self.elements.iter().enumerate() {
            for (w, _) in g.terms() {
                for m in self.all_matches(w) {
                    if m.0 != i || g.leading_monomial() != Some(w) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Canonical text serialization: one polynomial per line, ascending
    /// leading word.
    pub fn to_text_lines(&self) -> Vec<String> {
        self.elements.iter().map(|g| g.to_string()).collect()
    }

    pub fn to_json(&self, alphabet: &Alphabet) -> GroebnerBasisJson {
        GroebnerBasisJson {
            alphabet: alphabet.clone(),
            order: "deglex".to_string(),
            elements: self.to_text_lines(),
        }
    }
}

/// JSON wrapper for a serialized basis.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroebnerBasisJson {
    pub alphabet: Alphabet,
    pub order: String,
    pub elements: Vec<String>,
}

pub(crate) fn canonical_lt(a: &NcPoly, b: &NcPoly) -> bool {
    let la = a.leading_monomial().expect("nonzero");
    let lb = b.leading_monomial().expect("nonzero");
    la.cmp(lb).then_with(|| a.cmp(b)).is_lt()
}

pub(crate) fn sort_canonical(elems: &mut [NcPoly]) {
    elems.sort_by(|a, b| {
        let la = a.leading_monomial().expect("nonzero");
        let lb = b.leading_monomial().expect("nonzero");
        la.cmp(lb).then_with(|| a.cmp(b))
    });
}

/// True when some support word of `h` contains `factor` as a subword.
pub(crate) fn poly_contains_factor(h: &NcPoly, factor: &Word) -> bool {
    h.terms().any(|(w, _)| w.find_factor(factor).is_some())
}
