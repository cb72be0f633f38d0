use std::collections::BTreeMap;

use rand::Rng;

use crate::arith::GaussianRational;
use crate::freealg::{NcPoly, Word};

use super::RewriteSystem;

/// One elementary rewriting step: subtract `coeff · left · g · right`
/// where `g` is the indexed system element.  A full reduction certificate
/// expresses `f − NF(f)` as the sum of its steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub coeff: GaussianRational,
    pub left: Word,
    pub element: usize,
    pub right: Word,
}

impl ReductionStep {
    /// The polynomial `coeff · left · g · right` this step subtracted.
    pub fn expand(&self, sys: &RewriteSystem) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in sys.element(self.element).terms() {
            out.add_term(self.left.concat(w).concat(&self.right), &self.coeff * c);
        }
        out
    }
}

impl RewriteSystem {
    /// Normal form of `f`: no support word of the result contains any
    /// leading word of the system as a factor, and `f − NF(f)` lies in
    /// the generated ideal.
    ///
    /// The strategy is deterministic: always rewrite the deglex-greatest
    /// reducible support word, using the element with the smallest
    /// leading word at its leftmost occurrence.  Termination is
    /// guaranteed because each step replaces a word by strictly smaller
    /// ones.
    pub fn normal_form(&self, f: &NcPoly) -> NcPoly {
        self.reduce_impl(f, None)
    }

    /// Like [`RewriteSystem::normal_form`], also returning the list of
    /// rewriting steps.  `f − NF(f)` equals the sum of the expanded
    /// steps; see [`ReductionStep::expand`].
    pub fn normal_form_with_certificate(&self, f: &NcPoly) -> (NcPoly, Vec<ReductionStep>) {
        let mut cert = Vec::new();
        let nf = self.reduce_impl(f, Some(&mut cert));
        (nf, cert)
    }

    fn reduce_impl(&self, f: &NcPoly, mut cert: Option<&mut Vec<ReductionStep>>) -> NcPoly {
        // Working terms, consumed from the top.  Every rewrite of the
        // current maximum introduces strictly smaller words, so words
        // moved to `normal` are final.
        let mut work: BTreeMap<Word, GaussianRational> =
            f.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut normal = NcPoly::zero();
        while let Some((w, c)) = work.pop_last() {
            match self.find_reduction(&w) {
                None => normal.add_term(w, c),
                Some((idx, pos)) => {
                    let g = self.element(idx);
                    let lm_len = self.leading(idx).degree();
                    let left = w.slice(0, pos);
                    let right = w.slice(pos + lm_len, w.degree());
                    // The leading term of c·left·g·right is exactly c·w;
                    // fold the (negated) tail into the worklist.
                    for (m, cm) in g.terms() {
                        if m == self.leading(idx) {
                            continue;
                        }
                        let shifted = left.concat(m).concat(&right);
                        let delta = -&(&c * cm);
                        match work.entry(shifted) {
                            std::collections::btree_map::Entry::Vacant(e) => {
                                e.insert(delta);
                            }
                            std::collections::btree_map::Entry::Occupied(mut e) => {
                                *e.get_mut() += &delta;
                                if e.get().is_zero() {
                                    e.remove();
                                }
                            }
                        }
                    }
                    if let Some(cert) = cert.as_deref_mut() {
                        cert.push(ReductionStep {
                            coeff: c,
                            left,
                            element: idx,
                            right,
                        });
                    }
                }
            }
        }
        normal
    }

    /// Normal form under a randomized strategy: a random reducible
    /// support word, a random matching element, a random occurrence.
    /// For a system closed under compositions the result is independent
    /// of strategy and therefore equals [`RewriteSystem::normal_form`].
    pub fn normal_form_randomized<R: Rng>(&self, f: &NcPoly, rng: &mut R) -> NcPoly {
        let mut cur = f.clone();
        loop {
            let reducible: Vec<(Word, Vec<(usize, usize)>)> = cur
                .terms()
                .filter_map(|(w, _)| {
                    let matches = self.all_matches(w);
                    (!matches.is_empty()).then(|| (w.clone(), matches))
                })
                .collect();
            if reducible.is_empty() {
                return cur;
            }
            let (word, matches) = &reducible[rng.gen_range(0..reducible.len())];
            let &(idx, pos) = &matches[rng.gen_range(0..matches.len())];
            let coeff = cur.coeff(word).expect("picked from support").clone();
            let lm_len = self.leading(idx).degree();
            let left = word.slice(0, pos);
            let right = word.slice(pos + lm_len, word.degree());
            cur.sub_scaled_conjugate(&coeff, &left, self.element(idx), &right);
        }
    }
}
