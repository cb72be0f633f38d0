use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::freealg::{NcPoly, Word};

use super::{poly_contains_factor, GroebnerError, RewriteSystem};

/// All compositions of two monic polynomials: one element `g·u − v·h`
/// per proper overlap `LM(g)·u = v·LM(h)` (a nonempty proper suffix of
/// `LM(g)` equal to a proper prefix of `LM(h)`).  Self-overlaps are
/// produced by calling this with `g` and `h` the same polynomial.  The
/// leading terms cancel by construction, and an element may vanish
/// entirely.
///
/// The case where one leading word is a factor of the other is not an
/// overlap; it is eliminated by [`self_reduce`] instead.
pub fn compositions(g: &NcPoly, h: &NcPoly) -> Vec<NcPoly> {
    let (Some(lg), Some(lh)) = (g.leading_monomial(), h.leading_monomial()) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let max_overlap = lg.degree().min(lh.degree());
    for k in 1..max_overlap {
        if !lg.ends_with(&lh.symbols()[..k]) {
            continue;
        }
        let u = lh.slice(k, lh.degree());
        let v = lg.slice(0, lg.degree() - k);
        let gu = g * &NcPoly::word(u);
        let vh = &NcPoly::word(v) * h;
        out.push(&gu - &vh);
    }
    out
}

/// Self-reduces a generating set: the output generates the same
/// two-sided ideal, every element is monic and in normal form modulo
/// the others, and elements are ordered by ascending leading word.
///
/// Signals [`GroebnerError::UnitIdeal`] when a nonzero scalar appears.
pub fn self_reduce(gens: Vec<NcPoly>) -> Result<RewriteSystem, GroebnerError> {
    let mut sys = RewriteSystem::empty();
    // Process pending elements smallest leading word first; whenever a
    // new obstruction invalidates kept elements, requeue them.
    let mut queue: BinaryHeap<Reverse<(Word, NcPoly)>> = BinaryHeap::new();
    for g in gens {
        push_pending(&mut queue, g)?;
    }
    while let Some(Reverse((_, g))) = queue.pop() {
        let nf = sys.normal_form(&g);
        if nf.is_zero() {
            continue;
        }
        if nf.degree() == Some(0) {
            return Err(GroebnerError::UnitIdeal);
        }
        let nf = nf.monic().expect("nonzero");
        let lm = nf.leading_monomial().expect("nonzero").clone();
        for evicted in sys.remove_where(|h| poly_contains_factor(h, &lm)) {
            push_pending(&mut queue, evicted)?;
        }
        sys.insert(nf);
    }
    Ok(sys)
}

fn push_pending(
    queue: &mut BinaryHeap<Reverse<(Word, NcPoly)>>,
    g: NcPoly,
) -> Result<(), GroebnerError> {
    if g.is_zero() {
        return Ok(());
    }
    if g.degree() == Some(0) {
        return Err(GroebnerError::UnitIdeal);
    }
    let g = g.monic().expect("nonzero");
    let lm = g.leading_monomial().expect("nonzero").clone();
    queue.push(Reverse((lm, g)));
    Ok(())
}

/// Diamond-lemma completion: repeatedly adjoins normal forms of
/// compositions until a full sweep over every ordered pair (including
/// self-pairs) reduces to zero.  The returned system is self-reduced and
/// closed under compositions, hence a Gröbner basis of the ideal the
/// generators span.
///
/// Any new element of degree above `max_degree` aborts with
/// [`GroebnerError::DegreeBound`] carrying the partial basis.
pub fn complete(gens: Vec<NcPoly>, max_degree: usize) -> Result<RewriteSystem, GroebnerError> {
    let mut sys = self_reduce(gens)?;
    loop {
        // Pending compositions of the current basis, processed in
        // ascending deglex of their leading words.
        let mut pending: Vec<(Word, usize, NcPoly)> = Vec::new();
        for g in sys.elements() {
            for h in sys.elements() {
                for comp in compositions(g, h) {
                    let Some(lm) = comp.leading_monomial().cloned() else {
                        continue;
                    };
                    pending.push((lm, pending.len(), comp));
                }
            }
        }
        pending.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));

        let mut added = 0usize;
        let mut batch_degree: Option<usize> = None;
        for (_, _, comp) in pending {
            let nf = sys.normal_form(&comp);
            if nf.is_zero() {
                continue;
            }
            let degree = nf.degree().expect("nonzero");
            if degree == 0 {
                return Err(GroebnerError::UnitIdeal);
            }
            if degree > max_degree {
                return Err(GroebnerError::DegreeBound {
                    bound: max_degree,
                    degree,
                    offending: nf,
                    partial: sys.into_elements(),
                });
            }
            // Inter-reduce after each batch of additions of equal
            // leading degree.
            if batch_degree.is_some_and(|d| d != degree) {
                sys = self_reduce(sys.into_elements())?;
            }
            batch_degree = Some(degree);
            let nf = sys.normal_form(&nf);
            if nf.is_zero() {
                continue;
            }
            if nf.degree() == Some(0) {
                return Err(GroebnerError::UnitIdeal);
            }
            let lm = nf.leading_monomial().expect("nonzero").clone();
            let nf = nf.monic().expect("nonzero");
            let requeue = sys.remove_where(|h| poly_contains_factor(h, &lm));
            sys.insert(nf);
            for h in requeue {
                let r = sys.normal_form(&h);
                if r.is_zero() {
                    continue;
                }
                if r.degree() == Some(0) {
                    return Err(GroebnerError::UnitIdeal);
                }
                sys.insert(r.monic().expect("nonzero"));
            }
            added += 1;
        }

        if added == 0 {
            // The sweep that found nothing ran against this very basis:
            // it is closed under all compositions.
            return Ok(sys);
        }
        sys = self_reduce(sys.into_elements())?;
    }
}

/// Decides equality of the two-sided ideals spanned by `a` and `b` by
/// completing both sides and checking mutual normal-form vanishing of
/// the opposite generators.
pub fn ideal_equal(a: &[NcPoly], b: &[NcPoly], max_degree: usize) -> Result<bool, GroebnerError> {
    let ga = complete(a.to_vec(), max_degree)?;
    let gb = complete(b.to_vec(), max_degree)?;
    let b_in_a = b.iter().all(|f| ga.normal_form(f).is_zero());
    let a_in_b = a.iter().all(|f| gb.normal_form(f).is_zero());
    Ok(b_in_a && a_in_b)
}
