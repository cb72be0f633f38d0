use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::freealg::{Alphabet, Symbol, Word};

use super::RewriteSystem;

/// Result of normal-word enumeration for a closed rewrite system.
///
/// `finite` is decided by cycle detection on the factor-avoidance graph
/// (vertices: normal words one shorter than the longest obstruction;
/// edges: one-symbol extensions that stay normal), not by enumerating
/// until the counts stall.
#[derive(Debug, Clone)]
pub struct NormalWordReport {
    pub finite: bool,
    /// Normal-word counts per degree, starting at degree 0.  For a
    /// finite quotient this is the complete profile; otherwise it stops
    /// at the requested degree cap.
    pub counts: Vec<u64>,
    /// Every normal word in ascending deglex order, when finite.
    pub basis: Option<Vec<Word>>,
    /// Vertices of one cycle of the factor-avoidance graph, when infinite.
    pub cycle: Option<Vec<Word>>,
}

impl NormalWordReport {
    pub fn total(&self) -> Option<u64> {
        self.finite.then(|| self.counts.iter().sum())
    }
}

struct Avoider {
    /// Obstruction words grouped by degree (index = degree).
    by_len: Vec<HashSet<Vec<Symbol>>>,
}

impl Avoider {
    fn new(sys: &RewriteSystem) -> Self {
        let max = sys.obstructions().map(Word::degree).max().unwrap_or(0);
        let mut by_len: Vec<HashSet<Vec<Symbol>>> = vec![HashSet::new(); max + 1];
        for lm in sys.obstructions() {
            by_len[lm.degree()].insert(lm.symbols().to_vec());
        }
        Avoider { by_len }
    }

    fn max_len(&self) -> usize {
        self.by_len.len().saturating_sub(1)
    }

    /// Whether extending the normal word `w` by `s` stays normal.  Only
    /// suffixes ending at the new symbol need checking.
    fn extension_is_normal(&self, w: &Word, s: Symbol) -> bool {
        let syms = w.symbols();
        for len in 1..=self.max_len().min(syms.len() + 1) {
            if self.by_len[len].is_empty() {
                continue;
            }
            let mut candidate = Vec::with_capacity(len);
            candidate.extend_from_slice(&syms[syms.len() + 1 - len..]);
            candidate.push(s);
            if self.by_len[len].contains(&candidate) {
                return false;
            }
        }
        true
    }

    fn next_level(&self, level: &[Word], symbols: &[Symbol]) -> Vec<Word> {
        let mut out = Vec::new();
        for w in level {
            for &s in symbols {
                if self.extension_is_normal(w, s) {
                    out.push(w.concat(&Word::single(s)));
                }
            }
        }
        out
    }
}

impl RewriteSystem {
    /// Enumerates the normal words of the quotient by this system
    /// (assumed closed under compositions) over the given alphabet.
    ///
    /// For a finite quotient the enumeration is complete and `counts`
    /// holds the exact dimension profile.  For an infinite quotient the
    /// per-degree counts stop at `max_degree` and a witness cycle of the
    /// factor-avoidance graph is returned.
    pub fn normal_words(&self, alphabet: &Alphabet, max_degree: usize) -> NormalWordReport {
        let avoider = Avoider::new(self);
        let symbols = alphabet.symbols();

        // Level-by-level extension; level d holds the normal words of
        // degree d in ascending deglex order.
        let mut levels: Vec<Vec<Word>> = vec![vec![Word::empty()]];
        let vertex_len = avoider.max_len().max(1) - 1;
        while levels.len() <= vertex_len + 1 {
            let next = avoider.next_level(levels.last().unwrap(), &symbols);
            levels.push(next);
        }

        // Factor-avoidance graph: vertices are the normal words of
        // length `vertex_len`, one edge per normal word of length
        // `vertex_len + 1` from its prefix to its suffix.
        let vertices: BTreeSet<Word> = levels[vertex_len].iter().cloned().collect();
        let mut edges: BTreeMap<Word, Vec<Word>> = BTreeMap::new();
        for w in &levels[vertex_len + 1] {
            let from = w.slice(0, vertex_len);
            let to = w.slice(1, vertex_len + 1);
            edges.entry(from).or_default().push(to);
        }

        match find_cycle(&vertices, &edges) {
            None => {
                // Acyclic graph: walks are bounded, so extension dies out.
                while !levels.last().unwrap().is_empty() {
                    let next = avoider.next_level(levels.last().unwrap(), &symbols);
                    levels.push(next);
                }
                levels.pop();
                let counts = levels.iter().map(|l| l.len() as u64).collect();
                let basis = levels.into_iter().flatten().collect();
                NormalWordReport {
                    finite: true,
                    counts,
                    basis: Some(basis),
                    cycle: None,
                }
            }
            Some(cycle) => {
                while levels.len() <= max_degree {
                    let next = avoider.next_level(levels.last().unwrap(), &symbols);
                    levels.push(next);
                }
                levels.truncate(max_degree + 1);
                NormalWordReport {
                    finite: false,
                    counts: levels.iter().map(|l| l.len() as u64).collect(),
                    basis: None,
                    cycle: Some(cycle),
                }
            }
        }
    }
}

/// Deterministic cycle search: strip sources and sinks (Kahn style);
/// anything left lies on or between cycles, and walking forward inside
/// the remainder from its smallest vertex must revisit a vertex.
fn find_cycle(vertices: &BTreeSet<Word>, edges: &BTreeMap<Word, Vec<Word>>) -> Option<Vec<Word>> {
    let mut remaining: BTreeSet<Word> = vertices.clone();
    loop {
        let mut with_incoming: BTreeSet<&Word> = BTreeSet::new();
        for (from, tos) in edges {
            if remaining.contains(from) {
                with_incoming.extend(tos.iter().filter(|t| remaining.contains(*t)));
            }
        }
        let removable: Vec<Word> = remaining
            .iter()
            .filter(|v| {
                let no_incoming = !with_incoming.contains(v);
                let no_outgoing = edges
                    .get(*v)
                    .is_none_or(|tos| !tos.iter().any(|t| remaining.contains(t)));
                no_incoming || no_outgoing
            })
            .cloned()
            .collect();
        if removable.is_empty() {
            break;
        }
        for v in removable {
            remaining.remove(&v);
        }
    }
    if remaining.is_empty() {
        return None;
    }
    // Walk forward inside the remainder until a vertex repeats.
    let start = remaining.iter().next().expect("nonempty").clone();
    let mut path = vec![start.clone()];
    let mut seen: BTreeMap<Word, usize> = BTreeMap::new();
    seen.insert(start.clone(), 0);
    let mut cur = start;
    loop {
        let next = edges
            .get(&cur)
            .and_then(|tos| tos.iter().filter(|t| remaining.contains(*t)).min())
            .expect("every remaining vertex keeps an outgoing edge")
            .clone();
        if let Some(&at) = seen.get(&next) {
            return Some(path[at..].to_vec());
        }
        seen.insert(next.clone(), path.len());
        path.push(next.clone());
        cur = next;
    }
}
