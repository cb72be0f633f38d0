//! The finite-dimensional envelope of the n×n matrix triple system:
//! normal-word basis, memoized multiplication table, and the independent
//! closed-form product oracle used to cross-validate the table.

mod oracle;
pub mod reference;

pub use oracle::{oracle_diff, oracle_product};

use std::collections::HashMap;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ajts::{AjtsError, RelationMode, TripleSystem};
use crate::arith::GaussianRational;
use crate::freealg::{apply_antihom, Alphabet, NcPoly, Word};
use crate::groebner::{self, GroebnerError, RewriteSystem};

#[derive(Debug, Clone, Error)]
pub enum EnvelopeError {
    #[error(transparent)]
    Ajts(#[from] AjtsError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("the quotient algebra is infinite-dimensional")]
    Infinite { counts: Vec<u64>, cycle: Vec<Word> },
    #[error("no closed-form product covers basis words `{u}` and `{v}`")]
    UncoveredOracleCase { u: Word, v: Word },
}

/// Coefficient vector over the normal-word basis; exact and dense.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgElement {
    coords: Vec<GaussianRational>,
}

impl AlgElement {
    pub fn zero(dim: usize) -> Self {
        AlgElement {
            coords: vec![GaussianRational::zero(); dim],
        }
    }

    pub fn from_coords(coords: Vec<GaussianRational>) -> Self {
        AlgElement { coords }
    }

    pub fn coords(&self) -> &[GaussianRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(GaussianRational::is_zero)
    }

    pub fn add(&self, other: &AlgElement) -> AlgElement {
        AlgElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &AlgElement) -> AlgElement {
        AlgElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scaled(&self, c: &GaussianRational) -> AlgElement {
        AlgElement {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }
}

/// The quotient algebra, carrying its Gröbner basis, the ordered
/// normal-word basis, and a lazily memoized multiplication table.
///
/// Table cells are filled on demand from immutable inputs; concurrent
/// fills are race-free because every writer computes the same value.
pub struct EnvelopeAlgebra {
    n: usize,
    gb: RewriteSystem,
    basis: Vec<Word>,
    position: HashMap<Word, usize>,
    table: Vec<OnceLock<Vec<(usize, GaussianRational)>>>,
}

impl EnvelopeAlgebra {
    /// Completes the relations of the n×n matrix triple system, checks
    /// finiteness, and extracts the basis in ascending deglex order.
    pub fn build(
        n: usize,
        mode: RelationMode,
        max_degree: usize,
    ) -> Result<EnvelopeAlgebra, EnvelopeError> {
        assert!(n >= 2, "the envelope toolkit is defined for n >= 2");
        let system = TripleSystem::matrix(n);
        let gens = system.envelope_relations(mode)?;
        let gb = groebner::complete(gens, max_degree)?;
        Self::from_groebner(n, gb, max_degree)
    }

    /// Wraps an already-completed basis of the matrix-system ideal.
    pub fn from_groebner(
        n: usize,
        gb: RewriteSystem,
        max_degree: usize,
    ) -> Result<EnvelopeAlgebra, EnvelopeError> {
        let report = gb.normal_words(&Alphabet::Matrix { n }, max_degree);
        if !report.finite {
            return Err(EnvelopeError::Infinite {
                counts: report.counts,
                cycle: report.cycle.unwrap_or_default(),
            });
        }
        let basis = report.basis.expect("finite report carries the basis");
        let position = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, w)| (w, k))
            .collect();
        let dim = basis.len();
        let mut table = Vec::with_capacity(dim * dim);
        table.resize_with(dim * dim, OnceLock::new);
        Ok(EnvelopeAlgebra {
            n,
            gb,
            basis,
            position,
            table,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn groebner_basis(&self) -> &RewriteSystem {
        &self.gb
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn basis_word(&self, k: usize) -> &Word {
        &self.basis[k]
    }

    pub fn position_of(&self, w: &Word) -> Option<usize> {
        self.position.get(w).copied()
    }

    /// The table row for `basis[i] · basis[j]`: the normal form of the
    /// concatenation expressed over the basis, sparse and index-sorted.
    pub fn table_entry(&self, i: usize, j: usize) -> &[(usize, GaussianRational)] {
        self.table[i * self.dim() + j].get_or_init(|| {
            let product = self.basis[i].concat(&self.basis[j]);
            let nf = self.gb.normal_form(&NcPoly::word(product));
            nf.terms()
                .map(|(w, c)| {
                    let k = self
                        .position
                        .get(w)
                        .copied()
                        .expect("normal form of a product lies in the basis span");
                    (k, c.clone())
                })
                .collect()
        })
    }

    pub fn unit(&self) -> AlgElement {
        self.basis_element(self.position[&Word::empty()])
    }

    pub fn basis_element(&self, k: usize) -> AlgElement {
        let mut out = AlgElement::zero(self.dim());
        out.coords[k] = GaussianRational::one();
        out
    }

    /// The image of the triple-system basis element `E_{i,j}` (1-based).
    pub fn generator(&self, i: usize, j: usize) -> AlgElement {
        let k = self.position[&Word::single(crate::freealg::Symbol::matrix(i, j))];
        self.basis_element(k)
    }

    /// Bilinear product through the memoized table.
    pub fn multiply(&self, x: &AlgElement, y: &AlgElement) -> AlgElement {
        let mut out = AlgElement::zero(self.dim());
        for (i, ci) in x.coords.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in y.coords.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                let c = ci * cj;
                for (k, t) in self.table_entry(i, j) {
                    let add = &c * t;
                    out.coords[*k] += &add;
                }
            }
        }
        out
    }

    /// Reduces an arbitrary free-algebra polynomial into the quotient.
    pub fn from_poly(&self, f: &NcPoly) -> AlgElement {
        let nf = self.gb.normal_form(f);
        let mut out = AlgElement::zero(self.dim());
        for (w, c) in nf.terms() {
            let k = self
                .position
                .get(w)
                .copied()
                .expect("normal words of the closed system form the basis");
            out.coords[k] += c;
        }
        out
    }

    pub fn to_poly(&self, x: &AlgElement) -> NcPoly {
        let mut out = NcPoly::zero();
        for (k, c) in x.coords.iter().enumerate() {
            if !c.is_zero() {
                out.add_term(self.basis[k].clone(), c.clone());
            }
        }
        out
    }

    /// The transpose anti-automorphism on quotient elements.
    pub fn eta(&self, x: &AlgElement) -> AlgElement {
        self.from_poly(&apply_antihom(&self.to_poly(x), |s| s.transposed()))
    }

    /// Verifies `(b_i b_j) b_k = b_i (b_j b_k)` over basis triples,
    /// exhaustively or on a fixed-seed sample, reporting the first
    /// counterexample in lexicographic order.
    pub fn check_associativity(&self, exhaustive: bool) -> Result<u64, AssocCounterexample> {
        let dim = self.dim();
        let table = |i: usize, j: usize| self.table_entry(i, j).to_vec();
        if exhaustive {
            verify_table_associativity(dim, &table, None)
        } else {
            verify_table_associativity(dim, &table, Some(100_000))
        }
    }

    /// Full table dump for serialization, row-major.
    pub fn table_json(&self) -> TableJson {
        let dim = self.dim();
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let cell = self
                    .table_entry(i, j)
                    .iter()
                    .map(|(k, c)| (*k, c.to_string()))
                    .collect();
                entries.push((i, j, cell));
            }
        }
        TableJson {
            n: self.n,
            dim,
            basis: self.basis.iter().map(|w| w.to_string()).collect(),
            entries,
        }
    }
}

/// One table cell: row index, column index, and the sparse product
/// vector as `(basis position, scalar string)` pairs.
pub type TableEntryJson = (usize, usize, Vec<(usize, String)>);

/// JSON form of the multiplication table; indices are 0-based positions
/// into `basis`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableJson {
    pub n: usize,
    pub dim: usize,
    pub basis: Vec<String>,
    pub entries: Vec<TableEntryJson>,
}

/// A failed associativity probe: the triple and both bracketings.
#[derive(Debug, Clone)]
pub struct AssocCounterexample {
    pub triple: (usize, usize, usize),
    pub left: Vec<(usize, GaussianRational)>,
    pub right: Vec<(usize, GaussianRational)>,
}

/// Checks associativity of an abstract basis-indexed table, exhaustively
/// (`sample = None`) or over a deterministic sample of triples.  Exposed
/// separately so tests can probe deliberately corrupted tables.
pub fn verify_table_associativity<F>(
    dim: usize,
    table: &F,
    sample: Option<u64>,
) -> Result<u64, AssocCounterexample>
where
    F: Fn(usize, usize) -> Vec<(usize, GaussianRational)> + Sync,
{
    let check_one = |(i, j, k): (usize, usize, usize)| -> Option<AssocCounterexample> {
        // (b_i b_j) b_k
        let mut left = vec![GaussianRational::zero(); dim];
        for (m, c) in table(i, j) {
            for (t, d) in table(m, k) {
                let add = &c * &d;
                left[t] += &add;
            }
        }
        // b_i (b_j b_k)
        let mut right = vec![GaussianRational::zero(); dim];
        for (m, c) in table(j, k) {
            for (t, d) in table(i, m) {
                let add = &c * &d;
                right[t] += &add;
            }
        }
        (left != right).then(|| AssocCounterexample {
            triple: (i, j, k),
            left: sparsify(&left),
            right: sparsify(&right),
        })
    };
    match sample {
        None => {
            let total = (dim * dim * dim) as u64;
            match (0..dim * dim * dim).into_par_iter().find_map_first(|flat| {
                check_one((flat / (dim * dim), (flat / dim) % dim, flat % dim))
            }) {
                None => Ok(total),
                Some(cx) => Err(cx),
            }
        }
        Some(count) => {
            let mut rng = ChaCha12Rng::seed_from_u64(0x7ab1e);
            let triples: Vec<(usize, usize, usize)> = (0..count)
                .map(|_| {
                    (
                        rng.gen_range(0..dim),
                        rng.gen_range(0..dim),
                        rng.gen_range(0..dim),
                    )
                })
                .collect();
            match triples.into_par_iter().find_map_first(check_one) {
                None => Ok(count),
                Some(cx) => Err(cx),
            }
        }
    }
}

fn sparsify(dense: &[GaussianRational]) -> Vec<(usize, GaussianRational)> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}
