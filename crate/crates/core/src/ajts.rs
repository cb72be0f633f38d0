//! Triple systems with an antisymmetric trilinear product, the anti-Jordan
//! axiom checker, the n×n matrix instance, and generation of the relations
//! presenting the universal associative envelope.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::GaussianRational;
use crate::freealg::{Alphabet, NcPoly, Symbol, Word};

/// Default cap on exhaustive five-term identity checking; above this many
/// quintuples the checker samples and says so in the report.
pub const DEFAULT_QUINTUPLE_CAP: u64 = 2_000_000;

#[derive(Debug, Clone, Error)]
pub enum AjtsError {
    #[error("relation mode `paper` requires the built-in matrix triple system")]
    PaperModeRequiresMatrix,
    #[error("invalid triple system: {0}")]
    Invalid(String),
}

/// Which presentation of the envelope ideal to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationMode {
    /// One relation `x_a x_b x_c − x_c x_b x_a − ⟨abc⟩` per basis triple,
    /// pruned of antisymmetry duplicates.  Works for any triple system.
    Full,
    /// The six closed-form generator families of the matrix system, used
    /// as a cross-validation fixture against `Full`.
    Paper,
}

/// A finite-dimensional triple system: a basis `1..=dim` and sparse
/// structure constants `γ` with `⟨e_a, e_b, e_c⟩ = Σ_d γ^d_{abc} e_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleSystem {
    alphabet: Alphabet,
    gamma: BTreeMap<(u16, u16, u16, u16), GaussianRational>,
    labels: Option<Vec<String>>,
}

/// Sparse coefficient vector over the triple-system basis, sorted by index.
pub type SparseVec = Vec<(usize, GaussianRational)>;

impl TripleSystem {
    /// The zero-product system of the given dimension.
    pub fn zero(dim: usize) -> Self {
        TripleSystem {
            alphabet: Alphabet::Generic { size: dim },
            gamma: BTreeMap::new(),
            labels: None,
        }
    }

    /// The anti-Jordan triple system of all n×n matrix units under
    /// `⟨a,b,c⟩ = abc − cba`:
    /// `⟨E_{i,j}, E_{k,l}, E_{m,t}⟩ = δ_{j,k} δ_{l,m} E_{i,t} − δ_{t,k} δ_{l,i} E_{m,j}`.
    pub fn matrix(n: usize) -> Self {
        assert!(n >= 1, "matrix triple system needs n >= 1");
        let alphabet = Alphabet::Matrix { n };
        let idx = |i: usize, j: usize| (i - 1) * n + j;
        let mut gamma: BTreeMap<(u16, u16, u16, u16), GaussianRational> = BTreeMap::new();
        let mut add = |a: usize, b: usize, c: usize, d: usize, v: i64| {
            let key = (a as u16, b as u16, c as u16, d as u16);
            let entry = gamma.entry(key).or_insert_with(GaussianRational::zero);
            *entry += &GaussianRational::integer(v);
            if entry.is_zero() {
                gamma.remove(&key);
            }
        };
        // First delta term: j = k, l = m contributes +E_{i,t}.
        for i in 1..=n {
            for j in 1..=n {
                for l in 1..=n {
                    for t in 1..=n {
                        add(idx(i, j), idx(j, l), idx(l, t), idx(i, t), 1);
                    }
                }
            }
        }
        // Second delta term: t = k, l = i contributes −E_{m,j}.
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    for m in 1..=n {
                        add(idx(i, j), idx(k, i), idx(m, k), idx(m, j), -1);
                    }
                }
            }
        }
        TripleSystem {
            alphabet,
            gamma,
            labels: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.alphabet.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn is_matrix(&self) -> Option<usize> {
        match self.alphabet {
            Alphabet::Matrix { n } => Some(n),
            Alphabet::Generic { .. } => None,
        }
    }

    pub fn set_gamma(&mut self, a: usize, b: usize, c: usize, d: usize, v: GaussianRational) {
        let key = (a as u16, b as u16, c as u16, d as u16);
        if v.is_zero() {
            self.gamma.remove(&key);
        } else {
            self.gamma.insert(key, v);
        }
    }

    pub fn gamma_entries(
        &self,
    ) -> impl Iterator<Item = (&(u16, u16, u16, u16), &GaussianRational)> {
        self.gamma.iter()
    }

    /// `⟨e_a, e_b, e_c⟩` as a sparse vector.
    pub fn triple(&self, a: usize, b: usize, c: usize) -> SparseVec {
        let lo = (a as u16, b as u16, c as u16, 0u16);
        let hi = (a as u16, b as u16, c as u16, u16::MAX);
        self.gamma
            .range(lo..=hi)
            .map(|(&(_, _, _, d), v)| (d as usize, v.clone()))
            .collect()
    }

    /// `⟨e_a, e_b, v⟩` extended linearly in the third slot.
    fn triple_right(&self, a: usize, b: usize, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, GaussianRational> = BTreeMap::new();
        for (c, coeff) in v {
            for (d, g) in self.triple(a, b, *c) {
                let entry = acc.entry(d).or_insert_with(GaussianRational::zero);
                *entry += &(coeff * &g);
            }
        }
        collect_sparse(acc)
    }

    /// `⟨v, e_d, e_e⟩` extended linearly in the first slot.
    fn triple_left(&self, v: &SparseVec, d: usize, e: usize) -> SparseVec {
        let mut acc: BTreeMap<usize, GaussianRational> = BTreeMap::new();
        for (a, coeff) in v {
            for (k, g) in self.triple(*a, d, e) {
                let entry = acc.entry(k).or_insert_with(GaussianRational::zero);
                *entry += &(coeff * &g);
            }
        }
        collect_sparse(acc)
    }

    /// `⟨e_a, v, e_e⟩` extended linearly in the middle slot.
    fn triple_mid(&self, a: usize, v: &SparseVec, e: usize) -> SparseVec {
        let mut acc: BTreeMap<usize, GaussianRational> = BTreeMap::new();
        for (b, coeff) in v {
            for (k, g) in self.triple(a, *b, e) {
                let entry = acc.entry(k).or_insert_with(GaussianRational::zero);
                *entry += &(coeff * &g);
            }
        }
        collect_sparse(acc)
    }

    /// Checks antisymmetry `⟨abc⟩ = −⟨cba⟩` on all basis triples and the
    /// five-term identity
    /// `⟨ab⟨cde⟩⟩ = ⟨⟨abc⟩de⟩ + ⟨c⟨bad⟩e⟩ + ⟨cd⟨abe⟩⟩`
    /// on all basis quintuples (or a deterministic sample above
    /// `quintuple_cap`).  The first violation in lexicographic tuple
    /// order is reported with both sides evaluated.
    pub fn check_axioms(&self, quintuple_cap: u64) -> AxiomReport {
        let m = self.dim();
        // Antisymmetry, exhaustive over m³ triples.
        let anti = (1..=m * m * m).into_par_iter().find_map_first(|flat| {
            let flat = flat - 1;
            let a = flat / (m * m) + 1;
            let b = (flat / m) % m + 1;
            let c = flat % m + 1;
            let lhs = self.triple(a, b, c);
            let rhs = negate_sparse(&self.triple(c, b, a));
            (lhs != rhs).then_some(AxiomViolation::Antisymmetry {
                triple: (a, b, c),
                lhs,
                rhs,
            })
        });
        if let Some(v) = anti {
            return AxiomReport {
                quintuples_checked: 0,
                sampled: false,
                violation: Some(v),
            };
        }

        let total = (m as u64).pow(5);
        if total <= quintuple_cap {
            let violation = (0..total).into_par_iter().find_map_first(|flat| {
                let q = unflatten5(flat, m);
                self.identity_violation(q)
            });
            AxiomReport {
                quintuples_checked: total,
                sampled: false,
                violation,
            }
        } else {
            let mut rng = ChaCha12Rng::seed_from_u64(0xa1705);
            let mut violation = None;
            for _ in 0..quintuple_cap {
                let q = (
                    rng.gen_range(1..=m),
                    rng.gen_range(1..=m),
                    rng.gen_range(1..=m),
                    rng.gen_range(1..=m),
                    rng.gen_range(1..=m),
                );
                if let Some(v) = self.identity_violation(q) {
                    violation = Some(v);
                    break;
                }
            }
            AxiomReport {
                quintuples_checked: quintuple_cap,
                sampled: true,
                violation,
            }
        }
    }

    fn identity_violation(
        &self,
        (a, b, c, d, e): (usize, usize, usize, usize, usize),
    ) -> Option<AxiomViolation> {
        let cde = self.triple(c, d, e);
        let lhs = self.triple_right(a, b, &cde);
        let abc = self.triple(a, b, c);
        let mut rhs_acc: BTreeMap<usize, GaussianRational> = BTreeMap::new();
        for (k, v) in self.triple_left(&abc, d, e) {
            *rhs_acc.entry(k).or_insert_with(GaussianRational::zero) += &v;
        }
        let bad = self.triple(b, a, d);
        for (k, v) in self.triple_mid(c, &bad, e) {
            *rhs_acc.entry(k).or_insert_with(GaussianRational::zero) += &v;
        }
        let abe = self.triple(a, b, e);
        for (k, v) in self.triple_right(c, d, &abe) {
            *rhs_acc.entry(k).or_insert_with(GaussianRational::zero) += &v;
        }
        let rhs = collect_sparse(rhs_acc);
        (lhs != rhs).then_some(AxiomViolation::FiveTermIdentity {
            quintuple: (a, b, c, d, e),
            lhs,
            rhs,
        })
    }

    /// Generators of the universal-envelope ideal.
    ///
    /// `Full` emits `x_a x_b x_c − x_c x_b x_a − φ(⟨abc⟩)` for every basis
    /// triple with `a ≤ c` (the `(c,b,a)` relation is its negative); for
    /// `a = c` the cubic part cancels, so the relation appears only when
    /// `⟨aba⟩ ≠ 0`.  `Paper` emits the matrix system's six closed-form
    /// families.
    pub fn envelope_relations(&self, mode: RelationMode) -> Result<Vec<NcPoly>, AjtsError> {
        match mode {
            RelationMode::Full => Ok(self.full_relations()),
            RelationMode::Paper => {
                let n = self.is_matrix().ok_or(AjtsError::PaperModeRequiresMatrix)?;
                Ok(matrix_relation_families(n))
            }
        }
    }

    fn full_relations(&self) -> Vec<NcPoly> {
        let m = self.dim();
        let sym = |a: usize| self.alphabet.symbol_at(a);
        let mut out = Vec::new();
        for a in 1..=m {
            for c in a..=m {
                for b in 1..=m {
                    let mut rel = NcPoly::zero();
                    if a != c {
                        rel.add_term(
                            Word::from_symbols(vec![sym(a), sym(b), sym(c)]),
                            GaussianRational::one(),
                        );
                        rel.add_term(
                            Word::from_symbols(vec![sym(c), sym(b), sym(a)]),
                            GaussianRational::integer(-1),
                        );
                    }
                    for (d, g) in self.triple(a, b, c) {
                        rel.add_term(Word::single(sym(d)), -&g);
                    }
                    if !rel.is_zero() {
                        out.push(rel);
                    }
                }
            }
        }
        out
    }
}

fn collect_sparse(acc: BTreeMap<usize, GaussianRational>) -> SparseVec {
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

fn negate_sparse(v: &SparseVec) -> SparseVec {
    v.iter().map(|(k, c)| (*k, -c)).collect()
}

fn unflatten5(flat: u64, m: usize) -> (usize, usize, usize, usize, usize) {
    let m = m as u64;
    let e = flat % m;
    let d = (flat / m) % m;
    let c = (flat / (m * m)) % m;
    let b = (flat / (m * m * m)) % m;
    let a = flat / (m * m * m * m);
    (
        a as usize + 1,
        b as usize + 1,
        c as usize + 1,
        d as usize + 1,
        e as usize + 1,
    )
}

/// Outcome of [`TripleSystem::check_axioms`].
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub quintuples_checked: u64,
    pub sampled: bool,
    pub violation: Option<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

#[derive(Debug, Clone)]
pub enum AxiomViolation {
    Antisymmetry {
        triple: (usize, usize, usize),
        lhs: SparseVec,
        rhs: SparseVec,
    },
    FiveTermIdentity {
        quintuple: (usize, usize, usize, usize, usize),
        lhs: SparseVec,
        rhs: SparseVec,
    },
}

/// The transpose map `e[i,j] → e[j,i]` on the matrix alphabet; composing
/// with [`crate::freealg::apply_antihom`] yields the order-2
/// anti-automorphism of the envelope.
pub fn eta_symbol_map() -> impl Fn(Symbol) -> Symbol + Copy {
    |s: Symbol| s.transposed()
}

/// The six closed-form relation families presenting the matrix-system
/// envelope ideal, transcribed with the index constraints as printed.
pub fn matrix_relation_families(n: usize) -> Vec<NcPoly> {
    let e = |i: usize, j: usize| Symbol::matrix(i, j);
    let cubic = |s1: Symbol, s2: Symbol, s3: Symbol| -> NcPoly {
        // s1 s2 s3 − s3 s2 s1
        let mut p = NcPoly::word(Word::from_symbols(vec![s1, s2, s3]));
        p.add_term(
            Word::from_symbols(vec![s3, s2, s1]),
            GaussianRational::integer(-1),
        );
        p
    };
    let one = GaussianRational::one;
    let minus_one = || GaussianRational::integer(-1);
    let mut out = Vec::new();
    let r = 1..=n;
    // Family 1: e_ij e_jk e_kt − e_kt e_jk e_ij − e_it, for k < i.
    for i in r.clone() {
        for j in r.clone() {
            for k in 1..i {
                for t in r.clone() {
                    let mut p = cubic(e(i, j), e(j, k), e(k, t));
                    p.add_term(Word::single(e(i, t)), minus_one());
                    out.push(p);
                }
            }
        }
    }
    // Family 2: e_ij e_ji e_it − e_it e_ji e_ij − e_it, for t < j.
    for i in r.clone() {
        for j in r.clone() {
            for t in 1..j {
                let mut p = cubic(e(i, j), e(j, i), e(i, t));
                p.add_term(Word::single(e(i, t)), minus_one());
                out.push(p);
            }
        }
    }
    // Family 3: e_ij e_ki e_tk − e_tk e_ki e_ij + e_tj, for t < i.
    for i in r.clone() {
        for j in r.clone() {
            for k in r.clone() {
                for t in 1..i {
                    let mut p = cubic(e(i, j), e(k, i), e(t, k));
                    p.add_term(Word::single(e(t, j)), one());
                    out.push(p);
                }
            }
        }
    }
    // Family 4: e_ij e_ki e_ik − e_ik e_ki e_ij + e_ij, for k < j.
    for i in r.clone() {
        for j in r.clone() {
            for k in 1..j {
                let mut p = cubic(e(i, j), e(k, i), e(i, k));
                p.add_term(Word::single(e(i, j)), one());
                out.push(p);
            }
        }
    }
    // Family 5: e_ij e_kt e_rs − e_rs e_kt e_ij,
    // for r < i, (j ≠ k or t ≠ r), (s ≠ k or t ≠ i).
    for i in r.clone() {
        for j in r.clone() {
            for k in r.clone() {
                for t in r.clone() {
                    for rr in 1..i {
                        for s in r.clone() {
                            if (j != k || t != rr) && (s != k || t != i) {
                                out.push(cubic(e(i, j), e(k, t), e(rr, s)));
                            }
                        }
                    }
                }
            }
        }
    }
    // Family 6: e_ij e_kt e_is − e_is e_kt e_ij,
    // for s < j, (j ≠ k or t ≠ i), (s ≠ k or t ≠ i).
    for i in r.clone() {
        for j in r.clone() {
            for k in r.clone() {
                for t in r.clone() {
                    for s in 1..j {
                        if (j != k || t != i) && (s != k || t != i) {
                            out.push(cubic(e(i, j), e(k, t), e(i, s)));
                        }
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------
// JSON interchange: {"dim": m, "labels": [...], "gamma": [[a,b,c,d,"q"]]}
// with 1-based indices and the scalar text grammar.
// ---------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct TripleSystemJson {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    gamma: Vec<(u16, u16, u16, u16, String)>,
}

impl TripleSystem {
    pub fn to_json(&self) -> serde_json::Value {
        let gamma = self
            .gamma
            .iter()
            .map(|(&(a, b, c, d), v)| (a, b, c, d, v.to_string()))
            .collect();
        serde_json::to_value(TripleSystemJson {
            dim: self.dim(),
            labels: self.labels.clone(),
            gamma,
        })
        .expect("serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self, AjtsError> {
        let raw: TripleSystemJson =
            serde_json::from_str(s).map_err(|e| AjtsError::Invalid(e.to_string()))?;
        if raw.dim == 0 || raw.dim > u16::MAX as usize {
            return Err(AjtsError::Invalid(format!("dim {} out of range", raw.dim)));
        }
        if let Some(labels) = &raw.labels {
            if labels.len() != raw.dim {
                return Err(AjtsError::Invalid(format!(
                    "{} labels for dimension {}",
                    labels.len(),
                    raw.dim
                )));
            }
        }
        let mut sys = TripleSystem::zero(raw.dim);
        sys.labels = raw.labels;
        for (a, b, c, d, scalar) in raw.gamma {
            for idx in [a, b, c, d] {
                if idx == 0 || idx as usize > raw.dim {
                    return Err(AjtsError::Invalid(format!(
                        "gamma index {idx} outside 1..={}",
                        raw.dim
                    )));
                }
            }
            let v: GaussianRational = scalar
                .parse()
                .map_err(|e| AjtsError::Invalid(format!("{e}")))?;
            if sys.gamma.contains_key(&(a, b, c, d)) {
                return Err(AjtsError::Invalid(format!(
                    "duplicate gamma entry ({a},{b},{c},{d})"
                )));
            }
            sys.set_gamma(a as usize, b as usize, c as usize, d as usize, v);
        }
        Ok(sys)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Mat = Vec<Vec<GaussianRational>>;

    fn unit_matrix(n: usize, i: usize, j: usize) -> Mat {
        let mut m = vec![vec![GaussianRational::zero(); n]; n];
        m[i - 1][j - 1] = GaussianRational::one();
        m
    }

    fn mat_mul(a: &Mat, b: &Mat) -> Mat {
        let n = a.len();
        let mut out = vec![vec![GaussianRational::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if a[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    let prod = &a[i][k] * &b[k][j];
                    out[i][j] += &prod;
                }
            }
        }
        out
    }

    fn mat_sub(a: &Mat, b: &Mat) -> Mat {
        a.iter()
            .zip(b)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
            .collect()
    }

    /// Literal `abc − cba` on matrix units: the independent oracle for
    /// the structure constants of `TripleSystem::matrix`.
    fn oracle_triple(n: usize, a: (usize, usize), b: (usize, usize), c: (usize, usize)) -> Mat {
        let (ma, mb, mc) = (
            unit_matrix(n, a.0, a.1),
            unit_matrix(n, b.0, b.1),
            unit_matrix(n, c.0, c.1),
        );
        mat_sub(
            &mat_mul(&mat_mul(&ma, &mb), &mc),
            &mat_mul(&mat_mul(&mc, &mb), &ma),
        )
    }

    fn sparse_to_mat(n: usize, v: &SparseVec) -> Mat {
        let mut out = vec![vec![GaussianRational::zero(); n]; n];
        for (d, c) in v {
            let i = (d - 1) / n;
            let j = (d - 1) % n;
            out[i][j] += c;
        }
        out
    }

    #[test]
    fn matrix_gamma_agrees_with_matrix_products() {
        for n in 1..=4 {
            let sys = TripleSystem::matrix(n);
            let pairs: Vec<(usize, usize)> =
                (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
            for &a in &pairs {
                for &b in &pairs {
                    for &c in &pairs {
                        let expected = oracle_triple(n, a, b, c);
                        let idx = |p: (usize, usize)| (p.0 - 1) * n + p.1;
                        let got = sparse_to_mat(n, &sys.triple(idx(a), idx(b), idx(c)));
                        assert_eq!(got, expected, "n={n} triple {a:?} {b:?} {c:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn matrix_triple_examples() {
        let sys = TripleSystem::matrix(2);
        // <E12, E21, E11> = E11
        assert_eq!(sys.triple(2, 3, 1), vec![(1, GaussianRational::one())]);
        // <a, b, a> = 0 by antisymmetry
        assert_eq!(sys.triple(1, 1, 1), vec![]);
        // <E12, E21, E22>: E12·E21·E22 = 0 while E22·E21·E12 = E22.
        assert_eq!(
            sys.triple(2, 3, 4),
            vec![(4, GaussianRational::integer(-1))]
        );
    }

    #[test]
    fn axiom_check_passes_for_matrix_and_zero_systems() {
        for n in 1..=3 {
            let report = TripleSystem::matrix(n).check_axioms(DEFAULT_QUINTUPLE_CAP);
            assert!(report.passed(), "matrix n={n}: {:?}", report.violation);
            assert!(!report.sampled);
        }
        let report = TripleSystem::zero(2).check_axioms(DEFAULT_QUINTUPLE_CAP);
        assert!(report.passed());
    }

    #[test]
    fn axiom_check_catches_corruption() {
        let mut sys = TripleSystem::matrix(2);
        // Negate one structure constant: <E12, E21, E11> = E11 becomes −E11.
        sys.set_gamma(2, 3, 1, 1, GaussianRational::integer(-1));
        let report = sys.check_axioms(DEFAULT_QUINTUPLE_CAP);
        assert!(!report.passed());
    }

    #[test]
    fn full_relations_for_zero_system_give_down_up_presentation() {
        let sys = TripleSystem::zero(2);
        let rels = sys.envelope_relations(RelationMode::Full).unwrap();
        let a = Symbol::generic(1);
        let b = Symbol::generic(2);
        let expect = |w1: &[Symbol], w2: &[Symbol]| {
            let mut p = NcPoly::word(Word::from_symbols(w1.to_vec()));
            p.add_term(
                Word::from_symbols(w2.to_vec()),
                GaussianRational::integer(-1),
            );
            p
        };
        // x1 x1 x2 − x2 x1 x1 and x1 x2 x2 − x2 x2 x1: b²a = ab², ba² = a²b
        // after making leading words monic.
        assert_eq!(rels.len(), 2);
        assert!(rels.contains(&expect(&[a, a, b], &[b, a, a])));
        assert!(rels.contains(&expect(&[a, b, b], &[b, b, a])));
    }

    #[test]
    fn full_relations_skip_trivial_triples() {
        // a = c contributes nothing for a valid antisymmetric system.
        let sys = TripleSystem::matrix(2);
        let rels = sys.envelope_relations(RelationMode::Full).unwrap();
        for rel in &rels {
            assert!(rel.degree() == Some(3), "unexpected relation {rel}");
        }
        // a < c over 4 basis elements, 4 middle choices: 6·4 = 24.
        assert_eq!(rels.len(), 24);
    }

    #[test]
    fn paper_relation_family_instance() {
        let rels = matrix_relation_families(2);
        // Family 2 at (i,j,t) = (1,2,1): e12 e21 e11 − e11 e21 e12 − e11.
        let expected =
            crate::freealg::parse_poly("e[1,2]*e[2,1]*e[1,1] - e[1,1]*e[2,1]*e[1,2] - e[1,1]")
                .unwrap();
        assert!(rels.contains(&expected));
    }

    #[test]
    fn paper_mode_rejects_generic_systems() {
        let sys = TripleSystem::zero(2);
        assert!(matches!(
            sys.envelope_relations(RelationMode::Paper),
            Err(AjtsError::PaperModeRequiresMatrix)
        ));
    }

    #[test]
    fn eta_transposes() {
        let eta = eta_symbol_map();
        assert_eq!(eta(Symbol::matrix(1, 2)), Symbol::matrix(2, 1));
        assert_eq!(eta(Symbol::matrix(1, 1)), Symbol::matrix(1, 1));
        assert_eq!(eta(Symbol::matrix(3, 2)), Symbol::matrix(2, 3));
    }

    #[test]
    fn json_round_trip() {
        let mut sys = TripleSystem::zero(3);
        sys.set_gamma(1, 2, 3, 1, GaussianRational::ratio(-1, 2));
        sys.set_gamma(3, 2, 1, 1, GaussianRational::ratio(1, 2));
        let text = serde_json::to_string(&sys.to_json()).unwrap();
        let back = TripleSystem::from_json_str(&text).unwrap();
        assert_eq!(back, sys);

        assert!(TripleSystem::from_json_str("{\"dim\":2,\"gamma\":[[1,2,3,1,\"1\"]]}").is_err());
        assert!(TripleSystem::from_json_str("{\"dim\":0,\"gamma\":[]}").is_err());
    }
}
