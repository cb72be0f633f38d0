//! Explicit decomposition of the envelope into one copy of the ground
//! field and four full matrix blocks: matrix-unit families, the
//! resolution of the identity, the four degree-n irreducible
//! representations with trace-certified inequivalence, and the
//! semisimplicity conclusion.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::ajts::TripleSystem;
use crate::arith::GaussianRational;
use crate::center::LinearSystem;
use crate::envelope::{AlgElement, EnvelopeAlgebra};
use crate::freealg::{NcPoly, Symbol, Word};

// ---------------------------------------------------------------------
// Dense n×n matrices over ℚ(i), used by the representation checks.
// These run on plain matrices, independent of the envelope machinery.
// ---------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<GaussianRational>,
}

impl SquareMatrix {
    pub fn zero(n: usize) -> Self {
        SquareMatrix {
            n,
            data: vec![GaussianRational::zero(); n * n],
        }
    }

    /// The matrix unit with a single 1 in row `i`, column `j` (1-based).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(n);
        *m.at_mut(i, j) = GaussianRational::one();
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &GaussianRational {
        &self.data[(i - 1) * self.n + (j - 1)]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut GaussianRational {
        &mut self.data[(i - 1) * self.n + (j - 1)]
    }

    pub fn scaled(&self, c: &GaussianRational) -> Self {
        SquareMatrix {
            n: self.n,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        SquareMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        SquareMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 1..=n {
            for k in 1..=n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 1..=n {
                    let prod = a * other.at(k, j);
                    *out.at_mut(i, j) += &prod;
                }
            }
        }
        out
    }

    pub fn trace(&self) -> GaussianRational {
        let mut t = GaussianRational::zero();
        for i in 1..=self.n {
            t += self.at(i, i);
        }
        t
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.n);
        for i in 1..=self.n {
            for j in 1..=self.n {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            let row: Vec<String> = (1..=self.n).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------
// Representations of the matrix triple system on n×n matrices.
// ---------------------------------------------------------------------

/// A linear map of the matrix triple system into n×n matrices, given by
/// its images on the basis units (1-based triple-system index order).
#[derive(Debug, Clone)]
pub struct Representation {
    pub name: String,
    images: Vec<SquareMatrix>,
}

impl Representation {
    pub fn new(name: impl Into<String>, images: Vec<SquareMatrix>) -> Self {
        Representation {
            name: name.into(),
            images,
        }
    }

    pub fn image(&self, basis_index: usize) -> &SquareMatrix {
        &self.images[basis_index - 1]
    }

    fn image_of_sparse(&self, n: usize, v: &[(usize, GaussianRational)]) -> SquareMatrix {
        let mut out = SquareMatrix::zero(n);
        for (idx, c) in v {
            out = out.add(&self.image(*idx).scaled(c));
        }
        out
    }
}

/// The four inequivalent degree-n representations:
/// `E ↦ E`, `E ↦ −E`, `E_{ij} ↦ i·E_{ji}`, `E_{ij} ↦ −i·E_{ji}`.
pub fn standard_representations(n: usize) -> Vec<Representation> {
    let imag = GaussianRational::i();
    let neg = GaussianRational::integer(-1);
    let neg_imag = -GaussianRational::i();
    let mut images: [Vec<SquareMatrix>; 4] = Default::default();
    for i in 1..=n {
        for j in 1..=n {
            let e = SquareMatrix::unit(n, i, j);
            let et = SquareMatrix::unit(n, j, i);
            images[0].push(e.clone());
            images[1].push(e.scaled(&neg));
            images[2].push(et.scaled(&imag));
            images[3].push(et.scaled(&neg_imag));
        }
    }
    let [a, b, c, d] = images;
    vec![
        Representation::new("natural", a),
        Representation::new("negated", b),
        Representation::new("i-transpose", c),
        Representation::new("minus-i-transpose", d),
    ]
}

#[derive(Debug, Clone, Error)]
pub enum DecompError {
    #[error("representation `{name}` fails on triple {triple:?}")]
    Representation {
        name: String,
        triple: (usize, usize, usize),
        lhs: SquareMatrix,
        rhs: SquareMatrix,
    },
    #[error("no trace witness separates `{left}` and `{right}`")]
    NoTraceWitness { left: String, right: String },
    #[error("unit relation fails: {left} · {right}")]
    UnitRelation {
        left: String,
        right: String,
        got: NcPoly,
        expected: NcPoly,
    },
    #[error("resolution of the identity fails for `{identity}`")]
    Resolution { identity: String, defect: NcPoly },
    #[error("unit coordinate matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
}

/// Checks `ρ(⟨abc⟩) = ρ(a)ρ(b)ρ(c) − ρ(c)ρ(b)ρ(a)` on every basis
/// triple of the system; returns the number of triples checked.
pub fn check_representation(sys: &TripleSystem, rho: &Representation) -> Result<u64, DecompError> {
    let n = sys
        .is_matrix()
        .expect("representations act on the matrix system");
    let m = sys.dim();
    let failure = (0..m * m * m).into_par_iter().find_map_first(|flat| {
        let (a, b, c) = (flat / (m * m) + 1, (flat / m) % m + 1, flat % m + 1);
        let lhs = rho.image_of_sparse(n, &sys.triple(a, b, c));
        let abc = rho.image(a).mul(rho.image(b)).mul(rho.image(c));
        let cba = rho.image(c).mul(rho.image(b)).mul(rho.image(a));
        let rhs = abc.sub(&cba);
        (lhs != rhs).then(|| DecompError::Representation {
            name: rho.name.clone(),
            triple: (a, b, c),
            lhs,
            rhs,
        })
    });
    match failure {
        Some(err) => Err(err),
        None => Ok((m * m * m) as u64),
    }
}

/// A basis element on which two representations have different traces.
#[derive(Debug, Clone)]
pub struct TraceWitness {
    pub basis_index: usize,
    pub left_trace: GaussianRational,
    pub right_trace: GaussianRational,
}

/// Certifies inequivalence by exhibiting a basis element with distinct
/// traces (trace is invariant under conjugation).
pub fn check_inequivalence(
    sys: &TripleSystem,
    left: &Representation,
    right: &Representation,
) -> Result<TraceWitness, DecompError> {
    assert!(
        !std::ptr::eq(left, right),
        "inequivalence is a claim about two distinct representations"
    );
    for a in 1..=sys.dim() {
        let lt = left.image(a).trace();
        let rt = right.image(a).trace();
        if lt != rt {
            return Ok(TraceWitness {
                basis_index: a,
                left_trace: lt,
                right_trace: rt,
            });
        }
    }
    Err(DecompError::NoTraceWitness {
        left: left.name.clone(),
        right: right.name.clone(),
    })
}

// ---------------------------------------------------------------------
// Matrix units inside the envelope.
// ---------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitKind {
    B(u8),
    D(u8),
    A,
}

impl fmt::Display for UnitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitKind::B(k) => write!(f, "B{k}"),
            UnitKind::D(k) => write!(f, "D{k}"),
            UnitKind::A => write!(f, "A"),
        }
    }
}

/// One family of matrix units: n×n elements for the B/D kinds, a single
/// idempotent for the A kind.
#[derive(Debug, Clone)]
pub struct MatrixUnitFamily {
    pub kind: UnitKind,
    pub block_size: usize,
    units: Vec<AlgElement>,
}

impl MatrixUnitFamily {
    /// Unit at 1-based `(i, j)`; the A family only has `(1, 1)`.
    pub fn unit(&self, i: usize, j: usize) -> &AlgElement {
        &self.units[(i - 1) * self.block_size + (j - 1)]
    }

    pub fn units(&self) -> &[AlgElement] {
        &self.units
    }

    /// Σ_i U_{i,i}, the idempotent projecting onto this block.
    pub fn diagonal_sum(&self, dim: usize) -> AlgElement {
        let mut acc = AlgElement::zero(dim);
        for i in 1..=self.block_size {
            acc = acc.add(self.unit(i, i));
        }
        acc
    }
}

fn sym(i: usize, j: usize) -> Symbol {
    Symbol::matrix(i, j)
}

fn word(syms: &[Symbol]) -> Word {
    Word::from_symbols(syms.to_vec())
}

fn term(c: GaussianRational, syms: &[Symbol]) -> NcPoly {
    NcPoly::monomial(word(syms), c)
}

/// Builds the five unit families from their closed-form expressions over
/// the envelope basis.
pub fn matrix_units(alg: &EnvelopeAlgebra) -> Vec<MatrixUnitFamily> {
    let n = alg.n();
    let e11 = sym(1, 1);
    let quarter = GaussianRational::ratio(1, 4);
    let half = GaussianRational::ratio(1, 2);
    let imag = GaussianRational::i();

    let b_unit = |k: u8, i: usize, j: usize| -> NcPoly {
        let sgn = GaussianRational::integer(if k == 0 { 1 } else { -1 });
        let p = if (i, j) == (1, 1) {
            // ¼(e11⁴ + e11² ± (e11³ + e11))
            term(GaussianRational::one(), &[e11; 4])
                + term(GaussianRational::one(), &[e11; 2])
                + term(sgn.clone(), &[e11; 3])
                + term(sgn, &[e11])
        } else if i == 1 {
            // 4·(e11 e_{1j} ± e11² e_{1j})
            (term(GaussianRational::one(), &[e11, sym(1, j)]) + term(sgn, &[e11, e11, sym(1, j)]))
                .scaled(&GaussianRational::integer(4))
        } else if j == 1 {
            // ¼(e_{i1} e11 ± (e11² e_{i1} + e_{i1}))
            term(GaussianRational::one(), &[sym(i, 1), e11])
                + term(sgn.clone(), &[e11, e11, sym(i, 1)])
                + term(sgn, &[sym(i, 1)])
        } else if i == j {
            // 2·(½(e11⁴ − e11²) + e_{i1} e_{1i} ± (e_{1i} e11 e_{i1} + e_{ii}))
            (term(half.clone(), &[e11; 4])
                + term(-half.clone(), &[e11; 2])
                + term(GaussianRational::one(), &[sym(i, 1), sym(1, i)])
                + term(sgn.clone(), &[sym(1, i), e11, sym(i, 1)])
                + term(sgn, &[sym(i, i)]))
            .scaled(&GaussianRational::integer(2))
        } else {
            // 2·(e_{i1} e_{1j} ± (e_{1j} e11 e_{i1} + e_{ij}))
            (term(GaussianRational::one(), &[sym(i, 1), sym(1, j)])
                + term(sgn.clone(), &[sym(1, j), e11, sym(i, 1)])
                + term(sgn, &[sym(i, j)]))
            .scaled(&GaussianRational::integer(2))
        };
        p.scaled(&quarter)
    };

    let d_unit = |k: u8, i: usize, j: usize| -> NcPoly {
        let sgn_i = if k == 0 { imag.clone() } else { -&imag };
        let p = if (i, j) == (1, 1) {
            // ¼(e11⁴ − e11² ± i(e11 − e11³))
            term(GaussianRational::one(), &[e11; 4])
                + term(GaussianRational::integer(-1), &[e11; 2])
                + term(sgn_i.clone(), &[e11])
                + term(-sgn_i, &[e11; 3])
        } else if i == 1 {
            // −2·(e11 e_{j1} ± i e11² e_{j1})
            (term(GaussianRational::one(), &[e11, sym(j, 1)]) + term(sgn_i, &[e11, e11, sym(j, 1)]))
                .scaled(&GaussianRational::integer(-2))
        } else if j == 1 {
            // −2·(e_{1i} e11 ± i(e11² e_{1i} − e_{1i}))
            (term(GaussianRational::one(), &[sym(1, i), e11])
                + term(sgn_i.clone(), &[e11, e11, sym(1, i)])
                + term(-sgn_i, &[sym(1, i)]))
            .scaled(&GaussianRational::integer(-2))
        } else if i == j {
            // 2·(½(e11⁴ + e11²) − e_{1i} e_{i1} ∓ i e_{1i} e11 e_{i1})
            (term(half.clone(), &[e11; 4])
                + term(half.clone(), &[e11; 2])
                + term(GaussianRational::integer(-1), &[sym(1, i), sym(i, 1)])
                + term(-sgn_i, &[sym(1, i), e11, sym(i, 1)]))
            .scaled(&GaussianRational::integer(2))
        } else {
            // −2·(e_{1i} e_{j1} ± i e_{1i} e11 e_{j1})
            (term(GaussianRational::one(), &[sym(1, i), sym(j, 1)])
                + term(sgn_i, &[sym(1, i), e11, sym(j, 1)]))
            .scaled(&GaussianRational::integer(-2))
        };
        p.scaled(&quarter)
    };

    let mut families = Vec::new();
    for k in 0u8..=1 {
        let mut units = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                units.push(alg.from_poly(&b_unit(k, i, j)));
            }
        }
        families.push(MatrixUnitFamily {
            kind: UnitKind::B(k),
            block_size: n,
            units,
        });
    }
    for k in 0u8..=1 {
        let mut units = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                units.push(alg.from_poly(&d_unit(k, i, j)));
            }
        }
        families.push(MatrixUnitFamily {
            kind: UnitKind::D(k),
            block_size: n,
            units,
        });
    }
    // A = Σ_{i≥2} e_{1i} e_{i1} − Σ_{i≥2} e_{i1} e_{1i} − n·e11⁴ + 1.
    let mut a = NcPoly::constant(GaussianRational::one());
    a.add_term(word(&[e11; 4]), GaussianRational::integer(-(n as i64)));
    for i in 2..=n {
        a.add_term(word(&[sym(1, i), sym(i, 1)]), GaussianRational::one());
        a.add_term(word(&[sym(i, 1), sym(1, i)]), GaussianRational::integer(-1));
    }
    families.push(MatrixUnitFamily {
        kind: UnitKind::A,
        block_size: 1,
        units: vec![alg.from_poly(&a)],
    });
    families
}

/// Exhaustively multiplies all pairs of units: the matrix-unit law
/// within each family, annihilation across distinct families, and
/// idempotence of the A unit.  Returns the number of pairs checked.
pub fn verify_unit_relations(
    alg: &EnvelopeAlgebra,
    families: &[MatrixUnitFamily],
) -> Result<u64, DecompError> {
    let mut flat: Vec<(UnitKind, usize, usize, &AlgElement)> = Vec::new();
    for f in families {
        for i in 1..=f.block_size {
            for j in 1..=f.block_size {
                flat.push((f.kind, i, j, f.unit(i, j)));
            }
        }
    }
    let family_of = |kind: UnitKind| -> &MatrixUnitFamily {
        families
            .iter()
            .find(|f| f.kind == kind)
            .expect("known kind")
    };
    let failure = flat
        .par_iter()
        .flat_map(|left| flat.par_iter().map(move |right| (left, right)))
        .find_map_first(|(&(k1, i1, j1, u1), &(k2, i2, j2, u2))| {
            let got = alg.multiply(u1, u2);
            let expected = if k1 == k2 && j1 == i2 {
                family_of(k1).unit(i1, j2).clone()
            } else {
                AlgElement::zero(alg.dim())
            };
            (got != expected).then(|| DecompError::UnitRelation {
                left: format!("{k1}[{i1},{j1}]"),
                right: format!("{k2}[{i2},{j2}]"),
                got: alg.to_poly(&got),
                expected: alg.to_poly(&expected),
            })
        });
    match failure {
        Some(err) => Err(err),
        None => Ok((flat.len() * flat.len()) as u64),
    }
}

/// Checks that the diagonal units resolve the identity and that every
/// generator is reconstructed by its closed-form combination of units.
pub fn resolution_of_identity(
    alg: &EnvelopeAlgebra,
    families: &[MatrixUnitFamily],
) -> Result<(), DecompError> {
    let n = alg.n();
    let dim = alg.dim();
    let unit_of = |kind: UnitKind, i: usize, j: usize| -> &AlgElement {
        families
            .iter()
            .find(|f| f.kind == kind)
            .expect("known kind")
            .unit(i, j)
    };
    let imag = GaussianRational::i();

    let mut sum = AlgElement::zero(dim);
    for f in families {
        sum = sum.add(&f.diagonal_sum(dim));
    }
    let check = |name: &str, got: AlgElement, expected: AlgElement| -> Result<(), DecompError> {
        if got == expected {
            Ok(())
        } else {
            Err(DecompError::Resolution {
                identity: name.to_string(),
                defect: alg.to_poly(&got.sub(&expected)),
            })
        }
    };
    check("1", sum, alg.unit())?;

    // Generator reconstructions: combinations of B⁰−B¹ and D⁰−D¹ images.
    let combine = |cb: GaussianRational, bi: usize, bj: usize, di: usize, dj: usize| {
        let b = unit_of(UnitKind::B(0), bi, bj)
            .sub(unit_of(UnitKind::B(1), bi, bj))
            .scaled(&cb);
        let d = unit_of(UnitKind::D(0), di, dj)
            .sub(unit_of(UnitKind::D(1), di, dj))
            .scaled(&-&imag);
        b.add(&d)
    };
    for i in 1..=n {
        for j in 1..=n {
            let expected = alg.generator(i, j);
            let name = format!("e[{i},{j}]");
            let got = if (i, j) == (1, 1) {
                combine(GaussianRational::one(), 1, 1, 1, 1)
            } else if i == 1 {
                combine(GaussianRational::ratio(1, 2), 1, j, j, 1)
            } else if j == 1 {
                combine(GaussianRational::integer(2), i, 1, 1, i)
            } else {
                combine(GaussianRational::one(), i, j, j, i)
            };
            check(&name, got, expected)?;
        }
    }
    Ok(())
}

/// Summary of the block decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedderburnSummary {
    pub blocks: Vec<usize>,
    pub dim: usize,
    pub unit_pairs_checked: u64,
}

/// Runs every decomposition check (unit relations, resolution of the
/// identity, full rank of the unit coordinate matrix) and returns
/// the block sizes `[1, n, n, n, n]`.
pub fn wedderburn_summary(alg: &EnvelopeAlgebra) -> Result<WedderburnSummary, DecompError> {
    let families = matrix_units(alg);
    let pairs = verify_unit_relations(alg, &families)?;
    resolution_of_identity(alg, &families)?;

    let dim = alg.dim();
    let rows: Vec<Vec<GaussianRational>> = families
        .iter()
        .flat_map(|f| f.units().iter().map(|u| u.coords().to_vec()))
        .collect();
    let rank = LinearSystem::from_rows(rows, dim).rank();
    if rank != dim {
        return Err(DecompError::RankDeficient {
            rank,
            expected: dim,
        });
    }
    let n = alg.n();
    assert_eq!(1 + 4 * n * n, dim);
    Ok(WedderburnSummary {
        blocks: vec![1, n, n, n, n],
        dim,
        unit_pairs_checked: pairs,
    })
}
