//! Exact linear algebra over ℚ(i) and the center of the envelope,
//! computed from scratch as the nullspace of stacked commutator
//! equations.

use rayon::prelude::*;

use crate::arith::GaussianRational;
use crate::envelope::{AlgElement, EnvelopeAlgebra};

/// A dense system of linear equations `A·x = 0` over ℚ(i).
#[derive(Debug, Clone)]
pub struct LinearSystem {
    rows: Vec<Vec<GaussianRational>>,
    unknowns: usize,
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> Self {
        LinearSystem {
            rows: Vec::new(),
            unknowns,
        }
    }

    pub fn push_row(&mut self, row: Vec<GaussianRational>) {
        assert_eq!(row.len(), self.unknowns);
        self.rows.push(row);
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>, unknowns: usize) -> Self {
        for r in &rows {
            assert_eq!(r.len(), unknowns);
        }
        LinearSystem { rows, unknowns }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    /// Pivoting is deterministic: first nonzero column, row of minimal
    /// index (exact arithmetic needs no magnitude pivoting).
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.unknowns {
            let Some(src) = (row..self.rows.len()).find(|&r| !self.rows[r][col].is_zero()) else {
                continue;
            };
            self.rows.swap(row, src);
            let inv = self.rows[row][col].inv().expect("nonzero pivot");
            for c in &mut self.rows[row] {
                *c = &*c * &inv;
            }
            let pivot_row = self.rows[row].clone();
            for (r, other) in self.rows.iter_mut().enumerate() {
                if r == row || other[col].is_zero() {
                    continue;
                }
                let factor = other[col].clone();
                for (dst, p) in other.iter_mut().zip(&pivot_row) {
                    *dst -= &(&factor * p);
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows.len() {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.rref().len()
    }

    /// A reduced-echelon basis of `{x : A·x = 0}`: one vector per free
    /// column, with a 1 in that column and zeros in the other free
    /// columns, ordered by ascending free column.
    pub fn nullspace(&self) -> Vec<Vec<GaussianRational>> {
        let mut work = self.clone();
        let pivots = work.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.unknowns];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.unknowns {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut vec = vec![GaussianRational::zero(); self.unknowns];
            vec[free] = GaussianRational::one();
            for (col, slot) in pivot_of_col.iter().enumerate() {
                if let Some(r) = slot {
                    vec[col] = -&work.rows[*r][free];
                }
            }
            basis.push(vec);
        }
        basis
    }
}

/// Whether `target` lies in the span of `vectors` (all over the same
/// coordinate space).
pub fn in_span(vectors: &[Vec<GaussianRational>], target: &[GaussianRational]) -> bool {
    let unknowns = target.len();
    let base = LinearSystem::from_rows(vectors.to_vec(), unknowns).rank();
    let mut rows = vectors.to_vec();
    rows.push(target.to_vec());
    LinearSystem::from_rows(rows, unknowns).rank() == base
}

/// Exact basis of the center `{z : z·u = u·z for all u}`, computed as
/// the nullspace of the commutator equations against the n² generators
/// (sufficient because the generators generate the algebra).  With
/// `probe_all_basis` the equations are stacked against every basis
/// element instead; the nullity must not change.
pub fn center_basis(alg: &EnvelopeAlgebra, probe_all_basis: bool) -> Vec<AlgElement> {
    let dim = alg.dim();
    let n = alg.n();
    let probes: Vec<AlgElement> = if probe_all_basis {
        (0..dim).map(|k| alg.basis_element(k)).collect()
    } else {
        (1..=n)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .map(|(i, j)| alg.generator(i, j))
            .collect()
    };
    // One block of `dim` equations per probe u: coordinates of
    // b_k·u − u·b_k as a linear form in the coefficients of x = Σ ζ_k b_k.
    let blocks: Vec<Vec<Vec<GaussianRational>>> = probes
        .par_iter()
        .map(|u| {
            let mut block = vec![vec![GaussianRational::zero(); dim]; dim];
            #[allow(clippy::needless_range_loop)] // k is the unknown's column, not a row index
            for k in 0..dim {
                let b = alg.basis_element(k);
                let comm = alg.multiply(&b, u).sub(&alg.multiply(u, &b));
                for (out_coord, c) in comm.coords().iter().enumerate() {
                    if !c.is_zero() {
                        block[out_coord][k] = c.clone();
                    }
                }
            }
            block
        })
        .collect();
    let mut system = LinearSystem::new(dim);
    for block in blocks {
        for row in block {
            system.push_row(row);
        }
    }
    system
        .nullspace()
        .into_iter()
        .map(AlgElement::from_coords)
        .collect()
}

/// True when `x` commutes with every generator (equivalently with every
/// element, since the generators generate).
pub fn is_central(alg: &EnvelopeAlgebra, x: &AlgElement) -> bool {
    let n = alg.n();
    for i in 1..=n {
        for j in 1..=n {
            let u = alg.generator(i, j);
            if alg.multiply(x, &u) != alg.multiply(&u, x) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use num_bigint::BigInt;

    fn q(k: i64) -> GaussianRational {
        GaussianRational::integer(k)
    }

    fn qr(num: i64, den: i64) -> GaussianRational {
        GaussianRational::new(
            Rational::new(BigInt::from(num), BigInt::from(den)),
            Rational::new(BigInt::from(0), BigInt::from(1)),
        )
    }

    #[test]
    fn nullspace_of_identity_is_empty() {
        let rows = (0..4)
            .map(|i| (0..4).map(|j| q((i == j) as i64)).collect())
            .collect();
        let sys = LinearSystem::from_rows(rows, 4);
        assert!(sys.nullspace().is_empty());
        assert_eq!(sys.rank(), 4);
    }

    #[test]
    fn nullspace_of_zero_matrix_is_standard_basis() {
        let sys = LinearSystem::from_rows(vec![vec![q(0); 3]; 2], 3);
        let ns = sys.nullspace();
        assert_eq!(ns.len(), 3);
        for (k, v) in ns.iter().enumerate() {
            for (c, x) in v.iter().enumerate() {
                assert_eq!(*x, q((c == k) as i64));
            }
        }
    }

    #[test]
    fn four_equations_in_eight_unknowns() {
        // Unknowns ordered (ζ, ζ₄, ζ₂, ζ₁, ζ₁', ζ₃', ζ₄', ζ₅):
        //   ζ₁' − ζ₁ + ζ₃'            = 0
        //   ζ₂ − 2ζ₃'                 = 0
        //   ζ₄' + (n−2)ζ₄ − (n−2)/n ζ = 0
        //   ζ₅ − ζ₄ + 2/n ζ           = 0
        let n = 3i64;
        let z = q(0);
        let rows = vec![
            vec![
                z.clone(),
                z.clone(),
                z.clone(),
                q(-1),
                q(1),
                q(1),
                z.clone(),
                z.clone(),
            ],
            vec![
                z.clone(),
                z.clone(),
                q(1),
                z.clone(),
                z.clone(),
                q(-2),
                z.clone(),
                z.clone(),
            ],
            vec![
                qr(-(n - 2), n),
                q(n - 2),
                z.clone(),
                z.clone(),
                z.clone(),
                z.clone(),
                q(1),
                z.clone(),
            ],
            vec![
                qr(2, n),
                q(-1),
                z.clone(),
                z.clone(),
                z.clone(),
                z.clone(),
                z.clone(),
                q(1),
            ],
        ];
        let sys = LinearSystem::from_rows(rows, 8);
        let ns = sys.nullspace();
        assert_eq!(ns.len(), 4);

        // The four printed solution tuples, in the same unknown order.
        let solutions = [
            // (ζ,ζ₄,ζ₂,ζ₁) = (1,0,0,0) → (ζ₁',ζ₃',ζ₄',ζ₅) = (0,0,(n−2)/n,−2/n)
            vec![
                q(1),
                z.clone(),
                z.clone(),
                z.clone(),
                z.clone(),
                z.clone(),
                qr(n - 2, n),
                qr(-2, n),
            ],
            // (0,1,0,0) → (0,0,2−n,1)
            vec![
                z.clone(),
                q(1),
                z.clone(),
                z.clone(),
                z.clone(),
                z.clone(),
                q(2 - n),
                q(1),
            ],
            // (0,0,1,0) → (−1/2,1/2,0,0)
            vec![
                z.clone(),
                z.clone(),
                q(1),
                z.clone(),
                qr(-1, 2),
                qr(1, 2),
                z.clone(),
                z.clone(),
            ],
            // (0,0,0,1) → (1,0,0,0)
            vec![
                z.clone(),
                z.clone(),
                z.clone(),
                q(1),
                q(1),
                z.clone(),
                z.clone(),
                z.clone(),
            ],
        ];
        for sol in &solutions {
            // Direct substitution into the system.
            for row in 0..4 {
                let mut acc = GaussianRational::zero();
                let r = [&sys.rows[row]];
                for (c, coef) in r[0].iter().enumerate() {
                    acc += &(coef * &sol[c]);
                }
                assert!(acc.is_zero(), "row {row} not satisfied");
            }
            assert!(in_span(&ns, sol));
        }
        // And conversely the computed basis lies in the printed span.
        for v in &ns {
            assert!(in_span(&solutions, v));
        }
    }
}
