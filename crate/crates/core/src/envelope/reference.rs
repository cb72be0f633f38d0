//! Closed-form reference data for the matrix-system envelope: the
//! twenty self-reduced Gröbner-basis families and the explicit
//! normal-word basis.  These are fixtures for cross-checking the generic
//! completion engine; nothing in the engine depends on them.

use crate::arith::GaussianRational;
use crate::freealg::{NcPoly, Symbol, Word};

fn e(i: usize, j: usize) -> Symbol {
    Symbol::matrix(i, j)
}

fn w(syms: &[Symbol]) -> Word {
    Word::from_symbols(syms.to_vec())
}

fn poly(terms: &[(&[Symbol], GaussianRational)]) -> NcPoly {
    let mut p = NcPoly::zero();
    for (syms, c) in terms {
        p.add_term(w(syms), c.clone());
    }
    p
}

fn one() -> GaussianRational {
    GaussianRational::one()
}

fn neg() -> GaussianRational {
    GaussianRational::integer(-1)
}

fn half() -> GaussianRational {
    GaussianRational::ratio(1, 2)
}

fn neg_half() -> GaussianRational {
    GaussianRational::ratio(-1, 2)
}

/// The self-reduced Gröbner basis of the matrix-system envelope ideal,
/// written out family by family.  Completion of either relation mode
/// must reproduce exactly this set.
pub fn groebner_basis(n: usize) -> Vec<NcPoly> {
    assert!(n >= 2, "the closed-form basis is stated for n >= 2");
    let mut out = Vec::new();
    let all = 1..=n;
    let non1 = 2..=n;
    let e11 = e(1, 1);

    // Family 0: e_i1 e_11 e_1j − e_1j e_11 e_i1 − e_ij   (i, j ≠ 1)
    for i in non1.clone() {
        for j in non1.clone() {
            out.push(poly(&[
                (&[e(i, 1), e11, e(1, j)], one()),
                (&[e(1, j), e11, e(i, 1)], neg()),
                (&[e(i, j)], neg()),
            ]));
        }
    }
    // Family 1: e_ij e_jk − e_i1 e_1k   (k ≠ i, j ≠ 1)
    for i in all.clone() {
        for j in non1.clone() {
            for k in all.clone() {
                if k != i {
                    out.push(poly(&[
                        (&[e(i, j), e(j, k)], one()),
                        (&[e(i, 1), e(1, k)], neg()),
                    ]));
                }
            }
        }
    }
    // Family 2: e_ij e_ki − e_1j e_k1   (j ≠ k, i ≠ 1)
    for i in non1.clone() {
        for j in all.clone() {
            for k in all.clone() {
                if j != k {
                    out.push(poly(&[
                        (&[e(i, j), e(k, i)], one()),
                        (&[e(1, j), e(k, 1)], neg()),
                    ]));
                }
            }
        }
    }
    // Family 3: e_ij e_kl   (i ≠ l, j ≠ k)
    for i in all.clone() {
        for j in all.clone() {
            for k in all.clone() {
                for l in all.clone() {
                    if i != l && j != k {
                        out.push(poly(&[(&[e(i, j), e(k, l)], one())]));
                    }
                }
            }
        }
    }
    // Family 4: e_ij e_ji − e_i1 e_1i − e_1j e_j1 + e_11²   (i, j ≠ 1)
    for i in non1.clone() {
        for j in non1.clone() {
            out.push(poly(&[
                (&[e(i, j), e(j, i)], one()),
                (&[e(i, 1), e(1, i)], neg()),
                (&[e(1, j), e(j, 1)], neg()),
                (&[e11, e11], one()),
            ]));
        }
    }
    // Family 5: e_i1 e_1j e_j1 − e_11² e_i1 − e_i1   (i ≠ 1, j ≠ i)
    for i in non1.clone() {
        for j in all.clone() {
            if j != i {
                out.push(poly(&[
                    (&[e(i, 1), e(1, j), e(j, 1)], one()),
                    (&[e11, e11, e(i, 1)], neg()),
                    (&[e(i, 1)], neg()),
                ]));
            }
        }
    }
    // Family 6: e_j1 e_1j e_i1 − e_11² e_i1   (i, j ≠ 1, i ≠ j)
    for i in non1.clone() {
        for j in non1.clone() {
            if i != j {
                out.push(poly(&[
                    (&[e(j, 1), e(1, j), e(i, 1)], one()),
                    (&[e11, e11, e(i, 1)], neg()),
                ]));
            }
        }
    }
    // Family 7: e_1i e_i1 e_1j − e_11² e_1j   (i, j ≠ 1, i ≠ j)
    for i in non1.clone() {
        for j in non1.clone() {
            if i != j {
                out.push(poly(&[
                    (&[e(1, i), e(i, 1), e(1, j)], one()),
                    (&[e11, e11, e(1, j)], neg()),
                ]));
            }
        }
    }
    // Family 8: e_1i e_j1 e_1j − e_11² e_1i + e_1i   (i ≠ j, i ≠ 1)
    for i in non1.clone() {
        for j in all.clone() {
            if j != i {
                out.push(poly(&[
                    (&[e(1, i), e(j, 1), e(1, j)], one()),
                    (&[e11, e11, e(1, i)], neg()),
                    (&[e(1, i)], one()),
                ]));
            }
        }
    }
    // Family 9: e_i1 e_1i e_i1 − 2 e_11² e_i1 − e_i1   (i ≠ 1)
    for i in non1.clone() {
        out.push(poly(&[
            (&[e(i, 1), e(1, i), e(i, 1)], one()),
            (&[e11, e11, e(i, 1)], GaussianRational::integer(-2)),
            (&[e(i, 1)], neg()),
        ]));
    }
    // Family 10: e_1j e_j1 e_1j − 2 e_11² e_1j + e_1j   (j ≠ 1)
    for j in non1.clone() {
        out.push(poly(&[
            (&[e(1, j), e(j, 1), e(1, j)], one()),
            (&[e11, e11, e(1, j)], GaussianRational::integer(-2)),
            (&[e(1, j)], one()),
        ]));
    }
    // Family 11: e_i1 e_1j e_k1   (i ≠ j, k ≠ j)
    for i in all.clone() {
        for j in all.clone() {
            for k in all.clone() {
                if i != j && k != j {
                    out.push(poly(&[(&[e(i, 1), e(1, j), e(k, 1)], one())]));
                }
            }
        }
    }
    // Family 12: e_1i e_j1 e_1k   (i ≠ j, k ≠ j)
    for i in all.clone() {
        for j in all.clone() {
            for k in all.clone() {
                if i != j && k != j {
                    out.push(poly(&[(&[e(1, i), e(j, 1), e(1, k)], one())]));
                }
            }
        }
    }
    // Families 13–16: the degree-3 words mixing e_11 with e_1i, e_i1
    // all reduce to ±½(e_11³ ± e_11)   (i ≠ 1).
    for i in non1.clone() {
        out.push(poly(&[
            (&[e11, e(1, i), e(i, 1)], one()),
            (&[e11, e11, e11], neg_half()),
            (&[e11], neg_half()),
        ]));
        out.push(poly(&[
            (&[e11, e(i, 1), e(1, i)], one()),
            (&[e11, e11, e11], neg_half()),
            (&[e11], half()),
        ]));
        out.push(poly(&[
            (&[e(1, i), e(i, 1), e11], one()),
            (&[e11, e11, e11], neg_half()),
            (&[e11], neg_half()),
        ]));
        out.push(poly(&[
            (&[e(i, 1), e(1, i), e11], one()),
            (&[e11, e11, e11], neg_half()),
            (&[e11], half()),
        ]));
    }
    // Families 17–18: e_11³ e_1i − e_11 e_1i and e_11³ e_i1 + e_11 e_i1.
    for i in non1.clone() {
        out.push(poly(&[
            (&[e11, e11, e11, e(1, i)], one()),
            (&[e11, e(1, i)], neg()),
        ]));
        out.push(poly(&[
            (&[e11, e11, e11, e(i, 1)], one()),
            (&[e11, e(i, 1)], one()),
        ]));
    }
    // Family 19: e_11⁵ − e_11.
    out.push(poly(&[
        (&[e11, e11, e11, e11, e11], one()),
        (&[e11], neg()),
    ]));
    out
}

/// The explicit normal-word basis of the envelope, in ascending deglex
/// order: 1, all e_ij, e_i1 e_1j, e_1i e_j1 ((i,j) ≠ (1,1)),
/// e_1i e_11 e_j1 (j ≠ 1), e_11² e_1j, and e_11⁴: in total 4n²+1 words.
pub fn basis_words(n: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for i in 1..=n {
        for j in 1..=n {
            out.push(w(&[e(i, j)]));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            out.push(w(&[e(i, 1), e(1, j)]));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            if (i, j) != (1, 1) {
                out.push(w(&[e(1, i), e(j, 1)]));
            }
        }
    }
    for i in 1..=n {
        for j in 2..=n {
            out.push(w(&[e(1, i), e(1, 1), e(j, 1)]));
        }
    }
    for j in 1..=n {
        out.push(w(&[e(1, 1), e(1, 1), e(1, j)]));
    }
    out.push(Word::power(e(1, 1), 4));
    out.sort();
    out
}
