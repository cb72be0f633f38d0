//! Center and decomposition checks: the five-dimensional center with
//! its printed basis, the matrix-unit laws, the resolution of the
//! identity, the four irreducible representations, and semisimplicity
//! via the full-rank unit span.

use ncgb::ajts::{RelationMode, TripleSystem};
use ncgb::arith::GaussianRational;
use ncgb::center::{center_basis, in_span, is_central};
use ncgb::decomp::{
    check_inequivalence, check_representation, matrix_units, resolution_of_identity,
    standard_representations, verify_unit_relations, wedderburn_summary, Representation,
    SquareMatrix, UnitKind,
};
use ncgb::envelope::{AlgElement, EnvelopeAlgebra};
use ncgb::freealg::parse_poly;

fn build(n: usize) -> EnvelopeAlgebra {
    EnvelopeAlgebra::build(n, RelationMode::Full, 9).unwrap()
}

/// The five printed central elements, as coefficient vectors.
fn printed_center(alg: &EnvelopeAlgebra) -> Vec<AlgElement> {
    let n = alg.n() as i64;
    let mut z1 = format!("{}/{}*e[1,1]^2 + e[1,1]^4", n - 2, n);
    let mut z2 = format!("{}*e[1,1]^2", 2 - n);
    let mut z3 = "-1/2*e[1,1] + 1/2*e[1,1]^3".to_string();
    let mut z4 = String::new();
    for i in 2..=alg.n() {
        z1 += &format!(" - 2/{n}*e[1,{i}]*e[{i},1]");
        z2 += &format!(" + e[1,{i}]*e[{i},1] + e[{i},1]*e[1,{i}]");
        z3 += &format!(" + e[1,{i}]*e[1,1]*e[{i},1]");
    }
    for i in 1..=alg.n() {
        z4 += &format!(" + e[{i},{i}]");
    }
    [z1, z2, z3, z4, "1".to_string()]
        .iter()
        .map(|s| alg.from_poly(&parse_poly(s).unwrap()))
        .collect()
}

#[test]
fn center_has_dimension_five() {
    for n in [2usize, 3] {
        let alg = build(n);
        let basis = center_basis(&alg, false);
        assert_eq!(basis.len(), 5, "n={n}");
        // Probing against all basis elements must give the same nullity.
        assert_eq!(center_basis(&alg, true).len(), 5, "n={n} (all probes)");
        for z in &basis {
            assert!(is_central(&alg, z));
        }
    }
}

#[test]
fn printed_center_elements_span_the_computed_center() {
    for n in [2usize, 3] {
        let alg = build(n);
        let computed = center_basis(&alg, false);
        let printed = printed_center(&alg);
        for z in &printed {
            assert!(is_central(&alg, z), "n={n}");
        }
        let computed_rows: Vec<Vec<GaussianRational>> =
            computed.iter().map(|z| z.coords().to_vec()).collect();
        let printed_rows: Vec<Vec<GaussianRational>> =
            printed.iter().map(|z| z.coords().to_vec()).collect();
        for row in &printed_rows {
            assert!(in_span(&computed_rows, row), "n={n}: printed not in span");
        }
        for row in &computed_rows {
            assert!(in_span(&printed_rows, row), "n={n}: computed not in span");
        }
    }
}

#[test]
fn centrality_examples() {
    let alg = build(2);
    assert!(is_central(&alg, &alg.unit()));
    let trace = alg.from_poly(&parse_poly("e[1,1] + e[2,2]").unwrap());
    assert!(is_central(&alg, &trace));
    let e12 = alg.generator(1, 2);
    assert!(!is_central(&alg, &e12));
}

#[test]
fn unit_family_shapes() {
    let alg = build(2);
    let families = matrix_units(&alg);
    assert_eq!(families.len(), 5);
    // A = e12 e21 − e21 e12 − 2 e11⁴ + 1 at n=2.
    let a = families
        .iter()
        .find(|f| f.kind == UnitKind::A)
        .unwrap()
        .unit(1, 1)
        .clone();
    let expected =
        alg.from_poly(&parse_poly("e[1,2]*e[2,1] - e[2,1]*e[1,2] - 2*e[1,1]^4 + 1").unwrap());
    assert_eq!(a, expected);

    // B⁰₁₁ + B¹₁₁ = ½(e11⁴ + e11²): the odd parts cancel.
    let b0 = families.iter().find(|f| f.kind == UnitKind::B(0)).unwrap();
    let b1 = families.iter().find(|f| f.kind == UnitKind::B(1)).unwrap();
    let sum = b0.unit(1, 1).add(b1.unit(1, 1));
    let expected = alg.from_poly(&parse_poly("1/2*e[1,1]^4 + 1/2*e[1,1]^2").unwrap());
    assert_eq!(sum, expected);

    // D⁰ᵢᵢ + D¹ᵢᵢ = ½(e11⁴ + e11²) − e_{1i} e_{i1}.
    let d0 = families.iter().find(|f| f.kind == UnitKind::D(0)).unwrap();
    let d1 = families.iter().find(|f| f.kind == UnitKind::D(1)).unwrap();
    let sum = d0.unit(2, 2).add(d1.unit(2, 2));
    let expected =
        alg.from_poly(&parse_poly("1/2*e[1,1]^4 + 1/2*e[1,1]^2 - e[1,2]*e[2,1]").unwrap());
    assert_eq!(sum, expected);
}

#[test]
fn unit_relations_hold_exhaustively() {
    for n in [2usize, 3] {
        let alg = build(n);
        let families = matrix_units(&alg);
        let pairs = verify_unit_relations(&alg, &families).unwrap();
        let total = (4 * n * n + 1) as u64;
        assert_eq!(pairs, total * total, "n={n}");
        resolution_of_identity(&alg, &families).unwrap();
    }
}

#[test]
fn specific_unit_products() {
    let alg = build(2);
    let families = matrix_units(&alg);
    let get = |kind: UnitKind| families.iter().find(|f| f.kind == kind).unwrap();
    let b0 = get(UnitKind::B(0));
    let d1 = get(UnitKind::D(1));
    let a = get(UnitKind::A);

    assert_eq!(alg.multiply(b0.unit(1, 2), b0.unit(2, 1)), *b0.unit(1, 1));
    assert!(alg.multiply(b0.unit(1, 1), d1.unit(1, 1)).is_zero());
    assert_eq!(alg.multiply(a.unit(1, 1), a.unit(1, 1)), *a.unit(1, 1));
}

#[test]
fn idempotents_are_central_orthogonal_and_span_the_center() {
    for n in [2usize, 3] {
        let alg = build(n);
        let families = matrix_units(&alg);
        let idempotents: Vec<AlgElement> =
            families.iter().map(|f| f.diagonal_sum(alg.dim())).collect();
        for (k, p) in idempotents.iter().enumerate() {
            assert!(is_central(&alg, p), "n={n} idempotent {k}");
            assert_eq!(alg.multiply(p, p), *p);
            for (l, q) in idempotents.iter().enumerate() {
                if k != l {
                    assert!(alg.multiply(p, q).is_zero());
                }
            }
        }
        let rows: Vec<Vec<GaussianRational>> =
            idempotents.iter().map(|z| z.coords().to_vec()).collect();
        let center_rows: Vec<Vec<GaussianRational>> = center_basis(&alg, false)
            .iter()
            .map(|z| z.coords().to_vec())
            .collect();
        for row in &center_rows {
            assert!(in_span(&rows, row), "n={n}");
        }
    }
}

#[test]
fn standard_representations_pass() {
    for n in [2usize, 3] {
        let sys = TripleSystem::matrix(n);
        for rho in standard_representations(n) {
            let checked = check_representation(&sys, &rho).unwrap();
            assert_eq!(checked, (n * n).pow(3) as u64, "{}", rho.name);
        }
    }
}

#[test]
fn plain_transpose_is_not_a_representation() {
    let n = 2;
    let sys = TripleSystem::matrix(n);
    let images = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .map(|(i, j)| SquareMatrix::unit(n, i, j).transpose())
        .collect();
    let rho = Representation::new("transpose-without-i", images);
    assert!(check_representation(&sys, &rho).is_err());
}

#[test]
fn all_pairs_trace_inequivalent() {
    for n in [2usize, 3] {
        let sys = TripleSystem::matrix(n);
        let reps = standard_representations(n);
        let mut pairs = 0;
        for a in 0..reps.len() {
            for b in a + 1..reps.len() {
                let witness = check_inequivalence(&sys, &reps[a], &reps[b]).unwrap();
                assert_ne!(witness.left_trace, witness.right_trace);
                pairs += 1;
            }
        }
        assert_eq!(pairs, 6);
    }
    // The diagonal unit separates every pair: traces 1, −1, i, −i.
    let reps = standard_representations(2);
    let traces: Vec<GaussianRational> = reps.iter().map(|r| r.image(1).trace()).collect();
    assert_eq!(
        traces,
        vec![
            GaussianRational::one(),
            GaussianRational::integer(-1),
            GaussianRational::i(),
            -GaussianRational::i(),
        ]
    );
}

#[test]
fn wedderburn_block_summary() {
    for n in [2usize, 3] {
        let alg = build(n);
        let summary = wedderburn_summary(&alg).unwrap();
        assert_eq!(summary.blocks, vec![1, n, n, n, n]);
        assert_eq!(summary.dim, 4 * n * n + 1);
    }
}

#[test]
fn central_elements_act_as_scalars_on_block_corners() {
    let alg = build(2);
    let families = matrix_units(&alg);
    let center = center_basis(&alg, false);
    for z in &center {
        for f in &families {
            let corner = f.unit(1, 1);
            let product = alg.multiply(z, corner);
            // z·U₁₁ lies in the span of U₁₁.
            let rows = vec![corner.coords().to_vec()];
            assert!(in_span(&rows, product.coords()));
        }
    }
}

#[test]
#[should_panic(expected = "distinct representations")]
fn inequivalence_rejects_a_representation_against_itself() {
    let sys = TripleSystem::matrix(2);
    let reps = standard_representations(2);
    let _ = check_inequivalence(&sys, &reps[0], &reps[0]);
}
