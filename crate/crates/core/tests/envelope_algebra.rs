//! Quotient-algebra checks: dimensions, table products, associativity,
//! the transpose anti-automorphism, the envelope property, and the
//! entry-by-entry agreement between the Gröbner table and the
//! closed-form product oracle.

use ncgb::ajts::{RelationMode, TripleSystem};
use ncgb::arith::GaussianRational;
use ncgb::envelope::{oracle_diff, oracle_product, reference, EnvelopeAlgebra};
use ncgb::freealg::parse_poly;

fn build(n: usize) -> EnvelopeAlgebra {
    EnvelopeAlgebra::build(n, RelationMode::Full, 9).unwrap()
}

#[test]
fn dimensions_and_basis() {
    let alg = build(2);
    assert_eq!(alg.dim(), 17);
    assert_eq!(alg.basis(), &reference::basis_words(2)[..]);

    let alg = build(3);
    assert_eq!(alg.dim(), 37);
    assert_eq!(alg.basis(), &reference::basis_words(3)[..]);
    // Every length-2 word e_1i e_j1 with (i,j) ≠ (1,1) is present.
    for i in 1..=3usize {
        for j in 1..=3usize {
            if (i, j) != (1, 1) {
                let w = parse_poly(&format!("e[1,{i}]*e[{j},1]")).unwrap();
                let w = w.leading_monomial().unwrap().clone();
                assert!(alg.position_of(&w).is_some(), "missing {w}");
            }
        }
    }
}

#[test]
fn both_modes_agree_entrywise() {
    let full = build(2);
    let paper = EnvelopeAlgebra::build(2, RelationMode::Paper, 9).unwrap();
    assert_eq!(full.basis(), paper.basis());
    for i in 0..full.dim() {
        for j in 0..full.dim() {
            assert_eq!(full.table_entry(i, j), paper.table_entry(i, j));
        }
    }
}

#[test]
fn product_examples() {
    let alg = build(2);
    let mul_strings = |a: &str, b: &str| -> String {
        let x = alg.from_poly(&parse_poly(a).unwrap());
        let y = alg.from_poly(&parse_poly(b).unwrap());
        alg.to_poly(&alg.multiply(&x, &y)).to_string()
    };
    assert_eq!(mul_strings("e[1,1]", "e[2,2]"), "0");
    assert_eq!(mul_strings("e[1,1]^4", "e[1,1]^4"), "e[1,1]^4");
    assert_eq!(
        mul_strings("1", "e[1,2]*e[2,1] - 3*e[1,1]"),
        "e[1,2]*e[2,1] - 3*e[1,1]"
    );
    assert_eq!(mul_strings("e[1,1]^5", "1"), "e[1,1]");
}

#[test]
fn unit_is_two_sided_identity() {
    let alg = build(2);
    let one = alg.unit();
    for k in 0..alg.dim() {
        let b = alg.basis_element(k);
        assert_eq!(alg.multiply(&one, &b), b);
        assert_eq!(alg.multiply(&b, &one), b);
    }
}

#[test]
fn associativity_exhaustive_n2() {
    let alg = build(2);
    let checked = alg.check_associativity(true).expect("n=2 associativity");
    assert_eq!(checked, 17 * 17 * 17);
}

#[test]
fn corrupted_table_fails_associativity() {
    let alg = build(2);
    let dim = alg.dim();
    // Tamper with one cell: add a bogus unit contribution to b1·b2.
    let table = |i: usize, j: usize| {
        let mut cell = alg.table_entry(i, j).to_vec();
        if (i, j) == (1, 2) {
            cell.push((0, GaussianRational::one()));
        }
        cell
    };
    let result = ncgb::envelope::verify_table_associativity(dim, &table, None);
    assert!(result.is_err());
}

#[test]
fn envelope_property_on_basis_triples() {
    for n in [2usize, 3] {
        let alg = build(n);
        let sys = TripleSystem::matrix(n);
        let m = n * n;
        let gen = |a: usize| {
            let i = (a - 1) / n + 1;
            let j = (a - 1) % n + 1;
            alg.generator(i, j)
        };
        for a in 1..=m {
            for b in 1..=m {
                for c in 1..=m {
                    let lhs = alg
                        .multiply(&gen(a), &alg.multiply(&gen(b), &gen(c)))
                        .sub(&alg.multiply(&alg.multiply(&gen(c), &gen(b)), &gen(a)));
                    let mut rhs = ncgb::envelope::AlgElement::zero(alg.dim());
                    for (d, coeff) in sys.triple(a, b, c) {
                        rhs = rhs.add(&gen(d).scaled(&coeff));
                    }
                    assert_eq!(lhs, rhs, "n={n} triple ({a},{b},{c})");
                }
            }
        }
    }
}

#[test]
fn eta_is_an_involutive_antiautomorphism_of_the_quotient() {
    let alg = build(2);
    for i in 0..alg.dim() {
        let x = alg.basis_element(i);
        assert_eq!(alg.eta(&alg.eta(&x)), x);
        for j in 0..alg.dim() {
            let y = alg.basis_element(j);
            let lhs = alg.eta(&alg.multiply(&x, &y));
            let rhs = alg.multiply(&alg.eta(&y), &alg.eta(&x));
            assert_eq!(lhs, rhs, "pair ({i},{j})");
        }
    }
}

#[test]
fn oracle_product_examples() {
    // A length-1 times length-1 product crossing into length 2 (n=3).
    let p = |s: &str| parse_poly(s).unwrap().leading_monomial().unwrap().clone();
    let got = oracle_product(3, &p("e[1,2]"), &p("e[2,3]")).unwrap();
    assert_eq!(got, parse_poly("e[1,1]*e[1,3]").unwrap());

    // Row word against the quartic.
    let got = oracle_product(3, &p("e[1,1]^2*e[1,2]"), &p("e[1,1]^4")).unwrap();
    assert!(got.is_zero());
    let got = oracle_product(3, &p("e[1,1]^3"), &p("e[1,1]^4")).unwrap();
    assert_eq!(got, parse_poly("e[1,1]^3").unwrap());

    // Bridge against a row-column word vanishes.
    let got = oracle_product(3, &p("e[1,2]*e[1,1]*e[3,1]"), &p("e[2,1]*e[1,3]")).unwrap();
    assert!(got.is_zero());
}

#[test]
fn table_export_matches_committed_golden() {
    let alg = build(2);
    let mut json = serde_json::to_string_pretty(&alg.table_json()).unwrap();
    json.push('\n');
    let golden = std::fs::read_to_string(
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/table_n2.json"),
    )
    .unwrap();
    assert_eq!(json, golden);
}

#[test]
fn oracle_matches_engine_exhaustively() {
    for n in [2usize, 3] {
        let alg = build(n);
        let mismatches = oracle_diff(&alg).unwrap();
        for m in mismatches.iter().take(12) {
            eprintln!(
                "n={n} mismatch at ({}, {}): {} vs {}  [{} * {}]",
                m.i,
                m.j,
                m.engine,
                m.oracle,
                alg.basis_word(m.i),
                alg.basis_word(m.j),
            );
        }
        assert_eq!(mismatches.len(), 0, "n={n}");
    }
}
