use proptest::prelude::*;
use tropical::dequant::{dequant_add, DequantScalar};
use tropical::linalg::{combine, principal_coefficients, span_member};
use tropical::scalar::{from_max_model, to_max_model};
use tropical::valuation::{check_ultrametric_equality, check_valuation_axioms};
use tropical::{FieldElem, TropMatrix, TropScalar, TropVector, Valuation};

fn scalar() -> impl Strategy<Value = TropScalar> {
    prop_oneof![
        1 => Just(TropScalar::Infinity),
        6 => (-30i64..=30, 1i64..=6).prop_map(|(n, d)| TropScalar::from_ratio(n, d)),
    ]
}

fn vector(n: usize) -> impl Strategy<Value = TropVector> {
    proptest::collection::vec(scalar(), n).prop_map(TropVector)
}

fn matrix(r: usize, c: usize) -> impl Strategy<Value = TropMatrix> {
    proptest::collection::vec(proptest::collection::vec(scalar(), c), r)
        .prop_map(|rows| TropMatrix::from_rows(rows).unwrap())
}

/// `v_p(n)` on machine integers, by repeated division.
fn int_valuation(mut n: i64, p: i64) -> i64 {
    let mut k = 0;
    while n % p == 0 {
        n /= p;
        k += 1;
    }
    k
}

proptest! {
    #[test]
    fn semiring_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.oplus(&b), b.oplus(&a));
        prop_assert_eq!(a.odot(&b), b.odot(&a));
        prop_assert_eq!(a.oplus(&b).oplus(&c), a.oplus(&b.oplus(&c)));
        prop_assert_eq!(a.odot(&b).odot(&c), a.odot(&b.odot(&c)));
        prop_assert_eq!(a.odot(&b.oplus(&c)), a.odot(&b).oplus(&a.odot(&c)));
        prop_assert_eq!(a.oplus(&TropScalar::Infinity), a.clone());
        prop_assert_eq!(a.odot(&TropScalar::one()), a.clone());
        prop_assert_eq!(a.oplus(&a), a.clone());
    }

    #[test]
    fn division_inverts_multiplication(a in scalar(), b in scalar()) {
        match a.odot(&b).oslash(&b) {
            Ok(q) => prop_assert_eq!(q, a),
            Err(_) => prop_assert!(b.is_infinite()),
        }
    }

    #[test]
    fn max_model_is_an_isomorphism(a in scalar(), b in scalar()) {
        let (ma, mb) = (to_max_model(&a), to_max_model(&b));
        prop_assert_eq!(from_max_model(&ma.max_add(&mb)), a.oplus(&b));
        prop_assert_eq!(from_max_model(&ma.max_mul(&mb)), a.odot(&b));
        prop_assert_eq!(from_max_model(&ma), a);
    }

    #[test]
    fn matrix_product_is_associative(a in matrix(2, 3), b in matrix(3, 2), c in matrix(2, 2)) {
        let left = a.matmul(&b).unwrap().matmul(&c).unwrap();
        let right = a.matmul(&b.matmul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn combinations_are_recognized(gens in proptest::collection::vec(vector(4), 1..4), coeffs in proptest::collection::vec(scalar(), 4)) {
        let coeffs = &coeffs[..gens.len()];
        let x = combine(coeffs, &gens, 4).unwrap();
        let lambda = span_member(&x, &gens).unwrap();
        prop_assert!(lambda.is_some());
        // every representation uses coefficients at least the residuated ones
        let principal = principal_coefficients(&x, &gens).unwrap();
        for (p, c) in principal.iter().zip(coeffs) {
            prop_assert!(p <= c);
        }
    }

    #[test]
    fn padic_values_match_integer_oracle(n in 1i64..5000, d in 1i64..5000, p in prop_oneof![Just(2i64), Just(3), Just(5), Just(7)]) {
        let v = Valuation::padic(p as u64).unwrap();
        let got = v.valuate(&FieldElem::ratio(n, d)).unwrap();
        let g = num_integer::gcd(n, d);
        let expected = int_valuation(n / g, p) - int_valuation(d / g, p);
        prop_assert_eq!(got, TropScalar::from_int(expected));
    }

    #[test]
    fn valuation_axioms_hold(a in (-200i64..200, 1i64..200), b in (-200i64..200, 1i64..200)) {
        let samples = vec![(FieldElem::ratio(a.0, a.1), FieldElem::ratio(b.0, b.1))];
        for v in [Valuation::Trivial, Valuation::PAdic(2), Valuation::PAdic(3), Valuation::PAdic(5)] {
            let report = check_valuation_axioms(&v, &samples).unwrap();
            prop_assert!(report.passed(), "{v}: {:?}", report.first_violation);
        }
    }

    #[test]
    fn ultrametric_equality_when_values_differ(a in (1i64..500, 1i64..500), b in (1i64..500, 1i64..500)) {
        let (x, y) = (FieldElem::ratio(a.0, a.1), FieldElem::ratio(b.0, b.1));
        for v in [Valuation::PAdic(2), Valuation::PAdic(3), Valuation::PAdic(5)] {
            if v.valuate(&x).unwrap() != v.valuate(&y).unwrap() {
                prop_assert!(check_ultrametric_equality(&v, &x, &y).unwrap());
            }
        }
    }

    #[test]
    fn dequantization_sandwich(a in -50.0f64..50.0, b in -50.0f64..50.0, ell in prop_oneof![Just(2.0f64), Just(3.0), Just(10.0), Just(1000.0), 1.01f64..1e6]) {
        let s = dequant_add(DequantScalar::new(a).unwrap(), DequantScalar::new(b).unwrap(), ell).unwrap().value();
        let hi = a.max(b);
        prop_assert!(hi <= s && s <= hi + 2f64.ln() / ell.ln() + 1e-9);
    }
}

#[test]
fn dequantization_with_negative_infinity() {
    let ninf = DequantScalar::NEG_INFINITY;
    let a = DequantScalar::new(4.5).unwrap();
    assert_eq!(dequant_add(ninf, a, 10.0).unwrap(), a);
    assert!(dequant_add(ninf, ninf, 10.0).unwrap().is_neg_infinity());
}

#[test]
fn puiseux_valuation_axioms() {
    use num_rational::BigRational;
    use tropical::Puiseux;
    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let a = FieldElem::Puiseux(Puiseux::from_terms([(q(1, 2), q(3, 1)), (q(2, 1), q(1, 1))]));
    let b = FieldElem::Puiseux(Puiseux::from_terms([(q(1, 2), q(-3, 1)), (q(1, 1), q(1, 1))]));
    let report = check_valuation_axioms(&Valuation::PuiseuxOrder, &[(a.clone(), b.clone())]).unwrap();
    assert!(report.passed());
    // the leading terms cancel, so the sum is strictly above the minimum
    assert!(!report.pairs[0].sum_attains_min);
    assert_eq!(report.pairs[0].nu_sum, TropScalar::from_int(1));
}
