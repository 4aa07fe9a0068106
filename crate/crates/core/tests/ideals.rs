mod common;

use common::*;
use proptest::prelude::*;
use tropical::ideal::{hilbert_function, naive_ideal_member, IdealTruncation};
use tropical::{ClassicalPoly, FieldElem, Puiseux, TropPoly, TropScalar, TropVector, Valuation};

fn poly(nvars: usize, terms: &[(&[i64], i64)]) -> ClassicalPoly {
    ClassicalPoly::from_terms(nvars, terms.iter().map(|(e, c)| (e.to_vec(), FieldElem::int(*c)))).unwrap()
}

fn homogeneous_examples() -> Vec<(usize, Vec<ClassicalPoly>)> {
    vec![
        (2, vec![poly(2, &[(&[1, 0], 1), (&[0, 1], 1)])]),
        (3, vec![poly(3, &[(&[2, 0, 0], 1), (&[0, 1, 1], 1)]), poly(3, &[(&[1, 1, 0], 1)])]),
        (3, vec![poly(3, &[(&[1, 0, 0], 2), (&[0, 1, 0], -4), (&[0, 0, 1], 6)]), poly(3, &[(&[0, 2, 0], 3), (&[0, 0, 2], 9)])]),
        (2, vec![poly(2, &[(&[2, 0], 1)]), poly(2, &[(&[1, 1], 1)]), poly(2, &[(&[0, 2], 1)])]),
        (3, vec![]),
    ]
}

#[test]
fn hilbert_function_is_preserved() {
    for (nvars, gens) in homogeneous_examples() {
        for v in [Valuation::Trivial, Valuation::PAdic(2), Valuation::PAdic(3)] {
            for h in hilbert_function(&gens, nvars, &v, 5, true).unwrap() {
                assert_eq!(h.rank, degree_dimension(&gens, nvars, h.degree), "{gens:?} degree {}", h.degree);
            }
        }
    }
}

#[test]
fn truncations_are_valuated_matroids() {
    for (nvars, gens) in homogeneous_examples() {
        for d in 0..=3 {
            let t = IdealTruncation::new(gens.clone(), nvars, Valuation::PAdic(2), d, true).unwrap();
            assert!(t.matroid.check_vm_axiom().is_ok());
        }
    }
    let g = poly(2, &[(&[1, 0], 3), (&[0, 1], 1), (&[0, 0], 9)]);
    for d in 1..=3 {
        let t = IdealTruncation::new(vec![g.clone()], 2, Valuation::PAdic(3), d, false).unwrap();
        assert!(t.matroid.check_vm_axiom().is_ok());
    }
}

#[test]
fn puiseux_generators() {
    // x + t over Puiseux series: each truncation is a line per degree
    let t = FieldElem::Puiseux(Puiseux::monomial(q(1), q(1)));
    let g = ClassicalPoly::from_terms(1, [(vec![1], FieldElem::int(1)), (vec![0], t)]).unwrap();
    let tr = IdealTruncation::new(vec![g.clone()], 1, Valuation::PuiseuxOrder, 2, false).unwrap();
    assert_eq!(tr.rank(), 2);
    // X ⊕ 1 is the tropicalization of the generator
    let f = TropPoly::from_terms(1, [(vec![1], TropScalar::from_int(0)), (vec![0], TropScalar::from_int(1))]);
    assert!(tr.member(&f).unwrap());
    assert!(IdealTruncation::new(vec![g], 1, Valuation::PAdic(2), 2, false).is_err());
}

/// For a principal ideal, the degree-bounded multiples are exactly the
/// ideal members of bounded degree, so truncations are nested.
#[test]
fn truncations_are_nested_for_principal_ideals() {
    let g = poly(2, &[(&[1, 0], 1), (&[0, 1], 2), (&[0, 0], 4)]);
    let v = Valuation::PAdic(2);
    let small = IdealTruncation::new(vec![g.clone()], 2, v.clone(), 2, false).unwrap();
    let big = IdealTruncation::new(vec![g], 2, v, 3, false).unwrap();
    let pad = |x: &TropVector| {
        let mut out = TropVector::infinite(big.monomials.len());
        for (i, m) in small.monomials.iter().enumerate() {
            out.0[big.monomials.iter().position(|b| b == m).unwrap()] = x[i].clone();
        }
        out
    };
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(5);
    for _ in 0..100 {
        let x = random_point(&mut rng, small.monomials.len());
        assert_eq!(small.matroid.linear_space_member(&x).unwrap(), big.matroid.linear_space_member(&pad(&x)).unwrap());
    }
    for (_, c) in small.matroid.cocircuits() {
        assert!(big.matroid.linear_space_member(&pad(&c)).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn naive_membership_implies_truncation_membership(
        coeffs in proptest::collection::vec(-3i64..=3, 3),
        shifts in proptest::collection::vec(prop_oneof![Just(None), (-4i64..=4).prop_map(Some)], 3),
    ) {
        let terms: Vec<(&[i64], i64)> = vec![(&[1, 0], coeffs[0] * 2 + 1), (&[0, 1], coeffs[1] * 3 + 1), (&[0, 0], coeffs[2] * 4 + 2)];
        let g = poly(2, &terms);
        let v = Valuation::PAdic(2);
        let t = IdealTruncation::new(vec![g.clone()], 2, v.clone(), 2, false).unwrap();
        let tg = v.tropicalize(&g).unwrap();
        // f = ⊕ c_m ⊙ X^m ⊙ trop(g) over multipliers m ∈ {1, x, y}
        let mut f = TropPoly::zero(2);
        for (m, c) in [[0, 0], [1, 0], [0, 1]].iter().zip(&shifts) {
            if let Some(c) = c {
                f = f.oplus(&TropPoly::monomial(TropScalar::from_int(*c), m.to_vec()).odot(&tg));
            }
        }
        prop_assert!(naive_ideal_member(&[tg], &f, 2).unwrap());
        prop_assert!(t.member(&f).unwrap());
    }
}

#[test]
fn naive_membership_is_strictly_weaker() {
    let g = poly(1, &[(&[1], 1), (&[0], 1)]);
    let t = IdealTruncation::new(vec![g.clone()], 1, Valuation::Trivial, 2, false).unwrap();
    let f = TropPoly::from_terms(1, [(vec![2], TropScalar::from_int(0)), (vec![0], TropScalar::from_int(0))]);
    let tg = Valuation::Trivial.tropicalize(&g).unwrap();
    assert!(t.member(&f).unwrap());
    assert!(!naive_ideal_member(&[tg], &f, 2).unwrap());
}
