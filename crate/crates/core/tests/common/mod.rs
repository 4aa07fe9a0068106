//! Shared corpus and independent oracles for the integration suites.
#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropical::subset::{k_subsets, Subset};
use tropical::monomial::{add_exponents, monomials_of_degree};
use tropical::{ClassicalPoly, FieldElem, Puiseux, TropScalar, ValuatedMatroid, Valuation};

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn int_matrix(rows: &[Vec<i64>]) -> Vec<Vec<FieldElem>> {
    rows.iter().map(|r| r.iter().map(|&x| FieldElem::int(x)).collect()).collect()
}

pub fn random_int_matrix(rng: &mut ChaCha8Rng, d: usize, n: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..d).map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()).collect()
}

pub fn valuations() -> Vec<Valuation> {
    vec![Valuation::Trivial, Valuation::PAdic(2), Valuation::PAdic(3)]
}

/// Valuated matroids on at most six elements: uniform ones, hand-made
/// examples, and realizations of seeded random matrices.
pub fn corpus() -> Vec<ValuatedMatroid> {
    let mut out = Vec::new();
    for n in 1..=6 {
        for d in 0..=n {
            out.push(ValuatedMatroid::uniform(n, d));
        }
    }
    let set = |s: &str| s.parse::<Subset>().unwrap();
    let t = |v: i64| TropScalar::from_int(v);
    out.push(ValuatedMatroid::from_pairs(3, 2, [(set("{1,2}"), t(0)), (set("{1,3}"), t(1)), (set("{2,3}"), t(0))]).unwrap());
    out.push(ValuatedMatroid::from_pairs(5, 3, [(set("{1,3,5}"), TropScalar::from_ratio(7, 2))]).unwrap());
    out.push(ValuatedMatroid::from_pairs(3, 2, [(set("{1,2}"), t(0))]).unwrap());

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let vals = valuations();
    while out.len() < 60 {
        let d = rng.gen_range(1..=3);
        let n = rng.gen_range(d..=6);
        let m = random_int_matrix(&mut rng, d, n, 12);
        let v = &vals[rng.gen_range(0..vals.len())];
        if let Ok(vm) = ValuatedMatroid::from_matrix(v, &int_matrix(&m)) {
            out.push(vm);
        }
    }
    // a Puiseux realization: rows (1, t, t², 1+t) and (0, 1, t, t³)
    let tp = |e: i64, c: i64| FieldElem::Puiseux(Puiseux::monomial(q(e), q(c)));
    let one = FieldElem::int(1);
    let rows = vec![
        vec![one.clone(), tp(1, 1), tp(2, 1), &one + &tp(1, 1)],
        vec![FieldElem::zero(), one.clone(), tp(1, 1), tp(3, 1)],
    ];
    out.push(ValuatedMatroid::from_matrix(&Valuation::PuiseuxOrder, &rows).unwrap());
    out
}

/// Basis of the null space of a rational matrix, by Gaussian elimination.
pub fn nullspace(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let mut a: Vec<Vec<BigRational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = BigRational::one() / a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            v
        })
        .collect()
}

/// Vectors of minimal support in `ker M` (classical circuits), one per
/// `(rank+1)`-subset whose restricted kernel is a line.
pub fn kernel_circuits(m: &[Vec<BigRational>], n: usize) -> Vec<Vec<BigRational>> {
    let mut out = Vec::new();
    for size in 1..=n {
        for t in k_subsets(n, size) {
            let cols: Vec<usize> = t.elements().collect();
            let sub: Vec<Vec<BigRational>> = m.iter().map(|r| cols.iter().map(|&j| r[j].clone()).collect()).collect();
            let ker = nullspace(&sub, cols.len());
            if ker.len() == 1 && ker[0].iter().all(|x| !x.is_zero()) {
                let mut v = vec![BigRational::zero(); n];
                for (k, &j) in cols.iter().enumerate() {
                    v[j] = ker[0][k].clone();
                }
                out.push(v);
            }
        }
    }
    out
}

/// Vectors of minimal support in the row space of `M`.
pub fn rowspace_cocircuits(m: &[Vec<BigRational>], n: usize) -> Vec<Vec<BigRational>> {
    // the row space of M is the kernel of a matrix whose rows span ker M
    let ker = nullspace(m, n);
    if ker.is_empty() {
        return (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
            .collect();
    }
    kernel_circuits(&ker, n)
}

pub fn valuate_vector(v: &Valuation, x: &[BigRational]) -> tropical::TropVector {
    tropical::TropVector(x.iter().map(|c| v.valuate(&FieldElem::Rational(c.clone())).unwrap()).collect())
}

/// Classical basis exchange for a family of `d`-subsets given as a 0/∞
/// Plücker vector: for bases `B, C` and `b ∈ B ∖ C` some `c ∈ C ∖ B` makes
/// `B − b + c` a basis.
pub fn classical_exchange(n: usize, d: usize, finite: &[bool]) -> bool {
    let bases: Vec<Subset> = k_subsets(n, d).zip(finite).filter(|(_, &f)| f).map(|(s, _)| s).collect();
    if bases.is_empty() {
        return false;
    }
    bases.iter().all(|&b| {
        bases.iter().all(|&c| {
            b.difference(c)
                .elements()
                .all(|x| c.difference(b).elements().any(|y| bases.contains(&b.without(x).with(y))))
        })
    })
}

pub fn random_point(rng: &mut ChaCha8Rng, n: usize) -> tropical::TropVector {
    tropical::TropVector(
        (0..n)
            .map(|_| if rng.gen_bool(0.1) { TropScalar::Infinity } else { TropScalar::from_int(rng.gen_range(-3..=3)) })
            .collect(),
    )
}

/// `dim J_d` for homogeneous rational generators: rank of all degree-`d`
/// multiples, as columns minus nullity of the transpose.
pub fn degree_dimension(gens: &[ClassicalPoly], nvars: usize, d: u32) -> usize {
    let cols = monomials_of_degree(nvars, d);
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for g in gens {
        let gd = g.degree().unwrap();
        if gd > d as i64 {
            continue;
        }
        for m in monomials_of_degree(nvars, (d as i64 - gd) as u32) {
            let mut row = vec![q(0); cols.len()];
            for (e, c) in g.terms() {
                let FieldElem::Rational(c) = c else { panic!("rational generators only") };
                row[cols.iter().position(|x| *x == add_exponents(e, &m)).unwrap()] = c.clone();
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return 0;
    }
    let transpose: Vec<Vec<BigRational>> = (0..cols.len()).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
    rows.len() - nullspace(&transpose, rows.len()).len()
}

