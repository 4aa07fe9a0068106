//! One line per acceptance criterion, with pinned tolerances and time bounds.
//! Exits nonzero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropical::clifford::{c2_structure_check, tensor_iso_check};
use tropical::dequant::{dequant_add, DequantScalar};
use tropical::exterior::{circuits_from_wedge, vanishing_locus_member, ExtElement};
use tropical::hypersurface::{bend_points, hypersurface_cells};
use tropical::ideal::{hilbert_function, naive_ideal_member, truncation_member, IdealTruncation};
use tropical::linalg::combine;
use tropical::{ClassicalPoly, FieldElem, PlanarPiece, TropPoly, TropScalar, TropVector, ValuatedMatroid, Valuation};

const SEED: u64 = 20240601;
const DEQUANT_TOL: f64 = 1e-9;

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn t(v: i64) -> TropScalar {
    TropScalar::from_int(v)
}

fn c1() -> Check {
    let nu3 = Valuation::padic(3).map_err(|e| e.to_string())?;
    let a = nu3.valuate(&FieldElem::ratio(5, 6)).map_err(|e| e.to_string())?;
    let b = nu3.valuate(&FieldElem::ratio(27, 7)).map_err(|e| e.to_string())?;
    ensure(a == t(-1) && b == t(3), || format!("got {a} and {b}"))
}

fn c2() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut mismatches = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=3);
        let terms: Vec<(Vec<i64>, TropScalar)> = (0..rng.gen_range(1..=6))
            .map(|_| ((0..n).map(|_| rng.gen_range(0..=3)).collect(), t(rng.gen_range(-4..=4))))
            .collect();
        let f = TropPoly::from_terms(n, terms);
        // integer points make ties common
        let x: Vec<TropScalar> = (0..n)
            .map(|_| if rng.gen_bool(0.1) { TropScalar::Infinity } else { t(rng.gen_range(-4..=4)) })
            .collect();
        let bend = f.satisfies_bend_congruence(&x).map_err(|e| e.to_string())?;
        if bend != f.tropically_vanishes(&x).map_err(|e| e.to_string())? {
            mismatches += 1;
        }
    }
    ensure(mismatches == 0, || format!("{mismatches} mismatches"))
}

fn c3() -> Check {
    let f = TropPoly::from_terms(2, [(vec![1, 0], t(0)), (vec![0, 1], t(0)), (vec![0, 0], t(0))]);
    let cells = hypersurface_cells(&f).map_err(|e| e.to_string())?;
    ensure(cells.len() == 3, || format!("{} cells", cells.len()))?;
    let mut dirs = Vec::new();
    for c in &cells {
        match c.planar_piece() {
            Some(PlanarPiece::Ray { start, direction }) if start == [q(0), q(0)] => {
                // normalise to the primitive direction
                let scale = if direction[0].is_zero() { direction[1].abs() } else { direction[0].abs() };
                dirs.push([&direction[0] / &scale, &direction[1] / &scale]);
            }
            other => return Err(format!("unexpected piece {other:?}")),
        }
    }
    dirs.sort();
    let expected = vec![[q(-1), q(-1)], [q(0), q(1)], [q(1), q(0)]];
    ensure(dirs == expected, || format!("directions {dirs:?}"))?;
    let g = TropPoly::from_terms(1, [(vec![2], t(0)), (vec![0], t(2)), (vec![-2], t(8))]);
    let pts = bend_points(&g).map_err(|e| e.to_string())?;
    ensure(pts == vec![q(1), q(3)], || format!("bend points {pts:?}"))
}

fn c4() -> Check {
    let g = ClassicalPoly::from_terms(1, [(vec![1], FieldElem::int(1)), (vec![0], FieldElem::int(1))]).map_err(|e| e.to_string())?;
    let trunc = IdealTruncation::new(vec![g], 1, Valuation::Trivial, 2, false).map_err(|e| e.to_string())?;
    let f = TropPoly::from_terms(1, [(vec![2], t(0)), (vec![0], t(0))]);
    let trop_g = TropPoly::from_terms(1, [(vec![1], t(0)), (vec![0], t(0))]);
    let member = truncation_member(&trunc, &f).map_err(|e| e.to_string())?;
    let naive = naive_ideal_member(&[trop_g], &f, 2).map_err(|e| e.to_string())?;
    ensure(member && !naive, || format!("truncation {member}, naive {naive}"))
}

fn c5() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let vals = [Valuation::Trivial, Valuation::PAdic(2), Valuation::PAdic(3)];
    let mut done = 0;
    let mut failures = 0;
    while done < 200 {
        let d = rng.gen_range(1..=3);
        let n = rng.gen_range(d..=6);
        let m = int_matrix(&random_int_matrix(&mut rng, d, n, 20));
        let mut full_rank = true;
        for v in &vals {
            match ValuatedMatroid::from_matrix(v, &m) {
                Ok(vm) => failures += vm.check_vm_axiom().is_err() as usize,
                Err(tropical::Error::RankDeficient) => full_rank = false,
                Err(e) => return Err(e.to_string()),
            }
        }
        done += full_rank as usize;
    }
    ensure(failures == 0, || format!("{failures} failures"))
}

fn c6() -> Check {
    let cp = |nvars: usize, terms: &[(&[i64], i64)]| {
        ClassicalPoly::from_terms(nvars, terms.iter().map(|(e, c)| (e.to_vec(), FieldElem::int(*c)))).unwrap()
    };
    let ideals = [
        (2, vec![cp(2, &[(&[1, 0], 1), (&[0, 1], 1)])]),
        (3, vec![cp(3, &[(&[2, 0, 0], 1), (&[0, 1, 1], 1)]), cp(3, &[(&[1, 1, 0], 1)])]),
    ];
    for (nvars, gens) in &ideals {
        for h in hilbert_function(gens, *nvars, &Valuation::Trivial, 5, true).map_err(|e| e.to_string())? {
            let oracle = degree_dimension(gens, *nvars, h.degree);
            ensure(h.rank == oracle, || format!("degree {}: rank {} vs {oracle}", h.degree, h.rank))?;
        }
    }
    Ok(())
}

fn c7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut mismatches = 0;
    for m in corpus() {
        let p = ExtElement::from_matroid(&m);
        let wedge = circuits_from_wedge(&p).map_err(|e| e.to_string())?;
        for (b, c) in m.circuits() {
            if wedge.get(&b) != Some(&c) {
                mismatches += 1;
            }
        }
        let cocircuits: Vec<TropVector> = m.cocircuits().into_iter().map(|(_, c)| c).collect();
        for i in 0..200 {
            let x = if i % 2 == 0 && !cocircuits.is_empty() {
                let coeffs: Vec<TropScalar> = cocircuits.iter().map(|_| random_point(&mut rng, 1).0.remove(0)).collect();
                combine(&coeffs, &cocircuits, m.ground_size()).map_err(|e| e.to_string())?
            } else {
                random_point(&mut rng, m.ground_size())
            };
            let a = vanishing_locus_member(&p, &x).map_err(|e| e.to_string())?;
            if a != m.linear_space_member(&x).map_err(|e| e.to_string())? {
                mismatches += 1;
            }
        }
    }
    ensure(mismatches == 0, || format!("{mismatches} mismatches"))
}

fn c8() -> Check {
    for m in corpus() {
        let p = ExtElement::from_matroid(&m);
        let star = p.hodge_dual();
        ensure(star.hodge_dual() == p, || format!("not an involution on {m}"))?;
        ensure(star == ExtElement::from_matroid(&m.dual()), || format!("disagrees with dual on {m}"))?;
    }
    let u = ValuatedMatroid::uniform(4, 2);
    ensure(u.dual() == u, || "dual(U24) differs".into())
}

fn c9() -> Check {
    let x = ExtElement::basis(2, &[0], t(0)).oplus(&ExtElement::basis(2, &[1], t(0))).map_err(|e| e.to_string())?;
    let sq = x.wedge(&x).map_err(|e| e.to_string())?;
    ensure(sq == ExtElement::basis(2, &[0, 1], t(0)), || format!("got {sq}"))
}

fn c10() -> Check {
    let r = c2_structure_check();
    ensure(r.passed(), || format!("{r:?}"))?;
    for total in 0..=6 {
        for m in 0..=total {
            let rep = tensor_iso_check(m, total - m).map_err(|e| e.to_string())?;
            ensure(rep.holds, || format!("m={m} n={}", total - m))?;
        }
    }
    Ok(())
}

fn c11() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..1000 {
        let a: f64 = rng.gen_range(-50.0..50.0);
        let b: f64 = rng.gen_range(-50.0..50.0);
        for ell in [2.0, 3.0, 10.0, 1000.0] {
            let wrap = |v| DequantScalar::new(v).unwrap();
            let s = dequant_add(wrap(a), wrap(b), ell).map_err(|e| e.to_string())?.value();
            let hi = a.max(b) + 2f64.ln() / f64::ln(ell) + DEQUANT_TOL;
            ensure(a.max(b) <= s && s <= hi, || format!("a={a} b={b} ell={ell} gives {s}"))?;
        }
    }
    Ok(())
}

/// Power of `p` in a nonzero integer, counted directly.
fn multiplicity(mut k: BigInt, p: u64) -> i64 {
    let p = BigInt::from(p);
    let mut e = 0;
    while (&k % &p).is_zero() {
        k /= &p;
        e += 1;
    }
    e
}

fn oracle_val(r: &BigRational, p: u64) -> i64 {
    multiplicity(r.numer().clone(), p) - multiplicity(r.denom().clone(), p)
}

fn c12() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checked = 0;
    while checked < 1000 {
        let mut draw = || {
            let num: i64 = rng.gen_range(1..=2000) * if rng.gen_bool(0.5) { -1 } else { 1 };
            BigRational::new(num.into(), rng.gen_range(1..=2000i64).into())
        };
        let (a, b) = (draw(), draw());
        for p in [2, 3, 5] {
            let (va, vb) = (oracle_val(&a, p), oracle_val(&b, p));
            if va == vb {
                continue;
            }
            let nu = Valuation::PAdic(p);
            let sum = nu.valuate(&FieldElem::Rational(&a + &b)).map_err(|e| e.to_string())?;
            ensure(sum == t(va.min(vb)), || format!("nu_{p}({a} + {b}) = {sum}"))?;
            checked += 1;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let ms = Duration::from_millis;
    let criteria: [Criterion; 12] = [
        ("p-adic values of 5/6 and 27/7", c1, ms(1)),
        ("bend relations cut out the vanishing locus (500 pairs)", c2, ms(1000)),
        ("Y-shaped curve and Laurent bend points", c3, ms(1000)),
        ("truncation membership beats naive generation", c4, ms(1000)),
        ("realizable Plücker vectors satisfy the exchange axiom (200 matrices)", c5, ms(30_000)),
        ("tropicalization preserves the Hilbert function", c6, ms(10_000)),
        ("wedge circuits and vanishing loci match the matroid", c7, ms(30_000)),
        ("Hodge star is the matroid dual", c8, ms(5_000)),
        ("exterior square of x1 + x2", c9, ms(1)),
        ("Clifford structure and tensor isomorphism", c10, ms(10_000)),
        ("dequantization sandwich", c11, ms(1000)),
        ("ultrametric equality for unequal values", c12, ms(1000)),
    ];
    let mut failed = 0;
    for (i, (name, run, bound)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let verdict = match (&outcome, took <= *bound) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (took longer than {bound:?})"),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        failed += !verdict.starts_with("PASS") as usize;
        println!("{:>2}. {verdict:<4} {name} [{took:.2?}, bound {bound:?}]", i + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
