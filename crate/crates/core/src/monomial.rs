//! Exponent vectors and the graded colexicographic monomial order.
//!
//! Monomials are compared first by total degree and then colexicographically:
//! the exponent of the last variable is compared first, smaller first. In two
//! variables the degree-2 monomials come out as `x², xy, y²`.

use std::cmp::Ordering;

/// An exponent vector; entries may be negative for Laurent monomials.
pub type Exponent = Vec<i64>;

pub fn total_degree(e: &[i64]) -> i64 {
    e.iter().sum()
}

/// Graded colexicographic comparison.
pub fn graded_colex(a: &[i64], b: &[i64]) -> Ordering {
    total_degree(a)
        .cmp(&total_degree(b))
        .then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

/// All exponent vectors in `nvars` variables of total degree exactly `d`,
/// in graded colex order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut current = vec![0i64; nvars];
    fill(&mut current, 0, d as i64, &mut out);
    out.sort_by(|a, b| graded_colex(a, b));
    out
}

fn fill(current: &mut Exponent, pos: usize, remaining: i64, out: &mut Vec<Exponent>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(current.clone());
        return;
    }
    for k in 0..=remaining {
        current[pos] = k;
        fill(current, pos + 1, remaining - k, out);
    }
    current[pos] = 0;
}

/// All exponent vectors of total degree at most `d`, in graded colex order.
pub fn monomials_up_to_degree(nvars: usize, d: u32) -> Vec<Exponent> {
    (0..=d).flat_map(|k| monomials_of_degree(nvars, k)).collect()
}

pub fn add_exponents(a: &[i64], b: &[i64]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `C(n, k)` as a `u128`, saturating is not needed at desk scale.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
