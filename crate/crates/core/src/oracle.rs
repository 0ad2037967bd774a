//! Brute-force reference implementations used only for verification.
//!
//! Nothing in the production modules calls into this one. Each routine takes
//! a different path to the same quantity: literal subset enumeration instead
//! of binomials, power-series long division instead of closed forms,
//! schoolbook expansion in reverse order instead of the incremental recurrence.

use num_traits::{One, Zero};

use crate::exactnum::{ExactInt, NatSet, SetPolynomial};
use crate::graph::Graph;

/// Number of `size`-element subsets of `items`, by walking every subset.
fn subsets_of_size(items: &[usize], size: usize) -> u64 {
    assert!(items.len() < 64, "enumeration oracle is for small graphs only");
    (0u64..1 << items.len())
        .filter(|mask| mask.count_ones() as usize == size)
        .count() as u64
}

/// Center-edge configurations of shape `(a, b)`: for each edge `{u, v}`, the
/// pairs (A, B) with `A` an `a`-subset of `N(u) \ {v}` and `B` a `b`-subset of
/// `N(v) \ {u}`, plus the swapped assignment when `a != b`. `A` and `B` may
/// share vertices.
pub fn star_count_enumerate(g: &Graph, a: usize, b: usize) -> ExactInt {
    let mut total = ExactInt::zero();
    for (u, v) in g.edges() {
        let side_u: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| w != v).collect();
        let side_v: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w != u).collect();
        let mut count = subsets_of_size(&side_u, a) * subsets_of_size(&side_v, b);
        if a != b {
            count += subsets_of_size(&side_u, b) * subsets_of_size(&side_v, a);
        }
        total += count;
    }
    total
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("denominator constant term must be 1")]
pub struct NonUnitConstant;

/// First `terms` coefficients of `numerator / denominator` as a formal power
/// series, by long division.
pub fn series_divide(
    numerator: &[ExactInt],
    denominator: &[ExactInt],
    terms: usize,
) -> Result<Vec<ExactInt>, NonUnitConstant> {
    if denominator.first().map_or(true, |c| !c.is_one()) {
        return Err(NonUnitConstant);
    }
    let mut remainder: Vec<ExactInt> = (0..terms)
        .map(|k| numerator.get(k).cloned().unwrap_or_default())
        .collect();
    let mut quotient = Vec::with_capacity(terms);
    for k in 0..terms {
        let q = remainder[k].clone();
        if !q.is_zero() {
            for (j, d) in denominator.iter().enumerate().skip(1) {
                if k + j >= terms {
                    break;
                }
                remainder[k + j] -= &q * d;
            }
        }
        quotient.push(q);
    }
    Ok(quotient)
}

/// `prod_{s in S} (z - s)` by schoolbook multiplication, taking the elements
/// largest first.
pub fn comtet_expand_naive(set: &NatSet) -> SetPolynomial {
    let mut acc = vec![ExactInt::one()];
    for s in set.iter().rev() {
        let factor = [-ExactInt::from(s), ExactInt::one()];
        let mut next = vec![ExactInt::zero(); acc.len() + 1];
        for (i, x) in acc.iter().enumerate() {
            for (j, y) in factor.iter().enumerate() {
                next[i + j] += x * y;
            }
        }
        acc = next;
    }
    SetPolynomial::from(acc)
}

/// `{n, k} = (1/k!) sum_{i=0}^{k} (-1)^{k-i} C(k, i) i^n`, evaluated literally.
pub fn stirling2_explicit(n: u64, k: u64) -> ExactInt {
    let mut sum = ExactInt::zero();
    let mut choose = ExactInt::one();
    for i in 0..=k {
        let term = &choose * num_traits::pow(ExactInt::from(i), n as usize);
        if (k - i) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        choose = choose * (k - i) / (i + 1);
    }
    let fact: ExactInt = (1..=k).map(ExactInt::from).product();
    sum / fact
}

/// `C(n, k)` by Pascal's rule, no multiplication.
pub fn binomial_pascal(n: usize, k: usize) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let mut row = vec![ExactInt::one()];
    for _ in 0..n {
        let mut next = vec![ExactInt::one(); row.len() + 1];
        for j in 1..row.len() {
            next[j] = &row[j - 1] + &row[j];
        }
        row = next;
    }
    row[k].clone()
}
