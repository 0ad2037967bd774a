//! General second Zagreb index `M2^(p)(G) = sum_{uv in E} (d_u d_v)^p`.
//!
//! Three routes compute it: the edge sum, the frequency triangle and the
//! Stirling expansion over the star triangle. The ordinary generating function
//! `sum_p M2^(p) t^p` is rational with denominator `prod_{c in C_{n-1}} (1 - c t)`,
//! so the sequence obeys a linear recurrence whose coefficients are the Comtet
//! numbers of `C_{n-1}`.

use std::fmt::Write as _;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exactnum::{
    comtet_first_kind, pow, product_set, star_coefficient, ExactInt, NatSet, SetPolynomial,
};
use crate::graph::Graph;
use crate::starseq::StarTriangle;

/// Edge sum `sum (d_u d_v)^p`. `p = 0` gives the edge count.
pub fn m2_direct(g: &Graph, p: u64) -> ExactInt {
    g.edges()
        .map(|(u, v)| pow(&ExactInt::from(g.degree(u) * g.degree(v)), p))
        .sum()
}

/// `sum_{i <= j} ((i+1)(j+1))^p f_{i,j}`.
pub fn m2_from_frequency(f: &StarTriangle, p: u64) -> ExactInt {
    f.entries()
        .filter(|(_, _, v)| !v.is_zero())
        .map(|(i, j, v)| pow(&ExactInt::from((i + 1) * (j + 1)), p) * v)
        .sum()
}

/// `sum_{i <= k} i! k! {p+1, i+1} {p+1, k+1} S_{i,k}`.
///
/// Coefficients vanish once an index exceeds `p`, so only `k <= p` is visited.
pub fn m2_from_star(s: &StarTriangle, p: u64) -> ExactInt {
    s.entries()
        .filter(|&(_, k, v)| k as u64 <= p && !v.is_zero())
        .map(|(i, k, v)| star_coefficient(p, i as u64, k as u64) * v)
        .sum()
}

/// `M2^(0) ..= M2^(last)` by the edge sum.
pub fn m2_sequence(g: &Graph, last: u64) -> Vec<ExactInt> {
    (0..=last).map(|p| m2_direct(g, p)).collect()
}

/// `C_{n-1}` for a graph on `n` vertices (`C_0` when `n = 0`).
pub fn denominator_set(n: usize) -> NatSet {
    product_set(n.saturating_sub(1) as u64)
}

/// Comtet numbers `[C_{n-1}, i]` for `i = 0 ..= |C_{n-1}|`.
pub fn recurrence_coefficients(n: usize) -> Vec<ExactInt> {
    comtet_first_kind(&denominator_set(n)).into_coefficients()
}

/// Coefficients `a_k` of `D(t) * sum_p M2^(p) t^p` for `k = 0 .. count`, where
/// `D(t) = prod (1 - c t) = sum_i [C, i] t^{|C| - i}`. Needs `M2^(p)` for every
/// `p < count`. For `k >= |C|` these are all zero.
pub fn convolution_coefficients(comtet: &SetPolynomial, m2: &[ExactInt], count: usize) -> Vec<ExactInt> {
    assert!(m2.len() >= count, "need M2^(p) for p < {count}");
    let denom = comtet.reciprocal();
    (0..count)
        .map(|k| {
            denom
                .iter()
                .take(k + 1)
                .enumerate()
                .filter(|(_, d)| !d.is_zero())
                .map(|(j, d)| d * &m2[k - j])
                .sum()
        })
        .collect()
}

/// `N(t) / prod_{c in C} (1 - c t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    pub numerator: Vec<ExactInt>,
    pub denominator_roots: NatSet,
}

/// JSON form: `{ "numerator": ["decimal", ...], "denominator_roots": [c, ...] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalGFJson {
    pub numerator: Vec<String>,
    pub denominator_roots: Vec<u64>,
}

impl RationalGF {
    /// Expanded denominator, ascending in `t`. The factor for `c = 0` is 1.
    pub fn denominator(&self) -> Vec<ExactInt> {
        let mut d = comtet_first_kind(&self.denominator_roots).reciprocal();
        while d.len() > 1 && d.last().is_some_and(Zero::is_zero) {
            d.pop();
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.iter().all(Zero::is_zero)
    }

    pub fn to_json(&self) -> RationalGFJson {
        RationalGFJson {
            numerator: self.numerator.iter().map(ToString::to_string).collect(),
            denominator_roots: self.denominator_roots.as_slice().to_vec(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("GF JSON is always serializable")
    }

    pub fn from_json(json: &RationalGFJson) -> Result<Self, String> {
        let numerator = json
            .numerator
            .iter()
            .map(|s| s.parse::<ExactInt>().map_err(|e| format!("numerator `{s}`: {e}")))
            .collect::<Result<_, _>>()?;
        Ok(RationalGF { numerator, denominator_roots: json.denominator_roots.clone().into() })
    }

    /// Numerator with trailing zero coefficients removed.
    pub fn trimmed_numerator(&self) -> &[ExactInt] {
        let len = self.numerator.iter().rposition(|c| !c.is_zero()).map_or(0, |p| p + 1);
        &self.numerator[..len]
    }

    /// `\frac{...}{\prod (1 - c t)}` with the `c = 0` factor omitted.
    pub fn to_latex(&self) -> String {
        let num = latex_poly(self.trimmed_numerator());
        let factors: Vec<String> = self
            .denominator_roots
            .iter()
            .filter(|&c| c != 0)
            .map(|c| if c == 1 { "(1-t)".to_string() } else { format!("(1-{c}t)") })
            .collect();
        if factors.is_empty() {
            num
        } else {
            format!("\\frac{{{num}}}{{{}}}", factors.join(""))
        }
    }

    /// Plain-text `N(t) / (1-t)(1-2t)...`.
    pub fn to_plain(&self) -> String {
        let num = plain_poly(self.trimmed_numerator());
        let factors: Vec<String> = self
            .denominator_roots
            .iter()
            .filter(|&c| c != 0)
            .map(|c| if c == 1 { "(1-t)".to_string() } else { format!("(1-{c}t)") })
            .collect();
        if factors.is_empty() || num == "0" {
            num
        } else {
            format!("({num})/({})", factors.join(""))
        }
    }
}

fn poly_terms(coeffs: &[ExactInt], power: impl Fn(usize) -> String) -> String {
    let mut s = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &ExactInt::zero();
        let mag = if neg { -c } else { c.clone() };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let one = mag == ExactInt::from(1);
        match k {
            0 => {
                let _ = write!(s, "{mag}");
            }
            _ if one => s.push_str(&power(k)),
            _ => {
                let _ = write!(s, "{mag}{}", power(k));
            }
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn latex_poly(coeffs: &[ExactInt]) -> String {
    poly_terms(coeffs, |k| if k == 1 { "t".into() } else { format!("t^{{{k}}}") })
}

fn plain_poly(coeffs: &[ExactInt]) -> String {
    poly_terms(coeffs, |k| if k == 1 { "t".into() } else { format!("t^{k}") })
}

/// Rational generating function of `M2^(p)(G)`: numerator is the product of
/// the expanded denominator with the series, truncated below degree `|C_{n-1}|`.
pub fn generating_function(g: &Graph) -> RationalGF {
    let roots = denominator_set(g.vertex_count());
    let comtet = comtet_first_kind(&roots);
    let order = roots.len();
    let m2 = m2_sequence(g, order as u64 - 1);
    RationalGF { numerator: convolution_coefficients(&comtet, &m2, order), denominator_roots: roots }
}

/// A violated recurrence instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Residual {
    pub p: u64,
    #[serde(serialize_with = "ser_decimal")]
    pub residual: ExactInt,
}

fn ser_decimal<S: serde::Serializer>(v: &ExactInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Outcome of [`recurrence_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecurrenceReport {
    /// `|C_{n-1}|`.
    pub order: usize,
    pub p_max: u64,
    /// `M2^(order)` computed by the edge sum.
    #[serde(serialize_with = "ser_decimal")]
    pub lhs: ExactInt,
    /// `-sum_{i=1}^{order-1} [C, i] M2^(i)`.
    #[serde(serialize_with = "ser_decimal")]
    pub rhs: ExactInt,
    /// Number of shifted instances checked (`order ..= p_max`).
    pub shifted_checked: usize,
    /// Shifted instances with nonzero residual.
    pub violations: Vec<Residual>,
}

impl RecurrenceReport {
    pub fn instance_holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn passed(&self) -> bool {
        self.instance_holds() && self.violations.is_empty()
    }
}

/// Check the order-`|C|` instance
/// `M2^(|C|) = -sum_{i=1}^{|C|-1} [C,i] M2^(i)` and, for every
/// `|C| <= p <= p_max`, the shifted relation `sum_{i=0}^{|C|} [C,i] M2^(p-|C|+i) = 0`.
///
/// `p_max` below `|C|` is raised to `|C|`.
pub fn recurrence_check(g: &Graph, p_max: u64) -> RecurrenceReport {
    let m2 = m2_sequence(g, p_max.max(denominator_set(g.vertex_count()).len() as u64));
    recurrence_check_sequence(g.vertex_count(), &m2)
}

/// [`recurrence_check`] over a precomputed sequence `M2^(0) ..= M2^(p_max)`.
pub fn recurrence_check_sequence(n: usize, m2: &[ExactInt]) -> RecurrenceReport {
    let coeffs = recurrence_coefficients(n);
    let order = coeffs.len() - 1;
    assert!(m2.len() > order, "sequence must reach p = |C_(n-1)| = {order}");
    let p_max = (m2.len() - 1) as u64;
    let lhs = m2[order].clone();
    let rhs: ExactInt = -(1..order).map(|i| &coeffs[i] * &m2[i]).sum::<ExactInt>();
    let mut violations = Vec::new();
    for p in order..m2.len() {
        let residual: ExactInt = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * &m2[p - order + i])
            .sum();
        if !residual.is_zero() {
            violations.push(Residual { p: p as u64, residual });
        }
    }
    RecurrenceReport {
        order,
        p_max,
        lhs,
        rhs,
        shifted_checked: m2.len() - order,
        violations,
    }
}
