//! Exact scalars and the combinatorial number families used throughout the
//! crate: binomials, Stirling numbers of the second kind, Comtet numbers of
//! the first kind, product sets and dense polynomial arithmetic.
//!
//! Every value is an arbitrary-precision integer. Nothing here can overflow.

use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Reduced rational with positive denominator.
pub type ExactRational = num_rational::BigRational;

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = ExactInt::one();
    for i in 0..k {
        // acc * (n - i) is always divisible by (i + 1) at this point
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `n!`
pub fn factorial(n: u64) -> ExactInt {
    (1..=n).fold(ExactInt::one(), |acc, i| acc * i)
}

/// `base^exp` by square-and-multiply.
pub fn pow(base: &ExactInt, mut exp: u64) -> ExactInt {
    let mut result = ExactInt::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            result *= &sq;
        }
        exp >>= 1;
        if exp > 0 {
            sq = &sq * &sq;
        }
    }
    result
}

/// Row-major triangle of Stirling numbers of the second kind, grown on demand.
///
/// Row `n` holds `{n, 0} ..= {n, n}`.
#[derive(Debug, Clone, Default)]
pub struct StirlingTable {
    rows: Vec<Vec<ExactInt>>,
}

impl StirlingTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of rows currently materialized.
    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    /// Extend the table so that row `n` exists.
    pub fn ensure(&mut self, n: usize) {
        if self.rows.is_empty() {
            self.rows.push(vec![ExactInt::one()]);
        }
        while self.rows.len() <= n {
            let prev = self.rows.last().expect("row 0 exists");
            let len = prev.len() + 1;
            let mut row = Vec::with_capacity(len);
            row.push(ExactInt::zero());
            for k in 1..len {
                // {n,k} = k{n-1,k} + {n-1,k-1}
                let carry = prev.get(k).map(|v| v * k).unwrap_or_default();
                row.push(carry + &prev[k - 1]);
            }
            self.rows.push(row);
        }
    }

    /// Look up `{n, k}`; the row must already be materialized.
    pub fn get(&self, n: usize, k: usize) -> Option<ExactInt> {
        let row = self.rows.get(n)?;
        Some(row.get(k).cloned().unwrap_or_default())
    }
}

fn stirling_cache() -> &'static RwLock<StirlingTable> {
    static CACHE: OnceLock<RwLock<StirlingTable>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(StirlingTable::new()))
}

/// Stirling number of the second kind `{n, k}`.
///
/// Backed by a process-wide memo table behind a `RwLock`; readers always see
/// a fully built prefix of the triangle.
pub fn stirling2(n: u64, k: u64) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let (n, k) = (n as usize, k as usize);
    {
        let table = stirling_cache().read().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = table.get(n, k) {
            return v;
        }
    }
    let mut table = stirling_cache().write().unwrap_or_else(|e| e.into_inner());
    table.ensure(n);
    table.get(n, k).expect("row just materialized")
}

/// Coefficient of `S_{i,k}(G)` in the Stirling expansion of `M2^(p)(G)`:
/// `i! * k! * {p+1, i+1} * {p+1, k+1}`.
pub fn star_coefficient(p: u64, i: u64, k: u64) -> ExactInt {
    let si = stirling2(p + 1, i + 1);
    if si.is_zero() {
        return si;
    }
    let sk = stirling2(p + 1, k + 1);
    if sk.is_zero() {
        return sk;
    }
    factorial(i) * factorial(k) * si * sk
}

/// Strictly increasing list of natural numbers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<u64>", from = "Vec<u64>")]
pub struct NatSet(Vec<u64>);

impl NatSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Insert keeping the list sorted; returns `false` if already present.
    pub fn insert(&mut self, value: u64) -> bool {
        match self.0.binary_search(&value) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, value);
                true
            }
        }
    }

    pub fn contains(&self, value: u64) -> bool {
        self.0.binary_search(&value).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = u64> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

impl FromIterator<u64> for NatSet {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        let mut v: Vec<u64> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        NatSet(v)
    }
}

impl From<Vec<u64>> for NatSet {
    fn from(v: Vec<u64>) -> Self {
        v.into_iter().collect()
    }
}

impl From<NatSet> for Vec<u64> {
    fn from(s: NatSet) -> Self {
        s.0
    }
}

impl fmt::Display for NatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// `C_n = { i*j : 0 <= i, j <= n }` as a set.
pub fn product_set(n: u64) -> NatSet {
    let mut set = NatSet::new();
    for i in 0..=n {
        for j in i..=n {
            set.insert(i * j);
        }
    }
    set
}

/// Monic polynomial `prod_{s in S} (z - s)`, coefficients in ascending degree.
/// Coefficient `i` is the Comtet number of the first kind `[S, i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPolynomial {
    coefficients: Vec<ExactInt>,
}

impl SetPolynomial {
    pub fn coefficients(&self) -> &[ExactInt] {
        &self.coefficients
    }

    pub fn into_coefficients(self) -> Vec<ExactInt> {
        self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `[S, i]`, zero beyond the degree.
    pub fn comtet(&self, i: usize) -> ExactInt {
        self.coefficients.get(i).cloned().unwrap_or_default()
    }

    pub fn eval(&self, z: &ExactInt) -> ExactInt {
        poly_eval(&self.coefficients, z)
    }

    /// `prod_{s in S} (1 - s t) = sum_i [S, i] t^{|S| - i}`, ascending in `t`.
    pub fn reciprocal(&self) -> Vec<ExactInt> {
        self.coefficients.iter().rev().cloned().collect()
    }
}

impl From<Vec<ExactInt>> for SetPolynomial {
    fn from(coefficients: Vec<ExactInt>) -> Self {
        assert!(!coefficients.is_empty(), "a set polynomial has at least one coefficient");
        SetPolynomial { coefficients }
    }
}

/// Expand `prod_{s in S} (z - s)` by multiplying in one linear factor at a time.
pub fn comtet_first_kind(set: &NatSet) -> SetPolynomial {
    let mut coeffs = vec![ExactInt::one()];
    for s in set.iter() {
        // (c_0 + c_1 z + ...)(z - s): shift up, then subtract s * old
        coeffs.push(ExactInt::zero());
        for i in (0..coeffs.len()).rev() {
            let lower = if i > 0 { coeffs[i - 1].clone() } else { ExactInt::zero() };
            let own = std::mem::take(&mut coeffs[i]);
            coeffs[i] = lower - own * s;
        }
    }
    SetPolynomial { coefficients: coeffs }
}

/// Dense product of two ascending coefficient lists.
pub fn poly_mul(a: &[ExactInt], b: &[ExactInt]) -> Vec<ExactInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ExactInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Horner evaluation.
pub fn poly_eval(coeffs: &[ExactInt], z: &ExactInt) -> ExactInt {
    coeffs
        .iter()
        .rev()
        .fold(ExactInt::zero(), |acc, c| acc * z + c)
}

/// Shorthand for building integer vectors in tests and examples.
pub fn ints<I: IntoIterator<Item = i64>>(values: I) -> Vec<ExactInt> {
    values.into_iter().map(ExactInt::from).collect()
}
