//! Full identity suite for a single graph, checked against the oracles.

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exactnum::{comtet_first_kind, ExactInt, ExactRational};
use crate::graph::{random_graph, Graph};
use crate::oracle::{series_divide, star_count_enumerate};
use crate::starseq::{
    frequency_from_star, frequency_sequence, handshake_sum, inverse_degree_sum, star_from_frequency,
    star_sequence,
};
use crate::zagreb::{
    convolution_coefficients, denominator_set, generating_function, m2_direct, m2_from_frequency,
    m2_from_star, m2_sequence, recurrence_check_sequence,
};

/// Graphs above this order skip the subset-enumeration oracle.
pub const ENUMERATION_LIMIT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest exponent for the three-route comparison; the series and
    /// recurrence checks always reach at least `2 |C_{n-1}|`.
    pub p_max: u64,
    /// Perturb the star triangle before checking. Harness self-test.
    pub inject_fault: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { p_max: 6, inject_fault: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    /// Sorted by check name.
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn check(name: &'static str, failure: Option<String>) -> CheckResult {
    CheckResult { name, passed: failure.is_none(), detail: failure }
}

/// Run every identity on `g`.
pub fn verify_graph(g: &Graph, opts: VerifyOptions) -> VerifyReport {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut star = star_sequence(g);
    let freq = frequency_sequence(g);
    let mut direct_bias = ExactInt::zero();
    if opts.inject_fault {
        if star.is_empty() {
            direct_bias = ExactInt::from(1);
        } else {
            let bumped = star.get(0, 0) + 1;
            star.set(0, 0, bumped).expect("(0, 0) exists in a nonempty triangle");
        }
    }

    let mut checks = Vec::new();

    let forward = star_from_frequency(&freq);
    checks.push(check(
        "inversion.frequency_to_star",
        (forward != star).then(|| first_difference(&forward, &star)),
    ));
    let backward = frequency_from_star(&star);
    checks.push(check(
        "inversion.star_to_frequency",
        (backward != freq).then(|| first_difference(&backward, &freq)),
    ));
    checks.push(check(
        "inversion.nonnegative",
        (!backward.is_nonnegative()).then(|| "inverted frequency triangle has a negative entry".into()),
    ));

    if n <= ENUMERATION_LIMIT {
        let mismatch = star
            .entries()
            .find(|&(a, b, v)| star_count_enumerate(g, a, b) != *v)
            .map(|(a, b, v)| format!("S[{a},{b}] = {v}, enumeration gives {}", star_count_enumerate(g, a, b)));
        checks.push(check("oracle.enumeration", mismatch));
    }

    let handshake = handshake_sum(&freq);
    let s00 = star.get(0, 0);
    checks.push(check(
        "identity.handshake",
        (handshake != ExactInt::from(m) || s00 != ExactInt::from(m))
            .then(|| format!("sum f = {handshake}, S[0,0] = {s00}, m = {m}")),
    ));
    let inv = inverse_degree_sum(&freq);
    let expect = ExactRational::from_integer(ExactInt::from(n - g.isolated_count()));
    checks.push(check(
        "identity.inverse_degree",
        (inv != expect).then(|| format!("sum = {inv}, n - n0 = {expect}")),
    ));

    let mut route_failure = None;
    for p in 0..=opts.p_max {
        let d = m2_direct(g, p) + &direct_bias;
        let f = m2_from_frequency(&freq, p);
        let s = m2_from_star(&star, p);
        if d != f || d != s {
            route_failure = Some(format!("p = {p}: direct {d}, frequency {f}, star {s}"));
            break;
        }
    }
    checks.push(check("zagreb.three_routes", route_failure));

    let order = denominator_set(n).len();
    let horizon = (2 * order as u64).max(opts.p_max);
    let mut m2 = m2_sequence(g, horizon);
    if let Some(first) = m2.first_mut() {
        *first += &direct_bias;
    }
    let gf = generating_function(g);
    let series = series_divide(&gf.numerator, &gf.denominator(), m2.len())
        .expect("denominator has constant term 1");
    checks.push(check(
        "gf.series",
        series
            .iter()
            .zip(&m2)
            .position(|(a, b)| a != b)
            .map(|p| format!("p = {p}: series {}, direct {}", series[p], m2[p])),
    ));
    let conv = convolution_coefficients(&comtet_first_kind(&gf.denominator_roots), &m2, m2.len());
    checks.push(check(
        "gf.numerator_vanishing",
        conv.iter()
            .enumerate()
            .skip(order)
            .find(|(_, a)| !a.is_zero())
            .map(|(p, a)| format!("a_{p} = {a}")),
    ));

    let rec = recurrence_check_sequence(n, &m2);
    checks.push(check(
        "recurrence.instance",
        (!rec.instance_holds()).then(|| format!("M2^({}) = {}, rhs = {}", rec.order, rec.lhs, rec.rhs)),
    ));
    checks.push(check(
        "recurrence.shifted",
        rec.violations.first().map(|v| format!("p = {}: residual {}", v.p, v.residual)),
    ));

    checks.sort_by_key(|c| c.name);
    VerifyReport { graph6: g.to_graph6(), n, m, checks }
}

fn first_difference(
    got: &crate::starseq::StarTriangle,
    want: &crate::starseq::StarTriangle,
) -> String {
    got.entries()
        .zip(want.entries())
        .find(|((_, _, x), (_, _, y))| x != y)
        .map(|((a, b, x), (_, _, y))| format!("entry ({a}, {b}): {x} vs {y}"))
        .unwrap_or_else(|| "triangle shapes differ".into())
}

/// `count` graphs G(n, 1/2) from a ChaCha8 stream seeded with `seed`.
pub fn random_corpus(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_graph(n, &mut rng)).collect()
}
