//! Double-star sequence `S_{a,b}(G)` and double-star frequency sequence
//! `f_{a,b}`, and the pair of linear transforms between them.
//!
//! Both live in a [`StarTriangle`]: an upper-triangular table indexed by
//! `0 <= a <= b <= n-2`. `S_{a,b}` is taken to be the binomial edge sum
//!
//! ```text
//! S_{a,b} = sum_{uv in E} C(d_u-1, a) C(d_v-1, b) + C(d_u-1, b) C(d_v-1, a)   (a < b)
//! S_{a,a} = sum_{uv in E} C(d_u-1, a) C(d_v-1, a)
//! ```
//!
//! which counts center-edge configurations. On graphs with triangles this is
//! not the number of subgraphs isomorphic to the double star (K4 has 12 copies
//! of P3 but `S_{0,1}(K4) = 24`).

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::{binomial, ExactInt, ExactRational};
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TriangleError {
    #[error("triangles belong to different vertex counts ({left} vs {right})")]
    Mismatch { left: usize, right: usize },
    #[error("entry ({a}, {b}) outside the triangle for n = {n}")]
    OutOfRange { a: usize, b: usize, n: usize },
    #[error("triangle parse error: {0}")]
    Parse(String),
}

/// Upper-triangular table of exact integers for `0 <= a <= b <= n-2`.
/// Empty when `n <= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarTriangle {
    n: usize,
    // rows[a][b - a]
    rows: Vec<Vec<ExactInt>>,
}

impl StarTriangle {
    pub fn zero(n: usize) -> Self {
        let dim = n.saturating_sub(1);
        let rows = (0..dim).map(|a| vec![ExactInt::zero(); dim - a]).collect();
        StarTriangle { n, rows }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> ExactInt>(n: usize, mut f: F) -> Self {
        let mut t = Self::zero(n);
        for (a, row) in t.rows.iter_mut().enumerate() {
            for (off, slot) in row.iter_mut().enumerate() {
                *slot = f(a, a + off);
            }
        }
        t
    }

    /// Vertex count of the originating graph.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct index values, `n - 1` (or 0).
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Number of stored entries.
    pub fn len(&self) -> usize {
        let d = self.dim();
        d * (d + 1) / 2
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Entry `(a, b)`. Swapped indices are answered by symmetry and anything
    /// outside the triangle is zero.
    pub fn get(&self, a: usize, b: usize) -> ExactInt {
        let (a, b) = (a.min(b), a.max(b));
        self.rows
            .get(a)
            .and_then(|row| row.get(b - a))
            .cloned()
            .unwrap_or_default()
    }

    pub fn set(&mut self, a: usize, b: usize, value: ExactInt) -> Result<(), TriangleError> {
        let (a, b) = (a.min(b), a.max(b));
        let n = self.n;
        let slot = self
            .rows
            .get_mut(a)
            .and_then(|row| row.get_mut(b - a))
            .ok_or(TriangleError::OutOfRange { a, b, n })?;
        *slot = value;
        Ok(())
    }

    /// `(a, b, value)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &ExactInt)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().enumerate().map(move |(off, v)| (a, a + off, v)))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries().all(|(_, _, v)| !v.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.entries().all(|(_, _, v)| v.is_zero())
    }

    pub fn ensure_same_n(&self, other: &StarTriangle) -> Result<(), TriangleError> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(TriangleError::Mismatch { left: self.n, right: other.n })
        }
    }

    pub fn to_json(&self) -> TriangleJson {
        TriangleJson {
            n: self.n,
            entries: self.entries().map(|(a, b, v)| (a, b, v.to_string())).collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("triangle JSON is always serializable")
    }

    pub fn from_json(json: &TriangleJson) -> Result<Self, TriangleError> {
        let mut t = Self::zero(json.n);
        for (a, b, v) in &json.entries {
            let value: BigInt = v
                .parse()
                .map_err(|e| TriangleError::Parse(format!("entry ({a}, {b}): {e}")))?;
            t.set(*a, *b, value)?;
        }
        Ok(t)
    }

    pub fn from_json_str(s: &str) -> Result<Self, TriangleError> {
        let json: TriangleJson =
            serde_json::from_str(s).map_err(|e| TriangleError::Parse(e.to_string()))?;
        Self::from_json(&json)
    }

    /// `a,b,value` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("a,b,value\n");
        for (a, b, v) in self.entries() {
            let _ = writeln!(s, "{a},{b},{v}");
        }
        s
    }

    /// Parse CSV produced by [`to_csv`](Self::to_csv); `n` is not part of the
    /// CSV and must be supplied.
    pub fn from_csv(n: usize, text: &str) -> Result<Self, TriangleError> {
        let mut t = Self::zero(n);
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || (idx == 0 && line.starts_with('a')) {
                continue;
            }
            let parts: Vec<&str> = line.split(',').map(str::trim).collect();
            let [a, b, v] = parts.as_slice() else {
                return Err(TriangleError::Parse(format!("line {}: expected a,b,value", idx + 1)));
            };
            let bad = |e: String| TriangleError::Parse(format!("line {}: {e}", idx + 1));
            let a = a.parse::<usize>().map_err(|e| bad(e.to_string()))?;
            let b = b.parse::<usize>().map_err(|e| bad(e.to_string()))?;
            let v = v.parse::<BigInt>().map_err(|e| bad(e.to_string()))?;
            t.set(a, b, v)?;
        }
        Ok(t)
    }

    /// LaTeX rendering of the triangle, one row per `a`.
    pub fn to_latex(&self, symbol: &str) -> String {
        let mut s = String::from("\\begin{align*}\n");
        for (a, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(off, v)| format!("{symbol}_{{{a},{}}}={v}", a + off))
                .collect();
            let _ = write!(s, "&{}", cells.join(", "));
            s.push_str(if a + 1 < self.rows.len() { ",\\\\\n" } else { "\n" });
        }
        s.push_str("\\end{align*}\n");
        s
    }

    /// One row per `a`, space separated.
    pub fn to_plain(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        s
    }
}

/// JSON form: `{ "n": int, "entries": [[a, b, "decimal"], ...] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleJson {
    pub n: usize,
    pub entries: Vec<(usize, usize, String)>,
}

/// Binomials `C(i, j)` for `0 <= i, j < size`.
struct BinomialTable(Vec<Vec<ExactInt>>);

impl BinomialTable {
    fn new(size: usize) -> Self {
        BinomialTable(
            (0..size)
                .map(|i| (0..size).map(|j| binomial(i as u64, j as u64)).collect())
                .collect(),
        )
    }

    fn get(&self, i: usize, j: usize) -> &ExactInt {
        &self.0[i][j]
    }
}

/// Weight linking the `(i, j)` entry of one triangle to the `(a, b)` entry of
/// the other: `C(i,a)C(j,b) + C(i,b)C(j,a)` off the diagonal, `C(i,a)C(j,a)` on it.
fn pair_weight(c: &BinomialTable, i: usize, j: usize, a: usize, b: usize) -> ExactInt {
    if a == b {
        c.get(i, a) * c.get(j, a)
    } else {
        c.get(i, a) * c.get(j, b) + c.get(i, b) * c.get(j, a)
    }
}

/// `S_{a,b}(G)` for the whole triangle.
pub fn star_sequence(g: &Graph) -> StarTriangle {
    let mut t = StarTriangle::zero(g.vertex_count());
    let dim = t.dim();
    let c = BinomialTable::new(dim.max(1));
    for (u, v) in g.edges() {
        let (x, y) = (g.degree(u) - 1, g.degree(v) - 1);
        for a in 0..=x.max(y) {
            for b in a..=x.max(y) {
                let w = pair_weight(&c, x, y, a, b);
                if !w.is_zero() {
                    t.rows[a][b - a] += w;
                }
            }
        }
    }
    t
}

/// `f_{i,j}`: number of edges whose endpoint degrees are `{i+1, j+1}`.
pub fn frequency_sequence(g: &Graph) -> StarTriangle {
    let mut t = StarTriangle::zero(g.vertex_count());
    for (u, v) in g.edges() {
        let (x, y) = (g.degree(u) - 1, g.degree(v) - 1);
        let (i, j) = (x.min(y), x.max(y));
        t.rows[i][j - i] += 1;
    }
    t
}

/// Frequency triangle to star triangle.
pub fn star_from_frequency(f: &StarTriangle) -> StarTriangle {
    let dim = f.dim();
    let c = BinomialTable::new(dim.max(1));
    StarTriangle::from_fn(f.n(), |a, b| {
        let mut acc = ExactInt::zero();
        for (i, j, fij) in f.entries() {
            if fij.is_zero() || j < b {
                continue;
            }
            acc += pair_weight(&c, i, j, a, b) * fij;
        }
        acc
    })
}

/// Star triangle to frequency triangle; inverse of [`star_from_frequency`].
pub fn frequency_from_star(s: &StarTriangle) -> StarTriangle {
    let dim = s.dim();
    let c = BinomialTable::new(dim.max(1));
    StarTriangle::from_fn(s.n(), |a, b| {
        let mut acc = ExactInt::zero();
        for (i, j, sij) in s.entries() {
            if sij.is_zero() || j < b {
                continue;
            }
            let term = pair_weight(&c, i, j, a, b) * sij;
            if (a + b + i + j) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    })
}

/// Sum of every entry. For a frequency triangle this is the edge count.
pub fn handshake_sum(f: &StarTriangle) -> ExactInt {
    f.entries().map(|(_, _, v)| v).sum()
}

/// `sum (1/(i+1) + 1/(j+1)) f_{i,j}`, which equals `n - n0` for a graph's
/// frequency triangle.
pub fn inverse_degree_sum(f: &StarTriangle) -> ExactRational {
    let mut acc = ExactRational::zero();
    for (i, j, v) in f.entries() {
        if v.is_zero() {
            continue;
        }
        let w = ExactRational::new(ExactInt::one(), ExactInt::from(i + 1))
            + ExactRational::new(ExactInt::one(), ExactInt::from(j + 1));
        acc += w * ExactRational::from_integer(v.clone());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ints;
    use crate::graph::Family;

    fn values(t: &StarTriangle) -> Vec<ExactInt> {
        t.entries().map(|(_, _, v)| v.clone()).collect()
    }

    fn k4() -> Graph {
        Family::Complete(4).build().unwrap()
    }

    fn p3() -> Graph {
        Family::Path(3).build().unwrap()
    }

    #[test]
    fn k4_triangles() {
        assert_eq!(values(&star_sequence(&k4())), ints([6, 24, 12, 24, 24, 6]));
        assert_eq!(values(&frequency_sequence(&k4())), ints([0, 0, 0, 0, 0, 6]));
    }

    #[test]
    fn p3_triangles() {
        let s = star_sequence(&p3());
        assert_eq!(values(&s), ints([2, 2, 0]));
        let f = frequency_sequence(&p3());
        assert_eq!(values(&f), ints([0, 2, 0]));
        assert_eq!(star_from_frequency(&f), s);
    }

    #[test]
    fn edgeless_and_tiny() {
        let g = Graph::empty(5);
        assert!(star_sequence(&g).is_zero());
        assert_eq!(star_sequence(&g).len(), 10);
        assert!(star_sequence(&Graph::empty(1)).is_empty());
        assert!(star_sequence(&Graph::empty(0)).is_empty());
        let z = StarTriangle::zero(4);
        assert!(star_from_frequency(&z).is_zero());
        assert!(frequency_from_star(&z).is_zero());
    }

    #[test]
    fn inversion_on_k4() {
        assert_eq!(frequency_from_star(&star_sequence(&k4())), frequency_sequence(&k4()));
        assert_eq!(star_from_frequency(&frequency_sequence(&k4())), star_sequence(&k4()));
    }

    #[test]
    fn lookup_conventions() {
        let s = star_sequence(&k4());
        assert_eq!(s.get(2, 0), s.get(0, 2));
        assert_eq!(s.get(0, 3), ExactInt::zero());
        assert_eq!(s.get(9, 9), ExactInt::zero());
        let mut t = StarTriangle::zero(3);
        assert_eq!(t.set(0, 2, 1.into()), Err(TriangleError::OutOfRange { a: 0, b: 2, n: 3 }));
        t.set(1, 0, 5.into()).unwrap();
        assert_eq!(t.get(0, 1), 5.into());
        assert!(t.ensure_same_n(&StarTriangle::zero(4)).is_err());
    }

    #[test]
    fn handshake_and_inverse_degree() {
        assert_eq!(handshake_sum(&frequency_sequence(&k4())), 6.into());
        assert_eq!(handshake_sum(&frequency_sequence(&p3())), 2.into());
        assert_eq!(handshake_sum(&StarTriangle::zero(5)), 0.into());
        assert_eq!(inverse_degree_sum(&frequency_sequence(&k4())), ExactRational::from_integer(4.into()));
        assert_eq!(inverse_degree_sum(&frequency_sequence(&p3())), ExactRational::from_integer(3.into()));
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(inverse_degree_sum(&frequency_sequence(&g)), ExactRational::from_integer(2.into()));
    }

    #[test]
    fn hub_pair_graph_frequencies() {
        // two adjacent hubs, each joined to every one of n-2 middle vertices
        for n in 4..9 {
            let mut edges = vec![(0, 1)];
            for m in 2..n {
                edges.push((0, m));
                edges.push((1, m));
            }
            let g = Graph::from_edges(n, edges).unwrap();
            assert_eq!(g.degrees().sorted_desc()[..2], [n - 1, n - 1]);
            let f = frequency_sequence(&g);
            assert_eq!(f.get(n - 2, n - 2), 1.into());
            // hub-to-middle edges have degrees (2, n-1), so they land on (1, n-2)
            assert_eq!(f.get(1, n - 2), (2 * (n - 2)).into());
            assert_eq!(f.get(0, n - 2), 0.into());
            assert_eq!(handshake_sum(&f), g.edge_count().into());
            assert_eq!(star_sequence(&g).get(n - 2, n - 2), 1.into());
        }
    }

    #[test]
    fn json_and_csv_round_trip() {
        let s = star_sequence(&k4());
        let json = s.to_json_string();
        assert_eq!(
            json,
            r#"{"n":4,"entries":[[0,0,"6"],[0,1,"24"],[0,2,"12"],[1,1,"24"],[1,2,"24"],[2,2,"6"]]}"#
        );
        assert_eq!(StarTriangle::from_json_str(&json).unwrap(), s);
        let csv = s.to_csv();
        assert!(csv.starts_with("a,b,value\n0,0,6\n"));
        assert_eq!(StarTriangle::from_csv(4, &csv).unwrap(), s);
        assert!(StarTriangle::from_json_str(r#"{"n":3,"entries":[[0,0,"x"]]}"#).is_err());
        assert!(StarTriangle::from_json_str(r#"{"n":3,"entries":[[0,5,"1"]]}"#).is_err());
    }

    #[test]
    fn latex_mentions_every_entry() {
        let tex = star_sequence(&k4()).to_latex("S");
        assert!(tex.contains("S_{0,2}=12"));
        assert!(tex.contains("S_{2,2}=6"));
    }
}
