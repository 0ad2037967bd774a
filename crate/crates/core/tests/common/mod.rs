#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dstar::graph::{random_graph, Family, Graph};
use dstar::starseq::StarTriangle;
use dstar::ExactInt;

pub const CORPUS_SEED: u64 = 0x5eed_2024;
pub const RANDOM_GRAPHS: usize = 560;

/// Every family instance with at most `max_n` vertices.
pub fn family_graphs(max_n: usize) -> Vec<Graph> {
    let mut fams = Vec::new();
    for n in 0..=max_n {
        fams.push(Family::Complete(n));
        if n >= 1 {
            fams.push(Family::Path(n));
        }
        if n >= 3 {
            fams.push(Family::Cycle(n));
        }
        if n >= 1 {
            fams.push(Family::Star(n - 1));
        }
    }
    for a in 0..=max_n.saturating_sub(2) {
        for b in 0..=max_n.saturating_sub(2 + a) {
            fams.push(Family::DoubleStar(a, b));
        }
    }
    fams.into_iter().map(|f| f.build().unwrap()).collect()
}

/// Copy of `g` with `extra` isolated vertices appended.
pub fn pad(g: &Graph, extra: usize) -> Graph {
    Graph::from_edges(g.vertex_count() + extra, g.edges()).unwrap()
}

/// Families, family graphs padded with isolated vertices, and
/// `RANDOM_GRAPHS` seeded G(n, 1/2) graphs, all on at most `max_n` vertices.
pub fn corpus(max_n: usize) -> Vec<Graph> {
    let mut out = family_graphs(max_n);
    let padded: Vec<Graph> = out
        .iter()
        .filter(|g| g.vertex_count() + 2 <= max_n && g.edge_count() > 0)
        .map(|g| pad(g, 2))
        .collect();
    out.extend(padded);
    out.extend(random_graphs(max_n, RANDOM_GRAPHS, CORPUS_SEED));
    out
}

pub fn random_graphs(max_n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            random_graph(n, &mut rng)
        })
        .collect()
}

/// Triangle for `n` with entries drawn from `0..=max_entry`.
pub fn random_triangle<R: Rng>(rng: &mut R, n: usize, max_entry: i64) -> StarTriangle {
    StarTriangle::from_fn(n, |_, _| ExactInt::from(rng.gen_range(0..=max_entry)))
}

fn edge_index(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative per isomorphism class of graphs on `n <= 6` vertices,
/// by minimizing the edge bitmask over all relabelings.
pub fn iso_classes(n: usize) -> Vec<Graph> {
    assert!(n <= 6);
    let edges = edge_index(n);
    let slot = |u: usize, v: usize| edges.iter().position(|&e| e == (u.min(v), u.max(v))).unwrap();
    // perm_maps[p][i] = bit index of edge i after relabeling by p
    let perm_maps: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .map(|p| edges.iter().map(|&(u, v)| slot(p[u], p[v])).collect())
        .collect();
    let mut canon = BTreeSet::new();
    for mask in 0u32..1 << edges.len() {
        let best = perm_maps
            .iter()
            .map(|map| {
                (0..edges.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .fold(0u32, |acc, i| acc | 1 << map[i])
            })
            .min()
            .unwrap();
        canon.insert(best);
    }
    canon
        .into_iter()
        .map(|mask| {
            let es = (0..edges.len()).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]);
            Graph::from_edges(n, es).unwrap()
        })
        .collect()
}

/// Graphs on 7 vertices covering every isomorphism class: each 6-vertex class
/// representative extended by a seventh vertex with every possible neighborhood.
pub fn seven_vertex_cover(six: &[Graph]) -> Vec<Graph> {
    let mut out = Vec::new();
    for g in six {
        for nbhd in 0u32..64 {
            let extra = (0..6).filter(|&u| nbhd >> u & 1 == 1).map(|u| (u, 6));
            out.push(Graph::from_edges(7, g.edges().chain(extra)).unwrap());
        }
    }
    out
}
