#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigUint;
use topoindex_core::{FactoredInteger, Graph};

/// Prime exponents of `v` by trial division.
pub fn factor(mut v: u64, into: &mut BTreeMap<u64, u64>, times: u64) {
    let mut p = 2;
    while p * p <= v {
        while v.is_multiple_of(p) {
            *into.entry(p).or_default() += times;
            v /= p;
        }
        p += 1;
    }
    if v > 1 {
        *into.entry(v).or_default() += times;
    }
}

pub fn exponents(f: &FactoredInteger) -> BTreeMap<u64, u64> {
    f.factors()
        .map(|(p, e)| (p, u64::try_from(e.clone()).expect("small exponent")))
        .collect()
}

/// Degrees read straight off the adjacency lists.
pub fn degrees(g: &Graph) -> Vec<u64> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).unwrap().len() as u64)
        .collect()
}

/// Edges by scanning every adjacency list.
pub fn edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..g.vertex_count() {
        for &v in g.neighbors(u).unwrap() {
            if u < v {
                out.push((u, v));
            }
        }
    }
    out
}

pub fn pi1(g: &Graph, c: u64) -> BTreeMap<u64, u64> {
    let mut out = BTreeMap::new();
    for d in degrees(g) {
        factor(d, &mut out, c);
    }
    out.retain(|_, e| *e > 0);
    out
}

pub fn pi2(g: &Graph) -> BTreeMap<u64, u64> {
    let d = degrees(g);
    let mut out = BTreeMap::new();
    for (u, v) in edges(g) {
        factor(d[u] * d[v], &mut out, 1);
    }
    out
}

pub fn pi1_star(g: &Graph) -> BTreeMap<u64, u64> {
    let d = degrees(g);
    let mut out = BTreeMap::new();
    for (u, v) in edges(g) {
        factor(d[u] + d[v], &mut out, 1);
    }
    out
}

pub fn chi(g: &Graph, k: u32) -> BigUint {
    let d = degrees(g);
    edges(g)
        .into_iter()
        .map(|(u, v)| BigUint::from(d[u] + d[v]).pow(k))
        .sum()
}

/// `(|V|, |E|)` of each family at dimension `n`.
pub fn expected_size(code: &str, n: i64) -> (i64, i64) {
    match code {
        "SL" => (15 * n * n + 3 * n, 36 * n * n),
        "CS" => (3 * n + 1, 6 * n),
        "HX" => (3 * n * n - 3 * n + 1, 9 * n * n - 15 * n + 6),
        "OX" => (9 * n * n + 3 * n, 18 * n * n),
        "HC" => (6 * n * n, 9 * n * n - 3 * n),
        _ => unreachable!(),
    }
}
