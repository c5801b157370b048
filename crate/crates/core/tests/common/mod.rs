//! Brute-force oracles, independent of the library's search code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use fheavy::Graph;
use rand::Rng;

pub fn random_graph<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p: f64 = rng.gen_range(0.1..0.9);
    let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, pairs.into_iter().filter(|_| rng.gen_bool(p))).unwrap()
}

/// Heap's algorithm; `f` returns false to stop.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    if !f(&p) {
        return;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            if !f(&p) {
                return;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

pub fn isomorphic_by_permutation(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let edges: Vec<_> = a.edges().collect();
    let mut found = false;
    for_each_permutation(a.n(), |p| {
        found = edges.iter().all(|&(u, v)| b.has_edge(p[u], p[v]));
        !found
    });
    found
}

/// Subsets of `0..n` of size `k`, lexicographic.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every `|V(p)|`-subset whose induced subgraph is isomorphic to `p`.
pub fn brute_force_copies(g: &Graph, p: &Graph) -> BTreeSet<Vec<usize>> {
    if p.n() > g.n() {
        return BTreeSet::new();
    }
    subsets(g.n(), p.n())
        .into_iter()
        .filter(|s| isomorphic_by_permutation(&g.induced(s).unwrap().0, p))
        .collect()
}

/// Hamiltonicity by trying every cyclic order with vertex 0 first.
pub fn hamiltonian_by_permutation(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let mut found = false;
    for_each_permutation(n - 1, |p| {
        let at = |i: usize| if i == 0 { 0 } else { p[i - 1] + 1 };
        found = (0..n).all(|i| g.has_edge(at(i), at((i + 1) % n)));
        !found
    });
    found
}
