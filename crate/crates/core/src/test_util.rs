//! Brute-force oracles shared by the unit tests.

use std::collections::BTreeSet;

use rand::Rng;

use crate::graph::Graph;
use crate::patterns::InducedCopy;

pub fn random_graph<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p: f64 = rng.gen_range(0.1..0.9);
    let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, pairs.into_iter().filter(|_| rng.gen_bool(p))).unwrap()
}

/// Heap's algorithm over all permutations of `0..n`.
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

pub fn brute_force_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut found = false;
    for_each_permutation(a.n(), |p| {
        found = a.edges().all(|(u, v)| b.has_edge(p[u], p[v]));
        !found
    });
    found
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Scans every `|V(p)|`-subset of the host.
pub fn brute_force_copies(g: &Graph, p: &Graph) -> Vec<InducedCopy> {
    if p.n() > g.n() {
        return Vec::new();
    }
    subsets(g.n(), p.n())
        .into_iter()
        .filter(|s| brute_force_isomorphic(&g.induced(s).unwrap().0, p))
        .map(|subset| InducedCopy { subset })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Hamiltonicity by trying every vertex order with vertex 0 first.
pub fn brute_force_hamiltonian(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let mut found = false;
    for_each_permutation(n - 1, |p| {
        let order: Vec<usize> = std::iter::once(0).chain(p.iter().map(|x| x + 1)).collect();
        found = (0..n).all(|i| g.has_edge(order[i], order[(i + 1) % n]));
        !found
    });
    found
}
