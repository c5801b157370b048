//! Graph sources for the harness: isomorph-free exhaustive generation for
//! small orders, plain labeled enumeration, and seeded random graphs.

use std::collections::HashSet;

use rand::Rng;
use rayon::prelude::*;

use crate::canon::{canonical_code_rows, rows_from_code, MAX_CANON_ORDER};
use crate::graph::Graph;

/// Largest order the exhaustive generator accepts.
pub const MAX_EXHAUSTIVE_ORDER: usize = 10;

fn rows_connected(rows: &[u64]) -> bool {
    let n = rows.len();
    if n == 0 {
        return true;
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros();
            f &= f - 1;
            next |= rows[v as usize];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == all
}

/// Canonical codes of all graphs on `n` vertices obtained by adding one
/// vertex to a parent, adjacent to any subset of the parent's vertices of
/// size at least `min_new_degree`. Sorted ascending.
fn extend_codes(parents: &[u128], parent_n: usize, min_new_degree: u32) -> Vec<u128> {
    let n = parent_n + 1;
    let mut codes: Vec<u128> = parents
        .par_iter()
        .flat_map_iter(|&pc| {
            let base = rows_from_code(parent_n, pc);
            let mut local = HashSet::new();
            for mask in 0u64..(1 << parent_n) {
                if mask.count_ones() < min_new_degree {
                    continue;
                }
                let mut rows = base.clone();
                rows.push(mask);
                for (i, r) in rows.iter_mut().enumerate().take(parent_n) {
                    *r |= (mask >> i & 1) << parent_n;
                }
                local.insert(canonical_code_rows(&rows));
            }
            local
        })
        .collect();
    codes.par_sort_unstable();
    codes.dedup();
    debug_assert!(n <= MAX_CANON_ORDER);
    codes
}

fn codes_up_to(n: usize) -> Vec<Vec<u128>> {
    assert!(n <= MAX_EXHAUSTIVE_ORDER, "exhaustive generation is limited to n <= {MAX_EXHAUSTIVE_ORDER}");
    let mut levels = vec![vec![0u128]];
    for k in 1..=n {
        let next = extend_codes(&levels[k - 1], k - 1, 0);
        levels.push(next);
    }
    levels
}

fn decode(n: usize, codes: &[u128]) -> Vec<Graph> {
    codes.iter().map(|&c| Graph::from_word_rows(&rows_from_code(n, c))).collect()
}

/// One representative of every isomorphism class of graphs on `n`
/// vertices, in ascending canonical-code order.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let levels = codes_up_to(n);
    decode(n, &levels[n])
}

/// Every isomorphism class on `0..=max_n` vertices, grouped by order.
pub fn all_graphs_up_to(max_n: usize) -> Vec<Vec<Graph>> {
    codes_up_to(max_n).iter().enumerate().map(|(n, c)| decode(n, c)).collect()
}

/// Every isomorphism class of 2-connected graphs on `n` vertices.
///
/// Deleting any vertex of a 2-connected graph leaves a connected graph, and
/// the deleted vertex had degree at least two, so extending the connected
/// classes on `n - 1` vertices by a vertex of degree at least two reaches
/// every class.
pub fn two_connected_graphs(n: usize) -> Vec<Graph> {
    if n < 3 {
        return Vec::new();
    }
    let levels = codes_up_to(n - 1);
    let parents: Vec<u128> = levels[n - 1]
        .iter()
        .copied()
        .filter(|&c| rows_connected(&rows_from_code(n - 1, c)))
        .collect();
    decode(n, &extend_codes(&parents, n - 1, 2))
        .into_iter()
        .filter(Graph::is_two_connected)
        .collect()
}

/// Every labeled graph on `n` vertices, by upper-triangle bitmask
/// (`2^(n(n-1)/2)` graphs).
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 40, "too many labeled graphs");
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::new(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e))
            .expect("valid pairs")
    })
}

/// `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<_> = pairs.filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, edges).expect("valid pairs")
}

/// A random spanning tree (each vertex attached to an earlier one) plus
/// `G(n, p)` edges on top; always connected.
pub fn random_connected_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    edges.extend((0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)));
    Graph::new(n, edges).expect("valid pairs")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;

    // Unlabeled graph counts by order, 0..=7.
    const GRAPH_COUNTS: [usize; 8] = [1, 1, 2, 4, 11, 34, 156, 1044];
    // Unlabeled 2-connected graph counts for orders 3..=7.
    const BLOCK_COUNTS: [usize; 5] = [1, 3, 10, 56, 468];

    #[test]
    fn class_counts_up_to_7() {
        let levels = all_graphs_up_to(7);
        for (n, gs) in levels.iter().enumerate() {
            assert_eq!(gs.len(), GRAPH_COUNTS[n], "n={n}");
        }
        for (i, &want) in BLOCK_COUNTS.iter().enumerate() {
            let n = i + 3;
            assert_eq!(two_connected_graphs(n).len(), want, "n={n}");
            let from_all = levels[n].iter().filter(|g| g.is_two_connected()).count();
            assert_eq!(from_all, want, "n={n}");
        }
    }

    #[test]
    fn labeled_enumeration_collapses_to_the_same_classes() {
        for n in 0..=6 {
            let codes: HashSet<u128> = labeled_graphs(n).map(|g| canonical_code(&g)).collect();
            let gen: HashSet<u128> = all_graphs(n).iter().map(canonical_code).collect();
            assert_eq!(codes, gen, "n={n}");
        }
    }

    #[test]
    fn random_connected_is_connected() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        for n in 1..20 {
            assert!(random_connected_graph(&mut rng, n, 0.05).is_connected());
        }
    }
}
