//! Canonical forms for graphs on at most 16 vertices.
//!
//! Individualization-refinement: the vertex partition is refined to an
//! equitable ordered partition, then each vertex of the first non-singleton
//! cell is individualized in turn. Every discrete leaf yields a relabeling;
//! the largest resulting upper-triangle code is the canonical code. No
//! automorphism pruning is done. A node whose cells are pairwise uniform
//! (each cell a clique or independent set, each pair of cells fully joined
//! or fully disjoint) produces the same code at every leaf below it, so
//! only one leaf is expanded there.

use crate::graph::Graph;

pub const MAX_CANON_ORDER: usize = 16;

/// Bit index of the pair `i < j` in a canonical code (graph6 column order).
#[inline]
fn pair_bit(i: usize, j: usize) -> u32 {
    (j * (j - 1) / 2 + i) as u32
}

#[inline]
fn bits(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (w != 0).then(|| {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            b
        })
    })
}

/// Upper-triangle code of the graph with adjacency `rows` relabeled so that
/// `order[k]` becomes vertex `k`.
fn code_of(rows: &[u64], order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        let rj = rows[order[j]];
        for (i, &oi) in order[..j].iter().enumerate() {
            if rj >> oi & 1 == 1 {
                code |= 1u128 << pair_bit(i, j);
            }
        }
    }
    code
}

struct Canon<'a> {
    rows: &'a [u64],
    best: Option<u128>,
}

impl Canon<'_> {
    /// Refines `cells` (ordered, as vertex masks) until equitable. Cells are
    /// split by neighbor count into each splitter cell, pieces ordered by
    /// ascending count.
    fn refine(&self, cells: &mut Vec<u64>) {
        'restart: loop {
            for si in 0..cells.len() {
                let splitter = cells[si];
                let mut split_any = false;
                let mut ci = 0;
                while ci < cells.len() {
                    let c = cells[ci];
                    if c & (c - 1) == 0 {
                        ci += 1;
                        continue;
                    }
                    let mut groups = [0u64; MAX_CANON_ORDER + 1];
                    for v in bits(c) {
                        groups[(self.rows[v] & splitter).count_ones() as usize] |= 1 << v;
                    }
                    let pieces: Vec<u64> = groups.iter().copied().filter(|&g| g != 0).collect();
                    if pieces.len() > 1 {
                        let k = pieces.len();
                        cells.splice(ci..=ci, pieces);
                        ci += k;
                        split_any = true;
                    } else {
                        ci += 1;
                    }
                }
                if split_any {
                    continue 'restart;
                }
            }
            return;
        }
    }

    fn uniform(&self, cells: &[u64]) -> bool {
        cells.iter().all(|&c| {
            cells.iter().all(|&d| {
                let mut seen: Option<bool> = None;
                bits(c).all(|v| {
                    let other = d & !(1u64 << v);
                    let hit = self.rows[v] & other;
                    let full = if hit == other {
                        true
                    } else if hit == 0 {
                        false
                    } else {
                        return false;
                    };
                    // an empty `other` is consistent with either
                    if other == 0 {
                        return true;
                    }
                    *seen.get_or_insert(full) == full
                })
            })
        })
    }

    fn leaf(&mut self, cells: &[u64]) {
        let order: Vec<usize> = cells.iter().flat_map(|&c| bits(c)).collect();
        let code = code_of(self.rows, &order);
        if self.best.is_none_or(|b| code > b) {
            self.best = Some(code);
        }
    }

    fn search(&mut self, mut cells: Vec<u64>) {
        self.refine(&mut cells);
        if cells.len() == self.rows.len() || self.uniform(&cells) {
            self.leaf(&cells);
            return;
        }
        let target = cells.iter().position(|&c| c & (c - 1) != 0).expect("non-discrete");
        let cell = cells[target];
        for v in bits(cell) {
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(1u64 << v);
            next.push(cell & !(1u64 << v));
            next.extend_from_slice(&cells[target + 1..]);
            self.search(next);
        }
    }
}

/// Canonical code of a graph given as `u64` adjacency rows (`n <= 16`).
/// Two graphs of the same order get equal codes iff they are isomorphic.
pub fn canonical_code_rows(rows: &[u64]) -> u128 {
    let n = rows.len();
    assert!(n <= MAX_CANON_ORDER, "canonical codes need n <= {MAX_CANON_ORDER}");
    if n <= 1 {
        return 0;
    }
    let mut c = Canon { rows, best: None };
    c.search(vec![(1u64 << n) - 1]);
    c.best.expect("at least one leaf")
}

pub fn canonical_code(g: &Graph) -> u128 {
    canonical_code_rows(&g.word_rows().expect("n <= 64"))
}

/// Adjacency rows of the graph a code describes.
pub fn rows_from_code(n: usize, code: u128) -> Vec<u64> {
    let mut rows = vec![0u64; n];
    for j in 1..n {
        for i in 0..j {
            if code >> pair_bit(i, j) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    rows
}

pub fn canonical_graph(g: &Graph) -> Graph {
    Graph::from_word_rows(&rows_from_code(g.n(), canonical_code(g)))
}
