//! Immutable simple undirected graphs on the vertices `0..n`.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// A simple undirected graph with one adjacency bitset per vertex.
///
/// Built once and never mutated, so it is freely shared across threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
    degrees: Vec<usize>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse into one edge.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut rows = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(rows))
    }

    pub fn empty(n: usize) -> Self {
        Self::from_rows(vec![VertexSet::new(n); n])
    }

    pub fn complete(n: usize) -> Self {
        let rows = (0..n)
            .map(|v| {
                let mut r = VertexSet::full(n);
                r.remove(v);
                r
            })
            .collect();
        Self::from_rows(rows)
    }

    pub fn cycle(n: usize) -> Self {
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle needs n >= 3")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).expect("valid")
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Self::new(10, outer.chain(spokes).chain(inner)).expect("valid")
    }

    /// Graph from rows over `0..n` with `n <= 64`, one word per vertex.
    /// Rows must be symmetric and loop-free.
    pub fn from_word_rows(words: &[u64]) -> Self {
        let n = words.len();
        assert!(n <= 64);
        let rows = words
            .iter()
            .map(|&w| VertexSet::from_vertices(n, (0..n).filter(|&j| w >> j & 1 == 1)))
            .collect();
        Self::from_rows(rows)
    }

    fn from_rows(rows: Vec<VertexSet>) -> Self {
        let degrees: Vec<usize> = rows.iter().map(VertexSet::len).collect();
        let edge_count = degrees.iter().sum::<usize>() / 2;
        Graph {
            n: rows.len(),
            rows,
            degrees,
            edge_count,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Degree of `v`. Panics if `v >= n`; use [`Graph::check_vertex`] first
    /// on untrusted input.
    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.rows[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Heavy means `d(v) >= n/2`, evaluated as `2·d(v) >= n`.
    #[inline]
    pub fn is_heavy(&self, v: usize) -> bool {
        2 * self.degrees[v] >= self.n
    }

    /// Shortest-path hop count between `u` and `v`; `None` when unreachable.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(Some(0));
        }
        let mut seen = VertexSet::new(self.n);
        seen.insert(u);
        let mut frontier = seen.clone();
        let mut dist = 0;
        while !frontier.is_empty() {
            dist += 1;
            let mut next = VertexSet::new(self.n);
            for w in &frontier {
                next.union_with(&self.rows[w]);
            }
            next.difference_with(&seen);
            if next.contains(v) {
                return Ok(Some(dist));
            }
            seen.union_with(&next);
            frontier = next;
        }
        Ok(None)
    }

    /// `true` iff `u` and `v` are non-adjacent, distinct and share a neighbor.
    #[inline]
    pub(crate) fn at_distance_two(&self, u: usize, v: usize) -> bool {
        u != v && !self.rows[u].contains(v) && self.rows[u].intersects(&self.rows[v])
    }

    /// The subgraph induced by `subset`, plus the map from new indices to
    /// the original vertices (ascending).
    pub fn induced(&self, subset: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut map: Vec<usize> = subset.to_vec();
        for &v in &map {
            self.check_vertex(v)?;
        }
        map.sort_unstable();
        map.dedup();
        let k = map.len();
        let mut rows = vec![VertexSet::new(k); k];
        for i in 0..k {
            for j in i + 1..k {
                if self.rows[map[i]].contains(map[j]) {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
            }
        }
        Ok((Self::from_rows(rows), map))
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    /// `start` itself is always included.
    pub(crate) fn component_within(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::new(self.n);
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(w) = stack.pop() {
            let mut fresh = self.rows[w].intersection(within);
            fresh.difference_with(&seen);
            for x in &fresh {
                seen.insert(x);
                stack.push(x);
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_within(0, &self.vertex_set()).len() == self.n
    }

    /// Cut vertices, found by a low-link depth-first search.
    pub fn articulation_points(&self) -> VertexSet {
        let n = self.n;
        let mut cut = VertexSet::new(n);
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            // (vertex, parent, remaining neighbors)
            let mut stack: Vec<(usize, usize, crate::bitset::Iter<'_>)> =
                vec![(root, usize::MAX, self.rows[root].iter())];
            while let Some(top) = stack.last_mut() {
                let (v, parent) = (top.0, top.1);
                match top.2.next() {
                    Some(w) if w == parent => {}
                    Some(w) if disc[w] != usize::MAX => low[v] = low[v].min(disc[w]),
                    Some(w) => {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, self.rows[w].iter()));
                    }
                    None => {
                        stack.pop();
                        if parent != usize::MAX {
                            low[parent] = low[parent].min(low[v]);
                            if parent != root && low[v] >= disc[parent] {
                                cut.insert(parent);
                            }
                        }
                    }
                }
            }
            if root_children > 1 {
                cut.insert(root);
            }
        }
        cut
    }

    /// `n >= 3`, connected, and free of cut vertices.
    pub fn is_two_connected(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.articulation_points().is_empty()
    }

    /// Membership of `{u, v}` in the Ore-extended edge set: a real edge, or a
    /// pair whose degree sum reaches `n`.
    pub fn ore_adjacent(&self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SamePair(u));
        }
        Ok(self.ore_pair(u, v))
    }

    #[inline]
    pub(crate) fn ore_pair(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v) || self.degrees[u] + self.degrees[v] >= self.n
    }

    /// One `u64` row per vertex, available when `n <= 64`.
    pub fn word_rows(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| self.rows.iter().map(VertexSet::low_word).collect())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}
