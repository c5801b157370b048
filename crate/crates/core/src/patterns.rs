//! Small template graphs and enumeration of their induced copies.
//!
//! Catalog numbering is fixed:
//!
//! * claw `K_{1,3}`: center `0`, ends `1, 2, 3`
//! * `P_k`: the path `0 - 1 - ... - (k-1)`
//! * deer: triangle `0, 1, 2` with pendant paths `0 - 3 - 4` and `1 - 5 - 6`
//! * hourglass: shared vertex `0`, triangles `{0, 1, 2}` and `{0, 3, 4}`

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{decode_graph6, encode_graph6};

/// Order bound for [`is_isomorphic_small`].
pub const MAX_ISO_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PatternKind {
    Claw,
    Path(usize),
    Deer,
    Hourglass,
    /// A user-supplied graph, labelled by its graph6 string.
    Custom(String),
}

#[derive(Debug, Clone)]
pub struct Pattern {
    kind: PatternKind,
    graph: Graph,
    // search plan: pattern vertices in mapping order
    order: Vec<usize>,
}

impl Pattern {
    fn build(kind: PatternKind, graph: Graph) -> Self {
        let order = search_order(&graph);
        Pattern { kind, graph, order }
    }

    pub fn claw() -> Self {
        Self::build(PatternKind::Claw, Graph::complete_bipartite(1, 3))
    }

    /// The path on `k >= 1` vertices.
    pub fn path(k: usize) -> Self {
        assert!(k >= 1, "a path needs at least one vertex");
        Self::build(PatternKind::Path(k), Graph::path(k))
    }

    pub fn deer() -> Self {
        let g = Graph::new(7, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (1, 5), (5, 6)]).expect("valid");
        Self::build(PatternKind::Deer, g)
    }

    pub fn hourglass() -> Self {
        let g = Graph::new(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).expect("valid");
        Self::build(PatternKind::Hourglass, g)
    }

    pub fn custom(graph: Graph) -> Result<Self> {
        let label = encode_graph6(&graph)?;
        Ok(Self::build(PatternKind::Custom(label), graph))
    }

    /// Looks a pattern up by name: `claw`, `p<k>`, `deer`, `hourglass`
    /// (case-insensitive), or `g6:<graph6>` for a custom graph.
    pub fn by_name(name: &str) -> Result<Self> {
        if let Some(g6) = name.strip_prefix("g6:") {
            let g = decode_graph6(g6).map_err(|_| Error::UnknownPattern(name.to_string()))?;
            return Self::custom(g);
        }
        let lower = name.to_ascii_lowercase();
        match lower.as_str() {
            "claw" | "k13" | "k1,3" => Ok(Self::claw()),
            "deer" | "d" => Ok(Self::deer()),
            "hourglass" | "h" => Ok(Self::hourglass()),
            _ => lower
                .strip_prefix('p')
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|&k| k >= 1)
                .map(Self::path)
                .ok_or_else(|| Error::UnknownPattern(name.to_string())),
        }
    }

    pub fn kind(&self) -> &PatternKind {
        &self.kind
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.n()
    }

    /// Name accepted back by [`Pattern::by_name`].
    pub fn name(&self) -> String {
        match &self.kind {
            PatternKind::Claw => "claw".into(),
            PatternKind::Path(k) => format!("p{k}"),
            PatternKind::Deer => "deer".into(),
            PatternKind::Hourglass => "hourglass".into(),
            PatternKind::Custom(g6) => format!("g6:{g6}"),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Claw, `P4` through `P7`, deer, hourglass.
pub fn catalog() -> Vec<Pattern> {
    let mut v = vec![Pattern::claw()];
    v.extend((4..=7).map(Pattern::path));
    v.push(Pattern::deer());
    v.push(Pattern::hourglass());
    v
}

/// Map the most constrained pattern vertex next: most already-placed
/// neighbors, then highest degree, then lowest index.
fn search_order(p: &Graph) -> Vec<usize> {
    let k = p.n();
    let mut placed = VertexSet::new(k);
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let next = (0..k)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| (p.neighbors(v).intersection_len(&placed), p.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed.insert(next);
        order.push(next);
    }
    order
}

/// A vertex subset of a host graph inducing a copy of a pattern.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct InducedCopy {
    pub subset: Vec<usize>,
}

struct Embedder<'a> {
    host: &'a Graph,
    pattern: &'a Pattern,
    // eligible[i]: host vertices whose degree can carry order[i]
    eligible: Vec<VertexSet>,
    images: Vec<usize>,
    used: VertexSet,
}

impl<'a> Embedder<'a> {
    fn new(host: &'a Graph, pattern: &'a Pattern) -> Self {
        let eligible = pattern
            .order
            .iter()
            .map(|&pv| {
                let need = pattern.graph.degree(pv);
                VertexSet::from_vertices(host.n(), (0..host.n()).filter(|&v| host.degree(v) >= need))
            })
            .collect();
        Embedder {
            host,
            pattern,
            eligible,
            images: Vec::with_capacity(pattern.order()),
            used: VertexSet::new(host.n()),
        }
    }

    /// Calls `f` with the host images of `order`; stops early when `f`
    /// returns `false`.
    fn run(&mut self, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        let i = self.images.len();
        if i == self.pattern.order() {
            return f(&self.images);
        }
        let pv = self.pattern.order[i];
        let prow = self.pattern.graph.neighbors(pv);
        let mut cand = self.eligible[i].difference(&self.used);
        for (j, &img) in self.images.iter().enumerate() {
            if prow.contains(self.pattern.order[j]) {
                cand.intersect_with(self.host.neighbors(img));
            } else {
                cand.difference_with(self.host.neighbors(img));
            }
            if cand.is_empty() {
                return true;
            }
        }
        for v in &cand {
            self.images.push(v);
            self.used.insert(v);
            let go_on = self.run(f);
            self.used.remove(v);
            self.images.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// Every subset `S` of the host with `G[S]` isomorphic to the pattern, once
/// each, sorted lexicographically.
pub fn enumerate_induced_copies(g: &Graph, p: &Pattern) -> Vec<InducedCopy> {
    let mut found = BTreeSet::new();
    if p.order() > g.n() {
        return Vec::new();
    }
    Embedder::new(g, p).run(&mut |imgs| {
        let mut s = imgs.to_vec();
        s.sort_unstable();
        found.insert(s);
        true
    });
    found.into_iter().map(|subset| InducedCopy { subset }).collect()
}

/// Some induced copy, or `None` when the host is pattern-free. Stops at the
/// first embedding found.
pub fn find_induced_copy(g: &Graph, p: &Pattern) -> Option<InducedCopy> {
    if p.order() > g.n() {
        return None;
    }
    let mut hit = None;
    Embedder::new(g, p).run(&mut |imgs| {
        let mut s = imgs.to_vec();
        s.sort_unstable();
        hit = Some(InducedCopy { subset: s });
        false
    });
    hit
}

/// Exact isomorphism test for graphs on at most [`MAX_ISO_ORDER`] vertices.
pub fn is_isomorphic_small(a: &Graph, b: &Graph) -> Result<bool> {
    for g in [a, b] {
        if g.n() > MAX_ISO_ORDER {
            return Err(Error::TooLarge { n: g.n(), max: MAX_ISO_ORDER });
        }
    }
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let mut da = a.degrees().to_vec();
    let mut db = b.degrees().to_vec();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }

    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, taken: &mut [bool]) -> bool {
        let i = map.len();
        if i == a.n() {
            return true;
        }
        for t in 0..b.n() {
            if taken[t] || a.degree(i) != b.degree(t) {
                continue;
            }
            if (0..i).any(|j| a.has_edge(i, j) != b.has_edge(t, map[j])) {
                continue;
            }
            map.push(t);
            taken[t] = true;
            if extend(a, b, map, taken) {
                return true;
            }
            taken[t] = false;
            map.pop();
        }
        false
    }

    Ok(extend(a, b, &mut Vec::with_capacity(a.n()), &mut vec![false; b.n()]))
}

/// All unordered pairs `(u, v)`, `u < v`, at distance exactly two in `h`.
pub fn distance2_pairs(h: &Graph) -> Vec<(usize, usize)> {
    (0..h.n())
        .flat_map(|u| (u + 1..h.n()).map(move |v| (u, v)))
        .filter(|&(u, v)| h.at_distance_two(u, v))
        .collect()
}
