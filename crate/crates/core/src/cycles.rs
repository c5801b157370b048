//! Exact cycle search: Hamilton cycles, cycles through a required vertex
//! set, and expansion of Ore-cycles into real cycles.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A cycle of the host graph in canonical form: it starts at its smallest
/// vertex and its second vertex is smaller than its last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cycle {
    seq: Vec<usize>,
}

fn normalize(mut seq: Vec<usize>) -> Vec<usize> {
    if let Some(pos) = seq.iter().enumerate().min_by_key(|(_, v)| **v).map(|(i, _)| i) {
        seq.rotate_left(pos);
    }
    if seq.len() > 2 && seq[1] > seq[seq.len() - 1] {
        seq[1..].reverse();
    }
    seq
}

fn check_distinct(n: usize, seq: &[usize]) -> std::result::Result<(), String> {
    if seq.len() < 3 {
        return Err(format!("needs at least 3 vertices, got {}", seq.len()));
    }
    let mut seen = VertexSet::new(n);
    for &v in seq {
        if v >= n {
            return Err(format!("vertex {v} out of range"));
        }
        if seen.contains(v) {
            return Err(format!("vertex {v} repeats"));
        }
        seen.insert(v);
    }
    Ok(())
}

fn cyclic_pairs(seq: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..seq.len()).map(move |i| (seq[i], seq[(i + 1) % seq.len()]))
}

impl Cycle {
    /// Validates `seq` against `g` and normalizes it.
    pub fn new(g: &Graph, seq: Vec<usize>) -> Result<Self> {
        check_distinct(g.n(), &seq).map_err(Error::InvalidCycle)?;
        if let Some((u, v)) = cyclic_pairs(&seq).find(|&(u, v)| !g.has_edge(u, v)) {
            return Err(Error::InvalidCycle(format!("{u}-{v} is not an edge")));
        }
        Ok(Cycle { seq: normalize(seq) })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.seq.contains(&v)
    }

    /// Re-checks distinctness and adjacency against `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        Cycle::new(g, self.seq.clone()).is_ok()
    }
}

/// A cyclic vertex sequence whose consecutive pairs are Ore-adjacent.
/// `virtual_edges[i]` marks the pair `(seq[i], seq[i+1 mod k])` as a
/// non-edge admitted only through its degree sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OCycle {
    seq: Vec<usize>,
    virtual_edges: Vec<bool>,
}

impl OCycle {
    pub fn new(g: &Graph, seq: Vec<usize>) -> Result<Self> {
        check_distinct(g.n(), &seq).map_err(Error::InvalidOCycle)?;
        let mut virtual_edges = Vec::with_capacity(seq.len());
        for (u, v) in cyclic_pairs(&seq) {
            if !g.ore_pair(u, v) {
                return Err(Error::InvalidOCycle(format!(
                    "{u}-{v} is neither an edge nor a pair with degree sum >= {}",
                    g.n()
                )));
            }
            virtual_edges.push(!g.has_edge(u, v));
        }
        Ok(OCycle { seq, virtual_edges })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.seq
    }

    pub fn virtual_edges(&self) -> &[bool] {
        &self.virtual_edges
    }

    pub fn is_real(&self) -> bool {
        !self.virtual_edges.contains(&true)
    }
}

/// Depth-first search for a cycle through `start` covering `required`
/// (which must contain `start`). Extends in ascending neighbor order.
struct ThroughSearch<'a> {
    g: &'a Graph,
    start: usize,
    path: Vec<usize>,
    unvisited: VertexSet,
    // required vertices not yet on the path
    pending: VertexSet,
}

impl ThroughSearch<'_> {
    fn run(&mut self) -> bool {
        let cur = *self.path.last().expect("non-empty path");
        if self.pending.is_empty() && self.path.len() >= 3 && self.g.has_edge(cur, self.start) {
            return true;
        }
        let cands = self.g.neighbors(cur).intersection(&self.unvisited);
        for next in &cands {
            self.path.push(next);
            self.unvisited.remove(next);
            let was_pending = self.pending.contains(next);
            self.pending.remove(next);
            if self.feasible(next) && self.run() {
                return true;
            }
            if was_pending {
                self.pending.insert(next);
            }
            self.unvisited.insert(next);
            self.path.pop();
        }
        false
    }

    /// Necessary conditions for closing a cycle from `cur` back to `start`
    /// through every pending vertex.
    fn feasible(&self, cur: usize) -> bool {
        if !self.pending.is_empty() {
            // every pending vertex still needs two usable neighbors
            let mut usable = self.unvisited.clone();
            usable.insert(cur);
            usable.insert(self.start);
            if self.pending.iter().any(|p| self.g.neighbors(p).intersection_len(&usable) < 2) {
                return false;
            }
        }
        let mut reach = self.g.component_within(cur, &self.unvisited);
        if !self.pending.is_subset(&reach) {
            return false;
        }
        if self.pending.is_empty() && self.path.len() >= 3 && self.g.has_edge(cur, self.start) {
            return true;
        }
        reach.remove(cur);
        self.g.neighbors(self.start).intersects(&reach)
    }
}

fn search_through(g: &Graph, start: usize, required: &VertexSet) -> Option<Cycle> {
    let mut unvisited = g.vertex_set();
    unvisited.remove(start);
    let mut pending = required.clone();
    pending.remove(start);
    let mut s = ThroughSearch { g, start, path: vec![start], unvisited, pending };
    s.run().then(|| Cycle { seq: normalize(s.path) })
}

/// A cycle whose vertex set contains `required`, or `None` when none exists.
///
/// With an empty requirement this returns some cycle of `g`, searching from
/// the lowest-numbered vertex upward.
pub fn find_cycle_through(g: &Graph, required: &[usize]) -> Option<Cycle> {
    if required.iter().any(|&v| v >= g.n()) {
        return None;
    }
    let req = VertexSet::from_vertices(g.n(), required.iter().copied());
    match req.first() {
        Some(start) => {
            // a vertex on a cycle has degree at least two
            if req.iter().any(|v| g.degree(v) < 2) {
                return None;
            }
            search_through(g, start, &req)
        }
        None => (0..g.n())
            .filter(|&v| g.degree(v) >= 2)
            .find_map(|v| search_through(g, v, &VertexSet::from_vertices(g.n(), [v]))),
    }
}

/// A Hamilton cycle, or `None` when the graph has none.
pub fn find_hamilton_cycle(g: &Graph) -> Option<Cycle> {
    // a Hamiltonian graph is 2-connected
    if !g.is_two_connected() {
        return None;
    }
    search_through(g, 0, &g.vertex_set())
}

/// Vertices with `2·d(v) >= n`, ascending.
pub fn heavy_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.is_heavy(v)).collect()
}

/// A real cycle covering every vertex of `oc`.
///
/// An o-cycle whose pairs are all real edges is returned as is (normalized).
/// Otherwise an exact search for a cycle through `V(oc)` runs; failing to
/// find one is reported as [`Error::LemmaViolation`].
pub fn expand_o_cycle(g: &Graph, oc: &OCycle) -> Result<Cycle> {
    // re-validate: an OCycle built against a different graph is rejected
    let oc_here = OCycle::new(g, oc.seq.clone())?;
    if oc_here.is_real() {
        return Cycle::new(g, oc_here.seq);
    }
    find_cycle_through(g, &oc_here.seq).ok_or_else(|| Error::LemmaViolation(oc_here.seq.clone()))
}
