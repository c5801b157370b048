//! The separating construction: two disjoint cliques `A = K_{n/2}` and
//! `B = K_{n/2-7}` joined through seven extra vertices `x, y, z, u, v, w, t`.
//!
//! Edges, taken literally: both cliques, `xy xz yz yw wu zt tv`, each of
//! `x, y, z` to all of `A`, and each of `u, v` to all of `B`.
//!
//! Vertex order is frozen: `A` first, then `B`, then `x y z u v w t`.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::conditions::{satisfies_fan, theorem4_condition, theorem5_condition, Violation};
use crate::cycles::{find_hamilton_cycle, Cycle};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::encode_graph6;
use crate::patterns::{enumerate_induced_copies, Pattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessSpec {
    n: usize,
}

impl WitnessSpec {
    pub fn new(n: usize) -> Result<Self> {
        if n < 16 || !n.is_multiple_of(2) {
            return Err(Error::InvalidWitnessOrder(n));
        }
        Ok(WitnessSpec { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn layout(&self) -> WitnessLayout {
        let half = self.n / 2;
        let s = self.n - 7;
        WitnessLayout {
            a: 0..half,
            b: half..s,
            x: s,
            y: s + 1,
            z: s + 2,
            u: s + 3,
            v: s + 4,
            w: s + 5,
            t: s + 6,
        }
    }
}

/// Where each named vertex of the construction lives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessLayout {
    pub a: Range<usize>,
    pub b: Range<usize>,
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub t: usize,
}

pub fn build_witness(spec: &WitnessSpec) -> Graph {
    let l = spec.layout();
    let mut edges = Vec::new();
    for r in [&l.a, &l.b] {
        for i in r.clone() {
            edges.extend((i + 1..r.end).map(|j| (i, j)));
        }
    }
    edges.extend([(l.x, l.y), (l.x, l.z), (l.y, l.z), (l.y, l.w), (l.w, l.u), (l.z, l.t), (l.t, l.v)]);
    for a in l.a.clone() {
        edges.extend([(l.x, a), (l.y, a), (l.z, a)]);
    }
    for b in l.b.clone() {
        edges.extend([(l.u, b), (l.v, b)]);
    }
    Graph::new(spec.n, edges).expect("construction stays in range")
}

/// One property of the construction: what was claimed for it (if anything)
/// next to what the checks compute.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFlag {
    pub claimed: Option<bool>,
    pub verified: bool,
    pub discrepancy: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<Violation>,
}

impl WitnessFlag {
    fn new(claimed: Option<bool>, verified: bool, violations: Vec<Violation>) -> Self {
        WitnessFlag { claimed, verified, discrepancy: claimed.is_some_and(|c| c != verified), violations }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub n: usize,
    pub graph6: String,
    pub hamiltonian: WitnessFlag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hamilton_cycle: Option<Cycle>,
    pub fan_condition: WitnessFlag,
    pub thm4_condition: WitnessFlag,
    pub thm5_condition: WitnessFlag,
    pub claw_free: WitnessFlag,
}

impl WitnessReport {
    /// Names of the flags whose computed value disagrees with the claim.
    pub fn discrepancies(&self) -> Vec<&'static str> {
        [
            ("hamiltonian", &self.hamiltonian),
            ("fan_condition", &self.fan_condition),
            ("thm4_condition", &self.thm4_condition),
            ("thm5_condition", &self.thm5_condition),
            ("claw_free", &self.claw_free),
        ]
        .into_iter()
        .filter(|(_, f)| f.discrepancy)
        .map(|(name, _)| name)
        .collect()
    }
}

/// Runs every check on `g`. Claims recorded: Hamiltonian, satisfies the
/// triple f-heavy condition, fails the Fan condition and the 2-heavy/freeness
/// condition. Claw-freeness carries no claim.
pub fn classify_witness(g: &Graph) -> WitnessReport {
    let cycle = find_hamilton_cycle(g);
    let fan = satisfies_fan(g);
    let thm4 = theorem4_condition(g);
    let thm5 = theorem5_condition(g);
    let claw = Pattern::claw();
    let claws: Vec<Violation> = enumerate_induced_copies(g, &claw)
        .into_iter()
        .take(1)
        .map(|c| Violation::InducedCopy { pattern: claw.name(), subset: c.subset })
        .collect();

    WitnessReport {
        n: g.n(),
        graph6: encode_graph6(g).unwrap_or_default(),
        hamiltonian: WitnessFlag::new(Some(true), cycle.is_some(), Vec::new()),
        hamilton_cycle: cycle,
        fan_condition: WitnessFlag::new(Some(false), fan.verdict, fan.violations),
        thm4_condition: WitnessFlag::new(Some(false), thm4.verdict, thm4.violations),
        thm5_condition: WitnessFlag::new(Some(true), thm5.verdict, thm5.violations),
        claw_free: WitnessFlag::new(None, claws.is_empty(), claws),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::find_induced_copy;

    #[test]
    fn order_must_be_even_and_at_least_16() {
        assert_eq!(WitnessSpec::new(15), Err(Error::InvalidWitnessOrder(15)));
        assert_eq!(WitnessSpec::new(14), Err(Error::InvalidWitnessOrder(14)));
        assert!(WitnessSpec::new(16).is_ok());
    }

    #[test]
    fn sixteen_vertex_shape() {
        let spec = WitnessSpec::new(16).unwrap();
        let g = build_witness(&spec);
        let l = spec.layout();
        assert_eq!(g.n(), 16);
        // A, then B (one vertex, no edges), the seven links, x/y/z to A, u/v to B
        assert_eq!(g.edge_count(), 28 + 7 + 24 + 2);
        assert_eq!(g.degree(l.x), 10);
        assert_eq!((g.degree(l.y), g.degree(l.z)), (11, 11));
        for s in [l.w, l.t, l.u, l.v] {
            assert_eq!(g.degree(s), 2);
        }
        assert!(l.a.clone().all(|a| g.degree(a) == 10));
        assert_eq!(l.b, 8..9);
        assert_eq!(g.degree(8), 2);
    }

    #[test]
    fn eighteen_vertex_shape() {
        let spec = WitnessSpec::new(18).unwrap();
        let g = build_witness(&spec);
        let l = spec.layout();
        assert_eq!(l.b.len(), 2);
        assert_eq!((g.degree(l.u), g.degree(l.v)), (3, 3));
        assert!((0..18).all(|v| g.degree(v) > 0));
    }

    #[test]
    fn report_for_sixteen() {
        let spec = WitnessSpec::new(16).unwrap();
        let g = build_witness(&spec);
        let l = spec.layout();
        let r = classify_witness(&g);

        assert!(r.hamiltonian.verified);
        let c = r.hamilton_cycle.as_ref().unwrap();
        assert!(c.is_valid_in(&g) && c.len() == 16);

        assert!(!r.fan_condition.verified);
        let Violation::LightPair { pair, degrees, .. } = &r.fan_condition.violations[0] else { panic!() };
        assert!(r.fan_condition.violations[0].revalidate(&g));
        assert_eq!(g.distance(pair.0, pair.1), Ok(Some(2)));
        assert!(2 * degrees.0 < 16 && 2 * degrees.1 < 16);

        assert!(!r.thm4_condition.verified);
        let b = l.b.start;
        let path = [l.w, l.u, b, l.v, l.t, l.z, l.x];
        let (h, _) = g.induced(&path).unwrap();
        assert!(crate::patterns::is_isomorphic_small(&h, &Graph::path(7)).unwrap());
        assert!(find_induced_copy(&g, &Pattern::path(7)).is_some());

        assert!(r.claw_free.verified);
        assert!(r.thm5_condition.violations.iter().all(|v| v.revalidate(&g)));
        assert_eq!(r.thm5_condition.verified, r.thm5_condition.violations.is_empty());
        assert_eq!(r.thm5_condition.discrepancy, !r.thm5_condition.verified);
    }
}
