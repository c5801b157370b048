//! Degree and forbidden-subgraph predicates.
//!
//! Every predicate returns a [`ConditionReport`]. A `false` verdict always
//! carries at least one [`Violation`] that can be re-checked against the
//! graph with [`Violation::revalidate`]. Degrees are always taken in the host
//! graph `G` with threshold `n = |V(G)|`, even when the distance-2 pair is
//! measured inside an induced copy.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::patterns::{distance2_pairs, enumerate_induced_copies, find_induced_copy, is_isomorphic_small, Pattern};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Two light vertices at distance two, in `G` itself (`subset` absent)
    /// or inside `G[subset]`.
    LightPair {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pattern: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        subset: Option<Vec<usize>>,
        pair: (usize, usize),
        degrees: (usize, usize),
        n: usize,
    },
    /// An induced copy of a pattern that was required to be absent.
    InducedCopy { pattern: String, subset: Vec<usize> },
}

impl Violation {
    fn light_pair(g: &Graph, pattern: Option<&Pattern>, subset: Option<Vec<usize>>, (u, v): (usize, usize)) -> Self {
        Violation::LightPair {
            pattern: pattern.map(Pattern::name),
            subset,
            pair: (u, v),
            degrees: (g.degree(u), g.degree(v)),
            n: g.n(),
        }
    }

    pub fn pattern(&self) -> Option<&str> {
        match self {
            Violation::LightPair { pattern, .. } => pattern.as_deref(),
            Violation::InducedCopy { pattern, .. } => Some(pattern),
        }
    }

    /// Re-checks the violation from scratch against `g`.
    pub fn revalidate(&self, g: &Graph) -> bool {
        match self {
            Violation::LightPair { pattern, subset, pair: (u, v), degrees, n } => {
                if *n != g.n() || g.check_vertex(*u).is_err() || g.check_vertex(*v).is_err() {
                    return false;
                }
                if *degrees != (g.degree(*u), g.degree(*v)) || g.is_heavy(*u) || g.is_heavy(*v) {
                    return false;
                }
                match subset {
                    None => g.distance(*u, *v) == Ok(Some(2)),
                    Some(s) => {
                        let Ok((h, map)) = g.induced(s) else { return false };
                        if map.len() != s.len() {
                            return false;
                        }
                        let (Some(iu), Some(iv)) = (map.iter().position(|x| x == u), map.iter().position(|x| x == v))
                        else {
                            return false;
                        };
                        if h.distance(iu, iv) != Ok(Some(2)) {
                            return false;
                        }
                        match pattern {
                            None => true,
                            Some(name) => copy_matches(&h, name),
                        }
                    }
                }
            }
            Violation::InducedCopy { pattern, subset } => match g.induced(subset) {
                Ok((h, map)) => map.len() == subset.len() && copy_matches(&h, pattern),
                Err(_) => false,
            },
        }
    }
}

fn copy_matches(h: &Graph, pattern: &str) -> bool {
    Pattern::by_name(pattern)
        .ok()
        .and_then(|p| is_isomorphic_small(h, p.graph()).ok())
        .unwrap_or(false)
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::LightPair { pattern, subset, pair, degrees, n } => {
                write!(f, "light pair {pair:?} degrees {degrees:?} (2d < n={n})")?;
                if let Some(s) = subset {
                    write!(f, " in {} copy {s:?}", pattern.as_deref().unwrap_or("induced"))?;
                }
                Ok(())
            }
            Violation::InducedCopy { pattern, subset } => write!(f, "induced {pattern} on {subset:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub condition: String,
    pub verdict: bool,
    /// Empty iff `verdict` is true.
    pub violations: Vec<Violation>,
}

impl ConditionReport {
    fn pass(condition: impl Into<String>) -> Self {
        ConditionReport { condition: condition.into(), verdict: true, violations: Vec::new() }
    }

    fn fail(condition: impl Into<String>, violations: Vec<Violation>) -> Self {
        debug_assert!(!violations.is_empty());
        ConditionReport { condition: condition.into(), verdict: false, violations }
    }

    fn from_violation(condition: impl Into<String>, v: Option<Violation>) -> Self {
        match v {
            Some(v) => Self::fail(condition, vec![v]),
            None => Self::pass(condition),
        }
    }

    pub fn violation(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

/// Heavy means `2·d(v) >= n`.
pub fn is_heavy(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    Ok(g.is_heavy(v))
}

fn copy_violation(g: &Graph, pattern: Option<&Pattern>, subset: &[usize]) -> Option<Violation> {
    let (h, map) = g.induced(subset).expect("subset in range");
    distance2_pairs(&h)
        .into_iter()
        .map(|(a, b)| (map[a], map[b]))
        .find(|&(u, v)| !g.is_heavy(u) && !g.is_heavy(v))
        .map(|pair| Violation::light_pair(g, pattern, Some(map.clone()), pair))
}

/// Whether `G[subset]` is f-heavy: every pair at distance two inside the
/// induced subgraph has an endpoint heavy in `G`.
pub fn copy_is_f_heavy(g: &Graph, subset: &[usize]) -> Result<ConditionReport> {
    for &v in subset {
        g.check_vertex(v)?;
    }
    Ok(ConditionReport::from_violation("f-heavy copy", copy_violation(g, None, subset)))
}

/// Every induced copy of `p` is f-heavy. Reports the first failing copy in
/// lexicographic order.
pub fn is_r_f_heavy(g: &Graph, p: &Pattern) -> ConditionReport {
    let name = format!("{p}-f-heavy");
    // With at most one light vertex no pair can fail.
    let light = (0..g.n()).filter(|&v| !g.is_heavy(v)).count();
    if light < 2 {
        return ConditionReport::pass(name);
    }
    let v = enumerate_induced_copies(g, p)
        .into_iter()
        .find_map(|c| copy_violation(g, Some(p), &c.subset));
    ConditionReport::from_violation(name, v)
}

/// Conjunction of [`is_r_f_heavy`] over `family`; reports the first failing
/// pattern in family order.
pub fn is_family_f_heavy(g: &Graph, family: &[Pattern]) -> Result<ConditionReport> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let name = format!(
        "{{{}}}-f-heavy",
        family.iter().map(Pattern::name).collect::<Vec<_>>().join(",")
    );
    let v = family.iter().find_map(|p| is_r_f_heavy(g, p).violations.into_iter().next());
    Ok(ConditionReport::from_violation(name, v))
}

/// Every pair at distance two in `G` has a heavy endpoint.
pub fn satisfies_fan(g: &Graph) -> ConditionReport {
    let n = g.n();
    let v = (0..n)
        .filter(|&u| !g.is_heavy(u))
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| !g.is_heavy(v) && g.at_distance_two(u, v))
        .map(|pair| Violation::light_pair(g, None, None, pair));
    ConditionReport::from_violation("fan", v)
}

/// Every induced claw has at least two heavy end vertices.
pub fn is_2_heavy(g: &Graph) -> ConditionReport {
    let claw = Pattern::claw();
    let v = enumerate_induced_copies(g, &claw).into_iter().find_map(|c| {
        // the center is the unique member adjacent to the other three
        let center = *c
            .subset
            .iter()
            .find(|&&x| c.subset.iter().filter(|&&y| g.has_edge(x, y)).count() == 3)
            .expect("claw has a center");
        let light: Vec<usize> = c.subset.iter().copied().filter(|&x| x != center && !g.is_heavy(x)).collect();
        (light.len() >= 2).then(|| Violation::light_pair(g, Some(&claw), Some(c.subset.clone()), (light[0], light[1])))
    });
    ConditionReport::from_violation("2-heavy", v)
}

pub fn is_r_free(g: &Graph, p: &Pattern) -> bool {
    find_induced_copy(g, p).is_none()
}

fn free_violation(g: &Graph, p: &Pattern) -> Option<Violation> {
    enumerate_induced_copies(g, p)
        .into_iter()
        .next()
        .map(|c| Violation::InducedCopy { pattern: p.name(), subset: c.subset })
}

/// `G` has no induced copy of any member of `family`; reports the
/// lexicographically first copy of the first present pattern.
pub fn is_family_free(g: &Graph, family: &[Pattern]) -> Result<ConditionReport> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let name = format!("{{{}}}-free", family.iter().map(Pattern::name).collect::<Vec<_>>().join(","));
    Ok(ConditionReport::from_violation(name, family.iter().find_map(|p| free_violation(g, p))))
}

/// `{claw, P7, deer}`-f-heavy or `{claw, P7, hourglass}`-f-heavy.
///
/// The deer disjunct is evaluated first. When false, the report carries one
/// violation per disjunct (deer first); a shared claw or `P7` failure
/// appears in both.
pub fn theorem5_condition(g: &Graph) -> ConditionReport {
    const NAME: &str = "thm5";
    let shared = is_r_f_heavy(g, &Pattern::claw())
        .violations
        .into_iter()
        .next()
        .or_else(|| is_r_f_heavy(g, &Pattern::path(7)).violations.into_iter().next());
    if let Some(v) = shared {
        return ConditionReport::fail(NAME, vec![v.clone(), v]);
    }
    let deer = is_r_f_heavy(g, &Pattern::deer());
    if deer.verdict {
        return ConditionReport::pass(NAME);
    }
    let hourglass = is_r_f_heavy(g, &Pattern::hourglass());
    if hourglass.verdict {
        return ConditionReport::pass(NAME);
    }
    ConditionReport::fail(NAME, deer.violations.into_iter().chain(hourglass.violations).collect())
}

/// 2-heavy, and `{P7, deer}`-free or `{P7, hourglass}`-free.
///
/// When false the report holds the 2-heavy violation, or else the exhibited
/// copies that break each freeness alternative (a `P7` copy breaks both).
pub fn theorem4_condition(g: &Graph) -> ConditionReport {
    const NAME: &str = "thm4";
    let heavy = is_2_heavy(g);
    if !heavy.verdict {
        return ConditionReport::fail(NAME, heavy.violations);
    }
    if let Some(v) = free_violation(g, &Pattern::path(7)) {
        return ConditionReport::fail(NAME, vec![v]);
    }
    let Some(deer) = free_violation(g, &Pattern::deer()) else {
        return ConditionReport::pass(NAME);
    };
    let Some(hourglass) = free_violation(g, &Pattern::hourglass()) else {
        return ConditionReport::pass(NAME);
    };
    ConditionReport::fail(NAME, vec![deer, hourglass])
}
