//! Fan-type degree conditions restricted to induced subgraphs, and the
//! machinery to check Hamiltonicity theorems built on them.
//!
//! * [`graph`]: immutable bitset graphs, distances, induced subgraphs,
//!   2-connectivity, Ore adjacency
//! * [`io`]: graph6 and edge-list codecs, corpus streams, JSON reports
//! * [`patterns`]: claw, paths, deer, hourglass; induced-copy enumeration
//! * [`conditions`]: heavy vertices, f-heavy copies and families, Fan's
//!   condition, 2-heavy, freeness, and the two theorem hypotheses
//! * [`cycles`]: Hamilton cycles, cycles through a vertex set, o-cycle
//!   expansion
//! * [`witness`]: the two-clique separating construction and its report
//! * [`harness`]: corpus verification and counterexample hunting
//!
//! ```
//! use fheavy::{conditions, cycles, Graph};
//!
//! let c5 = Graph::cycle(5);
//! assert!(!conditions::satisfies_fan(&c5).verdict);
//! assert!(conditions::theorem5_condition(&c5).verdict);
//! assert!(cycles::find_hamilton_cycle(&c5).is_some());
//! ```

pub mod bitset;
pub mod canon;
pub mod conditions;
pub mod cycles;
pub mod error;
pub mod generate;
pub mod graph;
pub mod harness;
pub mod io;
pub mod patterns;
pub mod witness;

#[cfg(test)]
mod test_util;

pub use bitset::VertexSet;
pub use conditions::{ConditionReport, Violation};
pub use cycles::{Cycle, OCycle};
pub use error::{Error, Result};
pub use graph::Graph;
pub use patterns::{InducedCopy, Pattern, PatternKind};
