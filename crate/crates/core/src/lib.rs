//! Exact computation of identifying-type codes in small graphs, the graph
//! families used to study them, exhaustive enumeration, and verification
//! sweeps for the known bounds and characterizations.

pub mod canonical;
pub mod codes;
pub mod constraints;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod solver;
pub mod stream;
pub mod verify;
pub mod vertex_set;

pub use canonical::{canonical_key, is_isomorphic, CanonicalKey};
pub use codes::{is_valid, iset, violation_witness, CodeKind, Violation};
pub use constraints::{build_constraints, Constraint, ConstraintSystem, Infeasibility};
pub use enumerate::{enumerate_connected, enumerate_trees};
pub use error::{Error, Result};
pub use graph::{Girth, Graph, StructuralSummary};
pub use io::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
pub use solver::{minimum_code, minimum_code_oracle, parameter, Outcome, SolveResult};
pub use stream::GraphStream;
pub use verify::{run_claim, ClaimId, Report, Verdict};
pub use vertex_set::VertexSet;
