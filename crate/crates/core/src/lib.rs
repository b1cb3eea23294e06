//! Roman domination on generalized Petersen graphs P(n, 2).
//!
//! * [`graph`]: the graph P(n, k) with precomputed adjacency.
//! * [`assignment`]: labelings `V -> {0, 1, 2}`, validity and normalization.
//! * [`construct`]: explicit RDFs of weight `⌈8n/7⌉` and closed forms.
//! * [`solver`]: exhaustive and column-sweep exact solvers.
//! * [`discharging`]: half-integer weight redistribution and window audits.
//! * [`dot`]: Graphviz output.

pub mod assignment;
pub mod construct;
pub mod discharging;
pub mod dot;
pub mod error;
pub mod graph;
pub mod solver;

pub use assignment::{
    find_move, is_dominating_set, is_normalized, is_valid_rdf, normalize, normalize_traced,
    AssignmentJson, MoveKind, NormalizeMove, Normalization, RomanAssignment, ValidityReport,
};
pub use construct::{ceil_8n_over_7, construct_rdf, gamma_formula, ConstructionCase};
pub use discharging::{
    g_value, lemma_audit, lower_bound_audit, r_window, total_g, Discharging, HalfWeight,
    LemmaFlags, LemmaOutcome, LowerBoundSummary, Violation, Window, WindowClass, WindowRecord,
    WindowReport,
};
pub use dot::render_dot;
pub use error::{Error, Result};
pub use graph::{PetersenGraph, Ring, VertexId};
pub use solver::{solve, solve_brute, solve_dp, Method, SolveResult, BRUTE_MAX_N};
