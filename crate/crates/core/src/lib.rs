//! Exact solver for the normal-play partizan domination game on
//! vertex-colored graphs.
//!
//! * [`cgt`]: canonical-form game values, sums, order and named families.
//! * [`graph`]: colored graphs, family constructors and the input formats.
//! * [`engine`]: brute-force game values and winners for arbitrary graphs.
//! * [`closed_forms`]: constant-time values for the solved graph families.
//! * [`verify`]: cross-validation suites pitting closed forms against the engine.

pub mod cgt;
pub mod closed_forms;
pub mod engine;
pub mod graph;
pub mod verify;

pub use cgt::{mex, nim_add, Dyadic, GameValue, Kernel, KernelConfig, KernelError, NamedValue, Outcome};
pub use closed_forms::{evaluate, ClosedFormResult, NotCoveredCode};
pub use engine::{EngineError, Player, Position, SearchConfig, Solver, VertexSet};
pub use graph::{parse_family, parse_graph, Color, ColoredGraph, FamilySpec};
pub use verify::{run_all, run_suite, Suite, SuiteReport, VerifyConfig};
