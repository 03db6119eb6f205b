//! Exact solvers for Weighted Subset Odd Cycle Transversal and Weighted
//! Subset Feedback Vertex Set on P4-free, (P1+P3)-free, (3P1+P2)-free and
//! sP2-free graphs, with the subroutines they rely on and a brute-force
//! oracle for checking them.

pub mod auxiliary;
pub mod blocks;
pub mod claims;
pub mod cograph;
pub mod enumeration;
pub mod error;
pub mod format;
pub mod graph;
pub mod mincut;
pub mod oracle;
pub mod recognition;
pub mod reduction;
pub mod solution;
pub mod solvers;
pub mod vertex_set;

pub use blocks::{
    block_decomposition, classify_or, is_t_bipartite, is_t_forest, Block, BlockDecomposition, CycleMode,
    SolutionDecomposition,
};
pub use cograph::{build_cotree, Cotree, CotreeOutcome};
pub use error::{Error, Result};
pub use graph::{co_components, Induced, Instance, MAX_WEIGHT};
pub use mincut::{min_weight_vertex_cut, CutQuery, CutResult};
pub use recognition::{classify, contains_induced, ClassLabel, Pattern, PatternKind};
pub use reduction::{random_hfree, vc3_to_wsoct, GeneratorConfig, ReductionOutput};
pub use solution::{Problem, Solution};
pub use solvers::{solve, solve_with, Route, SolveOptions, Solved};
pub use vertex_set::VertexSet;
