pub mod dispatch;
pub mod p1_p3;
pub mod sp2;
pub mod three_p1_p2;

pub use dispatch::{solve, solve_with, Route, SolveOptions, Solved};
pub use p1_p3::{wsfvs_p1p3, wsoct_p1p3};
pub use sp2::{weighted_fvs_sp2, weighted_oct_sp2};
pub use three_p1_p2::{wsfvs_3p1p2, wsoct_3p1p2, CandidateSeed, CaseTag};
