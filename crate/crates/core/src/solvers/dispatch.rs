//! Class recognition followed by the matching solver.

use std::fmt;

use crate::cograph::solve_cograph;
use crate::error::{Error, Result};
use crate::graph::Instance;
use crate::oracle::{oracle_transversal, ORACLE_CAP};
use crate::recognition::{classify, witnesses, ClassLabel};
use crate::solution::{Problem, Solution};
use crate::solvers::{p1_p3, sp2, three_p1_p2};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Unsupported instances up to this size go to the brute-force oracle.
    pub oracle_cap: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { oracle_cap: ORACLE_CAP }
    }
}

/// Which algorithm produced a solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// No terminals: nothing to remove.
    NoTerminals,
    Cograph,
    P1P3,
    ThreeP1P2,
    /// Plain transversal on an sP2-free graph with every vertex a terminal.
    SP2(u8),
    Oracle,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Route::NoTerminals => f.write_str("no-terminals"),
            Route::Cograph => f.write_str("cograph"),
            Route::P1P3 => f.write_str("p1p3"),
            Route::ThreeP1P2 => f.write_str("3p1p2"),
            Route::SP2(s) => write!(f, "sp2({s})"),
            Route::Oracle => f.write_str("oracle"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solved {
    pub solution: Solution,
    pub class: ClassLabel,
    pub route: Route,
}

pub fn solve(inst: &Instance, problem: Problem) -> Result<Solved> {
    solve_with(inst, problem, &SolveOptions::default())
}

pub fn solve_with(inst: &Instance, problem: Problem, opts: &SolveOptions) -> Result<Solved> {
    let class = classify(inst);
    let (solution, route) = if inst.terminals().is_empty() {
        (Solution::new(inst, inst.empty_set(), problem), Route::NoTerminals)
    } else {
        match class {
            ClassLabel::P4Free => (solve_cograph(inst, problem)?, Route::Cograph),
            ClassLabel::P1P3Free => (p1_p3::solve_unchecked(inst, problem)?, Route::P1P3),
            ClassLabel::ThreeP1P2Free => (three_p1_p2::solve_unchecked(inst, problem).0, Route::ThreeP1P2),
            ClassLabel::SP2Free(s) if inst.terminals().len() == inst.n() => {
                let sol = match problem {
                    Problem::Oct => sp2::oct_sp2_unchecked(inst),
                    Problem::Fvs => sp2::fvs_sp2_unchecked(inst),
                };
                (sol, Route::SP2(s))
            }
            _ if inst.n() <= opts.oracle_cap.min(ORACLE_CAP) => (oracle_transversal(inst, problem)?, Route::Oracle),
            _ => {
                return Err(Error::Unsupported {
                    n: inst.n(),
                    cap: opts.oracle_cap.min(ORACLE_CAP),
                    witnesses: witnesses(inst),
                })
            }
        }
    };
    debug_assert!(solution.verify(inst));
    Ok(Solved { solution, class, route })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn routes() {
        let k4 = complete(4).with_all_terminals();
        let s = solve(&k4, Problem::Oct).unwrap();
        assert_eq!((s.route, s.solution.weight), (Route::Cograph, 2));
        let e = edgeless(0);
        assert_eq!(solve(&e, Problem::Fvs).unwrap().solution.weight, 0);
        let p5 = path(5).with_terminals([2]).unwrap();
        assert_eq!(solve(&p5, Problem::Oct).unwrap().route, Route::ThreeP1P2);
    }

    #[test]
    fn unsupported_large_instance_is_rejected() {
        // P5 plus twelve disjoint edges and an isolated vertex: 30 vertices.
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4)];
        for i in 0..12 {
            edges.push((5 + 2 * i, 6 + 2 * i));
        }
        let g = Instance::unit(30, &edges).with_terminals([0]).unwrap();
        match solve(&g, Problem::Oct) {
            Err(Error::Unsupported { n, witnesses, .. }) => {
                assert_eq!(n, 30);
                assert_eq!(witnesses.len(), 3);
            }
            other => panic!("{other:?}"),
        }
        let small = Instance::unit(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (5, 6)])
            .with_terminals([0])
            .unwrap();
        assert_eq!(solve(&small, Problem::Oct).unwrap().route, Route::Oracle);
    }
}
