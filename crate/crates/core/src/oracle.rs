//! Exhaustive subset scans used as ground truth.
//!
//! Every scan returns the minimum-weight removed set, ties broken towards the
//! lexicographically smallest ascending vertex sequence.

use crate::error::{Error, Result};
use crate::graph::Instance;
use crate::mincut::{connected_within, CutResult};
use crate::solution::{Chosen, Problem, Solution};
use crate::vertex_set::VertexSet;

/// Largest instance the oracle will scan.
pub const ORACLE_CAP: usize = 22;

pub fn oracle_transversal(inst: &Instance, problem: Problem) -> Result<Solution> {
    let n = check_cap(inst)?;
    let mask = scan(inst, full_mask(n), |keep| problem.accepts(inst, keep));
    Ok(Solution::new(inst, VertexSet::from_mask(n, mask), problem))
}

/// Minimum-weight separator of `t1` and `t2`; infeasible when adjacent.
pub fn oracle_vertex_cut(inst: &Instance, t1: usize, t2: usize) -> Result<CutResult> {
    let n = check_cap(inst)?;
    assert!(t1 != t2 && t1 < n && t2 < n, "invalid cut terminals");
    if inst.adjacent(t1, t2) {
        return Ok(CutResult {
            separator: VertexSet::new(n),
            weight: 0,
            feasible: false,
            flow: 0,
        });
    }
    let allowed = full_mask(n) & !(1 << t1) & !(1 << t2);
    let mask = scan(inst, allowed, |keep| !connected_within(inst, keep, t1, t2));
    let separator = VertexSet::from_mask(n, mask);
    let weight = inst.weight_of(&separator);
    Ok(CutResult {
        separator,
        weight,
        feasible: true,
        flow: weight,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubsetProblem {
    /// Maximum-weight T-independent set.
    Wsis,
    /// Minimum-weight T-vertex cover.
    Wsvc,
}

/// The WSIS answer is the complement of the WSVC answer.
pub fn oracle_subset_is_vc(inst: &Instance, problem: SubsetProblem) -> Result<Chosen> {
    let n = check_cap(inst)?;
    let mask = scan(inst, full_mask(n), |keep| inst.is_t_independent(keep));
    let cover = VertexSet::from_mask(n, mask);
    Ok(match problem {
        SubsetProblem::Wsvc => Chosen::new(inst, cover),
        SubsetProblem::Wsis => Chosen::new(inst, cover.complement()),
    })
}

fn check_cap(inst: &Instance) -> Result<usize> {
    let n = inst.n();
    if n > ORACLE_CAP {
        return Err(Error::OracleCap { n, cap: ORACLE_CAP });
    }
    Ok(n)
}

fn full_mask(n: usize) -> u64 {
    (1u64 << n) - 1
}

/// Whether the ascending sequence of `a` precedes that of `b`.
fn lex_less(a: u64, b: u64) -> bool {
    if a == b {
        return false;
    }
    let d = (a ^ b).trailing_zeros();
    if a >> d & 1 == 1 {
        // b continues above d (then a < b) or stops (b is a prefix of a).
        b >> d != 0
    } else {
        a >> d == 0
    }
}

/// Best removed mask within `allowed` whose kept complement satisfies `ok`.
fn scan(inst: &Instance, allowed: u64, mut ok: impl FnMut(&VertexSet) -> bool) -> u64 {
    let n = inst.n();
    let full = full_mask(n);
    let bits: Vec<usize> = (0..n).filter(|&v| allowed >> v & 1 == 1).collect();
    let k_max = bits.len();
    let mut best: Option<(u64, u64)> = None;
    for k in 0..=k_max {
        // Gosper's hack over k-subsets of the allowed positions.
        let mut sel: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
        loop {
            let mut mask = 0u64;
            let mut weight = 0u64;
            let mut rest = sel;
            while rest != 0 {
                let v = bits[rest.trailing_zeros() as usize];
                mask |= 1 << v;
                weight += inst.weight(v);
                rest &= rest - 1;
            }
            let better = match best {
                None => true,
                Some((bw, bm)) => weight < bw || (weight == bw && lex_less(mask, bm)),
            };
            if better && ok(&VertexSet::from_mask(n, full & !mask)) {
                best = Some((weight, mask));
            }
            if k == 0 || k == k_max {
                break;
            }
            let c = sel & sel.wrapping_neg();
            let r = sel + c;
            sel = (((r ^ sel) >> 2) / c) | r;
            if sel >> k_max != 0 {
                break;
            }
        }
    }
    best.expect("removing every allowed vertex is always feasible").1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn transversal_examples() {
        let k3 = complete(3).with_terminals([0]).unwrap();
        assert_eq!(oracle_transversal(&k3, Problem::Oct).unwrap().weight, 1);
        let c4 = cycle(4).with_all_terminals();
        assert_eq!(oracle_transversal(&c4, Problem::Oct).unwrap().weight, 0);
        let k4 = complete(4).with_all_terminals();
        assert_eq!(oracle_transversal(&k4, Problem::Fvs).unwrap().weight, 2);
    }

    #[test]
    fn tie_break_is_lexicographic() {
        let k3 = complete(3).with_all_terminals();
        let s = oracle_transversal(&k3, Problem::Oct).unwrap();
        assert_eq!(s.removed.to_vec(), vec![0]);
        let k4 = complete(4).with_all_terminals();
        let s = oracle_transversal(&k4, Problem::Fvs).unwrap();
        assert_eq!(s.removed.to_vec(), vec![0, 1]);
    }

    #[test]
    fn lex_less_matches_vertex_set_order() {
        for a in 0u64..64 {
            for b in 0u64..64 {
                let sa = VertexSet::from_mask(6, a);
                let sb = VertexSet::from_mask(6, b);
                assert_eq!(lex_less(a, b), sa.lex_cmp(&sb).is_lt(), "{a:b} {b:b}");
            }
        }
    }

    #[test]
    fn cut_examples() {
        let p = Instance::new(3, [(0, 1), (1, 2)], vec![1, 7, 1], []).unwrap();
        let r = oracle_vertex_cut(&p, 0, 2).unwrap();
        assert_eq!((r.separator.to_vec(), r.weight), (vec![1], 7));
        let apart = Instance::unit(4, &[(0, 1), (2, 3)]);
        assert_eq!(oracle_vertex_cut(&apart, 0, 3).unwrap().weight, 0);
        let k4 = complete(4).without_edge(0, 1);
        assert_eq!(oracle_vertex_cut(&k4, 0, 1).unwrap().weight, 2);
        assert!(!oracle_vertex_cut(&complete(2), 0, 1).unwrap().feasible);
    }

    #[test]
    fn subset_examples() {
        let c4 = cycle(4).with_all_terminals();
        assert_eq!(oracle_subset_is_vc(&c4, SubsetProblem::Wsis).unwrap().weight, 2);
        let e = edgeless(4).with_all_terminals();
        assert_eq!(oracle_subset_is_vc(&e, SubsetProblem::Wsvc).unwrap().weight, 0);
        let k3 = complete(3).with_terminals([0]).unwrap();
        let vc = oracle_subset_is_vc(&k3, SubsetProblem::Wsvc).unwrap();
        assert_eq!((vc.weight, vc.set.to_vec()), (1, vec![0]));
    }

    #[test]
    fn cap_enforced() {
        let big = edgeless(ORACLE_CAP + 1);
        assert!(matches!(
            oracle_transversal(&big, Problem::Oct),
            Err(Error::OracleCap { .. })
        ));
    }
}
