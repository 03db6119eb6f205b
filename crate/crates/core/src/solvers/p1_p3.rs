//! Subset odd cycle transversal and feedback vertex set on (P1+P3)-free
//! graphs via co-components.
//!
//! Each co-component is 3P1-free or P3-free. A remainder holding a terminal
//! meets at most two co-components, and when it meets two, each side is an
//! independent set, a T-independent set or a single vertex.

use crate::auxiliary::{mwis_small_unchecked, small_class, wsis_small, SmallClass};
use crate::cograph::solve_cograph;
use crate::error::Result;
use crate::graph::{Induced, Instance};
use crate::recognition::{is_free, require_free, PatternKind};
use crate::solution::{Best, Problem, Solution};
use crate::solvers::three_p1_p2;
use crate::vertex_set::VertexSet;

pub fn wsoct_p1p3(inst: &Instance) -> Result<Solution> {
    require_free(inst, PatternKind::P1P3)?;
    solve_unchecked(inst, Problem::Oct)
}

pub fn wsfvs_p1p3(inst: &Instance) -> Result<Solution> {
    require_free(inst, PatternKind::P1P3)?;
    solve_unchecked(inst, Problem::Fvs)
}

/// What the pair combinations need from one co-component, in parent ids.
struct Part {
    mwis: VertexSet,
    wsis: VertexSet,
    heaviest: Option<usize>,
    heaviest_nt: Option<usize>,
}

fn heaviest(inst: &Instance, set: impl Iterator<Item = usize>) -> Option<usize> {
    // Ties go to the smallest id.
    set.fold(None, |best: Option<usize>, v| match best {
        Some(b) if inst.weight(b) >= inst.weight(v) => Some(b),
        _ => Some(v),
    })
}

/// Solves one co-component on its own: cotree DP when it is a cograph,
/// otherwise the (3P1+P2)-free algorithm (it is then 3P1-free).
fn solve_part(sub: &Induced, problem: Problem) -> Result<VertexSet> {
    let g = &sub.instance;
    let sol = if is_free(g, PatternKind::P4) {
        solve_cograph(g, problem)?
    } else {
        require_free(g, PatternKind::ThreeP1)?;
        three_p1_p2::solve_unchecked(g, problem).0
    };
    Ok(sub.lift(&sol.kept()))
}

pub(crate) fn solve_unchecked(inst: &Instance, problem: Problem) -> Result<Solution> {
    let total = inst.total_weight();
    let mut best: Best<VertexSet> = Best::new();
    let mut offer = |kept: VertexSet| {
        let removed = total - inst.weight_of(&kept);
        if best.improves(removed) && problem.accepts(inst, &kept) {
            best.offer(removed, kept);
        }
    };
    offer(inst.terminals().complement());

    let co = inst.co_components_within(&inst.vertices());
    let mut parts = Vec::with_capacity(co.len());
    for d in &co {
        let sub = inst.induced_subgraph(d);
        offer(solve_part(&sub, problem)?);
        let g = &sub.instance;
        let class = match small_class(g) {
            Some(c) => c,
            None => {
                // Unreachable on (P1+P3)-free inputs; report the obstruction.
                require_free(g, PatternKind::ThreeP1)?;
                SmallClass::ThreeP1Free
            }
        };
        parts.push(Part {
            mwis: sub.lift(&mwis_small_unchecked(g, class).set),
            wsis: sub.lift(&wsis_small(g, class).set),
            heaviest: heaviest(inst, d.iter()),
            heaviest_nt: heaviest(inst, d.iter().filter(|&v| !inst.is_terminal(v))),
        });
    }

    let with = |set: &VertexSet, v: Option<usize>| {
        v.map(|v| {
            let mut s = set.clone();
            s.insert(v);
            s
        })
    };
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let (a, b) = (&parts[i], &parts[j]);
            let cands: Vec<Option<VertexSet>> = match problem {
                Problem::Oct => vec![
                    Some(a.mwis.union(&b.mwis)),
                    with(&b.wsis, a.heaviest_nt),
                    with(&a.wsis, b.heaviest_nt),
                ],
                Problem::Fvs => vec![
                    with(&b.mwis, a.heaviest),
                    with(&a.mwis, b.heaviest),
                    with(&b.wsis, a.heaviest_nt),
                    with(&a.wsis, b.heaviest_nt),
                ],
            };
            for c in cands.into_iter().flatten() {
                offer(c);
            }
        }
    }
    let (_, kept) = best.into_inner().expect("S_T = T is always feasible");
    Ok(Solution::from_kept(inst, &kept, problem))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn examples() {
        // K_{2,2,2}: complete multipartite, every part of size two.
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if u / 2 != v / 2 {
                    edges.push((u, v));
                }
            }
        }
        let k222 = Instance::unit(6, &edges);
        assert_eq!(wsoct_p1p3(&k222).unwrap().weight, 0);
        let k3 = complete(3).with_all_terminals();
        assert_eq!(wsoct_p1p3(&k3).unwrap().weight, 1);
        let k4 = complete(4).with_all_terminals();
        assert_eq!(wsfvs_p1p3(&k4).unwrap().weight, 2);
        let star = Instance::unit(4, &[(0, 1), (0, 2), (0, 3)]).with_all_terminals();
        assert_eq!(wsfvs_p1p3(&star).unwrap().weight, 0);
    }
}
