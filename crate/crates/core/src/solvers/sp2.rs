//! Plain (every cycle counts) odd cycle transversal and feedback vertex set
//! on sP2-free graphs, by enumerating maximal independent sets and maximal
//! induced forests.

use std::ops::ControlFlow;

use crate::enumeration::{enum_maximal_independent_sets, enum_maximal_induced_forests};
use crate::error::Result;
use crate::graph::Instance;
use crate::recognition::{require_free, PatternKind};
use crate::solution::{Best, Problem, Solution};
use crate::vertex_set::VertexSet;

/// Minimum-weight odd cycle transversal; terminals are ignored.
pub fn weighted_oct_sp2(inst: &Instance, s: u8) -> Result<Solution> {
    require_free(inst, PatternKind::SP2(s))?;
    Ok(oct_sp2_unchecked(inst))
}

/// Minimum-weight feedback vertex set; terminals are ignored.
pub fn weighted_fvs_sp2(inst: &Instance, s: u8) -> Result<Solution> {
    require_free(inst, PatternKind::SP2(s))?;
    Ok(fvs_sp2_unchecked(inst))
}

/// A bipartite remainder `X ∪ Y` where `X` is a maximal independent set of
/// `G` and `Y` one of `G - X`.
pub(crate) fn oct_sp2_unchecked(inst: &Instance) -> Solution {
    let all = inst.vertices();
    let total = inst.total_weight();
    let mut best: Best<VertexSet> = Best::new();
    enum_maximal_independent_sets(inst, &all, |x| {
        let rest = all.difference(x);
        let wx = inst.weight_of(x);
        enum_maximal_independent_sets(inst, &rest, |y| {
            let kept_w = wx + inst.weight_of(y);
            best.offer_with(total - kept_w, || x.union(y));
            ControlFlow::Continue(())
        });
        ControlFlow::Continue(())
    });
    let (_, kept) = best.into_inner().expect("at least one maximal independent set");
    Solution::from_kept(inst, &kept, Problem::Oct)
}

pub(crate) fn fvs_sp2_unchecked(inst: &Instance) -> Solution {
    let total = inst.total_weight();
    let mut best: Best<VertexSet> = Best::new();
    enum_maximal_induced_forests(inst, |f| {
        best.offer_with(total - inst.weight_of(f), || f.clone());
        ControlFlow::Continue(())
    });
    let (_, kept) = best.into_inner().expect("at least one maximal forest");
    Solution::from_kept(inst, &kept, Problem::Fvs)
}
