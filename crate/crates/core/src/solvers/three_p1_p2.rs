//! Subset odd cycle transversal and feedback vertex set on (3P1+P2)-free
//! graphs.
//!
//! The remainder `B` of an optimal solution is either non-mixed (no odd
//! vertices, or no terminals) or mixed. Mixed remainders have at most two
//! odd components; every family below guesses a small set `R` of even
//! vertices plus a few connectors and completes the rest greedily or by a
//! vertex cut. Every candidate is checked with the feasibility predicate
//! before it is scored.

use crate::blocks::is_bipartite_within;
use crate::enumeration::is_forest;
use crate::error::Result;
use crate::graph::Instance;
use crate::mincut::min_cut_within;
use crate::recognition::{require_free, PatternKind};
use crate::solution::{Best, Problem, Solution};
use crate::solvers::sp2::{fvs_sp2_unchecked, oct_sp2_unchecked};
use crate::vertex_set::VertexSet;

/// Largest independent set allowed inside the even part.
const MAX_R_ALPHA: usize = 4;
/// `G[R]` is bipartite with independence number at most 4.
const MAX_R: usize = 2 * MAX_R_ALPHA;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// A plain transversal that ignores `T`.
    NonMixed,
    /// `S_T = T`.
    AllTerminals,
    TwoClique,
    Case1General,
    Case2,
}

/// The guess that produced a candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateSeed {
    pub case: CaseTag,
    pub r: Vec<usize>,
    pub d: Vec<usize>,
    /// `(u1, u2, v1, v2)` for two-clique candidates.
    pub anchors: Option<[usize; 4]>,
}

impl CandidateSeed {
    fn plain(case: CaseTag) -> Self {
        CandidateSeed {
            case,
            r: Vec::new(),
            d: Vec::new(),
            anchors: None,
        }
    }
}

pub fn wsoct_3p1p2(inst: &Instance) -> Result<Solution> {
    wsoct_3p1p2_traced(inst).map(|(s, _)| s)
}

pub fn wsfvs_3p1p2(inst: &Instance) -> Result<Solution> {
    wsfvs_3p1p2_traced(inst).map(|(s, _)| s)
}

/// Also reports which candidate family won.
pub fn wsoct_3p1p2_traced(inst: &Instance) -> Result<(Solution, CandidateSeed)> {
    require_free(inst, PatternKind::ThreeP1P2)?;
    Ok(solve_unchecked(inst, Problem::Oct))
}

pub fn wsfvs_3p1p2_traced(inst: &Instance) -> Result<(Solution, CandidateSeed)> {
    require_free(inst, PatternKind::ThreeP1P2)?;
    Ok(solve_unchecked(inst, Problem::Fvs))
}

pub(crate) fn solve_unchecked(inst: &Instance, problem: Problem) -> (Solution, CandidateSeed) {
    let mut s = Search {
        inst,
        problem,
        total: inst.total_weight(),
        best: Best::new(),
    };
    let plain = match problem {
        Problem::Oct => oct_sp2_unchecked(inst),
        Problem::Fvs => fvs_sp2_unchecked(inst),
    };
    s.offer(plain.kept(), || CandidateSeed::plain(CaseTag::NonMixed));
    s.offer(inst.terminals().complement(), || {
        CandidateSeed::plain(CaseTag::AllTerminals)
    });
    if !inst.terminals().is_empty() {
        if problem == Problem::Oct {
            s.two_clique();
        }
        s.case1();
        s.case2();
    }
    let (_, (kept, seed)) = s.best.into_inner().expect("S_T = T is always feasible");
    (Solution::from_kept(inst, &kept, problem), seed)
}

struct Search<'a> {
    inst: &'a Instance,
    problem: Problem,
    total: u64,
    best: Best<(VertexSet, CandidateSeed)>,
}

impl Search<'_> {
    fn improves_kept(&self, kept_weight: u64) -> bool {
        self.best.improves(self.total - kept_weight)
    }

    fn offer(&mut self, kept: VertexSet, seed: impl FnOnce() -> CandidateSeed) {
        let removed = self.total - self.inst.weight_of(&kept);
        if self.best.improves(removed) && self.problem.accepts(self.inst, &kept) {
            self.best.offer(removed, (kept, seed()));
        }
    }

    /// Non-terminals outside `r` with no neighbour in `r`.
    fn free_of(&self, r: &VertexSet) -> VertexSet {
        let mut out = self.inst.terminals().union(r).union(&self.inst.neighbourhood(r));
        out = out.complement();
        out
    }

    /// `B = {u1, u2} ∪ K ∪ L`: two odd cliques joined by the edge `v1 v2`,
    /// each hanging off one of the adjacent even vertices `u1, u2`.
    fn two_clique(&mut self) {
        let inst = self.inst;
        let t = inst.terminals();
        for (a, b) in inst.edges().collect::<Vec<_>>() {
            if !t.contains(a) && !t.contains(b) {
                continue;
            }
            for (u1, u2) in [(a, b), (b, a)] {
                let r = VertexSet::from_iter(inst.n(), [u1, u2]);
                let near = inst.neighbourhood(&r);
                let side = |x: usize, y: usize| {
                    inst.adjacency(x)
                        .difference(inst.adjacency(y))
                        .difference(t)
                        .difference(&r)
                };
                let (c1, c2) = (side(u1, u2), side(u2, u1));
                for v1 in &c1 {
                    for v2 in &c2 {
                        if !inst.adjacent(v1, v2) {
                            continue;
                        }
                        let mut keep = t.union(&r).union(&near).complement();
                        keep.insert(v1);
                        keep.insert(v2);
                        let cut = min_cut_within(inst, &keep, Some((v1, v2)), v1, v2);
                        debug_assert!(cut.feasible);
                        let mut kept = keep.difference(&cut.separator);
                        kept.union_with(&r);
                        self.offer(kept, || CandidateSeed {
                            case: CaseTag::TwoClique,
                            r: vec![u1, u2],
                            d: vec![v1, v2],
                            anchors: Some([u1, u2, v1, v2]),
                        });
                    }
                }
            }
        }
    }

    /// Even part `R` of at most 8 vertices, connectors `D` meeting pairwise
    /// different components of `G[R]`, every other non-terminal far from `R`
    /// kept.
    fn case1(&mut self) {
        let mut r = Vec::new();
        self.grow_r(&mut r, 0);
    }

    fn grow_r(&mut self, r: &mut Vec<usize>, start: usize) {
        let n = self.inst.n();
        for v in start..n {
            r.push(v);
            let set = VertexSet::from_iter(n, r.iter().copied());
            if self.r_shape_ok(&set) {
                if set.intersects(self.inst.terminals()) {
                    self.case1_for(r, &set);
                }
                if r.len() < MAX_R {
                    self.grow_r(r, v + 1);
                }
            }
            r.pop();
        }
    }

    fn r_shape_ok(&self, r: &VertexSet) -> bool {
        let acyclic = match self.problem {
            Problem::Oct => is_bipartite_within(self.inst, r),
            Problem::Fvs => is_forest(self.inst, r),
        };
        acyclic && independence_at_most(self.inst, r, MAX_R_ALPHA)
    }

    fn case1_for(&mut self, r: &[usize], rset: &VertexSet) {
        let inst = self.inst;
        let comps = inst.components(rset);
        let free = self.free_of(rset);
        let base = rset.union(&free);
        let base_w = inst.weight_of(&base);
        let connectors: Vec<(usize, u32)> = inst
            .neighbourhood(rset)
            .difference(inst.terminals())
            .iter()
            .map(|v| {
                let mask = comps
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| inst.adjacency(v).intersects(c))
                    .fold(0u32, |m, (i, _)| m | 1 << i);
                (v, mask)
            })
            .collect();
        let reach = base_w + connectors.iter().map(|&(v, _)| inst.weight(v)).sum::<u64>();
        if !self.improves_kept(reach) {
            return;
        }
        let mut d = Vec::new();
        self.pick_connectors(r, rset, &base, base_w, &connectors, 0, 0, &mut d);
    }

    #[allow(clippy::too_many_arguments)]
    fn pick_connectors(
        &mut self,
        r: &[usize],
        rset: &VertexSet,
        base: &VertexSet,
        base_w: u64,
        connectors: &[(usize, u32)],
        from: usize,
        used: u32,
        d: &mut Vec<usize>,
    ) {
        let inst = self.inst;
        let d_w: u64 = d.iter().map(|&v| inst.weight(v)).sum();
        if self.improves_kept(base_w + d_w) {
            let mut kept = base.clone();
            for &v in d.iter() {
                kept.insert(v);
            }
            self.offer(kept, || CandidateSeed {
                case: CaseTag::Case1General,
                r: r.to_vec(),
                d: d.clone(),
                anchors: None,
            });
        }
        for i in from..connectors.len() {
            let (v, mask) = connectors[i];
            if mask & used != 0 {
                continue;
            }
            d.push(v);
            let mut core = rset.clone();
            for &x in d.iter() {
                core.insert(x);
            }
            if self.problem.accepts(inst, &core) {
                self.pick_connectors(r, rset, base, base_w, connectors, i + 1, used | mask, d);
            }
            d.pop();
        }
    }

    /// Two odd components: `R` is a clique on at most two vertices and each
    /// component has at most one connector.
    fn case2(&mut self) {
        let inst = self.inst;
        let n = inst.n();
        let t = inst.terminals();
        let mut cliques: Vec<Vec<usize>> = t.iter().map(|v| vec![v]).collect();
        cliques.extend(
            inst.edges()
                .filter(|&(a, b)| t.contains(a) || t.contains(b))
                .map(|(a, b)| vec![a, b]),
        );
        for r in cliques {
            let rset = VertexSet::from_iter(n, r.iter().copied());
            let free = self.free_of(&rset);
            let base = rset.union(&free);
            let near = inst.neighbourhood(&rset).difference(t);
            let seed = |d: Vec<usize>| {
                let r = r.clone();
                move || CandidateSeed {
                    case: CaseTag::Case2,
                    r,
                    d,
                    anchors: None,
                }
            };
            self.offer(base.clone(), seed(vec![]));
            let conn = near.to_vec();
            for (i, &v) in conn.iter().enumerate() {
                let mut core = rset.clone();
                core.insert(v);
                if !self.problem.accepts(inst, &core) {
                    continue;
                }
                let mut kept = base.clone();
                kept.insert(v);
                self.offer(kept, seed(vec![v]));
                for &v2 in &conn[i + 1..] {
                    if inst.adjacent(v, v2) {
                        continue;
                    }
                    let mut core2 = core.clone();
                    core2.insert(v2);
                    if !self.problem.accepts(inst, &core2) {
                        continue;
                    }
                    let mut keep = t.union(&rset).union(&near).complement();
                    keep.insert(v);
                    keep.insert(v2);
                    let cut = min_cut_within(inst, &keep, None, v, v2);
                    let mut kept = keep.difference(&cut.separator);
                    kept.union_with(&rset);
                    self.offer(kept, seed(vec![v, v2]));
                }
            }
        }
    }
}

/// Whether `G[set]` has no independent set larger than `k` (set is small).
fn independence_at_most(inst: &Instance, set: &VertexSet, k: usize) -> bool {
    let vs = set.to_vec();
    if vs.len() <= k {
        return true;
    }
    let m = vs.len();
    let nbr: Vec<u32> = vs
        .iter()
        .map(|&a| {
            vs.iter()
                .enumerate()
                .filter(|(_, &b)| inst.adjacent(a, b))
                .fold(0, |acc, (j, _)| acc | 1 << j)
        })
        .collect();
    // Search for an independent set of size k + 1.
    fn extend(nbr: &[u32], cand: u32, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if (cand.count_ones() as usize) < need {
            return false;
        }
        let mut rest = cand;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if extend(nbr, rest & !nbr[i], need - 1) {
                return true;
            }
        }
        false
    }
    !extend(&nbr, (1u32 << m) - 1, k + 1)
}
