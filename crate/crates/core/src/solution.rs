use std::fmt;
use std::str::FromStr;

use crate::blocks::CycleMode;
use crate::graph::Instance;
use crate::vertex_set::VertexSet;

/// The two weighted subset transversal problems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Problem {
    /// Weighted subset odd cycle transversal.
    Oct,
    /// Weighted subset feedback vertex set.
    Fvs,
}

impl Problem {
    pub fn mode(self) -> CycleMode {
        match self {
            Problem::Oct => CycleMode::Odd,
            Problem::Fvs => CycleMode::Cycle,
        }
    }

    /// Feasibility of the remainder `keep` for this problem.
    pub fn accepts(self, inst: &Instance, keep: &VertexSet) -> bool {
        self.mode().is_feasible(inst, keep)
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::Oct => "oct",
            Problem::Fvs => "fvs",
        })
    }
}

impl FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "oct" => Ok(Problem::Oct),
            "fvs" => Ok(Problem::Fvs),
            other => Err(format!("unknown problem `{other}` (expected oct or fvs)")),
        }
    }
}

/// A transversal `S_T` with its weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub removed: VertexSet,
    pub weight: u64,
    pub problem: Problem,
}

impl Solution {
    pub fn new(inst: &Instance, removed: VertexSet, problem: Problem) -> Self {
        let weight = inst.weight_of(&removed);
        Solution {
            removed,
            weight,
            problem,
        }
    }

    /// Solution given by its remainder `B_T = V \ S_T`.
    pub fn from_kept(inst: &Instance, kept: &VertexSet, problem: Problem) -> Self {
        Self::new(inst, kept.complement(), problem)
    }

    pub fn kept(&self) -> VertexSet {
        self.removed.complement()
    }

    /// Recomputes the weight and re-runs the feasibility predicate.
    pub fn verify(&self, inst: &Instance) -> bool {
        self.removed.universe() == inst.n()
            && inst.weight_of(&self.removed) == self.weight
            && self.problem.accepts(inst, &self.kept())
    }
}

/// A vertex set with its weight, the result of the independent set and
/// vertex cover subroutines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chosen {
    pub set: VertexSet,
    pub weight: u64,
}

impl Chosen {
    pub fn new(inst: &Instance, set: VertexSet) -> Self {
        let weight = inst.weight_of(&set);
        Chosen { set, weight }
    }
}

/// Keeps the first strictly lightest of a stream of candidates.
#[derive(Debug)]
pub(crate) struct Best<T> {
    best: Option<(u64, T)>,
}

impl<T> Best<T> {
    pub fn new() -> Self {
        Best { best: None }
    }

    pub fn weight(&self) -> Option<u64> {
        self.best.as_ref().map(|(w, _)| *w)
    }

    /// Would a candidate of this weight replace the incumbent?
    pub fn improves(&self, weight: u64) -> bool {
        self.weight().is_none_or(|w| weight < w)
    }

    pub fn offer(&mut self, weight: u64, item: T) -> bool {
        if self.improves(weight) {
            self.best = Some((weight, item));
            true
        } else {
            false
        }
    }

    pub fn offer_with(&mut self, weight: u64, item: impl FnOnce() -> T) -> bool {
        if self.improves(weight) {
            self.best = Some((weight, item()));
            true
        } else {
            false
        }
    }

    pub fn into_inner(self) -> Option<(u64, T)> {
        self.best
    }
}
