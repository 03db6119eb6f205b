//! Enumeration of maximal independent sets and maximal induced forests.

use std::ops::ControlFlow;

use crate::graph::Instance;
use crate::vertex_set::VertexSet;

/// Calls `visit` once per maximal independent set of `G[keep]` and returns
/// how many sets were visited (partial if the visitor broke off).
///
/// Sets are grown along the vertex order of `keep`: every maximal
/// independent set of the first `i + 1` vertices has a unique parent among
/// those of the first `i`, and the search walks this tree depth first.
pub fn enum_maximal_independent_sets<F>(inst: &Instance, keep: &VertexSet, mut visit: F) -> usize
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    let order = keep.to_vec();
    let mut ctx = MisSearch {
        inst,
        order: &order,
        count: 0,
    };
    if order.is_empty() {
        let _ = visit(&VertexSet::new(inst.n()));
        return 1;
    }
    let mut start = VertexSet::new(inst.n());
    start.insert(order[0]);
    let _ = ctx.descend(start, 1, &mut visit);
    ctx.count
}

struct MisSearch<'a> {
    inst: &'a Instance,
    order: &'a [usize],
    count: usize,
}

impl MisSearch<'_> {
    /// `set` is a maximal independent set of the first `i` vertices.
    fn descend<F>(&mut self, set: VertexSet, i: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&VertexSet) -> ControlFlow<()>,
    {
        if i == self.order.len() {
            self.count += 1;
            return visit(&set);
        }
        let v = self.order[i];
        let nv = self.inst.adjacency(v);
        if !set.intersects(nv) {
            let mut next = set;
            next.insert(v);
            return self.descend(next, i + 1, visit);
        }
        let mut core = set.difference(nv);
        let child = {
            let mut c = core.clone();
            c.insert(v);
            c
        };
        let take_child = self.is_maximal_prefix(&child, i + 1) && self.greedy_extension(&mut core, i) == set;
        self.descend(set, i + 1, visit)?;
        if take_child {
            self.descend(child, i + 1, visit)?;
        }
        ControlFlow::Continue(())
    }

    /// Whether `set` is maximal among the first `len` vertices.
    fn is_maximal_prefix(&self, set: &VertexSet, len: usize) -> bool {
        self.order[..len]
            .iter()
            .all(|&u| set.contains(u) || self.inst.adjacency(u).intersects(set))
    }

    /// Extends `set` greedily in vertex order over the first `len` vertices.
    fn greedy_extension(&self, set: &mut VertexSet, len: usize) -> VertexSet {
        for &u in &self.order[..len] {
            if !set.contains(u) && !self.inst.adjacency(u).intersects(set) {
                set.insert(u);
            }
        }
        set.clone()
    }
}

/// Calls `visit` once per maximal vertex set inducing a forest; the
/// complements are exactly the minimal feedback vertex sets.
pub fn enum_maximal_induced_forests<F>(inst: &Instance, visit: F) -> usize
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    enum_maximal_induced_forests_within(inst, &inst.vertices(), visit)
}

pub fn enum_maximal_induced_forests_within<F>(inst: &Instance, keep: &VertexSet, mut visit: F) -> usize
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    let order = keep.to_vec();
    let mut search = ForestSearch {
        inst,
        order: &order,
        excluded: Vec::new(),
        count: 0,
    };
    let forest = VertexSet::new(inst.n());
    let dsu = Dsu::new(inst.n());
    let _ = search.branch(0, forest, dsu, &mut visit);
    search.count
}

struct ForestSearch<'a> {
    inst: &'a Instance,
    order: &'a [usize],
    excluded: Vec<usize>,
    count: usize,
}

impl ForestSearch<'_> {
    fn branch<F>(&mut self, i: usize, forest: VertexSet, dsu: Dsu, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&VertexSet) -> ControlFlow<()>,
    {
        if !self.excluded_blockable(i, &forest) {
            return ControlFlow::Continue(());
        }
        if i == self.order.len() {
            self.count += 1;
            return visit(&forest);
        }
        let v = self.order[i];
        if let Some(merged) = try_add(self.inst, &forest, &dsu, v) {
            let mut with = forest.clone();
            with.insert(v);
            self.branch(i + 1, with, merged, visit)?;
        }
        self.excluded.push(v);
        let r = self.branch(i + 1, forest, dsu, visit);
        self.excluded.pop();
        r
    }

    /// Every excluded vertex must end up closing a cycle. That needs two of
    /// its neighbours connected inside the forest plus the undecided rest.
    fn excluded_blockable(&self, i: usize, forest: &VertexSet) -> bool {
        if self.excluded.is_empty() {
            return true;
        }
        let mut avail = forest.clone();
        for &u in &self.order[i..] {
            avail.insert(u);
        }
        let mut dsu = Dsu::new(self.inst.n());
        for v in &avail {
            for &u in self.inst.neighbours(v) {
                if u > v && avail.contains(u) {
                    dsu.union(u, v);
                }
            }
        }
        self.excluded.iter().all(|&x| {
            let mut roots: Vec<usize> = self
                .inst
                .neighbours(x)
                .iter()
                .filter(|&&u| avail.contains(u))
                .map(|&u| dsu.find(u))
                .collect();
            let len = roots.len();
            roots.sort_unstable();
            roots.dedup();
            roots.len() < len
        })
    }
}

/// Adds `v` to the forest if its forest neighbours lie in distinct trees.
fn try_add(inst: &Instance, forest: &VertexSet, dsu: &Dsu, v: usize) -> Option<Dsu> {
    let mut dsu = dsu.clone();
    for &u in inst.neighbours(v) {
        if forest.contains(u) && !dsu.union(u, v) {
            return None;
        }
    }
    Some(dsu)
}

#[derive(Clone)]
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Whether `G[set]` is acyclic.
pub fn is_forest(inst: &Instance, set: &VertexSet) -> bool {
    let mut dsu = Dsu::new(inst.n());
    for v in set {
        for &u in inst.neighbours(v) {
            if u > v && set.contains(u) && !dsu.union(u, v) {
                return false;
            }
        }
    }
    true
}

/// Collects every visited set.
pub fn collect_all(count: impl FnOnce(&mut dyn FnMut(&VertexSet) -> ControlFlow<()>) -> usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    count(&mut |s| {
        out.push(s.clone());
        ControlFlow::Continue(())
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn mis(inst: &Instance) -> Vec<VertexSet> {
        collect_all(|f| enum_maximal_independent_sets(inst, &inst.vertices(), f))
    }

    fn forests(inst: &Instance) -> Vec<VertexSet> {
        collect_all(|f| enum_maximal_induced_forests(inst, f))
    }

    #[test]
    fn mis_examples() {
        assert_eq!(mis(&cycle(5)).len(), 5);
        assert!(mis(&cycle(5)).iter().all(|s| s.len() == 2));
        assert_eq!(mis(&complete(4)).len(), 4);
        assert_eq!(mis(&edgeless(6)).len(), 1);
        assert_eq!(mis(&edgeless(0)).len(), 1);
    }

    #[test]
    fn forest_examples() {
        assert_eq!(forests(&complete(3)).len(), 3);
        assert_eq!(forests(&path(6)).len(), 1);
        assert_eq!(forests(&complete(4)).len(), 6);
    }

    #[test]
    fn early_abort() {
        let mut seen = 0;
        let c = enum_maximal_independent_sets(&cycle(7), &cycle(7).vertices(), |_| {
            seen += 1;
            if seen == 2 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        assert_eq!((c, seen), (2, 2));
    }

    #[test]
    fn restricted_keep() {
        let g = cycle(6);
        let keep = VertexSet::from_iter(6, [0, 1, 2, 3]);
        let sets = collect_all(|f| enum_maximal_independent_sets(&g, &keep, f));
        // P4 0-1-2-3: {0,2}, {0,3}, {1,3}.
        assert_eq!(sets.len(), 3);
    }
}
