//! Minimum-weight vertex separators through max-flow on the split network.
//!
//! Every vertex `v` becomes `v_in = 2v` and `v_out = 2v + 1` joined by an
//! arc of capacity `w(v)`; the two terminals and all edge arcs get a
//! capacity no flow can reach.

use std::collections::VecDeque;

use crate::graph::Instance;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug)]
pub struct CutQuery<'a> {
    pub inst: &'a Instance,
    pub t1: usize,
    pub t2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutResult {
    pub separator: VertexSet,
    pub weight: u64,
    /// False iff `t1` and `t2` are adjacent.
    pub feasible: bool,
    /// Value of the maximum flow (equals `weight` when feasible).
    pub flow: u64,
}

pub fn min_weight_vertex_cut(q: &CutQuery<'_>) -> CutResult {
    min_cut_within(q.inst, &q.inst.vertices(), None, q.t1, q.t2)
}

/// Cut in `G[keep]` with the edge `ignore` (if any) deleted.
pub(crate) fn min_cut_within(
    inst: &Instance,
    keep: &VertexSet,
    ignore: Option<(usize, usize)>,
    t1: usize,
    t2: usize,
) -> CutResult {
    assert_ne!(t1, t2, "cut terminals must differ");
    assert!(keep.contains(t1) && keep.contains(t2), "cut terminals must be kept");
    let n = inst.n();
    let skip = |u: usize, v: usize| ignore.is_some_and(|(a, b)| (a, b) == (u, v) || (a, b) == (v, u));
    if inst.adjacent(t1, t2) && !skip(t1, t2) {
        return CutResult {
            separator: VertexSet::new(n),
            weight: 0,
            feasible: false,
            flow: 0,
        };
    }
    let inf = 1 + keep.iter().map(|v| inst.weight(v)).sum::<u64>();
    let mut net = FlowNetwork::new(2 * n);
    for v in keep {
        let cap = if v == t1 || v == t2 { inf } else { inst.weight(v) };
        net.add_arc(2 * v, 2 * v + 1, cap);
        for &u in inst.neighbours(v) {
            if keep.contains(u) && !skip(u, v) {
                net.add_arc(2 * v + 1, 2 * u, inf);
            }
        }
    }
    let source = 2 * t1 + 1;
    let sink = 2 * t2;
    let flow = net.max_flow(source, sink);
    let reach = net.residual_reachable(source);
    let mut separator = VertexSet::new(n);
    for v in keep {
        if v != t1 && v != t2 && reach[2 * v] && !reach[2 * v + 1] {
            separator.insert(v);
        }
    }
    let weight = inst.weight_of(&separator);
    debug_assert_eq!(weight, flow);
    CutResult {
        separator,
        weight,
        feasible: true,
        flow,
    }
}

struct Arc {
    to: usize,
    cap: u64,
}

/// Dinic's algorithm; arcs are stored in pairs so `e ^ 1` is the reverse.
struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    level: Vec<u32>,
    next: Vec<usize>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            next: vec![0; nodes],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u64) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = u32::MAX);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &e in &self.out[v] {
                let a = &self.arcs[e];
                if a.cap > 0 && self.level[a.to] == u32::MAX {
                    self.level[a.to] = self.level[v] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        self.level[t] != u32::MAX
    }

    fn dfs(&mut self, v: usize, t: usize, limit: u64) -> u64 {
        if v == t {
            return limit;
        }
        while self.next[v] < self.out[v].len() {
            let e = self.out[v][self.next[v]];
            let (to, cap) = (self.arcs[e].to, self.arcs[e].cap);
            if cap > 0 && self.level[to] == self.level[v] + 1 {
                let pushed = self.dfs(to, t, limit.min(cap));
                if pushed > 0 {
                    self.arcs[e].cap -= pushed;
                    self.arcs[e ^ 1].cap += pushed;
                    return pushed;
                }
            }
            self.next[v] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let mut total = 0;
        while self.bfs(s, t) {
            self.next.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, u64::MAX);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
        total
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &e in &self.out[v] {
                let a = &self.arcs[e];
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        seen
    }
}

/// Whether `t1` and `t2` lie in one component of `G[keep]`.
pub(crate) fn connected_within(inst: &Instance, keep: &VertexSet, t1: usize, t2: usize) -> bool {
    let mut seen = VertexSet::new(inst.n());
    seen.insert(t1);
    let mut stack = vec![t1];
    while let Some(v) = stack.pop() {
        if v == t2 {
            return true;
        }
        for &u in inst.neighbours(v) {
            if keep.contains(u) && seen.insert(u) {
                stack.push(u);
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cut(inst: &Instance, t1: usize, t2: usize) -> CutResult {
        min_weight_vertex_cut(&CutQuery { inst, t1, t2 })
    }

    #[test]
    fn path_middle() {
        let g = Instance::new(3, [(0, 1), (1, 2)], vec![1, 7, 1], []).unwrap();
        let r = cut(&g, 0, 2);
        assert!(r.feasible);
        assert_eq!(r.separator.to_vec(), vec![1]);
        assert_eq!(r.weight, 7);
        assert_eq!(r.flow, 7);
    }

    #[test]
    fn parallel_paths() {
        let g = Instance::new(4, [(0, 1), (1, 3), (0, 2), (2, 3)], vec![1, 2, 3, 1], []).unwrap();
        assert_eq!(cut(&g, 0, 3).weight, 5);
    }

    #[test]
    fn adjacent_terminals_have_no_cut() {
        let g = Instance::unit(2, &[(0, 1)]);
        assert!(!cut(&g, 0, 1).feasible);
    }

    #[test]
    fn disconnected_terminals() {
        let g = Instance::unit(3, &[(0, 1)]);
        let r = cut(&g, 0, 2);
        assert!(r.feasible && r.separator.is_empty());
    }

    #[test]
    fn ignored_edge() {
        let g = Instance::unit(3, &[(0, 1), (1, 2), (0, 2)]);
        let r = min_cut_within(&g, &g.vertices(), Some((2, 0)), 0, 2);
        assert!(r.feasible);
        assert_eq!(r.separator.to_vec(), vec![1]);
        let mut keep = g.vertices();
        keep.difference_with(&r.separator);
        assert!(!connected_within(&g.without_edge(0, 2), &keep, 0, 2));
    }
}
