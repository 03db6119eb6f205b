//! Weighted graphs with a terminal set, the shared input of every solver.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest admissible vertex weight, so that any subset sum fits in a `u64`.
pub const MAX_WEIGHT: u64 = u32::MAX as u64;

/// An undirected simple graph on `0..n` with nonnegative vertex weights and a
/// terminal set `T`. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    adj: Vec<VertexSet>,
    neighbours: Vec<Vec<usize>>,
    weights: Vec<u64>,
    terminals: VertexSet,
    m: usize,
}

impl Instance {
    pub fn new<E, T>(n: usize, edges: E, weights: Vec<u64>, terminals: T) -> Result<Self>
    where
        E: IntoIterator<Item = (usize, usize)>,
        T: IntoIterator<Item = usize>,
    {
        if weights.len() != n {
            return Err(Error::WeightCount {
                expected: n,
                got: weights.len(),
            });
        }
        if let Some((vertex, &weight)) = weights.iter().enumerate().find(|(_, &w)| w > MAX_WEIGHT) {
            return Err(Error::WeightOutOfRange { vertex, weight });
        }
        let mut adj = vec![VertexSet::new(n); n];
        let mut m = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !adj[u].insert(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[v].insert(u);
            m += 1;
        }
        let mut tset = VertexSet::new(n);
        for t in terminals {
            if t >= n {
                return Err(Error::VertexOutOfRange { vertex: t, n });
            }
            tset.insert(t);
        }
        let neighbours = adj.iter().map(VertexSet::to_vec).collect();
        Ok(Instance {
            adj,
            neighbours,
            weights,
            terminals: tset,
            m,
        })
    }

    /// Unit weights, no terminals. Panics on malformed edges.
    pub fn unit(n: usize, edges: &[(usize, usize)]) -> Self {
        Self::new(n, edges.iter().copied(), vec![1; n], []).expect("valid edge list")
    }

    pub fn with_weights(&self, weights: Vec<u64>) -> Result<Self> {
        Self::new(self.n(), self.edges(), weights, self.terminals.iter())
    }

    pub fn with_terminals<T: IntoIterator<Item = usize>>(&self, terminals: T) -> Result<Self> {
        Self::new(self.n(), self.edges(), self.weights.clone(), terminals)
    }

    /// Same graph and weights with `T = V`.
    pub fn with_all_terminals(&self) -> Self {
        let mut inst = self.clone();
        inst.terminals = VertexSet::full(self.n());
        inst
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.neighbours[v]
    }

    #[inline]
    pub fn adjacency(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn weight(&self, v: usize) -> u64 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn terminals(&self) -> &VertexSet {
        &self.terminals
    }

    #[inline]
    pub fn is_terminal(&self, v: usize) -> bool {
        self.terminals.contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub fn weight_of(&self, set: &VertexSet) -> u64 {
        set.iter().map(|v| self.weights[v]).sum()
    }

    /// Edges `(u, v)` with `u < v` in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbours
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Union of the neighbourhoods of `set`, minus `set` itself.
    pub fn neighbourhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in set {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(set);
        out
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| !self.adj[v].intersects(set))
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let k = set.len();
        set.iter().all(|v| self.adj[v].intersection_len(set) == k - 1)
    }

    /// Every terminal in `set` is isolated in the subgraph induced by `set`.
    pub fn is_t_independent(&self, set: &VertexSet) -> bool {
        set.iter()
            .filter(|&v| self.is_terminal(v))
            .all(|t| !self.adj[t].intersects(set))
    }

    /// `G[keep]`, re-indexed by ascending original id.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Induced {
        let original = keep.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in original.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .filter(|&(u, v)| keep.contains(u) && keep.contains(v))
            .map(|(u, v)| (index[u], index[v]))
            .collect();
        let weights = original.iter().map(|&v| self.weights[v]).collect();
        let terminals = original
            .iter()
            .enumerate()
            .filter(|(_, &v)| self.is_terminal(v))
            .map(|(i, _)| i);
        let instance = Instance::new(original.len(), edges, weights, terminals)
            .expect("induced subgraph of a valid instance is valid");
        Induced {
            instance,
            original,
            index,
        }
    }

    /// A copy without the edge `uv` (which must exist).
    pub fn without_edge(&self, u: usize, v: usize) -> Instance {
        debug_assert!(self.adjacent(u, v));
        let mut inst = self.clone();
        inst.adj[u].remove(v);
        inst.adj[v].remove(u);
        inst.neighbours[u].retain(|&x| x != v);
        inst.neighbours[v].retain(|&x| x != u);
        inst.m -= 1;
        inst
    }

    pub fn complement(&self) -> Instance {
        let n = self.n();
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.adjacent(u, v))
            .collect();
        Instance::new(n, edges, self.weights.clone(), self.terminals.iter())
            .expect("complement of a valid instance is valid")
    }

    /// Connected components of `G[keep]`, ordered by smallest vertex.
    pub fn components(&self, keep: &VertexSet) -> Vec<VertexSet> {
        let mut unseen = keep.clone();
        let mut out = Vec::new();
        while let Some(start) = unseen.first() {
            let mut comp = self.empty_set();
            let mut frontier = vec![start];
            unseen.remove(start);
            comp.insert(start);
            while let Some(v) = frontier.pop() {
                let next = self.adj[v].intersection(&unseen);
                for u in &next {
                    unseen.remove(u);
                    comp.insert(u);
                    frontier.push(u);
                }
            }
            out.push(comp);
        }
        out
    }

    /// Connected components of the complement of `G[keep]`.
    pub fn co_components_within(&self, keep: &VertexSet) -> Vec<VertexSet> {
        let mut unseen = keep.clone();
        let mut out = Vec::new();
        while let Some(start) = unseen.first() {
            let mut comp = self.empty_set();
            let mut frontier = vec![start];
            unseen.remove(start);
            comp.insert(start);
            while let Some(v) = frontier.pop() {
                let next = unseen.difference(&self.adj[v]);
                for u in &next {
                    unseen.remove(u);
                    comp.insert(u);
                    frontier.push(u);
                }
            }
            out.push(comp);
        }
        out
    }
}

/// Partition of `V` into co-components (components of the complement graph),
/// ordered by smallest vertex. Distinct parts are completely joined in `G`.
pub fn co_components(inst: &Instance) -> Vec<VertexSet> {
    inst.co_components_within(&inst.vertices())
}

/// An induced subgraph together with its id maps.
#[derive(Clone, Debug)]
pub struct Induced {
    pub instance: Instance,
    original: Vec<usize>,
    index: Vec<usize>,
}

impl Induced {
    /// Original id of sub-vertex `v`.
    pub fn to_original(&self, v: usize) -> usize {
        self.original[v]
    }

    /// Sub-id of original vertex `v`, if it was kept.
    pub fn to_sub(&self, v: usize) -> Option<usize> {
        self.index.get(v).copied().filter(|&i| i != usize::MAX)
    }

    pub fn original_ids(&self) -> &[usize] {
        &self.original
    }

    /// Maps a set of sub-vertices back into the parent's universe.
    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_iter(self.index.len(), set.iter().map(|v| self.original[v]))
    }

    /// Restricts a parent set to the kept vertices, in sub-ids.
    pub fn project(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_iter(self.original.len(), set.iter().filter_map(|v| self.to_sub(v)))
    }
}
