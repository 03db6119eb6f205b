//! Biconnected components and the feasibility predicates built on them.
//!
//! A vertex lies on an odd cycle exactly when it belongs to a non-bipartite
//! block, and on some cycle exactly when it belongs to a block with at least
//! three vertices. Both transversal problems reduce their feasibility test to
//! this classification.

use crate::error::{Error, Result};
use crate::graph::Instance;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertices: VertexSet,
    pub edges: usize,
    pub is_bipartite: bool,
}

impl Block {
    /// Blocks with three or more vertices are 2-connected and carry a cycle;
    /// smaller blocks are bridges.
    pub fn has_cycle(&self) -> bool {
        self.vertices.len() >= 3
    }
}

#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    /// Indices into `blocks` for every vertex (empty for isolated or
    /// non-kept vertices).
    pub vertex_blocks: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    /// Vertices lying on at least one odd cycle.
    pub fn odd_vertices(&self, universe: usize) -> VertexSet {
        self.union_of(universe, |b| !b.is_bipartite)
    }

    /// Vertices lying on at least one cycle.
    pub fn cycle_vertices(&self, universe: usize) -> VertexSet {
        self.union_of(universe, Block::has_cycle)
    }

    fn union_of(&self, universe: usize, pick: impl Fn(&Block) -> bool) -> VertexSet {
        let mut out = VertexSet::new(universe);
        for b in self.blocks.iter().filter(|b| pick(b)) {
            out.union_with(&b.vertices);
        }
        out
    }
}

const UNSET: usize = usize::MAX;

/// Biconnected components of `G[keep]` via an iterative Hopcroft-Tarjan
/// edge-stack traversal.
pub fn block_decomposition(inst: &Instance, keep: &VertexSet) -> BlockDecomposition {
    let n = inst.n();
    let mut disc = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut frames: Vec<(usize, usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    let mut vertex_blocks = vec![Vec::new(); n];

    for root in keep {
        if disc[root] != UNSET {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        frames.push((root, UNSET, 0));
        while let Some(frame) = frames.last_mut() {
            let (v, parent, i) = *frame;
            let nbrs = inst.neighbours(v);
            if i < nbrs.len() {
                frame.2 += 1;
                let u = nbrs[i];
                if !keep.contains(u) {
                    continue;
                }
                if disc[u] == UNSET {
                    edge_stack.push((v, u));
                    disc[u] = timer;
                    low[u] = timer;
                    timer += 1;
                    frames.push((u, v, 0));
                } else if u != parent && disc[u] < disc[v] {
                    edge_stack.push((v, u));
                    low[v] = low[v].min(disc[u]);
                }
                continue;
            }
            frames.pop();
            if parent == UNSET {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                let mut verts = VertexSet::new(n);
                let mut edges = 0;
                while let Some((a, b)) = edge_stack.pop() {
                    verts.insert(a);
                    verts.insert(b);
                    edges += 1;
                    if (a, b) == (parent, v) {
                        break;
                    }
                }
                let idx = blocks.len();
                for x in &verts {
                    vertex_blocks[x].push(idx);
                }
                let is_bipartite = is_bipartite_within(inst, &verts);
                blocks.push(Block {
                    vertices: verts,
                    edges,
                    is_bipartite,
                });
            }
        }
    }
    BlockDecomposition { blocks, vertex_blocks }
}

/// Two-colours `G[set]` by BFS; false on the first monochromatic edge.
pub fn is_bipartite_within(inst: &Instance, set: &VertexSet) -> bool {
    let n = inst.n();
    let mut colour = vec![u8::MAX; n];
    let mut queue = Vec::new();
    for s in set {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        queue.push(s);
        while let Some(v) = queue.pop() {
            for &u in inst.neighbours(v) {
                if !set.contains(u) {
                    continue;
                }
                if colour[u] == u8::MAX {
                    colour[u] = colour[v] ^ 1;
                    queue.push(u);
                } else if colour[u] == colour[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// No odd cycle of `G[keep]` passes through a terminal.
pub fn is_t_bipartite(inst: &Instance, keep: &VertexSet) -> bool {
    if !keep.intersects(inst.terminals()) {
        return true;
    }
    block_decomposition(inst, keep)
        .blocks
        .iter()
        .all(|b| b.is_bipartite || !b.vertices.intersects(inst.terminals()))
}

/// No cycle of `G[keep]` passes through a terminal.
pub fn is_t_forest(inst: &Instance, keep: &VertexSet) -> bool {
    if !keep.intersects(inst.terminals()) {
        return true;
    }
    block_decomposition(inst, keep)
        .blocks
        .iter()
        .all(|b| !b.has_cycle() || !b.vertices.intersects(inst.terminals()))
}

/// Which cycles a transversal must hit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CycleMode {
    /// Odd cycles (odd cycle transversal).
    Odd,
    /// All cycles (feedback vertex set).
    Cycle,
}

impl CycleMode {
    pub fn is_feasible(self, inst: &Instance, keep: &VertexSet) -> bool {
        match self {
            CycleMode::Odd => is_t_bipartite(inst, keep),
            CycleMode::Cycle => is_t_forest(inst, keep),
        }
    }
}

/// Split of a feasible remainder `B` into the vertices that lie on a
/// (odd) cycle of `G[B]` and the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionDecomposition {
    /// Odd vertices (odd mode) or cycle vertices (cycle mode).
    pub odd: VertexSet,
    /// Even vertices (odd mode) or forest vertices (cycle mode).
    pub even: VertexSet,
    /// `odd` is nonempty and `even` holds a terminal.
    pub mixed: bool,
}

pub fn classify_or(inst: &Instance, keep: &VertexSet, mode: CycleMode) -> Result<SolutionDecomposition> {
    let bd = block_decomposition(inst, keep);
    let odd = match mode {
        CycleMode::Odd => bd.odd_vertices(inst.n()),
        CycleMode::Cycle => bd.cycle_vertices(inst.n()),
    };
    if odd.intersects(inst.terminals()) {
        return Err(Error::Infeasible(match mode {
            CycleMode::Odd => "an odd cycle passes through a terminal",
            CycleMode::Cycle => "a cycle passes through a terminal",
        }));
    }
    let even = keep.difference(&odd);
    let mixed = !odd.is_empty() && even.intersects(inst.terminals());
    Ok(SolutionDecomposition { odd, even, mixed })
}
