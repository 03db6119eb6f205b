//! Cotrees of P4-free graphs and the dynamic programs over them.

use crate::error::{Error, Result};
use crate::graph::Instance;
use crate::recognition::{contains_induced, Pattern, PatternKind};
use crate::solution::{Chosen, Problem, Solution};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CotreeNode {
    Leaf(usize),
    /// Disjoint union of the two children.
    Union(usize, usize),
    /// Join: every vertex of one child is adjacent to every vertex of the other.
    Join(usize, usize),
}

/// A binary cotree stored children-first; `root` is `None` for the empty graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cotree {
    pub nodes: Vec<CotreeNode>,
    pub root: Option<usize>,
    n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CotreeOutcome {
    Cotree(Cotree),
    /// An induced P4, in path order.
    NotCograph([usize; 4]),
}

impl CotreeOutcome {
    pub fn into_result(self) -> Result<Cotree> {
        match self {
            CotreeOutcome::Cotree(t) => Ok(t),
            CotreeOutcome::NotCograph(w) => Err(Error::ClassViolation {
                pattern: PatternKind::P4,
                witness: w.to_vec(),
            }),
        }
    }
}

/// Splits top-down: a disconnected part becomes a union over its
/// components, a co-disconnected part a join over its co-components. A part
/// that is neither has an induced P4.
pub fn build_cotree(inst: &Instance) -> CotreeOutcome {
    let mut nodes = Vec::new();
    let all = inst.vertices();
    let root = if all.is_empty() {
        None
    } else {
        match split(inst, &all, &mut nodes) {
            Some(r) => Some(r),
            None => {
                let w = contains_induced(inst, &Pattern::new(PatternKind::P4))
                    .expect("a prime part with two or more vertices contains a P4");
                return CotreeOutcome::NotCograph([w[0], w[1], w[2], w[3]]);
            }
        }
    };
    CotreeOutcome::Cotree(Cotree {
        nodes,
        root,
        n: inst.n(),
    })
}

fn split(inst: &Instance, part: &VertexSet, nodes: &mut Vec<CotreeNode>) -> Option<usize> {
    if part.len() == 1 {
        nodes.push(CotreeNode::Leaf(part.first().unwrap()));
        return Some(nodes.len() - 1);
    }
    let comps = inst.components(part);
    let (pieces, join) = if comps.len() > 1 {
        (comps, false)
    } else {
        let co = inst.co_components_within(part);
        if co.len() == 1 {
            return None;
        }
        (co, true)
    };
    let mut acc: Option<usize> = None;
    for piece in &pieces {
        let child = split(inst, piece, nodes)?;
        acc = Some(match acc {
            None => child,
            Some(a) => {
                nodes.push(if join {
                    CotreeNode::Join(a, child)
                } else {
                    CotreeNode::Union(a, child)
                });
                nodes.len() - 1
            }
        });
    }
    acc
}

impl Cotree {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertex sets of every node.
    pub fn node_vertices(&self) -> Vec<VertexSet> {
        let mut sets: Vec<VertexSet> = Vec::with_capacity(self.nodes.len());
        for node in &self.nodes {
            let s = match *node {
                CotreeNode::Leaf(v) => VertexSet::from_iter(self.n, [v]),
                CotreeNode::Union(a, b) | CotreeNode::Join(a, b) => sets[a].union(&sets[b]),
            };
            sets.push(s);
        }
        sets
    }

    /// The edge set the tree encodes, as ascending pairs.
    pub fn reconstruct_edges(&self) -> Vec<(usize, usize)> {
        let sets = self.node_vertices();
        let mut edges = Vec::new();
        for node in &self.nodes {
            if let CotreeNode::Join(a, b) = *node {
                for u in &sets[a] {
                    for v in &sets[b] {
                        edges.push((u.min(v), u.max(v)));
                    }
                }
            }
        }
        edges.sort_unstable();
        edges
    }
}

/// A removed set with its weight.
#[derive(Clone, Debug)]
struct Val {
    w: u64,
    set: VertexSet,
}

impl Val {
    fn plus(&self, other: &Val) -> Val {
        Val {
            w: self.w + other.w,
            set: self.set.union(&other.set),
        }
    }
}

/// First strictly lightest candidate.
fn best(cands: impl IntoIterator<Item = Option<Val>>) -> Option<Val> {
    let mut out: Option<Val> = None;
    for c in cands.into_iter().flatten() {
        if out.as_ref().is_none_or(|o| c.w < o.w) {
            out = Some(c);
        }
    }
    out
}

fn plus(a: &Option<Val>, b: &Val) -> Option<Val> {
    a.as_ref().map(|a| a.plus(b))
}

/// Optimal removals for one cotree node, each keeping a remainder of a
/// given shape.
#[derive(Clone, Debug)]
struct Table {
    /// Keep nothing.
    all: Val,
    /// Keep every non-terminal.
    avoid_t: Val,
    /// Keep an independent set.
    indep: Val,
    /// Keep a T-independent set (minimum T-vertex cover).
    t_indep: Val,
    /// Keep exactly one vertex.
    single: Val,
    /// Keep exactly one non-terminal, if there is one.
    single_nt: Option<Val>,
    oct: Val,
    fvs: Val,
}

fn leaf(inst: &Instance, v: usize) -> Table {
    let n = inst.n();
    let none = Val {
        w: 0,
        set: VertexSet::new(n),
    };
    let all = Val {
        w: inst.weight(v),
        set: VertexSet::from_iter(n, [v]),
    };
    let terminal = inst.is_terminal(v);
    Table {
        avoid_t: if terminal { all.clone() } else { none.clone() },
        single_nt: (!terminal).then(|| none.clone()),
        all,
        indep: none.clone(),
        t_indep: none.clone(),
        single: none.clone(),
        oct: none.clone(),
        fvs: none,
    }
}

fn union(y: &Table, z: &Table) -> Table {
    Table {
        all: y.all.plus(&z.all),
        avoid_t: y.avoid_t.plus(&z.avoid_t),
        indep: y.indep.plus(&z.indep),
        t_indep: y.t_indep.plus(&z.t_indep),
        single: best([Some(y.single.plus(&z.all)), Some(y.all.plus(&z.single))]).unwrap(),
        single_nt: best([plus(&y.single_nt, &z.all), plus(&z.single_nt, &y.all)]),
        oct: y.oct.plus(&z.oct),
        fvs: y.fvs.plus(&z.fvs),
    }
}

fn join(y: &Table, z: &Table) -> Table {
    let avoid_t = y.avoid_t.plus(&z.avoid_t);
    let single_nt = best([plus(&y.single_nt, &z.all), plus(&z.single_nt, &y.all)]);
    let ty_snz = plus(&z.single_nt, &y.t_indep);
    let sny_tz = plus(&y.single_nt, &z.t_indep);
    Table {
        all: y.all.plus(&z.all),
        indep: best([Some(y.indep.plus(&z.all)), Some(y.all.plus(&z.indep))]).unwrap(),
        t_indep: best([
            Some(y.t_indep.plus(&z.all)),
            Some(y.all.plus(&z.t_indep)),
            Some(avoid_t.clone()),
        ])
        .unwrap(),
        single: best([Some(y.single.plus(&z.all)), Some(y.all.plus(&z.single))]).unwrap(),
        oct: best([
            Some(y.oct.plus(&z.all)),
            Some(y.all.plus(&z.oct)),
            Some(avoid_t.clone()),
            Some(y.indep.plus(&z.indep)),
            ty_snz.clone(),
            sny_tz.clone(),
        ])
        .unwrap(),
        fvs: best([
            Some(y.fvs.plus(&z.all)),
            Some(y.all.plus(&z.fvs)),
            Some(avoid_t.clone()),
            ty_snz,
            sny_tz,
            Some(y.indep.plus(&z.single)),
            Some(y.single.plus(&z.indep)),
        ])
        .unwrap(),
        avoid_t,
        single_nt,
    }
}

fn tables(inst: &Instance, tree: &Cotree) -> Vec<Table> {
    assert_eq!(tree.n, inst.n(), "cotree does not match instance");
    let mut tabs: Vec<Table> = Vec::with_capacity(tree.nodes.len());
    for node in &tree.nodes {
        let t = match *node {
            CotreeNode::Leaf(v) => leaf(inst, v),
            CotreeNode::Union(a, b) => union(&tabs[a], &tabs[b]),
            CotreeNode::Join(a, b) => join(&tabs[a], &tabs[b]),
        };
        tabs.push(t);
    }
    tabs
}

fn root_value(inst: &Instance, tree: &Cotree, pick: impl Fn(&Table) -> &Val) -> Val {
    match tree.root {
        None => Val {
            w: 0,
            set: VertexSet::new(inst.n()),
        },
        Some(r) => pick(&tables(inst, tree)[r]).clone(),
    }
}

/// Minimum-weight T-vertex cover.
pub fn wsvc_cograph(inst: &Instance, tree: &Cotree) -> Chosen {
    let v = root_value(inst, tree, |t| &t.t_indep);
    Chosen {
        set: v.set,
        weight: v.w,
    }
}

pub fn wsoct_cograph(inst: &Instance, tree: &Cotree) -> Solution {
    let v = root_value(inst, tree, |t| &t.oct);
    Solution {
        removed: v.set,
        weight: v.w,
        problem: Problem::Oct,
    }
}

pub fn wsfvs_cograph(inst: &Instance, tree: &Cotree) -> Solution {
    let v = root_value(inst, tree, |t| &t.fvs);
    Solution {
        removed: v.set,
        weight: v.w,
        problem: Problem::Fvs,
    }
}

/// Builds the cotree and runs the matching DP; rejects graphs with a P4.
pub fn solve_cograph(inst: &Instance, problem: Problem) -> Result<Solution> {
    let tree = build_cotree(inst).into_result()?;
    Ok(match problem {
        Problem::Oct => wsoct_cograph(inst, &tree),
        Problem::Fvs => wsfvs_cograph(inst, &tree),
    })
}

/// The four join-node combinations for odd cycle transversal at the root,
/// as removed sets: `S_y ∪ V(G_z)`, `S_z ∪ V(G_y)`, `T ∩ V(G_x)` and the
/// union of the two children's minimum T-vertex covers. `None` unless the
/// root is a join.
pub fn oct_root_join_candidates(inst: &Instance, tree: &Cotree) -> Option<[(u64, VertexSet); 4]> {
    let CotreeNode::Join(a, b) = tree.nodes[tree.root?] else {
        return None;
    };
    let tabs = tables(inst, tree);
    let (y, z) = (&tabs[a], &tabs[b]);
    let pack = |v: Val| (v.w, v.set);
    Some([
        pack(y.oct.plus(&z.all)),
        pack(y.all.plus(&z.oct)),
        pack(y.avoid_t.plus(&z.avoid_t)),
        pack(y.t_indep.plus(&z.t_indep)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn tree(inst: &Instance) -> Cotree {
        match build_cotree(inst) {
            CotreeOutcome::Cotree(t) => t,
            CotreeOutcome::NotCograph(w) => panic!("unexpected P4 {w:?}"),
        }
    }

    #[test]
    fn c4_is_join_of_two_unions() {
        let t = tree(&cycle(4));
        let CotreeNode::Join(a, b) = t.nodes[t.root.unwrap()] else {
            panic!("root should be a join");
        };
        assert!(matches!(t.nodes[a], CotreeNode::Union(..)));
        assert!(matches!(t.nodes[b], CotreeNode::Union(..)));
        assert_eq!(t.reconstruct_edges(), cycle(4).edges().collect::<Vec<_>>());
    }

    #[test]
    fn p4_gives_witness() {
        match build_cotree(&path(4)) {
            CotreeOutcome::NotCograph(w) => {
                assert!(w == [0, 1, 2, 3] || w == [3, 2, 1, 0]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn edgeless_binarized() {
        let t = tree(&edgeless(3));
        let internal = t.nodes.iter().filter(|n| !matches!(n, CotreeNode::Leaf(_))).count();
        assert_eq!(internal, 2);
        assert!(t.nodes.iter().all(|n| !matches!(n, CotreeNode::Join(..))));
    }

    #[test]
    fn empty_graph() {
        let g = edgeless(0);
        let t = tree(&g);
        assert_eq!(t.root, None);
        assert_eq!(wsoct_cograph(&g, &t).weight, 0);
    }

    #[test]
    fn dp_examples() {
        let k3 = complete(3).with_terminals([0]).unwrap();
        assert_eq!(wsvc_cograph(&k3, &tree(&k3)).weight, 1);
        let k5 = complete(5).with_all_terminals();
        assert_eq!(wsoct_cograph(&k5, &tree(&k5)).weight, 3);
        let c4 = cycle(4).with_all_terminals();
        assert_eq!(wsoct_cograph(&c4, &tree(&c4)).weight, 0);
        assert_eq!(wsfvs_cograph(&c4, &tree(&c4)).weight, 1);
        let k4 = complete(4).with_all_terminals();
        assert_eq!(wsfvs_cograph(&k4, &tree(&k4)).weight, 2);
    }

    #[test]
    fn vertex_cover_union_candidate_can_be_infeasible() {
        // Y = {t, u, v} with edge uv and terminal t, Z = {z1, z2}; G = Y ⊗ Z.
        // Both sides have empty T-vertex covers, yet t-z1-u-v-z2 is an odd
        // cycle through t.
        let mut edges = vec![(1, 2)];
        for y in 0..3 {
            edges.extend([(y, 3), (y, 4)]);
        }
        let g = Instance::new(5, edges, vec![1; 5], [0]).unwrap();
        let t = tree(&g);
        let cands = oct_root_join_candidates(&g, &t).unwrap();
        assert_eq!(cands[3].0, 0);
        assert!(!Problem::Oct.accepts(&g, &cands[3].1.complement()));
        let s = wsoct_cograph(&g, &t);
        assert_eq!(s.weight, 1);
        assert!(s.verify(&g));
    }
}
