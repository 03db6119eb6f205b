//! Independent set subroutines on 3P1-free and P3-free graphs.

use crate::cograph::{build_cotree, wsvc_cograph};
use crate::error::Result;
use crate::graph::Instance;
use crate::recognition::{is_free, require_free, PatternKind};
use crate::solution::{Best, Chosen};
use crate::vertex_set::VertexSet;

/// Maximum-weight T-independent set of a 3P1-free graph.
pub fn wsis_3p1free(inst: &Instance) -> Result<Chosen> {
    require_free(inst, PatternKind::ThreeP1)?;
    Ok(wsis_3p1free_unchecked(inst))
}

pub(crate) fn wsis_3p1free_unchecked(inst: &Instance) -> Chosen {
    let n = inst.n();
    let t = inst.terminals();
    let mut best = Best::new();
    let mut offer = |set: VertexSet| {
        let w = inst.weight_of(&set);
        // Maximizing: compare on the weight left out.
        best.offer(inst.total_weight() - w, set);
    };
    offer(t.complement());
    for u in t {
        let mut far = inst.adjacency(u).complement();
        far.remove(u);
        debug_assert!(inst.is_clique(&far), "non-neighbours of a vertex form a clique");
        let mut set = far.difference(t);
        set.insert(u);
        offer(set);
    }
    let tv = t.to_vec();
    for (i, &a) in tv.iter().enumerate() {
        for &b in &tv[i + 1..] {
            if !inst.adjacent(a, b) {
                offer(VertexSet::from_iter(n, [a, b]));
            }
        }
    }
    let (_, set) = best.into_inner().expect("at least one candidate");
    Chosen::new(inst, set)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmallClass {
    ThreeP1Free,
    P3Free,
}

/// Maximum-weight independent set on a 3P1-free or P3-free graph.
pub fn mwis_small(inst: &Instance, class: SmallClass) -> Result<Chosen> {
    match class {
        SmallClass::ThreeP1Free => require_free(inst, PatternKind::ThreeP1)?,
        SmallClass::P3Free => require_free(inst, PatternKind::P3)?,
    }
    Ok(mwis_small_unchecked(inst, class))
}

pub(crate) fn mwis_small_unchecked(inst: &Instance, class: SmallClass) -> Chosen {
    let n = inst.n();
    match class {
        SmallClass::ThreeP1Free => {
            let mut best = Best::new();
            best.offer(u64::MAX, VertexSet::new(n));
            for u in 0..n {
                best.offer(u64::MAX - inst.weight(u), VertexSet::from_iter(n, [u]));
                for v in u + 1..n {
                    if !inst.adjacent(u, v) {
                        let w = inst.weight(u) + inst.weight(v);
                        best.offer(u64::MAX - w, VertexSet::from_iter(n, [u, v]));
                    }
                }
            }
            Chosen::new(inst, best.into_inner().unwrap().1)
        }
        SmallClass::P3Free => {
            let mut set = VertexSet::new(n);
            for clique in inst.components(&inst.vertices()) {
                let top = clique
                    .iter()
                    .max_by_key(|&v| (inst.weight(v), std::cmp::Reverse(v)))
                    .unwrap();
                set.insert(top);
            }
            Chosen::new(inst, set)
        }
    }
}

/// Maximum-weight T-independent set of a P3-free graph, as the complement of
/// a minimum T-vertex cover.
pub fn wsis_p3free(inst: &Instance) -> Result<Chosen> {
    require_free(inst, PatternKind::P3)?;
    Ok(wsis_p3free_unchecked(inst))
}

pub(crate) fn wsis_p3free_unchecked(inst: &Instance) -> Chosen {
    let tree = build_cotree(inst).into_result().expect("P3-free graphs are cographs");
    let cover = wsvc_cograph(inst, &tree);
    Chosen::new(inst, cover.set.complement())
}

/// Picks the P3-free routine when it applies, else the 3P1-free one.
pub(crate) fn small_class(inst: &Instance) -> Option<SmallClass> {
    if is_free(inst, PatternKind::P3) {
        Some(SmallClass::P3Free)
    } else if is_free(inst, PatternKind::ThreeP1) {
        Some(SmallClass::ThreeP1Free)
    } else {
        None
    }
}

pub(crate) fn wsis_small(inst: &Instance, class: SmallClass) -> Chosen {
    match class {
        SmallClass::P3Free => wsis_p3free_unchecked(inst),
        SmallClass::ThreeP1Free => wsis_3p1free_unchecked(inst),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn wsis_3p1_examples() {
        let c4 = cycle(4).with_all_terminals();
        assert_eq!(wsis_3p1free(&c4).unwrap().weight, 2);
        let k4 = complete(4).with_all_terminals();
        assert_eq!(wsis_3p1free(&k4).unwrap().weight, 1);
        assert!(wsis_3p1free(&edgeless(3)).is_err());
    }

    #[test]
    fn mwis_examples() {
        let k3k2 = Instance::unit(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]);
        assert_eq!(mwis_small(&k3k2, SmallClass::P3Free).unwrap().weight, 2);
        assert_eq!(mwis_small(&cycle(4), SmallClass::ThreeP1Free).unwrap().weight, 2);
        assert!(mwis_small(&path(3), SmallClass::P3Free).is_err());
    }

    #[test]
    fn wsis_p3_examples() {
        let k3 = complete(3).with_terminals([0]).unwrap();
        let r = wsis_p3free(&k3).unwrap();
        assert_eq!((r.weight, r.set.to_vec()), (2, vec![1, 2]));
        let e = edgeless(4).with_all_terminals();
        assert_eq!(wsis_p3free(&e).unwrap().set.len(), 4);
    }
}
