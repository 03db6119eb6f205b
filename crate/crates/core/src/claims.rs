//! Checkers for the structural facts behind the (3P1+P2)-free and
//! (P1+P3)-free algorithms, run against remainders of feasible solutions.

use std::fmt;

use crate::blocks::classify_or;
use crate::error::Result;
use crate::graph::Instance;
use crate::solution::Problem;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    /// The odd (cycle) part of a mixed remainder has at most two components.
    OddComponents,
    /// Independent sets inside the even (forest) part have size at most four.
    EvenIndependence,
    /// With two odd components, the even part is a clique on at most two vertices.
    TwoComponentsSmallClique,
    /// With two odd components, each has at most one connector.
    TwoComponentsConnectors,
    /// A remainder holding a terminal meets at most two co-components.
    CoComponentsMet,
    /// Across two co-components, the side opposite a terminal is independent.
    OppositeIndependent,
    /// Across two co-components, the remainder has one of the admissible shapes.
    PairShape,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Claim::OddComponents => "odd part has at most two components",
            Claim::EvenIndependence => "even part has independence number at most 4",
            Claim::TwoComponentsSmallClique => "two odd components force a small clique",
            Claim::TwoComponentsConnectors => "two odd components have one connector each",
            Claim::CoComponentsMet => "at most two co-components met",
            Claim::OppositeIndependent => "side opposite a terminal is independent",
            Claim::PairShape => "two-co-component shape",
        })
    }
}

/// Claims about mixed solutions on (3P1+P2)-free graphs. Non-mixed
/// remainders satisfy them vacuously.
pub fn three_p1_p2_claims(inst: &Instance, keep: &VertexSet, problem: Problem) -> Result<Vec<Claim>> {
    let dec = classify_or(inst, keep, problem.mode())?;
    let mut broken = Vec::new();
    if !dec.mixed {
        return Ok(broken);
    }
    let (odd, even) = (&dec.odd, &dec.even);
    let comps = inst.components(odd);
    if comps.len() > 2 {
        broken.push(Claim::OddComponents);
    }
    if independence_number(inst, even) > 4 {
        broken.push(Claim::EvenIndependence);
    }
    if comps.len() == 2 {
        if even.len() > 2 || !inst.is_clique(even) {
            broken.push(Claim::TwoComponentsSmallClique);
        }
        let reach = inst.neighbourhood(even);
        if comps.iter().any(|d| d.intersection_len(&reach) > 1) {
            broken.push(Claim::TwoComponentsConnectors);
        }
    }
    Ok(broken)
}

/// Claims about remainders on (P1+P3)-free graphs, in terms of the
/// co-components they meet.
pub fn p1_p3_claims(inst: &Instance, keep: &VertexSet, problem: Problem) -> Vec<Claim> {
    let mut broken = Vec::new();
    if !keep.intersects(inst.terminals()) {
        return broken;
    }
    let sides: Vec<VertexSet> = inst
        .co_components_within(&inst.vertices())
        .iter()
        .map(|d| d.intersection(keep))
        .filter(|s| !s.is_empty())
        .collect();
    if sides.len() > 2 {
        broken.push(Claim::CoComponentsMet);
    }
    if sides.len() != 2 {
        return broken;
    }
    let (a, b) = (&sides[0], &sides[1]);
    let opposite_ok = |x: &VertexSet, y: &VertexSet| !x.intersects(inst.terminals()) || inst.is_independent(y);
    if !opposite_ok(a, b) || !opposite_ok(b, a) {
        broken.push(Claim::OppositeIndependent);
    }
    let both_independent = inst.is_independent(a) && inst.is_independent(b);
    let first = match problem {
        Problem::Oct => both_independent,
        Problem::Fvs => both_independent && (a.len() == 1 || b.len() == 1),
    };
    let lone =
        |x: &VertexSet, y: &VertexSet| x.len() == 1 && !x.intersects(inst.terminals()) && inst.is_t_independent(y);
    if !(first || lone(a, b) || lone(b, a)) {
        broken.push(Claim::PairShape);
    }
    broken
}

/// Size of a largest independent subset of `set`, by branching.
pub fn independence_number(inst: &Instance, set: &VertexSet) -> usize {
    fn go(inst: &Instance, cand: VertexSet) -> usize {
        let Some(v) = cand.first() else { return 0 };
        let mut without = cand.clone();
        without.remove(v);
        let take = 1 + go(inst, without.difference(inst.adjacency(v)));
        if inst.adjacency(v).intersects(&without) {
            take.max(go(inst, without))
        } else {
            take
        }
    }
    go(inst, set.clone())
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PawReport {
    /// Connected paw-free labelled graphs examined, per order.
    pub checked: Vec<u64>,
    /// Adjacency masks of a graph with both a triangle and an induced
    /// P1+P2, if one was found.
    pub counterexample: Option<Vec<u8>>,
}

/// Walks every labelled paw-free graph on at most `max_n <= 8` vertices,
/// adding one vertex at a time, and checks that each connected one is
/// triangle-free or (P1+P2)-free.
pub fn paw_dichotomy_exhaustive(max_n: usize) -> PawReport {
    assert!((1..=8).contains(&max_n));
    let mut report = PawReport {
        checked: vec![0; max_n + 1],
        counterexample: None,
    };
    let mut adj = [0u8; 8];
    grow(&mut adj, 1, max_n, &mut report);
    report
}

fn grow(adj: &mut [u8; 8], k: usize, max_n: usize, report: &mut PawReport) {
    if report.counterexample.is_some() {
        return;
    }
    if connected(&adj[..k]) {
        report.checked[k] += 1;
        if !dichotomy(&adj[..k]) {
            report.counterexample = Some(adj[..k].to_vec());
            return;
        }
    }
    if k == max_n {
        return;
    }
    for mask in 0u8..=((1u16 << k) - 1) as u8 {
        if closes_paw(adj, k, mask) {
            continue;
        }
        adj[k] = mask;
        for (u, row) in adj[..k].iter_mut().enumerate() {
            *row |= (mask >> u & 1) << k;
        }
        grow(adj, k + 1, max_n, report);
        for row in &mut adj[..k] {
            *row &= !(1 << k);
        }
        adj[k] = 0;
    }
}

/// Would a new vertex `k` with neighbourhood `mask` create an induced paw?
fn closes_paw(adj: &[u8; 8], k: usize, mask: u8) -> bool {
    for x in 0..k {
        for y in x + 1..k {
            for z in y + 1..k {
                let vs = [x, y, z];
                let mut deg = [mask >> x & 1, mask >> y & 1, mask >> z & 1, 0];
                deg[3] = deg[0] + deg[1] + deg[2];
                let mut edges = deg[3];
                for i in 0..3 {
                    for j in i + 1..3 {
                        if adj[vs[i]] >> vs[j] & 1 == 1 {
                            deg[i] += 1;
                            deg[j] += 1;
                            edges += 1;
                        }
                    }
                }
                // Four edges on four vertices: a paw or a C4.
                if edges == 4 && deg.contains(&3) {
                    return true;
                }
            }
        }
    }
    false
}

fn connected(adj: &[u8]) -> bool {
    let all = ((1u16 << adj.len()) - 1) as u8;
    let mut seen = 1u8;
    let mut frontier = 1u8;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == all
}

fn dichotomy(adj: &[u8]) -> bool {
    let (mut triangle, mut p1p2) = (false, false);
    let k = adj.len();
    for x in 0..k {
        for y in x + 1..k {
            for z in y + 1..k {
                let e = (adj[x] >> y & 1) + (adj[x] >> z & 1) + (adj[y] >> z & 1);
                triangle |= e == 3;
                p1p2 |= e == 1;
            }
        }
    }
    !(triangle && p1p2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn independence() {
        assert_eq!(independence_number(&cycle(5), &cycle(5).vertices()), 2);
        assert_eq!(independence_number(&edgeless(6), &edgeless(6).vertices()), 6);
        assert_eq!(independence_number(&path(7), &VertexSet::from_iter(7, [0, 1, 2])), 2);
    }

    #[test]
    fn paw_dichotomy_small_orders() {
        let report = paw_dichotomy_exhaustive(5);
        assert!(report.counterexample.is_none());
        // Connected labelled graphs on 3 vertices: P3 three ways, plus K3.
        assert_eq!(report.checked[3], 4);
    }

    #[test]
    fn two_odd_components_detected() {
        // Two triangles hanging off a terminal path u - t - w.
        let g = Instance::unit(
            9,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (6, 7),
                (7, 8),
                (0, 6),
                (8, 3),
            ],
        )
        .with_terminals([7])
        .unwrap();
        let broken = three_p1_p2_claims(&g, &g.vertices(), Problem::Oct).unwrap();
        // Even part {6, 7, 8} is a path, not a clique.
        assert!(broken.contains(&Claim::TwoComponentsSmallClique));
    }

    #[test]
    fn pair_shape_on_k222() {
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if u / 2 != v / 2 {
                    edges.push((u, v));
                }
            }
        }
        let g = Instance::unit(6, &edges).with_terminals([0]).unwrap();
        let keep = VertexSet::from_iter(6, [0, 1, 2, 3]);
        assert!(p1_p3_claims(&g, &keep, Problem::Oct).is_empty());
        assert_eq!(p1_p3_claims(&g, &keep, Problem::Fvs), vec![Claim::PairShape]);
        assert_eq!(
            p1_p3_claims(&g, &g.vertices(), Problem::Oct),
            vec![Claim::CoComponentsMet]
        );
    }
}
