//! The vertex cover reduction onto 5P1-free graphs, and seeded random
//! generators for every supported class.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Instance;
use crate::recognition::{classify, is_free, ClassLabel, PatternKind};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutput {
    pub instance: Instance,
    /// Original vertex `v` keeps id `v`; this is the identity map, kept
    /// explicit for callers.
    pub vertex_map: Vec<usize>,
    pub r: [usize; 3],
    pub t: usize,
}

/// Turns each part into a clique and adds `r_1, r_2, r_3` and `t`, where
/// `r_i` sees `X_i ∪ {t}`. Original vertices weigh 1, the new ones `|V(g)|`,
/// and `T = {t}`.
pub fn vc3_to_wsoct(g: &Instance, partition: &[Vec<usize>; 3]) -> Result<ReductionOutput> {
    let n = g.n();
    let mut seen = VertexSet::new(n);
    for (i, part) in partition.iter().enumerate() {
        for &v in part {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if !seen.insert(v) {
                return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
            }
        }
        let set = VertexSet::from_iter(n, part.iter().copied());
        if !g.is_independent(&set) {
            return Err(Error::InvalidPartition(format!("part {} is not independent", i + 1)));
        }
    }
    if seen.len() != n {
        let missing = seen.complement().first().unwrap();
        return Err(Error::InvalidPartition(format!("vertex {missing} is in no part")));
    }
    let r = [n, n + 1, n + 2];
    let t = n + 3;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for (i, part) in partition.iter().enumerate() {
        for (a, &u) in part.iter().enumerate() {
            for &v in &part[a + 1..] {
                edges.push((u, v));
            }
            edges.push((u, r[i]));
        }
        edges.push((r[i], t));
    }
    let mut weights = vec![1; n];
    weights.extend([n as u64; 4]);
    let instance = Instance::new(n + 4, edges, weights, [t])?;
    Ok(ReductionOutput {
        instance,
        vertex_map: (0..n).collect(),
        r,
        t,
    })
}

/// Finds a partition of `g` into three independent sets, if one exists.
pub fn three_colouring(g: &Instance) -> Option<[Vec<usize>; 3]> {
    fn go(g: &Instance, v: usize, colour: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..3 {
            if g.neighbours(v).iter().all(|&u| u >= v || colour[u] != c) {
                colour[v] = c;
                if go(g, v + 1, colour) {
                    return true;
                }
            }
        }
        false
    }
    let mut colour = vec![usize::MAX; g.n()];
    if !go(g, 0, &mut colour) {
        return None;
    }
    let mut parts: [Vec<usize>; 3] = Default::default();
    for (v, &c) in colour.iter().enumerate() {
        parts[c].push(v);
    }
    Some(parts)
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorConfig {
    pub weights: RangeInclusive<u64>,
    /// Probability that a vertex is a terminal.
    pub terminal_density: f64,
    /// Rejection-sampling attempts before giving up.
    pub budget: u64,
    /// Also require `classify` to return exactly the requested label, so a
    /// (3P1+P2)-free sample is not, say, a cograph.
    pub strict: bool,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            weights: 0..=20,
            terminal_density: 0.4,
            budget: 100_000,
            strict: false,
        }
    }
}

/// Largest supported generator size.
pub const MAX_GENERATED: usize = 40;

/// A seeded random instance from `class`.
///
/// Cographs come from random cotrees and (P1+P3)-free graphs from joins of
/// 3P1-free and P3-free pieces; the other classes are rejection sampled with
/// a fresh edge probability per attempt. Every sample is checked.
pub fn random_hfree(n: usize, class: ClassLabel, seed: u64, cfg: &GeneratorConfig) -> Result<Instance> {
    assert!(
        n <= MAX_GENERATED,
        "generator supports at most {MAX_GENERATED} vertices"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cfg.budget {
        let edges = match class {
            ClassLabel::P4Free => random_cograph(&mut rng, n),
            ClassLabel::P1P3Free => random_p1p3free(&mut rng, n),
            // 1P2-free means edgeless.
            ClassLabel::SP2Free(1) => Vec::new(),
            ClassLabel::ThreeP1P2Free | ClassLabel::SP2Free(_) => {
                let p = rng.gen_range(0.55..0.95);
                gnp(&mut rng, n, p)
            }
            ClassLabel::Unsupported => gnp(&mut rng, n, 0.3),
        };
        let g = Instance::unit(n, &edges);
        let in_class = match class.pattern() {
            Some(kind) => is_free(&g, kind),
            None => true,
        };
        if !in_class || (cfg.strict && classify(&g) != class) {
            continue;
        }
        let weights = (0..n).map(|_| rng.gen_range(cfg.weights.clone())).collect();
        let terminals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(cfg.terminal_density)).collect();
        return Instance::new(n, g.edges(), weights, terminals);
    }
    Err(Error::GenerationBudget {
        class: class.to_string(),
        attempts: cfg.budget,
    })
}

fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Random binary cotree over a shuffled vertex list.
fn random_cograph(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    fn build(rng: &mut ChaCha8Rng, vs: &[usize], edges: &mut Vec<(usize, usize)>) {
        if vs.len() < 2 {
            return;
        }
        let cut = rng.gen_range(1..vs.len());
        let (a, b) = vs.split_at(cut);
        build(rng, a, edges);
        build(rng, b, edges);
        if rng.gen_bool(0.5) {
            for &u in a {
                for &v in b {
                    edges.push((u.min(v), u.max(v)));
                }
            }
        }
    }
    let mut vs: Vec<usize> = (0..n).collect();
    vs.shuffle(rng);
    let mut edges = Vec::new();
    build(rng, &vs, &mut edges);
    edges
}

/// Join of pieces, each a disjoint union of cliques (P3-free) or the
/// complement of a triangle-free graph (3P1-free).
fn random_p1p3free(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    let mut vs: Vec<usize> = (0..n).collect();
    vs.shuffle(rng);
    let mut pieces: Vec<&[usize]> = Vec::new();
    let mut rest = &vs[..];
    while !rest.is_empty() {
        let k = rng.gen_range(1..=rest.len());
        let (a, b) = rest.split_at(k);
        pieces.push(a);
        rest = b;
    }
    let mut edges = Vec::new();
    for (i, piece) in pieces.iter().enumerate() {
        if rng.gen_bool(0.5) {
            let cliques = rng.gen_range(1..=piece.len());
            let label: Vec<usize> = piece.iter().map(|_| rng.gen_range(0..cliques)).collect();
            for a in 0..piece.len() {
                for b in a + 1..piece.len() {
                    if label[a] == label[b] {
                        edges.push((piece[a], piece[b]));
                    }
                }
            }
        } else {
            let k = piece.len();
            let p = rng.gen_range(0.1..0.6);
            let mut comp = vec![vec![false; k]; k];
            let mut pairs: Vec<(usize, usize)> = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).collect();
            pairs.shuffle(rng);
            for (a, b) in pairs {
                let closes_triangle = (0..k).any(|c| comp[a][c] && comp[b][c]);
                if !closes_triangle && rng.gen_bool(p) {
                    comp[a][b] = true;
                    comp[b][a] = true;
                }
            }
            for a in 0..k {
                for b in a + 1..k {
                    if !comp[a][b] {
                        edges.push((piece[a], piece[b]));
                    }
                }
            }
        }
        for other in &pieces[i + 1..] {
            for &u in piece.iter() {
                for &v in other.iter() {
                    edges.push((u, v));
                }
            }
        }
    }
    for e in &mut edges {
        *e = (e.0.min(e.1), e.0.max(e.1));
    }
    edges
}

/// Every graph here is 5P1-free by construction; this re-checks it.
pub fn is_five_p1_free(out: &ReductionOutput) -> bool {
    is_free(&out.instance, PatternKind::FiveP1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::oracle::oracle_transversal;
    use crate::solution::Problem;

    fn singletons() -> [Vec<usize>; 3] {
        [vec![0], vec![1], vec![2]]
    }

    #[test]
    fn k3_reduction() {
        let out = vc3_to_wsoct(&complete(3), &singletons()).unwrap();
        assert_eq!(out.instance.n(), 7);
        assert!(is_five_p1_free(&out));
        assert_eq!(oracle_transversal(&out.instance, Problem::Oct).unwrap().weight, 2);
    }

    #[test]
    fn edgeless_reduction() {
        let out = vc3_to_wsoct(&edgeless(3), &singletons()).unwrap();
        assert_eq!(oracle_transversal(&out.instance, Problem::Oct).unwrap().weight, 0);
    }

    #[test]
    fn c4_reduction() {
        let out = vc3_to_wsoct(&cycle(4), &[vec![0, 2], vec![1], vec![3]]).unwrap();
        for i in 0..3 {
            assert_eq!(out.instance.weight(out.r[i]), 4);
        }
        assert_eq!(oracle_transversal(&out.instance, Problem::Oct).unwrap().weight, 2);
    }

    #[test]
    fn bad_partitions() {
        assert!(vc3_to_wsoct(&complete(3), &[vec![0, 1], vec![2], vec![]]).is_err());
        assert!(vc3_to_wsoct(&complete(3), &[vec![0], vec![1], vec![]]).is_err());
        assert!(vc3_to_wsoct(&complete(3), &[vec![0], vec![1], vec![1, 2]]).is_err());
    }

    #[test]
    fn colouring() {
        assert!(three_colouring(&complete(4)).is_none());
        let parts = three_colouring(&cycle(5)).unwrap();
        assert!(vc3_to_wsoct(&cycle(5), &parts).is_ok());
    }

    #[test]
    fn generators_are_in_class_and_deterministic() {
        let cfg = GeneratorConfig::default();
        for class in [
            ClassLabel::P4Free,
            ClassLabel::P1P3Free,
            ClassLabel::ThreeP1P2Free,
            ClassLabel::SP2Free(2),
        ] {
            let a = random_hfree(10, class, 7, &cfg).unwrap();
            let b = random_hfree(10, class, 7, &cfg).unwrap();
            assert_eq!(a, b);
            assert!(is_free(&a, class.pattern().unwrap()));
        }
    }
}
