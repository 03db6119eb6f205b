use std::ops::ControlFlow;

use proptest::prelude::*;

use subtrans::enumeration::{collect_all, enum_maximal_independent_sets, enum_maximal_induced_forests, is_forest};
use subtrans::format::{parse_instance, serialize_instance};
use subtrans::oracle::oracle_vertex_cut;
use subtrans::{build_cotree, classify, min_weight_vertex_cut, CotreeOutcome, CutQuery, Instance, Problem, VertexSet};

prop_compose! {
    fn instance(max_n: usize)(n in 1..=max_n)
        (edges in proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
         weights in proptest::collection::vec(0u64..=20, n),
         terms in proptest::collection::vec(proptest::bool::weighted(0.4), n)) -> Instance {
        let n = weights.len();
        let mut list = Vec::new();
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if edges[k] {
                    list.push((u, v));
                }
                k += 1;
            }
        }
        let ts: Vec<usize> = (0..n).filter(|&v| terms[v]).collect();
        Instance::new(n, list, weights, ts).unwrap()
    }
}

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n).map(move |m| VertexSet::from_mask(n, m))
}

fn is_maximal(g: &Instance, set: &VertexSet, ok: impl Fn(&VertexSet) -> bool) -> bool {
    ok(set)
        && set.complement().iter().all(|v| {
            let mut bigger = set.clone();
            bigger.insert(v);
            !ok(&bigger)
        })
        && g.n() == set.universe()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn maximal_independent_sets_match_brute_force(g in instance(10)) {
        let mut got = collect_all(|f| enum_maximal_independent_sets(&g, &g.vertices(), f));
        got.sort_by(|a, b| a.lex_cmp(b));
        let mut want: Vec<VertexSet> = subsets(g.n()).filter(|s| is_maximal(&g, s, |x| g.is_independent(x))).collect();
        want.sort_by(|a, b| a.lex_cmp(b));
        prop_assert_eq!(got, want);
    }

    #[test]
    fn maximal_forests_match_brute_force(g in instance(9)) {
        let mut got = collect_all(|f| enum_maximal_induced_forests(&g, f));
        got.sort_by(|a, b| a.lex_cmp(b));
        let mut want: Vec<VertexSet> = subsets(g.n()).filter(|s| is_maximal(&g, s, |x| is_forest(&g, x))).collect();
        want.sort_by(|a, b| a.lex_cmp(b));
        prop_assert_eq!(got, want);
    }

    #[test]
    fn cut_matches_oracle(g in instance(12), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        prop_assume!(g.n() >= 2);
        let t1 = a.index(g.n());
        let t2 = (t1 + 1 + b.index(g.n() - 1)) % g.n();
        let got = min_weight_vertex_cut(&CutQuery { inst: &g, t1, t2 });
        let want = oracle_vertex_cut(&g, t1, t2).unwrap();
        prop_assert_eq!(got.feasible, want.feasible);
        prop_assert_eq!(got.weight, want.weight);
        if got.feasible {
            prop_assert_eq!(got.flow, got.weight);
            prop_assert_eq!(g.weight_of(&got.separator), got.weight);
            prop_assert!(!got.separator.contains(t1) && !got.separator.contains(t2));
        }
    }

    #[test]
    fn cotree_round_trip(g in instance(12)) {
        match build_cotree(&g) {
            CotreeOutcome::Cotree(tree) => {
                let mut edges = tree.reconstruct_edges();
                edges.sort();
                prop_assert_eq!(edges, g.edges().collect::<Vec<_>>());
            }
            CotreeOutcome::NotCograph(w) => {
                let sub = g.induced_subgraph(&VertexSet::from_iter(g.n(), w));
                prop_assert_eq!(sub.instance.m(), 3);
                prop_assert!(!sub.instance.is_clique(&sub.instance.vertices()));
                prop_assert_eq!(sub.instance.components(&sub.instance.vertices()).len(), 1);
            }
        }
    }

    #[test]
    fn format_round_trip(g in instance(15)) {
        let text = serialize_instance(&g);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(serialize_instance(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn scaling_weights_scales_optimum(g in instance(9), fvs in any::<bool>()) {
        let problem = if fvs { Problem::Fvs } else { Problem::Oct };
        let base = subtrans::solve(&g, problem).unwrap();
        let scaled_inst = g.with_weights(g.weights().iter().map(|w| w * 7).collect()).unwrap();
        let scaled = subtrans::solve(&scaled_inst, problem).unwrap();
        prop_assert_eq!(scaled.solution.weight, 7 * base.solution.weight);
        prop_assert_eq!(scaled.solution.removed, base.solution.removed);
        prop_assert_eq!(scaled.class, classify(&g));
    }
}

#[test]
fn enumeration_can_stop_early() {
    let g = Instance::unit(6, &[]);
    let mut seen = 0;
    enum_maximal_induced_forests(&g, |_| {
        seen += 1;
        ControlFlow::Break(())
    });
    assert_eq!(seen, 1);
}
