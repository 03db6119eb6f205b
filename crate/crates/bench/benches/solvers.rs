use std::hint::black_box;
use std::ops::ControlFlow;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use subtrans::enumeration::enum_maximal_independent_sets;
use subtrans::oracle::oracle_transversal;
use subtrans::{min_weight_vertex_cut, solve, ClassLabel, CutQuery, Problem};
use subtrans_bench::instances;

fn by_class(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    group.sample_size(20);
    for class in [ClassLabel::P4Free, ClassLabel::P1P3Free, ClassLabel::ThreeP1P2Free] {
        for n in [12, 20, 30] {
            let set = instances(class, n, 8);
            for problem in [Problem::Oct, Problem::Fvs] {
                let id = BenchmarkId::new(format!("{class}/{problem}"), n);
                group.bench_with_input(id, &set, |b, set| {
                    b.iter(|| {
                        for g in set {
                            black_box(solve(g, problem).unwrap());
                        }
                    })
                });
            }
        }
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    for n in [12, 16] {
        let set = instances(ClassLabel::ThreeP1P2Free, n, 4);
        group.bench_with_input(BenchmarkId::from_parameter(n), &set, |b, set| {
            b.iter(|| {
                for g in set {
                    black_box(oracle_transversal(g, Problem::Oct).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn subroutines(c: &mut Criterion) {
    let set = instances(ClassLabel::SP2Free(2), 24, 8);
    c.bench_function("mis/2P2free/24", |b| {
        b.iter(|| {
            for g in &set {
                black_box(enum_maximal_independent_sets(g, &g.vertices(), |_| {
                    ControlFlow::Continue(())
                }));
            }
        })
    });
    c.bench_function("cut/3P1+P2free/30", |b| {
        let set = instances(ClassLabel::ThreeP1P2Free, 30, 8);
        b.iter(|| {
            for g in &set {
                for t in 1..g.n() {
                    black_box(min_weight_vertex_cut(&CutQuery { inst: g, t1: 0, t2: t }));
                }
            }
        })
    });
}

criterion_group!(benches, by_class, oracle, subroutines);
criterion_main!(benches);
