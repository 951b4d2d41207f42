use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use lexrev_core::gen::{self, instance_rng};
use lexrev_core::logic::models;
use lexrev_core::verify::{run_suite, Suite};
use lexrev_core::{lex_sequence, revise_sequence, DefaultBase, LexClosure};

fn bases(vars: usize, count: u64) -> Vec<DefaultBase> {
    let vocab = gen::vocabulary(vars);
    (0..count)
        .map(|i| gen::random_admissible_base(&mut instance_rng(42, i), &vocab, 8))
        .collect()
}

fn closure_engines(c: &mut Criterion) {
    let mut group = c.benchmark_group("all literal-conjunction queries");
    for vars in [3usize, 4] {
        let bases = bases(vars, 8);
        let vocab = gen::vocabulary(vars);
        let premises: Vec<_> = gen::literal_conjunctions(&vocab)
            .iter()
            .map(|f| models(f, &vocab))
            .collect();
        group.bench_with_input(BenchmarkId::new("direct", vars), &bases, |b, bases| {
            b.iter(|| {
                let mut yes = 0usize;
                for base in bases {
                    let closure = LexClosure::new(base).unwrap();
                    for t in &premises {
                        for p in &premises {
                            yes += closure.infers_sets(t, p) as usize;
                        }
                    }
                }
                black_box(yes)
            })
        });
        group.bench_with_input(BenchmarkId::new("revision", vars), &bases, |b, bases| {
            b.iter(|| {
                let mut yes = 0usize;
                for base in bases {
                    let seq = lex_sequence(base).unwrap();
                    for t in &premises {
                        for p in &premises {
                            yes += seq.infers_sets(t, p) as usize;
                        }
                    }
                }
                black_box(yes)
            })
        });
    }
    group.finish();
}

fn revise(c: &mut Criterion) {
    let mut group = c.benchmark_group("revise_sequence");
    for vars in [4usize, 8, 12] {
        let width = 1 << vars;
        let mut rng = instance_rng(7, vars as u64);
        let u = gen::random_full_sequence(&mut rng, width);
        let v = gen::random_full_sequence(&mut rng, width);
        group.bench_with_input(BenchmarkId::from_parameter(vars), &(u, v), |b, (u, v)| {
            b.iter(|| revise_sequence(black_box(u), black_box(v)).unwrap())
        });
    }
    group.finish();
}

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("suites");
    group.sample_size(10);
    group.bench_function("main-theorem x10", |b| b.iter(|| run_suite(Suite::MainTheorem, 1, 10)));
    group.finish();
}

criterion_group!(benches, closure_engines, revise, suites);
criterion_main!(benches);
