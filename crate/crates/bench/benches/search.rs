use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use orderdom::{reference, Engine, EngineConfig};
use orderdom_bench::{tokens, SENTENCES};

fn bench_parse(c: &mut Criterion) {
    let lex = reference::german();
    let mut group = c.benchmark_group("parse");
    for prune in [true, false] {
        let engine = Engine::with_config(
            &lex,
            EngineConfig {
                prune,
                ..EngineConfig::default()
            },
        );
        for s in SENTENCES {
            let id = BenchmarkId::new(if prune { "pruned" } else { "naive" }, s);
            group.bench_with_input(id, s, |b, s| {
                b.iter(|| engine.parse(black_box(&tokens(s))).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_generate(c: &mut Criterion) {
    let lex = reference::german();
    let engine = Engine::new(&lex);
    let tree = engine
        .parse(&tokens("der Junge hat den Mann gesehen"))
        .unwrap()
        .structures[0]
        .tree
        .clone();
    c.bench_function("generate/perfect-tense", |b| {
        b.iter(|| engine.generate(black_box(&tree)).unwrap())
    });
}

criterion_group!(benches, bench_parse, bench_generate);
criterion_main!(benches);
