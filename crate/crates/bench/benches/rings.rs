use chow_core::catalog::{Catalog, BUNDLED_SPECS};
use chow_core::spec_file::{load_spec, RingSpecFile};
use chow_core::{buchberger, verify, MonomialOrder, QuotientRing, Scope};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn spec(name: &str) -> RingSpecFile {
    RingSpecFile::from_json(BUNDLED_SPECS.iter().find(|(n, _)| *n == name).unwrap().1).unwrap()
}

fn bench_buchberger(c: &mut Criterion) {
    let catalog = Catalog::bundled().unwrap();
    for name in ["a2_tilde", "a3_tilde", "x2_tilde"] {
        let ring = catalog.get(name).unwrap();
        let pres = ring.ring.presentation();
        c.bench_function(&format!("buchberger/{name}"), |b| {
            b.iter(|| buchberger(pres.generators(), black_box(pres.relations()), MonomialOrder::WeightedDegreeLex))
        });
    }
}

fn bench_hilbert(c: &mut Criterion) {
    let catalog = Catalog::bundled().unwrap();
    let pres = catalog.get("a3_tilde").unwrap().ring.presentation().clone();
    c.bench_function("hilbert/a3_tilde", |b| b.iter(|| QuotientRing::new(black_box(pres.clone())).hilbert_function(9)));
    c.bench_function("load/a3_tilde", |b| b.iter(|| load_spec(spec("a3_tilde"), None, &|n| catalog.get(n)).unwrap()));
}

fn bench_verify(c: &mut Criterion) {
    let catalog = Catalog::bundled().unwrap();
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("all", |b| b.iter(|| verify(&catalog, &Scope::All)));
    group.bench_function("table_3g", |b| b.iter(|| verify(&catalog, &Scope::Table("3g".into()))));
    group.finish();
}

criterion_group!(benches, bench_buchberger, bench_hilbert, bench_verify);
criterion_main!(benches);
