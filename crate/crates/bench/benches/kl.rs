use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use klcat_core::suite::{run, run_block};
use klcat_core::{HeckeAlgebra, KlVariant, RankOne, Suite, WeylGroup};

fn group(t: &str) -> Arc<WeylGroup> {
    Arc::new(WeylGroup::new(t.parse().unwrap()).unwrap())
}

fn enumerate(c: &mut Criterion) {
    for t in ["A4", "B4", "D4"] {
        c.bench_function(&format!("enumerate {t}"), |b| {
            b.iter(|| WeylGroup::new(black_box(t).parse().unwrap()))
        });
    }
}

fn kl_basis(c: &mut Criterion) {
    for t in ["A3", "B3", "A4"] {
        let g = group(t);
        c.bench_function(&format!("kl basis {t}"), |b| {
            b.iter(|| {
                // fresh algebra each time, so the table is rebuilt
                let alg = HeckeAlgebra::new(Arc::clone(&g));
                alg.kl_element(g.longest(), KlVariant::C).unwrap()
            })
        });
    }
}

fn suites(c: &mut Criterion) {
    let mut grp = c.benchmark_group("suites");
    grp.sample_size(10);
    grp.bench_function("verify all A3", |b| {
        b.iter(|| run("A3".parse().unwrap(), Suite::All, 40320).unwrap())
    });
    let block = RankOne::new().unwrap();
    grp.bench_function("block all", |b| {
        b.iter(|| run_block(&block, klcat_core::BlockSuite::All))
    });
    grp.finish();
}

criterion_group!(benches, enumerate, kl_basis, suites);
criterion_main!(benches);
