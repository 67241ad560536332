//! Sequential vs parallel comparison on candidate fixer testing: the
//! per-(H, K) class-id-set work over a batch of subgroups.

use criterion::{criterion_group, criterion_main, Criterion};
use fixerlab::is_fixer;
use permcore::{exec, ExecMode, SubgroupLattice};
use psl2::{GroupSpec, Psl2};

fn bench_fixer_batch(c: &mut Criterion) {
    let g = Psl2::build(GroupSpec::socle(16), 100_000).unwrap();
    let lat = SubgroupLattice::enumerate(&g.group, 100_000).unwrap();
    let h = permcore::normalizer(&g.group, &g.torus_split_socle());
    g.group.classes();
    let reps: Vec<permcore::Subgroup> = lat.classes.iter().map(|c| c.rep.clone()).collect();
    let mut group = c.benchmark_group("fixer_batch_sl2_16");
    group.sample_size(20);
    group.bench_function("sequential", |b| {
        b.iter(|| {
            exec::map_collect(ExecMode::Sequential, &reps, |k| {
                is_fixer(&g.group, &h, k, false).is_fixer
            })
        })
    });
    group.bench_function("parallel", |b| {
        b.iter(|| {
            exec::map_collect(ExecMode::Parallel, &reps, |k| {
                is_fixer(&g.group, &h, k, false).is_fixer
            })
        })
    });
    group.finish();
}

criterion_group!(benches, bench_fixer_batch);
criterion_main!(benches);
