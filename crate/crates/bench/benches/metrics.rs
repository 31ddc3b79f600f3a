use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use streamsamp::metrics::{ks_distance, property_distribution, PathSampling};
use streamsamp::Property;
use streamsamp_bench::preferential_attachment;

fn distributions(c: &mut Criterion) {
    let g = preferential_attachment(5_000, 4).to_graph();
    let sampling = PathSampling::default();
    let mut group = c.benchmark_group("distribution");
    group.sample_size(10);
    for p in Property::ALL {
        group.bench_with_input(BenchmarkId::from_parameter(p.as_str()), &p, |b, &p| {
            b.iter(|| property_distribution(&g, p, &sampling).unwrap())
        });
    }
    group.finish();

    let a = property_distribution(&g, Property::Degree, &sampling).unwrap();
    let other = preferential_attachment(5_000, 2).to_graph();
    let b_dist = property_distribution(&other, Property::Degree, &sampling).unwrap();
    c.bench_function("ks_distance/degree", |b| b.iter(|| ks_distance(&a, &b_dist)));
}

criterion_group!(benches, distributions);
criterion_main!(benches);
