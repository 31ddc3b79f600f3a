use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use streamsamp::sampling::{run_stream, streaming_sampler};
use streamsamp::{Algorithm, SamplerParams, StreamSource};
use streamsamp_bench::preferential_attachment;

fn streaming(c: &mut Criterion) {
    let list = preferential_attachment(20_000, 5);
    let n = 2_000;
    let params = SamplerParams::default();
    let mut group = c.benchmark_group("streaming");
    group.throughput(Throughput::Elements(list.edge_count() as u64));
    group.sample_size(10);
    for alg in Algorithm::STREAMING {
        group.bench_with_input(BenchmarkId::from_parameter(alg), &alg, |b, &alg| {
            b.iter(|| {
                let mut s = streaming_sampler(alg, n, &params, 1).unwrap();
                run_stream(s.as_mut(), StreamSource::permuted(list.edges(), 1)).unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, streaming);
criterion_main!(benches);
