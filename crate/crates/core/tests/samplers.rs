mod common;

use std::collections::BTreeSet;

use streamsamp::sampling::{
    offline_es_induced, pies, run_stream, streaming_es, streaming_sampler, Pies, StreamingEs,
};
use streamsamp::stream::{generate_synthetic, SyntheticModel};
use streamsamp::{Algorithm, Edge, EdgeList, Graph, NodeId, SamplerParams, StreamSampler, StreamSource};

use common::*;

fn e(a: NodeId, b: NodeId) -> Edge {
    Edge::new(a, b).unwrap()
}

fn twenty_edges() -> Vec<Edge> {
    // two overlapping wheels on 12 nodes
    let mut out = Vec::new();
    for i in 0..10 {
        out.push(e(i, (i + 1) % 10));
        out.push(e(10 + i % 2, i));
    }
    out
}

#[test]
fn es_pruning_matches_hash_order_replay() {
    let edges = twenty_edges();
    assert_eq!(edges.iter().collect::<BTreeSet<_>>().len(), 20);
    for seed in 0..50 {
        let probe = StreamingEs::new(6, 20, seed);
        let mut by_hash = edges.clone();
        by_hash.sort_by_key(|&x| probe.edge_hash(x));
        // longest hash-ordered prefix that spans at most 6 nodes
        let mut expected = Vec::new();
        let mut nodes = BTreeSet::new();
        for x in by_hash {
            let mut grown = nodes.clone();
            grown.insert(x.u());
            grown.insert(x.v());
            if grown.len() > 6 {
                break;
            }
            nodes = grown;
            expected.push(x);
        }
        expected.sort();
        let got = streaming_es(StreamSource::permuted(&edges, seed), 6, 20, seed).unwrap();
        assert_eq!(got.sorted_edges(), expected, "seed {seed}");
        assert!(got.node_count() <= 6);
    }
}

#[test]
fn es_reservoir_keeps_minimum_hash_edges() {
    let mut r = rng(7);
    for _ in 0..100 {
        let list = random_stream(&mut r, 60);
        let m = 1 + list.edge_count() / 3;
        let mut s = StreamingEs::new(1, m, 3);
        for x in list.edges() {
            s.process(*x);
        }
        let mut all: Vec<(u64, Edge)> = list.edges().iter().map(|&x| (s.edge_hash(x), x)).collect();
        all.sort();
        let expected: BTreeSet<Edge> = all[..m].iter().map(|&(_, x)| x).collect();
        let got: BTreeSet<Edge> = s.current().edges().collect();
        assert_eq!(got, expected);
    }
}

#[test]
fn es_reports_undersized_reservoir() {
    let edges = twenty_edges();
    let err = streaming_es(StreamSource::new(edges), 12, 2, 0).unwrap_err();
    assert!(err.to_string().contains("covers"), "{err}");
}

#[test]
fn es_induced_equals_filtered_edge_list() {
    let list = generate_synthetic(SyntheticModel::ErdosRenyi, 14, 0.33, 2).unwrap();
    let g = list.to_graph();
    assert!(g.edge_count() >= 25, "{} edges", g.edge_count());
    for seed in 0..40 {
        for n in [3, 7, 14] {
            let s = offline_es_induced(&g, n, seed).unwrap();
            let nodes: BTreeSet<NodeId> = s.nodes().collect();
            let expected: Vec<Edge> = list
                .edges()
                .iter()
                .copied()
                .filter(|x| nodes.contains(&x.u()) && nodes.contains(&x.v()))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            assert_eq!(s.sorted_edges(), expected);
            assert_eq!(s.node_count(), n);
        }
    }
}

#[test]
fn es_induced_triangle_with_two_nodes() {
    let g = Graph::from_edges(3, [e(0, 1), e(1, 2), e(0, 2)]);
    for seed in 0..10 {
        let s = offline_es_induced(&g, 2, seed).unwrap();
        assert_eq!(s.edge_count(), 1);
        assert_eq!(s.node_count(), 2);
    }
}

#[test]
fn pies_with_full_budget_returns_graph() {
    let list = generate_synthetic(SyntheticModel::PreferentialAttachment, 150, 2.0, 4).unwrap();
    for seed in 0..5 {
        let s = pies(StreamSource::permuted(list.edges(), seed), 150, seed);
        assert_eq!(s.edge_count(), list.edge_count());
        assert_eq!(s.node_count(), 150);
    }
}

#[test]
fn pies_favors_high_degree_nodes() {
    let list = generate_synthetic(SyntheticModel::PreferentialAttachment, 1000, 3.0, 8).unwrap();
    let g = list.to_graph();
    let full_mean = 2.0 * g.edge_count() as f64 / 1000.0;
    let mut sampled_mean = 0.0;
    for seed in 0..50 {
        let s = pies(StreamSource::permuted(list.edges(), seed), 200, seed);
        sampled_mean += s.nodes().map(|u| g.degree(u) as f64).sum::<f64>() / s.node_count() as f64;
    }
    sampled_mean /= 50.0;
    assert!(sampled_mean > full_mean, "{sampled_mean} <= {full_mean}");
}

#[test]
fn pies_phase_one_keeps_first_nodes() {
    let stream = vec![e(5, 6), e(6, 7), e(8, 9), e(5, 9)];
    let mut s = Pies::new(3, 0);
    for x in stream {
        s.process(x);
    }
    // 5, 6, 7 fill the budget; 8-9 arrives in phase two
    assert!(s.is_saturated());
    assert_eq!(s.current().node_count(), 3);
}

#[test]
fn same_seed_same_sample() {
    let list = generate_synthetic(SyntheticModel::PreferentialAttachment, 400, 3.0, 1).unwrap();
    let params = SamplerParams::default();
    for alg in Algorithm::STREAMING {
        let run = |seed| {
            let mut s = streaming_sampler(alg, 80, &params, seed).unwrap();
            run_stream(s.as_mut(), StreamSource::permuted(list.edges(), seed)).unwrap()
        };
        let (a, b, c) = (run(3), run(3), run(4));
        assert_eq!(a.sorted_edges(), b.sorted_edges(), "{alg}");
        assert_eq!(a.sorted_nodes(), b.sorted_nodes(), "{alg}");
        assert_ne!(a.sorted_nodes(), c.sorted_nodes(), "{alg}");
    }
}

#[test]
fn snapshots_do_not_disturb_sampling() {
    let list = generate_synthetic(SyntheticModel::ErdosRenyi, 300, 0.03, 1).unwrap();
    let params = SamplerParams {
        wsize: 50,
        ..SamplerParams::default()
    };
    for alg in Algorithm::STREAMING {
        let stream = StreamSource::permuted(list.edges(), 9);
        let plain = {
            let mut s = streaming_sampler(alg, 60, &params, 9).unwrap();
            run_stream(s.as_mut(), stream.clone()).unwrap()
        };
        let mut s = streaming_sampler(alg, 60, &params, 9).unwrap();
        for (t, x) in stream.enumerate() {
            s.process(x);
            if t % 37 == 0 {
                let _ = s.snapshot();
            }
        }
        s.end_of_stream();
        let probed = s.snapshot().unwrap();
        assert_eq!(plain.sorted_edges(), probed.sorted_edges(), "{alg}");
        assert_eq!(plain.sorted_nodes(), probed.sorted_nodes(), "{alg}");
    }
}

#[test]
fn streaming_samplers_accept_duplicate_edges() {
    let edges = vec![e(0, 1), e(1, 2), e(0, 1), e(2, 3), e(1, 2)];
    for alg in Algorithm::STREAMING {
        let mut s = streaming_sampler(alg, 4, &SamplerParams::default(), 1).unwrap();
        let g = run_stream(s.as_mut(), StreamSource::new(edges.clone())).unwrap();
        assert!(g.edge_count() <= 3, "{alg}");
        check_closure(&g, &edges).unwrap();
    }
}

#[test]
fn offline_algorithms_are_not_streamable() {
    for alg in [Algorithm::Ffs, Algorithm::EsI] {
        assert!(streaming_sampler(alg, 5, &SamplerParams::default(), 0).is_err());
    }
}

#[test]
fn bfs_respects_window_on_large_stream() {
    let list: EdgeList = generate_synthetic(SyntheticModel::PreferentialAttachment, 3000, 3.0, 2).unwrap();
    let mut s = streaming_sampler(Algorithm::Bfs, 300, &SamplerParams::default(), 5).unwrap();
    let g = run_stream(s.as_mut(), StreamSource::permuted(list.edges(), 5)).unwrap();
    assert_eq!(g.node_count(), 300);
    check_closure(&g, list.edges()).unwrap();
}
