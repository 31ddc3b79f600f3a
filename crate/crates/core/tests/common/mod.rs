#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use streamsamp::stream::{generate_synthetic, ingest_edge_list, EdgeListFormat, SyntheticModel};
use streamsamp::{Distribution, Edge, EdgeList, Graph, NodeId, SampledGraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn load_fixture(name: &str) -> EdgeList {
    let format = if name.ends_with(".csv") {
        EdgeListFormat::Csv
    } else {
        EdgeListFormat::Whitespace
    };
    ingest_edge_list(fixture(name), format).unwrap()
}

pub const FIXTURE_FILES: [&str; 5] = ["triangle.txt", "pendant_triangle.txt", "two_paths.txt", "star.csv", "k4_tail.txt"];

/// A simple random graph on at most `max_nodes` nodes with dense ids, in a
/// random stream order.
pub fn random_stream(rng: &mut ChaCha8Rng, max_nodes: usize) -> EdgeList {
    loop {
        let n = rng.random_range(2..=max_nodes) as u64;
        let p = rng.random_range(0.02..0.5);
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.random::<f64>() < p {
                    pairs.push((i, j));
                }
            }
        }
        pairs.shuffle(rng);
        let list = EdgeList::simplify(pairs);
        if list.edge_count() > 0 {
            return list;
        }
    }
}

/// Graphs with at most 200 nodes: the bundled files, small synthetic
/// graphs, and random graphs of varying density.
pub fn small_graph_suite() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = FIXTURE_FILES
        .iter()
        .map(|f| (f.to_string(), load_fixture(f).to_graph()))
        .collect();
    for seed in 0..3 {
        let pa = generate_synthetic(SyntheticModel::PreferentialAttachment, 200, 3.0, seed).unwrap();
        out.push((format!("pa-200-3-s{seed}"), pa.to_graph()));
        let er = generate_synthetic(SyntheticModel::ErdosRenyi, 200, 0.01, seed).unwrap();
        out.push((format!("er-200-0.01-s{seed}"), er.to_graph()));
    }
    let mut r = rng(99);
    for i in 0..20 {
        out.push((format!("random-{i}"), random_stream(&mut r, 120).to_graph()));
    }
    out
}

pub fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.node_count();
    let mut a = vec![vec![false; n]; n];
    for e in g.edges() {
        a[e.u() as usize][e.v() as usize] = true;
        a[e.v() as usize][e.u() as usize] = true;
    }
    a
}

pub fn brute_degrees(a: &[Vec<bool>]) -> Vec<f64> {
    a.iter().map(|row| row.iter().filter(|&&x| x).count() as f64).collect()
}

/// Triangles through each node over the number of neighbor pairs.
pub fn brute_clustering(a: &[Vec<bool>]) -> Vec<f64> {
    let n = a.len();
    (0..n)
        .map(|u| {
            let nbrs: Vec<usize> = (0..n).filter(|&v| a[u][v]).collect();
            let k = nbrs.len();
            if k < 2 {
                return 0.0;
            }
            let mut triangles = 0u64;
            for i in 0..k {
                for j in i + 1..k {
                    if a[nbrs[i]][nbrs[j]] {
                        triangles += 1;
                    }
                }
            }
            triangles as f64 / (k * (k - 1) / 2) as f64
        })
        .collect()
}

/// Component sizes by repeated minimum-label propagation.
pub fn brute_component_sizes(a: &[Vec<bool>]) -> Vec<f64> {
    let n = a.len();
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for u in 0..n {
            for v in 0..n {
                if a[u][v] && label[v] < label[u] {
                    label[u] = label[v];
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let roots: BTreeSet<usize> = label.iter().copied().collect();
    roots
        .into_iter()
        .map(|r| label.iter().filter(|&&l| l == r).count() as f64)
        .collect()
}

/// Hop counts of all reachable ordered pairs, by Floyd-Warshall.
pub fn brute_path_lengths(a: &[Vec<bool>]) -> Vec<f64> {
    let n = a.len();
    let inf = u32::MAX / 2;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if a[u][v] {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && d[i][j] < inf {
                out.push(d[i][j] as f64);
            }
        }
    }
    out
}

/// Checks that `dist` is exactly the empirical distribution of `values`.
pub fn check_distribution(dist: &Distribution, values: &[f64]) -> Result<(), String> {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let total = sorted.len() as f64;
    let mut support = Vec::new();
    let mut pdf = Vec::new();
    let mut cdf = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let j = sorted[i..].iter().take_while(|&&x| x == sorted[i]).count() + i;
        support.push(sorted[i]);
        pdf.push((j - i) as f64 / total);
        cdf.push(j as f64 / total);
        i = j;
    }
    if dist.support() != &support[..] {
        return Err(format!("support {:?} != {:?}", dist.support(), support));
    }
    if dist.pdf() != &pdf[..] || dist.cdf() != &cdf[..] {
        return Err("pdf or cdf differs".into());
    }
    Ok(())
}

pub fn assert_distribution_of(dist: &Distribution, values: &[f64], what: &str) {
    if let Err(e) = check_distribution(dist, values) {
        panic!("{what}: {e}");
    }
}

/// Contract checks that hold for every sampler output.
pub fn check_closure(sample: &SampledGraph, stream: &[Edge]) -> Result<(), String> {
    let edges: BTreeSet<Edge> = stream.iter().copied().collect();
    for e in sample.edges() {
        if !edges.contains(&e) {
            return Err(format!("edge {e} is not in the stream"));
        }
        if !(sample.contains_node(e.u()) && sample.contains_node(e.v())) {
            return Err(format!("edge {e} has an endpoint outside the sample"));
        }
    }
    let stream_nodes: BTreeSet<NodeId> = stream.iter().flat_map(|e| [e.u(), e.v()]).collect();
    if let Some(u) = sample.nodes().find(|u| !stream_nodes.contains(u)) {
        return Err(format!("node {u} never appeared in the stream"));
    }
    Ok(())
}

/// Prints one acceptance line and returns whether it passed.
pub fn report(id: u32, name: &str, outcome: &Result<String, String>) -> bool {
    match outcome {
        Ok(detail) => {
            println!("criterion {id:>2} PASS  {name}: {detail}");
            true
        }
        Err(detail) => {
            println!("criterion {id:>2} FAIL  {name}: {detail}");
            false
        }
    }
}
