//! Baselines that need random access to the whole graph.

use std::collections::{HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng as _;
use rand_distr::{Distribution as _, Geometric};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, NodeId, SampledGraph};

/// Number of links a burning node spreads to: geometric with mean
/// `p_f / (1 - p_f)`.
pub fn burn_count(rng: &mut crate::Rng, p_f: f64) -> u64 {
    Geometric::new(1.0 - p_f)
        .expect("0 < p_f < 1 checked by caller")
        .sample(rng)
}

/// Forest fire sampling from uniformly chosen seed nodes.
pub fn offline_ffs(graph: &Graph, n: usize, p_f: f64, seed: u64) -> Result<SampledGraph> {
    offline_ffs_from(graph, n, p_f, seed, None)
}

/// Forest fire sampling; the first fire starts at `start` if given.
///
/// Each burning node spreads to `burn_count` of its unburned neighbors
/// (all of them if it has fewer), which burn in turn in FIFO order. When a
/// fire dies out a new one starts from a uniformly chosen unburned node.
/// The sample is the burned nodes plus the links the fire travelled along.
pub fn offline_ffs_from(
    graph: &Graph,
    n: usize,
    p_f: f64,
    seed: u64,
    start: Option<NodeId>,
) -> Result<SampledGraph> {
    if !(p_f > 0.0 && p_f < 1.0) {
        return Err(Error::Config(format!("forward burning probability must be in (0, 1), got {p_f}")));
    }
    let total = graph.node_count();
    let n = n.min(total);
    let mut rng = crate::rng_from_seed(crate::derive_seed(seed, crate::seed_tag::SAMPLER));
    let mut unburned: Vec<NodeId> = (0..total as NodeId).collect();
    let mut pos: Vec<usize> = (0..total).collect();
    let mut sample = SampledGraph::new();
    let mut burn = |u: NodeId, unburned: &mut Vec<NodeId>, sample: &mut SampledGraph| {
        let p = pos[u as usize];
        unburned.swap_remove(p);
        if let Some(&moved) = unburned.get(p) {
            pos[moved as usize] = p;
        }
        sample.add_node(u);
    };
    let mut start = start;
    let mut queue = VecDeque::new();
    let mut candidates = Vec::new();
    while sample.node_count() < n {
        let origin = match start.take() {
            Some(s) => s,
            None => unburned[rng.random_range(0..unburned.len())],
        };
        burn(origin, &mut unburned, &mut sample);
        queue.push_back(origin);
        while let Some(w) = queue.pop_front() {
            if sample.node_count() >= n {
                break;
            }
            let x = burn_count(&mut rng, p_f);
            candidates.clear();
            candidates.extend(graph.neighbors(w).iter().copied().filter(|&c| !sample.contains_node(c)));
            let take = (x as usize).min(candidates.len());
            let (chosen, _) = candidates.partial_shuffle(&mut rng, take);
            for &c in chosen.iter() {
                if sample.node_count() >= n {
                    break;
                }
                burn(c, &mut unburned, &mut sample);
                sample.add_edge(Edge::new(w, c).unwrap());
                queue.push_back(c);
            }
        }
        queue.clear();
    }
    Ok(sample)
}

/// Edge sampling with full induction.
///
/// Edges are drawn uniformly without replacement; an edge is taken if its
/// endpoints keep the node set within `n` and skipped otherwise, until the
/// node set reaches `n` or the edges run out. Then every graph edge between
/// sampled nodes is added.
pub fn offline_es_induced(graph: &Graph, n: usize, seed: u64) -> Result<SampledGraph> {
    let mut rng = crate::rng_from_seed(crate::derive_seed(seed, crate::seed_tag::SAMPLER));
    let mut edges: Vec<Edge> = graph.edges().collect();
    edges.shuffle(&mut rng);
    let mut nodes: HashSet<NodeId> = HashSet::new();
    for e in edges {
        if nodes.len() >= n {
            break;
        }
        let fresh = usize::from(!nodes.contains(&e.u())) + usize::from(!nodes.contains(&e.v()));
        if nodes.len() + fresh <= n {
            nodes.insert(e.u());
            nodes.insert(e.v());
        }
    }
    let mut sample = SampledGraph::new();
    let mut sorted: Vec<_> = nodes.iter().copied().collect();
    sorted.sort_unstable();
    for &u in &sorted {
        sample.add_node(u);
    }
    for &u in &sorted {
        for &w in graph.neighbors(u) {
            if u < w && nodes.contains(&w) {
                sample.add_edge(Edge::new(u, w).unwrap());
            }
        }
    }
    Ok(sample)
}
