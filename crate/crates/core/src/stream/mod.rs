//! Edge-list ingestion, simplification and replayable edge streams.

mod ingest;
mod summary;
mod synthetic;

use std::collections::{HashMap, HashSet};

use rand::seq::SliceRandom;

pub use ingest::{ingest_edge_list, parse_edge_list, write_edge_list, EdgeListFormat};
pub use summary::{summarize, GraphSummary};
pub use synthetic::{generate_synthetic, SyntheticModel};

use crate::graph::{Edge, Graph, NodeId};

/// A simplified undirected graph given as a set of edges over dense ids.
///
/// Node ids are assigned in order of first appearance; `original_ids[i]` is
/// the identifier node `i` carried in the source. Nodes that only occur in
/// self-loops are dropped, so every node has at least one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList {
    original_ids: Vec<u64>,
    edges: Vec<Edge>,
}

impl EdgeList {
    /// Remaps `pairs` densely, dropping self-loops and repeated undirected
    /// edges. Edges keep the order of their first occurrence.
    pub fn simplify<I: IntoIterator<Item = (u64, u64)>>(pairs: I) -> Self {
        let mut index: HashMap<u64, NodeId> = HashMap::new();
        let mut original_ids = Vec::new();
        let mut seen = HashSet::new();
        let mut edges = Vec::new();
        let mut id_of = |x: u64, original_ids: &mut Vec<u64>| {
            *index.entry(x).or_insert_with(|| {
                original_ids.push(x);
                (original_ids.len() - 1) as NodeId
            })
        };
        for (a, b) in pairs {
            if a == b {
                continue;
            }
            let a = id_of(a, &mut original_ids);
            let b = id_of(b, &mut original_ids);
            let e = Edge::new(a, b).expect("distinct ids map to distinct nodes");
            if seen.insert(e) {
                edges.push(e);
            }
        }
        EdgeList {
            original_ids,
            edges,
        }
    }

    /// An edge list whose ids are already dense and meaningful.
    pub fn from_dense_edges(node_count: usize, edges: Vec<Edge>) -> Self {
        EdgeList {
            original_ids: (0..node_count as u64).collect(),
            edges,
        }
    }

    pub fn node_count(&self) -> usize {
        self.original_ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn original_ids(&self) -> &[u64] {
        &self.original_ids
    }

    pub fn original_id(&self, u: NodeId) -> u64 {
        self.original_ids[u as usize]
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.node_count(), self.edges.iter().copied())
    }
}

/// A replayable edge stream with a 1-based position counter `t`.
///
/// Iterating yields each edge exactly once; `position()` is the index of the
/// last edge handed out (0 before the first).
#[derive(Clone, Debug)]
pub struct StreamSource {
    edges: Vec<Edge>,
    position: usize,
}

impl StreamSource {
    /// A stream over `edges` in the given order.
    pub fn new(edges: Vec<Edge>) -> Self {
        StreamSource { edges, position: 0 }
    }

    /// A stream over a uniformly random permutation of `edges`. The same
    /// seed always produces the same order.
    pub fn permuted(edges: &[Edge], seed: u64) -> Self {
        Self::new(permute_edges(edges, seed))
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn position(&self) -> usize {
        self.position
    }

    /// The full stream order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The first `k` edges of the stream order.
    pub fn prefix(&self, k: usize) -> &[Edge] {
        &self.edges[..k.min(self.edges.len())]
    }

    /// Rewinds to the beginning.
    pub fn reset(&mut self) {
        self.position = 0;
    }
}

impl Iterator for StreamSource {
    type Item = Edge;

    fn next(&mut self) -> Option<Edge> {
        let e = *self.edges.get(self.position)?;
        self.position += 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = self.edges.len() - self.position;
        (rest, Some(rest))
    }
}

impl ExactSizeIterator for StreamSource {}

/// Fisher-Yates shuffle of `edges` under the generator seeded by `seed`.
pub fn permute_edges(edges: &[Edge], seed: u64) -> Vec<Edge> {
    let mut rng = crate::rng_from_seed(crate::derive_seed(seed, crate::seed_tag::PERMUTATION));
    let mut out = edges.to_vec();
    out.shuffle(&mut rng);
    out
}
