use super::hash::{hash_bits, uniform_hash};
use super::reservoir::{MinHashReservoir, Offer};
use super::{Algorithm, StreamSampler};
use crate::error::Result;
use crate::graph::{Edge, NodeId, SampledGraph};

/// Streaming node sampling.
///
/// A node is resident iff its hash is among the `n` smallest of all nodes
/// seen so far. When a newcomer displaces the largest-hash resident, that
/// node's sampled edges go with it; it can never return because the
/// reservoir maximum only decreases. An edge is kept iff both endpoints are
/// resident when it arrives.
#[derive(Clone, Debug)]
pub struct StreamingNs {
    reservoir: MinHashReservoir<NodeId>,
    sample: SampledGraph,
    salt: u64,
    seen: usize,
    peak: usize,
}

impl StreamingNs {
    pub fn new(n: usize, seed: u64) -> Self {
        StreamingNs {
            reservoir: MinHashReservoir::new(n),
            sample: SampledGraph::new(),
            salt: crate::derive_seed(seed, crate::seed_tag::HASH_SALT),
            seen: 0,
            peak: 0,
        }
    }

    /// Salt of the node hash function used by this run.
    pub fn salt(&self) -> u64 {
        self.salt
    }

    /// The node's hash in `[0, 1)` under this run's hash function.
    pub fn node_hash(&self, u: NodeId) -> f64 {
        uniform_hash(u64::from(u), self.salt)
    }

    fn admit(&mut self, u: NodeId) {
        if self.sample.contains_node(u) {
            return;
        }
        if let Offer::Admitted { evicted } = self.reservoir.offer(u, hash_bits(u64::from(u), self.salt)) {
            if let Some(old) = evicted {
                self.sample.remove_node_with_incident_edges(old);
            }
            self.sample.add_node(u);
        }
    }
}

impl StreamSampler for StreamingNs {
    fn algorithm(&self) -> Algorithm {
        Algorithm::Ns
    }

    fn process(&mut self, edge: Edge) {
        self.seen += 1;
        let (u, v) = edge.endpoints();
        self.admit(u);
        self.admit(v);
        if self.sample.contains_node(u) && self.sample.contains_node(v) {
            self.sample.add_edge(edge);
        }
        self.peak = self.peak.max(self.state_size());
    }

    fn current(&self) -> &SampledGraph {
        &self.sample
    }

    fn snapshot(&self) -> Result<SampledGraph> {
        Ok(self.sample.clone())
    }

    fn edges_seen(&self) -> usize {
        self.seen
    }

    fn state_size(&self) -> usize {
        self.sample.node_count() + self.sample.edge_count() + self.reservoir.len()
    }

    fn peak_state_size(&self) -> usize {
        self.peak
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::streaming_ns;
    use crate::stream::StreamSource;

    fn e(a: NodeId, b: NodeId) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn large_budget_keeps_everything() {
        let edges = vec![e(0, 1), e(1, 2), e(2, 3), e(0, 3), e(1, 3)];
        let g = streaming_ns(StreamSource::permuted(&edges, 4), 10, 4);
        assert_eq!(g.node_count(), 4);
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn single_node_budget_has_no_edges() {
        let edges: Vec<_> = (0..30u32).filter_map(|i| Edge::new(i, (i * 7 + 1) % 31)).collect();
        for seed in 0..20 {
            let g = streaming_ns(StreamSource::permuted(&edges, seed), 1, seed);
            assert_eq!(g.node_count(), 1);
            assert_eq!(g.edge_count(), 0);
        }
    }

    #[test]
    fn eviction_removes_incident_edges() {
        let mut s = StreamingNs::new(2, 0);
        let mut nodes = vec![0, 1, 2];
        nodes.sort_by(|a, b| s.node_hash(*a).total_cmp(&s.node_hash(*b)));
        let (lo, mid, hi) = (nodes[0], nodes[1], nodes[2]);
        s.process(e(mid, hi));
        assert_eq!(s.current().edge_count(), 1);
        // lo displaces hi, taking edge mid-hi with it
        s.process(e(lo, hi));
        assert!(!s.current().contains_node(hi));
        assert_eq!(s.current().edge_count(), 0);
        assert_eq!(s.current().sorted_nodes(), {
            let mut v = vec![lo, mid];
            v.sort();
            v
        });
    }
}
