use std::collections::HashSet;

use super::hash::hash_bits;
use super::reservoir::{MinHashReservoir, Offer};
use super::{Algorithm, StreamSampler};
use crate::error::{Error, Result};
use crate::graph::{Edge, SampledGraph};

/// Streaming edge sampling.
///
/// Holds the `m` edges with the smallest hashes seen so far; the node set is
/// the endpoints of those edges. The reported sample drops reservoir edges
/// in descending hash order until at most `n` nodes remain, i.e. it is the
/// longest ascending-hash prefix of the reservoir spanning no more than `n`
/// nodes.
#[derive(Clone, Debug)]
pub struct StreamingEs {
    n: usize,
    reservoir: MinHashReservoir<Edge>,
    sample: SampledGraph,
    salt: u64,
    seen: usize,
    peak: usize,
}

impl StreamingEs {
    pub fn new(n: usize, m: usize, seed: u64) -> Self {
        StreamingEs {
            n,
            reservoir: MinHashReservoir::new(m),
            sample: SampledGraph::new(),
            salt: crate::derive_seed(seed, crate::seed_tag::HASH_SALT),
            seen: 0,
            peak: 0,
        }
    }

    pub fn salt(&self) -> u64 {
        self.salt
    }

    pub fn reservoir(&self) -> &MinHashReservoir<Edge> {
        &self.reservoir
    }

    /// Hash bits of `e` under this run's edge hash.
    pub fn edge_hash(&self, e: Edge) -> u64 {
        hash_bits(e.key(), self.salt)
    }
}

impl StreamSampler for StreamingEs {
    fn algorithm(&self) -> Algorithm {
        Algorithm::Es
    }

    fn process(&mut self, edge: Edge) {
        self.seen += 1;
        if let Offer::Admitted { evicted } = self.reservoir.offer(edge, hash_bits(edge.key(), self.salt)) {
            if let Some(old) = evicted {
                self.sample.remove_edge(old);
                self.sample.remove_if_isolated(old.u());
                self.sample.remove_if_isolated(old.v());
            }
            self.sample.add_node(edge.u());
            self.sample.add_node(edge.v());
            self.sample.add_edge(edge);
        }
        self.peak = self.peak.max(self.state_size());
    }

    fn current(&self) -> &SampledGraph {
        &self.sample
    }

    fn snapshot(&self) -> Result<SampledGraph> {
        if self.sample.node_count() < self.n {
            return Err(Error::UndersizedReservoir {
                achieved: self.sample.node_count(),
                target: self.n,
            });
        }
        let mut nodes = HashSet::new();
        let mut kept = Vec::new();
        for (_, e) in self.reservoir.sorted_entries() {
            let fresh = usize::from(!nodes.contains(&e.u())) + usize::from(!nodes.contains(&e.v()));
            if nodes.len() + fresh > self.n {
                break;
            }
            nodes.insert(e.u());
            nodes.insert(e.v());
            kept.push(e);
        }
        Ok(SampledGraph::from_edges(kept))
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
    use crate::graph::NodeId;
    use crate::sampling::{run_stream, streaming_es};
    use crate::stream::StreamSource;

    fn e(a: NodeId, b: NodeId) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn big_reservoir_holds_whole_graph() {
        let edges = vec![e(0, 1), e(1, 2), e(2, 3), e(3, 0), e(0, 2)];
        let mut s = StreamingEs::new(4, 10, 1);
        let g = run_stream(&mut s, StreamSource::new(edges.clone())).unwrap();
        assert_eq!(s.current().edge_count(), 5);
        // already at n nodes, so nothing is pruned
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn disjoint_edges_prune_to_two() {
        let edges = vec![e(0, 1), e(2, 3), e(4, 5)];
        for seed in 0..10 {
            let s = StreamingEs::new(4, 3, seed);
            let mut by_hash = edges.clone();
            by_hash.sort_by_key(|&x| s.edge_hash(x));
            let g = streaming_es(StreamSource::permuted(&edges, seed), 4, 3, seed).unwrap();
            assert_eq!(g.node_count(), 4);
            assert_eq!(g.sorted_edges(), {
                let mut v = by_hash[..2].to_vec();
                v.sort();
                v
            });
        }
    }

    #[test]
    fn undersized_reservoir_is_reported() {
        let edges = vec![e(0, 1), e(2, 3), e(4, 5)];
        let err = streaming_es(StreamSource::new(edges), 5, 1, 0).unwrap_err();
        assert!(matches!(err, Error::UndersizedReservoir { achieved: 2, target: 5 }));
    }

    #[test]
    fn eviction_drops_isolated_endpoints() {
        let mut s = StreamingEs::new(2, 1, 3);
        s.process(e(0, 1));
        s.process(e(2, 3));
        assert_eq!(s.current().node_count(), 2);
        assert_eq!(s.current().edge_count(), 1);
    }
}
