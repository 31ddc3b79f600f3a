use std::collections::HashMap;

use rand::Rng as _;

use super::{Algorithm, StreamSampler};
use crate::error::Result;
use crate::graph::{Edge, NodeId, SampledGraph};

/// Partially-induced edge sampling.
///
/// Until the sample holds `n` nodes, endpoints of arriving edges are
/// admitted in stream order. Afterwards each arriving edge `e_t` is selected
/// with probability `|E_s| / t`; a selected edge brings its non-resident
/// endpoints in, each replacing a uniformly chosen resident (with all of
/// that resident's edges). Independently of selection, `e_t` is added
/// whenever both endpoints are resident, which induces the sample forward
/// in time.
///
/// Residents live in a slot array with swap-remove so that victims are
/// drawn uniformly in O(1). Victims are drawn from the residents present
/// before the step, and two newcomers always displace two distinct
/// residents, so `|V_s| = n` holds after every step once it is reached.
#[derive(Clone, Debug)]
pub struct Pies {
    n: usize,
    rng: crate::Rng,
    sample: SampledGraph,
    slots: Vec<NodeId>,
    slot_of: HashMap<NodeId, usize>,
    t: u64,
    peak: usize,
}

impl Pies {
    pub fn new(n: usize, seed: u64) -> Self {
        assert!(n > 0, "sample size must be positive");
        Pies {
            n,
            rng: crate::rng_from_seed(crate::derive_seed(seed, crate::seed_tag::SAMPLER)),
            sample: SampledGraph::new(),
            slots: Vec::with_capacity(n),
            slot_of: HashMap::with_capacity(n),
            t: 0,
            peak: 0,
        }
    }

    /// Whether the node reservoir has reached `n`.
    pub fn is_saturated(&self) -> bool {
        self.slots.len() >= self.n
    }

    fn is_resident(&self, u: NodeId) -> bool {
        self.slot_of.contains_key(&u)
    }

    fn admit(&mut self, u: NodeId) {
        self.slot_of.insert(u, self.slots.len());
        self.slots.push(u);
        self.sample.add_node(u);
    }

    fn evict(&mut self, u: NodeId) {
        let pos = self.slot_of.remove(&u).expect("victim is resident");
        self.slots.swap_remove(pos);
        if let Some(&moved) = self.slots.get(pos) {
            self.slot_of.insert(moved, pos);
        }
        self.sample.remove_node_with_incident_edges(u);
    }

    fn replace(&mut self, u: NodeId, v: NodeId) {
        let len = self.slots.len();
        let i = self.rng.random_range(0..len);
        let mut j = self.rng.random_range(0..len);
        let new_u = !self.is_resident(u);
        let new_v = !self.is_resident(v);
        if new_u && new_v && len > 1 {
            while j == i {
                j = self.rng.random_range(0..len);
            }
        }
        let (victim_i, victim_j) = (self.slots[i], self.slots[j]);
        if new_u {
            self.evict(victim_i);
            self.admit(u);
        }
        // with a single slot there is only one resident to give up
        if new_v && !(new_u && len == 1) {
            self.evict(victim_j);
            self.admit(v);
        }
    }
}

impl StreamSampler for Pies {
    fn algorithm(&self) -> Algorithm {
        Algorithm::Pies
    }

    fn process(&mut self, edge: Edge) {
        self.t += 1;
        let (u, v) = edge.endpoints();
        if !self.is_saturated() {
            for x in [u, v] {
                if !self.is_resident(x) && !self.is_saturated() {
                    self.admit(x);
                }
            }
        } else {
            let p_e = self.sample.edge_count() as f64 / self.t as f64;
            let r: f64 = self.rng.random();
            if r <= p_e {
                self.replace(u, v);
            }
        }
        if self.is_resident(u) && self.is_resident(v) {
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
        self.t as usize
    }

    fn state_size(&self) -> usize {
        self.sample.node_count() + self.sample.edge_count() + self.slots.len()
    }

    fn peak_state_size(&self) -> usize {
        self.peak
    }
}
