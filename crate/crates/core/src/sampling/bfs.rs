use std::collections::{BTreeMap, HashMap, VecDeque};

use rand::Rng as _;

use super::{Algorithm, StreamSampler};
use crate::error::Result;
use crate::graph::{Edge, NodeId, SampledGraph};

/// The most recent unsampled stream edges, at most `capacity` of them.
#[derive(Clone, Debug)]
struct EdgeWindow {
    capacity: usize,
    next_seq: u64,
    entries: BTreeMap<u64, Edge>,
    incident: HashMap<NodeId, Vec<u64>>,
    // distinct endpoints, for uniform jumps
    vertices: Vec<NodeId>,
    vertex_pos: HashMap<NodeId, usize>,
}

impl EdgeWindow {
    fn new(capacity: usize) -> Self {
        EdgeWindow {
            capacity,
            next_seq: 0,
            entries: BTreeMap::new(),
            incident: HashMap::new(),
            vertices: Vec::new(),
            vertex_pos: HashMap::new(),
        }
    }

    fn len(&self) -> usize {
        self.entries.len()
    }

    fn is_full(&self) -> bool {
        self.entries.len() >= self.capacity
    }

    /// Appends `e`, dropping the oldest edge if the window overflows.
    fn push(&mut self, e: Edge) {
        let seq = self.next_seq;
        self.next_seq += 1;
        self.entries.insert(seq, e);
        for x in [e.u(), e.v()] {
            let list = self.incident.entry(x).or_default();
            if list.is_empty() {
                self.vertex_pos.insert(x, self.vertices.len());
                self.vertices.push(x);
            }
            list.push(seq);
        }
        if self.entries.len() > self.capacity {
            let (&oldest, _) = self.entries.first_key_value().unwrap();
            self.remove(oldest);
        }
    }

    fn remove(&mut self, seq: u64) -> Edge {
        let e = self.entries.remove(&seq).expect("window entry exists");
        for x in [e.u(), e.v()] {
            let list = self.incident.get_mut(&x).unwrap();
            list.retain(|&s| s != seq);
            if list.is_empty() {
                self.incident.remove(&x);
                let pos = self.vertex_pos.remove(&x).unwrap();
                self.vertices.swap_remove(pos);
                if let Some(&moved) = self.vertices.get(pos) {
                    self.vertex_pos.insert(moved, pos);
                }
            }
        }
        e
    }

    fn incident(&self, u: NodeId) -> &[u64] {
        self.incident.get(&u).map_or(&[], Vec::as_slice)
    }

    fn random_vertex(&self, rng: &mut crate::Rng) -> Option<NodeId> {
        if self.vertices.is_empty() {
            None
        } else {
            Some(self.vertices[rng.random_range(0..self.vertices.len())])
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Admission {
    Node(NodeId),
    Edge(Edge),
}

/// Breadth-first sampling over a sliding window of the stream.
///
/// The first `wsize` edges fill the window. After that, each arriving edge
/// triggers one BFS action before the window slides: burn a uniformly chosen
/// window edge incident to the focus node (enqueueing its far endpoint), or,
/// if the focus has none left, take the next focus from the queue, or jump
/// to a uniformly chosen vertex of the window. Burned edges leave the
/// window. Once more than `n` nodes are sampled the sampler stops, and the
/// reported sample is the earliest admissions spanning exactly `n` nodes.
/// When the stream ends the remaining window is explored the same way.
#[derive(Clone, Debug)]
pub struct StreamingBfs {
    n: usize,
    rng: crate::Rng,
    sample: SampledGraph,
    window: EdgeWindow,
    queue: VecDeque<NodeId>,
    focus: Option<NodeId>,
    admissions: Vec<Admission>,
    filled: bool,
    done: bool,
    seen: usize,
    peak: usize,
}

impl StreamingBfs {
    pub fn new(n: usize, wsize: usize, seed: u64) -> Self {
        assert!(wsize > 0, "window size must be positive");
        StreamingBfs {
            n,
            rng: crate::rng_from_seed(crate::derive_seed(seed, crate::seed_tag::SAMPLER)),
            sample: SampledGraph::new(),
            window: EdgeWindow::new(wsize),
            queue: VecDeque::new(),
            focus: None,
            admissions: Vec::new(),
            filled: false,
            done: false,
            seen: 0,
            peak: 0,
        }
    }

    /// Whether the node budget was exceeded and sampling stopped.
    pub fn is_done(&self) -> bool {
        self.done
    }

    pub fn window_len(&self) -> usize {
        self.window.len()
    }

    fn admit_node(&mut self, u: NodeId) {
        if !self.sample.contains_node(u) {
            self.sample.add_node(u);
            self.admissions.push(Admission::Node(u));
        }
    }

    /// One BFS action.
    fn step(&mut self) {
        if let Some(u) = self.focus {
            self.admit_node(u);
            let incident = self.window.incident(u);
            if !incident.is_empty() {
                let seq = incident[self.rng.random_range(0..incident.len())];
                let e = self.window.remove(seq);
                let v = e.other(u);
                self.admit_node(v);
                if self.sample.add_edge(e) {
                    self.admissions.push(Admission::Edge(e));
                }
                self.queue.push_back(v);
                self.done = self.sample.node_count() > self.n;
                return;
            }
        }
        self.focus = match self.queue.pop_front() {
            Some(next) => Some(next),
            None => self.window.random_vertex(&mut self.rng),
        };
        self.done = self.sample.node_count() > self.n;
    }

    fn has_work(&self) -> bool {
        let focus_has_edges = self.focus.is_some_and(|u| !self.window.incident(u).is_empty());
        focus_has_edges || !self.queue.is_empty() || self.window.len() > 0
    }

    fn track_peak(&mut self) {
        self.peak = self.peak.max(self.state_size());
    }
}

impl StreamSampler for StreamingBfs {
    fn algorithm(&self) -> Algorithm {
        Algorithm::Bfs
    }

    fn process(&mut self, edge: Edge) {
        self.seen += 1;
        if self.done {
            return;
        }
        if !self.filled {
            self.window.push(edge);
            if self.window.is_full() {
                self.filled = true;
                self.focus = self.window.random_vertex(&mut self.rng);
            }
        } else {
            self.step();
            self.window.push(edge);
        }
        self.track_peak();
    }

    fn end_of_stream(&mut self) {
        if self.focus.is_none() {
            self.focus = self.window.random_vertex(&mut self.rng);
        }
        while !self.done && self.has_work() {
            self.step();
            self.track_peak();
        }
    }

    fn current(&self) -> &SampledGraph {
        &self.sample
    }

    fn snapshot(&self) -> Result<SampledGraph> {
        if self.sample.node_count() <= self.n {
            return Ok(self.sample.clone());
        }
        let mut g = SampledGraph::new();
        for a in &self.admissions {
            match *a {
                Admission::Node(u) => {
                    if g.node_count() == self.n {
                        break;
                    }
                    g.add_node(u);
                }
                Admission::Edge(e) => {
                    if !(g.contains_node(e.u()) && g.contains_node(e.v())) {
                        break;
                    }
                    g.add_edge(e);
                }
            }
        }
        Ok(g)
    }

    fn edges_seen(&self) -> usize {
        self.seen
    }

    fn state_size(&self) -> usize {
        self.sample.node_count()
            + self.sample.edge_count()
            + self.window.len()
            + self.queue.len()
            + self.admissions.len()
    }

    fn peak_state_size(&self) -> usize {
        self.peak
    }
}
