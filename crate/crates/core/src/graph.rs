//! Graph representations shared by the samplers and the metrics.
//!
//! [`SampledGraph`] is the mutable, hash-backed sample `G_s` that a sampler
//! grows and shrinks while it reads the stream. [`Graph`] is an immutable
//! compressed adjacency structure over dense ids, used for full graphs and
//! for evaluating finished samples.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

/// Dense vertex identifier. Ingested graphs use the contiguous range `[0, N)`.
pub type NodeId = u32;

/// An undirected edge stored in canonical orientation (`u < v`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    u: NodeId,
    v: NodeId,
}

impl Edge {
    /// Canonical edge between `a` and `b`, or `None` for a self-loop.
    pub fn new(a: NodeId, b: NodeId) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Some(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn u(&self) -> NodeId {
        self.u
    }

    pub fn v(&self) -> NodeId {
        self.v
    }

    pub fn endpoints(&self) -> (NodeId, NodeId) {
        (self.u, self.v)
    }

    /// The endpoint opposite to `x`. `x` must be an endpoint.
    pub fn other(&self, x: NodeId) -> NodeId {
        debug_assert!(x == self.u || x == self.v);
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    /// Packs both endpoints into one integer key (used for hashing edges).
    pub fn key(&self) -> u64 {
        (u64::from(self.u) << 32) | u64::from(self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// The evolving sample `(V_s, E_s)`: a simple undirected graph with
/// hash-set adjacency.
///
/// Every node present in `V_s` has an entry in the adjacency map, possibly
/// empty, so the map doubles as the node set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SampledGraph {
    adjacency: HashMap<NodeId, HashSet<NodeId>>,
    edge_count: usize,
    missing_removals: usize,
}

impl SampledGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph holding the given edges and their endpoints.
    pub fn from_edges<I: IntoIterator<Item = Edge>>(edges: I) -> Self {
        let mut g = Self::new();
        for e in edges {
            g.add_node(e.u);
            g.add_node(e.v);
            g.add_edge(e);
        }
        g
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn contains_node(&self, u: NodeId) -> bool {
        self.adjacency.contains_key(&u)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.adjacency
            .get(&e.u)
            .is_some_and(|adj| adj.contains(&e.v))
    }

    pub fn degree(&self, u: NodeId) -> usize {
        self.adjacency.get(&u).map_or(0, HashSet::len)
    }

    pub fn neighbors(&self, u: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.adjacency.get(&u).into_iter().flatten().copied()
    }

    /// Number of times `remove_node_with_incident_edges` was asked to drop a
    /// node that was not present.
    pub fn missing_removals(&self) -> usize {
        self.missing_removals
    }

    /// Total number of stored neighbor entries; always `2 * edge_count`.
    pub fn adjacency_entries(&self) -> usize {
        self.adjacency.values().map(HashSet::len).sum()
    }

    /// Inserts `u` into `V_s`. Idempotent.
    pub fn add_node(&mut self, u: NodeId) {
        self.adjacency.entry(u).or_default();
    }

    /// Inserts `e` into `E_s`; duplicate insertion is a no-op. Returns `true`
    /// if the edge was new.
    ///
    /// # Panics
    ///
    /// Panics if either endpoint is not in `V_s`. Samplers must admit both
    /// endpoints before recording the edge.
    pub fn add_edge(&mut self, e: Edge) -> bool {
        assert!(
            self.contains_node(e.u) && self.contains_node(e.v),
            "edge {e} inserted before its endpoints were sampled"
        );
        let fresh = self.adjacency.get_mut(&e.u).unwrap().insert(e.v);
        if fresh {
            self.adjacency.get_mut(&e.v).unwrap().insert(e.u);
            self.edge_count += 1;
        }
        fresh
    }

    /// Removes `e` if present, keeping both endpoints. Returns `true` if the
    /// edge existed.
    pub fn remove_edge(&mut self, e: Edge) -> bool {
        let removed = self
            .adjacency
            .get_mut(&e.u)
            .is_some_and(|adj| adj.remove(&e.v));
        if removed {
            self.adjacency.get_mut(&e.v).unwrap().remove(&e.u);
            self.edge_count -= 1;
        }
        removed
    }

    /// Removes `u` from `V_s` along with every incident edge. Returns the
    /// number of edges dropped. A missing node is tolerated and counted.
    pub fn remove_node_with_incident_edges(&mut self, u: NodeId) -> usize {
        let Some(adj) = self.adjacency.remove(&u) else {
            self.missing_removals += 1;
            log::debug!("removal of absent node {u} ignored");
            return 0;
        };
        for w in &adj {
            self.adjacency.get_mut(w).unwrap().remove(&u);
        }
        self.edge_count -= adj.len();
        adj.len()
    }

    /// Removes `u` if it has no incident edges. Returns `true` if removed.
    pub fn remove_if_isolated(&mut self, u: NodeId) -> bool {
        if self.adjacency.get(&u).is_some_and(HashSet::is_empty) {
            self.adjacency.remove(&u);
            true
        } else {
            false
        }
    }

    /// Node ids in no particular order.
    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.adjacency.keys().copied()
    }

    /// Node ids in ascending order.
    pub fn sorted_nodes(&self) -> Vec<NodeId> {
        let mut nodes: Vec<_> = self.nodes().collect();
        nodes.sort_unstable();
        nodes
    }

    /// Every stored edge once, in no particular order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency
            .iter()
            .flat_map(|(&u, adj)| adj.iter().filter(move |&&w| u < w).map(move |&w| Edge { u, v: w }))
    }

    /// Every stored edge once, in ascending order.
    pub fn sorted_edges(&self) -> Vec<Edge> {
        let mut edges: Vec<_> = self.edges().collect();
        edges.sort_unstable();
        edges
    }

    /// Compacts the sample into a [`Graph`] over dense ids. The returned
    /// vector maps each dense id back to the sampled node id; nodes are
    /// numbered in ascending id order.
    pub fn to_graph(&self) -> (Graph, Vec<NodeId>) {
        let nodes = self.sorted_nodes();
        let index: HashMap<NodeId, NodeId> = nodes
            .iter()
            .enumerate()
            .map(|(i, &u)| (u, i as NodeId))
            .collect();
        let edges = self
            .edges()
            .map(|e| Edge::new(index[&e.u], index[&e.v]).unwrap());
        (Graph::from_edges(nodes.len(), edges), nodes)
    }
}

/// Immutable simple undirected graph over dense ids `[0, N)`, stored as
/// compressed sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<NodeId>,
}

impl Graph {
    /// Builds a graph with `node_count` nodes. Duplicate edges are collapsed.
    ///
    /// # Panics
    ///
    /// Panics if an edge endpoint is `>= node_count`.
    pub fn from_edges<I: IntoIterator<Item = Edge>>(node_count: usize, edges: I) -> Self {
        let mut lists: Vec<Vec<NodeId>> = vec![Vec::new(); node_count];
        for e in edges {
            assert!(
                (e.v as usize) < node_count,
                "edge {e} out of range for {node_count} nodes"
            );
            lists[e.u as usize].push(e.v);
            lists[e.v as usize].push(e.u);
        }
        let mut offsets = Vec::with_capacity(node_count + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for mut adj in lists {
            adj.sort_unstable();
            adj.dedup();
            targets.extend_from_slice(&adj);
            offsets.push(targets.len());
        }
        Graph { offsets, targets }
    }

    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn neighbors(&self, u: NodeId) -> &[NodeId] {
        let u = u as usize;
        &self.targets[self.offsets[u]..self.offsets[u + 1]]
    }

    pub fn degree(&self, u: NodeId) -> usize {
        let u = u as usize;
        self.offsets[u + 1] - self.offsets[u]
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.neighbors(e.u).binary_search(&e.v).is_ok()
    }

    /// Every edge once, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.node_count() as NodeId).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&w| u < w)
                .map(move |&w| Edge { u, v: w })
        })
    }

    /// Graph induced by the nodes that are endpoints of `edges`, renumbered
    /// densely in ascending order of original id.
    pub fn from_edge_subset(edges: &[Edge]) -> Self {
        SampledGraph::from_edges(edges.iter().copied()).to_graph().0
    }
}
