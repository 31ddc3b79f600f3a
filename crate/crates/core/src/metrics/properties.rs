use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{Distribution, Property};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// How many BFS sources the path-length distribution uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct PathSampling {
    /// Graphs with at most this many nodes use every node as a source.
    pub exact_up_to: usize,
    /// Number of uniformly drawn sources for larger graphs.
    pub sources: usize,
    pub seed: u64,
}

impl Default for PathSampling {
    fn default() -> Self {
        PathSampling {
            exact_up_to: 5_000,
            sources: 1_000,
            seed: 0,
        }
    }
}

impl PathSampling {
    pub fn exact() -> Self {
        PathSampling {
            exact_up_to: usize::MAX,
            ..Self::default()
        }
    }

    pub(crate) fn select_sources(&self, node_count: usize) -> Vec<NodeId> {
        if node_count <= self.exact_up_to || node_count <= self.sources {
            return (0..node_count as NodeId).collect();
        }
        let mut rng = crate::rng_from_seed(crate::derive_seed(self.seed, crate::seed_tag::PATH_SOURCES));
        let mut picked: Vec<NodeId> = rand::seq::index::sample(&mut rng, node_count, self.sources)
            .into_iter()
            .map(|i| i as NodeId)
            .collect();
        picked.sort_unstable();
        picked
    }
}

fn require_nodes(g: &Graph, what: &'static str) -> Result<()> {
    if g.node_count() == 0 {
        Err(Error::EmptyGraph(what))
    } else {
        Ok(())
    }
}

/// Node degrees, isolated nodes counted as degree 0.
pub fn degree_distribution(g: &Graph) -> Result<Distribution> {
    require_nodes(g, "degree distribution")?;
    let mut counts = vec![0u64; 1];
    for u in 0..g.node_count() as NodeId {
        let d = g.degree(u);
        if d >= counts.len() {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
    }
    Ok(Distribution::from_counts(counts.into_iter().enumerate().map(|(d, c)| (d as f64, c))).unwrap())
}

/// Local clustering coefficient of every node; nodes of degree < 2 get 0.
pub fn local_clustering(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let mut mark = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for u in 0..n as NodeId {
        let adj = g.neighbors(u);
        let d = adj.len();
        if d < 2 {
            out.push(0.0);
            continue;
        }
        for &w in adj {
            mark[w as usize] = true;
        }
        // each triangle through u is seen from both of its other corners
        let mut closed = 0u64;
        for &w in adj {
            closed += g.neighbors(w).iter().filter(|&&x| mark[x as usize]).count() as u64;
        }
        for &w in adj {
            mark[w as usize] = false;
        }
        let pairs = (d * (d - 1)) as f64;
        out.push(closed as f64 / pairs);
    }
    out
}

pub fn clustering_distribution(g: &Graph) -> Result<Distribution> {
    require_nodes(g, "clustering distribution")?;
    Ok(Distribution::from_values(local_clustering(g)).unwrap())
}

/// Sizes of the connected components, in order of their smallest node.
pub fn component_sizes(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    let mut parent: Vec<u32> = (0..n as u32).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            let grand = parent[parent[x as usize] as usize];
            parent[x as usize] = grand;
            x = grand;
        }
        x
    }
    for e in g.edges() {
        let (a, b) = (find(&mut parent, e.u()), find(&mut parent, e.v()));
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            parent[hi as usize] = lo;
        }
    }
    let mut size = vec![0usize; n];
    for u in 0..n as u32 {
        let r = find(&mut parent, u);
        size[r as usize] += 1;
    }
    size.into_iter().filter(|&s| s > 0).collect()
}

pub fn wcc_size_distribution(g: &Graph) -> Result<Distribution> {
    require_nodes(g, "component size distribution")?;
    Ok(Distribution::from_values(component_sizes(g).into_iter().map(|s| s as f64)).unwrap())
}

/// Counts of shortest-path hop lengths from each of `sources` to every node
/// it reaches; entry `d` holds the number of ordered pairs at distance `d`.
pub fn path_length_histogram(g: &Graph, sources: &[NodeId]) -> Vec<u64> {
    let n = g.node_count();
    let mut dist = vec![u32::MAX; n];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();
    let mut hist: Vec<u64> = Vec::new();
    for &s in sources {
        dist[s as usize] = 0;
        touched.push(s);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let next = dist[u as usize] + 1;
            for &w in g.neighbors(u) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = next;
                    touched.push(w);
                    queue.push_back(w);
                    let d = next as usize;
                    if d >= hist.len() {
                        hist.resize(d + 1, 0);
                    }
                    hist[d] += 1;
                }
            }
        }
        for u in touched.drain(..) {
            dist[u as usize] = u32::MAX;
        }
    }
    hist
}

/// Distribution of hop counts over reachable ordered pairs; unreachable
/// pairs are left out.
pub fn path_length_distribution(g: &Graph, sampling: &PathSampling) -> Result<Distribution> {
    require_nodes(g, "path length distribution")?;
    if g.edge_count() == 0 {
        return Err(Error::NoPaths);
    }
    let sources = sampling.select_sources(g.node_count());
    let hist = path_length_histogram(g, &sources);
    Distribution::from_counts(hist.into_iter().enumerate().map(|(d, c)| (d as f64, c))).ok_or(Error::NoPaths)
}

pub fn property_distribution(g: &Graph, property: Property, sampling: &PathSampling) -> Result<Distribution> {
    match property {
        Property::Degree => degree_distribution(g),
        Property::PathLength => path_length_distribution(g, sampling),
        Property::Clustering => clustering_distribution(g),
        Property::WccSize => wcc_size_distribution(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn graph(n: usize, edges: &[(NodeId, NodeId)]) -> Graph {
        Graph::from_edges(n, edges.iter().map(|&(a, b)| Edge::new(a, b).unwrap()))
    }

    fn triangle() -> Graph {
        graph(3, &[(0, 1), (1, 2), (0, 2)])
    }

    fn star() -> Graph {
        graph(4, &[(0, 1), (0, 2), (0, 3)])
    }

    #[test]
    fn degree_examples() {
        let d = degree_distribution(&triangle()).unwrap();
        assert_eq!((d.support(), d.pdf()), (&[2.0][..], &[1.0][..]));
        let d = degree_distribution(&star()).unwrap();
        assert_eq!(d.support(), &[1.0, 3.0]);
        assert_eq!(d.pdf(), &[0.75, 0.25]);
        let d = degree_distribution(&graph(3, &[(0, 1)])).unwrap();
        assert_eq!(d.support(), &[0.0, 1.0]);
        assert!(matches!(degree_distribution(&graph(0, &[])), Err(Error::EmptyGraph(_))));
    }

    #[test]
    fn path_examples() {
        let d = path_length_distribution(&triangle(), &PathSampling::default()).unwrap();
        assert_eq!((d.support(), d.pdf()), (&[1.0][..], &[1.0][..]));
        let d = path_length_distribution(&graph(3, &[(0, 1), (1, 2)]), &PathSampling::default()).unwrap();
        assert_eq!(d.support(), &[1.0, 2.0]);
        assert!((d.pdf()[0] - 2.0 / 3.0).abs() < 1e-15);
        assert!((d.pdf()[1] - 1.0 / 3.0).abs() < 1e-15);
        assert!(matches!(
            path_length_distribution(&graph(3, &[]), &PathSampling::default()),
            Err(Error::NoPaths)
        ));
    }

    #[test]
    fn sampled_sources_are_distinct_and_seeded() {
        let s = PathSampling {
            exact_up_to: 10,
            sources: 7,
            seed: 3,
        };
        let a = s.select_sources(100);
        assert_eq!(a.len(), 7);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(a, s.select_sources(100));
        assert_eq!(s.select_sources(9).len(), 9);
    }

    #[test]
    fn clustering_examples() {
        let d = clustering_distribution(&triangle()).unwrap();
        assert_eq!((d.support(), d.pdf()), (&[1.0][..], &[1.0][..]));
        let d = clustering_distribution(&star()).unwrap();
        assert_eq!((d.support(), d.pdf()), (&[0.0][..], &[1.0][..]));
        // triangle 0,1,2 with pendant 3 on corner 0
        let g = graph(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        let c = local_clustering(&g);
        assert_eq!(c, vec![1.0 / 3.0, 1.0, 1.0, 0.0]);
    }

    #[test]
    fn component_examples() {
        let d = wcc_size_distribution(&triangle()).unwrap();
        assert_eq!(d.support(), &[3.0]);
        let g = graph(7, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        let mut sizes = component_sizes(&g);
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 3]);
    }
}
