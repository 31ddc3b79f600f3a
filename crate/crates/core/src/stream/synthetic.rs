use std::fmt;
use std::str::FromStr;

use rand::Rng as _;
use serde::{Deserialize, Serialize};

use super::EdgeList;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SyntheticModel {
    /// Barabási-Albert growth: a seed clique on `m` nodes, then every new
    /// node attaches to `m` distinct existing nodes chosen with probability
    /// proportional to degree. Produces exactly `m(m-1)/2 + m(n-m)` edges.
    #[serde(alias = "pa", alias = "ba")]
    PreferentialAttachment,
    /// G(n, p): every pair is an edge independently with probability `p`.
    #[serde(alias = "er", alias = "gnp")]
    ErdosRenyi,
}

impl FromStr for SyntheticModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pa" | "ba" | "preferential_attachment" => Ok(SyntheticModel::PreferentialAttachment),
            "er" | "gnp" | "erdos_renyi" => Ok(SyntheticModel::ErdosRenyi),
            other => Err(Error::Config(format!("unknown synthetic model '{other}'"))),
        }
    }
}

impl fmt::Display for SyntheticModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SyntheticModel::PreferentialAttachment => "pa",
            SyntheticModel::ErdosRenyi => "er",
        })
    }
}

/// Generates a simple undirected graph. `param` is the number of edges per
/// new node for preferential attachment, or the edge probability for
/// Erdős-Rényi. Nodes left without edges are not part of the result.
pub fn generate_synthetic(model: SyntheticModel, n: usize, param: f64, seed: u64) -> Result<EdgeList> {
    if n < 2 {
        return Err(Error::Config(format!("synthetic graph needs n >= 2, got {n}")));
    }
    let mut rng = crate::rng_from_seed(seed);
    let pairs = match model {
        SyntheticModel::PreferentialAttachment => {
            if param.fract() != 0.0 || param < 1.0 || param >= n as f64 {
                return Err(Error::Config(format!(
                    "attachment count must be an integer in [1, n), got {param}"
                )));
            }
            preferential_attachment(n, param as usize, &mut rng)
        }
        SyntheticModel::ErdosRenyi => {
            if !(param > 0.0 && param <= 1.0) {
                return Err(Error::Config(format!("edge probability must be in (0, 1], got {param}")));
            }
            erdos_renyi(n, param, &mut rng)
        }
    };
    Ok(EdgeList::simplify(pairs))
}

fn preferential_attachment(n: usize, m: usize, rng: &mut crate::Rng) -> Vec<(u64, u64)> {
    let mut pairs = Vec::with_capacity(m * (m - 1) / 2 + m * (n - m));
    // every edge endpoint appears once, so uniform draws are degree-proportional
    let mut pool: Vec<u64> = Vec::with_capacity(2 * pairs.capacity());
    for i in 0..m as u64 {
        for j in i + 1..m as u64 {
            pairs.push((i, j));
            pool.push(i);
            pool.push(j);
        }
    }
    let mut chosen = Vec::with_capacity(m);
    for new in m as u64..n as u64 {
        chosen.clear();
        while chosen.len() < m {
            let candidate = if pool.is_empty() {
                rng.random_range(0..new)
            } else {
                pool[rng.random_range(0..pool.len())]
            };
            if !chosen.contains(&candidate) {
                chosen.push(candidate);
            }
        }
        for &target in &chosen {
            pairs.push((new, target));
            pool.push(new);
            pool.push(target);
        }
    }
    pairs
}

fn erdos_renyi(n: usize, p: f64, rng: &mut crate::Rng) -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    for i in 0..n as u64 {
        for j in i + 1..n as u64 {
            if rng.random::<f64>() < p {
                pairs.push((i, j));
            }
        }
    }
    pairs
}
