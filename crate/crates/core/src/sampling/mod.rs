//! Streaming samplers and offline baselines.
//!
//! A [`StreamSampler`] sees the stream one edge at a time through
//! [`StreamSampler::process`] and never gets random access to it, so every
//! streaming sampler is single-pass by construction. Its bookkeeping is
//! bounded by the sample size (plus the window, for BFS); `state_size`
//! exposes the count so callers can check it.

mod bfs;
mod es;
pub mod hash;
mod ns;
mod offline;
mod pies;
mod reservoir;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use bfs::StreamingBfs;
pub use es::StreamingEs;
pub use hash::uniform_hash;
pub use ns::StreamingNs;
pub use offline::{burn_count, offline_es_induced, offline_ffs, offline_ffs_from};
pub use pies::Pies;
pub use reservoir::{MinHashReservoir, Offer};

use crate::error::{Error, Result};
use crate::graph::{Edge, SampledGraph};
use crate::stream::StreamSource;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Ns,
    Es,
    Bfs,
    Pies,
    Ffs,
    EsI,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Ns,
        Algorithm::Es,
        Algorithm::Bfs,
        Algorithm::Pies,
        Algorithm::Ffs,
        Algorithm::EsI,
    ];
    pub const STREAMING: [Algorithm; 4] = [Algorithm::Ns, Algorithm::Es, Algorithm::Bfs, Algorithm::Pies];

    pub fn is_streaming(&self) -> bool {
        !matches!(self, Algorithm::Ffs | Algorithm::EsI)
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Algorithm::Ns => "ns",
            Algorithm::Es => "es",
            Algorithm::Bfs => "bfs",
            Algorithm::Pies => "pies",
            Algorithm::Ffs => "ffs",
            Algorithm::EsI => "es_i",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('-', "_");
        Algorithm::ALL
            .into_iter()
            .find(|a| a.as_str() == norm)
            .ok_or_else(|| Error::Config(format!("unknown algorithm '{s}'")))
    }
}

/// Algorithm-specific knobs. Unused fields are ignored by other algorithms.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SamplerParams {
    /// Edge reservoir size for streaming ES; `None` means `4 * n`.
    pub m: Option<usize>,
    /// Sliding window length for streaming BFS.
    pub wsize: usize,
    /// Forward burning probability for forest fire.
    pub p_f: f64,
}

impl Default for SamplerParams {
    fn default() -> Self {
        SamplerParams {
            m: None,
            wsize: 100,
            p_f: 0.7,
        }
    }
}

impl SamplerParams {
    pub fn reservoir_size(&self, n: usize) -> usize {
        self.m.unwrap_or(4 * n).max(1)
    }
}

/// A one-pass graph stream sampler.
pub trait StreamSampler: Send {
    fn algorithm(&self) -> Algorithm;

    /// Consumes the next stream edge.
    fn process(&mut self, edge: Edge);

    /// Signals that the stream is exhausted. Samplers that buffer edges
    /// (BFS) finish their work here.
    fn end_of_stream(&mut self) {}

    /// The raw sample as currently held.
    fn current(&self) -> &SampledGraph;

    /// The sample as it would be reported now, after any final pruning.
    /// Does not change the sampler state.
    fn snapshot(&self) -> Result<SampledGraph>;

    /// Number of stream edges processed so far.
    fn edges_seen(&self) -> usize;

    /// Entries currently stored: sample nodes and edges plus auxiliary
    /// structures (reservoirs, slot arrays, window, queue).
    fn state_size(&self) -> usize;

    /// Largest `state_size` observed after any processed edge.
    fn peak_state_size(&self) -> usize;
}

/// Builds a streaming sampler with node budget `n`.
pub fn streaming_sampler(
    algorithm: Algorithm,
    n: usize,
    params: &SamplerParams,
    seed: u64,
) -> Result<Box<dyn StreamSampler>> {
    if n == 0 {
        return Err(Error::Config("sample size must be at least 1".into()));
    }
    Ok(match algorithm {
        Algorithm::Ns => Box::new(StreamingNs::new(n, seed)),
        Algorithm::Es => Box::new(StreamingEs::new(n, params.reservoir_size(n), seed)),
        Algorithm::Bfs => {
            if params.wsize == 0 {
                return Err(Error::Config("BFS window size must be at least 1".into()));
            }
            Box::new(StreamingBfs::new(n, params.wsize, seed))
        }
        Algorithm::Pies => Box::new(Pies::new(n, seed)),
        Algorithm::Ffs | Algorithm::EsI => {
            return Err(Error::Config(format!("{algorithm} needs random access and cannot run on a stream")))
        }
    })
}

/// Feeds the whole stream to `sampler` and returns the final sample.
pub fn run_stream<S: StreamSampler + ?Sized>(sampler: &mut S, stream: StreamSource) -> Result<SampledGraph> {
    for e in stream {
        sampler.process(e);
    }
    sampler.end_of_stream();
    sampler.snapshot()
}

/// Streaming node sampling with a bottom-`n` node-hash reservoir.
pub fn streaming_ns(stream: StreamSource, n: usize, seed: u64) -> SampledGraph {
    run_stream(&mut StreamingNs::new(n, seed), stream).expect("node sampling has no failure mode")
}

/// Streaming edge sampling with an `m`-edge reservoir, pruned to `n` nodes.
pub fn streaming_es(stream: StreamSource, n: usize, m: usize, seed: u64) -> Result<SampledGraph> {
    run_stream(&mut StreamingEs::new(n, m, seed), stream)
}

/// BFS over a sliding window of `wsize` edges.
pub fn streaming_bfs(stream: StreamSource, n: usize, wsize: usize, seed: u64) -> SampledGraph {
    run_stream(&mut StreamingBfs::new(n, wsize, seed), stream).expect("BFS has no failure mode")
}

/// Partially-induced edge sampling.
pub fn pies(stream: StreamSource, n: usize, seed: u64) -> SampledGraph {
    run_stream(&mut Pies::new(n, seed), stream).expect("PIES has no failure mode")
}
