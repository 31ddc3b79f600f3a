use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{PathSampling, Property, DEFAULT_SKEW_ALPHA};
use crate::sampling::{Algorithm, SamplerParams};
use crate::stream::{generate_synthetic, ingest_edge_list, EdgeList, EdgeListFormat, SyntheticModel};

/// Where the graph of an experiment comes from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DatasetSpec {
    File {
        path: PathBuf,
        #[serde(default)]
        format: EdgeListFormat,
    },
    Synthetic {
        model: SyntheticModel,
        n: usize,
        param: f64,
        #[serde(default)]
        seed: u64,
    },
}

impl DatasetSpec {
    pub fn name(&self) -> String {
        match self {
            DatasetSpec::File { path, .. } => path
                .file_stem()
                .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned()),
            DatasetSpec::Synthetic { model, n, param, seed } => format!("{model}-{n}-{param}-s{seed}"),
        }
    }

    pub fn load(&self) -> Result<Dataset> {
        let edges = match self {
            DatasetSpec::File { path, format } => ingest_edge_list(path, *format)?,
            DatasetSpec::Synthetic { model, n, param, seed } => generate_synthetic(*model, *n, *param, *seed)?,
        };
        Ok(Dataset::new(self.name(), edges))
    }
}

/// Parses `model:n:param[:seed]`, e.g. `pa:2000:3` or `er:2000:0.004:7`.
impl FromStr for DatasetSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if !(3..=4).contains(&parts.len()) {
            return Err(Error::Config(format!("expected model:n:param[:seed], got '{s}'")));
        }
        let bad = |what: &str| Error::Config(format!("invalid {what} in synthetic spec '{s}'"));
        Ok(DatasetSpec::Synthetic {
            model: parts[0].parse()?,
            n: parts[1].parse().map_err(|_| bad("node count"))?,
            param: parts[2].parse().map_err(|_| bad("parameter"))?,
            seed: parts.get(3).map_or(Ok(0), |x| x.parse()).map_err(|_| bad("seed"))?,
        })
    }
}

impl fmt::Display for DatasetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A loaded, simplified graph together with its compact form.
#[derive(Clone, Debug)]
pub struct Dataset {
    pub name: String,
    pub edges: EdgeList,
    pub graph: Graph,
}

impl Dataset {
    pub fn new(name: impl Into<String>, edges: EdgeList) -> Self {
        let graph = edges.to_graph();
        Dataset {
            name: name.into(),
            edges,
            graph,
        }
    }

    pub fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }
}

fn default_runs() -> usize {
    10
}

fn default_eval_points() -> Vec<f64> {
    vec![0.25, 0.5, 0.75, 1.0]
}

fn default_alpha() -> f64 {
    DEFAULT_SKEW_ALPHA
}

fn default_properties() -> Vec<Property> {
    Property::ALL.to_vec()
}

/// Parameters of one sweep: one algorithm at one sampling fraction over
/// several seeded runs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub dataset: DatasetSpec,
    pub algorithm: Algorithm,
    /// Target fraction of nodes, `|V_s| = round(phi * N)`.
    pub phi: f64,
    #[serde(default = "default_runs")]
    pub runs: usize,
    /// Run `r` uses seed `base_seed + r` for its permutation and sampler.
    #[serde(default)]
    pub base_seed: u64,
    /// Fractions of the stream after which the sample is evaluated.
    #[serde(default = "default_eval_points")]
    pub eval_points: Vec<f64>,
    #[serde(default)]
    pub back_in_time_fraction: Option<f64>,
    #[serde(default, flatten)]
    pub params: SamplerParams,
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    #[serde(default)]
    pub path_sampling: PathSampling,
    #[serde(default = "default_properties")]
    pub properties: Vec<Property>,
    /// Record wall-clock times. Off by default so results are reproducible
    /// byte for byte.
    #[serde(default)]
    pub record_timing: bool,
}

impl RunConfig {
    pub fn new(dataset: DatasetSpec, algorithm: Algorithm, phi: f64) -> Self {
        RunConfig {
            dataset,
            algorithm,
            phi,
            runs: default_runs(),
            base_seed: 0,
            eval_points: default_eval_points(),
            back_in_time_fraction: None,
            params: SamplerParams::default(),
            alpha: default_alpha(),
            path_sampling: PathSampling::default(),
            properties: default_properties(),
            record_timing: false,
        }
    }

    /// Reads a JSON or TOML config, chosen by file extension.
    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        match path.extension().and_then(|e| e.to_str()) {
            Some("toml") => Ok(toml::from_str(&text)?),
            _ => Ok(serde_json::from_str(&text)?),
        }
    }

    /// Node budget for a graph with `node_count` nodes.
    pub fn sample_size(&self, node_count: usize) -> usize {
        (self.phi * node_count as f64).round() as usize
    }

    /// Checks the config against a graph with `node_count` nodes.
    pub fn validate(&self, node_count: usize) -> Result<()> {
        let fail = |msg: String| Err(Error::Config(msg));
        if !(self.phi > 0.0 && self.phi <= 1.0) {
            return fail(format!("phi must be in (0, 1], got {}", self.phi));
        }
        if self.sample_size(node_count) < 1 {
            return fail(format!("phi = {} leaves no nodes out of {node_count}", self.phi));
        }
        if self.runs == 0 {
            return fail("at least one run is required".into());
        }
        if self.eval_points.is_empty()
            || self.eval_points.iter().any(|&f| !(f > 0.0 && f <= 1.0))
            || self.eval_points.windows(2).any(|w| w[0] >= w[1])
            || *self.eval_points.last().unwrap() != 1.0
        {
            return fail(format!(
                "eval points must increase strictly within (0, 1] and end at 1.0, got {:?}",
                self.eval_points
            ));
        }
        if let Some(f) = self.back_in_time_fraction {
            if !(f > 0.0 && f <= 1.0) {
                return fail(format!("back-in-time fraction must be in (0, 1], got {f}"));
            }
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return fail(format!("skew alpha must be in (0, 1), got {}", self.alpha));
        }
        if self.properties.is_empty() {
            return fail("no properties selected".into());
        }
        if self.algorithm == Algorithm::Bfs && self.params.wsize == 0 {
            return fail("BFS window size must be at least 1".into());
        }
        if self.algorithm == Algorithm::Ffs && !(self.params.p_f > 0.0 && self.params.p_f < 1.0) {
            return fail(format!("p_f must be in (0, 1), got {}", self.params.p_f));
        }
        Ok(())
    }
}
