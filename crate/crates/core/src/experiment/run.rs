use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::{Dataset, RunConfig};
use crate::error::{Error, Result};
use crate::graph::{Graph, SampledGraph};
use crate::metrics::{ks_distance, local_clustering, property_distribution, skew_divergence, Distribution, PathSampling, Property};
use crate::sampling::{offline_es_induced, offline_ffs, run_stream, streaming_sampler, Algorithm};
use crate::stream::StreamSource;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Sweep,
    BackInTime,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DatasetInfo {
    pub name: String,
    pub nodes: usize,
    pub edges: usize,
    pub density: f64,
    pub avg_clustering: f64,
}

impl DatasetInfo {
    fn of(dataset: &Dataset) -> Self {
        let g = &dataset.graph;
        let n = g.node_count();
        let density = if n < 2 {
            0.0
        } else {
            2.0 * g.edge_count() as f64 / (n as f64 * (n as f64 - 1.0))
        };
        let avg_clustering = if n == 0 {
            0.0
        } else {
            local_clustering(g).iter().sum::<f64>() / n as f64
        };
        DatasetInfo {
            name: dataset.name.clone(),
            nodes: n,
            edges: g.edge_count(),
            density,
            avg_clustering,
        }
    }
}

/// Distances for one property of one snapshot.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub run: usize,
    pub seed: u64,
    pub eval_point: f64,
    pub stream_position: usize,
    pub property: Property,
    pub ks: f64,
    pub skew: f64,
    pub sample_nodes: usize,
    pub sample_edges: usize,
    /// Peak sampler state so far; `None` for offline baselines.
    pub peak_state: Option<usize>,
    pub wall_time_ms: Option<f64>,
}

/// A snapshot (or one property of it) that could not be evaluated.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunFailure {
    pub run: usize,
    pub seed: u64,
    pub eval_point: f64,
    pub property: Option<Property>,
    pub message: String,
}

/// Full-graph distributions and the final sample of run 0, kept for export.
#[derive(Clone, Debug, Default)]
pub struct Artifacts {
    pub reference: Vec<(Property, Distribution)>,
    pub first_run: Vec<(Property, Distribution)>,
    pub first_run_sample: Option<SampledGraph>,
    /// Maps dense node ids back to the ids of the input.
    pub original_ids: Vec<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunResult {
    pub config: RunConfig,
    pub mode: Mode,
    pub dataset: DatasetInfo,
    pub sample_size: usize,
    pub properties: Vec<Property>,
    pub records: Vec<RunRecord>,
    pub failures: Vec<RunFailure>,
    /// How many times reference distributions were computed.
    pub reference_computations: usize,
    #[serde(skip)]
    pub artifacts: Artifacts,
}

impl RunResult {
    /// Stream fractions at which samples were evaluated. Offline baselines
    /// and back-in-time runs are evaluated only at the end of the stream.
    pub fn evaluated_points(&self) -> Vec<f64> {
        if self.mode == Mode::Sweep && self.config.algorithm.is_streaming() {
            self.config.eval_points.clone()
        } else {
            vec![1.0]
        }
    }

    pub fn records_for(&self, property: Property, eval_point: f64) -> impl Iterator<Item = &RunRecord> {
        self.records
            .iter()
            .filter(move |r| r.property == property && r.eval_point == eval_point)
    }

    /// Mean KS over runs at `eval_point`.
    pub fn mean_ks(&self, property: Property, eval_point: f64) -> Option<f64> {
        let ks: Vec<f64> = self.records_for(property, eval_point).map(|r| r.ks).collect();
        if ks.is_empty() {
            None
        } else {
            Some(ks.iter().sum::<f64>() / ks.len() as f64)
        }
    }

    /// Mean KS at the end of the stream.
    pub fn final_mean_ks(&self, property: Property) -> Option<f64> {
        self.mean_ks(property, 1.0)
    }
}

struct Reference {
    distributions: Vec<(Property, Distribution)>,
}

impl Reference {
    fn compute(g: &Graph, properties: &[Property], sampling: &PathSampling, counter: &AtomicUsize) -> Result<Self> {
        counter.fetch_add(1, Ordering::Relaxed);
        let distributions = properties
            .iter()
            .map(|&p| property_distribution(g, p, sampling).map(|d| (p, d)))
            .collect::<Result<_>>()?;
        Ok(Reference { distributions })
    }
}

struct RunOutput {
    records: Vec<RunRecord>,
    failures: Vec<RunFailure>,
    distributions: Vec<(Property, Distribution)>,
    final_sample: Option<SampledGraph>,
}

struct Evaluator<'a> {
    config: &'a RunConfig,
    run: usize,
    seed: u64,
    started: Instant,
}

impl Evaluator<'_> {
    fn evaluate(
        &self,
        reference: &Reference,
        snapshot: Result<SampledGraph>,
        eval_point: f64,
        position: usize,
        peak_state: Option<usize>,
        out: &mut RunOutput,
    ) {
        let sample = match snapshot {
            Ok(s) => s,
            Err(e) => {
                out.failures.push(self.failure(eval_point, None, &e));
                return;
            }
        };
        let (graph, _) = sample.to_graph();
        let wall_time_ms = self
            .config
            .record_timing
            .then(|| self.started.elapsed().as_secs_f64() * 1e3);
        for (property, full) in &reference.distributions {
            match property_distribution(&graph, *property, &self.config.path_sampling) {
                Ok(d) => {
                    out.records.push(RunRecord {
                        run: self.run,
                        seed: self.seed,
                        eval_point,
                        stream_position: position,
                        property: *property,
                        ks: ks_distance(full, &d),
                        skew: skew_divergence(full, &d, self.config.alpha),
                        sample_nodes: sample.node_count(),
                        sample_edges: sample.edge_count(),
                        peak_state,
                        wall_time_ms,
                    });
                    if eval_point == 1.0 {
                        out.distributions.push((*property, d));
                    }
                }
                Err(e) => out.failures.push(self.failure(eval_point, Some(*property), &e)),
            }
        }
        if eval_point == 1.0 {
            out.final_sample = Some(sample);
        }
    }

    fn failure(&self, eval_point: f64, property: Option<Property>, err: &Error) -> RunFailure {
        log::warn!("run {} at {eval_point}: {err}", self.run);
        RunFailure {
            run: self.run,
            seed: self.seed,
            eval_point,
            property,
            message: err.to_string(),
        }
    }
}

/// Stream positions (1-based) at which each eval point is reached.
fn eval_positions(eval_points: &[f64], stream_len: usize) -> Vec<usize> {
    eval_points
        .iter()
        .map(|&f| ((f * stream_len as f64).ceil() as usize).clamp(1, stream_len))
        .collect()
}

fn run_streaming(
    config: &RunConfig,
    dataset: &Dataset,
    n: usize,
    run: usize,
    reference: &Reference,
) -> Result<RunOutput> {
    let seed = config.base_seed + run as u64;
    let eval = Evaluator {
        config,
        run,
        seed,
        started: Instant::now(),
    };
    let stream = StreamSource::permuted(dataset.edges.edges(), seed);
    let total = stream.len();
    let mut sampler = streaming_sampler(config.algorithm, n, &config.params, seed)?;
    let positions = eval_positions(&config.eval_points, total);
    let mut out = RunOutput {
        records: Vec::new(),
        failures: Vec::new(),
        distributions: Vec::new(),
        final_sample: None,
    };
    let mut next = 0;
    for e in stream {
        sampler.process(e);
        let t = sampler.edges_seen();
        if t == total {
            sampler.end_of_stream();
        }
        while next < positions.len() && positions[next] == t {
            let snap = sampler.snapshot();
            eval.evaluate(reference, snap, config.eval_points[next], t, Some(sampler.peak_state_size()), &mut out);
            next += 1;
        }
    }
    Ok(out)
}

fn run_offline(config: &RunConfig, dataset: &Dataset, n: usize, run: usize, reference: &Reference) -> Result<RunOutput> {
    let seed = config.base_seed + run as u64;
    let eval = Evaluator {
        config,
        run,
        seed,
        started: Instant::now(),
    };
    let sample = offline_sample(config, dataset, n, seed);
    let mut out = RunOutput {
        records: Vec::new(),
        failures: Vec::new(),
        distributions: Vec::new(),
        final_sample: None,
    };
    eval.evaluate(reference, sample, 1.0, dataset.edge_count(), None, &mut out);
    Ok(out)
}

fn offline_sample(config: &RunConfig, dataset: &Dataset, n: usize, seed: u64) -> Result<SampledGraph> {
    match config.algorithm {
        Algorithm::Ffs => offline_ffs(&dataset.graph, n, config.params.p_f, seed),
        Algorithm::EsI => offline_es_induced(&dataset.graph, n, seed),
        other => unreachable!("{other} is a streaming algorithm"),
    }
}

fn prepare(config: &RunConfig, dataset: &Dataset) -> Result<usize> {
    if dataset.edge_count() == 0 {
        return Err(Error::Config(format!("dataset '{}' has no edges", dataset.name)));
    }
    config.validate(dataset.node_count())?;
    Ok(config.sample_size(dataset.node_count()))
}

fn assemble(
    config: &RunConfig,
    mode: Mode,
    dataset: &Dataset,
    n: usize,
    outputs: Vec<RunOutput>,
    reference: Option<Reference>,
    reference_computations: usize,
) -> RunResult {
    let mut records = Vec::new();
    let mut failures = Vec::new();
    let mut artifacts = Artifacts {
        original_ids: dataset.edges.original_ids().to_vec(),
        ..Artifacts::default()
    };
    for (i, out) in outputs.into_iter().enumerate() {
        records.extend(out.records);
        failures.extend(out.failures);
        if i == 0 {
            artifacts.first_run = out.distributions;
            artifacts.first_run_sample = out.final_sample;
        }
    }
    if let Some(r) = reference {
        artifacts.reference = r.distributions;
    }
    RunResult {
        config: config.clone(),
        mode,
        dataset: DatasetInfo::of(dataset),
        sample_size: n,
        properties: config.properties.clone(),
        records,
        failures,
        reference_computations,
        artifacts,
    }
}

/// Draws one sample with run `run`'s seed, without evaluating it.
pub fn sample_once(config: &RunConfig, dataset: &Dataset, run: usize) -> Result<SampledGraph> {
    let n = prepare(config, dataset)?;
    let seed = config.base_seed + run as u64;
    if config.algorithm.is_streaming() {
        let mut sampler = streaming_sampler(config.algorithm, n, &config.params, seed)?;
        run_stream(sampler.as_mut(), StreamSource::permuted(dataset.edges.edges(), seed))
    } else {
        offline_sample(config, dataset, n, seed)
    }
}

/// Loads the configured dataset and runs the sweep.
pub fn run_sweep(config: &RunConfig) -> Result<RunResult> {
    let dataset = config.dataset.load()?;
    run_sweep_on(config, &dataset)
}

/// Runs `config.runs` independent seeded runs, evaluating each at every
/// eval point against the full graph's distributions, which are computed
/// once up front.
pub fn run_sweep_on(config: &RunConfig, dataset: &Dataset) -> Result<RunResult> {
    let n = prepare(config, dataset)?;
    let counter = AtomicUsize::new(0);
    let reference = Reference::compute(&dataset.graph, &config.properties, &config.path_sampling, &counter)?;
    let outputs = (0..config.runs)
        .into_par_iter()
        .map(|run| {
            if config.algorithm.is_streaming() {
                run_streaming(config, dataset, n, run, &reference)
            } else {
                run_offline(config, dataset, n, run, &reference)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let computed = counter.load(Ordering::Relaxed);
    Ok(assemble(config, Mode::Sweep, dataset, n, outputs, Some(reference), computed))
}

/// Loads the configured dataset and runs the back-in-time evaluation.
pub fn run_back_in_time(config: &RunConfig) -> Result<RunResult> {
    let dataset = config.dataset.load()?;
    run_back_in_time_on(config, &dataset)
}

/// Samples the whole stream but compares the final sample with the graph
/// formed by the first `back_in_time_fraction` of that run's stream.
pub fn run_back_in_time_on(config: &RunConfig, dataset: &Dataset) -> Result<RunResult> {
    let fraction = config
        .back_in_time_fraction
        .ok_or_else(|| Error::Config("back-in-time evaluation needs back_in_time_fraction".into()))?;
    if !config.algorithm.is_streaming() {
        return Err(Error::Config(format!(
            "back-in-time evaluation needs a streaming algorithm, not {}",
            config.algorithm
        )));
    }
    let n = prepare(config, dataset)?;
    let counter = AtomicUsize::new(0);
    let final_only = RunConfig {
        eval_points: vec![1.0],
        ..config.clone()
    };
    let outputs = (0..config.runs)
        .into_par_iter()
        .map(|run| {
            let seed = config.base_seed + run as u64;
            let stream = StreamSource::permuted(dataset.edges.edges(), seed);
            let cut = ((fraction * stream.len() as f64).ceil() as usize).clamp(1, stream.len());
            let past = Graph::from_edge_subset(stream.prefix(cut));
            let reference = Reference::compute(&past, &config.properties, &config.path_sampling, &counter)?;
            run_streaming(&final_only, dataset, n, run, &reference)
        })
        .collect::<Result<Vec<_>>>()?;
    let computed = counter.load(Ordering::Relaxed);
    Ok(assemble(config, Mode::BackInTime, dataset, n, outputs, None, computed))
}
