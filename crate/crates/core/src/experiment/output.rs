use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use super::report::compare_report;
use super::run::RunResult;
use crate::error::{Error, Result};
use crate::graph::SampledGraph;
use crate::stream::{write_edge_list, EdgeListFormat};

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path).map(BufWriter::new).map_err(|e| Error::io(path, e))
}

fn csv_error(path: &Path, e: csv::Error) -> Error {
    Error::Aggregation(format!("{}: {e}", path.display()))
}

/// Writes one CSV row per record.
pub fn write_runs_csv(result: &RunResult, path: &Path) -> Result<()> {
    let mut w = csv::Writer::from_writer(create(path)?);
    for r in &result.records {
        w.serialize(r).map_err(|e| csv_error(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

/// Writes `sample` as an edge list using the input's node ids.
pub fn write_sample_edges(sample: &SampledGraph, original_ids: &[u64], path: &Path, format: EdgeListFormat) -> Result<()> {
    let mut out = create(path)?;
    let pairs = sample
        .sorted_edges()
        .into_iter()
        .map(|e| (original_ids[e.u() as usize], original_ids[e.v() as usize]));
    write_edge_list(&mut out, pairs, format).map_err(|e| Error::io(path, e))?;
    out.flush().map_err(|e| Error::io(path, e))
}

fn phi_tag(phi: f64) -> String {
    format!("{phi}")
}

/// Writes `runs.csv`, `aggregate.csv`, `result.json`, the distributions of
/// the full graph and of run 0's final sample under `distributions/`, and
/// run 0's final sample as an edge list. Returns the files written.
pub fn write_outputs(result: &RunResult, out_dir: &Path) -> Result<Vec<PathBuf>> {
    let dist_dir = out_dir.join("distributions");
    fs::create_dir_all(&dist_dir).map_err(|e| Error::io(&dist_dir, e))?;
    let mut written = Vec::new();

    let runs = out_dir.join("runs.csv");
    write_runs_csv(result, &runs)?;
    written.push(runs);

    let aggregate = out_dir.join("aggregate.csv");
    compare_report(std::slice::from_ref(result), false)?.write_csv(create(&aggregate)?)?;
    written.push(aggregate);

    let json = out_dir.join("result.json");
    let mut out = create(&json)?;
    serde_json::to_writer_pretty(&mut out, result)?;
    out.flush().map_err(|e| Error::io(&json, e))?;
    written.push(json);

    let alg = result.config.algorithm.as_str();
    let phi = phi_tag(result.config.phi);
    let art = &result.artifacts;
    let dists = art
        .reference
        .iter()
        .map(|(p, d)| (format!("{p}_full.csv"), d))
        .chain(art.first_run.iter().map(|(p, d)| (format!("{p}_{alg}_{phi}.csv"), d)));
    for (name, d) in dists {
        let path = dist_dir.join(name);
        let mut out = create(&path)?;
        d.write_csv(&mut out).map_err(|e| Error::io(&path, e))?;
        out.flush().map_err(|e| Error::io(&path, e))?;
        written.push(path);
    }

    if let Some(sample) = &art.first_run_sample {
        let path = out_dir.join(format!("sample_{alg}_{phi}.txt"));
        write_sample_edges(sample, &art.original_ids, &path, EdgeListFormat::Whitespace)?;
        written.push(path);
    }
    Ok(written)
}
