use std::fmt;
use std::io::Write;

use serde::{Deserialize, Serialize};

use super::run::{Mode, RunResult};
use crate::error::{Error, Result};
use crate::sampling::Algorithm;

/// Label of the rows that average KS over all properties.
pub const AVERAGE_LABEL: &str = "average";

/// Mean and spread of one (dataset, algorithm, phi, eval point, property)
/// cell. Spread is the sample standard deviation over runs, 0 for one run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub dataset: String,
    pub mode: Mode,
    pub algorithm: Algorithm,
    pub phi: f64,
    pub eval_point: f64,
    /// A property name, or `average` for the equal-weight mean over properties.
    pub property: String,
    pub mean_ks: f64,
    pub std_ks: f64,
    pub mean_skew: f64,
    pub std_skew: f64,
    /// Runs that contributed.
    pub runs: usize,
    /// Runs left out because they failed at this point.
    pub failed_runs: usize,
    pub density: f64,
    pub avg_clustering: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub rows: Vec<ReportRow>,
}

fn mean_std(xs: &[f64]) -> (f64, f64) {
    if xs.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

fn rows_for(result: &RunResult) -> Vec<ReportRow> {
    let runs = result.config.runs;
    let mut rows = Vec::new();
    let row = |eval_point: f64, property: String, ks: &[f64], skew: &[f64]| {
        let (mean_ks, std_ks) = mean_std(ks);
        let (mean_skew, std_skew) = mean_std(skew);
        ReportRow {
            dataset: result.dataset.name.clone(),
            mode: result.mode,
            algorithm: result.config.algorithm,
            phi: result.config.phi,
            eval_point,
            property,
            mean_ks,
            std_ks,
            mean_skew,
            std_skew,
            runs: ks.len(),
            failed_runs: runs - ks.len(),
            density: result.dataset.density,
            avg_clustering: result.dataset.avg_clustering,
        }
    };
    for eval_point in result.evaluated_points() {
        // per run, one slot per property
        let mut table: Vec<Vec<Option<(f64, f64)>>> = vec![vec![None; result.properties.len()]; runs];
        for r in result.records.iter().filter(|r| r.eval_point == eval_point) {
            if let Some(j) = result.properties.iter().position(|&p| p == r.property) {
                table[r.run][j] = Some((r.ks, r.skew));
            }
        }
        for (j, property) in result.properties.iter().enumerate() {
            let (ks, skew): (Vec<f64>, Vec<f64>) = table.iter().filter_map(|run| run[j]).unzip();
            rows.push(row(eval_point, property.to_string(), &ks, &skew));
        }
        // only runs with every property count towards the average
        let complete: Vec<Vec<(f64, f64)>> = table
            .iter()
            .filter_map(|run| run.iter().copied().collect::<Option<Vec<_>>>())
            .collect();
        let avg = |f: fn(&(f64, f64)) -> f64| -> Vec<f64> {
            complete
                .iter()
                .map(|run| run.iter().map(f).sum::<f64>() / run.len() as f64)
                .collect()
        };
        rows.push(row(eval_point, AVERAGE_LABEL.into(), &avg(|x| x.0), &avg(|x| x.1)));
    }
    rows
}

/// Aggregates KS and skew divergence over runs for each result, adding a
/// per-point average over properties. With `sort_by_structure`, datasets
/// appear in increasing order of density times average clustering.
pub fn compare_report(results: &[RunResult], sort_by_structure: bool) -> Result<Report> {
    if let Some(first) = results.first() {
        if let Some(other) = results.iter().find(|r| r.properties != first.properties) {
            return Err(Error::Aggregation(format!(
                "property sets differ: {:?} vs {:?}",
                first.properties, other.properties
            )));
        }
    }
    let mut order: Vec<usize> = (0..results.len()).collect();
    if sort_by_structure {
        let key = |i: &usize| results[*i].dataset.density * results[*i].dataset.avg_clustering;
        order.sort_by(|a, b| key(a).total_cmp(&key(b)));
    }
    Ok(Report {
        rows: order.into_iter().flat_map(|i| rows_for(&results[i])).collect(),
    })
}

impl Report {
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for row in &self.rows {
            w.serialize(row).map_err(|e| Error::Aggregation(e.to_string()))?;
        }
        w.flush().map_err(|e| Error::Aggregation(e.to_string()))?;
        Ok(())
    }

    pub fn find(&self, algorithm: Algorithm, phi: f64, eval_point: f64, property: &str) -> Option<&ReportRow> {
        self.rows.iter().find(|r| {
            r.algorithm == algorithm && r.phi == phi && r.eval_point == eval_point && r.property == property
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rows.iter().map(|r| r.dataset.len()).max().unwrap_or(0).max(7);
        writeln!(
            f,
            "{:<width$}  {:<5}  {:>5}  {:>5}  {:<11}  {:>17}  {:>9}  {:>4}",
            "dataset", "algo", "phi", "eval", "property", "KS mean ± sd", "skew", "runs"
        )?;
        for r in &self.rows {
            let failed = if r.failed_runs > 0 {
                format!(" ({} failed)", r.failed_runs)
            } else {
                String::new()
            };
            writeln!(
                f,
                "{:<width$}  {:<5}  {:>5.2}  {:>5.2}  {:<11}  {:>8.4} ± {:<6.4}  {:>9.4}  {:>4}{failed}",
                r.dataset,
                r.algorithm.as_str(),
                r.phi,
                r.eval_point,
                r.property,
                r.mean_ks,
                r.std_ks,
                r.mean_skew,
                r.runs,
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_standard_deviation() {
        let (m, s) = mean_std(&[2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0]);
        assert_eq!(m, 5.0);
        assert!((s - (32.0f64 / 7.0).sqrt()).abs() < 1e-12);
        assert_eq!(mean_std(&[0.3]), (0.3, 0.0));
        assert!(mean_std(&[]).0.is_nan());
    }
}
