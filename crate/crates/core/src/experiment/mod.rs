//! Multi-seed sweeps, back-in-time evaluation, aggregation and file output.

mod config;
mod output;
mod report;
mod run;

pub use config::{Dataset, DatasetSpec, RunConfig};
pub use output::{write_outputs, write_runs_csv, write_sample_edges};
pub use report::{compare_report, Report, ReportRow, AVERAGE_LABEL};
pub use run::{
    run_back_in_time, run_back_in_time_on, run_sweep, run_sweep_on, sample_once, Artifacts, DatasetInfo, Mode,
    RunFailure, RunRecord, RunResult,
};
