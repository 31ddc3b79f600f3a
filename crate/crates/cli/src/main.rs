use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use streamsamp::experiment::{
    compare_report, run_back_in_time_on, run_sweep_on, sample_once, write_outputs, write_sample_edges, Dataset,
    DatasetSpec, RunConfig, RunResult,
};
use streamsamp::stream::{summarize, write_edge_list, EdgeListFormat};
use streamsamp::Algorithm;

#[derive(Parser)]
#[command(name = "streamsamp", version, about = "Single-pass graph stream sampling experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw one sample and write it as an edge list.
    Sample {
        #[command(flatten)]
        run: RunArgs,
        /// Output file; standard output if omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run seeded sweeps and write CSV/JSON results.
    Sweep {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, default_value = "results")]
        out_dir: PathBuf,
        /// Order the printed table by dataset density times clustering.
        #[arg(long)]
        sort_by_structure: bool,
    },
    /// Compare final samples with the graph of an earlier stream prefix.
    BackInTime {
        #[command(flatten)]
        run: RunArgs,
        /// Fraction of the stream that forms the past graph.
        #[arg(long, default_value_t = 0.2)]
        fraction: f64,
        #[arg(long, default_value = "results")]
        out_dir: PathBuf,
    },
    /// Print dataset statistics as JSON.
    Summarize {
        #[command(flatten)]
        dataset: DatasetArgs,
    },
    /// Aggregate saved result.json files into one table.
    Report {
        /// result.json files written by sweep or back-in-time.
        #[arg(required = true)]
        results: Vec<PathBuf>,
        #[arg(long)]
        sort_by_structure: bool,
        /// Also write the aggregate rows as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Args)]
struct DatasetArgs {
    /// Edge list file.
    #[arg(short, long, conflicts_with = "synthetic")]
    input: Option<PathBuf>,
    /// Edge list format: whitespace or csv.
    #[arg(long, default_value = "whitespace")]
    format: EdgeListFormat,
    /// Synthetic graph as model:n:param[:seed], e.g. pa:2000:3 or er:2000:0.004.
    #[arg(long)]
    synthetic: Option<DatasetSpec>,
}

impl DatasetArgs {
    fn spec(&self) -> Option<DatasetSpec> {
        match (&self.input, &self.synthetic) {
            (Some(path), _) => Some(DatasetSpec::File {
                path: path.clone(),
                format: self.format,
            }),
            (None, Some(spec)) => Some(spec.clone()),
            (None, None) => None,
        }
    }
}

/// Flags mirroring the run configuration. Flags override values read from
/// `--config`.
#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    dataset: DatasetArgs,
    /// JSON or TOML run configuration.
    #[arg(short, long)]
    config: Option<PathBuf>,
    /// Algorithms, comma separated: ns, es, bfs, pies, ffs, es_i.
    #[arg(long, value_delimiter = ',')]
    algo: Vec<Algorithm>,
    /// Sampling fractions, comma separated.
    #[arg(long, value_delimiter = ',')]
    phi: Vec<f64>,
    #[arg(long)]
    runs: Option<usize>,
    /// Base seed; run r uses seed + r.
    #[arg(long)]
    seed: Option<u64>,
    /// Stream fractions at which samples are evaluated, comma separated.
    #[arg(long, value_delimiter = ',')]
    eval_points: Vec<f64>,
    /// Edge reservoir size of streaming ES (default 4n).
    #[arg(long)]
    m: Option<usize>,
    /// BFS window size.
    #[arg(long)]
    wsize: Option<usize>,
    /// Forest fire burning probability.
    #[arg(long)]
    pf: Option<f64>,
    /// Skew divergence mixing weight.
    #[arg(long)]
    alpha: Option<f64>,
    /// Record wall-clock time per snapshot.
    #[arg(long)]
    timing: bool,
}

impl RunArgs {
    /// One config per (algorithm, phi) pair.
    fn configs(&self) -> Result<Vec<RunConfig>> {
        let base = match &self.config {
            Some(path) => {
                let mut c = RunConfig::from_file(path).with_context(|| format!("reading {}", path.display()))?;
                if let Some(spec) = self.dataset.spec() {
                    c.dataset = spec;
                }
                c
            }
            None => {
                let Some(spec) = self.dataset.spec() else {
                    bail!("give a dataset with --input, --synthetic or --config");
                };
                RunConfig::new(spec, Algorithm::Pies, 0.2)
            }
        };
        let algos = if self.algo.is_empty() { vec![base.algorithm] } else { self.algo.clone() };
        let phis = if self.phi.is_empty() { vec![base.phi] } else { self.phi.clone() };
        let mut out = Vec::new();
        for &algorithm in &algos {
            for &phi in &phis {
                let mut c = base.clone();
                c.algorithm = algorithm;
                c.phi = phi;
                if let Some(runs) = self.runs {
                    c.runs = runs;
                }
                if let Some(seed) = self.seed {
                    c.base_seed = seed;
                }
                if !self.eval_points.is_empty() {
                    c.eval_points = self.eval_points.clone();
                }
                if let Some(m) = self.m {
                    c.params.m = Some(m);
                }
                if let Some(w) = self.wsize {
                    c.params.wsize = w;
                }
                if let Some(pf) = self.pf {
                    c.params.p_f = pf;
                }
                if let Some(alpha) = self.alpha {
                    c.alpha = alpha;
                }
                c.record_timing |= self.timing;
                out.push(c);
            }
        }
        Ok(out)
    }
}

fn load(spec: &DatasetSpec) -> Result<Dataset> {
    let dataset = spec.load().with_context(|| format!("loading dataset {spec}"))?;
    log::info!(
        "{}: {} nodes, {} edges",
        dataset.name,
        dataset.node_count(),
        dataset.edge_count()
    );
    Ok(dataset)
}

/// Runs every config and writes each result to its own directory when
/// there are several, then prints the combined table.
fn run_all(
    configs: &[RunConfig],
    out_dir: &Path,
    sort_by_structure: bool,
    run: impl Fn(&RunConfig, &Dataset) -> streamsamp::Result<RunResult>,
) -> Result<()> {
    let dataset = load(&configs[0].dataset)?;
    let mut results = Vec::new();
    for c in configs {
        let result = run(c, &dataset).with_context(|| format!("{} at phi = {}", c.algorithm, c.phi))?;
        let dir = if configs.len() == 1 {
            out_dir.to_path_buf()
        } else {
            out_dir.join(format!("{}_{}", c.algorithm, c.phi))
        };
        write_outputs(&result, &dir).with_context(|| format!("writing {}", dir.display()))?;
        for f in &result.failures {
            log::warn!("{} run {} at {}: {}", c.algorithm, f.run, f.eval_point, f.message);
        }
        results.push(result);
    }
    let report = compare_report(&results, sort_by_structure)?;
    if configs.len() > 1 {
        let path = out_dir.join("aggregate.csv");
        report.write_csv(fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?)?;
    }
    print!("{report}");
    eprintln!("results written to {}", out_dir.display());
    Ok(())
}

fn main() -> Result<()> {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match Cli::parse().command {
        Command::Sample { run, output } => {
            let configs = run.configs()?;
            let [config] = configs.as_slice() else {
                bail!("sample takes a single algorithm and phi");
            };
            let dataset = load(&config.dataset)?;
            let sample = sample_once(config, &dataset, 0)?;
            eprintln!(
                "sampled {} nodes and {} edges with {}",
                sample.node_count(),
                sample.edge_count(),
                config.algorithm
            );
            match output {
                Some(path) => write_sample_edges(&sample, dataset.edges.original_ids(), &path, EdgeListFormat::Whitespace)?,
                None => {
                    let ids = dataset.edges.original_ids();
                    let pairs = sample
                        .sorted_edges()
                        .into_iter()
                        .map(|e| (ids[e.u() as usize], ids[e.v() as usize]));
                    let stdout = io::stdout();
                    let mut out = stdout.lock();
                    write_edge_list(&mut out, pairs, EdgeListFormat::Whitespace)?;
                    out.flush()?;
                }
            }
        }
        Command::Sweep {
            run,
            out_dir,
            sort_by_structure,
        } => run_all(&run.configs()?, &out_dir, sort_by_structure, run_sweep_on)?,
        Command::BackInTime { run, fraction, out_dir } => {
            let mut configs = run.configs()?;
            for c in &mut configs {
                c.back_in_time_fraction.get_or_insert(fraction);
            }
            run_all(&configs, &out_dir, false, run_back_in_time_on)?;
        }
        Command::Summarize { dataset } => {
            let Some(spec) = dataset.spec() else {
                bail!("give a dataset with --input or --synthetic");
            };
            let summary = summarize(&load(&spec)?.graph);
            println!("{}", serde_json::to_string_pretty(&summary)?);
        }
        Command::Report {
            results,
            sort_by_structure,
            csv,
        } => {
            let loaded = results
                .iter()
                .map(|path| {
                    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                    serde_json::from_str::<RunResult>(&text).with_context(|| format!("parsing {}", path.display()))
                })
                .collect::<Result<Vec<_>>>()?;
            let report = compare_report(&loaded, sort_by_structure)?;
            if let Some(path) = csv {
                report.write_csv(fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?)?;
            }
            print!("{report}");
        }
    }
    Ok(())
}
