use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use bkcheck::enumeration::{canonical_form, Enumerator};
use bkcheck::harness::{
    lemma_check, par_map, parse_graph6, sample_families, sharpness_witness, sweep_enumerated, verify_graph,
    write_graph6, RunConfig, VerifyOptions,
};
use bkcheck::invariants::{brooks_verdict_with, chromatic_number_with, max_clique_with, bk_bound, Budget};
use bkcheck::patterns::classify_graph_with;
use bkcheck::{Error, Graph};

const EXIT_CRITICAL: u8 = 2;
const EXIT_INCOMPLETE: u8 = 3;

#[derive(Parser)]
#[command(name = "bkcheck", version, about = "Exact checks of χ ≤ max{ω, Δ − 1} on small graphs")]
struct Cli {
    /// Read graph6 lines from FILE instead of standard input.
    #[arg(long = "in", global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Write JSON lines to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,
    /// Worker threads; 0 lets the pool decide.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every graph on N vertices up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Class memberships with witnesses for each input graph.
    Classify,
    /// Δ, ω, χ and Brooks' verdict for each input graph.
    Invariants,
    /// Full report for each input graph.
    Verify,
    /// Exhaustive checks over all graphs up to N_MAX vertices.
    Sweep {
        #[arg(long)]
        n_max: usize,
    },
    /// Seeded family sampling with verification.
    Sample {
        /// JSON run configuration; omitted fields take their defaults.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Report for C5[K3].
    Sharpness,
    /// Smallest-counterexample structure checks for each input graph.
    LemmaCheck,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Enumerate { .. } => "enumerate",
            Command::Classify => "classify",
            Command::Invariants => "invariants",
            Command::Verify => "verify",
            Command::Sweep { .. } => "sweep",
            Command::Sample { .. } => "sample",
            Command::Sharpness => "sharpness",
            Command::LemmaCheck => "lemma-check",
        }
    }
}

struct Output {
    w: Box<dyn Write>,
    critical: bool,
    incomplete: bool,
}

impl Output {
    /// Writes `value` as one JSON line with a leading `"record"` key.
    fn emit<T: Serialize>(&mut self, record: &str, value: &T) -> Result<(), Error> {
        let body = serde_json::to_string(value)?;
        let tag = serde_json::to_string(record)?;
        match body.strip_prefix('{') {
            Some("}") => writeln!(self.w, "{{\"record\":{tag}}}")?,
            Some(rest) => writeln!(self.w, "{{\"record\":{tag},{rest}")?,
            None => writeln!(self.w, "{{\"record\":{tag},\"value\":{body}}}")?,
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct Header<'a> {
    tool: &'a str,
    version: &'a str,
    config: &'a RunConfig,
}

#[derive(Serialize)]
struct EnumeratedGraph {
    index: usize,
    n: usize,
    graph6: String,
    certificate: String,
}

#[derive(Serialize)]
struct InvariantsRecord {
    graph_id: String,
    n: usize,
    delta: usize,
    omega: Option<usize>,
    chi: Option<usize>,
    brooks: Option<bkcheck::invariants::BrooksVerdict>,
    bound: Option<usize>,
    inequality_holds: Option<bool>,
    complete: bool,
}

#[derive(Serialize)]
struct ClassifyRecord {
    graph_id: String,
    #[serde(flatten)]
    memberships: bkcheck::patterns::ClassMembership,
}

fn read_graphs(input: Option<&PathBuf>) -> Result<Vec<Graph>, Error> {
    let reader: Box<dyn BufRead> = match input {
        Some(path) => Box::new(BufReader::new(File::open(path)?)),
        None => Box::new(BufReader::new(io::stdin())),
    };
    let mut graphs = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        graphs.push(parse_graph6(line)?);
    }
    Ok(graphs)
}

fn invariants(g: &Graph, budget: Budget) -> InvariantsRecord {
    let delta = g.max_degree();
    let omega = max_clique_with(g, budget).ok().map(|c| c.omega);
    let chi = chromatic_number_with(g, budget).ok().map(|c| c.chi);
    let brooks = if g.is_connected() { brooks_verdict_with(g, budget).ok() } else { None };
    let bound = omega.map(|w| bk_bound(w, delta));
    let complete = omega.is_some() && chi.is_some() && (brooks.is_some() || !g.is_connected());
    InvariantsRecord {
        graph_id: write_graph6(g),
        n: g.n(),
        delta,
        omega,
        chi,
        brooks,
        bound,
        inequality_holds: chi.zip(bound).map(|(c, b)| c <= b),
        complete,
    }
}

fn run(cli: Cli) -> Result<Output, Error> {
    let mut cfg = match &cli.command {
        Command::Sample { config: Some(path) } => serde_json::from_reader(BufReader::new(File::open(path)?))?,
        _ => RunConfig::default(),
    };
    cfg.mode = cli.command.name().into();
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    if let Some(b) = cli.budget_nodes {
        cfg.budget_nodes = b;
    }
    if let Some(j) = cli.jobs {
        cfg.jobs = j;
    }
    if let Some(out) = &cli.out {
        cfg.output = Some(out.clone());
    }
    cfg.validate().map_err(Error::Config)?;

    let w: Box<dyn Write> = match &cfg.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let mut out = Output { w, critical: false, incomplete: false };
    out.emit("header", &Header { tool: "bkcheck", version: env!("CARGO_PKG_VERSION"), config: &cfg })?;

    let budget = Budget::nodes(cfg.budget_nodes);
    let opts = VerifyOptions { budget, dense: cfg.dense, record_timings: cfg.record_timings };
    match cli.command {
        Command::Enumerate { n } => {
            for (index, g) in Enumerator::default().graphs(n)?.into_iter().enumerate() {
                let certificate = canonical_form(&g)?.to_string();
                out.emit("graph", &EnumeratedGraph { index, n, graph6: write_graph6(&g), certificate })?;
            }
        }
        Command::Classify => {
            let graphs = read_graphs(cli.input.as_ref())?;
            let records = par_map(cfg.jobs, &graphs, |g| ClassifyRecord {
                graph_id: write_graph6(g),
                memberships: classify_graph_with(g, cfg.dense),
            });
            for r in &records {
                out.emit("classify", r)?;
            }
        }
        Command::Invariants => {
            let graphs = read_graphs(cli.input.as_ref())?;
            for r in par_map(cfg.jobs, &graphs, |g| invariants(g, budget)) {
                out.incomplete |= !r.complete;
                out.emit("invariants", &r)?;
            }
        }
        Command::Verify => {
            let graphs = read_graphs(cli.input.as_ref())?;
            for r in par_map(cfg.jobs, &graphs, |g| verify_graph(g, &opts)) {
                out.critical |= r.critical;
                out.incomplete |= !r.complete;
                out.emit("report", &r)?;
            }
        }
        Command::Sweep { n_max } => {
            let summary = sweep_enumerated(n_max, &cfg)?;
            out.critical |= summary.totals.critical > 0;
            out.incomplete |= summary.totals.incomplete > 0;
            out.emit("sweep", &summary)?;
        }
        Command::Sample { .. } => {
            let (summary, reports) = sample_families(&cfg)?;
            for r in &reports {
                out.emit("report", r)?;
            }
            out.critical |= summary.totals.critical > 0;
            out.incomplete |= summary.totals.incomplete > 0;
            out.emit("summary", &summary)?;
        }
        Command::Sharpness => {
            let r = sharpness_witness(&opts);
            out.incomplete |= !r.complete;
            out.emit("report", &r)?;
        }
        Command::LemmaCheck => {
            let graphs = read_graphs(cli.input.as_ref())?;
            for r in par_map(cfg.jobs, &graphs, |g| lemma_check(g, budget)) {
                match r {
                    Ok(r) => {
                        out.critical |= r.candidate;
                        out.emit("lemma", &r)?;
                    }
                    Err(e) => {
                        out.incomplete = true;
                        out.emit("error", &e.to_string())?;
                    }
                }
            }
        }
    }
    out.w.flush()?;
    Ok(out)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) if out.critical => ExitCode::from(EXIT_CRITICAL),
        Ok(out) if out.incomplete => ExitCode::from(EXIT_INCOMPLETE),
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("bkcheck: {e}");
            ExitCode::FAILURE
        }
    }
}
