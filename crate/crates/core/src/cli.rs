//! Command-line front end. Loads a network, runs a curvature batch and writes
//! `edges.csv`, `summary.txt`, `summary.json` and one `hist_<measure>.csv`
//! per computed measure into the output directory.
//!
//! Exit codes: 0 success, 1 unreadable or malformed input, 2 inconsistent
//! options, 3 output errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::curvature::{compute_all, CurvatureRecord, HyperOptions, Measures};
use crate::netstats::{histogram, measure_values, summarize, BinSpec, Histogram, SummaryReport};
use crate::network::{
    largest_component, parse_edge_list, parse_hyperedges, Loaded, Network, NetworkKind,
};
use crate::rational::{parse_rational, to_decimal_string, to_exact_string, Rational};

#[derive(Parser, Debug)]
#[command(name = "edgecurv", version, about = "Edge curvatures of graphs, digraphs and directed hypergraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Undirected edge list: `u v [weight]` per line.
    Graph(RunConfig),
    /// Directed edge list: `tail head [weight]` per line.
    Digraph(RunConfig),
    /// Hyperedge lines: `A,B -> C,D | label | weight`, `<->` for reversible.
    Hypergraph(RunConfig),
}

impl Command {
    pub fn into_config(self) -> RunConfig {
        let (kind, mut cfg) = match self {
            Command::Graph(c) => (NetworkKind::UndirectedGraph, c),
            Command::Digraph(c) => (NetworkKind::DirectedGraph, c),
            Command::Hypergraph(c) => (NetworkKind::DirectedHypergraph, c),
        };
        cfg.kind = kind;
        cfg
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MeasureName {
    Forman,
    Ddiff,
    Ollivier,
}

#[derive(Args, Clone, Debug)]
pub struct RunConfig {
    #[arg(skip = NetworkKind::UndirectedGraph)]
    pub kind: NetworkKind,
    pub input: PathBuf,
    /// Directory for the output tables; created if missing.
    #[arg(short, long, default_value = "out")]
    pub out_dir: PathBuf,
    /// Read and use edge weights.
    #[arg(long)]
    pub weighted: bool,
    /// Turn each `<->` line into a forward and a backward hyperedge.
    #[arg(long)]
    pub split_reversible: bool,
    /// Restrict a graph to its largest (weakly) connected component.
    #[arg(long)]
    pub giant_component: bool,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [MeasureName::Forman, MeasureName::Ddiff, MeasureName::Ollivier])]
    pub measures: Vec<MeasureName>,
    /// Histogram bins for every measure: `unit`, `width:LO:HI:W` or
    /// `edges:E1,E2,...`. Default: unit bins, 0.05 bins on [-2, 1] for Ollivier.
    #[arg(long, value_parser = parse_bins)]
    pub bins: Option<BinSpec>,
    /// Let a hyperedge split mass through itself.
    #[arg(long)]
    pub include_self_incidence: bool,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,
}

impl RunConfig {
    pub fn new(kind: NetworkKind, input: impl Into<PathBuf>, out_dir: impl Into<PathBuf>) -> Self {
        RunConfig {
            kind,
            input: input.into(),
            out_dir: out_dir.into(),
            weighted: false,
            split_reversible: false,
            giant_component: false,
            measures: vec![MeasureName::Forman, MeasureName::Ddiff, MeasureName::Ollivier],
            bins: None,
            include_self_incidence: false,
            threads: None,
        }
    }

    fn selected(&self) -> Measures {
        Measures {
            forman: self.measures.contains(&MeasureName::Forman),
            degree_difference: self.measures.contains(&MeasureName::Ddiff),
            ollivier: self.measures.contains(&MeasureName::Ollivier),
        }
    }

    fn check(&self) -> Result<(), RunError> {
        let hyper = self.kind == NetworkKind::DirectedHypergraph;
        let contract = |msg: &str| Err(RunError::Contract(msg.to_owned()));
        if self.weighted && self.measures.contains(&MeasureName::Ollivier) {
            return contract("Ollivier-Ricci curvature needs unweighted mode; drop --weighted or select --measures forman,ddiff");
        }
        if self.split_reversible && !hyper {
            return contract("--split-reversible applies to hypergraphs only");
        }
        if self.include_self_incidence && !hyper {
            return contract("--include-self-incidence applies to hypergraphs only");
        }
        if self.giant_component && hyper {
            return contract("--giant-component applies to graphs only");
        }
        if self.measures.is_empty() {
            return contract("no measures selected");
        }
        Ok(())
    }
}

pub fn parse_bins(s: &str) -> Result<BinSpec, String> {
    let number = |t: &str| parse_rational(t.trim()).ok_or_else(|| format!("invalid number {t:?}"));
    if s == "unit" {
        return Ok(BinSpec::UnitIntegers);
    }
    if let Some(rest) = s.strip_prefix("width:") {
        let parts: Vec<&str> = rest.split(':').collect();
        if let [lo, hi, width] = parts[..] {
            return Ok(BinSpec::Width {
                lo: number(lo)?,
                hi: number(hi)?,
                width: number(width)?,
            });
        }
        return Err("expected width:LO:HI:W".to_owned());
    }
    if let Some(rest) = s.strip_prefix("edges:") {
        return rest.split(',').map(number).collect::<Result<_, _>>().map(BinSpec::Edges);
    }
    Err(format!("unknown bin spec {s:?}; use unit, width:LO:HI:W or edges:E1,E2,..."))
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error("{0}")]
    Contract(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Parse { .. } => 1,
            RunError::Contract(_) => 2,
            RunError::Io { .. } => 3,
        }
    }
}

fn io_error(path: &Path) -> impl FnOnce(io::Error) -> RunError + '_ {
    move |source| RunError::Io {
        path: path.to_owned(),
        source,
    }
}

/// What a run loaded and produced.
#[derive(Debug)]
pub struct RunOutcome {
    pub network: Network,
    pub records: Vec<CurvatureRecord>,
    pub summary: SummaryReport,
}

pub fn load(cfg: &RunConfig) -> Result<Loaded, RunError> {
    let bytes = fs::read(&cfg.input).map_err(|source| match source.kind() {
        io::ErrorKind::NotFound | io::ErrorKind::PermissionDenied => RunError::Parse {
            path: cfg.input.clone(),
            message: source.to_string(),
        },
        _ => RunError::Io {
            path: cfg.input.clone(),
            source,
        },
    })?;
    let parse_err = |message: String| RunError::Parse {
        path: cfg.input.clone(),
        message,
    };
    let text = String::from_utf8(bytes).map_err(|e| parse_err(format!("not UTF-8: {e}")))?;
    let mut loaded = match cfg.kind {
        NetworkKind::DirectedHypergraph => parse_hyperedges(&text, cfg.split_reversible),
        kind => parse_edge_list(&text, kind, cfg.weighted),
    }
    .map_err(|e| parse_err(e.to_string()))?;
    if cfg.kind == NetworkKind::DirectedHypergraph {
        loaded.network = loaded.network.with_weighted(cfg.weighted);
    }
    if cfg.giant_component {
        loaded.network =
            largest_component(&loaded.network).map_err(|e| RunError::Contract(e.to_string()))?;
    }
    Ok(loaded)
}

pub fn run(cfg: &RunConfig) -> Result<RunOutcome, RunError> {
    cfg.check()?;
    let loaded = load(cfg)?;
    let net = loaded.network;
    let hyper = HyperOptions {
        include_self_incidence: cfg.include_self_incidence,
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cfg.threads {
        pool = pool.num_threads(n.into());
    }
    let pool = pool
        .build()
        .map_err(|e| RunError::Contract(format!("cannot start worker pool: {e}")))?;
    let records = pool
        .install(|| compute_all(&net, cfg.selected(), hyper))
        .map_err(|e| RunError::Contract(e.to_string()))?;
    let summary = summarize(&net, &records).map_err(|e| RunError::Contract(e.to_string()))?;

    let mut histograms = Vec::new();
    for (name, values) in measure_values(&records) {
        let spec = match (&cfg.bins, name) {
            (Some(spec), _) => spec.clone(),
            (None, "ollivier") => BinSpec::ollivier_default(),
            (None, _) => BinSpec::UnitIntegers,
        };
        let hist = histogram(&values, &spec).map_err(|e| RunError::Contract(e.to_string()))?;
        histograms.push((name, hist));
    }

    let out = &cfg.out_dir;
    fs::create_dir_all(out).map_err(io_error(out))?;
    write_file(&out.join("edges.csv"), &edges_csv(&net, &records, cfg.selected())?)?;
    let mut text = format!(
        "input: {}\nduplicates_merged: {}\nself_loops_dropped: {}\n",
        cfg.input.display(),
        loaded.duplicates,
        loaded.self_loops
    );
    text.push_str(&summary.to_key_value());
    write_file(&out.join("summary.txt"), text.as_bytes())?;
    let json = SummaryDocument {
        input: cfg.input.display().to_string(),
        duplicates_merged: loaded.duplicates,
        self_loops_dropped: loaded.self_loops,
        summary: &summary,
        histograms: histograms.iter().map(|(n, h)| (*n, h)).collect(),
    };
    let mut json = serde_json::to_vec_pretty(&json).expect("summary serializes");
    json.push(b'\n');
    write_file(&out.join("summary.json"), &json)?;
    for (name, hist) in &histograms {
        write_file(&out.join(format!("hist_{name}.csv")), &histogram_csv(hist)?)?;
    }
    Ok(RunOutcome {
        network: net,
        records,
        summary,
    })
}

#[derive(Serialize)]
struct SummaryDocument<'a> {
    input: String,
    duplicates_merged: usize,
    self_loops_dropped: usize,
    summary: &'a SummaryReport,
    histograms: Vec<(&'static str, &'a Histogram)>,
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), RunError> {
    let mut f = fs::File::create(path).map_err(io_error(path))?;
    f.write_all(bytes).map_err(io_error(path))
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<Vec<u8>, RunError> {
    w.into_inner()
        .map_err(|e| RunError::Contract(format!("csv buffer: {e}")))
}

fn csv_error(e: csv::Error) -> RunError {
    RunError::Contract(format!("csv: {e}"))
}

fn exact_and_decimal(v: Option<&Rational>) -> [String; 2] {
    match v {
        Some(v) => [to_exact_string(v), to_decimal_string(v, 6)],
        None => [String::new(), String::new()],
    }
}

/// Per-edge table in edge order.
pub fn edges_csv(net: &Network, records: &[CurvatureRecord], m: Measures) -> Result<Vec<u8>, RunError> {
    let hyper = net.kind() == NetworkKind::DirectedHypergraph;
    let mut header: Vec<&str> = vec!["edge"];
    if hyper {
        header.push("label");
    }
    header.extend(["tail", "head", "tail_size", "head_size"]);
    if m.forman {
        header.extend(["forman", "forman_decimal"]);
    }
    if m.degree_difference {
        header.extend(["degree_difference", "degree_difference_decimal"]);
    }
    if m.ollivier {
        header.extend(["ollivier", "ollivier_decimal", "w1", "m0", "m1", "m2", "m3"]);
    }
    if hyper {
        header.extend(["masses", "holes"]);
    }
    let mut w = csv_writer();
    w.write_record(&header).map_err(csv_error)?;
    let names = |nodes: &[crate::network::NodeId]| -> String {
        nodes.iter().map(|&v| net.label(v)).collect::<Vec<_>>().join(";")
    };
    for r in records {
        let edge = &net.edges()[r.edge.0];
        let mut row = vec![r.edge.0.to_string()];
        if hyper {
            row.push(edge.label().to_owned());
        }
        row.extend([
            names(edge.tail()),
            names(edge.head()),
            r.tail_size.to_string(),
            r.head_size.to_string(),
        ]);
        if m.forman {
            row.extend(exact_and_decimal(r.forman.as_ref()));
        }
        if m.degree_difference {
            row.extend(exact_and_decimal(r.degree_difference.as_ref()));
        }
        if m.ollivier {
            match &r.ollivier {
                Some(o) => {
                    row.extend(exact_and_decimal(Some(&o.value)));
                    row.push(to_exact_string(o.wasserstein()));
                    row.extend(o.plan.moved.iter().map(to_exact_string));
                }
                None => row.extend(std::iter::repeat_n(String::new(), 7)),
            }
        }
        if hyper {
            let count = |c: Option<usize>| c.map_or_else(String::new, |c| c.to_string());
            row.push(count(r.masses));
            row.push(count(r.holes));
        }
        w.write_record(&row).map_err(csv_error)?;
    }
    finish(w)
}

/// `lo,hi,count` rows; underflow and overflow as open-ended first and last rows.
pub fn histogram_csv(h: &Histogram) -> Result<Vec<u8>, RunError> {
    let mut w = csv_writer();
    w.write_record(["lo", "hi", "count"]).map_err(csv_error)?;
    let first = to_exact_string(&h.edges[0]);
    let last = to_exact_string(h.edges.last().expect("at least two edges"));
    w.write_record(["-inf", &first, &h.underflow.to_string()])
        .map_err(csv_error)?;
    for (pair, count) in h.edges.windows(2).zip(&h.counts) {
        w.write_record([to_exact_string(&pair[0]), to_exact_string(&pair[1]), count.to_string()])
            .map_err(csv_error)?;
    }
    w.write_record([last.as_str(), "inf", &h.overflow.to_string()])
        .map_err(csv_error)?;
    finish(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn bin_specs() {
        assert_eq!(parse_bins("unit"), Ok(BinSpec::UnitIntegers));
        assert_eq!(
            parse_bins("edges:0,1/2,1"),
            Ok(BinSpec::Edges(vec![int(0), crate::rational::ratio(1, 2), int(1)]))
        );
        assert!(matches!(parse_bins("width:-2:1:0.05"), Ok(BinSpec::Width { .. })));
        assert!(parse_bins("width:1:2").is_err());
        assert!(parse_bins("log").is_err());
    }

    #[test]
    fn option_conflicts() {
        let mut cfg = RunConfig::new(NetworkKind::UndirectedGraph, "x", "y");
        cfg.weighted = true;
        assert_eq!(cfg.check().unwrap_err().exit_code(), 2);
        cfg.measures = vec![MeasureName::Forman];
        assert!(cfg.check().is_ok());
        cfg.split_reversible = true;
        assert_eq!(cfg.check().unwrap_err().exit_code(), 2);
        let mut h = RunConfig::new(NetworkKind::DirectedHypergraph, "x", "y");
        h.giant_component = true;
        assert_eq!(h.check().unwrap_err().exit_code(), 2);
    }

    #[test]
    fn clap_definition() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
        let cli = Cli::parse_from(["edgecurv", "digraph", "in.txt", "--measures", "forman,ollivier", "--threads", "2"]);
        let cfg = cli.command.into_config();
        assert_eq!(cfg.kind, NetworkKind::DirectedGraph);
        assert_eq!(cfg.measures, vec![MeasureName::Forman, MeasureName::Ollivier]);
        assert_eq!(cfg.threads, Some(2));
    }
}
