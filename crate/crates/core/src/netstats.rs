//! Network-level summaries: degree assortativity, histograms of per-edge
//! values and descriptive statistics of a curvature batch.

use num::{Integer, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::curvature::CurvatureRecord;
use crate::network::{component_sizes, Network, NetworkKind};
use crate::rational::{int, to_decimal_string, to_exact_string, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StatsError {
    #[error("assortativity needs a graph, got {0}")]
    NotAGraph(NetworkKind),
    #[error("histogram needs at least one bin")]
    NoBins,
    #[error("bin edges must be strictly ascending (position {0})")]
    UnsortedEdges(usize),
    #[error("bin width must be positive")]
    BadWidth,
    #[error("{records} records for a network with {edges} edges")]
    RecordCount { records: usize, edges: usize },
    #[error("record {position} belongs to edge {found}")]
    RecordOrder { position: usize, found: usize },
}

/// Pearson correlation of endpoint degrees over edges.
///
/// Undirected graphs use both orientations of every edge with full degrees;
/// directed graphs pair the out-degree of the tail with the in-degree of the
/// head. `Ok(None)` when there are no edges or a marginal is constant.
pub fn assortativity(net: &Network) -> Result<Option<f64>, StatsError> {
    let mut pairs: Vec<(f64, f64)> = Vec::with_capacity(2 * net.edge_count());
    match net.kind() {
        NetworkKind::UndirectedGraph => {
            for e in net.edges() {
                let (a, b) = e.endpoints();
                let (da, db) = (net.degree(a) as f64, net.degree(b) as f64);
                pairs.push((da, db));
                pairs.push((db, da));
            }
        }
        NetworkKind::DirectedGraph => {
            for e in net.edges() {
                let (t, h) = e.endpoints();
                pairs.push((net.out_degree(t) as f64, net.in_degree(h) as f64));
            }
        }
        kind => return Err(StatsError::NotAGraph(kind)),
    }
    Ok(pearson(&pairs))
}

fn pearson(pairs: &[(f64, f64)]) -> Option<f64> {
    if pairs.is_empty() {
        return None;
    }
    let n = pairs.len() as f64;
    let mx = pairs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pairs.iter().map(|p| p.1).sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for &(x, y) in pairs {
        let (dx, dy) = (x - mx, y - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some(sxy / (sxx.sqrt() * syy.sqrt()))
}

/// How values are grouped into bins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BinSpec {
    /// Explicit ascending edges; `k` edges make `k - 1` bins.
    Edges(Vec<Rational>),
    /// Unit bins `[k, k+1)` covering the observed range.
    UnitIntegers,
    /// Fixed-width bins from `lo` to at least `hi`.
    Width {
        lo: Rational,
        hi: Rational,
        width: Rational,
    },
}

impl BinSpec {
    /// 0.05-wide bins on `[-2, 1]`, the range of every Ollivier curvature.
    pub fn ollivier_default() -> Self {
        BinSpec::Width {
            lo: int(-2),
            hi: int(1),
            width: Rational::new(1.into(), 20.into()),
        }
    }

    fn resolve(&self, values: &[Rational]) -> Result<Vec<Rational>, StatsError> {
        let edges = match self {
            BinSpec::Edges(edges) => edges.clone(),
            BinSpec::UnitIntegers => {
                let lo = values.iter().min().map_or_else(Rational::zero, |v| v.floor());
                let hi = values.iter().max().map_or_else(Rational::zero, |v| v.floor());
                let mut edges = Vec::new();
                let mut k = lo;
                while k <= hi {
                    edges.push(k.clone());
                    k += int(1);
                }
                edges.push(k);
                edges
            }
            BinSpec::Width { lo, hi, width } => {
                if width <= &Rational::zero() {
                    return Err(StatsError::BadWidth);
                }
                let mut edges = vec![lo.clone()];
                while edges.last().expect("nonempty") < hi {
                    let next = edges.last().expect("nonempty") + width;
                    edges.push(next);
                }
                if edges.len() == 1 {
                    edges.push(lo + width);
                }
                edges
            }
        };
        if edges.len() < 2 {
            return Err(StatsError::NoBins);
        }
        if let Some(i) = edges.windows(2).position(|w| w[0] >= w[1]) {
            return Err(StatsError::UnsortedEdges(i + 1));
        }
        Ok(edges)
    }
}

/// Left-closed, right-open bins; the last bin also includes its right edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Histogram {
    #[serde(serialize_with = "ser_rationals")]
    pub edges: Vec<Rational>,
    pub counts: Vec<usize>,
    pub underflow: usize,
    pub overflow: usize,
}

impl Histogram {
    pub fn total(&self) -> usize {
        self.counts.iter().sum::<usize>() + self.underflow + self.overflow
    }
}

pub fn histogram(values: &[Rational], spec: &BinSpec) -> Result<Histogram, StatsError> {
    let edges = spec.resolve(values)?;
    let mut hist = Histogram {
        counts: vec![0; edges.len() - 1],
        edges,
        underflow: 0,
        overflow: 0,
    };
    let last = hist.edges.len() - 1;
    for v in values {
        if v < &hist.edges[0] {
            hist.underflow += 1;
        } else if v > &hist.edges[last] {
            hist.overflow += 1;
        } else if v == &hist.edges[last] {
            hist.counts[last - 1] += 1;
        } else {
            let i = hist.edges.partition_point(|e| e <= v) - 1;
            hist.counts[i] += 1;
        }
    }
    Ok(hist)
}

fn ser_rational<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&to_exact_string(v))
}

fn ser_rationals<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(to_exact_string))
}

/// Descriptive statistics of one measure over all edges where it is defined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeasureSummary {
    pub name: String,
    pub count: usize,
    #[serde(serialize_with = "ser_rational")]
    pub min: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub max: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub mean: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub median: Rational,
}

impl MeasureSummary {
    /// `None` for an empty value list.
    pub fn of(name: &str, values: &[Rational]) -> Option<Self> {
        if values.is_empty() {
            return None;
        }
        let mut sorted = values.to_vec();
        sorted.sort();
        let n = sorted.len();
        let median = if n.is_odd() {
            sorted[n / 2].clone()
        } else {
            (&sorted[n / 2 - 1] + &sorted[n / 2]) / int(2)
        };
        let mean = sorted.iter().sum::<Rational>() / int(n as i64);
        Some(MeasureSummary {
            name: name.to_owned(),
            count: n,
            min: sorted[0].clone(),
            max: sorted[n - 1].clone(),
            mean,
            median,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SummaryReport {
    pub kind: NetworkKind,
    pub nodes: usize,
    pub edges: usize,
    pub components: usize,
    pub giant_component_nodes: usize,
    /// `None` when undefined or not applicable (hypergraphs).
    pub assortativity: Option<f64>,
    /// Directed graphs: vertices with more than 100 outgoing edges.
    pub out_degree_over_100: Option<usize>,
    pub measures: Vec<MeasureSummary>,
}

/// Per-measure value lists extracted from a batch, in a fixed order.
pub fn measure_values(records: &[CurvatureRecord]) -> Vec<(&'static str, Vec<Rational>)> {
    let forman: Vec<Rational> = records.iter().filter_map(|r| r.forman.clone()).collect();
    let ddiff: Vec<Rational> = records
        .iter()
        .filter_map(|r| r.degree_difference.clone())
        .collect();
    let ollivier: Vec<Rational> = records
        .iter()
        .filter_map(|r| r.ollivier.as_ref().map(|o| o.value.clone()))
        .collect();
    let requested = |f: &dyn Fn(&CurvatureRecord) -> bool| records.iter().any(f);
    let mut out = Vec::new();
    if requested(&|r| r.forman.is_some()) {
        out.push(("forman", forman));
    }
    if requested(&|r| r.degree_difference.is_some()) {
        out.push(("degree_difference", ddiff));
    }
    if requested(&|r| r.ollivier.is_some()) {
        out.push(("ollivier", ollivier));
    }
    out
}

pub fn summarize(net: &Network, records: &[CurvatureRecord]) -> Result<SummaryReport, StatsError> {
    if records.len() != net.edge_count() {
        return Err(StatsError::RecordCount {
            records: records.len(),
            edges: net.edge_count(),
        });
    }
    if let Some((position, r)) = records.iter().enumerate().find(|(i, r)| r.edge.0 != *i) {
        return Err(StatsError::RecordOrder {
            position,
            found: r.edge.0,
        });
    }
    let sizes = component_sizes(net);
    let assortativity = match net.kind() {
        NetworkKind::DirectedHypergraph => None,
        _ => assortativity(net)?,
    };
    let out_degree_over_100 = (net.kind() == NetworkKind::DirectedGraph)
        .then(|| net.nodes().filter(|&v| net.out_degree(v) > 100).count());
    let measures = measure_values(records)
        .into_iter()
        .filter_map(|(name, values)| MeasureSummary::of(name, &values))
        .collect();
    Ok(SummaryReport {
        kind: net.kind(),
        nodes: net.node_count(),
        edges: net.edge_count(),
        components: sizes.len(),
        giant_component_nodes: sizes.first().copied().unwrap_or(0),
        assortativity,
        out_degree_over_100,
        measures,
    })
}

impl SummaryReport {
    /// `key: value` lines.
    pub fn to_key_value(&self) -> String {
        let mut lines = vec![
            format!("kind: {}", self.kind),
            format!("nodes: {}", self.nodes),
            format!("edges: {}", self.edges),
            format!("components: {}", self.components),
            format!("giant_component_nodes: {}", self.giant_component_nodes),
        ];
        if self.kind.is_graph() {
            lines.push(match self.assortativity {
                Some(r) => format!("assortativity: {r:.9}"),
                None => "assortativity: undefined".to_owned(),
            });
        }
        if let Some(n) = self.out_degree_over_100 {
            lines.push(format!("out_degree_over_100: {n}"));
        }
        for m in &self.measures {
            lines.push(format!("{}.count: {}", m.name, m.count));
            for (key, v) in [("min", &m.min), ("max", &m.max), ("mean", &m.mean), ("median", &m.median)] {
                lines.push(format!(
                    "{}.{key}: {} ({})",
                    m.name,
                    to_exact_string(v),
                    to_decimal_string(v, 6)
                ));
            }
        }
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}
