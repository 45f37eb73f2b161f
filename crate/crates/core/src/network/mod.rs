//! Immutable graphs and directed hypergraphs with prebuilt incidence indexes.
//!
//! All three network kinds share one representation. A graph edge is stored
//! with a single tail and a single head so the curvature kernels can treat
//! edges and hyperedges through the same slice-based accessors.

mod component;
mod parse;

use std::collections::HashMap;
use std::fmt;

use num::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{to_exact_string, Rational};

pub use component::{component_sizes, largest_component};
pub use parse::{parse_edge_list, parse_hyperedges, Loaded, ParseError, ParseErrorKind};

/// Dense node index, contiguous `0..n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NodeId(pub usize);

/// Position of an edge or hyperedge in input order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeId(pub usize);

impl NodeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NetworkKind {
    UndirectedGraph,
    DirectedGraph,
    DirectedHypergraph,
}

impl NetworkKind {
    pub fn is_graph(self) -> bool {
        !matches!(self, NetworkKind::DirectedHypergraph)
    }
}

impl fmt::Display for NetworkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NetworkKind::UndirectedGraph => "undirected-graph",
            NetworkKind::DirectedGraph => "directed-graph",
            NetworkKind::DirectedHypergraph => "directed-hypergraph",
        })
    }
}

/// An edge or a directed hyperedge. Graph edges have exactly one tail and one
/// head node; for undirected graphs the orientation is just input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    tail: Vec<NodeId>,
    head: Vec<NodeId>,
    weight: Rational,
    label: String,
}

impl Edge {
    /// Inputs (educts). Sorted, no duplicates.
    pub fn tail(&self) -> &[NodeId] {
        &self.tail
    }

    /// Outputs (products). Sorted, no duplicates.
    pub fn head(&self) -> &[NodeId] {
        &self.head
    }

    pub fn weight(&self) -> &Rational {
        &self.weight
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Endpoints of a graph edge. Meaningless for hyperedges with larger sides.
    pub fn endpoints(&self) -> (NodeId, NodeId) {
        (self.tail[0], self.head[0])
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NetworkError {
    #[error("network is empty")]
    Empty,
    #[error("operation requires a graph, found {0}")]
    NotAGraph(NetworkKind),
    #[error("hyperedge has both tail and head empty")]
    EmptyHyperedge,
    #[error("weight must be positive")]
    NonPositiveWeight,
    #[error("unknown node {0}")]
    UnknownNode(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Incidence {
    /// Edges having the node in their tail.
    outgoing: Vec<Vec<EdgeId>>,
    /// Edges having the node in their head.
    incoming: Vec<Vec<EdgeId>>,
    /// Edges touching the node at all, ascending, without repeats.
    incident: Vec<Vec<EdgeId>>,
}

impl Incidence {
    fn build(n: usize, edges: &[Edge]) -> Self {
        let mut inc = Incidence {
            outgoing: vec![Vec::new(); n],
            incoming: vec![Vec::new(); n],
            incident: vec![Vec::new(); n],
        };
        for (i, e) in edges.iter().enumerate() {
            let id = EdgeId(i);
            for v in &e.tail {
                inc.outgoing[v.0].push(id);
                inc.incident[v.0].push(id);
            }
            for v in &e.head {
                inc.incoming[v.0].push(id);
                if inc.incident[v.0].last() != Some(&id) {
                    inc.incident[v.0].push(id);
                }
            }
        }
        inc
    }
}

/// Immutable network. Build one with [`NetworkBuilder`] or the parsers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Network {
    kind: NetworkKind,
    weighted: bool,
    labels: Vec<String>,
    ids: HashMap<String, NodeId>,
    edges: Vec<Edge>,
    incidence: Incidence,
}

impl Network {
    pub fn kind(&self) -> NetworkKind {
        self.kind
    }

    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    /// Same network with weighted mode switched on or off.
    pub fn with_weighted(mut self, weighted: bool) -> Self {
        self.weighted = weighted;
        self
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = NodeId> {
        (0..self.labels.len()).map(NodeId)
    }

    pub fn edge_ids(&self) -> impl ExactSizeIterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Option<&Edge> {
        self.edges.get(e.0)
    }

    pub fn label(&self, v: NodeId) -> &str {
        &self.labels[v.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn node_id(&self, label: &str) -> Option<NodeId> {
        self.ids.get(label).copied()
    }

    pub fn contains_node(&self, v: NodeId) -> bool {
        v.0 < self.labels.len()
    }

    /// Edges with `v` in their tail. For undirected graphs every incident edge.
    pub fn out_edges(&self, v: NodeId) -> &[EdgeId] {
        match self.kind {
            NetworkKind::UndirectedGraph => &self.incidence.incident[v.0],
            _ => &self.incidence.outgoing[v.0],
        }
    }

    /// Edges with `v` in their head. For undirected graphs every incident edge.
    pub fn in_edges(&self, v: NodeId) -> &[EdgeId] {
        match self.kind {
            NetworkKind::UndirectedGraph => &self.incidence.incident[v.0],
            _ => &self.incidence.incoming[v.0],
        }
    }

    /// Every edge touching `v`, ignoring direction.
    pub fn incident(&self, v: NodeId) -> &[EdgeId] {
        &self.incidence.incident[v.0]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.incidence.incident[v.0].len()
    }

    pub fn out_degree(&self, v: NodeId) -> usize {
        self.out_edges(v).len()
    }

    pub fn in_degree(&self, v: NodeId) -> usize {
        self.in_edges(v).len()
    }

    /// The endpoint of graph edge `e` opposite to `v`.
    pub fn opposite(&self, e: EdgeId, v: NodeId) -> NodeId {
        let (a, b) = self.edges[e.0].endpoints();
        if a == v {
            b
        } else {
            a
        }
    }

    /// Looks up a graph edge by endpoint labels. Undirected lookups ignore
    /// orientation.
    pub fn find_edge(&self, tail: &str, head: &str) -> Option<EdgeId> {
        let t = self.node_id(tail)?;
        let h = self.node_id(head)?;
        self.find_edge_ids(t, h)
    }

    pub fn find_edge_ids(&self, tail: NodeId, head: NodeId) -> Option<EdgeId> {
        if !self.kind.is_graph() || !self.contains_node(tail) || !self.contains_node(head) {
            return None;
        }
        self.out_edges(tail).iter().copied().find(|&e| {
            let (a, b) = self.edges[e.0].endpoints();
            match self.kind {
                NetworkKind::UndirectedGraph => (a == tail && b == head) || (a == head && b == tail),
                _ => a == tail && b == head,
            }
        })
    }

    /// Looks up a hyperedge by label (first match).
    pub fn find_labeled(&self, label: &str) -> Option<EdgeId> {
        self.edges.iter().position(|e| e.label == label).map(EdgeId)
    }

    /// Rebuilds the incidence indexes from the edge list and compares.
    pub fn incidence_is_consistent(&self) -> bool {
        Incidence::build(self.labels.len(), &self.edges) == self.incidence
    }

    /// Serializes a graph in the edge-list format accepted by
    /// [`parse_edge_list`]. Weights are written only for weighted networks.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            let (a, b) = e.endpoints();
            out.push_str(&self.labels[a.0]);
            out.push(' ');
            out.push_str(&self.labels[b.0]);
            if self.weighted {
                out.push(' ');
                out.push_str(&to_exact_string(&e.weight));
            }
            out.push('\n');
        }
        out
    }

    /// Serializes a hypergraph in the line format accepted by
    /// [`parse_hyperedges`]. Reversible pairs come out as two one-way lines.
    pub fn to_hyperedge_lines(&self) -> String {
        let join = |side: &[NodeId]| {
            side.iter()
                .map(|v| self.labels[v.0].as_str())
                .collect::<Vec<_>>()
                .join(",")
        };
        let mut out = String::new();
        for e in &self.edges {
            out.push_str(&join(&e.tail));
            out.push_str(" -> ");
            out.push_str(&join(&e.head));
            let unit_weight = e.weight.is_one();
            if !e.label.is_empty() || !unit_weight {
                out.push_str(" | ");
                out.push_str(&e.label);
            }
            if !unit_weight {
                out.push_str(" | ");
                out.push_str(&to_exact_string(&e.weight));
            }
            out.push('\n');
        }
        out
    }
}

/// Result of inserting a graph edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Insert {
    Added(EdgeId),
    /// Duplicate of an existing edge; in weighted mode the weight was added.
    Merged(EdgeId),
    SelfLoopDropped,
}

/// Incremental construction of a [`Network`].
///
/// Node ids are assigned in first-appearance order. Graph mode keeps the
/// network simple: self-loops are dropped and parallel edges collapse.
#[derive(Clone, Debug)]
pub struct NetworkBuilder {
    kind: NetworkKind,
    weighted: bool,
    labels: Vec<String>,
    ids: HashMap<String, NodeId>,
    edges: Vec<Edge>,
    pairs: HashMap<(NodeId, NodeId), EdgeId>,
}

impl NetworkBuilder {
    pub fn new(kind: NetworkKind) -> Self {
        NetworkBuilder {
            kind,
            weighted: false,
            labels: Vec::new(),
            ids: HashMap::new(),
            edges: Vec::new(),
            pairs: HashMap::new(),
        }
    }

    pub fn undirected() -> Self {
        Self::new(NetworkKind::UndirectedGraph)
    }

    pub fn directed() -> Self {
        Self::new(NetworkKind::DirectedGraph)
    }

    pub fn hypergraph() -> Self {
        Self::new(NetworkKind::DirectedHypergraph)
    }

    pub fn weighted(mut self, weighted: bool) -> Self {
        self.weighted = weighted;
        self
    }

    /// Pre-registers nodes labelled `"0"`, `"1"`, ... so integer ids can be
    /// used directly.
    pub fn with_nodes(mut self, n: usize) -> Self {
        for i in 0..n {
            self.node(&i.to_string());
        }
        self
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    /// Returns the id for `label`, registering it if new.
    pub fn node(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.ids.get(label) {
            return id;
        }
        let id = NodeId(self.labels.len());
        self.labels.push(label.to_owned());
        self.ids.insert(label.to_owned(), id);
        id
    }

    pub fn lookup(&self, label: &str) -> Option<NodeId> {
        self.ids.get(label).copied()
    }

    /// Adds a graph edge between labelled nodes with weight 1.
    pub fn edge(&mut self, tail: &str, head: &str) -> Insert {
        let t = self.lookup(tail);
        let h = self.lookup(head);
        if tail == head {
            return Insert::SelfLoopDropped;
        }
        let t = t.unwrap_or_else(|| self.node(tail));
        let h = h.unwrap_or_else(|| self.node(head));
        self.add_edge(t, h, Rational::one())
            .expect("unit weight is positive")
    }

    /// Adds a graph edge between existing node ids.
    pub fn add_edge(
        &mut self,
        tail: NodeId,
        head: NodeId,
        weight: Rational,
    ) -> Result<Insert, NetworkError> {
        assert!(self.kind.is_graph(), "add_edge on a hypergraph builder");
        if weight <= Rational::from_integer(0.into()) {
            return Err(NetworkError::NonPositiveWeight);
        }
        for v in [tail, head] {
            if v.0 >= self.labels.len() {
                return Err(NetworkError::UnknownNode(v.to_string()));
            }
        }
        if tail == head {
            return Ok(Insert::SelfLoopDropped);
        }
        let key = match self.kind {
            NetworkKind::UndirectedGraph => (tail.min(head), tail.max(head)),
            _ => (tail, head),
        };
        if let Some(&existing) = self.pairs.get(&key) {
            if self.weighted {
                self.edges[existing.0].weight += weight;
            }
            return Ok(Insert::Merged(existing));
        }
        let id = EdgeId(self.edges.len());
        self.pairs.insert(key, id);
        self.edges.push(Edge {
            tail: vec![tail],
            head: vec![head],
            weight,
            label: String::new(),
        });
        Ok(Insert::Added(id))
    }

    /// Adds a directed hyperedge. Sides are treated as sets; repeated members
    /// collapse. Parallel hyperedges are kept.
    pub fn add_hyperedge(
        &mut self,
        tail: &[NodeId],
        head: &[NodeId],
        weight: Rational,
        label: &str,
    ) -> Result<EdgeId, NetworkError> {
        assert!(!self.kind.is_graph(), "add_hyperedge on a graph builder");
        if tail.is_empty() && head.is_empty() {
            return Err(NetworkError::EmptyHyperedge);
        }
        if weight <= Rational::from_integer(0.into()) {
            return Err(NetworkError::NonPositiveWeight);
        }
        if let Some(v) = tail.iter().chain(head).find(|v| v.0 >= self.labels.len()) {
            return Err(NetworkError::UnknownNode(v.to_string()));
        }
        let normalize = |side: &[NodeId]| {
            let mut s = side.to_vec();
            s.sort_unstable();
            s.dedup();
            s
        };
        let id = EdgeId(self.edges.len());
        self.edges.push(Edge {
            tail: normalize(tail),
            head: normalize(head),
            weight,
            label: label.to_owned(),
        });
        Ok(id)
    }

    /// Label-based convenience for [`add_hyperedge`](Self::add_hyperedge)
    /// with unit weight.
    pub fn hyperedge(&mut self, tail: &[&str], head: &[&str], label: &str) -> EdgeId {
        let t: Vec<NodeId> = tail.iter().map(|l| self.node(l)).collect();
        let h: Vec<NodeId> = head.iter().map(|l| self.node(l)).collect();
        self.add_hyperedge(&t, &h, Rational::one(), label)
            .expect("hyperedge with at least one side")
    }

    pub fn build(self) -> Network {
        let incidence = Incidence::build(self.labels.len(), &self.edges);
        Network {
            kind: self.kind,
            weighted: self.weighted,
            labels: self.labels,
            ids: self.ids,
            edges: self.edges,
            incidence,
        }
    }
}
