//! Curvatures of directed edges `e = [v, w]`: the inputs of `e` are the edges
//! entering its tail `v`, the outputs are the edges leaving its head `w`.

use num::{One, Zero};

use super::{
    require_edge, require_kind, transport_between, CurvatureError, Ollivier, Side,
};
use crate::network::{EdgeId, Network, NetworkKind, NodeId};
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedEdgeContext {
    pub edge: EdgeId,
    pub tail: NodeId,
    pub head: NodeId,
    /// Edges with head `tail`, `e` excluded.
    pub in_edges: Vec<EdgeId>,
    /// Edges with tail `head`, `e` excluded.
    pub out_edges: Vec<EdgeId>,
    pub deg_in: Rational,
    pub deg_out: Rational,
    pub self_weight: Rational,
}

impl DirectedEdgeContext {
    /// `2 w(e) - deg_in(e) - deg_out(e)`.
    pub fn forman(&self) -> Rational {
        int(2) * &self.self_weight - &self.deg_in - &self.deg_out
    }

    /// Signed: positive for edges that emit more than they receive.
    pub fn degree_difference(&self) -> Rational {
        &self.deg_out - &self.deg_in
    }
}

pub fn edge_context(net: &Network, e: EdgeId) -> Result<DirectedEdgeContext, CurvatureError> {
    require_kind(net, NetworkKind::DirectedGraph)?;
    require_edge(net, e)?;
    let (tail, head) = net.edges()[e.0].endpoints();
    let others = |edges: &[EdgeId]| -> Vec<EdgeId> {
        edges.iter().copied().filter(|&f| f != e).collect()
    };
    let in_edges = others(net.in_edges(tail));
    let out_edges = others(net.out_edges(head));
    let degree = |edges: &[EdgeId]| -> Rational {
        if net.is_weighted() {
            edges.iter().map(|f| net.edges()[f.0].weight()).sum()
        } else {
            int(edges.len() as i64)
        }
    };
    Ok(DirectedEdgeContext {
        edge: e,
        tail,
        head,
        deg_in: degree(&in_edges),
        deg_out: degree(&out_edges),
        in_edges,
        out_edges,
        self_weight: if net.is_weighted() {
            net.edges()[e.0].weight().clone()
        } else {
            Rational::one()
        },
    })
}

pub fn forman_directed(net: &Network, e: EdgeId) -> Result<Rational, CurvatureError> {
    Ok(edge_context(net, e)?.forman())
}

pub fn directed_degree_difference(net: &Network, e: EdgeId) -> Result<Rational, CurvatureError> {
    Ok(edge_context(net, e)?.degree_difference())
}

/// Probability measure on edges: uniform over the input (or output) edges,
/// or all mass on `e` itself when the tail is a source (head is a sink).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedMeasure {
    pub side: Side,
    pub support: Vec<(EdgeId, Rational)>,
}

fn uniform_or_self(side: Side, edges: &[EdgeId], e: EdgeId) -> DirectedMeasure {
    let support = if edges.is_empty() {
        vec![(e, Rational::one())]
    } else {
        let mass = Rational::new(1.into(), (edges.len() as i64).into());
        edges.iter().map(|&f| (f, mass.clone())).collect()
    };
    DirectedMeasure { side, support }
}

pub fn directed_measures(
    net: &Network,
    e: EdgeId,
) -> Result<(DirectedMeasure, DirectedMeasure), CurvatureError> {
    let ctx = edge_context(net, e)?;
    Ok((
        uniform_or_self(Side::Input, &ctx.in_edges, e),
        uniform_or_self(Side::Output, &ctx.out_edges, e),
    ))
}

/// Collapses an edge measure onto vertices, summing masses that land on the
/// same vertex.
fn on_vertices(measure: &DirectedMeasure, pick: impl Fn(EdgeId) -> NodeId) -> Vec<(NodeId, Rational)> {
    let mut atoms: Vec<(NodeId, Rational)> = measure
        .support
        .iter()
        .map(|(f, m)| (pick(*f), m.clone()))
        .collect();
    atoms.sort_by_key(|(v, _)| *v);
    atoms.dedup_by(|later, kept| {
        if later.0 == kept.0 {
            kept.1 += &later.1;
            true
        } else {
            false
        }
    });
    atoms
}

/// `1 - W1(mu_in, mu_out)` where moving input edge `e1` onto output edge `e2`
/// costs the directed hop distance from the tail of `e1` to the head of `e2`.
pub fn ollivier_directed(net: &Network, e: EdgeId) -> Result<Ollivier, CurvatureError> {
    let (mu_in, mu_out) = directed_measures(net, e)?;
    if net.is_weighted() {
        return Err(CurvatureError::Weighted);
    }
    let tail_of = |f: EdgeId| net.edges()[f.0].endpoints().0;
    let head_of = |f: EdgeId| net.edges()[f.0].endpoints().1;
    Ok(transport_between(
        net,
        &on_vertices(&mu_in, tail_of),
        &on_vertices(&mu_out, head_of),
    ))
}

/// Curvature used when aggregating flows through a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlowCurvature {
    Forman,
    Ollivier,
}

/// Sum of curvatures over edges entering `v` minus the sum over edges
/// leaving `v`.
pub fn vertex_flow(net: &Network, v: NodeId, kind: FlowCurvature) -> Result<Rational, CurvatureError> {
    require_kind(net, NetworkKind::DirectedGraph)?;
    if !net.contains_node(v) {
        return Err(CurvatureError::UnknownNode(v));
    }
    let curvature = |e: EdgeId| -> Result<Rational, CurvatureError> {
        match kind {
            FlowCurvature::Forman => forman_directed(net, e),
            FlowCurvature::Ollivier => ollivier_directed(net, e).map(|o| o.value),
        }
    };
    let mut flow = Rational::zero();
    for &e in net.in_edges(v) {
        flow += curvature(e)?;
    }
    for &e in net.out_edges(v) {
        flow -= curvature(e)?;
    }
    Ok(flow)
}
