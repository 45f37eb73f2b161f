//! Curvatures of directed hyperedges `e = (tail, head)`.
//!
//! A hyperedge `f` is *incoming* at a vertex `w` when `w` is in the head of
//! `f`, and *outgoing* at `w` when `w` is in its tail. Degrees count a
//! neighboring hyperedge once per tail (head) vertex of `e` it touches.
//!
//! The Ollivier measures spread a unit of mass backwards (forwards) two
//! steps: every tail vertex gets `1/|tail|`, which stays put at a source and
//! otherwise is split evenly over its incoming hyperedges and then evenly
//! over each of their tails. The vertices reached this way are the *masses*
//! (on the output side, the *holes*).

use std::collections::BTreeMap;

use num::{One, Zero};
use serde::Serialize;

use super::{require_edge, require_kind, transport_between, CurvatureError, Ollivier, Side};
use crate::distance::bounded_hop_distance;
use crate::network::{Edge, EdgeId, Network, NetworkKind, NodeId};
use crate::rational::{int, Rational};

/// Switches for the hypergraph kernels.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HyperOptions {
    /// Count `e` among its own incoming/outgoing hyperedges when it shares a
    /// vertex between tail and head (a catalyst). Off by default.
    pub include_self_incidence: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperedgeContext {
    pub edge: EdgeId,
    pub eta_in: usize,
    pub eta_out: usize,
    pub deg_in: Rational,
    pub deg_out: Rational,
    pub self_weight: Rational,
}

impl HyperedgeContext {
    /// `w(e) (|tail| + |head|) - deg_in(e) - deg_out(e)`.
    pub fn forman(&self) -> Rational {
        &self.self_weight * int((self.eta_in + self.eta_out) as i64) - &self.deg_in - &self.deg_out
    }

    /// `deg_out(e) - deg_in(e)`.
    pub fn degree_difference(&self) -> Rational {
        &self.deg_out - &self.deg_in
    }
}

fn counts(opts: HyperOptions, e: EdgeId, f: EdgeId) -> bool {
    f != e || opts.include_self_incidence
}

pub fn hyperedge_context(
    net: &Network,
    e: EdgeId,
    opts: HyperOptions,
) -> Result<HyperedgeContext, CurvatureError> {
    require_kind(net, NetworkKind::DirectedHypergraph)?;
    require_edge(net, e)?;
    let edge = &net.edges()[e.0];
    let weight_of = |f: EdgeId| -> Rational {
        if net.is_weighted() {
            net.edges()[f.0].weight().clone()
        } else {
            Rational::one()
        }
    };
    let degree = |side: &[NodeId], incoming: bool| -> Rational {
        side.iter()
            .flat_map(|&v| {
                if incoming {
                    net.in_edges(v)
                } else {
                    net.out_edges(v)
                }
            })
            .filter(|&&f| counts(opts, e, f))
            .map(|&f| weight_of(f))
            .sum()
    };
    Ok(HyperedgeContext {
        edge: e,
        eta_in: edge.tail().len(),
        eta_out: edge.head().len(),
        deg_in: degree(edge.tail(), true),
        deg_out: degree(edge.head(), false),
        self_weight: weight_of(e),
    })
}

pub fn forman_hyper(net: &Network, e: EdgeId, opts: HyperOptions) -> Result<Rational, CurvatureError> {
    Ok(hyperedge_context(net, e, opts)?.forman())
}

pub fn degree_difference_hyper(
    net: &Network,
    e: EdgeId,
    opts: HyperOptions,
) -> Result<Rational, CurvatureError> {
    Ok(hyperedge_context(net, e, opts)?.degree_difference())
}

/// Measure on vertices built by the two-stage even split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MassHoleMeasure {
    pub side: Side,
    /// Accumulated atoms, ascending by vertex; masses sum to exactly 1.
    pub atoms: Vec<(NodeId, Rational)>,
    /// Sources (tail side) or sinks (head side) of `e` keeping their share.
    pub terminals: Vec<NodeId>,
    /// Masses (tail side) or holes (head side): vertices reached by splitting.
    pub reached: Vec<NodeId>,
}

impl MassHoleMeasure {
    pub fn total(&self) -> Rational {
        self.atoms.iter().map(|(_, m)| m).sum()
    }
}

fn split_measure(
    net: &Network,
    e: EdgeId,
    opts: HyperOptions,
    side: Side,
) -> Result<MassHoleMeasure, CurvatureError> {
    require_kind(net, NetworkKind::DirectedHypergraph)?;
    require_edge(net, e)?;
    let edge = &net.edges()[e.0];
    // walking backwards from the tail or forwards from the head
    let (start, neighbors, far_side): (&[NodeId], fn(&Network, NodeId) -> &[EdgeId], fn(&Edge) -> &[NodeId]) =
        match side {
            Side::Input => (edge.tail(), Network::in_edges, Edge::tail),
            Side::Output => (edge.head(), Network::out_edges, Edge::head),
        };
    if start.is_empty() {
        let which = match side {
            Side::Input => "tail",
            Side::Output => "head",
        };
        return Err(CurvatureError::EmptySide(e, which));
    }

    let budget = Rational::new(1.into(), (start.len() as i64).into());
    let mut atoms: BTreeMap<NodeId, Rational> = BTreeMap::new();
    let mut terminals = Vec::new();
    let mut reached: Vec<NodeId> = Vec::new();
    for &w in start {
        // hyperedges with an empty far side have nowhere to carry mass
        let carriers: Vec<&Edge> = neighbors(net, w)
            .iter()
            .filter(|&&f| counts(opts, e, f))
            .map(|f| &net.edges()[f.0])
            .filter(|f| !far_side(f).is_empty())
            .collect();
        if carriers.is_empty() {
            terminals.push(w);
            *atoms.entry(w).or_insert_with(Rational::zero) += &budget;
            continue;
        }
        let share = &budget / int(carriers.len() as i64);
        for f in carriers {
            let far = far_side(f);
            let piece = &share / int(far.len() as i64);
            for &u in far {
                *atoms.entry(u).or_insert_with(Rational::zero) += &piece;
                reached.push(u);
            }
        }
    }
    reached.sort_unstable();
    reached.dedup();
    let measure = MassHoleMeasure {
        side,
        atoms: atoms.into_iter().collect(),
        terminals,
        reached,
    };
    debug_assert!(measure.total().is_one());
    Ok(measure)
}

/// The input-side (mass) measure of `e`. Fails on an empty tail.
pub fn in_measure(net: &Network, e: EdgeId, opts: HyperOptions) -> Result<MassHoleMeasure, CurvatureError> {
    split_measure(net, e, opts, Side::Input)
}

/// The output-side (hole) measure of `e`. Fails on an empty head.
pub fn out_measure(net: &Network, e: EdgeId, opts: HyperOptions) -> Result<MassHoleMeasure, CurvatureError> {
    split_measure(net, e, opts, Side::Output)
}

/// Minimal number of directed hyperedges leading from `u` to `v`, searched
/// up to depth 3; `None` when `v` is farther. For a mass `u` and a hole `v`
/// of some hyperedge the result is always `Some`.
pub fn hyper_distance(net: &Network, u: NodeId, v: NodeId) -> Option<u8> {
    bounded_hop_distance(net, u, v, 3).map(|d| d as u8)
}

/// `1 - W1(mu_in, mu_out) = m0 - m2 - 2 m3`, in `[-2, 1]`.
pub fn ollivier_hyper(net: &Network, e: EdgeId, opts: HyperOptions) -> Result<Ollivier, CurvatureError> {
    let mu_in = in_measure(net, e, opts)?;
    let mu_out = out_measure(net, e, opts)?;
    if net.is_weighted() {
        return Err(CurvatureError::Weighted);
    }
    Ok(transport_between(net, &mu_in.atoms, &mu_out.atoms))
}
