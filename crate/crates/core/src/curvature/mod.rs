//! Edge curvatures for the three network kinds, plus a batch driver that
//! evaluates every (hyper)edge in parallel and returns records in edge order.

pub mod directed;
pub mod hypergraph;
pub mod undirected;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::distance::capped_distances;
use crate::network::{EdgeId, Network, NetworkKind, NodeId};
use crate::rational::Rational;
use crate::transport::{solve_transport, TransportInstance, TransportPlan};

pub use hypergraph::HyperOptions;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurvatureError {
    #[error("edge {0} is not in the network")]
    UnknownEdge(EdgeId),
    #[error("node {0} is not in the network")]
    UnknownNode(NodeId),
    #[error("operation needs a {expected} network, got {found}")]
    WrongKind {
        expected: NetworkKind,
        found: NetworkKind,
    },
    #[error("Ollivier-Ricci curvature is only defined here for unweighted networks")]
    Weighted,
    #[error("hyperedge {0} has an empty {1}; its Ollivier-Ricci curvature is undefined")]
    EmptySide(EdgeId, &'static str),
}

pub(crate) fn require_kind(net: &Network, expected: NetworkKind) -> Result<(), CurvatureError> {
    if net.kind() == expected {
        Ok(())
    } else {
        Err(CurvatureError::WrongKind {
            expected,
            found: net.kind(),
        })
    }
}

pub(crate) fn require_edge(net: &Network, e: EdgeId) -> Result<(), CurvatureError> {
    if e.0 < net.edge_count() {
        Ok(())
    } else {
        Err(CurvatureError::UnknownEdge(e))
    }
}

/// Which end of a (hyper)edge a measure lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    Input,
    Output,
}

/// Ollivier-Ricci curvature of one (hyper)edge and the plan that realizes it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ollivier {
    pub value: Rational,
    pub plan: TransportPlan,
    /// Support of the input-side measure, ascending.
    pub sources: Vec<NodeId>,
    /// Support of the output-side measure, ascending.
    pub targets: Vec<NodeId>,
}

impl Ollivier {
    pub fn wasserstein(&self) -> &Rational {
        &self.plan.total_cost
    }
}

/// Solves the transport between two vertex measures and checks that
/// `1 - W1 = m0 - m2 - 2 m3`.
pub(crate) fn transport_between(
    net: &Network,
    input: &[(NodeId, Rational)],
    output: &[(NodeId, Rational)],
) -> Ollivier {
    let sources: Vec<NodeId> = input.iter().map(|(v, _)| *v).collect();
    let targets: Vec<NodeId> = output.iter().map(|(v, _)| *v).collect();
    let cost = capped_distances(net, &sources, &targets);
    let inst = TransportInstance::from_flat(
        input.iter().map(|(_, m)| m.clone()).collect(),
        output.iter().map(|(_, m)| m.clone()).collect(),
        cost,
    )
    .expect("neighborhood measures are probability measures");
    let plan = solve_transport(&inst);
    let value = Rational::from_integer(1.into()) - &plan.total_cost;
    assert_eq!(value, plan.m_functional(), "O = m0 - m2 - 2 m3 violated");
    Ollivier {
        value,
        plan,
        sources,
        targets,
    }
}

/// Which measures a batch run computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Measures {
    pub forman: bool,
    pub degree_difference: bool,
    pub ollivier: bool,
}

impl Measures {
    pub fn all() -> Self {
        Measures {
            forman: true,
            degree_difference: true,
            ollivier: true,
        }
    }

    pub fn none() -> Self {
        Measures {
            forman: false,
            degree_difference: false,
            ollivier: false,
        }
    }
}

/// Per-(hyper)edge results of a batch run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureRecord {
    pub edge: EdgeId,
    pub tail_size: usize,
    pub head_size: usize,
    pub forman: Option<Rational>,
    pub degree_difference: Option<Rational>,
    /// `None` when not requested or undefined (hyperedge with an empty side).
    pub ollivier: Option<Ollivier>,
    /// Hypergraphs only: size of the mass set reached by splitting.
    pub masses: Option<usize>,
    /// Hypergraphs only: size of the hole set reached by splitting.
    pub holes: Option<usize>,
}

/// Evaluates the selected measures on every (hyper)edge, in parallel on the
/// current rayon pool. Output order is edge order regardless of scheduling.
pub fn compute_all(
    net: &Network,
    measures: Measures,
    hyper: HyperOptions,
) -> Result<Vec<CurvatureRecord>, CurvatureError> {
    if measures.ollivier && net.is_weighted() {
        return Err(CurvatureError::Weighted);
    }
    let ids: Vec<EdgeId> = net.edge_ids().collect();
    ids.into_par_iter()
        .map(|e| compute_one(net, e, measures, hyper))
        .collect()
}

fn compute_one(
    net: &Network,
    e: EdgeId,
    measures: Measures,
    hyper: HyperOptions,
) -> Result<CurvatureRecord, CurvatureError> {
    let edge = net.edge(e).ok_or(CurvatureError::UnknownEdge(e))?;
    let mut rec = CurvatureRecord {
        edge: e,
        tail_size: edge.tail().len(),
        head_size: edge.head().len(),
        forman: None,
        degree_difference: None,
        ollivier: None,
        masses: None,
        holes: None,
    };
    match net.kind() {
        NetworkKind::UndirectedGraph => {
            let nb = undirected::edge_neighborhood(net, e)?;
            if measures.forman {
                rec.forman = Some(nb.forman());
            }
            if measures.degree_difference {
                rec.degree_difference = Some(nb.degree_difference());
            }
            if measures.ollivier {
                rec.ollivier = Some(undirected::ollivier(net, e)?);
            }
        }
        NetworkKind::DirectedGraph => {
            let ctx = directed::edge_context(net, e)?;
            if measures.forman {
                rec.forman = Some(ctx.forman());
            }
            if measures.degree_difference {
                rec.degree_difference = Some(ctx.degree_difference());
            }
            if measures.ollivier {
                rec.ollivier = Some(directed::ollivier_directed(net, e)?);
            }
        }
        NetworkKind::DirectedHypergraph => {
            let ctx = hypergraph::hyperedge_context(net, e, hyper)?;
            if measures.forman {
                rec.forman = Some(ctx.forman());
            }
            if measures.degree_difference {
                rec.degree_difference = Some(ctx.degree_difference());
            }
            if let Ok(m) = hypergraph::in_measure(net, e, hyper) {
                rec.masses = Some(m.reached.len());
            }
            if let Ok(m) = hypergraph::out_measure(net, e, hyper) {
                rec.holes = Some(m.reached.len());
            }
            if measures.ollivier {
                match hypergraph::ollivier_hyper(net, e, hyper) {
                    Ok(o) => rec.ollivier = Some(o),
                    Err(CurvatureError::EmptySide(..)) => {}
                    Err(other) => return Err(other),
                }
            }
        }
    }
    Ok(rec)
}
