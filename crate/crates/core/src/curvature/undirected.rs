//! Forman-Ricci curvature, degree difference and Ollivier-Ricci curvature of
//! edges in undirected graphs.

use num::{One, Signed};

use super::{require_edge, require_kind, transport_between, CurvatureError, Ollivier};
use crate::network::{EdgeId, Network, NetworkKind, NodeId};
use crate::rational::{int, Rational};

/// The two endpoint sides of an edge `e = (v, w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeNeighborhood {
    pub edge: EdgeId,
    pub v: NodeId,
    pub w: NodeId,
    /// Neighbors of `e` at `v` (weighted sum in weighted mode).
    pub deg_v: Rational,
    pub deg_w: Rational,
    /// Edges incident to `v`, `e` included.
    pub at_v: Vec<EdgeId>,
    pub at_w: Vec<EdgeId>,
    /// `1` for unweighted graphs, the edge weight otherwise.
    pub self_weight: Rational,
}

impl EdgeNeighborhood {
    /// `2 w(e) - deg_v(e) - deg_w(e)`; with unit weights `2 - deg(e)`.
    pub fn forman(&self) -> Rational {
        int(2) * &self.self_weight - &self.deg_v - &self.deg_w
    }

    pub fn degree_difference(&self) -> Rational {
        (&self.deg_v - &self.deg_w).abs()
    }
}

pub fn edge_neighborhood(net: &Network, e: EdgeId) -> Result<EdgeNeighborhood, CurvatureError> {
    require_kind(net, NetworkKind::UndirectedGraph)?;
    require_edge(net, e)?;
    let (v, w) = net.edges()[e.0].endpoints();
    let side = |x: NodeId| -> Rational {
        if net.is_weighted() {
            net.incident(x)
                .iter()
                .filter(|&&f| f != e)
                .map(|f| net.edges()[f.0].weight())
                .sum()
        } else {
            int(net.degree(x) as i64 - 1)
        }
    };
    Ok(EdgeNeighborhood {
        edge: e,
        v,
        w,
        deg_v: side(v),
        deg_w: side(w),
        at_v: net.incident(v).to_vec(),
        at_w: net.incident(w).to_vec(),
        self_weight: if net.is_weighted() {
            net.edges()[e.0].weight().clone()
        } else {
            Rational::one()
        },
    })
}

pub fn forman(net: &Network, e: EdgeId) -> Result<Rational, CurvatureError> {
    Ok(edge_neighborhood(net, e)?.forman())
}

pub fn degree_difference(net: &Network, e: EdgeId) -> Result<Rational, CurvatureError> {
    Ok(edge_neighborhood(net, e)?.degree_difference())
}

/// Uniform measure on the edges at `x`, carried by their far endpoints. The
/// evaluated edge sits at the opposite endpoint of `e`.
fn endpoint_measure(net: &Network, x: NodeId) -> Vec<(NodeId, Rational)> {
    let edges = net.incident(x);
    let mass = Rational::new(1.into(), (edges.len() as i64).into());
    let mut atoms: Vec<(NodeId, Rational)> = edges
        .iter()
        .map(|&f| (net.opposite(f, x), mass.clone()))
        .collect();
    atoms.sort_by_key(|(v, _)| *v);
    atoms
}

/// `1 - W1(mu_v, mu_w)` with `mu_v` uniform on the edges at `v` and ground
/// distance between `(v, v1)` and `(w, w1)` equal to `d(v1, w1)`.
pub fn ollivier(net: &Network, e: EdgeId) -> Result<Ollivier, CurvatureError> {
    require_kind(net, NetworkKind::UndirectedGraph)?;
    require_edge(net, e)?;
    if net.is_weighted() {
        return Err(CurvatureError::Weighted);
    }
    let (v, w) = net.edges()[e.0].endpoints();
    Ok(transport_between(
        net,
        &endpoint_measure(net, v),
        &endpoint_measure(net, w),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{parse_edge_list, NetworkBuilder};
    use crate::rational::ratio;

    fn graph(text: &str) -> Network {
        parse_edge_list(text, NetworkKind::UndirectedGraph, false)
            .unwrap()
            .network
    }

    fn complete(n: usize) -> Network {
        let mut b = NetworkBuilder::undirected().with_nodes(n);
        for i in 0..n {
            for j in i + 1..n {
                b.add_edge(NodeId(i), NodeId(j), Rational::one()).unwrap();
            }
        }
        b.build()
    }

    #[test]
    fn isolated_edge() {
        let net = graph("a b");
        assert_eq!(forman(&net, EdgeId(0)).unwrap(), int(2));
        assert_eq!(degree_difference(&net, EdgeId(0)).unwrap(), int(0));
        let o = ollivier(&net, EdgeId(0)).unwrap();
        assert_eq!(o.value, int(0));
        assert_eq!(o.plan.moved[1], int(1));
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(forman(&complete(3), EdgeId(0)).unwrap(), int(0));
        assert_eq!(forman(&complete(5), EdgeId(4)).unwrap(), int(-4));
        let k3 = complete(3);
        for e in k3.edge_ids() {
            assert_eq!(ollivier(&k3, e).unwrap().value, ratio(1, 2));
            assert_eq!(degree_difference(&k3, e).unwrap(), int(0));
        }
    }

    #[test]
    fn path_end_edge() {
        let net = graph("a b\nb c");
        let o = ollivier(&net, EdgeId(0)).unwrap();
        assert_eq!(o.value, int(0));
        assert_eq!(o.wasserstein(), &int(1));
    }

    #[test]
    fn star_degree_difference() {
        let net = graph("c x\nc y\nc z");
        assert_eq!(degree_difference(&net, EdgeId(1)).unwrap(), int(2));
        assert_eq!(forman(&net, EdgeId(1)).unwrap(), int(0));
    }

    #[test]
    fn path_and_cycle_edges() {
        // a-b-c-d, edge b-c: mu_b on {a, c}, mu_c on {b, d}; a->b and c->d
        let net = graph("a b\nb c\nc d");
        let o = ollivier(&net, EdgeId(1)).unwrap();
        assert_eq!(o.value, int(0));
        let c5 = graph("a b\nb c\nc d\nd e\ne a");
        let o = ollivier(&c5, EdgeId(0)).unwrap();
        assert_eq!(o.value, int(0));
    }

    #[test]
    fn weighted_forman_and_ddiff() {
        let net = parse_edge_list("a b 2\nb c 0.5\nb d 1\na e 3", NetworkKind::UndirectedGraph, true)
            .unwrap()
            .network;
        // e = a-b: 2*2 - 3 - (0.5 + 1)
        assert_eq!(forman(&net, EdgeId(0)).unwrap(), ratio(-1, 2));
        assert_eq!(degree_difference(&net, EdgeId(0)).unwrap(), ratio(3, 2));
        assert_eq!(ollivier(&net, EdgeId(0)), Err(CurvatureError::Weighted));
    }

    #[test]
    fn errors() {
        let net = graph("a b");
        assert_eq!(forman(&net, EdgeId(3)), Err(CurvatureError::UnknownEdge(EdgeId(3))));
        let d = parse_edge_list("a b", NetworkKind::DirectedGraph, false).unwrap().network;
        assert!(matches!(forman(&d, EdgeId(0)), Err(CurvatureError::WrongKind { .. })));
    }
}
