//! Edge-based curvature analysis of networks.
//!
//! Computes Forman-Ricci curvature, degree difference and Ollivier-Ricci
//! curvature for the edges of undirected graphs, directed graphs and the
//! hyperedges of directed hypergraphs. All curvature arithmetic is exact:
//! values are arbitrary-precision rationals and the optimal transport behind
//! Ollivier-Ricci curvature is solved exactly.
//!
//! ```
//! use edgecurv::curvature::undirected;
//! use edgecurv::network::{parse_edge_list, NetworkKind};
//! use edgecurv::rational::ratio;
//!
//! let triangle = parse_edge_list("a b\nb c\nc a", NetworkKind::UndirectedGraph, false)
//!     .unwrap()
//!     .network;
//! let e = triangle.find_edge("a", "b").unwrap();
//! assert_eq!(undirected::ollivier(&triangle, e).unwrap().value, ratio(1, 2));
//! ```

pub mod cli;
pub mod curvature;
pub mod distance;
pub mod fixtures;
pub mod netstats;
pub mod network;
pub mod rational;
pub mod transport;

pub use curvature::{compute_all, CurvatureError, CurvatureRecord, HyperOptions, Measures, Ollivier};
pub use network::{EdgeId, Network, NetworkBuilder, NetworkKind, NodeId};
pub use rational::Rational;
pub use transport::{solve_transport, TransportInstance, TransportPlan};
