//! Small hand-built hypergraphs with known curvature values, shared by tests,
//! examples and documentation.

use crate::network::{parse_hyperedges, EdgeId, Network};

/// Eight-vertex hypergraph around the hyperedge `e: s,t -> k,x`.
///
/// * `s` is a source and keeps `1/2`; `t` is fed by `m`, the only mass,
///   which gets the other `1/2`.
/// * `k` is a sink (`1/2`); `x` feeds `m` (`1/4`) and the pair `r1, r2`
///   (`1/8` each), so the holes are `m, r1, r2` and `m` is also a mass.
///
/// The optimal transport costs `5/4`, giving curvature `-1/4`.
pub const MASSES_AND_HOLES: &str = "\
# evaluated hyperedge
s,t -> k,x | e
m -> t | f
x -> m | g1
x -> r1,r2 | g2
y -> m | h
";

pub fn masses_and_holes() -> (Network, EdgeId) {
    let net = parse_hyperedges(MASSES_AND_HOLES, false)
        .expect("fixture parses")
        .network;
    let e = net.find_labeled("e").expect("fixture has e");
    (net, e)
}

/// Neighborhood patterns around the hyperedge `e: a1,a2 -> b1,b2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// `e` alone.
    Bare,
    /// Inputs `p_i -> a_i` and outputs `b_i -> q_i`, no shortcuts: every mass
    /// has to travel through `e`.
    ChainRed,
    /// Outputs of `e` feed back into its inputs (`b_i -> c_i -> a_i`):
    /// directed triangles, masses coincide with holes.
    TriangleRed,
    /// `TriangleRed` plus an extra input hyperedge `c1 -> a1,n` from an
    /// existing mass.
    TriangleRedBlue,
    /// `ChainRed` plus direct shortcuts `p_i -> q_i`: directed quadrangles.
    QuadrangleBlue,
    /// `ChainRed` plus two-step detours `p_i -> z_i -> q_i`: directed
    /// pentagons.
    PentagonGreen,
}

impl Pattern {
    pub const ALL: [Pattern; 6] = [
        Pattern::Bare,
        Pattern::ChainRed,
        Pattern::TriangleRed,
        Pattern::TriangleRedBlue,
        Pattern::QuadrangleBlue,
        Pattern::PentagonGreen,
    ];

    pub fn lines(self) -> String {
        let black = "a1,a2 -> b1,b2 | e\n";
        let chain = "p1 -> a1\np2 -> a2\nb1 -> q1\nb2 -> q2\n";
        let triangle = "c1 -> a1\nc2 -> a2\nb1 -> c1\nb2 -> c2\n";
        let extra = match self {
            Pattern::Bare => String::new(),
            Pattern::ChainRed => chain.to_owned(),
            Pattern::TriangleRed => triangle.to_owned(),
            Pattern::TriangleRedBlue => format!("{triangle}c1 -> a1,n\n"),
            Pattern::QuadrangleBlue => format!("{chain}p1 -> q1\np2 -> q2\n"),
            Pattern::PentagonGreen => format!("{chain}p1 -> z1\nz1 -> q1\np2 -> z2\nz2 -> q2\n"),
        };
        format!("{black}{extra}")
    }
}

pub fn connectivity_pattern(pattern: Pattern) -> (Network, EdgeId) {
    let net = parse_hyperedges(&pattern.lines(), false)
        .expect("fixture parses")
        .network;
    (net, EdgeId(0))
}
