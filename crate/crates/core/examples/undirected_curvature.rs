// Forman, degree difference and Ollivier curvature on a small undirected
// graph: a triangle with a pendant path and a hub.
//
// $ cargo run --example undirected_curvature

use edgecurv::curvature::undirected;
use edgecurv::network::{parse_edge_list, NetworkKind};
use edgecurv::rational::to_exact_string;

const EDGES: &str = "\
a b
b c
c a
c d
d e
c h1
c h2
c h3
";

fn main() {
    let net = parse_edge_list(EDGES, NetworkKind::UndirectedGraph, false)
        .expect("valid edge list")
        .network;

    println!("{:<8} {:>4} {:>6} {:>8}  m0..m3", "edge", "F", "ddiff", "O");
    for e in net.edge_ids() {
        let (v, w) = net.edges()[e.0].endpoints();
        let nb = undirected::edge_neighborhood(&net, e).unwrap();
        let o = undirected::ollivier(&net, e).unwrap();
        let m: Vec<String> = o.plan.moved.iter().map(to_exact_string).collect();
        println!(
            "{:<8} {:>4} {:>6} {:>8}  {}",
            format!("{}-{}", net.label(v), net.label(w)),
            to_exact_string(&nb.forman()),
            to_exact_string(&nb.degree_difference()),
            to_exact_string(&o.value),
            m.join(" ")
        );
    }
    // a-b is the only positively curved edge: its two other triangle edges
    // meet at distance 0. The bridge c-d is the most negative, and the hub
    // spokes c-h* have the largest degree difference.
}
