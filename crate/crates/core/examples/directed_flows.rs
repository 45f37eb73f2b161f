// Directed curvatures on a toy regulatory cascade, and the net curvature
// flow through each vertex (incoming minus outgoing).
//
// $ cargo run --example directed_flows

use edgecurv::curvature::directed::{self, FlowCurvature};
use edgecurv::network::{parse_edge_list, NetworkKind};
use edgecurv::rational::to_exact_string;

const ARCS: &str = "\
# regulator -> target
sigA lsr2
sigA whiB
lsr2 whiB
whiB espA
whiB espB
espA espC
espB espC
espC sigA
";

fn main() {
    let net = parse_edge_list(ARCS, NetworkKind::DirectedGraph, false)
        .unwrap()
        .network;

    for e in net.edge_ids() {
        let (t, h) = net.edges()[e.0].endpoints();
        let ctx = directed::edge_context(&net, e).unwrap();
        let o = directed::ollivier_directed(&net, e).unwrap();
        println!(
            "{:>5} -> {:<5} F = {:>3}  ddiff = {:>3}  O = {:>5}",
            net.label(t),
            net.label(h),
            to_exact_string(&ctx.forman()),
            to_exact_string(&ctx.degree_difference()),
            to_exact_string(&o.value)
        );
    }

    println!();
    for v in net.nodes() {
        let f = directed::vertex_flow(&net, v, FlowCurvature::Forman).unwrap();
        let o = directed::vertex_flow(&net, v, FlowCurvature::Ollivier).unwrap();
        println!(
            "{:<5} Forman flow {:>3}  Ollivier flow {:>6}",
            net.label(v),
            to_exact_string(&f),
            to_exact_string(&o)
        );
    }
}
