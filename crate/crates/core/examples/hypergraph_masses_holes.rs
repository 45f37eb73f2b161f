// Mass and hole measures of a directed hyperedge, the optimal transport
// between them, and how neighborhood shape drives Forman versus Ollivier
// curvature.
//
// $ cargo run --example hypergraph_masses_holes

use edgecurv::curvature::hypergraph::{
    forman_hyper, in_measure, ollivier_hyper, out_measure, HyperOptions,
};
use edgecurv::fixtures::{connectivity_pattern, masses_and_holes, Pattern};
use edgecurv::rational::to_exact_string;

fn main() {
    let (net, e) = masses_and_holes();
    let opts = HyperOptions::default();
    print!("{}", net.to_hyperedge_lines());

    let mu_in = in_measure(&net, e, opts).unwrap();
    let mu_out = out_measure(&net, e, opts).unwrap();
    let show = |atoms: &[(edgecurv::NodeId, edgecurv::Rational)]| -> String {
        atoms
            .iter()
            .map(|(v, m)| format!("{}={}", net.label(*v), to_exact_string(m)))
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("\nmu_in : {}", show(&mu_in.atoms));
    println!("mu_out: {}", show(&mu_out.atoms));

    let o = ollivier_hyper(&net, e, opts).unwrap();
    for entry in &o.plan.entries {
        println!(
            "  move {:>4} from {} to {} (distance {})",
            to_exact_string(&entry.mass),
            net.label(o.sources[entry.supply]),
            net.label(o.targets[entry.demand]),
            entry.cost
        );
    }
    println!("W1 = {}, O = {}", to_exact_string(o.wasserstein()), to_exact_string(&o.value));

    println!("\n{:<16} {:>3} {:>4}", "pattern", "F", "O");
    for p in Pattern::ALL {
        let (net, e) = connectivity_pattern(p);
        println!(
            "{:<16} {:>3} {:>4}",
            format!("{p:?}"),
            to_exact_string(&forman_hyper(&net, e, opts).unwrap()),
            to_exact_string(&ollivier_hyper(&net, e, opts).unwrap().value)
        );
    }
}
