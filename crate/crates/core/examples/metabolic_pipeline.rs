// Reaction network as a directed hypergraph: reversible reactions are split
// into two hyperedges, then each reaction gets Forman and Ollivier curvature,
// degree difference and the sizes of its mass and hole sets.
//
// $ cargo run --example metabolic_pipeline [reactions-file]

use edgecurv::network::parse_hyperedges;
use edgecurv::rational::{to_decimal_string, to_exact_string};
use edgecurv::{compute_all, HyperOptions, Measures};

const REACTIONS: &str = "\
# educts -> products | reaction
glc,atp -> g6p,adp,h | HEX1
g6p <-> f6p | PGI
f6p,atp -> fdp,adp,h | PFK
fdp <-> dhap,g3p | FBA
dhap <-> g3p | TPI
g3p,nad,pi <-> 13dpg,nadh,h | GAPD
13dpg,adp <-> 3pg,atp | PGK
3pg <-> 2pg | PGM
2pg <-> pep,h2o | ENO
pep,adp,h -> pyr,atp | PYK
adp,h,pi -> atp,h,h2o | ATPS
atp,h2o -> adp,h,pi | ATPM
-> glc | EX_glc
pyr -> | EX_pyr
";

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable input"),
        None => REACTIONS.to_owned(),
    };
    let net = parse_hyperedges(&text, true).unwrap().network.with_weighted(false);
    println!("{} metabolites, {} hyperedges", net.node_count(), net.edge_count());

    let records = compute_all(&net, Measures::all(), HyperOptions::default()).unwrap();
    let mut by_forman: Vec<_> = records.iter().collect();
    by_forman.sort_by(|a, b| a.forman.cmp(&b.forman));

    println!("{:<10} {:>5} {:>6} {:>10} {:>4} {:>4}", "reaction", "F", "ddiff", "O", "|M|", "|H|");
    for r in by_forman {
        let count = |c: Option<usize>| c.map_or("-".to_owned(), |c| c.to_string());
        println!(
            "{:<10} {:>5} {:>6} {:>10} {:>4} {:>4}",
            net.edges()[r.edge.0].label(),
            to_exact_string(r.forman.as_ref().unwrap()),
            to_exact_string(r.degree_difference.as_ref().unwrap()),
            r.ollivier
                .as_ref()
                .map_or("undefined".to_owned(), |o| to_decimal_string(&o.value, 4)),
            count(r.masses),
            count(r.holes)
        );
    }
}
