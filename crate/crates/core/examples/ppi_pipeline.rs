// Interaction-network workflow: load an edge list, keep the giant
// component, compute all measures in parallel, then summarize and bin.
//
// $ cargo run --release --example ppi_pipeline [edge-list]
//
// Without an argument a small synthetic network is used.

use edgecurv::netstats::{histogram, measure_values, summarize, BinSpec};
use edgecurv::network::{largest_component, parse_edge_list, NetworkKind};
use edgecurv::rational::to_exact_string;
use edgecurv::{compute_all, HyperOptions, Measures};

fn synthetic() -> String {
    // hubs 0..5 each tied to a ring of partners, plus a detached pair
    let mut s = String::new();
    for i in 0..60 {
        s.push_str(&format!("p{} p{}\n", i % 5, 5 + i));
        s.push_str(&format!("p{} p{}\n", 5 + i, 5 + (i + 1) % 60));
    }
    s.push_str("x1 x2\n");
    s
}

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable input"),
        None => synthetic(),
    };
    let loaded = parse_edge_list(&text, NetworkKind::UndirectedGraph, false).unwrap();
    println!(
        "loaded {} nodes, {} edges ({} duplicates, {} self-loops dropped)",
        loaded.network.node_count(),
        loaded.network.edge_count(),
        loaded.duplicates,
        loaded.self_loops
    );
    let giant = largest_component(&loaded.network).unwrap();

    let records = compute_all(&giant, Measures::all(), HyperOptions::default()).unwrap();
    let summary = summarize(&giant, &records).unwrap();
    print!("{}", summary.to_key_value());

    for (name, values) in measure_values(&records) {
        let spec = if name == "ollivier" {
            BinSpec::ollivier_default()
        } else {
            BinSpec::UnitIntegers
        };
        let h = histogram(&values, &spec).unwrap();
        println!("\n{name}:");
        for (pair, count) in h.edges.windows(2).zip(&h.counts).filter(|(_, c)| **c > 0) {
            println!("  [{:>6}, {:>6})  {count}", to_exact_string(&pair[0]), to_exact_string(&pair[1]));
        }
    }
}
