// The exact transport solver on its own: two discrete measures, a cost
// matrix with entries in 0..=3, and the optimal plan with its per-distance
// decomposition.
//
// $ cargo run --example exact_transport

use edgecurv::rational::{ratio, to_exact_string};
use edgecurv::{solve_transport, TransportInstance};

fn main() {
    let supplies = vec![ratio(1, 2), ratio(1, 3), ratio(1, 6)];
    let demands = vec![ratio(1, 4), ratio(1, 4), ratio(1, 2)];
    let cost = vec![vec![0, 1, 3], vec![2, 0, 1], vec![3, 3, 0]];
    let inst = TransportInstance::new(supplies, demands, cost).expect("probability measures");

    let plan = solve_transport(&inst);
    for e in &plan.entries {
        println!(
            "x[{}][{}] = {:<4} at cost {}",
            e.supply,
            e.demand,
            to_exact_string(&e.mass),
            e.cost
        );
    }
    let m: Vec<String> = plan.moved.iter().map(to_exact_string).collect();
    println!("W1 = {}", to_exact_string(&plan.total_cost));
    println!("m0..m3 = {}", m.join(", "));
    println!("1 - W1 = m0 - m2 - 2 m3 = {}", to_exact_string(&plan.m_functional()));
}
