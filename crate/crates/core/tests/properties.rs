mod common;

use edgecurv::curvature::hypergraph::{
    forman_hyper, in_measure, ollivier_hyper, out_measure, degree_difference_hyper,
};
use edgecurv::curvature::{directed, undirected, HyperOptions};
use edgecurv::netstats::{assortativity, histogram, BinSpec};
use edgecurv::network::{parse_edge_list, parse_hyperedges, Network, NetworkKind, NodeId};
use edgecurv::rational::{int, ratio, Rational};
use edgecurv::{compute_all, solve_transport, Measures, TransportInstance};
use num::Signed;
use proptest::prelude::*;

use common::*;

fn edge_text(pairs: &[(u8, u8)], label: impl Fn(u8) -> String) -> String {
    pairs
        .iter()
        .map(|&(a, b)| format!("{} {}\n", label(a), label(b)))
        .collect()
}

fn load(text: &str, kind: NetworkKind) -> Network {
    parse_edge_list(text, kind, false).unwrap().network
}

fn pairs(max_node: u8, max_edges: usize) -> impl Strategy<Value = Vec<(u8, u8)>> {
    prop::collection::vec((0..max_node, 0..max_node), 1..max_edges)
}

/// Hyperedge lines over `v0..v{n}`; sides may repeat nodes, heads may be empty.
fn hyper_lines() -> impl Strategy<Value = String> {
    let side = |min| prop::collection::vec(0u8..12, min..4);
    prop::collection::vec((side(1), side(0)), 1..25).prop_map(|edges| {
        edges
            .iter()
            .enumerate()
            .map(|(k, (t, h))| {
                let names = |s: &Vec<u8>| s.iter().map(|v| format!("v{v}")).collect::<Vec<_>>().join(",");
                format!("{} -> {} | r{k}\n", names(t), names(h))
            })
            .collect()
    })
}

fn curvatures(net: &Network) -> Vec<(Option<Rational>, Option<Rational>, Option<Rational>)> {
    compute_all(net, Measures::all(), HyperOptions::default())
        .unwrap()
        .into_iter()
        .map(|r| (r.forman, r.degree_difference, r.ollivier.map(|o| o.value)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_list_round_trip(p in pairs(30, 60), directed in any::<bool>()) {
        let kind = if directed { NetworkKind::DirectedGraph } else { NetworkKind::UndirectedGraph };
        let net = load(&edge_text(&p, |v| format!("n{v}")), kind);
        let again = load(&net.to_edge_list(), kind);
        prop_assert_eq!(again.edge_count(), net.edge_count());
        for (a, b) in net.edges().iter().zip(again.edges()) {
            let (at, ah) = a.endpoints();
            let (bt, bh) = b.endpoints();
            prop_assert_eq!((net.label(at), net.label(ah)), (again.label(bt), again.label(bh)));
        }
        prop_assert!(again.incidence_is_consistent());
    }

    #[test]
    fn hyperedge_round_trip(text in hyper_lines()) {
        let net = parse_hyperedges(&text, false).unwrap().network;
        let again = parse_hyperedges(&net.to_hyperedge_lines(), false).unwrap().network;
        prop_assert_eq!(again.edge_count(), net.edge_count());
        for (a, b) in net.edges().iter().zip(again.edges()) {
            let names = |n: &Network, s: &[NodeId]| {
                let mut v: Vec<String> = s.iter().map(|&x| n.label(x).to_owned()).collect();
                v.sort();
                v
            };
            prop_assert_eq!(names(&net, a.tail()), names(&again, b.tail()));
            prop_assert_eq!(names(&net, a.head()), names(&again, b.head()));
            prop_assert_eq!(a.label(), b.label());
        }
    }

    #[test]
    fn undirected_orientation_does_not_matter(p in pairs(25, 60)) {
        let forward = load(&edge_text(&p, |v| format!("n{v}")), NetworkKind::UndirectedGraph);
        let flipped: Vec<(u8, u8)> = p.iter().map(|&(a, b)| (b, a)).collect();
        let backward = load(&edge_text(&flipped, |v| format!("n{v}")), NetworkKind::UndirectedGraph);
        // same edges in the same order; node ids may differ
        prop_assert_eq!(curvatures(&forward), curvatures(&backward));
    }

    #[test]
    fn directed_reversal(p in pairs(25, 60)) {
        let net = load(&edge_text(&p, |v| format!("n{v}")), NetworkKind::DirectedGraph);
        let rev: Vec<(u8, u8)> = p.iter().map(|&(a, b)| (b, a)).collect();
        let back = load(&edge_text(&rev, |v| format!("n{v}")), NetworkKind::DirectedGraph);
        for e in net.edge_ids() {
            let (t, h) = net.edges()[e.0].endpoints();
            let r = back.find_edge(net.label(h), net.label(t)).unwrap();
            prop_assert_eq!(
                directed::forman_directed(&net, e).unwrap(),
                directed::forman_directed(&back, r).unwrap()
            );
            prop_assert_eq!(
                directed::directed_degree_difference(&net, e).unwrap(),
                -directed::directed_degree_difference(&back, r).unwrap()
            );
            prop_assert_eq!(
                directed::ollivier_directed(&net, e).unwrap().value,
                directed::ollivier_directed(&back, r).unwrap().value
            );
        }
    }

    #[test]
    fn relabeling_invariance(p in pairs(20, 50), seed in any::<u64>(), directed in any::<bool>()) {
        use rand::seq::SliceRandom;
        let kind = if directed { NetworkKind::DirectedGraph } else { NetworkKind::UndirectedGraph };
        let mut perm: Vec<u8> = (0..20).collect();
        perm.shuffle(&mut rng(seed));
        let a = load(&edge_text(&p, |v| format!("n{v}")), kind);
        let b = load(&edge_text(&p, |v| format!("m{}", perm[v as usize])), kind);
        prop_assert_eq!(curvatures(&a), curvatures(&b));
        prop_assert_eq!(assortativity(&a).unwrap(), assortativity(&b).unwrap());
    }

    #[test]
    fn forman_from_raw_degrees(p in pairs(40, 120)) {
        let net = load(&edge_text(&p, |v| format!("n{v}")), NetworkKind::UndirectedGraph);
        for e in net.edge_ids() {
            let (v, w) = net.edges()[e.0].endpoints();
            let expected = int(4 - net.degree(v) as i64 - net.degree(w) as i64);
            prop_assert_eq!(undirected::forman(&net, e).unwrap(), expected);
            prop_assert!(!undirected::degree_difference(&net, e).unwrap().is_negative());
        }
    }

    #[test]
    fn histogram_ignores_order(values in prop::collection::vec((-40i64..40, 1i64..5), 0..60), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let vals: Vec<Rational> = values.iter().map(|&(n, d)| ratio(n, d)).collect();
        let mut shuffled = vals.clone();
        shuffled.shuffle(&mut rng(seed));
        for spec in [BinSpec::UnitIntegers, BinSpec::ollivier_default()] {
            let a = histogram(&vals, &spec).unwrap();
            prop_assert_eq!(a.total(), vals.len());
            prop_assert_eq!(a, histogram(&shuffled, &spec).unwrap());
        }
    }

    #[test]
    fn hypergraph_measures_are_probabilities(text in hyper_lines(), self_incidence in any::<bool>()) {
        let net = parse_hyperedges(&text, false).unwrap().network;
        let opts = HyperOptions { include_self_incidence: self_incidence };
        for e in net.edge_ids() {
            let edge = &net.edges()[e.0];
            for m in [in_measure(&net, e, opts), out_measure(&net, e, opts)].into_iter().flatten() {
                prop_assert_eq!(m.total(), int(1));
                prop_assert!(m.atoms.iter().all(|(_, x)| x.is_positive()));
                prop_assert!(m.atoms.windows(2).all(|w| w[0].0 < w[1].0));
            }
            let f = forman_hyper(&net, e, opts).unwrap();
            prop_assert!(f <= int((edge.tail().len() + edge.head().len()) as i64));
            let dd = degree_difference_hyper(&net, e, opts).unwrap();
            prop_assert!(dd.abs() <= int((edge.tail().len() + edge.head().len()) as i64) - &f);
            if let Ok(o) = ollivier_hyper(&net, e, opts) {
                prop_assert!(o.value >= int(-2) && o.value <= int(1));
                prop_assert_eq!(&o.value, &o.plan.m_functional());
            }
        }
    }

    #[test]
    fn transport_plans_are_feasible(seed in any::<u64>()) {
        use rand::Rng;
        let mut r = rng(seed);
        let supplies = random_masses(&mut r, 6);
        let demands = random_masses(&mut r, 6);
        let cost: Vec<Vec<u8>> = (0..supplies.len())
            .map(|_| (0..demands.len()).map(|_| r.gen_range(0..=3)).collect())
            .collect();
        let plan = solve_transport(&TransportInstance::new(supplies.clone(), demands.clone(), cost.clone()).unwrap());
        let (rows, cols) = plan.marginals(supplies.len(), demands.len());
        prop_assert_eq!(rows, supplies.clone());
        prop_assert_eq!(cols, demands.clone());
        prop_assert!(plan.entries.iter().all(|x| x.mass.is_positive() && x.cost == cost[x.supply][x.demand]));
        prop_assert_eq!(plan.total_cost, transport_oracle(&supplies, &demands, &cost));
    }
}

#[test]
fn regular_graphs_have_zero_degree_difference() {
    for n in 3..12usize {
        let cycle: String = (0..n).map(|i| format!("{i} {}\n", (i + 1) % n)).collect();
        let net = load(&cycle, NetworkKind::UndirectedGraph);
        for e in net.edge_ids() {
            assert_eq!(undirected::degree_difference(&net, e).unwrap(), int(0));
        }
        assert_eq!(assortativity(&net).unwrap(), None);
    }
}
