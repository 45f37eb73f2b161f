//! Independent oracles and random instance generators shared by the
//! integration tests. Nothing here calls into the solver or distance code
//! under test.

#![allow(dead_code)]

use std::collections::VecDeque;

use edgecurv::network::{EdgeId, Network, NetworkBuilder, NetworkKind, NodeId};
use edgecurv::rational::Rational;
use num::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Minimum of `c.x` subject to `A x = b`, `x >= 0`, by a dense two-phase
/// simplex with Bland's rule. `None` when infeasible.
pub fn simplex_min(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> Option<Rational> {
    let m = a.len();
    let n = c.len();
    let width = n + m + 1;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let flip = b[i].is_negative();
        let mut r: Vec<Rational> = vec![Rational::zero(); width];
        for j in 0..n {
            r[j] = if flip { -row[j].clone() } else { row[j].clone() };
        }
        r[n + i] = Rational::one();
        r[width - 1] = b[i].abs();
        t.push(r);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    let phase1: Vec<Rational> = (0..n + m)
        .map(|j| if j >= n { Rational::one() } else { Rational::zero() })
        .collect();
    run_simplex(&mut t, &mut basis, &phase1, n + m);
    let infeasibility: Rational = basis
        .iter()
        .zip(&t)
        .filter(|(&j, _)| j >= n)
        .map(|(_, r)| r[width - 1].clone())
        .sum();
    if !infeasibility.is_zero() {
        return None;
    }
    // drive zero-level artificials out of the basis; drop redundant rows
    let mut r = 0;
    while r < t.len() {
        if basis[r] >= n {
            match (0..n).find(|&j| !t[r][j].is_zero()) {
                Some(j) => pivot(&mut t, &mut basis, r, j),
                None => {
                    t.remove(r);
                    basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }
    let mut phase2 = c.to_vec();
    phase2.extend(std::iter::repeat_n(Rational::zero(), m));
    run_simplex(&mut t, &mut basis, &phase2, n);
    Some(
        basis
            .iter()
            .zip(&t)
            .map(|(&j, row)| &phase2[j] * &row[width - 1])
            .sum(),
    )
}

fn run_simplex(t: &mut [Vec<Rational>], basis: &mut [usize], cost: &[Rational], allowed: usize) {
    let rhs = t.first().map_or(0, |r| r.len() - 1);
    loop {
        let entering = (0..allowed).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let reduced = basis
                .iter()
                .zip(t.iter())
                .fold(cost[j].clone(), |acc, (&bj, row)| acc - &cost[bj] * &row[j]);
            reduced.is_negative()
        });
        let Some(j) = entering else { return };
        let mut leave: Option<(usize, Rational)> = None;
        for (r, row) in t.iter().enumerate() {
            if row[j].is_positive() {
                let ratio = &row[rhs] / &row[j];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let (r, _) = leave.expect("transportation problems are bounded");
        pivot(t, basis, r, j);
    }
}

fn pivot(t: &mut [Vec<Rational>], basis: &mut [usize], r: usize, j: usize) {
    let p = t[r][j].clone();
    for x in t[r].iter_mut() {
        *x /= &p;
    }
    let pivot_row = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i != r && !row[j].is_zero() {
            let f = row[j].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
    }
    basis[r] = j;
}

/// Optimal transport cost by linear programming over the coupling polytope.
pub fn transport_oracle(supplies: &[Rational], demands: &[Rational], cost: &[Vec<u8>]) -> Rational {
    let (s, d) = (supplies.len(), demands.len());
    let mut a = Vec::new();
    let mut b = Vec::new();
    for i in 0..s {
        let mut row = vec![Rational::zero(); s * d];
        for j in 0..d {
            row[i * d + j] = Rational::one();
        }
        a.push(row);
        b.push(supplies[i].clone());
    }
    for j in 0..d {
        let mut row = vec![Rational::zero(); s * d];
        for i in 0..s {
            row[i * d + j] = Rational::one();
        }
        a.push(row);
        b.push(demands[j].clone());
    }
    let c: Vec<Rational> = cost
        .iter()
        .flatten()
        .map(|&x| Rational::from_integer(x.into()))
        .collect();
    simplex_min(&a, &b, &c).expect("balanced transport is feasible")
}

/// `k` positive masses with common denominator `q <= 12` summing to one.
pub fn random_masses(rng: &mut impl Rng, max_sites: usize) -> Vec<Rational> {
    let q: i64 = rng.gen_range(1..=12);
    let k = rng.gen_range(1..=max_sites.min(q as usize));
    // composition of q into k positive parts via k-1 distinct cut points
    let mut cuts: Vec<i64> = (1..q).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<i64> = cuts.into_iter().take(k - 1).collect();
    cuts.sort_unstable();
    let mut prev = 0;
    let mut out = Vec::with_capacity(k);
    for c in cuts.into_iter().chain(std::iter::once(q)) {
        out.push(Rational::new((c - prev).into(), q.into()));
        prev = c;
    }
    out
}

/// Unbounded hop distance by plain breadth-first search over the relation
/// "some (hyper)edge has `x` on its input side and `y` on its output side"
/// (both directions for undirected graphs).
pub fn bfs_distance(net: &Network, from: NodeId, to: NodeId) -> Option<usize> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); net.node_count()];
    for e in net.edges() {
        for &x in e.tail() {
            for &y in e.head() {
                adj[x.0].push(y.0);
                if net.kind() == NetworkKind::UndirectedGraph {
                    adj[y.0].push(x.0);
                }
            }
        }
    }
    let mut dist = vec![usize::MAX; net.node_count()];
    dist[from.0] = 0;
    let mut queue = VecDeque::from([from.0]);
    while let Some(u) = queue.pop_front() {
        if u == to.0 {
            return Some(dist[u]);
        }
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Erdos-Renyi style graph: each pair independently with probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64, kind: NetworkKind) -> Network {
    let mut b = NetworkBuilder::new(kind).with_nodes(n);
    for i in 0..n {
        for j in 0..n {
            let take = match kind {
                NetworkKind::UndirectedGraph => i < j,
                _ => i != j,
            };
            if take && rng.gen_bool(p) {
                b.add_edge(NodeId(i), NodeId(j), Rational::one()).unwrap();
            }
        }
    }
    b.build()
}

/// Random directed hypergraph. Sides have 1 to `max_side` vertices; with
/// `allow_empty` an occasional hyperedge gets an empty head.
pub fn random_hypergraph(
    rng: &mut impl Rng,
    n: usize,
    edges: usize,
    max_side: usize,
    allow_empty: bool,
) -> Network {
    let mut b = NetworkBuilder::hypergraph().with_nodes(n);
    let nodes: Vec<NodeId> = (0..n).map(NodeId).collect();
    for k in 0..edges {
        let ts = rng.gen_range(1..=max_side.min(n));
        let hs = if allow_empty && rng.gen_bool(0.05) {
            0
        } else {
            rng.gen_range(1..=max_side.min(n))
        };
        let tail: Vec<NodeId> = nodes.choose_multiple(rng, ts).copied().collect();
        let head: Vec<NodeId> = nodes.choose_multiple(rng, hs).copied().collect();
        b.add_hyperedge(&tail, &head, Rational::one(), &format!("r{k}"))
            .unwrap();
    }
    b.build()
}

/// The same digraph as singleton-tail, singleton-head hyperedges.
pub fn digraph_as_hypergraph(net: &Network) -> Network {
    let mut b = NetworkBuilder::hypergraph().with_nodes(net.node_count());
    for (i, e) in net.edges().iter().enumerate() {
        let (t, h) = e.endpoints();
        b.add_hyperedge(&[t], &[h], Rational::one(), &format!("e{i}"))
            .unwrap();
    }
    b.build()
}

pub fn edge_ids(net: &Network) -> Vec<EdgeId> {
    net.edge_ids().collect()
}
