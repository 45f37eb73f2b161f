//! Exact optimal transport for small instances with ground costs in `{0,1,2,3}`.
//!
//! Masses are rationals. They are scaled by the least common multiple of all
//! denominators to integers, an integer minimum-cost flow is solved by
//! successive shortest paths in primal-dual form (Dijkstra with potentials on
//! the dense bipartite residual network, then a blocking flow along all
//! shortest paths), and the flow is scaled back. When the common
//! denominator does not fit in 62 bits the same solver runs on big integers.

use std::ops::{AddAssign, SubAssign};

use num::{BigInt, One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::rational::{common_denominator, int, Rational};

/// Largest admissible ground distance.
pub const MAX_COST: u8 = 3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransportError {
    #[error("transport instance has no {0} sites")]
    NoSites(&'static str),
    #[error("{side} mass at site {site} is not positive")]
    NonPositiveMass { side: &'static str, site: usize },
    #[error("{side} masses sum to {total}, expected 1")]
    NotNormalized { side: &'static str, total: String },
    #[error("cost matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    Shape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("cost {cost} at ({row}, {col}) exceeds {MAX_COST}")]
    CostOutOfRange { row: usize, col: usize, cost: u8 },
}

/// Two probability measures on finite site sets plus a ground distance
/// between every supply and demand site.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransportInstance {
    supplies: Vec<Rational>,
    demands: Vec<Rational>,
    /// Row-major, `supplies.len() * demands.len()`.
    cost: Vec<u8>,
}

impl TransportInstance {
    pub fn new(
        supplies: Vec<Rational>,
        demands: Vec<Rational>,
        cost: Vec<Vec<u8>>,
    ) -> Result<Self, TransportError> {
        let rows = cost.len();
        let cols = cost.first().map_or(0, Vec::len);
        if rows != supplies.len() || cost.iter().any(|r| r.len() != demands.len()) {
            return Err(TransportError::Shape {
                rows,
                cols,
                expected_rows: supplies.len(),
                expected_cols: demands.len(),
            });
        }
        Self::from_flat(supplies, demands, cost.into_iter().flatten().collect())
    }

    /// Builds an instance from a row-major cost vector.
    pub fn from_flat(
        supplies: Vec<Rational>,
        demands: Vec<Rational>,
        cost: Vec<u8>,
    ) -> Result<Self, TransportError> {
        for (side, masses) in [("supply", &supplies), ("demand", &demands)] {
            if masses.is_empty() {
                return Err(TransportError::NoSites(side));
            }
            if let Some(site) = masses.iter().position(|m| !m.is_positive()) {
                return Err(TransportError::NonPositiveMass { side, site });
            }
            let total: Rational = masses.iter().sum();
            if !total.is_one() {
                return Err(TransportError::NotNormalized {
                    side,
                    total: total.to_string(),
                });
            }
        }
        if cost.len() != supplies.len() * demands.len() {
            return Err(TransportError::Shape {
                rows: cost.len() / demands.len().max(1),
                cols: demands.len(),
                expected_rows: supplies.len(),
                expected_cols: demands.len(),
            });
        }
        if let Some(k) = cost.iter().position(|&c| c > MAX_COST) {
            return Err(TransportError::CostOutOfRange {
                row: k / demands.len(),
                col: k % demands.len(),
                cost: cost[k],
            });
        }
        Ok(TransportInstance {
            supplies,
            demands,
            cost,
        })
    }

    pub fn supplies(&self) -> &[Rational] {
        &self.supplies
    }

    pub fn demands(&self) -> &[Rational] {
        &self.demands
    }

    pub fn cost(&self, supply: usize, demand: usize) -> u8 {
        self.cost[supply * self.demands.len() + demand]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanEntry {
    pub supply: usize,
    pub demand: usize,
    pub mass: Rational,
    pub cost: u8,
}

/// An optimal coupling with its cost and the mass moved at each distance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransportPlan {
    /// Nonzero couplings in row-major order.
    pub entries: Vec<PlanEntry>,
    /// The 1-Wasserstein distance.
    pub total_cost: Rational,
    /// `moved[d]` is the mass transported over ground distance `d`.
    pub moved: [Rational; 4],
}

impl TransportPlan {
    /// `m0 - m2 - 2 m3`, which equals `1 - total_cost` for every optimal plan.
    pub fn m_functional(&self) -> Rational {
        &self.moved[0] - &self.moved[2] - int(2) * &self.moved[3]
    }

    /// Row and column sums of the plan.
    pub fn marginals(&self, supplies: usize, demands: usize) -> (Vec<Rational>, Vec<Rational>) {
        let mut rows = vec![Rational::zero(); supplies];
        let mut cols = vec![Rational::zero(); demands];
        for e in &self.entries {
            rows[e.supply] += &e.mass;
            cols[e.demand] += &e.mass;
        }
        (rows, cols)
    }
}

trait Amount: Clone + Ord + Zero + AddAssign + SubAssign {}
impl Amount for i64 {}
impl Amount for BigInt {}

/// Solves the instance exactly.
///
/// Among optimal plans the one found by processing sites in ascending index
/// order is returned, so results are reproducible.
pub fn solve_transport(inst: &TransportInstance) -> TransportPlan {
    let scale = common_denominator(inst.supplies.iter().chain(&inst.demands));
    let scaled = |masses: &[Rational]| -> Vec<BigInt> {
        masses
            .iter()
            .map(|m| m.numer() * (&scale / m.denom()))
            .collect()
    };
    let supply = scaled(&inst.supplies);
    let demand = scaled(&inst.demands);
    let (s, d) = (supply.len(), demand.len());

    let flows: Vec<BigInt> = if scale.bits() <= 62 {
        let narrow = |v: Vec<BigInt>| -> Vec<i64> {
            v.iter().map(|x| x.to_i64().expect("fits below scale")).collect()
        };
        min_cost_flow(narrow(supply), narrow(demand), &inst.cost, s, d)
            .into_iter()
            .map(BigInt::from)
            .collect()
    } else {
        min_cost_flow(supply, demand, &inst.cost, s, d)
    };

    let scale = Rational::from_integer(scale);
    let mut entries = Vec::new();
    let mut moved: [Rational; 4] = Default::default();
    for (k, f) in flows.into_iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let mass = Rational::from_integer(f) / &scale;
        let cost = inst.cost[k];
        moved[cost as usize] += &mass;
        entries.push(PlanEntry {
            supply: k / d,
            demand: k % d,
            mass,
            cost,
        });
    }
    let total_cost = &moved[1] + int(2) * &moved[2] + int(3) * &moved[3];
    let plan = TransportPlan {
        entries,
        total_cost,
        moved,
    };
    let total: Rational = plan.moved.iter().sum();
    assert!(total.is_one(), "plan moves {total}, expected 1");
    assert_eq!(
        plan.m_functional(),
        Rational::one() - &plan.total_cost,
        "m-decomposition identity violated"
    );
    plan
}

const UNSET: usize = usize::MAX;
const INF: i64 = i64::MAX / 4;

/// Primal-dual successive shortest paths on the transportation network.
/// Node layout: source 0, supplies `1..=s`, demands `s+1..=s+d`, sink
/// `s+d+1`; supply to demand arcs are uncapacitated.
///
/// Each phase computes shortest distances with Dijkstra on reduced costs,
/// updates the potentials and then saturates every shortest augmenting path
/// at once with a blocking-flow max flow on the zero reduced cost arcs. With
/// costs in `{0,1,2,3}` the shortest path length only takes four values, so
/// there are at most four phases.
fn min_cost_flow<F: Amount>(
    mut supply: Vec<F>,
    mut demand: Vec<F>,
    cost: &[u8],
    s: usize,
    d: usize,
) -> Vec<F> {
    let mut net = Residual {
        s,
        d,
        cost,
        flow: vec![F::zero(); s * d],
        potential: vec![0; s + d + 2],
    };
    while !supply.iter().all(Zero::is_zero) {
        let reached = net.reprice(&supply, &demand);
        assert!(reached, "balanced transport instance must stay feasible");
        net.augment_admissible(&mut supply, &mut demand);
    }
    net.flow
}

struct Residual<'a, F> {
    s: usize,
    d: usize,
    cost: &'a [u8],
    flow: Vec<F>,
    potential: Vec<i64>,
}

impl<F: Amount> Residual<'_, F> {
    fn sink(&self) -> usize {
        self.s + self.d + 1
    }

    /// Reduced cost of the arc supply `i` -> demand `j`; its reverse has the
    /// negated value.
    fn reduced(&self, i: usize, j: usize) -> i64 {
        self.cost[i * self.d + j] as i64 + self.potential[1 + i] - self.potential[1 + self.s + j]
    }

    /// Dijkstra from the source on reduced costs, then potential update.
    /// Returns whether the sink is reachable.
    fn reprice(&mut self, supply: &[F], demand: &[F]) -> bool {
        let (s, d, sink) = (self.s, self.d, self.sink());
        let n = sink + 1;
        let mut dist = vec![INF; n];
        let mut done = vec![false; n];
        dist[0] = 0;
        loop {
            let mut u = UNSET;
            for v in 0..n {
                if !done[v] && dist[v] < INF && (u == UNSET || dist[v] < dist[u]) {
                    u = v;
                }
            }
            if u == UNSET || u == sink {
                break;
            }
            done[u] = true;
            let base = dist[u];
            let relax = |dist: &mut [i64], v: usize, reduced: i64| {
                if base + reduced < dist[v] {
                    dist[v] = base + reduced;
                }
            };
            if u == 0 {
                for i in 0..s {
                    if !supply[i].is_zero() {
                        relax(&mut dist, 1 + i, self.potential[0] - self.potential[1 + i]);
                    }
                }
            } else if u <= s {
                let i = u - 1;
                for j in 0..d {
                    relax(&mut dist, 1 + s + j, self.reduced(i, j));
                }
            } else {
                let j = u - 1 - s;
                for i in 0..s {
                    if !self.flow[i * d + j].is_zero() {
                        relax(&mut dist, 1 + i, -self.reduced(i, j));
                    }
                }
                if !demand[j].is_zero() {
                    relax(&mut dist, sink, self.potential[u] - self.potential[sink]);
                }
            }
        }
        let reach = dist[sink];
        if reach >= INF {
            return false;
        }
        for (p, dv) in self.potential.iter_mut().zip(&dist) {
            *p += (*dv).min(reach);
        }
        true
    }

    /// Blocking flows on the admissible (zero reduced cost) arcs until the
    /// sink is cut off. Sites are scanned in ascending index order.
    fn augment_admissible(&mut self, supply: &mut [F], demand: &mut [F]) {
        let (s, d, sink) = (self.s, self.d, self.sink());
        let n = sink + 1;
        let source_ok = |p: &[i64], i: usize| p[0] == p[1 + i];
        let sink_ok = |p: &[i64], j: usize| p[1 + s + j] == p[sink];
        loop {
            // breadth-first levels over admissible residual arcs
            let mut level = vec![UNSET; n];
            level[0] = 0;
            let mut queue = std::collections::VecDeque::from([0usize]);
            while let Some(u) = queue.pop_front() {
                let mut visit = |v: usize, level: &mut [usize]| {
                    if level[v] == UNSET {
                        level[v] = level[u] + 1;
                        queue.push_back(v);
                    }
                };
                if u == 0 {
                    for i in 0..s {
                        if !supply[i].is_zero() && source_ok(&self.potential, i) {
                            visit(1 + i, &mut level);
                        }
                    }
                } else if u <= s {
                    for j in 0..d {
                        if self.reduced(u - 1, j) == 0 {
                            visit(1 + s + j, &mut level);
                        }
                    }
                } else if u < sink {
                    let j = u - 1 - s;
                    if !demand[j].is_zero() && sink_ok(&self.potential, j) {
                        visit(sink, &mut level);
                    }
                    for i in 0..s {
                        if !self.flow[i * d + j].is_zero() && self.reduced(i, j) == 0 {
                            visit(1 + i, &mut level);
                        }
                    }
                }
            }
            if level[sink] == UNSET {
                return;
            }
            self.blocking_flow(supply, demand, &mut level);
        }
    }

    fn blocking_flow(&mut self, supply: &mut [F], demand: &mut [F], level: &mut [usize]) {
        let (s, d, sink) = (self.s, self.d, self.sink());
        // next arc to try at each node; demand nodes list the sink first
        let mut next = vec![0usize; sink + 1];
        for i0 in 0..s {
            if level[1 + i0] != 1 {
                continue;
            }
            let mut path = vec![1 + i0];
            while !supply[i0].is_zero() && !path.is_empty() {
                let u = *path.last().expect("nonempty path");
                if u == sink {
                    self.push_path(&path, supply, demand);
                    path.truncate(1);
                    continue;
                }
                let step = if u <= s {
                    let i = u - 1;
                    let found = (next[u]..d)
                        .find(|&j| level[1 + s + j] == level[u] + 1 && self.reduced(i, j) == 0);
                    next[u] = found.unwrap_or(d);
                    found.map(|j| 1 + s + j)
                } else {
                    let j = u - 1 - s;
                    let open = |k: usize| -> bool {
                        if k == 0 {
                            level[sink] == level[u] + 1
                                && !demand[j].is_zero()
                                && self.potential[u] == self.potential[sink]
                        } else {
                            let i = k - 1;
                            level[1 + i] == level[u] + 1
                                && !self.flow[i * d + j].is_zero()
                                && self.reduced(i, j) == 0
                        }
                    };
                    let found = (next[u]..=s).find(|&k| open(k));
                    next[u] = found.unwrap_or(s + 1);
                    found.map(|k| if k == 0 { sink } else { k })
                };
                match step {
                    Some(v) => path.push(v),
                    None => {
                        // dead end: drop u from the level graph
                        level[u] = UNSET;
                        path.pop();
                    }
                }
            }
        }
    }

    /// Pushes the bottleneck amount along `path` (supply, demand, supply, ...,
    /// demand, sink).
    fn push_path(&mut self, path: &[usize], supply: &mut [F], demand: &mut [F]) {
        let (s, d) = (self.s, self.d);
        let first = path[0] - 1;
        let last = path[path.len() - 2] - 1 - s;
        let mut delta = supply[first].clone().min(demand[last].clone());
        for w in path[1..path.len() - 1].windows(2) {
            let (u, v) = (w[0], w[1]);
            if u > s {
                delta = delta.min(self.flow[(v - 1) * d + (u - 1 - s)].clone());
            }
        }
        for w in path[..path.len() - 1].windows(2) {
            let (u, v) = (w[0], w[1]);
            if u <= s {
                self.flow[(u - 1) * d + (v - 1 - s)] += delta.clone();
            } else {
                self.flow[(v - 1) * d + (u - 1 - s)] -= delta.clone();
            }
        }
        supply[first] -= delta.clone();
        demand[last] -= delta;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn solve(supplies: &[(i64, i64)], demands: &[(i64, i64)], cost: Vec<Vec<u8>>) -> TransportPlan {
        let r = |v: &[(i64, i64)]| v.iter().map(|&(n, d)| ratio(n, d)).collect();
        solve_transport(&TransportInstance::new(r(supplies), r(demands), cost).unwrap())
    }

    #[test]
    fn identity_transport() {
        let plan = solve(&[(1, 1)], &[(1, 1)], vec![vec![0]]);
        assert_eq!(plan.total_cost, int(0));
        assert_eq!(plan.moved[0], int(1));
        assert_eq!(plan.entries.len(), 1);
    }

    #[test]
    fn split_mass() {
        // one source, three targets at different distances
        let plan = solve(&[(1, 1)], &[(1, 2), (1, 4), (1, 4)], vec![vec![1, 2, 3]]);
        assert_eq!(plan.total_cost, ratio(1, 2) + ratio(2, 4) + ratio(3, 4));
        assert_eq!(plan.moved, [int(0), ratio(1, 2), ratio(1, 4), ratio(1, 4)]);
    }

    #[test]
    fn needs_rerouting() {
        // greedy on row 0 would take the 0-cost cell that row 1 needs more
        let plan = solve(
            &[(1, 2), (1, 2)],
            &[(1, 2), (1, 2)],
            vec![vec![0, 1], vec![0, 3]],
        );
        assert_eq!(plan.total_cost, ratio(1, 2));
        let (rows, cols) = plan.marginals(2, 2);
        assert_eq!(rows, vec![ratio(1, 2), ratio(1, 2)]);
        assert_eq!(cols, vec![ratio(1, 2), ratio(1, 2)]);
    }

    #[test]
    fn huge_denominators_use_big_integers() {
        // product of the first primes overflows 62 bits
        let primes = [
            2i64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
        ];
        let mut supplies: Vec<Rational> = primes.iter().map(|&p| ratio(1, p * 64)).collect();
        let rest = Rational::one() - supplies.iter().sum::<Rational>();
        supplies.push(rest);
        let scale = common_denominator(&supplies);
        assert!(scale.bits() > 62);
        let demands = vec![ratio(1, 3), ratio(2, 3)];
        let cost = (0..supplies.len()).map(|i| vec![(i % 4) as u8, 1]).collect();
        let inst = TransportInstance::new(supplies, demands, cost).unwrap();
        let plan = solve_transport(&inst);
        let (rows, cols) = plan.marginals(inst.supplies().len(), 2);
        assert_eq!(rows, inst.supplies());
        assert_eq!(cols, inst.demands());
    }

    #[test]
    fn validation() {
        let half = || vec![ratio(1, 2), ratio(1, 2)];
        assert!(matches!(
            TransportInstance::new(vec![ratio(1, 2)], vec![int(1)], vec![vec![0]]),
            Err(TransportError::NotNormalized { side: "supply", .. })
        ));
        assert!(matches!(
            TransportInstance::new(half(), half(), vec![vec![0, 4], vec![0, 0]]),
            Err(TransportError::CostOutOfRange { row: 0, col: 1, cost: 4 })
        ));
        assert!(matches!(
            TransportInstance::new(half(), half(), vec![vec![0, 1]]),
            Err(TransportError::Shape { .. })
        ));
        assert!(matches!(
            TransportInstance::new(vec![int(2), int(-1)], vec![int(1)], vec![vec![0], vec![0]]),
            Err(TransportError::NonPositiveMass { site: 1, .. })
        ));
        assert!(matches!(
            TransportInstance::new(vec![], vec![int(1)], vec![]),
            Err(TransportError::NoSites("supply"))
        ));
    }

    #[test]
    fn deterministic_tie_breaking() {
        // all plans cost 1; the first supply should feed the first demand
        let plan = solve(&[(1, 2), (1, 2)], &[(1, 2), (1, 2)], vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(plan.entries[0].supply, 0);
        assert_eq!(plan.entries[0].demand, 0);
        assert_eq!(plan, solve(&[(1, 2), (1, 2)], &[(1, 2), (1, 2)], vec![vec![1, 1], vec![1, 1]]));
    }
}
