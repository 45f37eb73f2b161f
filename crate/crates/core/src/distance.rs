//! Short-range hop distances between the supports of two neighborhood
//! measures.
//!
//! Every Ollivier-type curvature here only needs distances up to 3: a path of
//! length 3 through the evaluated (hyper)edge always exists between a support
//! point of the input measure and one of the output measure. Instead of one
//! breadth-first search per pair, the depth-2 frontier is met in the middle:
//! `d(x, y) <= 2` iff a successor of `x` is a predecessor of `y`.

use std::collections::{HashMap, VecDeque};

use crate::network::{Network, NetworkKind, NodeId};

/// Nodes reachable from `x` through one (hyper)edge. Sorted, no repeats.
pub fn successors(net: &Network, x: NodeId) -> Vec<NodeId> {
    let mut out = Vec::new();
    for &e in net.out_edges(x) {
        let edge = &net.edges()[e.0];
        match net.kind() {
            NetworkKind::UndirectedGraph => out.push(net.opposite(e, x)),
            _ => out.extend_from_slice(edge.head()),
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Nodes that reach `y` through one (hyper)edge. Sorted, no repeats.
pub fn predecessors(net: &Network, y: NodeId) -> Vec<NodeId> {
    let mut out = Vec::new();
    for &e in net.in_edges(y) {
        let edge = &net.edges()[e.0];
        match net.kind() {
            NetworkKind::UndirectedGraph => out.push(net.opposite(e, y)),
            _ => out.extend_from_slice(edge.tail()),
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Row-major `sources.len() x targets.len()` matrix of `min(d(x, y), 3)`,
/// with `d` the directed hop distance (undirected for undirected graphs).
/// Targets must be distinct.
pub fn capped_distances(net: &Network, sources: &[NodeId], targets: &[NodeId]) -> Vec<u8> {
    let cols = targets.len();
    let mut column: HashMap<NodeId, usize> = HashMap::with_capacity(cols);
    for (j, &y) in targets.iter().enumerate() {
        let prior = column.insert(y, j);
        debug_assert!(prior.is_none(), "duplicate target {y}");
    }
    // one_step[z]: bitset of the targets that z reaches through one edge
    let words = cols.div_ceil(64);
    let mut slot: HashMap<NodeId, usize> = HashMap::new();
    let mut one_step: Vec<u64> = Vec::new();
    for (j, &y) in targets.iter().enumerate() {
        for z in predecessors(net, y) {
            let k = *slot.entry(z).or_insert_with(|| {
                one_step.resize(one_step.len() + words, 0);
                one_step.len() / words - 1
            });
            one_step[k * words + j / 64] |= 1 << (j % 64);
        }
    }

    let mut out = vec![3u8; sources.len() * cols];
    let mut two = vec![0u64; words];
    for (i, &x) in sources.iter().enumerate() {
        two.fill(0);
        let row = &mut out[i * cols..(i + 1) * cols];
        let succ = successors(net, x);
        for z in &succ {
            if let Some(&k) = slot.get(z) {
                for (w, m) in two.iter_mut().zip(&one_step[k * words..(k + 1) * words]) {
                    *w |= m;
                }
            }
        }
        for (wi, &w) in two.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                row[wi * 64 + bits.trailing_zeros() as usize] = 2;
                bits &= bits - 1;
            }
        }
        for z in &succ {
            if let Some(&j) = column.get(z) {
                row[j] = 1;
            }
        }
        if let Some(&j) = column.get(&x) {
            row[j] = 0;
        }
    }
    out
}

/// Hop distance from `from` to `to` by breadth-first search, or `None` when
/// `to` is farther than `max_depth`.
pub fn bounded_hop_distance(
    net: &Network,
    from: NodeId,
    to: NodeId,
    max_depth: usize,
) -> Option<usize> {
    if from == to {
        return Some(0);
    }
    let mut depth = HashMap::from([(from, 0usize)]);
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        let du = depth[&u];
        if du == max_depth {
            continue;
        }
        for w in successors(net, u) {
            if depth.contains_key(&w) {
                continue;
            }
            if w == to {
                return Some(du + 1);
            }
            depth.insert(w, du + 1);
            queue.push_back(w);
        }
    }
    None
}
