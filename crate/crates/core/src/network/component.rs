use super::{Network, NetworkBuilder, NetworkError};

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Weak component label per node (the smallest node id in the component).
fn weak_components(net: &Network) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..net.node_count()).collect();
    for e in net.edges() {
        let mut members = e.tail().iter().chain(e.head()).map(|v| v.0);
        let Some(first) = members.next() else { continue };
        for v in members {
            let a = find(&mut parent, first);
            let b = find(&mut parent, v);
            if a != b {
                let (lo, hi) = (a.min(b), a.max(b));
                parent[hi] = lo;
            }
        }
    }
    (0..parent.len()).map(|v| find(&mut parent, v)).collect()
}

/// Sizes of the weakly connected components, largest first. Ties keep the
/// component with the smaller minimum node id first.
pub fn component_sizes(net: &Network) -> Vec<usize> {
    let roots = weak_components(net);
    let mut sizes = vec![0usize; roots.len()];
    for &r in &roots {
        sizes[r] += 1;
    }
    let mut comps: Vec<(usize, usize)> = sizes
        .into_iter()
        .enumerate()
        .filter(|&(_, s)| s > 0)
        .collect();
    comps.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    comps.into_iter().map(|(_, s)| s).collect()
}

/// Induced subnetwork on the largest weakly connected component.
///
/// Direction is ignored for connectivity. Labels, edge order and weights are
/// kept; node ids are re-densified in ascending order of the old ids.
pub fn largest_component(net: &Network) -> Result<Network, NetworkError> {
    if !net.kind().is_graph() {
        return Err(NetworkError::NotAGraph(net.kind()));
    }
    if net.is_empty() {
        return Err(NetworkError::Empty);
    }
    let roots = weak_components(net);
    let mut sizes = vec![0usize; roots.len()];
    for &r in &roots {
        sizes[r] += 1;
    }
    // roots are component minima, so scanning ascending breaks ties toward the
    // smallest minimum id
    let mut best = 0;
    for r in 0..sizes.len() {
        if sizes[r] > sizes[best] {
            best = r;
        }
    }

    let mut builder = NetworkBuilder::new(net.kind()).weighted(net.is_weighted());
    let mut remap = vec![None; net.node_count()];
    for v in net.nodes() {
        if roots[v.0] == best {
            remap[v.0] = Some(builder.node(net.label(v)));
        }
    }
    for e in net.edges() {
        let (a, b) = e.endpoints();
        if let (Some(a), Some(b)) = (remap[a.0], remap[b.0]) {
            builder
                .add_edge(a, b, e.weight().clone())
                .expect("edge of a valid network");
        }
    }
    Ok(builder.build())
}

/// Node ids of the component containing `v`, found by traversal. Used to
/// check component extraction independently of the union-find above.
#[cfg(test)]
pub(crate) fn reachable_undirected(net: &Network, v: super::NodeId) -> Vec<super::NodeId> {
    let mut seen = vec![false; net.node_count()];
    let mut stack = vec![v];
    seen[v.0] = true;
    let mut out = Vec::new();
    while let Some(u) = stack.pop() {
        out.push(u);
        for &e in net.incident(u) {
            let w = net.opposite(e, u);
            if !seen[w.0] {
                seen[w.0] = true;
                stack.push(w);
            }
        }
    }
    out.sort();
    out
}
