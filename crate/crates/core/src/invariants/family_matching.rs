//! Maximum induced packings of pattern graphs.
//!
//! Every connected vertex subset whose induced subgraph is isomorphic to a
//! pattern becomes a candidate component; two candidates clash if they share
//! or join vertices, and a maximum independent set of the clash graph is an
//! optimal packing.

use crate::bitset::Bits;
use crate::families::contains_induced;
use crate::graph::{Graph, VertexSet};

use super::independent::max_independent_set;

/// All connected vertex sets of size `k`, each reported once (ESU enumeration).
pub(crate) fn connected_subsets(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    let n = g.order();
    for root in 0..n {
        let mut sub = vec![root];
        let mut closed = Bits::new(n);
        closed.insert(root);
        closed.or_with(g.row(root));
        let ext: Vec<usize> = g.neighbors(root).filter(|&w| w > root).collect();
        extend(g, k, root, &mut sub, &closed, ext, &mut out);
    }
    out
}

fn extend(
    g: &Graph,
    k: usize,
    root: usize,
    sub: &mut Vec<usize>,
    closed: &Bits,
    mut ext: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if sub.len() == k {
        out.push(sub.clone());
        return;
    }
    while let Some(w) = ext.pop() {
        let mut next_ext = ext.clone();
        // Exclusive neighbours of w: not in or next to the current subset.
        next_ext.extend(g.neighbors(w).filter(|&u| u > root && !closed.contains(u)));
        let mut next_closed = closed.clone();
        next_closed.or_with(g.row(w));
        sub.push(w);
        extend(g, k, root, sub, &next_closed, next_ext, out);
        sub.pop();
    }
}

fn degree_profile(g: &Graph) -> (usize, Vec<usize>) {
    let mut degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    (g.size(), degrees)
}

pub(crate) fn max_family_packing(g: &Graph, patterns: &[Graph]) -> Vec<VertexSet> {
    let profiles: Vec<_> = patterns.iter().map(degree_profile).collect();
    let mut sizes: Vec<usize> = patterns.iter().map(Graph::order).collect();
    sizes.sort_unstable();
    sizes.dedup();

    let mut candidates: Vec<VertexSet> = Vec::new();
    for &k in &sizes {
        for set in connected_subsets(g, k) {
            let set = VertexSet::from(set);
            let (sub, _) = g.induced_subgraph(&set).expect("subset of g");
            let profile = degree_profile(&sub);
            let matches = patterns
                .iter()
                .zip(&profiles)
                .any(|(h, p)| h.order() == k && *p == profile && contains_induced(&sub, h).is_some());
            if matches {
                candidates.push(set);
            }
        }
    }
    candidates.sort();

    let n = g.order();
    let masks: Vec<(Bits, Bits)> = candidates
        .iter()
        .map(|c| {
            let inside = Bits::from_indices(n, c.iter());
            let mut closed = inside.clone();
            for v in c.iter() {
                closed.or_with(g.row(v));
            }
            (inside, closed)
        })
        .collect();
    let clash = Graph::from_fn(candidates.len(), |i, j| masks[i].1.intersects(masks[j].0.words()));
    max_independent_set(&clash).into_iter().map(|i| candidates[i].clone()).collect()
}
