//! Exhaustive generation of connected graphs up to isomorphism.
//!
//! Every connected graph on `k + 1` vertices arises from a connected graph on
//! `k` vertices by adding a vertex with a non-empty neighbourhood (delete any
//! non-cut vertex to go back). Candidates are deduplicated through a
//! canonical form computed by colour refinement plus individualisation.

use std::collections::BTreeSet;

use crate::graph::Graph;
use crate::graph6::write_graph6;

/// Refines `colors` to the coarsest equitable partition below it. Colours are
/// renumbered by sorted signature, so the result is isomorphism-invariant.
fn refine(g: &Graph, colors: &mut Vec<usize>) {
    let n = g.order();
    let mut cells = count_cells(colors);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        for v in 0..n {
            colors[v] = distinct.binary_search(&&signatures[v]).expect("signature present");
        }
        if distinct.len() == cells {
            return;
        }
        cells = distinct.len();
    }
}

fn count_cells(colors: &[usize]) -> usize {
    colors.iter().collect::<BTreeSet<_>>().len()
}

fn relabel(g: &Graph, position: &[usize]) -> Graph {
    let mut inverse = vec![0; position.len()];
    for (v, &p) in position.iter().enumerate() {
        inverse[p] = v;
    }
    Graph::from_fn(g.order(), |a, b| g.adjacent(inverse[a], inverse[b]))
}

fn search(g: &Graph, colors: Vec<usize>, best: &mut Option<String>) {
    let n = g.order();
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
        let code = write_graph6(&relabel(g, &colors));
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    for v in (0..n).filter(|&v| colors[v] == target) {
        let mut next: Vec<usize> = colors
            .iter()
            .enumerate()
            .map(|(u, &c)| if c > target || (c == target && u != v) { c + 1 } else { c })
            .collect();
        refine(g, &mut next);
        search(g, next, best);
    }
}

/// The graph6 string of a canonical relabelling of `g`: isomorphic graphs
/// (and only those) get the same string.
pub fn canonical_graph6(g: &Graph) -> String {
    let mut colors = vec![0; g.order()];
    refine(g, &mut colors);
    let mut best = None;
    search(g, colors, &mut best);
    best.unwrap_or_else(|| write_graph6(g))
}

/// One representative per isomorphism class of connected graphs of each order
/// `1..=max_order`, in canonical form, sorted by order then graph6 string.
pub fn connected_graphs_up_to(max_order: usize) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if max_order == 0 {
        return levels;
    }
    levels.push(vec![Graph::empty(1)]);
    for k in 1..max_order {
        let mut seen = BTreeSet::new();
        for g in &levels[k - 1] {
            for mask in 1u64..(1u64 << k) {
                let h = Graph::from_fn(k + 1, |u, v| {
                    if v == k {
                        mask >> u & 1 == 1
                    } else {
                        g.adjacent(u, v)
                    }
                });
                seen.insert(canonical_graph6(&h));
            }
        }
        let next = seen
            .into_iter()
            .map(|code| crate::graph6::parse_graph6(&code).expect("canonical code parses"))
            .collect();
        levels.push(next);
    }
    levels
}

/// All connected graphs on `1..=max_order` vertices, flattened.
pub fn connected_graphs(max_order: usize) -> Vec<Graph> {
    connected_graphs_up_to(max_order).into_iter().flatten().collect()
}
