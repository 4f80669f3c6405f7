//! Naive exhaustive oracles shared by the integration tests.
#![allow(dead_code)]

use ramsey_witness::{Edge, Graph, Rational};

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
}

fn independent(g: &Graph, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| !g.adjacent(a, b)))
}

/// Largest independent set; among those, the least sorted list.
pub fn independence(g: &Graph) -> (usize, Vec<usize>) {
    let mut best: Vec<usize> = Vec::new();
    for s in subsets(g.order()) {
        if independent(g, &s) && (s.len() > best.len() || (s.len() == best.len() && s < best)) {
            best = s;
        }
    }
    (best.len(), best)
}

/// Every matching of `g`, each as a sorted edge list.
pub fn matchings(g: &Graph) -> Vec<Vec<Edge>> {
    fn go(g: &Graph, edges: &[Edge], from: usize, used: &mut Vec<bool>, cur: &mut Vec<Edge>, out: &mut Vec<Vec<Edge>>) {
        out.push(cur.clone());
        for i in from..edges.len() {
            let (a, b) = edges[i];
            if used[a] || used[b] {
                continue;
            }
            used[a] = true;
            used[b] = true;
            cur.push((a, b));
            go(g, edges, i + 1, used, cur, out);
            cur.pop();
            used[a] = false;
            used[b] = false;
        }
    }
    let edges = g.edges();
    let mut out = Vec::new();
    go(g, &edges, 0, &mut vec![false; g.order()], &mut Vec::new(), &mut out);
    out
}

fn least_largest(candidates: impl Iterator<Item = Vec<Edge>>) -> (usize, Vec<Edge>) {
    let mut best: Vec<Edge> = Vec::new();
    for m in candidates {
        if m.len() > best.len() || (m.len() == best.len() && m < best) {
            best = m;
        }
    }
    (best.len(), best)
}

pub fn matching(g: &Graph) -> (usize, Vec<Edge>) {
    least_largest(matchings(g).into_iter())
}

pub fn is_induced_matching(g: &Graph, m: &[Edge]) -> bool {
    m.iter().enumerate().all(|(i, &(a, b))| {
        m[i + 1..].iter().all(|&(c, d)| !(g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, c) || g.adjacent(b, d)))
    })
}

pub fn induced_matching(g: &Graph) -> (usize, Vec<Edge>) {
    least_largest(matchings(g).into_iter().filter(|m| is_induced_matching(g, m)))
}

/// Minimum fractional vertex cover over half-integral weights, which equals
/// the fractional matching number by duality and half-integrality.
pub fn fractional_cover(g: &Graph) -> Rational {
    let n = g.order();
    let edges = g.edges();
    let mut best = n as i64 * 2;
    let mut w = vec![0i64; n];
    loop {
        if edges.iter().all(|&(a, b)| w[a] + w[b] >= 2) {
            best = best.min(w.iter().sum());
        }
        let mut i = 0;
        while i < n && w[i] == 2 {
            w[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        w[i] += 1;
    }
    Rational::new(best, 2)
}

pub fn is_induced_path(g: &Graph, p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &a)| p[i + 1..].iter().enumerate().all(|(d, &b)| a != b && g.adjacent(a, b) == (d == 0)))
}
