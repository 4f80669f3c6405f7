//! Maximum matchings in general graphs (Edmonds' blossom algorithm) and the
//! half-integral fractional matching number.

use std::collections::VecDeque;

use crate::bitset::Bits;
use crate::graph::{Edge, Graph};

const NONE: usize = usize::MAX;

/// Blossom-shrinking augmenting path search on the subgraph induced by `active`.
struct Blossom<'g> {
    g: &'g Graph,
    active: &'g Bits,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph, active: &'g Bits) -> Self {
        let n = g.order();
        Blossom {
            g,
            active,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> usize {
        let n = self.g.order();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            let mut next = 0;
            while let Some(to) = self.g.next_neighbor(v, next) {
                next = to + 1;
                if !self.active.contains(to) || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        NONE
    }

    fn solve(mut self) -> Vec<usize> {
        // Greedy start.
        for v in self.active.iter() {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(w) = self.g.neighbors(v).find(|&w| self.active.contains(w) && self.mate[w] == NONE) {
                self.mate[v] = w;
                self.mate[w] = v;
            }
        }
        for v in self.active.iter() {
            if self.mate[v] != NONE {
                continue;
            }
            let mut w = self.find_path(v);
            while w != NONE {
                let pv = self.parent[w];
                let ppv = self.mate[pv];
                self.mate[w] = pv;
                self.mate[pv] = w;
                w = ppv;
            }
        }
        self.mate
    }
}

/// Size of a maximum matching of the subgraph induced by `active`.
pub(crate) fn matching_number_within(g: &Graph, active: &Bits) -> usize {
    let mate = Blossom::new(g, active).solve();
    mate.iter().filter(|&&m| m != NONE).count() / 2
}

/// Lexicographically least maximum matching, as sorted edges.
///
/// Edges are scanned in lexicographic order and kept whenever a maximum
/// matching extending the kept edges still exists.
pub(crate) fn lexicographic_max_matching(g: &Graph) -> Vec<Edge> {
    let mut active = Bits::full(g.order());
    let mut remaining = matching_number_within(g, &active);
    let mut chosen = Vec::with_capacity(remaining);
    for (u, v) in g.edges() {
        if remaining == 0 {
            break;
        }
        if !active.contains(u) || !active.contains(v) {
            continue;
        }
        active.remove(u);
        active.remove(v);
        if matching_number_within(g, &active) == remaining - 1 {
            chosen.push((u, v));
            remaining -= 1;
        } else {
            active.insert(u);
            active.insert(v);
        }
    }
    chosen
}

/// Maximum matching size of the bipartite double cover of `g` (each vertex
/// `v` split into a left and a right copy, edge `uv` giving `u_L v_R` and
/// `v_L u_R`), by augmenting paths. This equals twice the fractional
/// matching number.
pub(crate) fn double_cover_matching(g: &Graph) -> usize {
    let n = g.order();
    let mut right_mate = vec![NONE; n];
    let mut size = 0;
    for left in 0..n {
        let mut visited = vec![false; n];
        if augment(g, left, &mut visited, &mut right_mate) {
            size += 1;
        }
    }
    size
}

fn augment(g: &Graph, left: usize, visited: &mut [bool], right_mate: &mut [usize]) -> bool {
    for right in g.neighbors(left) {
        if visited[right] {
            continue;
        }
        visited[right] = true;
        if right_mate[right] == NONE || augment(g, right_mate[right], visited, right_mate) {
            right_mate[right] = left;
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
    }

    #[test]
    fn blossom_on_odd_cycles() {
        for n in 3..10 {
            assert_eq!(matching_number_within(&cycle(n), &Bits::full(n)), n / 2);
        }
    }

    #[test]
    fn blossom_needs_shrinking() {
        // Triangle 0-1-2 with tails 2-3 and 0-4-5: greedy picks (0,1), (2,3)
        // then must augment 5-4-0-... through the odd cycle.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (0, 4), (4, 5)]).unwrap();
        assert_eq!(matching_number_within(&g, &Bits::full(6)), 3);
    }

    #[test]
    fn lexicographic_choice() {
        let p4 = Graph::from_fn(4, |u, v| v == u + 1);
        assert_eq!(lexicographic_max_matching(&p4), vec![(0, 1), (2, 3)]);
        let c5 = cycle(5);
        assert_eq!(lexicographic_max_matching(&c5), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn double_cover_of_odd_cycle_is_perfect() {
        assert_eq!(double_cover_matching(&cycle(5)), 5);
        assert_eq!(double_cover_matching(&Graph::complete(2)), 2);
        assert_eq!(double_cover_matching(&Graph::empty(3)), 0);
    }
}
