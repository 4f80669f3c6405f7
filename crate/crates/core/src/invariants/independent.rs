//! Exact maximum independent set by branch and bound.
//!
//! Branching takes the smallest candidate vertex, include-first, so the first
//! maximum set reached is the lexicographically least one among all maximum
//! independent sets. The bound is a greedy clique cover of the candidates.

use crate::bitset::Bits;
use crate::graph::Graph;

struct Search<'g> {
    g: &'g Graph,
    chosen: Vec<usize>,
    best: Vec<usize>,
    found: bool,
}

impl Search<'_> {
    /// Upper bound on the independent vertices still available in `cand`:
    /// the number of cliques in a greedy clique partition.
    fn cover_bound(&self, cand: &Bits, limit: usize) -> usize {
        let mut rest = cand.clone();
        let mut cliques = 0;
        while let Some(v) = rest.first() {
            cliques += 1;
            if cliques > limit {
                return cliques;
            }
            rest.remove(v);
            let mut common = rest.and(self.g.row(v));
            while let Some(w) = common.first() {
                rest.remove(w);
                common.remove(w);
                common.and_with(self.g.row(w));
            }
        }
        cliques
    }

    fn run(&mut self, mut cand: Bits) {
        loop {
            let Some(v) = cand.first() else {
                if !self.found || self.chosen.len() > self.best.len() {
                    self.best.clone_from(&self.chosen);
                    self.found = true;
                }
                return;
            };
            if self.found {
                let need = (self.best.len() + 1).saturating_sub(self.chosen.len());
                if need > 0 && self.cover_bound(&cand, need) < need {
                    return;
                }
            }
            cand.remove(v);
            let isolated = !cand.intersects(self.g.row(v));
            let mut with_v = cand.clone();
            with_v.and_not_with(self.g.row(v));
            self.chosen.push(v);
            self.run(with_v);
            self.chosen.pop();
            if isolated {
                // Any set avoiding v could be extended by v.
                return;
            }
        }
    }
}

/// Lexicographically least maximum independent set of `g` restricted to `allowed`.
pub(crate) fn max_independent_set_within(g: &Graph, allowed: &Bits) -> Vec<usize> {
    let mut s = Search { g, chosen: Vec::new(), best: Vec::new(), found: false };
    s.run(allowed.clone());
    s.best
}

pub(crate) fn max_independent_set(g: &Graph) -> Vec<usize> {
    max_independent_set_within(g, &Bits::full(g.order()))
}

/// Lexicographically least maximum clique within `allowed`.
pub(crate) fn max_clique_within(g: &Graph, allowed: &Bits) -> Vec<usize> {
    max_independent_set_within(&g.complement(), allowed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_tie_break() {
        // P_4: maximum independent sets {0,2}, {0,3}, {1,3}.
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(max_independent_set(&p4), vec![0, 2]);
        // C_5: {0,2} is least.
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(max_independent_set(&c5), vec![0, 2]);
    }

    #[test]
    fn empty_and_restricted() {
        assert!(max_independent_set(&Graph::empty(0)).is_empty());
        let k4 = Graph::complete(4);
        let allowed = Bits::from_indices(4, [2, 3]);
        assert_eq!(max_independent_set_within(&k4, &allowed), vec![2]);
        assert_eq!(max_clique_within(&k4, &allowed), vec![2, 3]);
    }
}
