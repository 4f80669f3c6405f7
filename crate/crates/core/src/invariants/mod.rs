//! Exact graph parameters: independence, matching, induced matching, vertex
//! cover, fractional matching, and induced family-matching numbers.
//!
//! Where several optimal witnesses exist the lexicographically least one is
//! returned (vertex sets compared as sorted lists; edge sets as sorted lists of
//! `(min, max)` pairs), so every result is deterministic.

mod family_matching;
mod independent;
mod matching;

use num_rational::Ratio;
use thiserror::Error;

use crate::bitset::Bits;
use crate::graph::{Edge, EdgeSet, Graph, VertexSet};

pub(crate) use independent::{max_clique_within, max_independent_set, max_independent_set_within};
pub(crate) use matching::matching_number_within;

/// Exact rational value. Fractional matching numbers are always half-integers.
pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyListError {
    #[error("the family list is empty")]
    Empty,
    #[error("family member {0} is empty or disconnected")]
    NotConnected(usize),
}

/// A non-empty finite list of connected pattern graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyList(Vec<Graph>);

impl FamilyList {
    pub fn new(members: Vec<Graph>) -> Result<Self, FamilyListError> {
        if members.is_empty() {
            return Err(FamilyListError::Empty);
        }
        if let Some(i) = members.iter().position(|h| !h.is_connected()) {
            return Err(FamilyListError::NotConnected(i));
        }
        Ok(FamilyList(members))
    }

    pub fn members(&self) -> &[Graph] {
        &self.0
    }
}

/// α(G) with the lexicographically least maximum independent set.
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    let set = max_independent_set(g);
    (set.len(), set.into())
}

/// α′(G) with the lexicographically least maximum matching.
pub fn maximum_matching(g: &Graph) -> (usize, EdgeSet) {
    let edges = matching::lexicographic_max_matching(g);
    (edges.len(), EdgeSet::from_sorted_unchecked(edges))
}

/// α′(G) alone, without the tie-breaking pass.
pub fn matching_number(g: &Graph) -> usize {
    matching_number_within(g, &Bits::full(g.order()))
}

/// Graph on the edges of `g` (in lexicographic order) where two edges clash
/// when they share an endpoint or an edge of `g` joins them.
fn induced_matching_conflicts(g: &Graph, edges: &[Edge]) -> Graph {
    Graph::from_fn(edges.len(), |i, j| {
        let (a, b) = edges[i];
        let (c, d) = edges[j];
        a == c || a == d || b == c || b == d || g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, c) || g.adjacent(b, d)
    })
}

/// α″(G) with the lexicographically least maximum induced matching.
pub fn induced_matching_number(g: &Graph) -> (usize, EdgeSet) {
    let edges = g.edges();
    let conflicts = induced_matching_conflicts(g, &edges);
    let picked: Vec<Edge> = max_independent_set(&conflicts).into_iter().map(|i| edges[i]).collect();
    (picked.len(), EdgeSet::from_sorted_unchecked(picked))
}

/// β(G), the minimum number of vertices meeting every edge: order − α(G).
pub fn vertex_cover_number(g: &Graph) -> usize {
    g.order() - max_independent_set(g).len()
}

/// α′_f(G), the optimum of the fractional matching linear program, exactly.
///
/// Computed as half the maximum matching of the bipartite double cover.
pub fn fractional_matching_number(g: &Graph) -> Rational {
    Rational::new(matching::double_cover_matching(g) as i64, 2)
}

/// α_𝓗(G): the largest number of components of an induced subgraph of `g`
/// whose components are each isomorphic to a member of `family`, with the
/// component vertex sets of one optimum (lexicographically least list).
pub fn induced_family_matching_number(g: &Graph, family: &FamilyList) -> (usize, Vec<VertexSet>) {
    let comps = family_matching::max_family_packing(g, family.members());
    (comps.len(), comps)
}

/// True iff `m` is an induced matching of `g`.
pub fn is_induced_matching(g: &Graph, m: &EdgeSet) -> bool {
    if m.check_matching(g.order()).is_err() {
        return false;
    }
    let edges = m.as_slice();
    let conflicts = induced_matching_conflicts(g, edges);
    edges.iter().all(|&(u, v)| g.adjacent(u, v)) && conflicts.size() == 0
}
