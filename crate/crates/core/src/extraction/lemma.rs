//! Pendant extension and the cut-vertex pruning reduction.

use crate::bitset::Bits;
use crate::graph::{Graph, VertexSet};

use super::{require_connected, ExtractionError};

/// For each pivot `v_i` of the connected subgraph `G[T]`, finds a vertex
/// `v_i'` outside `T` whose only neighbour in `T` is `v_i`; the returned
/// vertices are pairwise non-adjacent. `result[i]` belongs to the `i`-th
/// pivot in sorted order.
///
/// Each pivot must be a cut-vertex of `G` but not of `G[T]`. The chosen
/// vertex is the smallest neighbour of `v_i` whose component in `G − v_i`
/// misses `T`.
pub fn pendant_extension(g: &Graph, t: &VertexSet, pivots: &VertexSet) -> Result<Vec<usize>, ExtractionError> {
    require_connected(g)?;
    t.check_range(g.order())?;
    pivots.check_range(g.order())?;
    let (sub, _) = g.induced_subgraph(t)?;
    if !sub.is_connected() {
        return Err(ExtractionError::Precondition("T does not induce a connected subgraph".into()));
    }
    let cuts = g.cut_vertices()?;
    let sub_cuts = sub.cut_vertices()?;
    let in_t = Bits::from_indices(g.order(), t.iter());

    let mut out = Vec::with_capacity(pivots.len());
    for v in pivots.iter() {
        let fail = |reason| ExtractionError::PendantPrecondition { pivot: v, reason };
        let Ok(local) = t.as_slice().binary_search(&v) else {
            return Err(fail("pivot is not in T"));
        };
        if !cuts.contains(v) {
            return Err(fail("pivot is not a cut-vertex of G"));
        }
        if sub_cuts.contains(local) {
            return Err(fail("pivot is a cut-vertex of G[T]"));
        }
        let pick = g
            .neighbors(v)
            .filter(|&w| !in_t.contains(w))
            .find(|&w| !g.component_of(w, Some(v)).intersects(in_t.words()));
        match pick {
            Some(w) => out.push(w),
            None => return Err(fail("no component of G - v avoids T")),
        }
    }
    Ok(out)
}

/// Deletes unprotected non-cut-vertices, smallest index first, until every
/// remaining unprotected vertex is a cut-vertex. Returns the pruned graph and
/// the original index of each of its vertices.
pub fn prune_keep(g: &Graph, protected: &VertexSet) -> Result<(Graph, Vec<usize>), ExtractionError> {
    require_connected(g)?;
    protected.check_range(g.order())?;
    if protected.is_empty() {
        return Err(ExtractionError::Precondition("the protected set is empty".into()));
    }
    let mut current = g.clone();
    let mut map: Vec<usize> = (0..g.order()).collect();
    loop {
        let cuts = current.cut_vertices()?;
        let victim = (0..current.order()).find(|&v| !protected.contains(map[v]) && !cuts.contains(v));
        let Some(victim) = victim else {
            return Ok((current, map));
        };
        let keep: VertexSet = (0..current.order()).filter(|&v| v != victim).collect();
        let (next, local) = current.induced_subgraph(&keep)?;
        map = local.into_iter().map(|v| map[v]).collect();
        current = next;
    }
}
