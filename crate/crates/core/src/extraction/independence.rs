//! Path/clique/star search and the independence-number pipeline.

use crate::bitset::Bits;
use crate::families::{max_family_parameter, FamilyKind, FamilySpec, Witness};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{independence_number, max_clique_within};

use super::{best_of, pendant_extension, prune_keep, require_connected, ExtractionError, ExtractionOutcome, Stage};

fn check(g: &Graph, n: usize) -> Result<(), ExtractionError> {
    if n == 0 {
        return Err(ExtractionError::ZeroParameter);
    }
    require_connected(g)
}

/// Largest induced path, clique or star, preferring them in that order when
/// parameters tie. Fails unless one of them reaches `n`.
pub fn extract_path_clique_star(g: &Graph, n: usize) -> Result<ExtractionOutcome, ExtractionError> {
    check(g, n)?;
    let candidates = [FamilyKind::Path, FamilyKind::Clique, FamilyKind::Star]
        .into_iter()
        .filter_map(|kind| max_family_parameter(g, kind).1)
        .collect();
    Ok(best_of(n, Stage::PathCliqueStar, candidates, |_| 0))
}

/// `H_k^1` from a clique whose vertices are cut-vertices of `g` but lie
/// outside the protected independent set.
pub(crate) fn hairy_from_clique(g: &Graph, clique: &[usize]) -> Result<Witness, ExtractionError> {
    let set = VertexSet::from(clique.to_vec());
    let pendants = pendant_extension(g, &set, &set)?;
    let mut embedding = set.as_slice().to_vec();
    embedding.extend(pendants);
    Ok(Witness { spec: FamilySpec::hairy_clique(set.len(), 1), embedding })
}

fn rank(spec: &FamilySpec) -> usize {
    match spec {
        FamilySpec::HairyClique { .. } => 0,
        FamilySpec::Star { .. } => 1,
        _ => 2,
    }
}

/// Induced `P_k`, `H_k^1` or `K_{1,k}` with `k ≥ n`.
///
/// Takes a maximum independent set `U`, prunes every other non-cut-vertex,
/// and then looks for a long induced path, a large star, or a clique avoiding
/// `U` that pendant extension grows into a hairy clique. The largest of the
/// three wins; ties go to the hairy clique, then the star.
pub fn extract_independence_witness(g: &Graph, n: usize) -> Result<ExtractionOutcome, ExtractionError> {
    check(g, n)?;
    let (_, u) = independence_number(g);
    let (h, map) = prune_keep(g, &u)?;
    let outside = Bits::full(h.order()).and_not(Bits::from_indices(h.order(), (0..h.order()).filter(|&v| u.contains(map[v]))).words());

    let mut candidates = Vec::new();
    let clique = max_clique_within(&h, &outside);
    if !clique.is_empty() {
        candidates.push(hairy_from_clique(&h, &clique)?);
    }
    for kind in [FamilyKind::Star, FamilyKind::Path] {
        candidates.extend(max_family_parameter(&h, kind).1);
    }
    Ok(best_of(n, Stage::PathCliqueStar, candidates, rank).remap(&map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, verify_witness};

    fn run(g: &Graph, n: usize, f: fn(&Graph, usize) -> Result<ExtractionOutcome, ExtractionError>) -> Witness {
        let w = f(g, n).unwrap().into_witness().expect("extraction succeeds");
        assert!(verify_witness(g, &w), "{w:?}");
        w
    }

    #[test]
    fn path_clique_star_examples() {
        assert_eq!(run(&Graph::complete(9), 4, extract_path_clique_star).spec, FamilySpec::clique(9));
        assert_eq!(run(&generate(&FamilySpec::path(10)).unwrap(), 4, extract_path_clique_star).spec, FamilySpec::path(10));
        let s = generate(&FamilySpec::spider(5, 2)).unwrap();
        assert_eq!(run(&s, 4, extract_path_clique_star).spec, FamilySpec::path(5));
        let out = extract_path_clique_star(&generate(&FamilySpec::path(3)).unwrap(), 4).unwrap();
        assert!(matches!(out, ExtractionOutcome::Failed(ref f) if f.stage == Stage::PathCliqueStar));
    }

    #[test]
    fn independence_examples() {
        let star = generate(&FamilySpec::star(7)).unwrap();
        assert_eq!(run(&star, 5, extract_independence_witness).spec, FamilySpec::star(7));
        // The least maximum independent set of H_4^1 uses a clique vertex, so
        // the clique branch only reaches H_3^1 and the path P_4 wins.
        let h = generate(&FamilySpec::hairy_clique(4, 1)).unwrap();
        assert_eq!(run(&h, 3, extract_independence_witness).spec, FamilySpec::path(4));
        // Numbered pendants first, the independent set is the pendants.
        let flipped = Graph::from_fn(8, |u, v| h.adjacent((u + 4) % 8, (v + 4) % 8));
        assert_eq!(run(&flipped, 3, extract_independence_witness).spec, FamilySpec::hairy_clique(4, 1));
        let p = generate(&FamilySpec::path(12)).unwrap();
        assert_eq!(run(&p, 4, extract_independence_witness).spec, FamilySpec::path(11));
    }

    #[test]
    fn clique_without_hairs_fails() {
        let out = extract_independence_witness(&Graph::complete(9), 3).unwrap();
        assert!(out.witness().is_none());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(extract_independence_witness(&Graph::empty(2), 2), Err(crate::graph::GraphError::Disconnected.into()));
        assert_eq!(extract_path_clique_star(&Graph::complete(2), 0), Err(ExtractionError::ZeroParameter));
    }
}
