//! The induced-matching pipeline: contract a maximum induced matching, find
//! a path, hairy clique or star in the contracted graph, and expand it back.

use crate::bitset::Bits;
use crate::families::{max_family_parameter, verify_witness, FamilyKind, FamilySpec, Witness};
use crate::graph::{contract_matching, ContractionMap, EdgeSet, Graph, VertexSet};
use crate::invariants::{induced_matching_number, max_clique_within, max_independent_set_within};

use super::independence::hairy_from_clique;
use super::{best_of, pendant_extension, prune_keep, require_connected, ExtractionError, ExtractionOutcome, Stage};

fn precondition(msg: &str) -> ExtractionError {
    ExtractionError::Precondition(msg.to_string())
}

/// Adjacency in the contracted graph, read off the original one.
fn image_adjacent(g: &Graph, cm: &ContractionMap, p: usize, q: usize) -> bool {
    p != q && cm.expansion_of[p].iter().any(|&a| cm.expansion_of[q].iter().any(|&b| g.adjacent(a, b)))
}

fn is_induced_path(adjacent: impl Fn(usize, usize) -> bool, path: &[usize]) -> bool {
    path.iter().enumerate().all(|(i, &p)| {
        path[i + 1..].iter().enumerate().all(|(d, &q)| p != q && adjacent(p, q) == (d == 0))
    })
}

/// The single original vertex behind an uncontracted image vertex.
fn original(cm: &ContractionMap, image: usize) -> usize {
    cm.expansion_of[image][0]
}

/// Smallest end of the contracted edge `image` adjacent to `v`.
fn end_towards(g: &Graph, cm: &ContractionMap, image: usize, v: usize) -> Option<usize> {
    cm.expansion_of[image].iter().copied().find(|&e| g.adjacent(e, v))
}

/// Lifts an induced path of the contracted graph back to `g`.
///
/// An uncontracted vertex maps to itself. A contracted vertex keeps a single
/// end when one end sees all of its path neighbours, and otherwise both ends,
/// ordered along the path. The result is an induced path at least as long as
/// the input.
pub fn expand_contracted_path(g: &Graph, cm: &ContractionMap, path: &[usize]) -> Result<Vec<usize>, ExtractionError> {
    let images = cm.expansion_of.len();
    if path.iter().any(|&p| p >= images) {
        return Err(precondition("path vertex outside the contracted graph"));
    }
    if !is_induced_path(|p, q| image_adjacent(g, cm, p, q), path) {
        return Err(precondition("not an induced path of the contracted graph"));
    }
    if path.windows(2).any(|w| cm.is_contracted(w[0]) && cm.is_contracted(w[1])) {
        return Err(precondition("two contracted vertices are adjacent on the path"));
    }

    let mut out = Vec::with_capacity(2 * path.len());
    for (i, &u) in path.iter().enumerate() {
        let Some((a, b)) = cm.contracted_edge_of[u] else {
            out.push(original(cm, u));
            continue;
        };
        let prev = i.checked_sub(1).map(|j| original(cm, path[j]));
        let next = path.get(i + 1).map(|&q| original(cm, q));
        match (prev, next) {
            (None, None) => out.extend([a, b]),
            (Some(p), Some(q)) => {
                if let Some(z) = [a, b].into_iter().find(|&e| g.adjacent(e, p) && g.adjacent(e, q)) {
                    out.push(z);
                } else if g.adjacent(a, p) {
                    out.extend([a, b]);
                } else {
                    out.extend([b, a]);
                }
            }
            // At an end of the path both ends stay unless that closes a triangle.
            (Some(p), None) => match (g.adjacent(a, p), g.adjacent(b, p)) {
                (true, true) => out.push(a),
                (true, false) => out.extend([a, b]),
                _ => out.extend([b, a]),
            },
            (None, Some(q)) => match (g.adjacent(a, q), g.adjacent(b, q)) {
                (true, true) => out.push(a),
                (true, false) => out.extend([b, a]),
                _ => out.extend([a, b]),
            },
        }
    }
    if !is_induced_path(|p, q| g.adjacent(p, q), &out) {
        return Err(precondition("contracted edges do not come from an induced matching"));
    }
    Ok(out)
}

fn check_witness(gc: &Graph, w: &Witness, want: fn(&FamilySpec) -> bool, what: &str) -> Result<(), ExtractionError> {
    if want(&w.spec) && verify_witness(gc, w) {
        Ok(())
    } else {
        Err(ExtractionError::Precondition(format!("witness is not an induced {what} of the contracted graph")))
    }
}

/// Classifies a contracted leaf hanging off `anchor`: both ends adjacent
/// (`Ok`) or one end adjacent (`Err`, with that end first).
fn classify(g: &Graph, cm: &ContractionMap, leaf: usize, anchor: usize) -> Result<(usize, usize), (usize, usize)> {
    let (a, b) = cm.contracted_edge_of[leaf].expect("contracted leaf");
    match (g.adjacent(a, anchor), g.adjacent(b, anchor)) {
        (true, true) => Ok((a, b)),
        (true, false) => Err((a, b)),
        _ => Err((b, a)),
    }
}

/// Runs pendant extension in the contracted graph on `pivots` hanging off
/// `t`, and returns for each pivot (in the given order) an original vertex
/// adjacent to it that extends the leg.
fn extend_legs(
    g: &Graph,
    gc: &Graph,
    cm: &ContractionMap,
    t: &[usize],
    pivots: &[usize],
) -> Result<Vec<usize>, ExtractionError> {
    let set: VertexSet = pivots.iter().copied().collect();
    let found = pendant_extension(gc, &t.iter().copied().collect(), &set)?;
    Ok(pivots
        .iter()
        .map(|&p| {
            let q = found[set.as_slice().binary_search(&p).expect("pivot present")];
            let anchor = original(cm, p);
            end_towards(g, cm, q, anchor).expect("pendant is adjacent to its pivot")
        })
        .collect())
}

fn leg_rank(spec: &FamilySpec) -> usize {
    match spec {
        FamilySpec::TriangleClique { .. } | FamilySpec::Friendship { .. } => 0,
        _ => 1,
    }
}

/// Turns an induced `H_k^1` of the contracted graph, with its clique outside
/// the contracted vertices, into `T_t` or `H_t^2` in `g`.
///
/// Contracted leaves split into those whose edge has both ends or one end on
/// the clique vertex (giving `T_t` and `H_t^2`); uncontracted leaves are
/// extended by pendant extension into `H_t^2`. The largest result wins,
/// `T_t` on ties. `gc` and `cm` come from contracting a matching of `g`.
pub fn expand_hairy(g: &Graph, gc: &Graph, cm: &ContractionMap, w: &Witness) -> Result<ExtractionOutcome, ExtractionError> {
    check_witness(gc, w, |s| matches!(s, FamilySpec::HairyClique { l: 1, .. }), "H_k^1")?;
    let k = w.spec.parameter();
    let (clique, leaves) = w.embedding.split_at(k);
    if clique.iter().any(|&v| cm.is_contracted(v)) {
        return Err(precondition("hairy clique core meets the contracted vertices"));
    }

    let mut both = (Vec::new(), Vec::new());
    let mut one = (Vec::new(), Vec::new());
    let mut outside = Vec::new();
    for (&c, &leaf) in clique.iter().zip(leaves) {
        let anchor = original(cm, c);
        if !cm.is_contracted(leaf) {
            outside.push((anchor, leaf));
            continue;
        }
        let (class, (x, y)) = match classify(g, cm, leaf, anchor) {
            Ok(ends) => (&mut both, ends),
            Err(ends) => (&mut one, ends),
        };
        class.0.push(anchor);
        class.1.extend([x, y]);
    }

    let mut candidates = Vec::new();
    for (class, spec) in [(both, FamilySpec::triangle_clique as fn(usize) -> FamilySpec), (one, |t| FamilySpec::hairy_clique(t, 2))] {
        let (mut embedding, tails) = class;
        if !embedding.is_empty() {
            let t = embedding.len();
            embedding.extend(tails);
            candidates.push(Witness { spec: spec(t), embedding });
        }
    }
    if !outside.is_empty() {
        let pivots: Vec<usize> = outside.iter().map(|&(_, leaf)| leaf).collect();
        let mut t: Vec<usize> = clique.iter().zip(leaves).filter(|(_, l)| !cm.is_contracted(**l)).map(|(&c, _)| c).collect();
        t.extend(&pivots);
        let tips = extend_legs(g, gc, cm, &t, &pivots)?;
        let mut embedding: Vec<usize> = outside.iter().map(|&(a, _)| a).collect();
        for (&(_, leaf), tip) in outside.iter().zip(tips) {
            embedding.extend([original(cm, leaf), tip]);
        }
        candidates.push(Witness { spec: FamilySpec::hairy_clique(outside.len(), 2), embedding });
    }
    Ok(best_of(1, Stage::HairyExpansion, candidates, leg_rank))
}

/// Turns an induced star of the contracted graph into `F_t` or `S_t^2` in `g`.
///
/// A contracted centre is replaced by the end of its edge seeing more leaves
/// (the smaller end on ties), whose leaves are then extended by pendant
/// extension. An uncontracted centre extends its uncontracted leaves the same
/// way, and its contracted leaves split into both-ends (`F_t`) and one-end
/// (`S_t^2`) classes. The largest result wins, `F_t` on ties.
pub fn expand_star(g: &Graph, gc: &Graph, cm: &ContractionMap, w: &Witness) -> Result<ExtractionOutcome, ExtractionError> {
    check_witness(gc, w, |s| matches!(s, FamilySpec::Star { .. }), "star")?;
    let c = w.embedding[0];
    let leaves = &w.embedding[1..];
    let spider = |centre: usize, legs: Vec<(usize, usize)>| {
        let mut embedding = vec![centre];
        let t = legs.len();
        embedding.extend(legs.into_iter().flat_map(|(a, b)| [a, b]));
        Witness { spec: FamilySpec::spider(t, 2), embedding }
    };
    let extend = |centre: usize, pivots: Vec<usize>| -> Result<Option<Witness>, ExtractionError> {
        if pivots.is_empty() {
            return Ok(None);
        }
        let mut t = vec![c];
        t.extend(&pivots);
        let tips = extend_legs(g, gc, cm, &t, &pivots)?;
        let legs = pivots.iter().map(|&p| original(cm, p)).zip(tips).collect();
        Ok(Some(spider(centre, legs)))
    };

    let mut candidates = Vec::new();
    if let Some((a, b)) = cm.contracted_edge_of[c] {
        if leaves.iter().any(|&l| cm.is_contracted(l)) {
            return Err(precondition("contracted centre with a contracted leaf"));
        }
        let seen_by = |x: usize| -> Vec<usize> { leaves.iter().copied().filter(|&l| g.adjacent(x, original(cm, l))).collect() };
        let (la, lb) = (seen_by(a), seen_by(b));
        let (x, pivots) = if lb.len() > la.len() { (b, lb) } else { (a, la) };
        candidates.extend(extend(x, pivots)?);
    } else {
        let centre = original(cm, c);
        let (inside, outside): (Vec<usize>, Vec<usize>) = leaves.iter().partition(|&&l| cm.is_contracted(l));
        let mut fan = Vec::new();
        let mut legs = Vec::new();
        for leaf in inside {
            match classify(g, cm, leaf, centre) {
                Ok(ends) => fan.push(ends),
                Err(ends) => legs.push(ends),
            }
        }
        if !fan.is_empty() {
            let t = fan.len();
            let mut embedding = vec![centre];
            embedding.extend(fan.into_iter().flat_map(|(a, b)| [a, b]));
            candidates.push(Witness { spec: FamilySpec::friendship(t), embedding });
        }
        if !legs.is_empty() {
            candidates.push(spider(centre, legs));
        }
        candidates.extend(extend(centre, outside)?);
    }
    Ok(best_of(1, Stage::StarExpansion, candidates, leg_rank))
}

fn rank(spec: &FamilySpec) -> usize {
    match spec {
        FamilySpec::TriangleClique { .. } => 0,
        FamilySpec::HairyClique { .. } => 1,
        FamilySpec::Friendship { .. } => 2,
        FamilySpec::Spider { .. } => 3,
        _ => 4,
    }
}

/// Induced `P_k`, `H_k^2`, `T_k`, `S_k^2` or `F_k` with `k ≥ n`.
///
/// Takes a maximum induced matching `M`, prunes non-cut-vertices outside
/// `V(M)`, contracts `M`, and runs all three cases on the contracted graph:
/// the longest induced path, the largest clique avoiding the contracted
/// vertices grown into a hairy clique, and the largest star at every centre.
/// The largest expanded witness wins; ties prefer `T`, `H^2`, `F`, `S^2`, `P`
/// in that order.
pub fn extract_induced_matching_witness(g: &Graph, n: usize) -> Result<ExtractionOutcome, ExtractionError> {
    if n == 0 {
        return Err(ExtractionError::ZeroParameter);
    }
    require_connected(g)?;
    let (size, m) = induced_matching_number(g);
    if size == 0 {
        return Ok(ExtractionOutcome::failed(Stage::InducedMatching, "the graph has no edge"));
    }
    let (h, map) = prune_keep(g, &m.vertices())?;
    let mut local = vec![usize::MAX; g.order()];
    for (i, &v) in map.iter().enumerate() {
        local[v] = i;
    }
    let m_local = EdgeSet::new(&h, m.iter().map(|(a, b)| (local[a], local[b])))?;
    let (gc, cm) = contract_matching(&h, &m_local)?;

    let mut candidates = Vec::new();
    if let Some(p) = max_family_parameter(&gc, FamilyKind::Path).1 {
        let path = expand_contracted_path(&h, &cm, &p.embedding)?;
        candidates.push(Witness { spec: FamilySpec::path(path.len()), embedding: path });
    }

    let contracted = Bits::from_indices(gc.order(), cm.contracted_vertices().iter());
    let clique = max_clique_within(&gc, &Bits::full(gc.order()).and_not(contracted.words()));
    if !clique.is_empty() {
        let hairy = hairy_from_clique(&gc, &clique)?;
        candidates.extend(expand_hairy(&h, &gc, &cm, &hairy)?.into_witness());
    }

    for c in 0..gc.order() {
        let leaves = max_independent_set_within(&gc, &gc.neighbor_bits(c));
        if leaves.is_empty() {
            continue;
        }
        let mut embedding = vec![c];
        embedding.extend(&leaves);
        let star = Witness { spec: FamilySpec::star(leaves.len()), embedding };
        candidates.extend(expand_star(&h, &gc, &cm, &star)?.into_witness());
    }
    Ok(best_of(n, Stage::CaseAnalysis, candidates, rank).remap(&map))
}
