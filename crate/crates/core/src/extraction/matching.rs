//! The matching-number pipeline: colour pairs of matching edges by their
//! cross adjacencies and read a witness off a monochromatic clique.

use serde::{Deserialize, Serialize};

use crate::bitset::Bits;
use crate::families::{FamilySpec, Witness};
use crate::graph::{Graph, VertexSet};
use crate::invariants::maximum_matching;

use super::induced_matching::extract_induced_matching_witness;
use super::{require_connected, ExtractionError, ExtractionOutcome, Stage};

/// Colour of a pair `i < j` of oriented matching edges `x_i y_i`, `x_j y_j`:
/// `a` is `x_i x_j`, `b` is `y_i y_j`, `c` is `x_i y_j`, `d` is `y_i x_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColorQuad {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
}

impl ColorQuad {
    /// Packs the colour as `abcd` in binary.
    pub fn code(self) -> u8 {
        (self.a as u8) << 3 | (self.b as u8) << 2 | (self.c as u8) << 1 | self.d as u8
    }

    pub fn from_code(code: u8) -> Option<Self> {
        (code < 16).then(|| ColorQuad {
            a: code & 8 != 0,
            b: code & 4 != 0,
            c: code & 2 != 0,
            d: code & 1 != 0,
        })
    }
}

/// Complete graph whose pairs carry a [`ColorQuad`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredCompleteGraph {
    order: usize,
    codes: Vec<u8>,
}

impl ColoredCompleteGraph {
    /// `color(i, j)` is queried once for every `i < j`.
    pub fn from_fn(order: usize, mut color: impl FnMut(usize, usize) -> ColorQuad) -> Self {
        let mut codes = vec![0; order * order];
        for j in 0..order {
            for i in 0..j {
                let code = color(i, j).code();
                codes[i * order + j] = code;
                codes[j * order + i] = code;
            }
        }
        ColoredCompleteGraph { order, codes }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Colour of the pair `{i, j}`, `i ≠ j`.
    pub fn color(&self, i: usize, j: usize) -> ColorQuad {
        assert!(i != j && i < self.order && j < self.order, "no pair ({i}, {j})");
        ColorQuad::from_code(self.codes[i * self.order + j]).expect("stored codes are below 16")
    }

    fn class(&self, code: u8) -> Graph {
        Graph::from_fn(self.order, |i, j| self.codes[i * self.order + j] == code)
    }
}

/// Colours every pair of the oriented matching `pairs` (`(x_i, y_i)` each).
pub fn color_matching_pairs(g: &Graph, pairs: &[(usize, usize)]) -> Result<ColoredCompleteGraph, ExtractionError> {
    let mut used = Bits::new(g.order());
    for &(x, y) in pairs {
        g.check_vertex(x)?;
        g.check_vertex(y)?;
        if !g.adjacent(x, y) {
            return Err(crate::graph::GraphError::NotAnEdge(x, y).into());
        }
        for v in [x, y] {
            if used.contains(v) {
                return Err(crate::graph::GraphError::NotAMatching(v).into());
            }
            used.insert(v);
        }
    }
    Ok(ColoredCompleteGraph::from_fn(pairs.len(), |i, j| {
        let ((xi, yi), (xj, yj)) = (pairs[i], pairs[j]);
        ColorQuad {
            a: g.adjacent(xi, xj),
            b: g.adjacent(yi, yj),
            c: g.adjacent(xi, yj),
            d: g.adjacent(yi, xj),
        }
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonochromaticClique {
    pub color: ColorQuad,
    pub vertices: VertexSet,
}

/// Lexicographically least `k`-clique of `g`, by ordered depth-first search.
fn least_clique(g: &Graph, k: usize) -> Option<Vec<usize>> {
    fn go(g: &Graph, k: usize, chosen: &mut Vec<usize>, cand: Bits) -> bool {
        if chosen.len() == k {
            return true;
        }
        if chosen.len() + cand.count() < k {
            return false;
        }
        let mut rest = cand.clone();
        for v in cand.iter() {
            rest.remove(v);
            chosen.push(v);
            if go(g, k, chosen, rest.and(g.row(v))) {
                return true;
            }
            chosen.pop();
            if chosen.len() + rest.count() < k {
                break;
            }
        }
        false
    }
    let mut chosen = Vec::with_capacity(k);
    go(g, k, &mut chosen, Bits::full(g.order())).then_some(chosen)
}

fn cliques_by_color(h: &ColoredCompleteGraph, k: usize) -> Vec<MonochromaticClique> {
    if k == 0 || k > h.order {
        return Vec::new();
    }
    (0..16u8)
        .filter_map(|code| {
            let vertices = least_clique(&h.class(code), k)?;
            Some(MonochromaticClique { color: ColorQuad::from_code(code)?, vertices: vertices.into() })
        })
        .collect()
}

/// A `k`-vertex set all of whose pairs share one colour: the
/// lexicographically least such set, with ties going to the smaller colour
/// code. `None` when no such set exists or `k = 0`.
pub fn monochromatic_clique(h: &ColoredCompleteGraph, k: usize) -> Option<MonochromaticClique> {
    cliques_by_color(h, k).into_iter().min_by(|p, q| (&p.vertices, p.color.code()).cmp(&(&q.vertices, q.color.code())))
}

/// The witness a monochromatic `2r`-clique of colour `color` yields.
fn branch(g: &Graph, n: usize, r: usize, pairs: &[(usize, usize)], clique: &MonochromaticClique) -> Result<ExtractionOutcome, ExtractionError> {
    let xs: Vec<usize> = clique.vertices.iter().map(|i| pairs[i].0).collect();
    let ys: Vec<usize> = clique.vertices.iter().map(|i| pairs[i].1).collect();
    let join = |left: &[usize], right: &[usize]| left.iter().chain(right).copied().collect::<Vec<_>>();
    let color = clique.color;
    let witness = |spec, embedding| Ok(Witness { spec, embedding }.into());
    match (color.a, color.b, color.c, color.d) {
        (true, _, _, _) => witness(FamilySpec::clique(2 * r), xs),
        (false, true, _, _) => witness(FamilySpec::clique(2 * r), ys),
        (false, false, true, false) => witness(FamilySpec::biclique(r, r), join(&xs[..r], &ys[r..])),
        (false, false, false, true) => witness(FamilySpec::biclique(r, r), join(&ys[..r], &xs[r..])),
        (false, false, true, true) => witness(FamilySpec::biclique(2 * r, 2 * r), join(&xs, &ys)),
        (false, false, false, false) => {
            // The matched edges form an induced matching of size 2r; H_k^2 and
            // T_k both carry K_k on their first k vertices.
            let out = extract_induced_matching_witness(g, n)?;
            Ok(match out {
                ExtractionOutcome::Found { witness: Witness { spec, embedding } } => match spec {
                    FamilySpec::HairyClique { n: k, .. } | FamilySpec::TriangleClique { n: k } => {
                        Witness { spec: FamilySpec::clique(k), embedding: embedding[..k].to_vec() }.into()
                    }
                    spec => Witness { spec, embedding }.into(),
                },
                failed => failed,
            })
        }
    }
}

/// Induced `P_k`, `K_k`, `K_{k,k}`, `S_k^2` or `F_k` with `k ≥ n`.
///
/// Orients a maximum matching with the smaller end as `x_i`, colours pairs of
/// matching edges, and takes a monochromatic clique on `2r` matching edges.
/// Colour classes are tried in code order until one yields a witness: a
/// clique on the `x` or `y` ends, a biclique, or (for the all-zero colour) the
/// induced-matching pipeline with `H_k^2`/`T_k` cut down to `K_k`.
pub fn extract_matching_witness(g: &Graph, n: usize, r: usize) -> Result<ExtractionOutcome, ExtractionError> {
    if n == 0 {
        return Err(ExtractionError::ZeroParameter);
    }
    if r < n {
        return Err(ExtractionError::RBelowN { n, r });
    }
    require_connected(g)?;
    let (size, m) = maximum_matching(g);
    let pairs: Vec<(usize, usize)> = m.iter().collect();
    let h = color_matching_pairs(g, &pairs)?;

    let mut last = None;
    for clique in cliques_by_color(&h, 2 * r) {
        let out = branch(g, n, r, &pairs, &clique)?;
        if out.witness().is_some() {
            return Ok(out);
        }
        last = Some(out);
    }
    Ok(last.unwrap_or_else(|| {
        ExtractionOutcome::failed(
            Stage::MonochromaticClique,
            format!("no monochromatic clique of size {} among {size} matching edges", 2 * r),
        )
    }))
}
