//! Named graph families, induced-subgraph detection, and witnesses.
//!
//! # Canonical numbering
//!
//! The vertex numbering produced by [`generate`] is part of the public
//! contract, so that embeddings are reproducible:
//!
//! | family | numbering |
//! |---|---|
//! | `Path(n)` | `0 - 1 - … - n−1` |
//! | `Clique(n)` | `0..n` |
//! | `Star(n)` (`K_{1,n}`) | centre `0`, leaves `1..=n` |
//! | `Biclique(n, m)` | parts `0..n` and `n..n+m` |
//! | `HairyClique(n, l)` (`H_n^l`) | clique `0..n`; leg `i` is `n+i·l .. n+(i+1)·l`, its first vertex adjacent to clique vertex `i` |
//! | `TriangleClique(n)` (`T_n`) | clique `0..n`; clique vertex `i` forms a triangle with `n+2i`, `n+2i+1` |
//! | `Spider(n, l)` (`S_n^l`) | centre `0`; leg `i` is `1+i·l .. 1+(i+1)·l`, its first vertex adjacent to the centre |
//! | `Friendship(n)` (`F_n`) | centre `0`; triangle `i` is `{0, 1+2i, 2+2i}` |
//! | `GeneralBroom(H, X, l)` | path `0..l` with `0` the endpoint and `l−1` adjacent to all of `X`; then `H` as `l..l+|H|` |
//! | `GeneralHairy(H, X, n, l)` | clique `0..n` (broom endpoints); broom `i` minus its endpoint occupies the next `l−1+|H|` vertices, in broom order |
//! | `GeneralStar(H, X, n, l)` | centre `0` (shared endpoint); broom `i` minus its endpoint occupies the next `l−1+|H|` vertices |
//!
//! A length-`l` leg has `l` vertices beyond its attachment point, i.e. `l` edges.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::Bits;
use crate::graph::{Graph, VertexSet};
use crate::invariants::{max_clique_within, max_independent_set_within};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameter `{0}` must be at least 1")]
    ZeroParameter(&'static str),
    #[error("attachment set must be a non-empty subset of the base graph's vertices")]
    BadAttachment,
    #[error("base graph must be non-empty and connected")]
    DisconnectedBase,
}

/// A member of one of the named graph families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    Path { n: usize },
    Clique { n: usize },
    /// `K_{1,n}`.
    Star { n: usize },
    Biclique { n: usize, m: usize },
    /// `H_n^l`.
    HairyClique { n: usize, l: usize },
    /// `T_n`.
    TriangleClique { n: usize },
    /// `S_n^l`.
    Spider { n: usize, l: usize },
    /// `F_n`.
    Friendship { n: usize },
    /// `(H, X)`-broom of length `l`.
    GeneralBroom {
        #[serde(with = "graph6_string")]
        h: Graph,
        x: VertexSet,
        l: usize,
    },
    /// `H_n^l(H, X)`.
    GeneralHairy {
        #[serde(with = "graph6_string")]
        h: Graph,
        x: VertexSet,
        n: usize,
        l: usize,
    },
    /// `S_n^l(H, X)`.
    GeneralStar {
        #[serde(with = "graph6_string")]
        h: Graph,
        x: VertexSet,
        n: usize,
        l: usize,
    },
}

impl FamilySpec {
    pub fn path(n: usize) -> Self {
        FamilySpec::Path { n }
    }
    pub fn clique(n: usize) -> Self {
        FamilySpec::Clique { n }
    }
    pub fn star(n: usize) -> Self {
        FamilySpec::Star { n }
    }
    pub fn biclique(n: usize, m: usize) -> Self {
        FamilySpec::Biclique { n, m }
    }
    pub fn hairy_clique(n: usize, l: usize) -> Self {
        FamilySpec::HairyClique { n, l }
    }
    pub fn triangle_clique(n: usize) -> Self {
        FamilySpec::TriangleClique { n }
    }
    pub fn spider(n: usize, l: usize) -> Self {
        FamilySpec::Spider { n, l }
    }
    pub fn friendship(n: usize) -> Self {
        FamilySpec::Friendship { n }
    }

    /// Short human-readable name, e.g. `H_3^2` or `K_{1,4}`.
    pub fn label(&self) -> String {
        match self {
            FamilySpec::Path { n } => format!("P_{n}"),
            FamilySpec::Clique { n } => format!("K_{n}"),
            FamilySpec::Star { n } => format!("K_{{1,{n}}}"),
            FamilySpec::Biclique { n, m } => format!("K_{{{n},{m}}}"),
            FamilySpec::HairyClique { n, l } => format!("H_{n}^{l}"),
            FamilySpec::TriangleClique { n } => format!("T_{n}"),
            FamilySpec::Spider { n, l } => format!("S_{n}^{l}"),
            FamilySpec::Friendship { n } => format!("F_{n}"),
            FamilySpec::GeneralBroom { l, .. } => format!("(H,X)-broom of length {l}"),
            FamilySpec::GeneralHairy { n, l, .. } => format!("H_{n}^{l}(H,X)"),
            FamilySpec::GeneralStar { n, l, .. } => format!("S_{n}^{l}(H,X)"),
        }
    }

    /// The family's size parameter `n` (for a broom, its length).
    pub fn parameter(&self) -> usize {
        match *self {
            FamilySpec::Path { n }
            | FamilySpec::Clique { n }
            | FamilySpec::Star { n }
            | FamilySpec::Biclique { n, .. }
            | FamilySpec::HairyClique { n, .. }
            | FamilySpec::TriangleClique { n }
            | FamilySpec::Spider { n, .. }
            | FamilySpec::Friendship { n }
            | FamilySpec::GeneralHairy { n, .. }
            | FamilySpec::GeneralStar { n, .. } => n,
            FamilySpec::GeneralBroom { l, .. } => l,
        }
    }
}

/// The single-parameter families, with any auxiliary parameter fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Path,
    Clique,
    Star,
    /// Balanced `K_{n,n}`.
    Biclique,
    HairyClique { l: usize },
    TriangleClique,
    Spider { l: usize },
    Friendship,
}

impl FamilyKind {
    pub fn with_n(self, n: usize) -> FamilySpec {
        match self {
            FamilyKind::Path => FamilySpec::Path { n },
            FamilyKind::Clique => FamilySpec::Clique { n },
            FamilyKind::Star => FamilySpec::Star { n },
            FamilyKind::Biclique => FamilySpec::Biclique { n, m: n },
            FamilyKind::HairyClique { l } => FamilySpec::HairyClique { n, l },
            FamilyKind::TriangleClique => FamilySpec::TriangleClique { n },
            FamilyKind::Spider { l } => FamilySpec::Spider { n, l },
            FamilyKind::Friendship => FamilySpec::Friendship { n },
        }
    }

    /// Order of the member with parameter `n`.
    pub fn order(self, n: usize) -> usize {
        match self {
            FamilyKind::Path | FamilyKind::Clique => n,
            FamilyKind::Star => n + 1,
            FamilyKind::Biclique => 2 * n,
            FamilyKind::HairyClique { l } => n * (l + 1),
            FamilyKind::TriangleClique => 3 * n,
            FamilyKind::Spider { l } => n * l + 1,
            FamilyKind::Friendship => 2 * n + 1,
        }
    }
}

fn positive(value: usize, name: &'static str) -> Result<(), FamilyError> {
    if value == 0 {
        Err(FamilyError::ZeroParameter(name))
    } else {
        Ok(())
    }
}

fn check_base(h: &Graph, x: &VertexSet) -> Result<(), FamilyError> {
    if !h.is_connected() {
        return Err(FamilyError::DisconnectedBase);
    }
    if x.is_empty() || x.check_range(h.order()).is_err() {
        return Err(FamilyError::BadAttachment);
    }
    Ok(())
}

/// Incrementally assembled edge list.
struct Builder {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder { order: 0, edges: Vec::new() }
    }

    fn add_vertices(&mut self, k: usize) -> usize {
        let first = self.order;
        self.order += k;
        first
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn clique(&mut self, vertices: std::ops::Range<usize>) {
        for v in vertices.clone() {
            for u in vertices.start..v {
                self.edge(u, v);
            }
        }
    }

    /// Appends a path of `len` new vertices hanging off `anchor`; returns the last one.
    fn leg(&mut self, anchor: usize, len: usize) -> usize {
        let mut prev = anchor;
        for _ in 0..len {
            let v = self.add_vertices(1);
            self.edge(prev, v);
            prev = v;
        }
        prev
    }

    /// Appends an (H, X)-broom of length `l` whose endpoint is `endpoint`.
    fn broom_from(&mut self, endpoint: usize, h: &Graph, x: &VertexSet, l: usize) {
        let attach = self.leg(endpoint, l - 1);
        let base = self.add_vertices(h.order());
        for (u, v) in h.edges() {
            self.edge(base + u, base + v);
        }
        for v in x.iter() {
            self.edge(attach, base + v);
        }
    }

    fn build(self) -> Graph {
        Graph::from_edges(self.order, &self.edges).expect("builder edges are in range")
    }
}

/// Builds the family member described by `spec`, in canonical numbering.
pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    let mut b = Builder::new();
    match spec {
        &FamilySpec::Path { n } => {
            positive(n, "n")?;
            let first = b.add_vertices(1);
            b.leg(first, n - 1);
        }
        &FamilySpec::Clique { n } => {
            positive(n, "n")?;
            b.add_vertices(n);
            b.clique(0..n);
        }
        &FamilySpec::Star { n } => {
            positive(n, "n")?;
            b.add_vertices(1);
            for _ in 0..n {
                b.leg(0, 1);
            }
        }
        &FamilySpec::Biclique { n, m } => {
            positive(n, "n")?;
            positive(m, "m")?;
            b.add_vertices(n + m);
            for u in 0..n {
                for v in n..n + m {
                    b.edge(u, v);
                }
            }
        }
        &FamilySpec::HairyClique { n, l } => {
            positive(n, "n")?;
            positive(l, "l")?;
            b.add_vertices(n);
            b.clique(0..n);
            for i in 0..n {
                b.leg(i, l);
            }
        }
        &FamilySpec::TriangleClique { n } => {
            positive(n, "n")?;
            b.add_vertices(n);
            b.clique(0..n);
            for i in 0..n {
                let a = b.add_vertices(2);
                b.edge(i, a);
                b.edge(i, a + 1);
                b.edge(a, a + 1);
            }
        }
        &FamilySpec::Spider { n, l } => {
            positive(n, "n")?;
            positive(l, "l")?;
            b.add_vertices(1);
            for _ in 0..n {
                b.leg(0, l);
            }
        }
        &FamilySpec::Friendship { n } => {
            positive(n, "n")?;
            b.add_vertices(1);
            for _ in 0..n {
                let a = b.add_vertices(2);
                b.edge(0, a);
                b.edge(0, a + 1);
                b.edge(a, a + 1);
            }
        }
        FamilySpec::GeneralBroom { h, x, l } => {
            positive(*l, "l")?;
            check_base(h, x)?;
            let endpoint = b.add_vertices(1);
            b.broom_from(endpoint, h, x, *l);
        }
        FamilySpec::GeneralHairy { h, x, n, l } => {
            positive(*n, "n")?;
            positive(*l, "l")?;
            check_base(h, x)?;
            b.add_vertices(*n);
            b.clique(0..*n);
            for i in 0..*n {
                b.broom_from(i, h, x, *l);
            }
        }
        FamilySpec::GeneralStar { h, x, n, l } => {
            positive(*n, "n")?;
            positive(*l, "l")?;
            check_base(h, x)?;
            b.add_vertices(1);
            for _ in 0..*n {
                b.broom_from(0, h, x, *l);
            }
        }
    }
    Ok(b.build())
}

/// A certified induced copy of a family member inside a host graph:
/// `embedding[i]` is the host vertex playing pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub spec: FamilySpec,
    pub embedding: Vec<usize>,
}

/// Search order for the pattern: each vertex after the first is, where
/// possible, adjacent to an earlier one.
fn pattern_order(p: &Graph) -> Vec<usize> {
    let n = p.order();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], p.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for w in p.neighbors(next) {
            links[w] += 1;
        }
    }
    order
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    image: Vec<usize>,
    used: Bits,
    host_degree: Vec<usize>,
}

impl Matcher<'_> {
    fn candidates(&self, depth: usize) -> Bits {
        let pv = self.order[depth];
        let mut cand = Bits::full(self.host.order());
        cand.and_not_with(self.used.words());
        for &earlier in &self.order[..depth] {
            let img = self.image[earlier];
            if self.pattern.adjacent(pv, earlier) {
                cand.and_with(self.host.row(img));
            } else {
                cand.and_not_with(self.host.row(img));
            }
        }
        cand
    }

    fn search(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let pv = self.order[depth];
        let need = self.pattern.degree(pv);
        for h in self.candidates(depth).iter() {
            if self.host_degree[h] < need {
                continue;
            }
            self.image[pv] = h;
            self.used.insert(h);
            if self.search(depth + 1) {
                return true;
            }
            self.used.remove(h);
        }
        false
    }
}

/// Finds an induced copy of `pattern` in `host`: a map from pattern vertices
/// to distinct host vertices preserving adjacency and non-adjacency.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.order() > host.order() || pattern.size() > host.size() {
        return None;
    }
    let mut m = Matcher {
        host,
        pattern,
        order: pattern_order(pattern),
        image: vec![usize::MAX; pattern.order()],
        used: Bits::new(host.order()),
        host_degree: (0..host.order()).map(|v| host.degree(v)).collect(),
    };
    m.search(0).then_some(m.image)
}

/// Longest induced path, as a vertex sequence (empty for the empty graph).
fn longest_induced_path(g: &Graph) -> Vec<usize> {
    struct Dfs<'g> {
        g: &'g Graph,
        path: Vec<usize>,
        best: Vec<usize>,
    }
    impl Dfs<'_> {
        // `blocked` holds the path and every neighbour of a non-final path vertex.
        fn go(&mut self, blocked: &Bits) {
            if self.path.len() > self.best.len() {
                self.best.clone_from(&self.path);
            }
            if self.best.len() == self.g.order() {
                return;
            }
            let last = *self.path.last().expect("non-empty path");
            let mut next_blocked = blocked.clone();
            next_blocked.or_with(self.g.row(last));
            let free = self.g.order() - next_blocked.count();
            let options = self.g.neighbor_bits(last).and_not(blocked.words());
            if options.is_empty() || self.path.len() + 1 + free <= self.best.len() {
                return;
            }
            for w in options.iter() {
                self.path.push(w);
                let mut b = next_blocked.clone();
                b.insert(w);
                self.go(&b);
                self.path.pop();
            }
        }
    }
    let mut dfs = Dfs { g, path: Vec::new(), best: Vec::new() };
    for s in 0..g.order() {
        dfs.path.push(s);
        dfs.go(&Bits::from_indices(g.order(), [s]));
        dfs.path.pop();
    }
    dfs.best
}

/// Largest `n` such that `kind(n)` is an induced subgraph of `host`, with a
/// witness for it. Returns `(0, None)` when even `kind(1)` is absent.
///
/// Relies on every listed family being nested (`kind(n−1)` is induced in
/// `kind(n)`). Paths, cliques and stars use direct solvers; the rest probe
/// `n = 1, 2, …` with [`contains_induced`].
pub fn max_family_parameter(host: &Graph, kind: FamilyKind) -> (usize, Option<Witness>) {
    let witness = |n: usize, embedding: Vec<usize>| Some(Witness { spec: kind.with_n(n), embedding });
    match kind {
        FamilyKind::Path => {
            let path = longest_induced_path(host);
            if path.is_empty() {
                return (0, None);
            }
            (path.len(), witness(path.len(), path))
        }
        FamilyKind::Clique => {
            let clique = max_clique_within(host, &Bits::full(host.order()));
            if clique.is_empty() {
                return (0, None);
            }
            (clique.len(), witness(clique.len(), clique))
        }
        FamilyKind::Star => {
            let mut best: Option<(usize, Vec<usize>)> = None;
            for c in 0..host.order() {
                if host.degree(c) <= best.as_ref().map_or(0, |b| b.0) {
                    continue;
                }
                let leaves = max_independent_set_within(host, &host.neighbor_bits(c));
                if leaves.len() > best.as_ref().map_or(0, |b| b.0) {
                    let mut emb = vec![c];
                    emb.extend(leaves);
                    best = Some((emb.len() - 1, emb));
                }
            }
            match best {
                Some((n, emb)) => (n, witness(n, emb)),
                None => (0, None),
            }
        }
        _ => generic_max_parameter(host, kind),
    }
}

/// [`max_family_parameter`] using only the generic detection engine.
pub fn generic_max_parameter(host: &Graph, kind: FamilyKind) -> (usize, Option<Witness>) {
    let mut best = (0, None);
    let mut n = 1;
    while kind.order(n) <= host.order() {
        let pattern = generate(&kind.with_n(n)).expect("n >= 1");
        match contains_induced(host, &pattern) {
            Some(embedding) => best = (n, Some(Witness { spec: kind.with_n(n), embedding })),
            None => break,
        }
        n += 1;
    }
    best
}

/// Checks a witness by direct pairwise comparison: the embedding must be
/// injective, in range, and reproduce the pattern's adjacency exactly.
pub fn verify_witness(host: &Graph, w: &Witness) -> bool {
    let Ok(pattern) = generate(&w.spec) else {
        return false;
    };
    let emb = &w.embedding;
    if emb.len() != pattern.order() || emb.iter().any(|&v| v >= host.order()) {
        return false;
    }
    let mut sorted = emb.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return false;
    }
    (0..emb.len()).all(|i| (i + 1..emb.len()).all(|j| pattern.adjacent(i, j) == host.adjacent(emb[i], emb[j])))
}

mod graph6_string {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    use crate::graph::Graph;
    use crate::graph6::{parse_graph6, write_graph6};

    pub fn serialize<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&write_graph6(g))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Graph, D::Error> {
        let text = String::deserialize(d)?;
        parse_graph6(&text).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> Graph {
        Graph::complete(2)
    }

    #[test]
    fn generator_examples() {
        let p4 = generate(&FamilySpec::path(4)).unwrap();
        assert_eq!(generate(&FamilySpec::hairy_clique(2, 1)).unwrap().edges(), vec![(0, 1), (0, 2), (1, 3)]);
        assert!(contains_induced(&p4, &generate(&FamilySpec::hairy_clique(2, 1)).unwrap()).is_some());

        let f2 = generate(&FamilySpec::friendship(2)).unwrap();
        assert_eq!(f2.edges(), vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)]);

        assert_eq!(generate(&FamilySpec::spider(3, 1)).unwrap(), generate(&FamilySpec::star(3)).unwrap());

        let broom = FamilySpec::GeneralBroom { h: k2(), x: VertexSet::from([0, 1]), l: 1 };
        assert_eq!(generate(&broom).unwrap(), Graph::complete(3));
    }

    #[test]
    fn generalized_families_specialize() {
        let p1 = Graph::empty(1);
        let x0 = VertexSet::from([0]);
        let both = VertexSet::from([0, 1]);
        for n in 1..5 {
            for l in 1..4 {
                let gen = FamilySpec::GeneralHairy { h: p1.clone(), x: x0.clone(), n, l };
                assert_eq!(generate(&gen).unwrap(), generate(&FamilySpec::hairy_clique(n, l)).unwrap());
                let gen = FamilySpec::GeneralStar { h: p1.clone(), x: x0.clone(), n, l };
                assert_eq!(generate(&gen).unwrap(), generate(&FamilySpec::spider(n, l)).unwrap());
            }
            let t = FamilySpec::GeneralHairy { h: k2(), x: both.clone(), n, l: 1 };
            assert_eq!(generate(&t).unwrap(), generate(&FamilySpec::triangle_clique(n)).unwrap());
            let f = FamilySpec::GeneralStar { h: k2(), x: both.clone(), n, l: 1 };
            assert_eq!(generate(&f).unwrap(), generate(&FamilySpec::friendship(n)).unwrap());
        }
    }

    #[test]
    fn invalid_parameters() {
        assert_eq!(generate(&FamilySpec::path(0)), Err(FamilyError::ZeroParameter("n")));
        assert_eq!(generate(&FamilySpec::spider(2, 0)), Err(FamilyError::ZeroParameter("l")));
        let bad_x = FamilySpec::GeneralBroom { h: k2(), x: VertexSet::new(), l: 2 };
        assert_eq!(generate(&bad_x), Err(FamilyError::BadAttachment));
        let out_of_range = FamilySpec::GeneralBroom { h: k2(), x: VertexSet::from([2]), l: 2 };
        assert_eq!(generate(&out_of_range), Err(FamilyError::BadAttachment));
        let disconnected = FamilySpec::GeneralStar { h: Graph::empty(2), x: VertexSet::from([0]), n: 2, l: 1 };
        assert_eq!(generate(&disconnected), Err(FamilyError::DisconnectedBase));
    }

    #[test]
    fn containment_examples() {
        let p3 = generate(&FamilySpec::path(3)).unwrap();
        let p5 = generate(&FamilySpec::path(5)).unwrap();
        assert!(contains_induced(&p5, &p3).is_some());
        assert!(contains_induced(&Graph::complete(4), &p3).is_none());
        let c6 = Graph::from_fn(6, |u, v| v == u + 1 || (u == 0 && v == 5));
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let emb = contains_induced(&c6, &two_k2).unwrap();
        let w = Witness { spec: FamilySpec::path(1), embedding: vec![] };
        assert!(!verify_witness(&c6, &w));
        for (a, b) in [(0, 1), (2, 3)] {
            assert!(c6.adjacent(emb[a], emb[b]));
        }
        for (a, b) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
            assert!(!c6.adjacent(emb[a], emb[b]));
        }
    }

    #[test]
    fn max_parameter_examples() {
        assert_eq!(max_family_parameter(&Graph::complete(7), FamilyKind::Clique).0, 7);
        assert_eq!(max_family_parameter(&generate(&FamilySpec::path(9)).unwrap(), FamilyKind::Path).0, 9);
        let f3 = generate(&FamilySpec::friendship(3)).unwrap();
        let (n, w) = max_family_parameter(&f3, FamilyKind::Friendship);
        assert_eq!(n, 3);
        assert!(verify_witness(&f3, &w.unwrap()));
        assert_eq!(max_family_parameter(&Graph::empty(0), FamilyKind::Path), (0, None));
        assert_eq!(max_family_parameter(&Graph::empty(3), FamilyKind::Star), (0, None));
        assert_eq!(max_family_parameter(&Graph::empty(3), FamilyKind::Friendship), (0, None));
    }

    #[test]
    fn verify_examples() {
        let k4 = Graph::complete(4);
        assert!(verify_witness(&k4, &Witness { spec: FamilySpec::clique(3), embedding: vec![0, 1, 2] }));
        let p4 = generate(&FamilySpec::path(4)).unwrap();
        assert!(!verify_witness(&p4, &Witness { spec: FamilySpec::clique(3), embedding: vec![0, 1, 2] }));
        assert!(!verify_witness(&k4, &Witness { spec: FamilySpec::clique(3), embedding: vec![0, 1, 1] }));
        assert!(!verify_witness(&k4, &Witness { spec: FamilySpec::clique(3), embedding: vec![0, 1, 9] }));
        let f2 = generate(&FamilySpec::friendship(2)).unwrap();
        assert!(verify_witness(&f2, &Witness { spec: FamilySpec::friendship(2), embedding: (0..5).collect() }));
    }

    #[test]
    fn witness_json_shape() {
        let w = Witness { spec: FamilySpec::hairy_clique(2, 2), embedding: vec![0, 1, 2, 3, 4, 5] };
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"{"spec":{"family":"hairy-clique","n":2,"l":2},"embedding":[0,1,2,3,4,5]}"#);
        let broom = FamilySpec::GeneralBroom { h: k2(), x: VertexSet::from([0, 1]), l: 1 };
        let json = serde_json::to_string(&broom).unwrap();
        assert_eq!(json, r#"{"family":"general-broom","h":"A_","x":[0,1],"l":1}"#);
        assert_eq!(serde_json::from_str::<FamilySpec>(&json).unwrap(), broom);
    }
}
