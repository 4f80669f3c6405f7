//! Immutable simple undirected graphs over dense vertex indices.
//!
//! Vertices are `0..order`. Every derived graph (induced subgraph, pruning,
//! contraction) is re-indexed densely and comes with an explicit map back to
//! the vertices it was built from.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::{iter_words, words_for, Bits};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("{{{0}, {1}}} is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("edge set is not a matching: vertex {0} is covered twice")]
    NotAMatching(usize),
}

/// A finite simple undirected graph.
///
/// Adjacency is stored as one bitset row per vertex. Values are immutable once
/// built; all operations return new graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    rows: Vec<u64>,
}

/// Sorted, duplicate-free list of vertex indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Checks every member against `order`.
    pub fn check_range(&self, order: usize) -> Result<(), GraphError> {
        match self.0.last() {
            Some(&v) if v >= order => Err(GraphError::VertexOutOfRange { vertex: v, order }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// An unordered edge, normalized so that `.0 < .1`.
pub type Edge = (usize, usize);

#[inline]
pub fn normalize(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A duplicate-free list of edges of some graph, kept in lexicographic order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    /// Builds an edge set, checking that every pair is an edge of `g`.
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        let mut out = Vec::new();
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if !g.adjacent(u, v) {
                return Err(GraphError::NotAnEdge(u, v));
            }
            out.push(normalize(u, v));
        }
        out.sort_unstable();
        out.dedup();
        Ok(EdgeSet(out))
    }

    pub(crate) fn from_sorted_unchecked(edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        EdgeSet(edges)
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.iter().copied()
    }

    /// Endpoints of all edges, sorted.
    pub fn vertices(&self) -> VertexSet {
        self.0.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    /// Fails with the first vertex covered by two edges.
    pub fn check_matching(&self, order: usize) -> Result<(), GraphError> {
        let mut seen = Bits::new(order);
        for &(u, v) in &self.0 {
            for w in [u, v] {
                if seen.contains(w) {
                    return Err(GraphError::NotAMatching(w));
                }
                seen.insert(w);
            }
        }
        Ok(())
    }
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        let words = words_for(order).max(1);
        Graph { order, words, rows: vec![0; words * order] }
    }

    pub fn complete(order: usize) -> Self {
        Graph::from_fn(order, |_, _| true)
    }

    pub fn from_edges(order: usize, edges: &[Edge]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric predicate queried once per pair `u < v`.
    pub fn from_fn(order: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(order);
        for v in 1..order {
            for u in 0..v {
                if adjacent(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order && v < self.order);
        self.rows[u * self.words + v / 64] |= 1u64 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1u64 << (u % 64);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.order })
        }
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] & (1u64 << (v % 64)) != 0
    }

    /// Neighbourhood of `v` as raw bitset words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_words(self.row(v))
    }

    /// Smallest neighbour of `v` with index `>= from`.
    pub fn next_neighbor(&self, v: usize, from: usize) -> Option<usize> {
        let row = self.row(v);
        let mut i = from / 64;
        if i >= row.len() {
            return None;
        }
        let mut w = row[i] & (u64::MAX << (from % 64));
        loop {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
            i += 1;
            if i >= row.len() {
                return None;
            }
            w = row[i];
        }
    }

    pub fn neighbor_bits(&self, v: usize) -> Bits {
        Bits::from_words(self.row(v).to_vec())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.order {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.order, |u, v| !self.adjacent(u, v))
    }

    /// True iff the graph has exactly one component. Order 0 is not connected.
    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return false;
        }
        self.component_of(0, None).count() == self.order
    }

    /// Vertices reachable from `start`, optionally pretending `removed` is absent.
    pub(crate) fn component_of(&self, start: usize, removed: Option<usize>) -> Bits {
        let mut seen = Bits::new(self.order);
        seen.insert(start);
        if let Some(r) = removed {
            seen.insert(r);
        }
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        if let Some(r) = removed {
            seen.remove(r);
        }
        seen
    }

    /// Connected components as sorted vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = Bits::new(self.order);
        let mut out = Vec::new();
        for v in 0..self.order {
            if !seen.contains(v) {
                let comp = self.component_of(v, None);
                seen.or_with(comp.words());
                out.push(comp.iter().collect());
            }
        }
        out
    }

    /// Articulation points, by an iterative lowpoint depth-first search.
    pub fn cut_vertices(&self) -> Result<VertexSet, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let n = self.order;
        const UNSEEN: usize = usize::MAX;
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut time = 0;
        // (vertex, parent, next neighbour position to scan)
        let mut stack: Vec<(usize, usize, usize)> = Vec::with_capacity(n);
        let mut root_children = 0;
        disc[0] = time;
        low[0] = time;
        time += 1;
        stack.push((0, UNSEEN, 0));
        while let Some(top) = stack.len().checked_sub(1) {
            let (v, parent) = (stack[top].0, stack[top].1);
            let mut child = None;
            while let Some(w) = self.next_neighbor(v, stack[top].2) {
                stack[top].2 = w + 1;
                if disc[w] == UNSEEN {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == 0 {
                        root_children += 1;
                    }
                    child = Some(w);
                    break;
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            }
            if let Some(w) = child {
                stack.push((w, v, 0));
                continue;
            }
            stack.pop();
            if parent != UNSEEN {
                low[parent] = low[parent].min(low[v]);
                if parent != 0 && low[v] >= disc[parent] {
                    is_cut[parent] = true;
                }
            }
        }
        if root_children > 1 {
            is_cut[0] = true;
        }
        Ok((0..n).filter(|&v| is_cut[v]).collect())
    }

    /// Subgraph induced on `vertices`, re-indexed in increasing order of the
    /// original index. The returned map sends new indices to old ones.
    pub fn induced_subgraph(&self, vertices: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        vertices.check_range(self.order)?;
        let map = vertices.as_slice().to_vec();
        let g = Graph::from_fn(map.len(), |a, b| self.adjacent(map[a], map[b]));
        Ok((g, map))
    }

    /// True iff `set` is pairwise non-adjacent.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.adjacent(u, v)))
    }

    /// Graphviz DOT text. `labels`, when given, must have one entry per vertex.
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.order {
            match labels.and_then(|l| l.get(v)) {
                Some(label) => {
                    let _ = writeln!(out, "  {v} [label=\"{}\"];", label.replace('"', "\\\""));
                }
                None => {
                    let _ = writeln!(out, "  {v};");
                }
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Bookkeeping between a graph and the result of contracting a matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionMap {
    /// Image vertex of each original vertex.
    pub contracted_of: Vec<usize>,
    /// Sorted preimage (one or two original vertices) of each image vertex.
    pub expansion_of: Vec<Vec<usize>>,
    /// The contracted edge behind an image vertex, if any.
    pub contracted_edge_of: Vec<Option<Edge>>,
}

impl ContractionMap {
    pub fn is_contracted(&self, image: usize) -> bool {
        self.contracted_edge_of[image].is_some()
    }

    /// Image vertices that stand for a contracted edge.
    pub fn contracted_vertices(&self) -> VertexSet {
        (0..self.expansion_of.len()).filter(|&u| self.is_contracted(u)).collect()
    }
}

/// Contracts every edge of the matching `m` into a single vertex.
///
/// Image vertices are numbered by the smallest original vertex they contain,
/// so an empty matching yields the identity.
pub fn contract_matching(g: &Graph, m: &EdgeSet) -> Result<(Graph, ContractionMap), GraphError> {
    for (u, v) in m.iter() {
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        if !g.adjacent(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
    }
    m.check_matching(g.order())?;

    let mut partner = vec![None; g.order()];
    for (u, v) in m.iter() {
        partner[u] = Some(v);
        partner[v] = Some(u);
    }
    let mut contracted_of = vec![usize::MAX; g.order()];
    let mut expansion_of = Vec::new();
    let mut contracted_edge_of = Vec::new();
    for v in 0..g.order() {
        if contracted_of[v] != usize::MAX {
            continue;
        }
        let image = expansion_of.len();
        contracted_of[v] = image;
        match partner[v] {
            Some(w) => {
                contracted_of[w] = image;
                expansion_of.push(vec![v, w]);
                contracted_edge_of.push(Some(normalize(v, w)));
            }
            None => {
                expansion_of.push(vec![v]);
                contracted_edge_of.push(None);
            }
        }
    }
    let mut h = Graph::empty(expansion_of.len());
    for (u, v) in g.edges() {
        let (a, b) = (contracted_of[u], contracted_of[v]);
        if a != b {
            h.set_edge(a, b);
        }
    }
    Ok((h, ContractionMap { contracted_of, expansion_of, contracted_edge_of }))
}
