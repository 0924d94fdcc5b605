//! Immutable simple undirected graphs over dense `0..n` vertex indices.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::{Bits, WordOnes};
use crate::{Error, Result};

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// A set of vertex indices backed by a growable bitmask.
///
/// Equality ignores capacity: two sets are equal when they hold the same members.
#[derive(Clone, Default)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self { words: Vec::new() }
    }

    pub fn with_capacity(n: usize) -> Self {
        Self {
            words: vec![0; words_for(n)],
        }
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::with_capacity(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *w = u64::MAX;
            } else if n > lo {
                *w = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        match self.words.get_mut(w) {
            Some(word) => {
                let had = *word & (1 << b) != 0;
                *word &= !(1 << b);
                had
            }
            None => false,
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words.get(v / 64).is_some_and(|w| (w >> (v % 64)) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(i, &word)| WordOnes { word, base: i * 64 })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Largest member plus one, or zero for the empty set.
    pub fn bound(&self) -> usize {
        for (i, &w) in self.words.iter().enumerate().rev() {
            if w != 0 {
                return i * 64 + 64 - w.leading_zeros() as usize;
            }
        }
        0
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let words = self.words.iter().zip(other.words.iter()).map(|(a, b)| a & b).collect();
        Self { words }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn union_with(&mut self, other: &Self) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().enumerate().all(|(i, &w)| {
            let o = other.words.get(i).copied().unwrap_or(0);
            w & !o == 0
        })
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        let len = self.words.len().max(other.words.len());
        (0..len).all(|i| self.words.get(i).copied().unwrap_or(0) == other.words.get(i).copied().unwrap_or(0))
    }
}

impl Eq for VertexSet {}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Maximum degree, minimum degree and the per-vertex degree sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub max: usize,
    pub min: usize,
    pub degrees: Vec<usize>,
}

/// A finite simple undirected graph.
///
/// Adjacency is stored as one bitmask row per vertex. Graphs never change after
/// construction; every combinator returns a fresh value. Optional display labels
/// (`v1`, `x`, `t2`, ...) ride along but are ignored by equality.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Self {
            n,
            words,
            adj: vec![0; n * words],
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            g.check_vertex(a)?;
            g.check_vertex(b)?;
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            g.set_edge(a, b);
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, a: usize, b: usize) {
        debug_assert!(a != b);
        self.adj[a * self.words + b / 64] |= 1 << (b % 64);
        self.adj[b * self.words + a / 64] |= 1 << (a % 64);
    }

    pub fn path(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidSize {
                what: "path",
                expected: "k >= 1",
                got: k,
            });
        }
        let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        Self::from_edges(k, &edges)
    }

    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidSize {
                what: "cycle",
                expected: "k >= 3",
                got: k,
            });
        }
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Self::from_edges(k, &edges)
    }

    pub fn complete(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidSize {
                what: "complete graph",
                expected: "k >= 1",
                got: k,
            });
        }
        let mut g = Self::empty(k);
        for a in 0..k {
            for b in a + 1..k {
                g.set_edge(a, b);
            }
        }
        Ok(g)
    }

    /// Attach display labels, one per vertex.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.n {
            return Err(Error::LabelCount {
                got: labels.len(),
                n: self.n,
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().and_then(|l| l.get(v)).map(String::as_str)
    }

    /// Label when present, otherwise the 0-based index.
    pub fn display_name(&self, v: usize) -> String {
        match self.label(v) {
            Some(l) => String::from(l),
            None => format!("{v}"),
        }
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && (self.adj[a * self.words + b / 64] >> (b % 64)) & 1 == 1
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .flat_map(|(i, &word)| WordOnes { word, base: i * 64 })
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet {
            words: self.row(v).to_vec(),
        }
    }

    /// Edges `(a, b)` with `a < b`, ordered by `a` then `b`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| self.neighbors(a).filter(move |&b| b > a).map(move |b| (a, b)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let max = degrees.iter().copied().max().unwrap_or(0);
        let min = degrees.iter().copied().min().unwrap_or(0);
        Ok(DegreeStats { max, min, degrees })
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Disjoint union; `other`'s vertices are shifted to `self.n()..`.
    pub fn union(&self, other: &Graph) -> Graph {
        self.combine(other, false)
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        self.combine(other, true)
    }

    fn combine(&self, other: &Graph, connect: bool) -> Graph {
        let offset = self.n;
        let mut g = Graph::empty(self.n + other.n);
        for (a, b) in self.edges() {
            g.set_edge(a, b);
        }
        for (a, b) in other.edges() {
            g.set_edge(a + offset, b + offset);
        }
        if connect {
            for a in 0..self.n {
                for b in 0..other.n {
                    g.set_edge(a, b + offset);
                }
            }
        }
        if self.labels.is_some() || other.labels.is_some() {
            let mut labels: Vec<String> = (0..self.n).map(|v| self.display_name(v)).collect();
            labels.extend((0..other.n).map(|v| other.display_name(v)));
            g.labels = Some(labels);
        }
        g
    }

    /// The subgraph induced by `set`, renumbered in ascending order of `set`.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Graph> {
        let order = set.to_vec();
        self.induced_by_order(&order)
    }

    /// The subgraph induced by `order`, with vertex `i` of the result being `order[i]`.
    pub fn induced_by_order(&self, order: &[usize]) -> Result<Graph> {
        for &v in order {
            self.check_vertex(v)?;
        }
        let mut g = Graph::empty(order.len());
        for (i, &a) in order.iter().enumerate() {
            for (j, &b) in order.iter().enumerate().skip(i + 1) {
                if a == b {
                    return Err(Error::Precondition("duplicate vertex in induced order"));
                }
                if self.has_edge(a, b) {
                    g.set_edge(i, j);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(order.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok(g)
    }

    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&w| w != v).collect();
        self.induced_by_order(&keep)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !self.has_edge(a, b) {
                    g.set_edge(a, b);
                }
            }
        }
        g.labels = self.labels.clone();
        g
    }

    /// A new graph with one extra vertex (index `n`) adjacent to `neighbors`.
    pub fn with_vertex(&self, neighbors: &VertexSet) -> Result<Graph> {
        let mut g = Graph::empty(self.n + 1);
        for (a, b) in self.edges() {
            g.set_edge(a, b);
        }
        for v in neighbors.iter() {
            self.check_vertex(v)?;
            g.set_edge(v, self.n);
        }
        Ok(g)
    }

    /// Relabel so that vertex `i` of the result is `order[i]` of `self`.
    /// `order` must be a permutation of `0..n`.
    pub fn permuted(&self, order: &[usize]) -> Result<Graph> {
        if order.len() != self.n {
            return Err(Error::Precondition("permutation length differs from vertex count"));
        }
        self.induced_by_order(order)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Single-word adjacency rows, when the graph fits the fast path.
    pub(crate) fn small_rows(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| (0..self.n).map(|v| self.adj[v * self.words]).collect())
    }

    pub(crate) fn wide_rows(&self) -> Vec<VertexSet> {
        (0..self.n).map(|v| self.neighbor_set(v)).collect()
    }

    /// Symmetry and loop-freeness; holds by construction.
    pub fn is_well_formed(&self) -> bool {
        (0..self.n).all(|a| !self.has_edge(a, a) && self.neighbors(a).all(|b| b < self.n && self.has_edge(b, a)))
    }
}

/// Rows as the generic bitset type the kernels run over.
pub(crate) trait Rows: Bits {
    fn rows_of(g: &Graph) -> Vec<Self>;
}

impl Rows for u64 {
    fn rows_of(g: &Graph) -> Vec<Self> {
        g.small_rows().expect("u64 rows need n <= 64")
    }
}

impl Rows for VertexSet {
    fn rows_of(g: &Graph) -> Vec<Self> {
        g.wide_rows()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
