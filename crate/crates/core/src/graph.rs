//! Simple undirected graphs on dense vertex ids with bitset neighborhoods.
//!
//! Every solver in this crate spends most of its time counting
//! `|N[v] ∩ S|`, so neighborhoods are stored as word-packed bitsets next to
//! plain adjacency lists used for iteration.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// A subset of the vertices `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        Self {
            universe,
            words: vec![0; universe.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::new(universe);
        for v in 0..universe {
            set.insert(v);
        }
        set
    }

    /// Builds a set from explicit members, rejecting ids outside the universe.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(
        universe: usize,
        vertices: I,
    ) -> Result<Self> {
        let mut set = Self::new(universe);
        for v in vertices {
            if v >= universe {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: universe,
                });
            }
            set.insert(v);
        }
        Ok(set)
    }

    pub(crate) fn from_mask(universe: usize, mask: &[bool]) -> Self {
        debug_assert_eq!(mask.len(), universe);
        let mut set = Self::new(universe);
        for (v, _) in mask.iter().enumerate().filter(|(_, &m)| m) {
            set.insert(v);
        }
        set
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Panics if `v` is outside the universe.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD_BITS] & (1 << (v % WORD_BITS)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// `|self ∩ other|` as a popcount over the word blocks.
    #[inline]
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.universe == other.universe
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD_BITS + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Immutable simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    neighbors: Vec<VertexSet>,
    lists: Vec<Vec<usize>>,
}

impl Graph {
    pub fn builder(n: usize) -> GraphBuilder {
        GraphBuilder::new(n)
    }

    /// Builds a graph from an edge list, silently merging duplicate edges.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut builder = GraphBuilder::new(n);
        for (u, v) in edges {
            builder.add_edge(u, v)?;
        }
        builder.build()
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self> {
        GraphBuilder::new(n).build()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.lists.len()
    }

    pub fn edge_count(&self) -> usize {
        self.lists.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.neighbors[v]
    }

    /// Neighbors of `v` in ascending order.
    #[inline]
    pub fn neighbor_list(&self, v: usize) -> &[usize] {
        &self.lists[v]
    }

    /// Closed neighborhood `N[v]` as a fresh set.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut set = self.neighbors[v].clone();
        set.insert(v);
        set
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.neighbors[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.lists[v].len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.lists.iter().map(Vec::len)
    }

    /// δ(G).
    pub fn min_degree(&self) -> usize {
        self.degrees().min().unwrap_or(0)
    }

    /// Δ(G).
    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// `|N(v) ∩ s|`.
    #[inline]
    pub fn open_count(&self, v: usize, s: &VertexSet) -> usize {
        self.neighbors[v].intersection_len(s)
    }

    /// `|N[v] ∩ s|`.
    #[inline]
    pub fn closed_count(&self, v: usize, s: &VertexSet) -> usize {
        self.open_count(v, s) + usize::from(s.contains(v))
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.lists
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Two-colouring of the vertices if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let s = side[u].unwrap();
                for &w in &self.lists[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Minimum degree of the induced subgraph `G[s]`; `None` for an empty `s`.
    pub fn induced_min_degree(&self, s: &VertexSet) -> Option<usize> {
        s.iter().map(|v| self.open_count(v, s)).min()
    }

    /// The complement graph Ḡ.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut builder = GraphBuilder::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if !self.is_adjacent(u, v) {
                    builder.push_unchecked(u, v);
                }
            }
        }
        builder.build().expect("complement of a non-empty graph")
    }

    /// Full scan of the adjacency invariants. Used by tests and debug builds.
    pub fn check_invariants(&self) -> bool {
        let n = self.n();
        (0..n).all(|v| {
            !self.neighbors[v].contains(v)
                && self.neighbors[v].universe() == n
                && self.neighbors[v].len() == self.lists[v].len()
                && self.lists[v].windows(2).all(|w| w[0] < w[1])
                && self.lists[v].iter().all(|&u| self.neighbors[u].contains(v))
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Accumulates edges and validates them before producing a [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    neighbors: Vec<VertexSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            neighbors: (0..n).map(|_| VertexSet::new(n)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `uv`. Returns `Ok(false)` when the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        Ok(self.push_unchecked(u, v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.neighbors[u].contains(v)
    }

    fn push_unchecked(&mut self, u: usize, v: usize) -> bool {
        let fresh = self.neighbors[u].insert(v);
        self.neighbors[v].insert(u);
        fresh
    }

    pub fn build(self) -> Result<Graph> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let lists = self.neighbors.iter().map(VertexSet::to_vec).collect();
        let graph = Graph {
            neighbors: self.neighbors,
            lists,
        };
        debug_assert!(graph.check_invariants());
        Ok(graph)
    }
}
