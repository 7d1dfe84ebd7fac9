//! Simple undirected graphs with bitset adjacency.
//!
//! Vertices are the dense range `0..n`. Every solver in the crate walks
//! these adjacency rows, so neighbourhood intersections and degree counts
//! inside a vertex set are word-parallel popcounts.

mod bitset;
pub mod io;

use std::collections::VecDeque;

use sha2::{Digest, Sha256};

pub use bitset::VertexSet;

use crate::{Error, Rational, Result};

/// Graphs beyond this order are rejected at ingestion.
pub const MAX_VERTICES: usize = 4096;

#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edges: usize,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("edges", &self.edge_list())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::new(n); n],
            edges: 0,
            name: None,
        }
    }

    /// Builds a simple graph; duplicate edges collapse, self-loops and
    /// out-of-range endpoints are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::cap("vertex count", MAX_VERTICES as u64, n as u64));
        }
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        if fresh {
            self.edges += 1;
        }
        Ok(fresh)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Degree of `v` counted inside `set`.
    #[inline]
    pub fn degree_in(&self, v: usize, set: &VertexSet) -> usize {
        self.adj[v].intersection_len(set)
    }

    /// Number of neighbours of `v` outside `set`.
    #[inline]
    pub fn degree_outside(&self, v: usize, set: &VertexSet) -> usize {
        self.adj[v].difference_len(set)
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        set.iter().map(|v| self.degree_in(v, set)).sum::<usize>() / 2
    }

    /// The induced subgraph on `set`, relabelled to `0..|set|` in increasing
    /// vertex order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Graph {
        self.induced_subgraph_with_map(set).0
    }

    /// As [`Graph::induced_subgraph`], also returning the host vertex of each
    /// new vertex.
    pub fn induced_subgraph_with_map(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = set.iter().collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut h = Graph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            for u in self.adj[v].iter() {
                let j = index[u];
                if j != usize::MAX && j > i {
                    h.add_edge(i, j).expect("induced edge is valid");
                }
            }
        }
        (h, map)
    }

    /// Vertex set of the component of `v` in `G[within]`. `v` must lie in
    /// `within`.
    pub fn component_of(&self, v: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(self.n, v);
        let mut frontier = seen.clone();
        loop {
            let mut next = VertexSet::new(self.n);
            for u in frontier.iter() {
                next.union_with(&self.adj[u]);
            }
            next.intersect_with(within);
            next.difference_with(&seen);
            if next.is_empty() {
                return seen;
            }
            seen.union_with(&next);
            frontier = next;
        }
    }

    /// Components of `G[within]`, ordered by smallest vertex.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut rest = within.clone();
        let mut parts = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v, within);
            rest.difference_with(&c);
            parts.push(c);
        }
        parts
    }

    /// Maximal connected vertex sets, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                    break;
                }
                for w in self.adj[u].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// Exact `2|E| / |V|`.
    pub fn average_degree(&self) -> Result<Rational> {
        if self.n == 0 {
            return Err(Error::NullGraph);
        }
        Ok(Rational::new(2 * self.edges as i64, self.n as i64))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(self.n + other.n, edges).expect("union of simple graphs is simple")
    }

    /// Copy with the edge `uv` deleted.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        if g.adj[u].remove(v) {
            g.adj[v].remove(u);
            g.edges -= 1;
        }
        g.name = None;
        g
    }

    /// Short content hash (hex of the first 16 bytes of SHA-256 over the
    /// graph6 encoding).
    pub fn content_hash(&self) -> String {
        let digest = Sha256::digest(io::to_graph6(self).as_bytes());
        digest[..16].iter().map(|b| format!("{b:02x}")).collect()
    }
}
