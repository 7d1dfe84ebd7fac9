//! Max-flow (Dinic) and exact densest subgraph.

use std::collections::VecDeque;

use crate::graph::{Graph, VertexSet};
use crate::Rational;

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    rev: usize,
    cap: i64,
}

/// Dinic's algorithm on integer capacities.
pub struct Dinic {
    arcs: Vec<Vec<Arc>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    pub fn new(nodes: usize) -> Self {
        Dinic {
            arcs: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) {
        let rev_from = self.arcs[to].len();
        let rev_to = self.arcs[from].len();
        self.arcs[from].push(Arc { to, rev: rev_from, cap });
        self.arcs[to].push(Arc {
            to: from,
            rev: rev_to,
            cap: 0,
        });
    }

    /// Undirected edge: capacity `cap` in both directions.
    pub fn add_edge(&mut self, a: usize, b: usize, cap: i64) {
        let rev_a = self.arcs[b].len();
        let rev_b = self.arcs[a].len();
        self.arcs[a].push(Arc { to: b, rev: rev_a, cap });
        self.arcs[b].push(Arc { to: a, rev: rev_b, cap });
    }

    fn bfs(&mut self, s: usize) {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for a in &self.arcs[u] {
                if a.cap > 0 && self.level[a.to] < 0 {
                    self.level[a.to] = self.level[u] + 1;
                    q.push_back(a.to);
                }
            }
        }
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: i64) -> i64 {
        if u == t {
            return pushed;
        }
        while self.iter[u] < self.arcs[u].len() {
            let i = self.iter[u];
            let Arc { to, cap, .. } = self.arcs[u][i];
            if cap > 0 && self.level[u] < self.level[to] {
                let d = self.dfs(to, t, pushed.min(cap));
                if d > 0 {
                    self.arcs[u][i].cap -= d;
                    let rev = self.arcs[u][i].rev;
                    self.arcs[to][rev].cap += d;
                    return d;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        loop {
            self.bfs(s);
            if self.level[t] < 0 {
                return flow;
            }
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
    }

    /// Nodes reachable from `s` in the residual network (call after
    /// [`Dinic::max_flow`]); this is the source side of a minimum cut.
    pub fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for a in &self.arcs[u] {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    q.push_back(a.to);
                }
            }
        }
        seen
    }
}

/// Finds `S ⊆ within` maximising `b|E(S)| - a|S|`, returning it when that
/// maximum is positive, i.e. when some subset has density `|E(S)|/|S|`
/// strictly above `a/b`.
///
/// Goldberg's network: source to each vertex with capacity `m b`, each vertex
/// to the sink with `m b + 2a - b deg(v)`, and capacity `b` on both
/// directions of every edge. The cut of `S` costs `m b n + 2(a|S| - b|E(S)|)`.
fn denser_than(g: &Graph, within: &VertexSet, verts: &[usize], a: i64, b: i64) -> Option<VertexSet> {
    let k = verts.len();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in verts.iter().enumerate() {
        index[v] = i;
    }
    let m = g.edges_within(within) as i64;
    let (src, sink) = (k, k + 1);
    let mut net = Dinic::new(k + 2);
    for (i, &v) in verts.iter().enumerate() {
        let deg = g.degree_in(v, within) as i64;
        net.add_arc(src, i, m * b);
        net.add_arc(i, sink, m * b + 2 * a - b * deg);
        for u in g.neighbors(v).iter() {
            let j = index[u];
            if j != usize::MAX && j > i {
                net.add_edge(i, j, b);
            }
        }
    }
    let cut = net.max_flow(src, sink);
    if cut >= m * b * k as i64 {
        return None;
    }
    let side = net.source_side(src);
    let set = VertexSet::from_vertices(g.n(), (0..k).filter(|&i| side[i]).map(|i| verts[i]));
    debug_assert!(!set.is_empty());
    Some(set)
}

/// A densest subgraph of `G[within]`: a vertex set maximising
/// `|E(S)| / |S|`, together with that exact density. Returns `None` for an
/// empty `within`.
///
/// Starts from the whole set and repeatedly asks the cut network for a
/// strictly denser set until none exists; each step strictly increases the
/// density, which takes one of finitely many values `e / v`.
pub fn densest_subgraph(g: &Graph, within: &VertexSet) -> Option<(VertexSet, Rational)> {
    if within.is_empty() {
        return None;
    }
    let verts: Vec<usize> = within.iter().collect();
    let mut best = within.clone();
    let mut density = Rational::new(g.edges_within(within) as i64, verts.len() as i64);
    if *density.numer() == 0 {
        // Edgeless: any single vertex is densest, keep the lowest for determinism.
        return Some((VertexSet::singleton(g.n(), verts[0]), density));
    }
    while let Some(s) = denser_than(g, within, &verts, *density.numer(), *density.denom()) {
        let d = Rational::new(g.edges_within(&s) as i64, s.len() as i64);
        debug_assert!(d > density);
        density = d;
        best = s;
    }
    Some((best, density))
}

/// Exact maximum average degree of `G[within]` (0 when empty).
pub fn max_average_degree(g: &Graph, within: &VertexSet) -> Rational {
    densest_subgraph(g, within)
        .map(|(_, d)| d * 2)
        .unwrap_or_else(|| Rational::from_integer(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dinic_small_network() {
        let mut d = Dinic::new(4);
        d.add_arc(0, 1, 3);
        d.add_arc(0, 2, 2);
        d.add_arc(1, 2, 1);
        d.add_arc(1, 3, 2);
        d.add_arc(2, 3, 3);
        assert_eq!(d.max_flow(0, 3), 5);
    }

    #[test]
    fn densest_of_k4_with_pendant() {
        let mut edges: Vec<(usize, usize)> =
            (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        edges.push((3, 4));
        let g = Graph::from_edges(5, edges).unwrap();
        let (set, d) = densest_subgraph(&g, &g.vertices()).unwrap();
        assert_eq!(set.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(d, Rational::new(3, 2));
        assert_eq!(max_average_degree(&g, &g.vertices()), Rational::from_integer(3));
    }

    #[test]
    fn densest_of_edgeless() {
        let g = Graph::empty(3);
        let (set, d) = densest_subgraph(&g, &g.vertices()).unwrap();
        assert_eq!(set.len(), 1);
        assert_eq!(d, Rational::from_integer(0));
        assert!(densest_subgraph(&g, &VertexSet::new(3)).is_none());
    }
}
