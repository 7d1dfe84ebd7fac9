//! `fan(G)`: the largest order of a fan (a path plus an apex adjacent to
//! every path vertex) contained in `G` as a subgraph.
//!
//! Per apex `v`, this is `1 +` the longest path inside `N(v)`. Conventions:
//! the null graph has fan 0, a single vertex is a fan on one vertex and an
//! edge is a fan on two.

use crate::graph::{Graph, VertexSet};

/// Neighbourhoods up to this size use the subset dynamic program.
const DP_LIMIT: usize = 18;

/// Vertex count of a longest path in `G[set]` (0 when empty).
pub fn longest_path_on(g: &Graph, set: &VertexSet) -> usize {
    let verts: Vec<usize> = set.iter().collect();
    if verts.len() <= DP_LIMIT {
        longest_path_dp(g, &verts)
    } else {
        let mut best = 0;
        for &start in &verts {
            let mut visited = VertexSet::singleton(g.n(), start);
            longest_from(g, set, start, &mut visited, 1, &mut best);
            if best == verts.len() {
                break;
            }
        }
        best
    }
}

/// `ends[mask]` holds, as a bitmask, the vertices that can end a path visiting
/// exactly `mask`.
fn longest_path_dp(g: &Graph, verts: &[usize]) -> usize {
    let k = verts.len();
    if k == 0 {
        return 0;
    }
    let local: Vec<u32> = verts
        .iter()
        .map(|&v| {
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &u)| g.has_edge(v, u))
                .fold(0u32, |m, (j, _)| m | 1 << j)
        })
        .collect();
    let full = 1usize << k;
    let mut ends = vec![0u32; full];
    let mut best = 1;
    for i in 0..k {
        ends[1 << i] = 1 << i;
    }
    for mask in 1..full {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        best = best.max(mask.count_ones() as usize);
        let mut it = e;
        while it != 0 {
            let last = it.trailing_zeros() as usize;
            it &= it - 1;
            let mut ext = local[last] & !(mask as u32);
            while ext != 0 {
                let nxt = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                ends[mask | 1 << nxt] |= 1 << nxt;
            }
        }
    }
    best
}

fn longest_from(
    g: &Graph,
    set: &VertexSet,
    v: usize,
    visited: &mut VertexSet,
    len: usize,
    best: &mut usize,
) {
    *best = (*best).max(len);
    if *best == set.len() {
        return;
    }
    // Upper bound: everything still reachable from `v` outside the path.
    let free = set.difference(visited);
    let mut reach = VertexSet::new(g.n());
    let mut frontier = g.neighbors(v).intersection(&free);
    while !frontier.is_empty() {
        reach.union_with(&frontier);
        let mut next = VertexSet::new(g.n());
        for u in frontier.iter() {
            next.union_with(g.neighbors(u));
        }
        next.intersect_with(&free);
        next.difference_with(&reach);
        frontier = next;
    }
    if len + reach.len() <= *best {
        return;
    }
    for u in g.neighbors(v).intersection(&free).iter() {
        visited.insert(u);
        longest_from(g, set, u, visited, len + 1, best);
        visited.remove(u);
    }
}

/// Whether `G[set]` contains a path on `len` vertices.
fn has_path(g: &Graph, set: &VertexSet, len: usize) -> bool {
    if len == 0 {
        return true;
    }
    if set.len() < len {
        return false;
    }
    fn extend(g: &Graph, set: &VertexSet, v: usize, visited: &mut VertexSet, left: usize) -> bool {
        if left == 0 {
            return true;
        }
        let cand = g.neighbors(v).intersection(set).difference(visited);
        for u in cand.iter() {
            visited.insert(u);
            if extend(g, set, u, visited, left - 1) {
                return true;
            }
            visited.remove(u);
        }
        false
    }
    set.iter().any(|start| {
        let mut visited = VertexSet::singleton(g.n(), start);
        extend(g, set, start, &mut visited, len - 1)
    })
}

/// `fan(G[set])`.
pub fn fan_on(g: &Graph, set: &VertexSet) -> usize {
    set.iter()
        .map(|v| 1 + longest_path_on(g, &g.neighbors(v).intersection(set)))
        .max()
        .unwrap_or(0)
}

/// Whether `fan(G[set]) > p`, i.e. some apex has a path on `p` vertices in
/// its neighbourhood.
pub fn fan_exceeds(g: &Graph, set: &VertexSet, p: usize) -> bool {
    if p == 0 {
        return !set.is_empty();
    }
    set.iter()
        .any(|v| has_path(g, &g.neighbors(v).intersection(set), p))
}
