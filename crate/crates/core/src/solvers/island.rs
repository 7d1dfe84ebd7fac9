//! Islands, peel decompositions and `col_{f,p}`.
//!
//! An `s`-island of `H` is a nonempty vertex set in which every vertex has
//! fewer than `s` neighbours in `H` outside the set. For a connected and
//! hereditary `f`, each component of an island is again an island with no
//! larger `f`, so only connected sets are searched. `col_{f,p}` is computed by
//! repeatedly removing islands: a peel that empties the graph certifies the
//! upper bound, and a remainder without any island is itself an induced
//! subgraph witnessing the lower bound.

use serde::Serialize;

use super::{check_cap, require_connected_hereditary, Caps, Coloring, ListAssignment};
use crate::graph::{Graph, VertexSet};
use crate::parameters::{GraphParameter, ParamValue};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IslandCertificate {
    #[serde(serialize_with = "crate::report::ser_set")]
    pub island: VertexSet,
    pub s: usize,
    pub f_value: ParamValue,
    /// Outside-neighbour count of each island vertex, in vertex order.
    pub outside_counts: Vec<usize>,
}

impl IslandCertificate {
    fn build(g: &Graph, within: &VertexSet, island: VertexSet, s: usize, f: &dyn GraphParameter) -> Self {
        let outside = within.difference(&island);
        let outside_counts = island.iter().map(|v| g.degree_in(v, &outside)).collect();
        let f_value = f.eval_on(g, &island);
        IslandCertificate {
            island,
            s,
            f_value,
            outside_counts,
        }
    }
}

/// Islands removed in order; island `j` is an `s`-island of the graph induced
/// by islands `j..`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelDecomposition {
    pub s: usize,
    pub f: String,
    pub p: u64,
    pub islands: Vec<IslandCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColResult {
    pub value: usize,
    pub upper_certificate: PeelDecomposition,
    /// Induced subgraph with no `(value - 1)`-island of `f <= p`.
    #[serde(serialize_with = "crate::report::ser_set")]
    pub lower_certificate: VertexSet,
}

/// A connected `s`-island `I` of `g` with `f(G[I]) <= p`.
pub fn find_island(g: &Graph, s: usize, f: &dyn GraphParameter, p: u64) -> Result<Option<IslandCertificate>> {
    require_connected_hereditary(f)?;
    Ok(find_island_within(g, &g.vertices(), s, f, p))
}

/// As [`find_island`] on `G[within]`. Does not check the parameter flags.
pub fn find_island_within(
    g: &Graph,
    within: &VertexSet,
    s: usize,
    f: &dyn GraphParameter,
    p: u64,
) -> Option<IslandCertificate> {
    if s == 0 {
        return None;
    }
    let n = g.n();
    let empty = VertexSet::new(n);
    for v in within.iter() {
        if g.degree_in(v, within) < s && f.admits(g, &empty, v, p) {
            let island = VertexSet::singleton(n, v);
            return Some(IslandCertificate::build(g, within, island, s, f));
        }
    }
    let mut search = IslandSearch { g, within, s, f, p };
    let mut excluded = VertexSet::new(n);
    for root in within.iter() {
        if f.admits(g, &empty, root, p) && g.degree_in(root, &excluded) < s {
            let island = VertexSet::singleton(n, root);
            if let Some(found) = search.grow(island, excluded.clone()) {
                return Some(IslandCertificate::build(g, within, found, s, f));
            }
        }
        // Every connected set through `root` has been seen.
        excluded.insert(root);
    }
    None
}

struct IslandSearch<'a> {
    g: &'a Graph,
    within: &'a VertexSet,
    s: usize,
    f: &'a dyn GraphParameter,
    p: u64,
}

impl IslandSearch<'_> {
    /// Connected supersets of `set` avoiding `excluded`. Invariants: `set`
    /// is connected with `f <= p`, and no member has `s` excluded neighbours.
    fn grow(&mut self, set: VertexSet, mut excluded: VertexSet) -> Option<VertexSet> {
        let g = self.g;
        let mut frontier = VertexSet::new(g.n());
        for v in set.iter() {
            frontier.union_with(g.neighbors(v));
        }
        frontier.intersect_with(self.within);
        frontier.difference_with(&set);
        frontier.difference_with(&excluded);
        let Some(w) = frontier.first() else {
            // All outside neighbours are excluded, and each member has fewer
            // than `s` of those.
            return Some(set);
        };
        // Branch 1: `w` stays outside for good.
        excluded.insert(w);
        if g.neighbors(w).intersection(&set).iter().all(|u| g.degree_in(u, &excluded) < self.s) {
            if let Some(found) = self.grow(set.clone(), excluded.clone()) {
                return Some(found);
            }
        }
        excluded.remove(w);
        // Branch 2: `w` joins.
        if g.degree_in(w, &excluded) < self.s && self.f.admits(g, &set, w, self.p) {
            let mut bigger = set;
            bigger.insert(w);
            return self.grow(bigger, excluded);
        }
        None
    }
}

/// Peels `s`-islands of `f <= p` until the graph is empty. On failure returns
/// the island-free remainder.
pub fn peel(g: &Graph, s: usize, f: &dyn GraphParameter, p: u64) -> std::result::Result<PeelDecomposition, VertexSet> {
    let mut rest = g.vertices();
    let mut islands = Vec::new();
    while !rest.is_empty() {
        match find_island_within(g, &rest, s, f, p) {
            Some(cert) => {
                rest.difference_with(&cert.island);
                islands.push(cert);
            }
            None => return Err(rest),
        }
    }
    Ok(PeelDecomposition {
        s,
        f: f.id().to_string(),
        p,
        islands,
    })
}

pub fn col_fp(g: &Graph, f: &dyn GraphParameter, p: u64) -> Result<ColResult> {
    col_fp_with(g, f, p, &Caps::default())
}

/// `col_{f,p}(G)` with both certificates. The null graph has value 0.
pub fn col_fp_with(g: &Graph, f: &dyn GraphParameter, p: u64, caps: &Caps) -> Result<ColResult> {
    require_connected_hereditary(f)?;
    check_cap("vertex count for col_fp", caps.col_n, g.n())?;
    if g.n() == 0 {
        return Ok(ColResult {
            value: 0,
            upper_certificate: PeelDecomposition {
                s: 0,
                f: f.id().to_string(),
                p,
                islands: Vec::new(),
            },
            lower_certificate: VertexSet::new(0),
        });
    }
    // No nonempty graph has a 0-island.
    let mut lower = g.vertices();
    // With s > Δ every single vertex is an island, so failing there means
    // some vertex alone already violates f <= p.
    for s in 1..=g.max_degree() + 1 {
        match peel(g, s, f, p) {
            Ok(upper) => {
                return Ok(ColResult {
                    value: s,
                    upper_certificate: upper,
                    lower_certificate: lower,
                })
            }
            Err(stuck) => lower = stuck,
        }
    }
    Err(Error::Unbounded(format!(
        "a single vertex violates {} <= {p}",
        f.id()
    )))
}

/// Coloring number `col(G)` (degeneracy + 1) by min-degree peeling with
/// bucket queues; 0 for the null graph.
pub fn degeneracy_col(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let maxd = g.max_degree();
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); maxd + 1];
    for v in 0..n {
        buckets[deg[v]].push(v);
    }
    let mut removed = vec![false; n];
    let mut lo = 0;
    let mut best = 0;
    for _ in 0..n {
        // Entries are lazily invalidated: skip stale ones.
        let v = loop {
            while buckets[lo].is_empty() {
                lo += 1;
            }
            let v = buckets[lo].pop().unwrap();
            if !removed[v] && deg[v] == lo {
                break v;
            }
        };
        removed[v] = true;
        best = best.max(deg[v]);
        for u in g.neighbors(v).iter() {
            if !removed[u] {
                deg[u] -= 1;
                buckets[deg[u]].push(u);
                lo = lo.min(deg[u]);
            }
        }
    }
    best + 1
}

/// An `(f,p)`-proper `L`-coloring built from a peel decomposition at
/// `s = L.s()`: islands are colored last-peeled first, each vertex taking the
/// lowest list color unused on its already colored neighbours outside its
/// island.
pub fn greedy_island_coloring(g: &Graph, lists: &ListAssignment, f: &dyn GraphParameter, p: u64) -> Result<Coloring> {
    require_connected_hereditary(f)?;
    if lists.n() != g.n() {
        return Err(Error::Precondition("list assignment does not match the graph".into()));
    }
    let s = lists.s();
    let decomposition = peel(g, s, f, p).map_err(|stuck| {
        Error::Precondition(format!(
            "list size {s} is below col_{{{},{p}}}: {} vertices admit no {s}-island",
            f.id(),
            stuck.len()
        ))
    })?;
    let mut color = vec![usize::MAX; g.n()];
    for cert in decomposition.islands.iter().rev() {
        for v in cert.island.iter() {
            let used: Vec<usize> = g
                .neighbors(v)
                .difference(&cert.island)
                .iter()
                .map(|u| color[u])
                .filter(|&c| c != usize::MAX)
                .collect();
            color[v] = *lists
                .list(v)
                .iter()
                .find(|c| !used.contains(c))
                .expect("an island vertex has fewer outside neighbours than list colors");
        }
    }
    Ok(Coloring(color))
}
