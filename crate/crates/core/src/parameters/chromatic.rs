//! Exact chromatic number by branch and bound: a maximum clique gives the
//! lower bound, DSatur gives the upper bound, and a DSatur-ordered
//! backtracking search closes the gap one color count at a time.
//!
//! Works component by component on local 64-bit adjacency masks, so every
//! component must have at most 64 vertices.

use crate::graph::{Graph, VertexSet};

struct Local {
    adj: Vec<u64>,
}

impl Local {
    fn new(g: &Graph, verts: &[usize]) -> Self {
        assert!(verts.len() <= 64, "exact coloring limited to 64-vertex components");
        let adj = verts
            .iter()
            .map(|&v| {
                verts
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| g.has_edge(v, u))
                    .fold(0u64, |m, (j, _)| m | 1 << j)
            })
            .collect();
        Local { adj }
    }

    fn len(&self) -> usize {
        self.adj.len()
    }

    fn max_clique(&self) -> usize {
        fn expand(adj: &[u64], size: usize, mut cand: u64, best: &mut usize) {
            if cand == 0 {
                *best = (*best).max(size);
                return;
            }
            while cand != 0 {
                if size + cand.count_ones() as usize <= *best {
                    return;
                }
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                expand(adj, size + 1, cand & adj[v], best);
            }
        }
        let all = if self.len() == 64 { u64::MAX } else { (1u64 << self.len()) - 1 };
        let mut best = 0;
        expand(&self.adj, 0, all, &mut best);
        best
    }

    /// DSatur greedy; returns the number of colors used.
    fn dsatur(&self) -> usize {
        let k = self.len();
        let mut color = vec![usize::MAX; k];
        let mut used = 0;
        for _ in 0..k {
            let v = self.pick(&color);
            let taken = self.neighbor_colors(v, &color);
            let c = (!taken).trailing_zeros() as usize;
            color[v] = c;
            used = used.max(c + 1);
        }
        used
    }

    fn neighbor_colors(&self, v: usize, color: &[usize]) -> u64 {
        let mut taken = 0u64;
        let mut nb = self.adj[v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if color[u] != usize::MAX {
                taken |= 1 << color[u];
            }
        }
        taken
    }

    /// Uncolored vertex of maximum saturation, ties by degree then index.
    fn pick(&self, color: &[usize]) -> usize {
        (0..self.len())
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| {
                (
                    self.neighbor_colors(v, color).count_ones(),
                    self.adj[v].count_ones(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("an uncolored vertex remains")
    }

    fn colorable(&self, k: usize) -> bool {
        fn search(local: &Local, color: &mut [usize], left: usize, k: usize, used: usize) -> bool {
            if left == 0 {
                return true;
            }
            let v = local.pick(color);
            let taken = local.neighbor_colors(v, color);
            // A fresh color is interchangeable with any other fresh color.
            for c in 0..(used + 1).min(k) {
                if taken >> c & 1 == 0 {
                    color[v] = c;
                    if search(local, color, left - 1, k, used.max(c + 1)) {
                        return true;
                    }
                }
            }
            color[v] = usize::MAX;
            false
        }
        if self.len() == 0 {
            return true;
        }
        if k == 0 {
            return false;
        }
        let mut color = vec![usize::MAX; self.len()];
        search(self, &mut color, self.len(), k, 0)
    }

    fn chromatic(&self) -> usize {
        if self.len() == 0 {
            return 0;
        }
        let lower = self.max_clique();
        let upper = self.dsatur();
        (lower..upper).find(|&k| self.colorable(k)).unwrap_or(upper)
    }
}

/// `χ(G[set])`.
pub fn chromatic_number_on(g: &Graph, set: &VertexSet) -> usize {
    g.components_within(set)
        .iter()
        .map(|c| Local::new(g, &c.to_vec()).chromatic())
        .max()
        .unwrap_or(0)
}

/// Whether `G[set]` is properly `k`-colorable.
pub fn is_colorable_on(g: &Graph, set: &VertexSet, k: usize) -> bool {
    g.components_within(set)
        .iter()
        .all(|c| Local::new(g, &c.to_vec()).colorable(k))
}

/// `ω(G[set])`.
pub fn max_clique_on(g: &Graph, set: &VertexSet) -> usize {
    g.components_within(set)
        .iter()
        .map(|c| Local::new(g, &c.to_vec()).max_clique())
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::families::{complete, cycle, petersen};

    #[test]
    fn cliques_and_colors() {
        let p = petersen();
        assert_eq!(max_clique_on(&p, &p.vertices()), 2);
        assert!(!is_colorable_on(&p, &p.vertices(), 2));
        assert!(is_colorable_on(&p, &p.vertices(), 3));
        assert_eq!(chromatic_number_on(&complete(6), &complete(6).vertices()), 6);
        assert_eq!(chromatic_number_on(&cycle(8), &cycle(8).vertices()), 2);
    }
}
