//! Explicit graph families, list colorings of paths and path powers, the
//! randomized adversarial list pipeline and a few closed-form bounds.

pub mod adversary;
pub mod bounds;
pub mod families;

use crate::graph::{Graph, VertexSet};
use crate::solvers::{Coloring, ListAssignment};
use crate::{Error, Result};

pub use adversary::{
    compute_a_phi, good_vertices, mono_dense_witness, run_adversary, sample_b_l0, sample_l1, verify_l1_dominates,
    AdversaryConfig, AdversaryState, ConditionReport, DominationMode, DominationReport, ExtensionReport, GoodMode,
    GoodVertices, MonoWitness, PartialLists,
};
pub use bounds::{estim_ratio, girth_component_bound, h_star_path_certificate, GirthBound, HStarCertificate};

/// Path on `0..i²` fully joined to an independent set `i²..i²+i`.
pub fn fan_join(i: usize) -> Result<Graph> {
    if i == 0 {
        return Err(Error::Precondition("fan_join needs i >= 1".into()));
    }
    let m = i * i;
    let path = (1..m).map(|v| (v - 1, v));
    let join = (0..m).flat_map(|u| (m..m + i).map(move |a| (u, a)));
    Ok(Graph::from_edges(m + i, path.chain(join))?.with_name(format!("fanjoin{i}")))
}

/// `P_n^t`: `i ~ j` iff `1 <= |i - j| <= t`.
pub fn path_power(n: usize, t: usize) -> Result<Graph> {
    if n == 0 || t == 0 {
        return Err(Error::Precondition("path_power needs n >= 1 and t >= 1".into()));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n.min(u + t + 1)).map(move |v| (u, v)));
    Ok(Graph::from_edges(n, edges)?.with_name(format!("P{n}^{t}")))
}

/// Vertex order along a path graph, starting from its lowest endpoint.
fn path_order(g: &Graph, within: &VertexSet) -> Result<Vec<usize>> {
    let not_path = || Error::Precondition("graph is not a path".into());
    let n = within.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    if g.edges_within(within) != n - 1 || within.iter().any(|v| g.degree_in(v, within) > 2) {
        return Err(not_path());
    }
    let start = within.iter().find(|&v| g.degree_in(v, within) <= 1).ok_or_else(not_path)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = g.neighbors(cur).iter().find(|&u| u != prev && within.contains(u)) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    if order.len() != n {
        return Err(not_path());
    }
    Ok(order)
}

fn require_two(lists: &ListAssignment, verts: impl IntoIterator<Item = usize>) -> Result<()> {
    match verts.into_iter().find(|&v| lists.list(v).len() < 2) {
        Some(v) => Err(Error::Precondition(format!("vertex {v} has fewer than 2 colors"))),
        None => Ok(()),
    }
}

/// Greedy walk along the path: the first vertex takes its lowest color, every
/// later vertex its lowest color different from its predecessor.
pub fn color_path_nonmono(path: &Graph, lists: &ListAssignment) -> Result<Coloring> {
    if lists.n() != path.n() {
        return Err(Error::Precondition("list assignment does not match the graph".into()));
    }
    let mut color = vec![0; path.n()];
    color_path_within(path, &path.vertices(), lists, &mut color)?;
    Ok(Coloring(color))
}

/// Same as [`color_path_nonmono`] on the induced path `G[within]`, writing
/// into `color`.
pub(crate) fn color_path_within(
    g: &Graph,
    within: &VertexSet,
    lists: &ListAssignment,
    color: &mut [usize],
) -> Result<()> {
    let order = path_order(g, within)?;
    require_two(lists, order.iter().copied())?;
    let mut prev = None;
    for v in order {
        let c = *lists.list(v).iter().find(|&&c| Some(c) != prev).unwrap();
        color[v] = c;
        prev = Some(c);
    }
    Ok(())
}

/// Block coloring of `P_n^t` from 2-lists.
///
/// Vertices are padded up to a multiple of `t(t+1)` with lists `{0, 1}`.
/// Each block of `t(t+1)` consecutive vertices splits into `t`-tuples
/// `T_0..T_t`. `T_0` takes lowest colors, and every vertex of `T_i` avoids the
/// color of the `i`-th vertex of `T_0`. The returned coloring is restricted
/// to the original `n` vertices.
pub fn block_color_path_power(n: usize, t: usize, lists: &ListAssignment) -> Result<Coloring> {
    if n == 0 || t == 0 {
        return Err(Error::Precondition("block coloring needs n >= 1 and t >= 1".into()));
    }
    if lists.n() != n {
        return Err(Error::Precondition("list assignment does not match n".into()));
    }
    require_two(lists, 0..n)?;
    let block = t * (t + 1);
    let padded = n.div_ceil(block) * block;
    let pad = [0, 1];
    let list = |v: usize| if v < n { lists.list(v) } else { &pad[..] };
    let mut color = vec![0; padded];
    for start in (0..padded).step_by(block) {
        for (v, c) in color.iter_mut().enumerate().skip(start).take(t) {
            *c = list(v)[0];
        }
        for i in 1..=t {
            let avoid = color[start + i - 1];
            let first = start + i * t;
            for (v, c) in color.iter_mut().enumerate().skip(first).take(t) {
                *c = *list(v).iter().find(|&&c| c != avoid).unwrap();
            }
        }
    }
    color.truncate(n);
    Ok(Coloring(color))
}

/// Largest monochromatic component of `c` in `g`.
pub fn max_mono_component(g: &Graph, c: &Coloring) -> usize {
    c.classes()
        .values()
        .flat_map(|class| g.components_within(class))
        .map(|comp| comp.len())
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::families::{cycle, path};
    use super::*;
    use crate::parameters::Builtin;
    use crate::rng;
    use crate::solvers::verify_fp_proper;
    use rand::seq::index::sample;

    #[test]
    fn fan_join_counts() {
        assert_eq!(fan_join(1).unwrap(), families::complete(2));
        for i in 1..=4 {
            let g = fan_join(i).unwrap();
            assert_eq!(g.n(), i * i + i);
            assert_eq!(g.edge_count(), i * i - 1 + i * i * i);
        }
        assert!(fan_join(0).is_err());
    }

    #[test]
    fn path_power_examples() {
        let g = path_power(12, 3).unwrap();
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(5), 6);
        assert_eq!(path_power(6, 1).unwrap(), path(6));
        assert_eq!(path_power(5, 10).unwrap(), families::complete(5));
    }

    #[test]
    fn path_coloring_has_no_mono_edge() {
        let p = path(5);
        let c = color_path_nonmono(&p, &ListAssignment::uniform(5, &[3, 7])).unwrap();
        assert_eq!(c.0, vec![3, 7, 3, 7, 3]);
        let relabeled = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        let c = color_path_nonmono(&relabeled, &ListAssignment::uniform(4, &[0, 1])).unwrap();
        assert!(relabeled.edges().all(|(u, v)| c.color(u) != c.color(v)));
        assert!(color_path_nonmono(&cycle(4), &ListAssignment::uniform(4, &[0, 1])).is_err());
        assert!(color_path_nonmono(&p, &ListAssignment::uniform(5, &[0])).is_err());
    }

    fn random_two_lists(n: usize, seed: u64) -> ListAssignment {
        let mut r = rng::seeded(seed);
        let lists = (0..n).map(|_| sample(&mut r, 4, 2).into_vec()).collect();
        ListAssignment::new(lists, 2).unwrap()
    }

    #[test]
    fn block_coloring_bounds_components() {
        for t in 1..=3 {
            for n in [t * (t + 1), 2 * t * (t + 1), 4 * t * (t + 1), 7] {
                let g = path_power(n, t).unwrap();
                for seed in 0..50 {
                    let l = random_two_lists(n, seed);
                    let c = block_color_path_power(n, t, &l).unwrap();
                    assert!(l.admits(&c));
                    assert!(verify_fp_proper(&g, &c, &Builtin::Star, (2 * t * t) as u64));
                }
            }
        }
    }

    #[test]
    fn block_coloring_avoids_a_tuple() {
        let t = 3;
        let l = random_two_lists(12, 5);
        let c = block_color_path_power(12, t, &l).unwrap();
        for i in 1..=t {
            let avoid = c.color(i - 1);
            assert!((i * t..(i + 1) * t).all(|v| c.color(v) != avoid));
        }
    }
}
