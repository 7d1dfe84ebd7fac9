use std::collections::BTreeSet;

use super::{check_cap, Caps, Coloring, ListAssignment};
use crate::graph::{Graph, VertexSet};
use crate::parameters::GraphParameter;
use crate::{Color, Error, Result};

/// `χ_{f,p}(G)` with a witness coloring, using default caps.
pub fn chi_fp(g: &Graph, f: &dyn GraphParameter, p: u64) -> Result<(usize, Coloring)> {
    chi_fp_with(g, f, p, &Caps::default())
}

/// Least `k` admitting an `(f,p)`-proper `k`-coloring.
///
/// Vertices are assigned in index order; a vertex may open at most one new
/// color (colors are interchangeable). For hereditary `f` a branch is cut as
/// soon as a class violates `f <= p`; otherwise classes are only checked on
/// complete colorings.
pub fn chi_fp_with(g: &Graph, f: &dyn GraphParameter, p: u64, caps: &Caps) -> Result<(usize, Coloring)> {
    check_cap("vertex count for chi_fp", caps.chi_n, g.n())?;
    let n = g.n();
    if n == 0 {
        return Ok((0, Coloring(Vec::new())));
    }
    let hereditary = f.flags().hereditary;
    for k in 1..=n {
        let mut search = ChiSearch {
            g,
            f,
            p,
            k,
            hereditary,
            color: vec![0; n],
            classes: vec![VertexSet::new(n); k],
        };
        if search.run(0, 0) {
            return Ok((k, Coloring(search.color)));
        }
    }
    Err(Error::Unbounded(format!(
        "no ({}, {p})-proper coloring even with one color per vertex",
        f.id()
    )))
}

struct ChiSearch<'a> {
    g: &'a Graph,
    f: &'a dyn GraphParameter,
    p: u64,
    k: usize,
    hereditary: bool,
    color: Vec<Color>,
    classes: Vec<VertexSet>,
}

impl ChiSearch<'_> {
    fn run(&mut self, v: usize, used: usize) -> bool {
        if v == self.g.n() {
            return self.hereditary
                || self.classes[..used]
                    .iter()
                    .all(|c| self.f.bounded_on(self.g, c, self.p));
        }
        for c in 0..(used + 1).min(self.k) {
            if self.hereditary && !self.f.admits(self.g, &self.classes[c], v, self.p) {
                continue;
            }
            self.color[v] = c;
            self.classes[c].insert(v);
            if self.run(v + 1, used.max(c + 1)) {
                return true;
            }
            self.classes[c].remove(v);
        }
        false
    }
}

/// An `(f,p)`-proper `L`-coloring, or `None` if none exists.
pub fn exists_l_coloring(g: &Graph, lists: &ListAssignment, f: &dyn GraphParameter, p: u64) -> Result<Option<Coloring>> {
    if lists.n() != g.n() {
        return Err(Error::Precondition(format!(
            "list assignment covers {} vertices, graph has {}",
            lists.n(),
            g.n()
        )));
    }
    let palette: Vec<Color> = lists
        .lists()
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let dense: Vec<Vec<usize>> = lists
        .lists()
        .iter()
        .map(|l| l.iter().map(|c| palette.binary_search(c).unwrap()).collect())
        .collect();
    let mut search = ListSearch {
        g,
        f,
        p,
        hereditary: f.flags().hereditary,
        lists: &dense,
        color: vec![0; g.n()],
        classes: vec![VertexSet::new(g.n()); palette.len()],
    };
    Ok(search
        .run(0)
        .then(|| Coloring(search.color.iter().map(|&i| palette[i]).collect())))
}

/// Backtracking over dense color indices.
pub(crate) struct ListSearch<'a> {
    pub g: &'a Graph,
    pub f: &'a dyn GraphParameter,
    pub p: u64,
    pub hereditary: bool,
    pub lists: &'a [Vec<usize>],
    pub color: Vec<usize>,
    pub classes: Vec<VertexSet>,
}

impl ListSearch<'_> {
    pub fn run(&mut self, v: usize) -> bool {
        if v == self.g.n() {
            return self.hereditary
                || self
                    .classes
                    .iter()
                    .all(|c| c.is_empty() || self.f.bounded_on(self.g, c, self.p));
        }
        for &c in &self.lists[v] {
            if self.hereditary && !self.f.admits(self.g, &self.classes[c], v, self.p) {
                continue;
            }
            self.color[v] = c;
            self.classes[c].insert(v);
            let ok = self.run(v + 1);
            self.classes[c].remove(v);
            if ok {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::families::{complete, cycle, path};
    use crate::parameters::Builtin;
    use crate::solvers::verify_fp_proper;

    #[test]
    fn chi_examples() {
        let (k, c) = chi_fp(&cycle(5), &Builtin::Star, 1).unwrap();
        assert_eq!(k, 3);
        assert!(verify_fp_proper(&cycle(5), &c, &Builtin::Star, 1));
        assert_eq!(chi_fp(&cycle(4), &Builtin::MaxDegree, 1).unwrap().0, 2);
        assert_eq!(chi_fp(&path(3), &Builtin::Star, 3).unwrap().0, 1);
        assert_eq!(chi_fp(&Graph::empty(0), &Builtin::Star, 1).unwrap().0, 0);
    }

    #[test]
    fn chi_unbounded_when_single_vertices_fail() {
        assert!(matches!(
            chi_fp(&complete(2), &Builtin::Star, 0),
            Err(Error::Unbounded(_))
        ));
    }

    #[test]
    fn one_color_on_c4_fails_for_defect_one() {
        // Exhaustive over the single 1-coloring: the class is C4, max degree 2.
        assert!(!verify_fp_proper(&cycle(4), &Coloring(vec![0; 4]), &Builtin::MaxDegree, 1));
    }

    #[test]
    fn l_coloring_examples() {
        let k2 = complete(2);
        let both = ListAssignment::uniform(2, &[0, 1]);
        let c = exists_l_coloring(&k2, &both, &Builtin::Star, 1).unwrap().unwrap();
        assert_ne!(c.color(0), c.color(1));
        let forced = ListAssignment::uniform(2, &[0]);
        assert_eq!(exists_l_coloring(&k2, &forced, &Builtin::Star, 1).unwrap(), None);
        assert_eq!(
            exists_l_coloring(&k2, &forced, &Builtin::Star, 2).unwrap(),
            Some(Coloring(vec![0, 0]))
        );
    }

    #[test]
    fn l_coloring_rejects_wrong_domain() {
        let l = ListAssignment::uniform(3, &[0, 1]);
        assert!(exists_l_coloring(&complete(2), &l, &Builtin::Star, 1).is_err());
    }
}
