//! Exhaustive `s`-choosability decisions.
//!
//! Lists of size exactly `s` suffice (extra colors only help). A list
//! assignment up to renaming colors is the multiset of its color classes
//! `{v : c ∈ L(v)}`, with every vertex covered exactly `s` times, so such
//! multisets are enumerated instead of raw assignments. Classes are generated
//! in canonical order: by smallest vertex, then by bitmask. Since the smallest
//! vertex of each new class is the lowest vertex still short of `s` colors,
//! every orbit is produced exactly once and at most `s·n` colors ever appear.

use serde::Serialize;

use super::coloring::ListSearch;
use super::{check_cap, require_hereditary, Caps, ListAssignment};
use crate::graph::{Graph, VertexSet};
use crate::parameters::GraphParameter;
use crate::Result;

#[derive(Clone, Debug, Serialize)]
pub struct ChoosabilityOutcome {
    pub choosable: bool,
    /// A list assignment with no `(f,p)`-proper coloring, when not choosable.
    pub bad_assignment: Option<ListAssignment>,
    /// Number of assignments (up to color renaming) examined.
    pub assignments_checked: u64,
}

pub fn decide_choosability_fp(g: &Graph, s: usize, f: &dyn GraphParameter, p: u64) -> Result<ChoosabilityOutcome> {
    decide_choosability_fp_with(g, s, f, p, &Caps::default())
}

/// Whether every `s`-list assignment of `g` admits an `(f,p)`-proper
/// coloring.
pub fn decide_choosability_fp_with(
    g: &Graph,
    s: usize,
    f: &dyn GraphParameter,
    p: u64,
    caps: &Caps,
) -> Result<ChoosabilityOutcome> {
    require_hereditary(f)?;
    check_cap("vertex count for choosability", caps.choose_n, g.n())?;
    check_cap("list size for choosability", caps.choose_s, s)?;
    let n = g.n();
    let mut e = Enumerator {
        g,
        f,
        p,
        need: vec![s; n],
        classes: Vec::with_capacity(s * n),
        checked: 0,
        bad: None,
    };
    if s == 0 {
        // Empty lists: only the null graph can be colored.
        let ok = n == 0;
        return Ok(ChoosabilityOutcome {
            choosable: ok,
            bad_assignment: (!ok).then(|| ListAssignment::from_lists(vec![Vec::new(); n])),
            assignments_checked: 1,
        });
    }
    e.descend(0, 0);
    let bad = e.bad.map(|classes| to_assignment(n, s, &classes));
    Ok(ChoosabilityOutcome {
        choosable: bad.is_none(),
        bad_assignment: bad,
        assignments_checked: e.checked,
    })
}

fn to_assignment(n: usize, s: usize, classes: &[u64]) -> ListAssignment {
    let mut lists = vec![Vec::new(); n];
    for (c, &mask) in classes.iter().enumerate() {
        for (v, list) in lists.iter_mut().enumerate() {
            if mask >> v & 1 == 1 {
                list.push(c);
            }
        }
    }
    ListAssignment::new(lists, s).expect("each vertex is covered s times")
}

struct Enumerator<'a> {
    g: &'a Graph,
    f: &'a dyn GraphParameter,
    p: u64,
    need: Vec<usize>,
    classes: Vec<u64>,
    checked: u64,
    bad: Option<Vec<u64>>,
}

impl Enumerator<'_> {
    /// Returns false once a bad assignment has been found.
    fn descend(&mut self, prev_min: usize, prev_mask: u64) -> bool {
        let Some(v) = self.need.iter().position(|&k| k > 0) else {
            return self.check_complete();
        };
        let open: u64 = self
            .need
            .iter()
            .enumerate()
            .skip(v + 1)
            .filter(|&(_, &k)| k > 0)
            .fold(0, |m, (u, _)| m | 1 << u);
        let floor = if prev_min == v && !self.classes.is_empty() { prev_mask } else { 0 };
        // Subsets of `open` in increasing order.
        let mut sub = 0u64;
        loop {
            let mask = sub | 1 << v;
            if mask >= floor {
                self.take(mask, -1);
                self.classes.push(mask);
                let go_on = self.descend(v, mask);
                self.classes.pop();
                self.take(mask, 1);
                if !go_on {
                    return false;
                }
            }
            if sub == open {
                break;
            }
            sub = sub.wrapping_sub(open) & open;
        }
        true
    }

    fn take(&mut self, mask: u64, delta: isize) {
        let mut m = mask;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            self.need[u] = (self.need[u] as isize + delta) as usize;
        }
    }

    fn check_complete(&mut self) -> bool {
        self.checked += 1;
        let n = self.g.n();
        let mut lists = vec![Vec::new(); n];
        for (c, &mask) in self.classes.iter().enumerate() {
            for (v, list) in lists.iter_mut().enumerate() {
                if mask >> v & 1 == 1 {
                    list.push(c);
                }
            }
        }
        let mut search = ListSearch {
            g: self.g,
            f: self.f,
            p: self.p,
            hereditary: true,
            lists: &lists,
            color: vec![0; n],
            classes: vec![VertexSet::new(n); self.classes.len()],
        };
        if search.run(0) {
            true
        } else {
            self.bad = Some(self.classes.clone());
            false
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::families::{complete, complete_bipartite, cycle};
    use crate::parameters::Builtin;
    use crate::solvers::exists_l_coloring;

    #[test]
    fn even_cycle_is_two_choosable() {
        let out = decide_choosability_fp(&cycle(4), 2, &Builtin::Star, 1).unwrap();
        assert!(out.choosable);
        assert!(out.assignments_checked > 0);
    }

    #[test]
    fn k24_is_not_two_choosable() {
        let g = complete_bipartite(2, 4);
        let out = decide_choosability_fp(&g, 2, &Builtin::Star, 1).unwrap();
        assert!(!out.choosable);
        let bad = out.bad_assignment.unwrap();
        assert_eq!(exists_l_coloring(&g, &bad, &Builtin::Star, 1).unwrap(), None);
    }

    #[test]
    fn triangle_thresholds() {
        let k3 = complete(3);
        assert!(!decide_choosability_fp(&k3, 2, &Builtin::Star, 1).unwrap().choosable);
        assert!(decide_choosability_fp(&k3, 3, &Builtin::Star, 1).unwrap().choosable);
        assert!(decide_choosability_fp(&k3, 1, &Builtin::Star, 3).unwrap().choosable);
    }

    #[test]
    fn orbit_count_of_two_vertices() {
        // Multisets of classes over {0,1} covering both vertices twice:
        // {01,01}, {01,0,1}, {0,0,1,1}.
        let out = decide_choosability_fp(&Graph::empty(2), 2, &Builtin::Star, 1).unwrap();
        assert_eq!(out.assignments_checked, 3);
    }

    #[test]
    fn caps_fire() {
        assert!(decide_choosability_fp(&Graph::empty(11), 2, &Builtin::Star, 1).is_err());
        assert!(decide_choosability_fp(&Graph::empty(3), 4, &Builtin::Star, 1).is_err());
    }
}
