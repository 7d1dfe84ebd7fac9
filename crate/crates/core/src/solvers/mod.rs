//! Exact solvers with certificates.
//!
//! All searches assign vertices lowest-first and try colors lowest-first, so
//! every returned witness is reproducible.

mod choosability;
mod coloring;
mod island;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::parameters::GraphParameter;
use crate::{Color, Error, Result};

pub use choosability::{decide_choosability_fp, decide_choosability_fp_with, ChoosabilityOutcome};
pub use coloring::{chi_fp, chi_fp_with, exists_l_coloring};
pub use island::{
    col_fp, col_fp_with, degeneracy_col, find_island, find_island_within, greedy_island_coloring, peel,
    ColResult, IslandCertificate, PeelDecomposition,
};

/// Limits on the exponential searches. Exceeding one is an error, never a
/// silent hang.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Caps {
    /// Vertex cap for `chi_fp` and the exact chromatic number.
    pub chi_n: usize,
    /// Vertex cap for choosability decisions.
    pub choose_n: usize,
    /// List-size cap for choosability decisions.
    pub choose_s: usize,
    /// Vertex cap for `col_fp`.
    pub col_n: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            chi_n: 24,
            choose_n: 10,
            choose_s: 3,
            col_n: 24,
        }
    }
}

pub(crate) fn check_cap(what: &'static str, cap: usize, actual: usize) -> Result<()> {
    if actual > cap {
        Err(Error::cap(what, cap as u64, actual as u64))
    } else {
        Ok(())
    }
}

pub(crate) fn require_hereditary(f: &dyn GraphParameter) -> Result<()> {
    if f.flags().hereditary {
        Ok(())
    } else {
        Err(Error::Precondition(format!("parameter {} is not hereditary", f.id())))
    }
}

pub(crate) fn require_connected_hereditary(f: &dyn GraphParameter) -> Result<()> {
    let fl = f.flags();
    if fl.hereditary && fl.connected {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "parameter {} must be connected and hereditary",
            f.id()
        )))
    }
}

/// A total coloring `V -> colors`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Coloring(pub Vec<Color>);

impl Coloring {
    pub fn color(&self, v: usize) -> Color {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Color classes, keyed by color.
    pub fn classes(&self) -> BTreeMap<Color, VertexSet> {
        let n = self.0.len();
        let mut out: BTreeMap<Color, VertexSet> = BTreeMap::new();
        for (v, &c) in self.0.iter().enumerate() {
            out.entry(c).or_insert_with(|| VertexSet::new(n)).insert(v);
        }
        out
    }

    pub fn colors_used(&self) -> usize {
        self.classes().len()
    }
}

/// Per-vertex color lists with a declared minimum size `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
    s: usize,
}

impl ListAssignment {
    /// Lists are sorted and deduplicated; fails if some list is smaller than `s`.
    pub fn new(lists: Vec<Vec<Color>>, s: usize) -> Result<Self> {
        let lists: Vec<Vec<Color>> = lists
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        if let Some((v, l)) = lists.iter().enumerate().find(|(_, l)| l.len() < s) {
            return Err(Error::Precondition(format!(
                "list of vertex {v} has {} colors, fewer than s = {s}",
                l.len()
            )));
        }
        Ok(ListAssignment { lists, s })
    }

    /// Declares `s` as the smallest list size.
    pub fn from_lists(lists: Vec<Vec<Color>>) -> Self {
        let s = lists.iter().map(|l| {
            let mut l = l.clone();
            l.sort_unstable();
            l.dedup();
            l.len()
        });
        let s = s.min().unwrap_or(0);
        Self::new(lists, s).expect("s is the minimum list size")
    }

    /// The same list on every vertex.
    pub fn uniform(n: usize, colors: &[Color]) -> Self {
        Self::from_lists(vec![colors.to_vec(); n])
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn n(&self) -> usize {
        self.lists.len()
    }

    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    /// Whether `c` is an `L`-coloring.
    pub fn admits(&self, c: &Coloring) -> bool {
        c.len() == self.lists.len() && self.lists.iter().zip(&c.0).all(|(l, col)| l.binary_search(col).is_ok())
    }
}

/// True iff every color class `C` of `c` has `f(G[C]) <= p`.
pub fn verify_fp_proper(g: &Graph, c: &Coloring, f: &dyn GraphParameter, p: u64) -> bool {
    c.len() == g.n() && c.classes().values().all(|class| f.bounded_on(g, class, p))
}

/// Iterates `g(p, ·)` starting from `p`, `s - 1` times.
pub fn compose_bound(p: u64, s: u64, g_fn: impl Fn(u64, u64) -> u64) -> Result<u64> {
    if s == 0 {
        return Err(Error::Precondition("compose_bound needs s >= 1".into()));
    }
    Ok((1..s).fold(p, |acc, _| g_fn(p, acc)))
}
