//! Graph parameters `f`, with values in `ℕ ∪ {∞}`.
//!
//! A parameter is anything implementing [`GraphParameter`]. Evaluators work
//! on a vertex subset of a host graph so that solvers can test color classes
//! without materialising induced subgraphs. Every parameter declares its
//! structural flags; the solvers refuse to run when a flag they rely on is
//! missing.

mod chromatic;
mod fan;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::flow::max_average_degree;
use crate::graph::{Graph, VertexSet};
use crate::{Error, Rational, Result};

pub use chromatic::{chromatic_number_on, is_colorable_on, max_clique_on};
pub use fan::{fan_exceeds, fan_on, longest_path_on};

/// Default vertex cap for the exact chromatic number.
pub const CHROMATIC_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParamValue {
    Finite(u64),
    Infinite,
}

impl ParamValue {
    #[inline]
    pub fn at_most(self, p: u64) -> bool {
        matches!(self, ParamValue::Finite(v) if v <= p)
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ParamValue::Finite(v) => Some(v),
            ParamValue::Infinite => None,
        }
    }
}

impl From<usize> for ParamValue {
    fn from(v: usize) -> Self {
        ParamValue::Finite(v as u64)
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Finite(v) => write!(f, "{v}"),
            ParamValue::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ParamValue::Finite(v) => s.serialize_u64(*v),
            ParamValue::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParamFlags {
    /// `f(H) <= f(G)` for induced subgraphs `H`.
    pub hereditary: bool,
    /// `f(G1 ∪ G2) = max(f(G1), f(G2))` for disjoint unions.
    pub connected: bool,
    /// `f(H) <= f(G)` for all subgraphs `H`.
    pub monotone: bool,
    /// Average degree is bounded by a function of `f`.
    pub bounds_avg_degree: bool,
}

pub trait GraphParameter: Send + Sync {
    /// Short stable identifier, also the CLI token.
    fn id(&self) -> &str;

    fn flags(&self) -> ParamFlags;

    /// `f(G[set])`.
    fn eval_on(&self, g: &Graph, set: &VertexSet) -> ParamValue;

    fn eval(&self, g: &Graph) -> ParamValue {
        self.eval_on(g, &g.vertices())
    }

    /// Whether `f(G[set]) <= p`. Implementations may stop early.
    fn bounded_on(&self, g: &Graph, set: &VertexSet, p: u64) -> bool {
        self.eval_on(g, set).at_most(p)
    }

    /// Whether `f(G[class + v]) <= p`, given that `class` itself already
    /// satisfies the bound.
    fn admits(&self, g: &Graph, class: &VertexSet, v: usize, p: u64) -> bool {
        let mut grown = class.clone();
        grown.insert(v);
        self.bounded_on(g, &grown, p)
    }
}

/// The built-in parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Builtin {
    MaxDegree,
    /// Maximum order of a component.
    Star,
    /// `⌊mad⌋`, the floor of the maximum average degree.
    MadFloor,
    Fan,
    Chromatic,
}

impl Builtin {
    pub const ALL: [Builtin; 5] = [
        Builtin::MaxDegree,
        Builtin::Star,
        Builtin::MadFloor,
        Builtin::Fan,
        Builtin::Chromatic,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Builtin::MaxDegree => "max-degree",
            Builtin::Star => "star",
            Builtin::MadFloor => "mad",
            Builtin::Fan => "fan",
            Builtin::Chromatic => "chromatic",
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.token() == s)
            .ok_or_else(|| {
                Error::Precondition(format!(
                    "unknown parameter {s:?} (expected max-degree, star, mad, fan or chromatic)"
                ))
            })
    }
}

impl Serialize for Builtin {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.token())
    }
}

const fn flags(hereditary: bool, connected: bool, monotone: bool, bounds_avg_degree: bool) -> ParamFlags {
    ParamFlags {
        hereditary,
        connected,
        monotone,
        bounds_avg_degree,
    }
}

/// Declared flags of a parameter.
pub fn parameter_traits(p: &dyn GraphParameter) -> ParamFlags {
    p.flags()
}

impl GraphParameter for Builtin {
    fn id(&self) -> &str {
        self.token()
    }

    fn flags(&self) -> ParamFlags {
        match self {
            Builtin::MaxDegree | Builtin::Star | Builtin::MadFloor => flags(true, true, true, true),
            Builtin::Fan | Builtin::Chromatic => flags(true, true, true, false),
        }
    }

    fn eval_on(&self, g: &Graph, set: &VertexSet) -> ParamValue {
        let v = match self {
            Builtin::MaxDegree => set.iter().map(|v| g.degree_in(v, set)).max().unwrap_or(0),
            Builtin::Star => g
                .components_within(set)
                .iter()
                .map(VertexSet::len)
                .max()
                .unwrap_or(0),
            Builtin::MadFloor => mad_on(g, set).floor().to_integer() as usize,
            Builtin::Fan => fan_on(g, set),
            Builtin::Chromatic => chromatic_number_on(g, set),
        };
        ParamValue::from(v)
    }

    fn bounded_on(&self, g: &Graph, set: &VertexSet, p: u64) -> bool {
        let p = p as usize;
        match self {
            Builtin::MaxDegree => set.iter().all(|v| g.degree_in(v, set) <= p),
            Builtin::Star => {
                let mut rest = set.clone();
                while let Some(v) = rest.first() {
                    let c = g.component_of(v, set);
                    if c.len() > p {
                        return false;
                    }
                    rest.difference_with(&c);
                }
                true
            }
            Builtin::MadFloor => mad_on(g, set) < Rational::from_integer(p as i64 + 1),
            Builtin::Fan => !fan_exceeds(g, set, p),
            Builtin::Chromatic => is_colorable_on(g, set, p),
        }
    }

    fn admits(&self, g: &Graph, class: &VertexSet, v: usize, p: u64) -> bool {
        let p = p as usize;
        match self {
            Builtin::MaxDegree => {
                g.degree_in(v, class) <= p
                    && g.neighbors(v)
                        .intersection(class)
                        .iter()
                        .all(|u| g.degree_in(u, class) < p)
            }
            Builtin::Star => {
                let mut grown = class.clone();
                grown.insert(v);
                g.component_of(v, &grown).len() <= p
            }
            _ => {
                let mut grown = class.clone();
                grown.insert(v);
                self.bounded_on(g, &grown, p as u64)
            }
        }
    }
}

/// Exact maximum average degree of `G[set]`.
pub fn mad_on(g: &Graph, set: &VertexSet) -> Rational {
    max_average_degree(g, set)
}

pub fn eval_max_degree(g: &Graph) -> ParamValue {
    Builtin::MaxDegree.eval(g)
}

pub fn eval_star(g: &Graph) -> ParamValue {
    Builtin::Star.eval(g)
}

pub fn eval_mad_floor(g: &Graph) -> ParamValue {
    Builtin::MadFloor.eval(g)
}

/// Exact `mad(G)` as a rational.
pub fn eval_mad_exact(g: &Graph) -> Rational {
    mad_on(g, &g.vertices())
}

pub fn eval_fan(g: &Graph) -> ParamValue {
    Builtin::Fan.eval(g)
}

pub fn eval_chromatic(g: &Graph) -> Result<ParamValue> {
    eval_chromatic_capped(g, CHROMATIC_CAP)
}

pub fn eval_chromatic_capped(g: &Graph, cap: usize) -> Result<ParamValue> {
    if g.n() > cap {
        return Err(Error::cap("vertex count for chromatic number", cap as u64, g.n() as u64));
    }
    Ok(Builtin::Chromatic.eval(g))
}
