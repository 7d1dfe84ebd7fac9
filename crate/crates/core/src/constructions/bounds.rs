//! Closed-form quantities checked in exact arithmetic.

use num::{BigInt, BigRational, BigUint, One};
use serde::Serialize;

use super::path_power;
use crate::graph::io::to_graph6;
use crate::graph::Graph;
use crate::report::ser_rational;
use crate::{Error, Rational, Result};

/// `∏_{i<s} (⌈s²/2⌉ - i) / (s² - i)` and whether it is at least `2^{-s-1}`.
///
/// This is the probability that a uniform `s`-subset of an `s²`-set lands
/// inside a fixed half-size subset.
pub fn estim_ratio(s: usize) -> Result<(BigRational, bool)> {
    if s == 0 {
        return Err(Error::Precondition("estim_ratio needs s >= 1".into()));
    }
    let sq = s * s;
    let half = sq.div_ceil(2);
    let mut ratio = BigRational::one();
    for i in 0..s {
        ratio *= BigRational::new(BigInt::from(half - i), BigInt::from(sq - i));
    }
    let floor = BigRational::new(BigInt::one(), BigInt::one() << (s + 1));
    let ok = ratio >= floor;
    Ok((ratio, ok))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GirthBound {
    pub girth: usize,
    /// Largest odd number not above the girth; the bound uses this value.
    pub odd_girth_bound: usize,
    pub k: usize,
    #[serde(serialize_with = "ser_rational")]
    pub average_degree: Rational,
    /// `(k-1)^((g-1)/2)` in decimal.
    pub bound: String,
    pub largest_component: usize,
    pub holds: bool,
}

/// Checks that a graph of girth at least `g` (odd) and average degree at
/// least `2k` has a component with more than `(k-1)^((g-1)/2)` vertices.
///
/// An even girth `γ` is handled through the odd value `γ - 1`, which the
/// girth also bounds from above.
pub fn girth_component_bound(g: &Graph, k: usize) -> Result<GirthBound> {
    if k == 0 {
        return Err(Error::Precondition("girth bound needs k >= 1".into()));
    }
    let girth = g
        .girth()
        .ok_or_else(|| Error::Precondition("graph is acyclic (infinite girth)".into()))?;
    let avg = g.average_degree()?;
    if avg < Rational::from_integer(2 * k as i64) {
        return Err(Error::Precondition(format!(
            "average degree {avg} is below 2k = {}",
            2 * k
        )));
    }
    let odd = if girth % 2 == 1 { girth } else { girth - 1 };
    let bound = num::pow(BigUint::from(k - 1), (odd - 1) / 2);
    let largest = g.components().iter().map(|c| c.len()).max().unwrap_or(0);
    let holds = BigUint::from(largest) > bound;
    Ok(GirthBound {
        girth,
        odd_girth_bound: odd,
        k,
        average_degree: avg,
        bound: bound.to_string(),
        largest_component: largest,
        holds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HStarCertificate {
    pub p: usize,
    pub p_prime: usize,
    pub t: usize,
    pub n: usize,
    pub graph6: String,
    /// Claimed lower bound `t + 1` on `col_{⋆,p'}` of the path power.
    pub claimed_bound: usize,
    #[serde(skip)]
    pub graph: Graph,
}

/// With `t = ⌊√(p/2)⌋`, the path power `P_n^t` on `n = p'(t+1) + t + 1`
/// vertices, which should have `col_{⋆,p'} >= t + 1`.
pub fn h_star_path_certificate(p: usize, p_prime: usize) -> Result<HStarCertificate> {
    if p < 2 {
        return Err(Error::Precondition("path certificate needs p >= 2".into()));
    }
    let t = (p / 2).isqrt();
    let n = p_prime * (t + 1) + t + 1;
    let graph = path_power(n, t)?;
    Ok(HStarCertificate {
        p,
        p_prime,
        t,
        n,
        graph6: to_graph6(&graph),
        claimed_bound: t + 1,
        graph,
    })
}
