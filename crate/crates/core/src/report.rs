//! JSON reports, certificates and their re-verification.
//!
//! A report carries the graph as graph6 plus its content hash, so every
//! certificate can be replayed against the definitions without trusting the
//! solver that produced it.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};
use serde_json::{json, Value};

use crate::graph::io::{from_graph6, to_graph6};
use crate::graph::{Graph, VertexSet};
use crate::parameters::{parameter_traits, Builtin, GraphParameter};
use crate::solvers::{
    chi_fp_with, col_fp_with, decide_choosability_fp_with, find_island, verify_fp_proper, Caps, Coloring,
    ListAssignment,
};
use crate::{Error, Rational, Result};

pub fn ser_set<S: Serializer>(set: &VertexSet, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(set.iter())
}

/// Rationals as `"a/b"`, or `"a"` when integral.
pub fn ser_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Exact,
    Estimate,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Inputs {
    pub graph_hash: Option<String>,
    pub graph6: Option<String>,
    pub params: BTreeMap<String, Value>,
    pub seeds: Vec<u64>,
}

impl Inputs {
    pub fn for_graph(g: &Graph) -> Self {
        Inputs {
            graph_hash: Some(g.content_hash()),
            graph6: Some(to_graph6(g)),
            ..Default::default()
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.params
            .insert(key.to_string(), serde_json::to_value(value).expect("serializable"));
        self
    }

    /// The graph named by `graph6`, checked against the recorded hash.
    pub fn graph(&self) -> Result<Graph> {
        let text = self
            .graph6
            .as_deref()
            .ok_or_else(|| Error::Certificate("report has no graph".into()))?;
        let g = from_graph6(text)?;
        if let Some(hash) = &self.graph_hash {
            if *hash != g.content_hash() {
                return Err(Error::Certificate("graph hash does not match graph6".into()));
            }
        }
        Ok(g)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Inputs,
    pub result: Value,
    pub certificate: Option<Certificate>,
    pub status: Status,
    /// Whether the command's claim held (always true for plain computations).
    pub pass: bool,
    /// Wall time, only recorded on request so that reports stay reproducible.
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(command: impl Into<String>, inputs: Inputs, result: Value) -> Self {
        Report {
            command: command.into(),
            inputs,
            result,
            certificate: None,
            status: Status::Exact,
            pass: true,
            elapsed_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Machine-checkable evidence. The graph comes from the surrounding report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// An `(f,p)`-proper coloring, optionally an `L`-coloring.
    Coloring {
        f: String,
        p: u64,
        coloring: Vec<usize>,
        lists: Option<Vec<Vec<usize>>>,
    },
    /// A list assignment with no `(f,p)`-proper coloring.
    NoListColoring { f: String, p: u64, lists: Vec<Vec<usize>> },
    /// An `s`-island of `G[within]` with `f <= p`.
    Island {
        f: String,
        p: u64,
        s: usize,
        within: Vec<usize>,
        island: Vec<usize>,
    },
    /// `G[within]` has no `s`-island with `f <= p`.
    NoIsland {
        f: String,
        p: u64,
        s: usize,
        within: Vec<usize>,
    },
    /// `col_{f,p} = value`: the islands peel the graph at `value`, and
    /// `G[lower]` has no `(value - 1)`-island.
    Col {
        f: String,
        p: u64,
        value: usize,
        islands: Vec<Vec<usize>>,
        lower: Vec<usize>,
    },
}

/// Limits for re-verification.
#[derive(Clone, Copy, Debug)]
pub struct VerifyCaps {
    /// Largest vertex set searched exhaustively for islands.
    pub exhaustive_n: usize,
    /// Largest number of `L`-colorings enumerated.
    pub colorings: u64,
}

impl Default for VerifyCaps {
    fn default() -> Self {
        VerifyCaps {
            exhaustive_n: 16,
            colorings: 1_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub valid: bool,
    pub detail: String,
}

impl Verdict {
    fn ok() -> Self {
        Verdict {
            valid: true,
            detail: "certificate verified".into(),
        }
    }

    fn bad(detail: impl Into<String>) -> Self {
        Verdict {
            valid: false,
            detail: detail.into(),
        }
    }
}

fn set_of(g: &Graph, vs: &[usize]) -> Result<VertexSet> {
    if let Some(&v) = vs.iter().find(|&&v| v >= g.n()) {
        return Err(Error::Certificate(format!("vertex {v} out of range")));
    }
    Ok(VertexSet::from_vertices(g.n(), vs.iter().copied()))
}

fn parameter(token: &str) -> Result<Builtin> {
    Builtin::from_str(token).map_err(|_| Error::Certificate(format!("unknown parameter {token:?}")))
}

/// Whether `island` is an `s`-island of `G[within]` with `f <= p`.
fn island_ok(g: &Graph, within: &VertexSet, island: &VertexSet, s: usize, f: &dyn GraphParameter, p: u64) -> bool {
    let outside = within.difference(island);
    !island.is_empty()
        && island.is_subset(within)
        && island.iter().all(|v| g.degree_in(v, &outside) < s)
        && f.bounded_on(g, island, p)
}

/// Exhaustive: no nonempty subset of `within` is an `s`-island with `f <= p`.
pub fn no_island_exhaustive(
    g: &Graph,
    within: &VertexSet,
    s: usize,
    f: &dyn GraphParameter,
    p: u64,
    caps: &VerifyCaps,
) -> Result<bool> {
    if within.is_empty() || s == 0 {
        return Ok(true);
    }
    if within.len() > caps.exhaustive_n {
        return Err(Error::Certificate(format!(
            "unverifiable at cap: exhaustive island check limited to {} vertices, got {}",
            caps.exhaustive_n,
            within.len()
        )));
    }
    let verts = within.to_vec();
    for mask in 1u32..1 << verts.len() {
        let island = VertexSet::from_vertices(g.n(), (0..verts.len()).filter(|i| mask >> i & 1 == 1).map(|i| verts[i]));
        if island_ok(g, within, &island, s, f, p) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Re-checks the certificate of a report against the definitions.
pub fn verify_report(report: &Report, caps: &VerifyCaps) -> Result<Verdict> {
    let cert = report
        .certificate
        .as_ref()
        .ok_or_else(|| Error::Certificate("report carries no certificate".into()))?;
    let g = report.inputs.graph()?;
    verify_certificate(&g, cert, caps)
}

pub fn verify_certificate(g: &Graph, cert: &Certificate, caps: &VerifyCaps) -> Result<Verdict> {
    match cert {
        Certificate::Coloring { f, p, coloring, lists } => {
            let f = parameter(f)?;
            let c = Coloring(coloring.clone());
            if c.len() != g.n() {
                return Ok(Verdict::bad("coloring does not cover every vertex"));
            }
            if let Some(lists) = lists {
                if lists.len() != g.n() || !ListAssignment::from_lists(lists.clone()).admits(&c) {
                    return Ok(Verdict::bad("coloring leaves some list"));
                }
            }
            Ok(if verify_fp_proper(g, &c, &f, *p) {
                Verdict::ok()
            } else {
                Verdict::bad("some color class violates the parameter bound")
            })
        }
        Certificate::NoListColoring { f, p, lists } => {
            let f = parameter(f)?;
            if lists.len() != g.n() {
                return Ok(Verdict::bad("list assignment does not cover every vertex"));
            }
            let total = lists
                .iter()
                .try_fold(1u64, |acc, l| acc.checked_mul(l.len() as u64))
                .unwrap_or(u64::MAX);
            if total > caps.colorings {
                return Err(Error::Certificate(format!(
                    "unverifiable at cap: {total} L-colorings exceed {}",
                    caps.colorings
                )));
            }
            Ok(match brute_force_l_coloring(g, lists, &f, *p) {
                Some(c) => Verdict::bad(format!("found an L-coloring {:?}", c.0)),
                None => Verdict::ok(),
            })
        }
        Certificate::Island {
            f,
            p,
            s,
            within,
            island,
        } => {
            let f = parameter(f)?;
            let within = set_of(g, within)?;
            let island = set_of(g, island)?;
            Ok(if island_ok(g, &within, &island, *s, &f, *p) {
                Verdict::ok()
            } else {
                Verdict::bad("not an island with the parameter bound")
            })
        }
        Certificate::NoIsland { f, p, s, within } => {
            let f = parameter(f)?;
            let within = set_of(g, within)?;
            Ok(if no_island_exhaustive(g, &within, *s, &f, *p, caps)? {
                Verdict::ok()
            } else {
                Verdict::bad("an island exists")
            })
        }
        Certificate::Col {
            f,
            p,
            value,
            islands,
            lower,
        } => {
            let f = parameter(f)?;
            let mut remaining = g.vertices();
            for (j, island) in islands.iter().enumerate() {
                let island = set_of(g, island)?;
                if !island_ok(g, &remaining, &island, *value, &f, *p) {
                    return Ok(Verdict::bad(format!("peel step {j} is not a {value}-island")));
                }
                remaining.difference_with(&island);
            }
            if !remaining.is_empty() {
                return Ok(Verdict::bad("peel does not exhaust the graph"));
            }
            if *value == 0 {
                return Ok(if g.n() == 0 {
                    Verdict::ok()
                } else {
                    Verdict::bad("value 0 on a nonempty graph")
                });
            }
            let lower = set_of(g, lower)?;
            if lower.is_empty() {
                return Ok(Verdict::bad("empty lower certificate"));
            }
            Ok(if no_island_exhaustive(g, &lower, value - 1, &f, *p, caps)? {
                Verdict::ok()
            } else {
                Verdict::bad(format!("lower certificate has a {}-island", value - 1))
            })
        }
    }
}

/// Plain product enumeration of `L`-colorings.
fn brute_force_l_coloring(g: &Graph, lists: &[Vec<usize>], f: &dyn GraphParameter, p: u64) -> Option<Coloring> {
    if lists.iter().any(Vec::is_empty) {
        return None;
    }
    let n = g.n();
    let mut idx = vec![0usize; n];
    loop {
        let c = Coloring((0..n).map(|v| lists[v][idx[v]]).collect());
        if verify_fp_proper(g, &c, f, p) {
            return Some(c);
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return None;
            }
            idx[pos] += 1;
            if idx[pos] < lists[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Value and declared traits of a parameter.
pub fn cmd_param(g: &Graph, f: Builtin) -> Result<Report> {
    let value = match f {
        Builtin::Chromatic => crate::parameters::eval_chromatic(g)?,
        _ => f.eval(g),
    };
    let mut result = json!({ "value": value, "traits": parameter_traits(&f) });
    if f == Builtin::MadFloor {
        result["exact"] = json!(crate::parameters::eval_mad_exact(g).to_string());
    }
    Ok(Report::new("param", Inputs::for_graph(g).param("f", f), result))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveOp {
    Chi,
    Choosable,
    Col,
    Island,
}

impl FromStr for SolveOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chi" => Ok(SolveOp::Chi),
            "choosable" => Ok(SolveOp::Choosable),
            "col" => Ok(SolveOp::Col),
            "island" => Ok(SolveOp::Island),
            _ => Err(Error::Precondition(format!("unknown solve operation {s:?}"))),
        }
    }
}

fn require_s(s: Option<usize>, op: &str) -> Result<usize> {
    s.ok_or_else(|| Error::Precondition(format!("{op} needs --s")))
}

/// Runs one solver and attaches its certificate.
pub fn cmd_solve(g: &Graph, op: SolveOp, f: Builtin, p: u64, s: Option<usize>, caps: &Caps) -> Result<Report> {
    let tok = f.token().to_string();
    let mut inputs = Inputs::for_graph(g).param("op", op).param("f", f).param("p", p);
    if let Some(s) = s {
        inputs = inputs.param("s", s);
    }
    let mut report = Report::new("solve", inputs, Value::Null);
    match op {
        SolveOp::Chi => {
            let (k, c) = chi_fp_with(g, &f, p, caps)?;
            report.result = json!({ "value": k, "coloring": c });
            report.certificate = Some(Certificate::Coloring {
                f: tok,
                p,
                coloring: c.0,
                lists: None,
            });
        }
        SolveOp::Choosable => {
            let s = require_s(s, "solve choosable")?;
            let out = decide_choosability_fp_with(g, s, &f, p, caps)?;
            report.result = json!({
                "choosable": out.choosable,
                "assignments_checked": out.assignments_checked,
            });
            report.certificate = out.bad_assignment.map(|l| Certificate::NoListColoring {
                f: tok,
                p,
                lists: l.lists().to_vec(),
            });
        }
        SolveOp::Col => {
            let col = col_fp_with(g, &f, p, caps)?;
            report.result = json!({ "value": col.value, "peel": col.upper_certificate });
            report.certificate = Some(Certificate::Col {
                f: tok,
                p,
                value: col.value,
                islands: col.upper_certificate.islands.iter().map(|i| i.island.to_vec()).collect(),
                lower: col.lower_certificate.to_vec(),
            });
        }
        SolveOp::Island => {
            let s = require_s(s, "solve island")?;
            let found = find_island(g, s, &f, p)?;
            let within = g.vertices();
            report.result = json!({ "island": found });
            report.certificate = Some(match found {
                Some(cert) => Certificate::Island {
                    f: tok,
                    p,
                    s,
                    within: within.to_vec(),
                    island: cert.island.to_vec(),
                },
                None => Certificate::NoIsland {
                    f: tok,
                    p,
                    s,
                    within: within.to_vec(),
                },
            });
        }
    }
    Ok(report)
}

/// Verifies the certificate inside a report and wraps the verdict in a
/// report of its own.
pub fn cmd_verify(report: &Report, caps: &VerifyCaps) -> Result<Report> {
    let verdict = verify_report(report, caps)?;
    let inputs = Inputs {
        graph_hash: report.inputs.graph_hash.clone(),
        graph6: report.inputs.graph6.clone(),
        ..Default::default()
    }
    .param("verified_command", &report.command);
    let mut out = Report::new("verify", inputs, json!(verdict));
    out.pass = verdict.valid;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::families::{complete_bipartite, cycle, fan_graph, path};
    use crate::constructions::{fan_join, path_power};

    #[test]
    fn param_reports() {
        let r = cmd_param(&fan_graph(9), Builtin::Fan).unwrap();
        assert_eq!(r.result["value"], 9);
        let r = cmd_param(&Graph::empty(4), Builtin::Star).unwrap();
        assert_eq!(r.result["value"], 1);
        let r = cmd_param(&crate::constructions::families::complete(4), Builtin::MadFloor).unwrap();
        assert_eq!((r.result["value"].clone(), r.result["exact"].clone()), (json!(3), json!("3")));
    }

    #[test]
    fn solve_reports_verify() {
        let caps = Caps::default();
        let vc = VerifyCaps::default();
        let col = cmd_solve(&cycle(5), SolveOp::Col, Builtin::Star, 1, None, &caps).unwrap();
        assert_eq!(col.result["value"], 3);
        assert!(verify_report(&col, &vc).unwrap().valid);

        let g2 = fan_join(2).unwrap();
        let ch = cmd_solve(&g2, SolveOp::Choosable, Builtin::Fan, 2, Some(2), &caps).unwrap();
        assert_eq!(ch.result["choosable"], true);
        let isl = cmd_solve(&g2, SolveOp::Island, Builtin::Fan, 2, Some(2), &caps).unwrap();
        assert_eq!(isl.result["island"], Value::Null);
        assert!(verify_report(&isl, &vc).unwrap().valid);

        let chi = cmd_solve(&path(4), SolveOp::Chi, Builtin::Star, 1, None, &caps).unwrap();
        assert!(verify_report(&chi, &vc).unwrap().valid);

        let bad = cmd_solve(&complete_bipartite(2, 4), SolveOp::Choosable, Builtin::Star, 1, Some(2), &caps).unwrap();
        assert!(verify_report(&bad, &vc).unwrap().valid);
    }

    #[test]
    fn tampered_peel_is_rejected() {
        let g = cycle(5);
        let mut r = cmd_solve(&g, SolveOp::Col, Builtin::Star, 1, None, &Caps::default()).unwrap();
        // First island {0} has outside degree 2 < 3; claiming value 2 gives
        // vertex 0 exactly s = 2 outside neighbours.
        if let Some(Certificate::Col { value, islands, .. }) = &mut r.certificate {
            *value = 2;
            islands[0] = vec![0];
        }
        assert!(!verify_report(&r, &VerifyCaps::default()).unwrap().valid);
    }

    #[test]
    fn lower_certificate_beyond_cap() {
        let g = path_power(20, 3).unwrap();
        let r = cmd_solve(&g, SolveOp::Col, Builtin::Star, 1, None, &Caps::default()).unwrap();
        let err = verify_report(&r, &VerifyCaps::default()).unwrap_err();
        assert!(err.to_string().contains("unverifiable at cap"));
    }

    #[test]
    fn reports_round_trip_through_json() {
        let r = cmd_solve(&cycle(6), SolveOp::Col, Builtin::MaxDegree, 1, None, &Caps::default()).unwrap();
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(cmd_verify(&back, &VerifyCaps::default()).unwrap().pass);
    }
}
