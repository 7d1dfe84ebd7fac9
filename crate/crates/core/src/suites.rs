//! Reproducible check suites.
//!
//! Each suite draws its random inputs from ChaCha streams indexed by the
//! suite seed and the input's position, runs the independent checks in
//! parallel, and collects results in input order. Two runs with the same
//! configuration therefore produce byte-identical reports.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::Rng as _;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::constructions::families::{self, complete_bipartite, cycle, petersen, random_bipartite, robertson};
use crate::constructions::{
    block_color_path_power, estim_ratio, fan_join, girth_component_bound, h_star_path_certificate, max_mono_component,
    run_adversary, AdversaryConfig, DominationMode,
};
use crate::graph::io::to_graph6;
use crate::graph::{Graph, VertexSet};
use crate::parameters::{chromatic_number_on, Builtin, GraphParameter};
use crate::report::{no_island_exhaustive, Certificate, Inputs, Report, Status, VerifyCaps};
use crate::rng;
use crate::solvers::{
    chi_fp, chi_fp_with, col_fp, col_fp_with, compose_bound, decide_choosability_fp, decide_choosability_fp_with,
    degeneracy_col, find_island, greedy_island_coloring, verify_fp_proper, Caps, Coloring, ListAssignment,
};
use crate::{Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Lemma1,
    Nofan,
    Addit,
    Path,
    Coldens,
    Mindeg,
    Estim,
    Pipeline,
    Identity,
    Peeling,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Lemma1,
        Suite::Nofan,
        Suite::Addit,
        Suite::Path,
        Suite::Coldens,
        Suite::Mindeg,
        Suite::Estim,
        Suite::Pipeline,
        Suite::Identity,
        Suite::Peeling,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma1 => "lemma1",
            Suite::Nofan => "nofan",
            Suite::Addit => "addit",
            Suite::Path => "path",
            Suite::Coldens => "coldens",
            Suite::Mindeg => "mindeg",
            Suite::Estim => "estim",
            Suite::Pipeline => "pipeline",
            Suite::Identity => "identity",
            Suite::Peeling => "peeling",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s:?}")))
    }
}

/// Knobs shared by the suites; `None` picks the suite's default.
#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random trials per input (list assignments, colorings).
    pub trials: Option<usize>,
    /// Number of random graphs (or pipeline runs).
    pub graphs: Option<usize>,
    /// Restrict `nofan` to this `i`.
    pub i: Option<usize>,
    /// Restrict `path` to this `t`.
    pub t: Option<usize>,
    /// Vertex count for `path` and part size for `pipeline`.
    pub n: Option<usize>,
    /// Largest `s` for `estim`.
    pub smax: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: Value) -> Self {
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<Check>,
    /// Replayable with `verify`; each one fails verification.
    pub counterexamples: Vec<Report>,
    pub estimate: bool,
}

impl SuiteOutcome {
    fn new(suite: Suite, checks: Vec<Check>, counterexamples: Vec<Report>, estimate: bool) -> Self {
        SuiteOutcome {
            suite,
            passed: checks.iter().all(|c| c.passed),
            checks,
            counterexamples,
            estimate,
        }
    }
}

/// A self-contained failing instance: graph, lists and coloring.
fn counterexample(check: &str, g: &Graph, f: Builtin, p: u64, lists: Option<&ListAssignment>, c: &Coloring) -> Report {
    let mut r = Report::new("counterexample", Inputs::for_graph(g).param("check", check), Value::Null);
    r.certificate = Some(Certificate::Coloring {
        f: f.token().to_string(),
        p,
        coloring: c.0.clone(),
        lists: lists.map(|l| l.lists().to_vec()),
    });
    r.pass = false;
    r
}

/// Random graph number `index` of a suite: order uniform in `lo..=hi`, edge
/// probability uniform in `{1/5, 2/5, 3/5, 4/5}`.
pub fn suite_graph(seed: u64, index: u64, lo: usize, hi: usize) -> Graph {
    let mut r = rng::stream(seed, index);
    let n = r.gen_range(lo..=hi);
    let prob = Rational::new(r.gen_range(1..=4), 5);
    families::random_gnp(n, prob, r.gen()).expect("probability in range")
}

/// Uniform `s`-subsets of `0..palette` for every vertex.
fn random_lists(r: &mut rng::Rng, n: usize, s: usize, palette: usize) -> ListAssignment {
    let lists = (0..n)
        .map(|_| {
            let mut l = sample(r, palette, s).into_vec();
            l.sort_unstable();
            l
        })
        .collect();
    ListAssignment::new(lists, s).expect("lists have size s")
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    match suite {
        Suite::Lemma1 => lemma1(cfg),
        Suite::Nofan => nofan(cfg),
        Suite::Addit => addit(cfg),
        Suite::Path => path_suite(cfg),
        Suite::Coldens => coldens(cfg),
        Suite::Mindeg => mindeg(cfg),
        Suite::Estim => estim(cfg),
        Suite::Pipeline => pipeline(cfg),
        Suite::Identity => identity(cfg),
        Suite::Peeling => peeling(cfg),
    }
}

/// Runs a suite and wraps the outcome in a report.
pub fn cmd_lemma(suite: Suite, cfg: &SuiteConfig) -> Result<Report> {
    let out = run_suite(suite, cfg)?;
    let inputs = Inputs {
        seeds: vec![cfg.seed],
        ..Default::default()
    }
    .param("suite", suite)
    .param("config", cfg);
    let mut r = Report::new("lemma", inputs, serde_json::to_value(&out).expect("serializable"));
    r.pass = out.passed;
    r.status = if out.estimate { Status::Estimate } else { Status::Exact };
    Ok(r)
}

/// Per-input result of a parallel suite loop, with an optional counterexample.
type Tally<T> = (T, Option<Report>);

fn lemma1(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let graphs = cfg.graphs.unwrap_or(300);
    let trials = cfg.trials.unwrap_or(50);
    let combos = [(Builtin::MaxDegree, 1), (Builtin::MaxDegree, 2), (Builtin::Star, 1), (Builtin::Star, 2)];
    let per_graph: Vec<Result<Vec<Tally<usize>>>> = (0..graphs as u64)
        .into_par_iter()
        .map(|idx| {
            let g = suite_graph(cfg.seed, idx, 1, 9);
            let mut r = rng::stream(cfg.seed, 1 << 32 | idx);
            let mut out = Vec::new();
            for (ci, &(f, p)) in combos.iter().enumerate() {
                let s = col_fp(&g, &f, p)?.value;
                let mut bad = None;
                for _ in 0..trials {
                    let lists = random_lists(&mut r, g.n(), s, 2 * s);
                    let ok = match greedy_island_coloring(&g, &lists, &f, p) {
                        Ok(c) if lists.admits(&c) && verify_fp_proper(&g, &c, &f, p) => true,
                        Ok(c) => {
                            bad.get_or_insert_with(|| counterexample("lemma1", &g, f, p, Some(&lists), &c));
                            false
                        }
                        Err(_) => {
                            let c = Coloring(lists.lists().iter().map(|l| l[0]).collect());
                            bad.get_or_insert_with(|| counterexample("lemma1", &g, f, p, Some(&lists), &c));
                            false
                        }
                    };
                    if !ok {
                        break;
                    }
                }
                out.push((ci, bad));
            }
            Ok(out)
        })
        .collect();
    let mut failures = [0usize; 4];
    let mut bundles = Vec::new();
    for res in per_graph {
        for (ci, bad) in res? {
            if let Some(b) = bad {
                failures[ci] += 1;
                bundles.push(b);
            }
        }
    }
    let checks = combos
        .iter()
        .zip(failures)
        .map(|(&(f, p), fails)| {
            Check::new(
                format!("greedy island coloring, f={f} p={p}"),
                fails == 0,
                json!({ "graphs": graphs, "assignments_per_graph": trials, "failing_graphs": fails }),
            )
        })
        .collect();
    Ok(SuiteOutcome::new(Suite::Lemma1, checks, bundles, false))
}

/// Colors the path part of `fan_join(i)` without monochromatic edges and the
/// independent part with lowest colors.
pub fn fan_join_strategy(i: usize, lists: &ListAssignment) -> Result<Coloring> {
    let m = i * i;
    let g = fan_join(i)?;
    let mut color: Vec<usize> = (0..g.n()).map(|v| lists.list(v)[0]).collect();
    crate::constructions::color_path_within(&g, &VertexSet::from_vertices(g.n(), 0..m), lists, &mut color)?;
    Ok(Coloring(color))
}

fn nofan(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let is: Vec<usize> = cfg.i.map_or(vec![2, 3], |i| vec![i]);
    let trials = cfg.trials.unwrap_or(10_000);
    let mut checks = Vec::new();
    let mut bundles = Vec::new();
    for &i in &is {
        let g = fan_join(i)?;
        let p = i as u64;
        let searched = find_island(&g, i, &Builtin::Fan, p)?;
        let exhaustive = no_island_exhaustive(&g, &g.vertices(), i, &Builtin::Fan, p, &VerifyCaps::default())?;
        checks.push(Check::new(
            format!("fan_join({i}) has no {i}-island with fan <= {i}"),
            searched.is_none() && exhaustive,
            json!({ "connected_search": searched.is_none(), "all_subsets": exhaustive, "n": g.n() }),
        ));
        if g.n() <= Caps::default().choose_n {
            let out = decide_choosability_fp(&g, 2, &Builtin::Fan, 2)?;
            checks.push(Check::new(
                format!("fan_join({i}) is (fan,2)-choosable with 2-lists"),
                out.choosable,
                json!({ "method": "exhaustive", "assignments_checked": out.assignments_checked }),
            ));
        } else {
            let results: Vec<Option<Report>> = (0..trials as u64)
                .into_par_iter()
                .map(|j| {
                    let mut r = rng::stream(cfg.seed, (i as u64) << 40 | j);
                    let lists = random_lists(&mut r, g.n(), 2, 4);
                    let c = fan_join_strategy(i, &lists).expect("lists have two colors");
                    let ok = lists.admits(&c) && verify_fp_proper(&g, &c, &Builtin::Fan, 2);
                    (!ok).then(|| counterexample("nofan", &g, Builtin::Fan, 2, Some(&lists), &c))
                })
                .collect();
            let fails: Vec<Report> = results.into_iter().flatten().collect();
            checks.push(Check::new(
                format!("fan_join({i}) is (fan,2)-colorable from random 2-lists"),
                fails.is_empty(),
                json!({ "method": "constructive", "assignments": trials, "failures": fails.len() }),
            ));
            bundles.extend(fails.into_iter().take(5));
        }
    }
    Ok(SuiteOutcome::new(Suite::Nofan, checks, bundles, false))
}

fn path_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let ts: Vec<usize> = cfg.t.map_or(vec![1, 2, 3], |t| vec![t]);
    let trials = cfg.trials.unwrap_or(1000);
    let mut checks = Vec::new();
    let mut bundles = Vec::new();
    for &t in &ts {
        let n = cfg.n.unwrap_or(4 * t * (t + 1));
        let g = crate::constructions::path_power(n, t)?;
        let bound = 2 * t * t;
        let results: Vec<(usize, Option<Report>)> = (0..trials as u64)
            .into_par_iter()
            .map(|j| {
                let mut r = rng::stream(cfg.seed, (t as u64) << 40 | j);
                let lists = random_lists(&mut r, n, 2, 4);
                let c = block_color_path_power(n, t, &lists).expect("valid 2-lists");
                let largest = max_mono_component(&g, &c);
                let ok = lists.admits(&c) && largest <= bound;
                (largest, (!ok).then(|| counterexample("path", &g, Builtin::Star, bound as u64, Some(&lists), &c)))
            })
            .collect();
        let largest = results.iter().map(|r| r.0).max().unwrap_or(0);
        let fails: Vec<Report> = results.into_iter().filter_map(|r| r.1).collect();
        checks.push(Check::new(
            format!("block coloring of P_{n}^{t} has monochromatic components <= {bound}"),
            fails.is_empty(),
            json!({ "assignments": trials, "max_mono_component": largest, "failures": fails.len() }),
        ));
        bundles.extend(fails.into_iter().take(5));
    }
    for (p, p_prime) in [(8, 2), (2, 3)] {
        let cert = h_star_path_certificate(p, p_prime)?;
        let col = col_fp(&cert.graph, &Builtin::Star, p_prime as u64)?;
        checks.push(Check::new(
            format!(
                "col_(star,{p_prime})(P_{}^{}) >= {}",
                cert.n, cert.t, cert.claimed_bound
            ),
            col.value >= cert.claimed_bound,
            json!({ "col": col.value, "graph6": cert.graph6, "lower_certificate": col.lower_certificate.to_vec() }),
        ));
    }
    Ok(SuiteOutcome::new(Suite::Path, checks, bundles, false))
}

/// `max |E(H)| / |V(H)|` over nonempty vertex sets of size at most `p`.
pub fn small_subgraph_density(g: &Graph, p: usize) -> Rational {
    fn walk(g: &Graph, start: usize, p: usize, set: &mut VertexSet, best: &mut Rational) {
        if !set.is_empty() {
            let d = Rational::new(g.edges_within(set) as i64, set.len() as i64);
            if d > *best {
                *best = d;
            }
        }
        if set.len() == p {
            return;
        }
        for v in start..g.n() {
            set.insert(v);
            walk(g, v + 1, p, set, best);
            set.remove(v);
        }
    }
    let mut best = Rational::from_integer(0);
    walk(g, 0, p, &mut VertexSet::new(g.n()), &mut best);
    best
}

fn coldens(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let graphs = cfg.graphs.unwrap_or(200);
    let rows: Vec<Result<Vec<(u64, bool, String)>>> = (0..graphs as u64)
        .into_par_iter()
        .map(|idx| {
            let g = suite_graph(cfg.seed, idx, 1, 12);
            let avg = g.average_degree()?;
            (1..=4u64)
                .map(|p| {
                    let col = col_fp(&g, &Builtin::Star, p)?.value;
                    let alpha = small_subgraph_density(&g, p as usize);
                    let rhs = (Rational::from_integer(col as i64) + alpha) * 2;
                    Ok((p, avg < rhs, to_graph6(&g)))
                })
                .collect()
        })
        .collect();
    let mut failing: Vec<Value> = Vec::new();
    let mut count = 0;
    for row in rows {
        for (p, ok, g6) in row? {
            count += 1;
            if !ok {
                failing.push(json!({ "graph6": g6, "p": p }));
            }
        }
    }
    let checks = vec![Check::new(
        "average degree < 2(col_(star,p) + alpha_p)",
        failing.is_empty(),
        json!({ "instances": count, "failures": failing }),
    )];
    Ok(SuiteOutcome::new(Suite::Coldens, checks, Vec::new(), false))
}

fn mindeg(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let graphs = cfg.graphs.unwrap_or(100);
    let mut checks = Vec::new();
    for (name, g, k) in [("C5", cycle(5), 1), ("robertson", robertson(), 2)] {
        let b = girth_component_bound(&g, k)?;
        checks.push(Check::new(format!("{name}, k={k}"), b.holds, json!(b)));
    }
    let rows: Vec<Option<(bool, String)>> = (0..graphs as u64)
        .into_par_iter()
        .map(|idx| {
            let g = suite_graph(cfg.seed, idx, 5, 16);
            let avg = g.average_degree().ok()?;
            let k = (avg / 2).floor().to_integer() as usize;
            let b = girth_component_bound(&g, k.max(1)).ok()?;
            Some((b.holds, to_graph6(&g)))
        })
        .collect();
    let eligible = rows.iter().flatten().count();
    let failures: Vec<&String> = rows.iter().flatten().filter(|r| !r.0).map(|r| &r.1).collect();
    checks.push(Check::new(
        "random graphs meeting the preconditions",
        failures.is_empty(),
        json!({ "sampled": graphs, "eligible": eligible, "failures": failures }),
    ));
    Ok(SuiteOutcome::new(Suite::Mindeg, checks, Vec::new(), false))
}

fn addit(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let graphs = cfg.graphs.unwrap_or(100);
    let rows: Vec<Result<Vec<Tally<bool>>>> = (0..graphs as u64)
        .into_par_iter()
        .map(|idx| {
            let g = suite_graph(cfg.seed, idx, 1, 10);
            let chi = chromatic_number_on(&g, &g.vertices()) as u64;
            [1u64, 2]
                .into_iter()
                .map(|p| {
                    let (s, c) = chi_fp(&g, &Builtin::Chromatic, p)?;
                    let proper = verify_fp_proper(&g, &c, &Builtin::Chromatic, p);
                    let bound = compose_bound(p, s as u64, |a, b| a + b)?;
                    let ok = proper && chi <= bound && bound == s as u64 * p;
                    Ok((ok, (!ok).then(|| counterexample("addit", &g, Builtin::Chromatic, p, None, &c))))
                })
                .collect()
        })
        .collect();
    let mut count = 0;
    let mut bundles = Vec::new();
    for row in rows {
        for (_, bad) in row? {
            count += 1;
            bundles.extend(bad);
        }
    }
    let checks = vec![Check::new(
        "chi(G) <= s*p for (chromatic,p)-proper s-colorings",
        bundles.is_empty(),
        json!({ "instances": count, "failures": bundles.len() }),
    )];
    Ok(SuiteOutcome::new(Suite::Addit, checks, bundles, false))
}

fn estim(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let smax = cfg.smax.unwrap_or(12);
    let mut checks = Vec::new();
    let mut values = Vec::new();
    let mut all = true;
    for s in 1..=smax {
        let (ratio, ok) = estim_ratio(s)?;
        all &= ok;
        values.push(json!({ "s": s, "ratio": ratio.to_string(), "at_least_2^(-s-1)": ok }));
    }
    checks.push(Check::new(format!("ratio >= 2^(-s-1) for s = 1..{smax}"), all, json!(values)));
    let (two, _) = estim_ratio(2)?;
    checks.push(Check::new("ratio at s = 2 is 1/6", two.to_string() == "1/6", json!(two.to_string())));
    Ok(SuiteOutcome::new(Suite::Estim, checks, Vec::new(), false))
}

fn pipeline(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let runs = cfg.graphs.unwrap_or(20);
    let n = cfg.n.unwrap_or(200);
    let trials = cfg.trials.unwrap_or(100);
    let (s, k, d) = (2usize, 1usize, 64u64);
    let states: Vec<Result<Value>> = (0..runs as u64)
        .into_par_iter()
        .map(|seed| {
            let g = random_bipartite(n, Rational::from_integer(d as i64), cfg.seed + seed)?;
            let mut ac = AdversaryConfig::new(s, k, d, cfg.seed + seed);
            ac.domination = DominationMode::Sampled {
                samples: 200,
                seed: cfg.seed + seed,
            };
            ac.extensions = trials;
            let st = run_adversary(&g, &ac)?;
            let dom = st.conditions.domination.as_ref();
            // Condition (c) needs k·s² neighbours in B for each half-size T,
            // hence at least this many B-neighbours overall.
            let most_b_neighbours = (0..g.n())
                .filter(|&v| !st.b.contains(v))
                .map(|v| g.degree_in(v, &st.b))
                .max()
                .unwrap_or(0);
            Ok(json!({
                "seed": cfg.seed + seed,
                "n": st.n,
                "b": st.b.len(),
                "a": st.a.len(),
                "most_b_neighbours": most_b_neighbours,
                "condition_a": st.conditions.a,
                "condition_b": st.conditions.b,
                "exact_domination": dom.is_some_and(|d| !d.estimate),
                "domination_holds": dom.map(|d| d.holds),
                "worst_margin": dom.map(|d| d.worst_margin),
                "extension_colorings": st.extensions.as_ref().map(|e| e.colorings),
                "witnesses_found": st.extensions.as_ref().map(|e| e.witnesses_found),
            }))
        })
        .collect();
    let states: Vec<Value> = states.into_iter().collect::<Result<_>>()?;
    let ab = states
        .iter()
        .filter(|v| v["condition_a"] == true && v["condition_b"] == true)
        .count();
    let eligible: Vec<&Value> = states
        .iter()
        .filter(|v| v["exact_domination"] == true && v["domination_holds"] == true)
        .collect();
    let implication = eligible.iter().all(|v| v["witnesses_found"] == v["extension_colorings"]);
    let needed = (runs * 4).div_ceil(5);
    let checks = vec![
        Check::new(
            format!("conditions (a) and (b) hold in at least {needed}/{runs} runs"),
            ab >= needed,
            json!({ "runs_with_a_and_b": ab, "runs": runs }),
        ),
        Check::new(
            "exact domination implies a dense monochromatic subgraph in every sampled extension",
            implication,
            json!({ "eligible_runs": eligible.len(), "extension_colorings_per_run": trials }),
        ),
        Check::new("per-run summary", true, json!(states)),
    ];
    Ok(SuiteOutcome::new(Suite::Pipeline, checks, Vec::new(), true))
}

fn named_graphs() -> Vec<Graph> {
    vec![cycle(5), petersen(), complete_bipartite(3, 3)]
}

fn identity(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let graphs = cfg.graphs.unwrap_or(500);
    let inputs: Vec<Graph> = named_graphs()
        .into_iter()
        .chain((0..graphs as u64).map(|idx| suite_graph(cfg.seed, idx, 1, 10)))
        .collect();
    let rows: Vec<Result<(bool, bool, String)>> = inputs
        .par_iter()
        .map(|g| {
            let col = col_fp(g, &Builtin::Star, 1)?.value;
            let chi1 = chi_fp(g, &Builtin::Star, 1)?.0;
            let chi = chromatic_number_on(g, &g.vertices());
            Ok((col == degeneracy_col(g), chi1 == chi, to_graph6(g)))
        })
        .collect();
    let rows: Vec<(bool, bool, String)> = rows.into_iter().collect::<Result<_>>()?;
    let col_fail: Vec<&String> = rows.iter().filter(|r| !r.0).map(|r| &r.2).collect();
    let chi_fail: Vec<&String> = rows.iter().filter(|r| !r.1).map(|r| &r.2).collect();
    let checks = vec![
        Check::new(
            "col_(star,1) equals degeneracy + 1",
            col_fail.is_empty(),
            json!({ "graphs": rows.len(), "failures": col_fail }),
        ),
        Check::new(
            "chi_(star,1) equals the chromatic number",
            chi_fail.is_empty(),
            json!({ "graphs": rows.len(), "failures": chi_fail }),
        ),
    ];
    Ok(SuiteOutcome::new(Suite::Identity, checks, Vec::new(), false))
}

/// `col_{f,p}` straight from the definition: the least `s` such that every
/// nonempty vertex subset contains some subset that is an `s`-island of it
/// with `f <= p`. Exponential; meant for at most 8 vertices.
pub fn col_by_definition(g: &Graph, f: &dyn GraphParameter, p: u64) -> Option<usize> {
    let n = g.n();
    assert!(n <= 12, "definition oracle is exponential");
    if n == 0 {
        return Some(0);
    }
    let sets: Vec<VertexSet> = (0u32..1 << n)
        .map(|m| VertexSet::from_vertices(n, (0..n).filter(|i| m >> i & 1 == 1)))
        .collect();
    let bounded: Vec<bool> = sets.iter().map(|s| f.bounded_on(g, s, p)).collect();
    let has_island = |h: u32, s: usize| {
        let within = &sets[h as usize];
        // Iterate nonempty submasks of h.
        let mut sub = h;
        while sub != 0 {
            let island = &sets[sub as usize];
            let outside = within.difference(island);
            if bounded[sub as usize] && island.iter().all(|v| g.degree_in(v, &outside) < s) {
                return true;
            }
            sub = (sub - 1) & h;
        }
        false
    };
    (1..=n).find(|&s| (1u32..1 << n).all(|h| has_island(h, s)))
}

fn peeling(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let graphs = cfg.graphs.unwrap_or(200);
    let combos = [(Builtin::Star, 1u64), (Builtin::Star, 2), (Builtin::MaxDegree, 1)];
    let rows: Vec<Result<Vec<Option<Value>>>> = (0..graphs as u64)
        .into_par_iter()
        .map(|idx| {
            let g = suite_graph(cfg.seed, idx, 1, 7);
            combos
                .iter()
                .map(|&(f, p)| {
                    let fast = col_fp(&g, &f, p)?.value;
                    let slow = col_by_definition(&g, &f, p);
                    Ok((Some(fast) != slow)
                        .then(|| json!({ "graph6": to_graph6(&g), "f": f, "p": p, "peel": fast, "definition": slow })))
                })
                .collect()
        })
        .collect();
    let mut failures = Vec::new();
    let mut count = 0;
    for row in rows {
        for r in row? {
            count += 1;
            failures.extend(r);
        }
    }
    let checks = vec![Check::new(
        "col by peeling equals col by definition",
        failures.is_empty(),
        json!({ "instances": count, "failures": failures }),
    )];
    Ok(SuiteOutcome::new(Suite::Peeling, checks, Vec::new(), false))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Question {
    /// `χ^ℓ(G) <= p · χ^ℓ_{⋆,p}(G)`.
    Q1,
    /// `χ^ℓ(G) <= (p+1) · χ^ℓ_{mad,p}(G)`.
    Q2,
}

impl FromStr for Question {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q1" => Ok(Question::Q1),
            "q2" => Ok(Question::Q2),
            _ => Err(Error::Precondition(format!("unknown question {s:?} (expected q1 or q2)"))),
        }
    }
}

/// Exhaustive graph enumeration is limited to this many vertices.
pub const ENUMERATION_CAP: usize = 6;

/// One representative per isomorphism class of graphs on `n` vertices: the
/// edge mask that is smallest among all its relabelings.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATION_CAP {
        return Err(Error::cap("vertex count for graph enumeration", ENUMERATION_CAP as u64, n as u64));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        pairs.iter().position(|&e| e == (a, b)).unwrap()
    };
    let perms = permutations(n);
    // maps[k][e] = index of the image of pair e under permutation k.
    let maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|pi| pairs.iter().map(|&(u, v)| index(pi[u], pi[v])).collect())
        .collect();
    let canonical = (0u32..1 << pairs.len()).into_par_iter().filter(|&mask| {
        maps.iter().all(|map| {
            let image = (0..pairs.len())
                .filter(|&e| mask >> e & 1 == 1)
                .fold(0u32, |m, e| m | 1 << map[e]);
            image >= mask
        })
    });
    let masks: Vec<u32> = canonical.collect();
    Ok(masks
        .into_iter()
        .map(|mask| {
            Graph::from_edges(n, (0..pairs.len()).filter(|&e| mask >> e & 1 == 1).map(|e| pairs[e]))
                .expect("valid pairs")
        })
        .collect())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `χ^ℓ_{f,p}(G)` for connected hereditary `f`, squeezed between
/// `χ_{f,p}` and `col_{f,p}`; choosability is decided only strictly between.
pub fn list_chromatic_fp(g: &Graph, f: &dyn GraphParameter, p: u64, caps: &Caps) -> Result<usize> {
    let lower = chi_fp_with(g, f, p, caps)?.0;
    let upper = col_fp_with(g, f, p, caps)?.value;
    for s in lower..upper {
        if decide_choosability_fp_with(g, s, f, p, caps)?.choosable {
            return Ok(s);
        }
    }
    Ok(upper)
}

#[derive(Clone, Debug, Serialize)]
pub struct QuestionRow {
    pub graph6: String,
    pub p: u64,
    pub lhs: Option<usize>,
    pub rhs: Option<usize>,
    pub slack: Option<i64>,
    pub skipped: Option<String>,
}

/// Scans graphs for violations of the question's inequality. Reports the
/// smallest slack seen; never claims a proof.
pub fn cmd_question(q: Question, graphs: &[Graph], p_range: (u64, u64), caps: &Caps) -> Result<Report> {
    let (f, bump) = match q {
        Question::Q1 => (Builtin::Star, 0),
        Question::Q2 => (Builtin::MadFloor, 1),
    };
    let jobs: Vec<(&Graph, u64)> = graphs
        .iter()
        .flat_map(|g| (p_range.0..=p_range.1).map(move |p| (g, p)))
        .collect();
    let rows: Vec<Result<QuestionRow>> = jobs
        .par_iter()
        .map(|&(g, p)| {
            let sides = list_chromatic_fp(g, &Builtin::Star, 1, caps).and_then(|lhs| {
                let side = list_chromatic_fp(g, &f, p, caps)?;
                Ok((lhs, (p + bump) as usize * side))
            });
            match sides {
                Ok((lhs, rhs)) => Ok(QuestionRow {
                    graph6: to_graph6(g),
                    p,
                    lhs: Some(lhs),
                    rhs: Some(rhs),
                    slack: Some(rhs as i64 - lhs as i64),
                    skipped: None,
                }),
                Err(e @ Error::CapExceeded { .. }) => Ok(QuestionRow {
                    graph6: to_graph6(g),
                    p,
                    lhs: None,
                    rhs: None,
                    slack: None,
                    skipped: Some(e.to_string()),
                }),
                Err(e) => Err(e),
            }
        })
        .collect();
    let rows: Vec<QuestionRow> = rows.into_iter().collect::<Result<_>>()?;
    let min_slack = rows.iter().filter_map(|r| r.slack).min();
    let violations = rows.iter().filter(|r| r.slack.is_some_and(|s| s < 0)).count();
    let skipped = rows.iter().filter(|r| r.skipped.is_some()).count();
    let inputs = Inputs::default()
        .param("question", q)
        .param("p_min", p_range.0)
        .param("p_max", p_range.1)
        .param("graphs", graphs.len());
    let mut r = Report::new(
        "question",
        inputs,
        json!({
            "min_slack": min_slack,
            "violations": violations,
            "skipped": skipped,
            "rows": rows,
        }),
    );
    r.pass = violations == 0;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts_up_to_isomorphism() {
        let counts: Vec<usize> = (0..=5).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
        assert!(all_graphs(7).is_err());
    }

    #[test]
    fn definition_oracle_examples() {
        assert_eq!(col_by_definition(&cycle(5), &Builtin::Star, 1), Some(3));
        assert_eq!(col_by_definition(&families::complete(4), &Builtin::Star, 1), Some(4));
        assert_eq!(col_by_definition(&families::complete(4), &Builtin::Star, 4), Some(1));
        assert_eq!(col_by_definition(&families::complete(2), &Builtin::Star, 0), None);
    }

    #[test]
    fn small_density_examples() {
        let k4 = families::complete(4);
        assert_eq!(small_subgraph_density(&k4, 1), Rational::from_integer(0));
        assert_eq!(small_subgraph_density(&k4, 2), Rational::new(1, 2));
        assert_eq!(small_subgraph_density(&k4, 4), Rational::new(3, 2));
    }

    #[test]
    fn list_chromatic_examples() {
        let caps = Caps::default();
        assert_eq!(list_chromatic_fp(&cycle(4), &Builtin::Star, 1, &caps).unwrap(), 2);
        assert_eq!(list_chromatic_fp(&complete_bipartite(2, 4), &Builtin::Star, 1, &caps).unwrap(), 3);
        assert_eq!(list_chromatic_fp(&cycle(5), &Builtin::Star, 1, &caps).unwrap(), 3);
    }

    #[test]
    fn question_on_c4() {
        let r = cmd_question(Question::Q1, &[cycle(4)], (2, 2), &Caps::default()).unwrap();
        assert!(r.pass);
        assert!(r.result["min_slack"].as_i64().unwrap() >= 0);
    }

    #[test]
    fn small_suites_pass() {
        let cfg = SuiteConfig {
            graphs: Some(10),
            trials: Some(5),
            ..Default::default()
        };
        for s in [Suite::Lemma1, Suite::Estim, Suite::Identity, Suite::Peeling, Suite::Coldens, Suite::Addit] {
            let out = run_suite(s, &cfg).unwrap();
            assert!(out.passed, "{s}: {}", serde_json::to_string(&out.checks).unwrap());
        }
    }
}
