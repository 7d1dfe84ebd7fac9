//! Randomized adversarial list assignments.
//!
//! Colors live in the universe `{0..s²-1}`. A boundary set `B` receives lists
//! `L0`; vertices outside `B` with many `B`-neighbours whose lists sit inside
//! every half-size color subset are "good" and form `A`, which receives
//! lists `L1`. The domination check asks that every `L0`-coloring `φ` of `B`
//! leaves more than `|B|` vertices of `A` whose every `L1` color appears at
//! least `k` times on their `B`-neighbours.
//!
//! Every sampler draws from its own ChaCha stream of the caller's seed, so
//! results do not depend on call order or scheduling.

use std::collections::BTreeMap;

use rand::seq::index::sample;
use rand::Rng as _;
use serde::Serialize;

use crate::flow::densest_subgraph;
use crate::graph::io::to_graph6;
use crate::graph::{Graph, VertexSet};
use crate::report::{ser_rational, ser_set};
use crate::rng;
use crate::solvers::{Coloring, ListAssignment};
use crate::{Color, Error, Rational, Result};

const STREAM_B_L0: u64 = 0;
const STREAM_GOOD: u64 = 1;
const STREAM_L1: u64 = 2;
const STREAM_DOMINATION: u64 = 3;
const STREAM_EXTENSIONS: u64 = 4;

/// Lists on a subset of the vertices, keyed by vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PartialLists(pub BTreeMap<usize, Vec<Color>>);

impl PartialLists {
    pub fn get(&self, v: usize) -> Option<&[Color]> {
        self.0.get(&v).map(Vec::as_slice)
    }

    pub fn domain(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.0.keys().copied())
    }

    fn mask(&self, v: usize) -> u64 {
        self.0[&v].iter().fold(0, |m, &c| m | 1 << c)
    }
}

fn universe_mask(s: usize) -> Result<u64> {
    if s == 0 || s > 8 {
        return Err(Error::Precondition(format!("list size s = {s} must be in 1..=8")));
    }
    Ok(if s * s == 64 { u64::MAX } else { (1 << (s * s)) - 1 })
}

fn random_list(r: &mut rng::Rng, s: usize) -> Vec<Color> {
    let mut l = sample(r, s * s, s).into_vec();
    l.sort_unstable();
    l
}

/// Puts each vertex in `B` with probability `1/√d` and gives each vertex of
/// `B` a uniform `s`-subset of the universe.
pub fn sample_b_l0(g: &Graph, s: usize, k: usize, d: u64, seed: u64) -> Result<(VertexSet, PartialLists)> {
    universe_mask(s)?;
    if k == 0 || d == 0 {
        return Err(Error::Precondition("sampling B needs k >= 1 and d >= 1".into()));
    }
    let mut r = rng::stream(seed, STREAM_B_L0);
    let prob = 1.0 / (d as f64).sqrt();
    let b = VertexSet::from_vertices(g.n(), (0..g.n()).filter(|_| r.gen::<f64>() < prob).collect::<Vec<_>>());
    let l0 = PartialLists(b.iter().map(|v| (v, random_list(&mut r, s))).collect());
    Ok((b, l0))
}

#[derive(Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GoodMode {
    /// Every half-size subset `T`; refuses `s > cap_s`.
    Exact { cap_s: usize },
    /// `trials` random half-size subsets; the result may contain false positives.
    Sampled { trials: usize, seed: u64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct GoodVertices {
    #[serde(serialize_with = "ser_set")]
    pub set: VertexSet,
    pub estimate: bool,
}

/// Vertices `v ∉ B` such that for every `T ⊆ S` with `|T| = ⌈s²/2⌉`, at
/// least `k·s²` neighbours `b ∈ B` have `L0(b) ⊆ T`.
pub fn good_vertices(
    g: &Graph,
    b: &VertexSet,
    l0: &PartialLists,
    s: usize,
    k: usize,
    mode: GoodMode,
) -> Result<GoodVertices> {
    let full = universe_mask(s)?;
    let half = (s * s).div_ceil(2);
    let (subsets, estimate) = match mode {
        GoodMode::Exact { cap_s } => {
            if s > cap_s {
                return Err(Error::cap("list size for exact condition (c)", cap_s as u64, s as u64));
            }
            (half_subsets(s * s, half), false)
        }
        GoodMode::Sampled { trials, seed } => {
            let mut r = rng::stream(seed, STREAM_GOOD);
            let ts = (0..trials)
                .map(|_| sample(&mut r, s * s, half).iter().fold(0u64, |m, c| m | 1 << c))
                .collect();
            (ts, true)
        }
    };
    let need = k * s * s;
    let good = (0..g.n()).filter(|&v| {
        if b.contains(v) {
            return false;
        }
        let masks: Vec<u64> = g.neighbors(v).intersection(b).iter().map(|u| l0.mask(u)).collect();
        masks.len() >= need
            && subsets.iter().all(|&t| {
                let outside = full & !t;
                masks.iter().filter(|&&m| m & outside == 0).count() >= need
            })
    });
    Ok(GoodVertices {
        set: VertexSet::from_vertices(g.n(), good.collect::<Vec<_>>()),
        estimate,
    })
}

/// All `size`-subsets of `0..width` as bitmasks, in increasing order.
fn half_subsets(width: usize, size: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if size == 0 {
        return vec![0];
    }
    let mut m: u64 = (1 << size) - 1;
    while m < 1 << width {
        out.push(m);
        let low = m & m.wrapping_neg();
        let ripple = m + low;
        m = (((ripple ^ m) >> 2) / low) | ripple;
    }
    out
}

/// Independent uniform `s`-subsets of the universe for the vertices of `a`.
pub fn sample_l1(a: &VertexSet, s: usize, seed: u64) -> Result<PartialLists> {
    universe_mask(s)?;
    let mut r = rng::stream(seed, STREAM_L1);
    Ok(PartialLists(a.iter().map(|v| (v, random_list(&mut r, s))).collect()))
}

/// `A_{φ,L1}`: vertices `v ∈ A` such that every color of `L1(v)` appears on
/// at least `k` neighbours of `v` in `B`.
pub fn compute_a_phi(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    l1: &PartialLists,
    phi: &BTreeMap<usize, Color>,
    k: usize,
) -> Result<VertexSet> {
    if !phi.keys().copied().eq(b.iter()) {
        return Err(Error::Precondition("phi must be defined exactly on B".into()));
    }
    if !l1.0.keys().copied().eq(a.iter()) {
        return Err(Error::Precondition("L1 must be defined exactly on A".into()));
    }
    let kept = a.iter().filter(|&v| {
        let nb = g.neighbors(v).intersection(b);
        l1.0[&v]
            .iter()
            .all(|&c| nb.iter().filter(|u| phi[u] == c).count() >= k)
    });
    Ok(VertexSet::from_vertices(g.n(), kept.collect::<Vec<_>>()))
}

#[derive(Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DominationMode {
    /// All `L0`-colorings of `B`; refuses more than `cap` of them.
    Exact { cap: u64 },
    /// `samples` uniformly random `L0`-colorings.
    Sampled { samples: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationReport {
    /// Whether `|A_{φ,L1}| > |B|` held for every examined `φ`.
    pub holds: bool,
    /// Smallest `|A_{φ,L1}| - |B|` seen.
    pub worst_margin: i64,
    pub colorings_checked: u64,
    pub estimate: bool,
    /// `B` is empty, so the single empty `φ` decides the check.
    pub empty_boundary: bool,
}

/// Checks `|A_{φ,L1}| > |B|` over `L0`-colorings `φ` of `B`.
///
/// Exact mode walks all colorings depth first, updating per-vertex color
/// counts incrementally.
pub fn verify_l1_dominates(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    l0: &PartialLists,
    l1: &PartialLists,
    k: usize,
    mode: DominationMode,
) -> Result<DominationReport> {
    if !l0.0.keys().copied().eq(b.iter()) || !l1.0.keys().copied().eq(a.iter()) {
        return Err(Error::Precondition("L0 must cover exactly B and L1 exactly A".into()));
    }
    let mut state = Counts::new(g, a, b, l1, k);
    let bs: Vec<usize> = b.iter().collect();
    let mut report = DominationReport {
        holds: true,
        worst_margin: i64::MAX,
        colorings_checked: 0,
        estimate: false,
        empty_boundary: bs.is_empty(),
    };
    match mode {
        DominationMode::Exact { cap } => {
            let total = bs
                .iter()
                .try_fold(1u64, |acc, &v| acc.checked_mul(l0.0[&v].len() as u64))
                .unwrap_or(u64::MAX);
            if total > cap {
                return Err(Error::cap("L0-colorings for exact domination", cap, total));
            }
            state.enumerate(&bs, l0, 0, &mut report);
        }
        DominationMode::Sampled { samples, seed } => {
            report.estimate = true;
            let mut r = rng::stream(seed, STREAM_DOMINATION);
            for _ in 0..samples {
                let choice: Vec<Color> = bs
                    .iter()
                    .map(|v| {
                        let l = &l0.0[v];
                        l[r.gen_range(0..l.len())]
                    })
                    .collect();
                for (i, &c) in choice.iter().enumerate() {
                    state.apply(i, c, 1);
                }
                state.record(&mut report);
                for (i, &c) in choice.iter().enumerate() {
                    state.apply(i, c, -1);
                }
            }
        }
    }
    Ok(report)
}

/// Color counts on the `B`-neighbourhoods of the vertices of `A`.
struct Counts {
    k: usize,
    b_len: i64,
    width: usize,
    /// For each position in `B`, the indices in `A` of its neighbours.
    adj: Vec<Vec<usize>>,
    /// `l1_mask[j]` is the `L1` list of the `j`-th vertex of `A`.
    l1_mask: Vec<u64>,
    count: Vec<usize>,
    deficit: Vec<usize>,
    satisfied: i64,
}

impl Counts {
    fn new(g: &Graph, a: &VertexSet, b: &VertexSet, l1: &PartialLists, k: usize) -> Self {
        let av: Vec<usize> = a.iter().collect();
        let width = 64;
        let adj = b
            .iter()
            .map(|u| (0..av.len()).filter(|&j| g.has_edge(u, av[j])).collect())
            .collect();
        let l1_mask: Vec<u64> = av.iter().map(|&v| l1.mask(v)).collect();
        let deficit: Vec<usize> = l1_mask
            .iter()
            .map(|m| if k == 0 { 0 } else { m.count_ones() as usize })
            .collect();
        let satisfied = deficit.iter().filter(|&&d| d == 0).count() as i64;
        Counts {
            k,
            b_len: b.len() as i64,
            width,
            adj,
            l1_mask,
            count: vec![0; av.len() * width],
            deficit,
            satisfied,
        }
    }

    fn apply(&mut self, pos: usize, c: Color, delta: isize) {
        for &j in &self.adj[pos] {
            let slot = &mut self.count[j * self.width + c];
            let before = *slot;
            *slot = (before as isize + delta) as usize;
            if self.k == 0 || self.l1_mask[j] >> c & 1 == 0 {
                continue;
            }
            if delta > 0 && *slot == self.k {
                self.deficit[j] -= 1;
                if self.deficit[j] == 0 {
                    self.satisfied += 1;
                }
            } else if delta < 0 && before == self.k {
                if self.deficit[j] == 0 {
                    self.satisfied -= 1;
                }
                self.deficit[j] += 1;
            }
        }
    }

    fn record(&self, report: &mut DominationReport) {
        let margin = self.satisfied - self.b_len;
        report.colorings_checked += 1;
        report.worst_margin = report.worst_margin.min(margin);
        report.holds &= margin > 0;
    }

    fn enumerate(&mut self, bs: &[usize], l0: &PartialLists, pos: usize, report: &mut DominationReport) {
        if pos == bs.len() {
            self.record(report);
            return;
        }
        for &c in &l0.0[&bs[pos]] {
            self.apply(pos, c, 1);
            self.enumerate(bs, l0, pos + 1, report);
            self.apply(pos, c, -1);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonoWitness {
    pub color: Color,
    #[serde(serialize_with = "ser_set")]
    pub vertex_set: VertexSet,
    #[serde(serialize_with = "ser_rational")]
    pub avg_degree: Rational,
}

/// The densest subgraph of the first color class (by color) whose maximum
/// average degree exceeds `k`.
pub fn mono_dense_witness(g: &Graph, c: &Coloring, k: usize) -> Option<MonoWitness> {
    let threshold = Rational::from_integer(k as i64);
    c.classes().into_iter().find_map(|(color, class)| {
        let (set, density) = densest_subgraph(g, &class)?;
        let avg = density * 2;
        (avg > threshold).then_some(MonoWitness {
            color,
            vertex_set: set,
            avg_degree: avg,
        })
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct AdversaryConfig {
    pub s: usize,
    pub k: usize,
    pub d: u64,
    pub seed: u64,
    pub good: GoodMode,
    pub domination: DominationMode,
    /// Exact domination is attempted first when it fits this many colorings.
    pub exact_domination_cap: u64,
    /// Random L-colorings examined for a dense monochromatic subgraph when
    /// domination holds.
    pub extensions: usize,
}

impl AdversaryConfig {
    pub fn new(s: usize, k: usize, d: u64, seed: u64) -> Self {
        AdversaryConfig {
            s,
            k,
            d,
            seed,
            good: GoodMode::Exact { cap_s: 3 },
            domination: DominationMode::Sampled { samples: 1000, seed },
            exact_domination_cap: 1_000_000,
            extensions: 100,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionReport {
    /// `|A| >= n/2`.
    pub a: bool,
    /// `|B| <= 2n/√d`.
    pub b: bool,
    /// Every vertex of `A` is good; true by construction of `A`.
    pub c: bool,
    /// Condition (c) was only checked on sampled subsets.
    pub c_estimate: bool,
    pub domination: Option<DominationReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub colorings: usize,
    pub witnesses_found: usize,
    /// First coloring without a witness, if any.
    pub counterexample: Option<Coloring>,
    pub lists: Option<ListAssignment>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AdversaryState {
    pub graph6: String,
    pub n: usize,
    pub s: usize,
    pub k: usize,
    pub d: u64,
    pub s_size: usize,
    pub seed: u64,
    #[serde(serialize_with = "ser_set")]
    pub b: VertexSet,
    pub l0: PartialLists,
    #[serde(serialize_with = "ser_set")]
    pub a: VertexSet,
    pub l1: PartialLists,
    pub conditions: ConditionReport,
    pub extensions: Option<ExtensionReport>,
    pub estimate: bool,
}

/// Runs the whole pipeline with relaxed constants and reports which
/// conditions hold. Nothing here claims the asymptotic guarantee.
pub fn run_adversary(g: &Graph, cfg: &AdversaryConfig) -> Result<AdversaryState> {
    let (s, k, n) = (cfg.s, cfg.k, g.n());
    let (b, l0) = sample_b_l0(g, s, k, cfg.d, cfg.seed)?;
    let good = good_vertices(g, &b, &l0, s, k, cfg.good)?;
    let a = good.set;
    let l1 = sample_l1(&a, s, cfg.seed)?;

    let exact_feasible = (s as u64)
        .checked_pow(b.len() as u32)
        .is_some_and(|total| total <= cfg.exact_domination_cap);
    let domination = if exact_feasible {
        Some(verify_l1_dominates(g, &a, &b, &l0, &l1, k, DominationMode::Exact {
            cap: cfg.exact_domination_cap,
        })?)
    } else {
        match cfg.domination {
            DominationMode::Sampled { samples, .. } if samples > 0 => {
                Some(verify_l1_dominates(g, &a, &b, &l0, &l1, k, cfg.domination)?)
            }
            _ => None,
        }
    };
    let extensions = match &domination {
        Some(rep) if rep.holds && !rep.estimate => Some(check_extensions(g, &l0, &l1, cfg)?),
        _ => None,
    };
    let estimate = good.estimate || domination.as_ref().is_some_and(|d| d.estimate);
    let conditions = ConditionReport {
        a: 2 * a.len() >= n,
        b: (b.len() as u128).pow(2) * cfg.d as u128 <= 4 * (n as u128).pow(2),
        c: true,
        c_estimate: good.estimate,
        domination,
    };
    Ok(AdversaryState {
        graph6: to_graph6(g),
        n,
        s,
        k,
        d: cfg.d,
        s_size: s * s,
        seed: cfg.seed,
        b,
        l0,
        a,
        l1,
        conditions,
        extensions,
        estimate,
    })
}

/// Random `s`-list assignments extending `L0 ∪ L1`, each with one uniformly
/// random `L`-coloring, searched for a dense monochromatic subgraph.
fn check_extensions(g: &Graph, l0: &PartialLists, l1: &PartialLists, cfg: &AdversaryConfig) -> Result<ExtensionReport> {
    let mut r = rng::stream(cfg.seed, STREAM_EXTENSIONS);
    let mut report = ExtensionReport {
        colorings: cfg.extensions,
        witnesses_found: 0,
        counterexample: None,
        lists: None,
    };
    for _ in 0..cfg.extensions {
        let lists: Vec<Vec<Color>> = (0..g.n())
            .map(|v| match l0.get(v).or_else(|| l1.get(v)) {
                Some(l) => l.to_vec(),
                None => random_list(&mut r, cfg.s),
            })
            .collect();
        let coloring = Coloring(lists.iter().map(|l| l[r.gen_range(0..l.len())]).collect());
        if mono_dense_witness(g, &coloring, cfg.k).is_some() {
            report.witnesses_found += 1;
        } else if report.counterexample.is_none() {
            report.counterexample = Some(coloring);
            report.lists = Some(ListAssignment::new(lists, cfg.s)?);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::families::{complete, cycle, random_gnp, star_graph};

    fn lists(entries: &[(usize, &[Color])]) -> PartialLists {
        PartialLists(entries.iter().map(|&(v, l)| (v, l.to_vec())).collect())
    }

    #[test]
    fn half_subset_enumeration() {
        assert_eq!(half_subsets(4, 2), vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(half_subsets(9, 5).len(), 126);
        assert_eq!(half_subsets(1, 1), vec![1]);
    }

    #[test]
    fn sampler_edge_cases() {
        let g = cycle(6);
        let (b, l0) = sample_b_l0(&g, 2, 1, 1, 3).unwrap();
        assert_eq!(b, g.vertices());
        assert!(l0.0.values().all(|l| l.len() == 2 && l.iter().all(|&c| c < 4)));
        let (_, l0) = sample_b_l0(&g, 1, 1, 4, 3).unwrap();
        assert!(l0.0.values().all(|l| l == &[0]));
        assert!(sample_l1(&VertexSet::new(5), 2, 0).unwrap().0.is_empty());
    }

    #[test]
    fn good_vertices_with_single_color() {
        // s = 1: good iff outside B with at least k neighbours in B.
        let g = random_gnp(15, Rational::new(1, 3), 4).unwrap();
        let (b, l0) = sample_b_l0(&g, 1, 1, 4, 4).unwrap();
        for k in 1..=3 {
            let good = good_vertices(&g, &b, &l0, 1, k, GoodMode::Exact { cap_s: 3 }).unwrap();
            let expect = (0..15).filter(|&v| !b.contains(v) && g.degree_in(v, &b) >= k);
            assert_eq!(good.set.to_vec(), expect.collect::<Vec<_>>());
            let sampled = good_vertices(&g, &b, &l0, 1, k, GoodMode::Sampled { trials: 3, seed: 0 }).unwrap();
            assert_eq!(sampled.set, good.set);
            assert!(sampled.estimate);
        }
        assert!(good_vertices(&g, &b, &l0, 4, 1, GoodMode::Exact { cap_s: 3 }).is_err());
    }

    #[test]
    fn a_phi_hand_instance() {
        let g = star_graph(4);
        let a = VertexSet::singleton(5, 0);
        let b = VertexSet::from_vertices(5, [1, 2, 3, 4]);
        let l1 = lists(&[(0, &[0, 1])]);
        let phi: BTreeMap<usize, Color> = [(1, 0), (2, 0), (3, 1), (4, 1)].into();
        assert_eq!(compute_a_phi(&g, &a, &b, &l1, &phi, 2).unwrap(), a);
        let phi: BTreeMap<usize, Color> = [(1, 0), (2, 0), (3, 0), (4, 1)].into();
        assert!(compute_a_phi(&g, &a, &b, &l1, &phi, 2).unwrap().is_empty());
        assert_eq!(compute_a_phi(&g, &a, &b, &l1, &phi, 0).unwrap(), a);
        let short: BTreeMap<usize, Color> = [(1, 0)].into();
        assert!(compute_a_phi(&g, &a, &b, &l1, &short, 1).is_err());
    }

    /// Direct oracle: enumerate all colorings through `compute_a_phi`.
    fn brute_margin(g: &Graph, a: &VertexSet, b: &VertexSet, l0: &PartialLists, l1: &PartialLists, k: usize) -> (bool, i64, u64) {
        let bs: Vec<usize> = b.iter().collect();
        let mut idx = vec![0usize; bs.len()];
        let (mut holds, mut worst, mut count) = (true, i64::MAX, 0);
        loop {
            let phi: BTreeMap<usize, Color> = bs.iter().zip(&idx).map(|(&v, &i)| (v, l0.0[&v][i])).collect();
            let m = compute_a_phi(g, a, b, l1, &phi, k).unwrap().len() as i64 - bs.len() as i64;
            holds &= m > 0;
            worst = worst.min(m);
            count += 1;
            let mut pos = 0;
            loop {
                if pos == bs.len() {
                    return (holds, worst, count);
                }
                idx[pos] += 1;
                if idx[pos] < l0.0[&bs[pos]].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }

    #[test]
    fn exact_domination_matches_oracle() {
        for seed in 0..30 {
            let g = random_gnp(14, Rational::new(1, 2), seed).unwrap();
            let (b, l0) = sample_b_l0(&g, 2, 1, 4, seed).unwrap();
            if b.len() > 9 {
                continue;
            }
            let a = g.vertices().difference(&b);
            let l1 = sample_l1(&a, 2, seed).unwrap();
            for k in 0..=2 {
                let rep = verify_l1_dominates(&g, &a, &b, &l0, &l1, k, DominationMode::Exact { cap: 1000 }).unwrap();
                let (holds, worst, count) = brute_margin(&g, &a, &b, &l0, &l1, k);
                assert_eq!((rep.holds, rep.worst_margin, rep.colorings_checked), (holds, worst, count));
            }
        }
    }

    #[test]
    fn empty_boundary_convention() {
        let g = cycle(4);
        let a = VertexSet::from_vertices(4, [0, 2]);
        let l1 = lists(&[(0, &[0, 1]), (2, &[1, 2])]);
        let empty = VertexSet::new(4);
        let none = PartialLists::default();
        let rep = verify_l1_dominates(&g, &a, &empty, &none, &l1, 0, DominationMode::Exact { cap: 1 }).unwrap();
        assert!(rep.holds && rep.empty_boundary);
        assert_eq!(rep.worst_margin, 2);
        let rep = verify_l1_dominates(&g, &a, &empty, &none, &l1, 1, DominationMode::Exact { cap: 1 }).unwrap();
        assert!(!rep.holds);
    }

    #[test]
    fn exact_cap_fires() {
        let g = Graph::empty(30);
        let b = g.vertices();
        let l0 = PartialLists(b.iter().map(|v| (v, vec![0, 1])).collect());
        let a = VertexSet::new(30);
        let none = PartialLists::default();
        assert!(verify_l1_dominates(&g, &a, &b, &l0, &none, 1, DominationMode::Exact { cap: 1_000_000 }).is_err());
    }

    #[test]
    fn mono_witness_examples() {
        let k5 = complete(5);
        let w = mono_dense_witness(&k5, &Coloring(vec![0; 5]), 3).unwrap();
        assert_eq!((w.vertex_set, w.avg_degree), (k5.vertices(), Rational::from_integer(4)));
        assert!(mono_dense_witness(&k5, &Coloring(vec![0; 5]), 4).is_none());
        let c4 = cycle(4);
        assert!(mono_dense_witness(&c4, &Coloring(vec![0, 1, 0, 1]), 0).is_none());
    }

    #[test]
    fn pipeline_is_seed_deterministic() {
        let g = random_gnp(40, Rational::new(1, 4), 2).unwrap();
        let cfg = AdversaryConfig::new(2, 1, 4, 11);
        let x = serde_json::to_string(&run_adversary(&g, &cfg).unwrap()).unwrap();
        let y = serde_json::to_string(&run_adversary(&g, &cfg).unwrap()).unwrap();
        assert_eq!(x, y);
        let state = run_adversary(&g, &cfg).unwrap();
        assert!(state.a.is_disjoint(&state.b));
    }
}
