//! Property tests against brute-force oracles on small graphs.

use std::collections::VecDeque;

use gencol::constructions::{compute_a_phi, run_adversary, sample_l1, AdversaryConfig, PartialLists};
use gencol::graph::io::{from_edge_list, from_graph6, to_edge_list, to_graph6};
use gencol::parameters::{eval_mad_exact, Builtin, GraphParameter, ParamValue};
use gencol::solvers::{
    chi_fp, col_fp, decide_choosability_fp, degeneracy_col, greedy_island_coloring, verify_fp_proper, ListAssignment,
};
use gencol::suites::col_by_definition;
use gencol::{Graph, Rational, VertexSet};
use proptest::prelude::*;
use statrs::distribution::{ChiSquared, ContinuousCDF};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn subset_of(g: &Graph, mask: u64) -> VertexSet {
    VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&v| mask >> v & 1 == 1))
}

/// `max 2|E(S)|/|S|` over all nonempty subsets.
fn mad_oracle(g: &Graph) -> Rational {
    (1u64..1 << g.n())
        .map(|m| {
            let s = subset_of(g, m);
            Rational::new(2 * g.edges_within(&s) as i64, s.len() as i64)
        })
        .max()
        .unwrap_or_else(|| Rational::from_integer(0))
}

/// Longest simple path (in vertices) inside `set`, by plain DFS.
fn longest_path_oracle(g: &Graph, set: &[usize]) -> usize {
    fn dfs(g: &Graph, set: &[usize], v: usize, seen: &mut Vec<usize>) -> usize {
        let mut best = seen.len();
        for &u in set {
            if g.has_edge(v, u) && !seen.contains(&u) {
                seen.push(u);
                best = best.max(dfs(g, set, u, seen));
                seen.pop();
            }
        }
        best
    }
    set.iter().map(|&v| dfs(g, set, v, &mut vec![v])).max().unwrap_or(0)
}

fn fan_oracle(g: &Graph) -> usize {
    (0..g.n())
        .map(|v| 1 + longest_path_oracle(g, &g.neighbors(v).to_vec()))
        .max()
        .unwrap_or(0)
}

/// Shortest cycle through each edge: 1 + distance between its ends without it.
fn girth_oracle(g: &Graph) -> Option<usize> {
    g.edges()
        .filter_map(|(u, v)| {
            let h = g.without_edge(u, v);
            let mut dist = vec![usize::MAX; g.n()];
            dist[u] = 0;
            let mut q = VecDeque::from([u]);
            while let Some(x) = q.pop_front() {
                for y in h.neighbors(x).iter() {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            (dist[v] != usize::MAX).then(|| dist[v] + 1)
        })
        .min()
}

fn chromatic_oracle(g: &Graph) -> usize {
    let n = g.n();
    (0..=n)
        .find(|&k| {
            let total = (k as u64).pow(n as u32);
            (0..total).any(|code| {
                let mut c = vec![0; n];
                let mut x = code;
                for slot in c.iter_mut() {
                    *slot = (x % k as u64) as usize;
                    x /= k as u64;
                }
                g.edges().all(|(u, v)| c[u] != c[v])
            })
        })
        .unwrap()
}

fn lists_strategy(n: usize, s: usize, palette: usize) -> impl Strategy<Value = ListAssignment> {
    proptest::collection::vec(proptest::sample::subsequence((0..palette).collect::<Vec<_>>(), s), n)
        .prop_map(move |lists| ListAssignment::new(lists, s).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn graph6_and_edge_list_round_trip(g in graph(12)) {
        prop_assert_eq!(&from_graph6(&to_graph6(&g)).unwrap(), &g);
        prop_assert_eq!(&from_edge_list(&to_edge_list(&g)).unwrap(), &g);
    }

    #[test]
    fn components_partition_the_vertices(g in graph(12)) {
        let comps = g.components();
        let total: usize = comps.iter().map(VertexSet::len).sum();
        prop_assert_eq!(total, g.n());
        for (i, a) in comps.iter().enumerate() {
            for b in &comps[i + 1..] {
                prop_assert!(a.is_disjoint(b));
            }
            prop_assert_eq!(g.components_within(a).len(), 1);
        }
    }

    #[test]
    fn girth_matches_oracle(g in graph(10)) {
        prop_assert_eq!(g.girth(), girth_oracle(&g));
    }

    #[test]
    fn mad_matches_subset_oracle(g in graph(10)) {
        prop_assert_eq!(eval_mad_exact(&g), mad_oracle(&g));
    }

    #[test]
    fn fan_matches_path_oracle(g in graph(8)) {
        prop_assert_eq!(Builtin::Fan.eval(&g), ParamValue::from(fan_oracle(&g)));
    }

    #[test]
    fn chromatic_matches_oracle(g in graph(7)) {
        prop_assert_eq!(Builtin::Chromatic.eval(&g), ParamValue::from(chromatic_oracle(&g)));
    }

    #[test]
    fn hereditary_parameters_shrink_on_induced_subgraphs(g in graph(9), mask in any::<u64>()) {
        let set = subset_of(&g, mask);
        for f in Builtin::ALL {
            prop_assert!(f.flags().hereditary);
            prop_assert!(f.eval_on(&g, &set) <= f.eval(&g), "{}", f);
        }
    }

    #[test]
    fn connected_parameters_take_the_max_over_parts(a in graph(6), b in graph(6)) {
        let u = a.disjoint_union(&b);
        for f in Builtin::ALL {
            prop_assert_eq!(f.eval(&u), f.eval(&a).max(f.eval(&b)), "{}", f);
        }
    }

    #[test]
    fn monotone_parameters_shrink_on_edge_deletion(g in graph(9), pick in any::<prop::sample::Index>()) {
        let edges = g.edge_list();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick.index(edges.len())];
        let h = g.without_edge(u, v);
        for f in Builtin::ALL {
            prop_assert!(f.eval(&h) <= f.eval(&g), "{}", f);
        }
    }

    #[test]
    fn average_degree_bounded_by_flagged_parameters(g in graph(10)) {
        prop_assume!(g.n() > 0);
        let avg = g.average_degree().unwrap();
        let val = |f: Builtin| Rational::from_integer(f.eval(&g).finite().unwrap() as i64);
        prop_assert!(avg <= val(Builtin::MaxDegree));
        prop_assert!(avg < val(Builtin::Star));
        prop_assert!(avg < val(Builtin::MadFloor) + 1);
    }

    #[test]
    fn bounded_on_agrees_with_eval(g in graph(9), p in 0u64..5) {
        for f in Builtin::ALL {
            prop_assert_eq!(f.bounded_on(&g, &g.vertices(), p), f.eval(&g).at_most(p), "{}", f);
        }
    }

    #[test]
    fn col_star_one_is_degeneracy_plus_one(g in graph(10)) {
        prop_assert_eq!(col_fp(&g, &Builtin::Star, 1).unwrap().value, degeneracy_col(&g));
    }

    #[test]
    fn proper_coloring_three_ways(g in graph(8)) {
        let chi = chromatic_oracle(&g);
        prop_assert_eq!(chi_fp(&g, &Builtin::Star, 1).unwrap().0, chi);
        prop_assert_eq!(chi_fp(&g, &Builtin::MaxDegree, 0).unwrap().0, chi);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn peeling_matches_definition(g in graph(7)) {
        for (f, p) in [(Builtin::Star, 1), (Builtin::Star, 2), (Builtin::MaxDegree, 1), (Builtin::MadFloor, 1)] {
            let col = col_fp(&g, &f, p).unwrap().value;
            prop_assert_eq!(Some(col), col_by_definition(&g, &f, p), "{} {}", f, p);
        }
    }

    #[test]
    fn connected_islands_suffice(g in graph(7), s in 1usize..4, p in 1u64..3) {
        // For connected hereditary f an island exists iff a connected one does.
        let any_island = (1u64..1 << g.n()).any(|m| {
            let i = subset_of(&g, m);
            let out = g.vertices().difference(&i);
            i.iter().all(|v| g.degree_in(v, &out) < s) && Builtin::Star.bounded_on(&g, &i, p)
        });
        let found = gencol::solvers::find_island(&g, s, &Builtin::Star, p).unwrap();
        prop_assert_eq!(found.is_some(), any_island);
        if let Some(cert) = found {
            prop_assert_eq!(g.components_within(&cert.island).len(), 1);
        }
    }

    #[test]
    fn greedy_island_coloring_is_proper(
        (g, lists) in graph(8).prop_flat_map(|g| {
            let s = col_fp(&g, &Builtin::MaxDegree, 1).unwrap().value.max(1);
            let n = g.n();
            (Just(g), lists_strategy(n, s, 2 * s))
        })
    ) {
        let c = greedy_island_coloring(&g, &lists, &Builtin::MaxDegree, 1).unwrap();
        prop_assert!(lists.admits(&c));
        prop_assert!(verify_fp_proper(&g, &c, &Builtin::MaxDegree, 1));
    }

    #[test]
    fn compute_a_phi_with_k_zero_is_a(g in graph(10), a_mask in any::<u64>(), b_mask in any::<u64>(), seed in any::<u64>()) {
        let b = subset_of(&g, b_mask);
        let a = subset_of(&g, a_mask).difference(&b);
        let l1 = sample_l1(&a, 2, seed).unwrap();
        let phi = b.iter().map(|v| (v, v % 4)).collect();
        prop_assert_eq!(compute_a_phi(&g, &a, &b, &l1, &phi, 0).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn choosability_sandwich(g in graph(6), p in 1u64..3) {
        let chi = chi_fp(&g, &Builtin::Star, p).unwrap().0;
        let col = col_fp(&g, &Builtin::Star, p).unwrap().value;
        prop_assert!(chi <= col);
        if col <= 3 {
            prop_assert!(decide_choosability_fp(&g, col, &Builtin::Star, p).unwrap().choosable);
        }
        if chi >= 2 && chi - 1 <= 3 {
            prop_assert!(!decide_choosability_fp(&g, chi - 1, &Builtin::Star, p).unwrap().choosable);
        }
    }

    #[test]
    fn choosability_is_monotone_in_s(g in graph(5)) {
        let two = decide_choosability_fp(&g, 2, &Builtin::Star, 1).unwrap().choosable;
        let three = decide_choosability_fp(&g, 3, &Builtin::Star, 1).unwrap().choosable;
        prop_assert!(!two || three);
    }

    #[test]
    fn adversary_is_seed_deterministic(g in graph(30), seed in any::<u64>()) {
        let cfg = AdversaryConfig::new(2, 1, 4, seed);
        let x = serde_json::to_string(&run_adversary(&g, &cfg).unwrap()).unwrap();
        let y = serde_json::to_string(&run_adversary(&g, &cfg).unwrap()).unwrap();
        prop_assert_eq!(x, y);
    }
}

#[test]
fn l1_lists_are_uniform_pairs() {
    let a = VertexSet::full(6000);
    let l1: PartialLists = sample_l1(&a, 2, 17).unwrap();
    let mut counts = std::collections::BTreeMap::new();
    for l in l1.0.values() {
        *counts.entry(l.clone()).or_insert(0u32) += 1;
    }
    assert_eq!(counts.len(), 6);
    let expected = 1000.0;
    let stat: f64 = counts.values().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
    let critical = ChiSquared::new(5.0).unwrap().inverse_cdf(0.999);
    assert!(stat < critical, "chi-square {stat} above {critical}");
}

#[test]
fn single_color_lists_are_trivial() {
    let l1 = sample_l1(&VertexSet::full(5), 1, 0).unwrap();
    assert!(l1.0.values().all(|l| l == &[0]));
}
