//! Named graphs and seeded random models.

use rand::Rng as _;

use crate::graph::Graph;
use crate::rng;
use crate::{Error, Rational, Result};

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        .unwrap()
        .with_name(format!("P{n}"))
}

/// Cycle `C_n`; for `n < 3` this degenerates to a path.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    if n >= 3 {
        edges.push((n - 1, 0));
    }
    Graph::from_edges(n, edges).unwrap().with_name(format!("C{n}"))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .unwrap()
        .with_name(format!("K{n}"))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        .unwrap()
        .with_name(format!("K{a},{b}"))
}

/// Star `K_{1,leaves}` centred at 0.
pub fn star_graph(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
        .unwrap()
        .with_name(format!("K1,{leaves}"))
}

/// Fan on `m >= 1` vertices: path `0..m-1` plus apex `m-1` joined to all of it.
pub fn fan_graph(m: usize) -> Graph {
    assert!(m >= 1);
    let apex = m - 1;
    let edges = (1..apex).map(|i| (i - 1, i)).chain((0..apex).map(|i| (i, apex)));
    Graph::from_edges(m, edges).unwrap().with_name(format!("fan{m}"))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner))
        .unwrap()
        .with_name("petersen")
}

/// The Robertson graph: the unique 4-regular graph of girth 5 on 19
/// vertices, as a Hamiltonian cycle plus one chord per vertex.
pub fn robertson() -> Graph {
    const CHORDS: [usize; 19] = [8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4];
    let ring = (0..19).map(|i| (i, (i + 1) % 19));
    let chords = (0..19).map(|i| (i, (i + CHORDS[i]) % 19));
    Graph::from_edges(19, ring.chain(chords))
        .unwrap()
        .with_name("robertson")
}

fn bernoulli(rng: &mut rng::Rng, prob: Rational) -> bool {
    let (num, den) = (*prob.numer(), *prob.denom());
    num > 0 && rng.gen_range(0..den) < num
}

fn check_probability(prob: Rational) -> Result<()> {
    if prob < Rational::from_integer(0) || prob > Rational::from_integer(1) {
        return Err(Error::Precondition(format!("probability {prob} outside [0, 1]")));
    }
    Ok(())
}

/// Erdős–Rényi `G(n, prob)`; pairs are drawn in lexicographic order.
pub fn random_gnp(n: usize, prob: Rational, seed: u64) -> Result<Graph> {
    check_probability(prob)?;
    let mut rng = rng::seeded(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if bernoulli(&mut rng, prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// `G(n, n, d/n)`: parts `0..n` and `n..2n`, each cross pair an edge with
/// probability `d/n`.
pub fn random_bipartite(n: usize, d: Rational, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Ok(Graph::empty(0));
    }
    let prob = d / Rational::from_integer(n as i64);
    check_probability(prob)?;
    let mut rng = rng::seeded(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in n..2 * n {
            if bernoulli(&mut rng, prob) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(2 * n, edges)?.with_name(format!("G({n},{n},{d}/{n})#{seed}")))
}

/// Looks up a graph by name: `petersen`, `robertson`, `fan9`, `C5`, `P4`,
/// `K4`, `K3,3`, `fanjoin:i`, `pathpower:n:t`.
pub fn named(name: &str) -> Result<Graph> {
    let bad = || Error::Precondition(format!("unknown named graph {name:?}"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    let lower = name.to_ascii_lowercase();
    if lower == "petersen" {
        return Ok(petersen());
    }
    if lower == "robertson" {
        return Ok(robertson());
    }
    if let Some(rest) = lower.strip_prefix("fanjoin:") {
        return super::fan_join(num(rest)?);
    }
    if let Some(rest) = lower.strip_prefix("pathpower:") {
        let (a, b) = rest.split_once(':').ok_or_else(bad)?;
        return super::path_power(num(a)?, num(b)?);
    }
    if let Some(rest) = lower.strip_prefix("fan") {
        let m = num(rest)?;
        if m == 0 {
            return Err(bad());
        }
        return Ok(fan_graph(m));
    }
    if let Some(rest) = lower.strip_prefix('k') {
        if let Some((a, b)) = rest.split_once(',') {
            return Ok(complete_bipartite(num(a)?, num(b)?));
        }
        return Ok(complete(num(rest)?));
    }
    if let Some(rest) = lower.strip_prefix('c') {
        return Ok(cycle(num(rest)?));
    }
    if let Some(rest) = lower.strip_prefix('p') {
        return Ok(path(num(rest)?));
    }
    Err(bad())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graph_invariants() {
        let p = petersen();
        assert_eq!((p.n(), p.edge_count(), p.girth()), (10, 15, Some(5)));
        let r = robertson();
        assert_eq!((r.n(), r.edge_count(), r.girth()), (19, 38, Some(5)));
        assert!((0..19).all(|v| r.degree(v) == 4));
        assert_eq!(fan_graph(9).edge_count(), 7 + 8);
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(named("C5").unwrap(), cycle(5));
        assert_eq!(named("K3,3").unwrap(), complete_bipartite(3, 3));
        assert_eq!(named("fanjoin:2").unwrap().n(), 6);
        assert_eq!(named("pathpower:12:3").unwrap().edge_count(), 30);
        assert!(named("dodecahedron").is_err());
    }

    #[test]
    fn random_bipartite_extremes() {
        let g = random_bipartite(6, Rational::from_integer(0), 3).unwrap();
        assert_eq!(g.edge_count(), 0);
        let g = random_bipartite(6, Rational::from_integer(6), 3).unwrap();
        assert_eq!(g.edge_count(), 36);
        assert!(random_bipartite(6, Rational::from_integer(7), 3).is_err());
    }

    #[test]
    fn random_bipartite_edge_count_concentrates() {
        // Binomial(2500, 0.16): mean 400, sd sqrt(336) ≈ 18.3.
        let g = random_bipartite(50, Rational::from_integer(8), 1).unwrap();
        let m = g.edge_count() as f64;
        assert!((m - 400.0).abs() <= 4.0 * 336f64.sqrt(), "edge count {m}");
        assert!(g.edges().all(|(u, v)| u < 50 && v >= 50));
    }

    #[test]
    fn samplers_are_seed_deterministic() {
        let a = random_gnp(12, Rational::new(1, 3), 9).unwrap();
        let b = random_gnp(12, Rational::new(1, 3), 9).unwrap();
        assert_eq!(a, b);
    }
}
