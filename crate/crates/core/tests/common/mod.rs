//! Independent reference implementations used as test oracles. Everything
//! here works on plain adjacency sets and raw image vectors, without the
//! library's search or verification code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use graph_translations::{Graph, PartialVertexMap, Signal, VertexId};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Adjacency as a set of unordered pairs.
pub struct Adjacency {
    pub n: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

impl Adjacency {
    pub fn of(g: &Graph) -> Self {
        let edges = g.edges().map(|(u, v)| (u.0, v.0)).collect();
        Adjacency { n: g.num_vertices(), edges }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.adjacent(u, v)).collect()
    }
}

/// Literal candidate test: injective on the domain, neighbors only, and
/// `(u, v)` is an edge exactly when `(f(u), f(v))` is, over all domain pairs.
pub fn is_candidate(adj: &Adjacency, f: &[Option<usize>]) -> bool {
    let domain: Vec<usize> = (0..adj.n).filter(|&v| f[v].is_some()).collect();
    for &v in &domain {
        if !adj.adjacent(v, f[v].unwrap()) {
            return false;
        }
    }
    for (i, &u) in domain.iter().enumerate() {
        for &v in &domain[i + 1..] {
            let (fu, fv) = (f[u].unwrap(), f[v].unwrap());
            if fu == fv || adj.adjacent(u, v) != adj.adjacent(fu, fv) {
                return false;
            }
        }
    }
    true
}

/// Every candidate, in lexicographic order of image sequences with ω
/// first. Raw maps are generated vertex by vertex and a prefix is dropped
/// as soon as it fails the literal test.
pub fn all_candidates(adj: &Adjacency) -> Vec<Vec<Option<usize>>> {
    fn go(adj: &Adjacency, f: &mut Vec<Option<usize>>, out: &mut Vec<Vec<Option<usize>>>) {
        let v = f.len();
        if v == adj.n {
            out.push(f.clone());
            return;
        }
        let mut choices = vec![None];
        choices.extend(adj.neighbors(v).into_iter().map(Some));
        for c in choices {
            f.push(c);
            let mut padded = f.clone();
            padded.resize(adj.n, None);
            if is_candidate(adj, &padded) {
                go(adj, f, out);
            }
            f.pop();
        }
    }
    let mut out = Vec::new();
    go(adj, &mut Vec::with_capacity(adj.n), &mut out);
    out
}

pub fn domain_size(f: &[Option<usize>]) -> usize {
    f.iter().filter(|x| x.is_some()).count()
}

/// Largest domain size and all candidates reaching it.
pub fn maximizers(adj: &Adjacency) -> (usize, Vec<Vec<Option<usize>>>) {
    let all = all_candidates(adj);
    let best = all.iter().map(|f| domain_size(f)).max().unwrap_or(0);
    let winners = all.into_iter().filter(|f| domain_size(f) == best).collect();
    (best, winners)
}

/// Literal generalized-translation test over an explicit candidate list.
pub fn is_graphical(all: &[Vec<Option<usize>>], f: &[Option<usize>]) -> bool {
    let c = domain_size(f);
    (0..f.len())
        .filter(|&v| f[v].is_some())
        .all(|v| all.iter().filter(|g| g[v] == f[v]).all(|g| domain_size(g) <= c))
}

pub fn to_map(f: &[Option<usize>]) -> PartialVertexMap {
    PartialVertexMap::new(f.iter().map(|x| x.map(VertexId)).collect()).unwrap()
}

pub fn from_map(f: &PartialVertexMap) -> Vec<Option<usize>> {
    f.images().iter().map(|x| x.map(|v| v.0)).collect()
}

/// Random connected graph: a random spanning tree plus extra edges with
/// probability `p`.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = BTreeSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
}

pub fn random_signal(rng: &mut ChaCha8Rng, n: usize) -> Signal {
    Signal::new((0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()).unwrap()
}
