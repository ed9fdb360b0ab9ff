//! Depth-first branch and bound over partial vertex maps.
//!
//! Vertices are assigned in ascending index order (pinned vertices are
//! assigned up front). Each vertex goes to an unused neighbor or to ω. A
//! vertex entering the domain is checked against every domain vertex
//! already assigned: neighbors must land on neighbors of its image and
//! non-neighbors must not. Branches that have committed more ω
//! assignments than the current target allows are cut.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use crate::graph::{Graph, VertexId};
use crate::translations::PartialVertexMap;

use super::{ExhaustReason, SearchBudget};

pub(crate) const UNSET: u32 = u32::MAX;
pub(crate) const OMEGA: u32 = u32::MAX - 1;

/// Dense view of a graph for constant-time adjacency tests.
pub(crate) struct Problem {
    pub n: usize,
    adj: Vec<bool>,
    pub nbrs: Vec<Vec<u32>>,
}

impl Problem {
    pub fn new(g: &Graph) -> Self {
        let n = g.num_vertices();
        let mut adj = vec![false; n * n];
        let nbrs = g
            .vertices()
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .map(|w| {
                        adj[v.0 * n + w.0] = true;
                        w.0 as u32
                    })
                    .collect()
            })
            .collect();
        Problem { n, adj, nbrs }
    }

    #[inline]
    pub fn adjacent(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize * self.n + v as usize]
    }
}

#[derive(Clone)]
pub(crate) struct State {
    pub image: Vec<u32>,
    pub preimage: Vec<u32>,
    pub omegas: usize,
}

impl State {
    pub fn new(n: usize) -> Self {
        State { image: vec![UNSET; n], preimage: vec![UNSET; n], omegas: 0 }
    }

    /// Whether `v -> w` keeps the assignment a candidate. `w` must be a
    /// neighbor of `v`.
    #[inline]
    pub fn admits(&self, p: &Problem, v: u32, w: u32) -> bool {
        if self.preimage[w as usize] != UNSET {
            return false;
        }
        let mut linked = 0;
        for &u in &p.nbrs[v as usize] {
            let fu = self.image[u as usize];
            if fu < OMEGA {
                if !p.adjacent(fu, w) {
                    return false;
                }
                linked += 1;
            }
        }
        // images adjacent to w must all come from neighbors of v
        let hits = p.nbrs[w as usize]
            .iter()
            .filter(|&&x| self.preimage[x as usize] != UNSET)
            .count();
        hits == linked
    }

    #[inline]
    pub fn assign(&mut self, v: u32, w: u32) {
        self.image[v as usize] = w;
        if w == OMEGA {
            self.omegas += 1;
        } else {
            self.preimage[w as usize] = v;
        }
    }

    #[inline]
    pub fn unassign(&mut self, v: u32) {
        let w = self.image[v as usize];
        if w == OMEGA {
            self.omegas -= 1;
        } else {
            self.preimage[w as usize] = UNSET;
        }
        self.image[v as usize] = UNSET;
    }

    pub fn to_map(&self) -> PartialVertexMap {
        PartialVertexMap::from_raw(
            self.image
                .iter()
                .map(|&w| (w < OMEGA).then_some(VertexId(w as usize)))
                .collect(),
        )
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) enum Goal {
    /// All candidates of maximum domain size, never below `floor`.
    Maximize { floor: usize },
    /// Any one candidate with domain size at least `target`.
    Reach { target: usize },
    /// Every total candidate.
    Total,
}

pub(crate) struct Run {
    pub best: Option<usize>,
    pub witnesses: BTreeSet<PartialVertexMap>,
    pub cap_hit: bool,
    pub nodes: u64,
    pub exhausted: Option<ExhaustReason>,
}

/// State shared by the workers of one search.
struct Shared<'a> {
    problem: &'a Problem,
    order: Vec<u32>,
    goal: Goal,
    cap: usize,
    budget: &'a SearchBudget,
    start: Instant,
    best: AtomicUsize,
    nodes: AtomicU64,
    stop: AtomicBool,
}

struct Worker<'s, 'a> {
    shared: &'s Shared<'a>,
    state: State,
    best: Option<usize>,
    witnesses: BTreeSet<PartialVertexMap>,
    cap_hit: bool,
    local_nodes: u64,
    exhausted: Option<ExhaustReason>,
}

const FLUSH_EVERY: u64 = 1 << 12;

impl Worker<'_, '_> {
    /// Smallest domain size still worth reaching.
    fn floor(&self) -> usize {
        match self.shared.goal {
            Goal::Maximize { floor } => {
                floor.max(self.shared.best.load(Ordering::Relaxed)).max(self.best.unwrap_or(0))
            }
            Goal::Reach { target } => target,
            Goal::Total => self.shared.problem.n,
        }
    }

    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes > self.shared.budget.max_nodes {
            return self.give_up(ExhaustReason::NodeLimit(self.shared.budget.max_nodes));
        }
        if !self.local_nodes.is_multiple_of(FLUSH_EVERY) {
            return true;
        }
        self.flush()
    }

    fn give_up(&mut self, reason: ExhaustReason) -> bool {
        self.exhausted = Some(reason);
        self.shared.stop.store(true, Ordering::Relaxed);
        false
    }

    /// Publishes progress and checks the shared limits.
    fn flush(&mut self) -> bool {
        let s = self.shared;
        let seen = s.nodes.fetch_add(FLUSH_EVERY, Ordering::Relaxed) + FLUSH_EVERY;
        if s.stop.load(Ordering::Relaxed) {
            return false;
        }
        let reason = if seen > s.budget.max_nodes {
            Some(ExhaustReason::NodeLimit(s.budget.max_nodes))
        } else if s.start.elapsed() > s.budget.time_limit {
            Some(ExhaustReason::TimeLimit(s.budget.time_limit))
        } else {
            None
        };
        match reason {
            Some(reason) => self.give_up(reason),
            None => true,
        }
    }

    fn record_leaf(&mut self) {
        let n = self.shared.problem.n;
        let c = n - self.state.omegas;
        match self.shared.goal {
            Goal::Maximize { .. } => {
                match self.best {
                    Some(b) if c < b => return,
                    Some(b) if c == b => {}
                    _ => {
                        self.best = Some(c);
                        self.witnesses.clear();
                        self.cap_hit = false;
                        self.shared.best.fetch_max(c, Ordering::Relaxed);
                    }
                }
                self.insert_witness();
            }
            Goal::Reach { .. } => {
                self.best = Some(c);
                self.witnesses.insert(self.state.to_map());
                self.shared.stop.store(true, Ordering::Relaxed);
            }
            Goal::Total => {
                self.best = Some(c);
                self.insert_witness();
            }
        }
    }

    fn insert_witness(&mut self) {
        self.witnesses.insert(self.state.to_map());
        if self.witnesses.len() > self.shared.cap {
            self.witnesses.pop_last();
            self.cap_hit = true;
        }
    }

    /// Explores assignments of `order[depth..]`. Returns `false` once the
    /// search must stop.
    fn descend(&mut self, depth: usize) -> bool {
        if !self.tick() {
            return false;
        }
        let shared = self.shared;
        let Some(&v) = shared.order.get(depth) else {
            self.record_leaf();
            return !matches!(shared.goal, Goal::Reach { .. });
        };
        let p = shared.problem;
        for &w in &p.nbrs[v as usize] {
            if self.state.admits(p, v, w) {
                self.state.assign(v, w);
                let go_on = self.descend(depth + 1);
                self.state.unassign(v);
                if !go_on {
                    return false;
                }
            }
        }
        if self.state.omegas < p.n.saturating_sub(self.floor()) {
            self.state.assign(v, OMEGA);
            let go_on = self.descend(depth + 1);
            self.state.unassign(v);
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// Runs a search with the given pins already assigned. The branches for the
/// first free vertex are spread over `jobs` threads.
pub(crate) fn run(
    problem: &Problem,
    pins: &[(u32, u32)],
    goal: Goal,
    cap: usize,
    budget: &SearchBudget,
    jobs: usize,
) -> Run {
    let n = problem.n;
    let mut base = State::new(n);
    for &(v, w) in pins {
        base.assign(v, w);
    }
    let order: Vec<u32> = (0..n as u32).filter(|&v| base.image[v as usize] == UNSET).collect();
    let initial_floor = match goal {
        Goal::Maximize { floor } => floor,
        _ => 0,
    };
    let shared = Shared {
        problem,
        order,
        goal,
        cap: cap.max(1),
        budget,
        start: Instant::now(),
        best: AtomicUsize::new(initial_floor),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
    };
    let new_worker = |state: State| Worker {
        shared: &shared,
        state,
        best: None,
        witnesses: BTreeSet::new(),
        cap_hit: false,
        local_nodes: 0,
        exhausted: None,
    };

    let workers: Vec<Worker<'_, '_>> = match shared.order.first() {
        Some(&first) if jobs > 1 => {
            // one task per choice for the first free vertex, ω last
            let mut branches: Vec<State> = Vec::new();
            for &w in &problem.nbrs[first as usize] {
                if base.admits(problem, first, w) {
                    let mut s = base.clone();
                    s.assign(first, w);
                    branches.push(s);
                }
            }
            let mut s = base.clone();
            s.assign(first, OMEGA);
            branches.push(s);
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .expect("thread pool");
            pool.install(|| {
                use rayon::prelude::*;
                branches
                    .into_par_iter()
                    .map(|state| {
                        let mut w = new_worker(state);
                        let is_omega = w.state.image[first as usize] == OMEGA;
                        if !is_omega || w.state.omegas <= n.saturating_sub(w.floor()) {
                            w.descend(1);
                        }
                        w
                    })
                    .collect()
            })
        }
        _ => {
            let mut w = new_worker(base);
            w.descend(0);
            vec![w]
        }
    };

    let mut result = Run {
        best: None,
        witnesses: BTreeSet::new(),
        cap_hit: false,
        nodes: 0,
        exhausted: None,
    };
    let best = workers.iter().filter_map(|w| w.best).max();
    result.best = best;
    for w in workers {
        result.nodes += w.local_nodes;
        if result.exhausted.is_none() {
            result.exhausted = w.exhausted;
        }
        if w.best.is_some() && w.best == best {
            result.cap_hit |= w.cap_hit;
            result.witnesses.extend(w.witnesses);
        }
    }
    while result.witnesses.len() > shared.cap {
        result.witnesses.pop_last();
        result.cap_hit = true;
    }
    if matches!(goal, Goal::Reach { .. }) {
        // a found witness ends the search early; that is not exhaustion
        if !result.witnesses.is_empty() {
            result.exhausted = None;
        }
    }
    result
}
