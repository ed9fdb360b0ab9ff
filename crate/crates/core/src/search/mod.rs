//! Exhaustive and branch-and-bound search for candidate translations.
//!
//! Every search runs under a [`SearchBudget`]. Running out of budget is
//! reported as [`Status::Exhausted`] together with the best result found so
//! far; a `Complete` outcome is exact.

mod engine;
mod enumerate;

use std::fmt;
use std::time::Duration;

use thiserror::Error;

use crate::graph::{grid_graph, Graph, GraphError, GridSpec, VertexId};
use crate::translations::{contaminate, is_perfect, PartialVertexMap};

use engine::{Goal, Problem};

pub use enumerate::{enumerate_candidates, Candidates};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_vertices: usize,
    pub max_nodes: u64,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_vertices: 30,
            max_nodes: 20_000_000_000,
            time_limit: Duration::from_secs(3600),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExhaustReason {
    #[error("graph has {n} vertices, budget allows {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("node limit of {0} reached")]
    NodeLimit(u64),
    #[error("time limit of {0:?} reached")]
    TimeLimit(Duration),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Complete,
    Exhausted(ExhaustReason),
}

/// Result of a maximum-domain search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: Status,
    /// Largest domain size found.
    pub best_c: usize,
    /// Candidates reaching `best_c`, sorted by image sequence and truncated
    /// to the witness cap.
    pub witnesses: Vec<PartialVertexMap>,
    pub witness_cap_hit: bool,
    /// Search-tree nodes visited. With more than one job this depends on
    /// scheduling.
    pub nodes_expanded: u64,
}

impl SearchOutcome {
    pub fn is_complete(&self) -> bool {
        self.status == Status::Complete
    }
}

impl fmt::Display for SearchOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Complete => writeln!(f, "status: complete")?,
            Status::Exhausted(r) => writeln!(f, "status: exhausted ({r})")?,
        }
        writeln!(f, "best_c: {}", self.best_c)?;
        write!(f, "witnesses: {}", self.witnesses.len())?;
        if self.witness_cap_hit {
            write!(f, " (cap reached)")?;
        }
        writeln!(f)?;
        writeln!(f, "nodes_expanded: {}", self.nodes_expanded)
    }
}

/// Knobs beyond the budget.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub budget: SearchBudget,
    pub witness_cap: usize,
    /// Worker threads; the choices for the first vertex are split among them.
    pub jobs: usize,
    /// A domain size known to be reachable. Branches that cannot reach it
    /// are cut from the start. If nothing reaches it the search is rerun
    /// without it.
    pub lower_bound: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: SearchBudget::default(), witness_cap: 64, jobs: 1, lower_bound: None }
    }
}

fn too_big(g: &Graph, budget: &SearchBudget) -> Option<ExhaustReason> {
    let n = g.num_vertices();
    (n > budget.max_vertices).then_some(ExhaustReason::TooManyVertices { n, max: budget.max_vertices })
}

/// Candidates with the largest domain, with the default configuration.
pub fn max_domain_translations(g: &Graph, budget: &SearchBudget) -> SearchOutcome {
    let config = SearchConfig { budget: budget.clone(), ..SearchConfig::default() };
    max_domain_translations_with(g, &config)
}

pub fn max_domain_translations_with(g: &Graph, config: &SearchConfig) -> SearchOutcome {
    if let Some(reason) = too_big(g, &config.budget) {
        return SearchOutcome {
            status: Status::Exhausted(reason),
            best_c: 0,
            witnesses: Vec::new(),
            witness_cap_hit: false,
            nodes_expanded: 0,
        };
    }
    let problem = Problem::new(g);
    let floor = config.lower_bound.unwrap_or(0).min(g.num_vertices());
    let mut run = engine::run(
        &problem,
        &[],
        Goal::Maximize { floor },
        config.witness_cap,
        &config.budget,
        config.jobs,
    );
    if run.best.is_none() && run.exhausted.is_none() && floor > 0 {
        let nodes = run.nodes;
        run = engine::run(
            &problem,
            &[],
            Goal::Maximize { floor: 0 },
            config.witness_cap,
            &config.budget,
            config.jobs,
        );
        run.nodes += nodes;
    }
    SearchOutcome {
        status: run.exhausted.map_or(Status::Complete, Status::Exhausted),
        best_c: run.best.unwrap_or(0),
        witnesses: run.witnesses.into_iter().collect(),
        witness_cap_hit: run.cap_hit,
        nodes_expanded: run.nodes,
    }
}

/// Answer of a pinned maximum search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PinnedMax {
    Max(usize),
    /// `w` is not a neighbor of `v`, so no candidate maps `v` to `w`.
    NoCandidate,
    Exhausted { best_so_far: Option<usize>, reason: ExhaustReason },
}

/// Largest domain among candidates `h` with `h(v) = w`.
pub fn max_domain_with_pin(g: &Graph, v: VertexId, w: VertexId, budget: &SearchBudget) -> PinnedMax {
    if v.0 >= g.num_vertices() || w.0 >= g.num_vertices() || !g.are_adjacent(v, w) {
        return PinnedMax::NoCandidate;
    }
    if let Some(reason) = too_big(g, budget) {
        return PinnedMax::Exhausted { best_so_far: None, reason };
    }
    let problem = Problem::new(g);
    let run = engine::run(
        &problem,
        &[(v.0 as u32, w.0 as u32)],
        Goal::Maximize { floor: 0 },
        1,
        budget,
        1,
    );
    match run.exhausted {
        None => PinnedMax::Max(run.best.expect("the pin alone is a candidate")),
        Some(reason) => PinnedMax::Exhausted { best_so_far: run.best, reason },
    }
}

/// Answer of [`pinned_excess`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PinnedExcess {
    /// A candidate with the pin and a domain larger than the threshold.
    Found(PartialVertexMap),
    None,
    Exhausted(ExhaustReason),
}

/// Looks for a candidate `h` with `h(v) = w` and more than `c` domain
/// vertices. Cheaper than [`max_domain_with_pin`] because every branch
/// that cannot beat `c` is cut.
pub fn pinned_excess(g: &Graph, v: VertexId, w: VertexId, c: usize, budget: &SearchBudget) -> PinnedExcess {
    if c >= g.num_vertices() || !g.are_adjacent(v, w) {
        return PinnedExcess::None;
    }
    if let Some(reason) = too_big(g, budget) {
        return PinnedExcess::Exhausted(reason);
    }
    let problem = Problem::new(g);
    let run = engine::run(
        &problem,
        &[(v.0 as u32, w.0 as u32)],
        Goal::Reach { target: c + 1 },
        1,
        budget,
        1,
    );
    match (run.witnesses.into_iter().next(), run.exhausted) {
        (Some(found), _) => PinnedExcess::Found(found),
        (None, None) => PinnedExcess::None,
        (None, Some(reason)) => PinnedExcess::Exhausted(reason),
    }
}

/// All perfect translations of `g`, by branch and bound over total maps.
pub fn perfect_translations(
    g: &Graph,
    budget: &SearchBudget,
) -> Result<Vec<PartialVertexMap>, ExhaustReason> {
    if let Some(reason) = too_big(g, budget) {
        return Err(reason);
    }
    if g.num_vertices() == 0 {
        return Ok(Vec::new());
    }
    let problem = Problem::new(g);
    let run = engine::run(&problem, &[], Goal::Total, usize::MAX, budget, 1);
    match run.exhausted {
        Some(reason) => Err(reason),
        None => Ok(run.witnesses.into_iter().collect()),
    }
}

/// Perfect translations of a grid. Cyclic grids with every length at
/// least 5 take the contamination path: each neighbor of vertex 0 seeds a
/// shift, which is then validated. Other grids fall back to
/// [`perfect_translations`].
pub fn perfect_translations_on_grid(
    spec: &GridSpec,
    budget: &SearchBudget,
) -> Result<Vec<PartialVertexMap>, ExhaustReason> {
    let g = grid_graph(spec);
    if !spec.satisfies_cyclic_hypotheses() {
        return perfect_translations(&g, budget);
    }
    let origin = VertexId(0);
    let mut found: Vec<PartialVertexMap> = g
        .neighbors(origin)
        .iter()
        .map(|&w| contaminate(spec, origin, w).expect("hypotheses checked, seed adjacent"))
        .filter(|f| is_perfect(&g, f).expect("sizes match"))
        .collect();
    found.sort();
    found.dedup();
    Ok(found)
}

/// Domain size of the shift along the first dimension of a noncyclic grid,
/// `(l_1 - 1) * prod_{k>1} l_k`. The largest candidate is at least this big.
pub fn grid_lower_bound(spec: &GridSpec) -> Result<usize, GraphError> {
    if spec.is_cyclic() {
        return Err(GraphError::InvalidGrid(
            "lower bound is for noncyclic grids; cyclic grids admit total shifts".into(),
        ));
    }
    let l = spec.lengths();
    Ok((l[0] - 1) * l[1..].iter().product::<usize>())
}
