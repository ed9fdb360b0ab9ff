use std::time::Instant;

use crate::graph::Graph;
use crate::translations::PartialVertexMap;

use super::engine::{Problem, State, OMEGA};
use super::{ExhaustReason, SearchBudget};

/// Every candidate translation of a graph, once each, in lexicographic
/// order of image sequences (ω first). A budget overrun ends the stream
/// with a single `Err`.
pub struct Candidates {
    problem: Problem,
    state: State,
    /// Next option index per vertex: 0 is ω, `k` is the `k`-th neighbor.
    cursor: Vec<usize>,
    depth: usize,
    at_leaf: bool,
    done: bool,
    nodes: u64,
    budget: SearchBudget,
    start: Instant,
}

pub fn enumerate_candidates(g: &Graph, budget: &SearchBudget) -> Candidates {
    let problem = Problem::new(g);
    let n = problem.n;
    Candidates {
        state: State::new(n),
        problem,
        cursor: vec![0; n],
        depth: 0,
        at_leaf: false,
        done: false,
        nodes: 0,
        budget: budget.clone(),
        start: Instant::now(),
    }
}

impl Candidates {
    pub fn nodes_expanded(&self) -> u64 {
        self.nodes
    }

    fn fail(&mut self, reason: ExhaustReason) -> Option<Result<PartialVertexMap, ExhaustReason>> {
        self.done = true;
        Some(Err(reason))
    }
}

impl Iterator for Candidates {
    type Item = Result<PartialVertexMap, ExhaustReason>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let n = self.problem.n;
        if self.nodes == 0 && !self.at_leaf && n > self.budget.max_vertices {
            return self.fail(ExhaustReason::TooManyVertices { n, max: self.budget.max_vertices });
        }
        loop {
            if self.at_leaf {
                self.at_leaf = false;
                if n == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
                self.state.unassign(self.depth as u32);
            }
            if self.depth == n {
                self.at_leaf = true;
                return Some(Ok(self.state.to_map()));
            }
            let v = self.depth;
            let degree = self.problem.nbrs[v].len();
            let mut moved = false;
            while self.cursor[v] <= degree {
                let k = self.cursor[v];
                self.cursor[v] += 1;
                let w = if k == 0 { OMEGA } else { self.problem.nbrs[v][k - 1] };
                if w == OMEGA || self.state.admits(&self.problem, v as u32, w) {
                    self.state.assign(v as u32, w);
                    self.depth += 1;
                    if self.depth < n {
                        self.cursor[self.depth] = 0;
                    }
                    moved = true;
                    break;
                }
            }
            if !moved {
                self.cursor[v] = 0;
                if v == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
                self.state.unassign(self.depth as u32);
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget.max_nodes {
                return self.fail(ExhaustReason::NodeLimit(self.budget.max_nodes));
            }
            if self.nodes.is_multiple_of(4096) && self.start.elapsed() > self.budget.time_limit {
                return self.fail(ExhaustReason::TimeLimit(self.budget.time_limit));
            }
        }
    }
}
