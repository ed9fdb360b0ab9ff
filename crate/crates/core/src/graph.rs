//! Simple symmetric graphs, grid-graph generators, slices, and the edge-list
//! text format.
//!
//! Grid vertices are indexed row-major: for lengths `(l_1, .., l_d)` the
//! coordinate `v` has index `sum_i v[i] * prod_{k>i} l_k`, so the last
//! coordinate varies fastest. Every file format and fixture in this crate
//! relies on that encoding.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Dense vertex index in `[0, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for VertexId {
    fn from(v: usize) -> Self {
        VertexId(v)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("slice value {value} out of range for dimension {dim} of length {len}")]
    SliceOutOfRange { value: usize, dim: usize, len: usize },
    #[error("dimension {dim} out of range for a {d}-dimensional grid")]
    DimensionOutOfRange { dim: usize, d: usize },
}

/// Simple symmetric graph with sorted, duplicate-free neighbor lists.
///
/// Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
}

impl Graph {
    /// Builds a graph from undirected edges. Each edge may be given in either
    /// orientation but only once.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut lists: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            lists[u].push(VertexId(v));
            lists[v].push(VertexId(u));
        }
        for (u, list) in lists.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0].0;
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Self::from_sorted_lists(lists))
    }

    fn from_sorted_lists(lists: Vec<Vec<VertexId>>) -> Self {
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        let mut targets = Vec::with_capacity(lists.iter().map(Vec::len).sum());
        offsets.push(0);
        for list in lists {
            targets.extend(list);
            offsets.push(targets.len());
        }
        Graph { offsets, targets }
    }

    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn num_edges(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.num_vertices()).map(VertexId)
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.targets[self.offsets[v.0]..self.offsets[v.0 + 1]]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v.0 + 1] - self.offsets[v.0]
    }

    /// `true` iff `(u, v)` is an edge. Never true for `u == v`.
    pub fn are_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![VertexId(0)];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in self.neighbors(u) {
                if !seen[w.0] {
                    seen[w.0] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Writes the edge-list format: `<n> <m>` then one `<u> <v>` line per
    /// edge with `u < v`.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.num_vertices(), self.num_edges());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list format. Errors carry 1-based line numbers.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (header_line, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            message: "missing header `<n> <m>`".into(),
        })?;
        let [n, m] = parse_pair(header_line, header, "header `<n> <m>`")?;

        let mut lists: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        let mut count = 0;
        for (line, text) in lines {
            let [u, v] = parse_pair(line, text, "edge `<u> <v>`")?;
            let err = |message: String| GraphError::Parse { line, message };
            if u >= n || v >= n {
                return Err(err(format!(
                    "vertex {} out of range for {n} vertices",
                    u.max(v)
                )));
            }
            if u == v {
                return Err(err(format!("self-loop on vertex {u}")));
            }
            if lists[u].contains(&VertexId(v)) {
                return Err(err(format!("duplicate edge {} {}", u.min(v), u.max(v))));
            }
            lists[u].push(VertexId(v));
            lists[v].push(VertexId(u));
            count += 1;
        }
        if count != m {
            return Err(GraphError::Parse {
                line: header_line,
                message: format!("header declares {m} edges but {count} were listed"),
            });
        }
        for list in &mut lists {
            list.sort_unstable();
        }
        Ok(Self::from_sorted_lists(lists))
    }
}

fn parse_pair(line: usize, text: &str, what: &str) -> Result<[usize; 2], GraphError> {
    let err = || GraphError::Parse {
        line,
        message: format!("expected {what}, found `{text}`"),
    };
    let mut it = text.split_whitespace();
    let a = it.next().and_then(|t| t.parse().ok()).ok_or_else(err)?;
    let b = it.next().and_then(|t| t.parse().ok()).ok_or_else(err)?;
    if it.next().is_some() {
        return Err(err());
    }
    Ok([a, b])
}

/// Shape of a grid graph: per-dimension lengths and whether it wraps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridSpec {
    lengths: Vec<usize>,
    cyclic: bool,
}

impl GridSpec {
    /// Requires `d >= 1` and every length `>= 1`; cyclic grids need every
    /// length `>= 3`, otherwise the wrap edges would be loops or duplicates.
    pub fn new(lengths: Vec<usize>, cyclic: bool) -> Result<Self, GraphError> {
        if lengths.is_empty() {
            return Err(GraphError::InvalidGrid("at least one dimension required".into()));
        }
        if let Some(&l) = lengths.iter().find(|&&l| l == 0) {
            return Err(GraphError::InvalidGrid(format!("dimension length {l}")));
        }
        if cyclic {
            if let Some(&l) = lengths.iter().find(|&&l| l < 3) {
                return Err(GraphError::InvalidGrid(format!(
                    "cyclic grids need every length >= 3, got {l}"
                )));
            }
        }
        Ok(GridSpec { lengths, cyclic })
    }

    pub fn noncyclic(lengths: &[usize]) -> Result<Self, GraphError> {
        Self::new(lengths.to_vec(), false)
    }

    pub fn cyclic(lengths: &[usize]) -> Result<Self, GraphError> {
        Self::new(lengths.to_vec(), true)
    }

    pub fn dims(&self) -> usize {
        self.lengths.len()
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn num_vertices(&self) -> usize {
        self.lengths.iter().product()
    }

    fn stride(&self, dim: usize) -> usize {
        self.lengths[dim + 1..].iter().product()
    }

    /// Row-major index of a coordinate. Panics if the coordinate is out of
    /// range.
    pub fn index(&self, coord: &[usize]) -> VertexId {
        assert_eq!(coord.len(), self.dims(), "coordinate arity");
        let mut idx = 0;
        for (&c, &l) in coord.iter().zip(&self.lengths) {
            assert!(c < l, "coordinate {c} out of range {l}");
            idx = idx * l + c;
        }
        VertexId(idx)
    }

    pub fn coord(&self, v: VertexId) -> Vec<usize> {
        let mut rest = v.0;
        let mut coord = vec![0; self.dims()];
        for (c, &l) in coord.iter_mut().zip(&self.lengths).rev() {
            *c = rest % l;
            rest /= l;
        }
        coord
    }

    /// Vertex reached from `v` by moving `step` (+1 or -1) along `dim`.
    /// `None` when a noncyclic grid is left.
    pub fn step(&self, v: VertexId, dim: usize, forward: bool) -> Option<VertexId> {
        let len = self.lengths[dim];
        let stride = self.stride(dim);
        let c = (v.0 / stride) % len;
        let next = match (forward, self.cyclic) {
            (true, _) if c + 1 < len => c + 1,
            (true, true) => 0,
            (false, _) if c > 0 => c - 1,
            (false, true) => len - 1,
            _ => return None,
        };
        Some(VertexId(v.0 - c * stride + next * stride))
    }

    /// Hypotheses of the cyclic-grid results: cyclic and every length >= 5.
    pub fn satisfies_cyclic_hypotheses(&self) -> bool {
        self.cyclic && self.lengths.iter().all(|&l| l >= 5)
    }

    /// Hypotheses of the noncyclic-grid results: noncyclic,
    /// `l_i >= 2 * prod_{k>i} l_k + 2` for every dimension but the last, and
    /// `l_d >= 3`.
    pub fn satisfies_noncyclic_hypotheses(&self) -> bool {
        if self.cyclic {
            return false;
        }
        let d = self.dims();
        (0..d - 1).all(|i| self.lengths[i] >= 2 * self.stride(i) + 2) && self.lengths[d - 1] >= 3
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.lengths.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", dims.join("x"))?;
        if self.cyclic {
            write!(f, " (cyclic)")?;
        }
        Ok(())
    }
}

/// Parses `6x5` style dimension lists into a noncyclic spec.
impl FromStr for GridSpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lengths = s
            .split(['x', 'X'])
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| GraphError::InvalidGrid(format!("cannot parse `{s}`, expected e.g. 6x5")))?;
        GridSpec::new(lengths, false)
    }
}

/// Generates the cyclic or noncyclic grid graph described by `spec`.
pub fn grid_graph(spec: &GridSpec) -> Graph {
    let n = spec.num_vertices();
    let lists = (0..n)
        .map(|i| {
            let v = VertexId(i);
            let mut list: Vec<VertexId> = (0..spec.dims())
                .flat_map(|dim| [spec.step(v, dim, false), spec.step(v, dim, true)])
                .flatten()
                .collect();
            list.sort_unstable();
            list.dedup();
            list
        })
        .collect();
    Graph::from_sorted_lists(lists)
}

/// All vertices whose coordinate along `dim` (0-based) equals `value`.
pub fn slice(spec: &GridSpec, value: usize, dim: usize) -> Result<Vec<VertexId>, GraphError> {
    if dim >= spec.dims() {
        return Err(GraphError::DimensionOutOfRange { dim, d: spec.dims() });
    }
    let len = spec.lengths[dim];
    if value >= len {
        return Err(GraphError::SliceOutOfRange { value, dim, len });
    }
    let stride = spec.stride(dim);
    Ok((0..spec.num_vertices())
        .filter(|i| (i / stride) % len == value)
        .map(VertexId)
        .collect())
}

/// Grid specs (lengths >= 2, cyclic or not) whose generated graph is
/// exactly `g`, vertex labels included.
pub fn recognize_grid(g: &Graph) -> Vec<GridSpec> {
    fn factorizations(n: usize, out: &mut Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        if n == 1 {
            if !prefix.is_empty() {
                out.push(prefix.clone());
            }
            return;
        }
        for f in 2..=n {
            if n.is_multiple_of(f) {
                prefix.push(f);
                factorizations(n / f, out, prefix);
                prefix.pop();
            }
        }
    }
    let mut shapes = Vec::new();
    factorizations(g.num_vertices(), &mut shapes, &mut Vec::new());
    shapes
        .into_iter()
        .flat_map(|lengths| [GridSpec::new(lengths.clone(), false), GridSpec::new(lengths, true)])
        .flatten()
        .filter(|spec| grid_graph(spec) == *g)
        .collect()
}
