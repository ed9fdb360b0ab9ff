//! Partial vertex maps `f : V -> V ∪ {ω}` and the properties that make them
//! translations.
//!
//! A map is a *candidate* translation when it is injective on its domain
//! (the vertices not sent to ω), sends every domain vertex to a neighbor,
//! and preserves both adjacency and non-adjacency between domain vertices.
//! A candidate is *graphical* when no candidate agreeing with it on any one
//! of its assignments has a larger domain, and *perfect* when it is a total
//! bijection.

mod contamination;
mod orbit;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GridSpec, VertexId};
use crate::search::{self, PinnedExcess, SearchBudget};
use crate::signals::Signal;

pub use contamination::{contaminate, propagate_contamination};
pub use orbit::{orbit, orbits, OrbitKind, OrbitReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TranslationError {
    #[error("map has {map} entries but the graph has {graph} vertices")]
    SizeMismatch { map: usize, graph: usize },
    #[error("image {image} of vertex {vertex} is out of range for {n} vertices")]
    ImageOutOfRange { vertex: usize, image: usize, n: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("dimension {dim} out of range for a {d}-dimensional grid")]
    InvalidDimension { dim: usize, d: usize },
    #[error("seed image {image} is not adjacent to seed vertex {vertex}")]
    NotAdjacent { vertex: VertexId, image: VertexId },
    #[error("hypothesis violated: {0}")]
    Hypothesis(&'static str),
    #[error("contamination reached vertex {vertex} with two different images")]
    Inconsistent { vertex: VertexId },
}

/// A map from vertices to vertices or the black hole ω. `None` stands
/// for ω, so the derived order places ω before every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialVertexMap {
    image: Vec<Option<VertexId>>,
}

impl PartialVertexMap {
    /// Images must index into `[0, image.len())`.
    pub fn new(image: Vec<Option<VertexId>>) -> Result<Self, TranslationError> {
        let n = image.len();
        for (v, w) in image.iter().enumerate() {
            if let Some(w) = w {
                if w.0 >= n {
                    return Err(TranslationError::ImageOutOfRange { vertex: v, image: w.0, n });
                }
            }
        }
        Ok(PartialVertexMap { image })
    }

    pub(crate) fn from_raw(image: Vec<Option<VertexId>>) -> Self {
        debug_assert!(image.iter().flatten().all(|w| w.0 < image.len()));
        PartialVertexMap { image }
    }

    /// `f_ω`: every vertex goes to the black hole.
    pub fn omega(n: usize) -> Self {
        PartialVertexMap { image: vec![None; n] }
    }

    pub fn identity(n: usize) -> Self {
        PartialVertexMap { image: (0..n).map(|v| Some(VertexId(v))).collect() }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn get(&self, v: VertexId) -> Option<VertexId> {
        self.image[v.0]
    }

    pub fn images(&self) -> &[Option<VertexId>] {
        &self.image
    }

    /// Vertices not sent to ω, ascending.
    pub fn domain(&self) -> Vec<VertexId> {
        self.pairs().map(|(v, _)| v).collect()
    }

    pub fn domain_size(&self) -> usize {
        self.image.iter().filter(|w| w.is_some()).count()
    }

    /// Vertices sent to ω, ascending.
    pub fn black_holes(&self) -> Vec<VertexId> {
        (0..self.len()).map(VertexId).filter(|&v| self.get(v).is_none()).collect()
    }

    /// `(v, f(v))` for every domain vertex, ascending in `v`.
    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.image
            .iter()
            .enumerate()
            .filter_map(|(v, w)| w.map(|w| (VertexId(v), w)))
    }

    /// `g ∘ self`: apply `self`, then `g`. ω is absorbing.
    pub fn then(&self, g: &PartialVertexMap) -> PartialVertexMap {
        assert_eq!(self.len(), g.len(), "composed maps must have the same size");
        PartialVertexMap {
            image: self.image.iter().map(|w| w.and_then(|w| g.get(w))).collect(),
        }
    }

    fn check_size(&self, g: &Graph) -> Result<(), TranslationError> {
        if self.len() != g.num_vertices() {
            return Err(TranslationError::SizeMismatch { map: self.len(), graph: g.num_vertices() });
        }
        Ok(())
    }

    /// One `<v> -> <w>` or `<v> -> omega` line per vertex, ascending.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, w) in self.image.iter().enumerate() {
            match w {
                Some(w) => out.push_str(&format!("{v} -> {w}\n")),
                None => out.push_str(&format!("{v} -> omega\n")),
            }
        }
        out
    }

    /// Parses the map file format. Lines must list vertices `0, 1, ..`
    /// in ascending order with no gaps or repeats.
    pub fn parse(text: &str) -> Result<Self, TranslationError> {
        let mut image = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let raw = raw.trim();
            if raw.is_empty() {
                continue;
            }
            let err = |message: String| TranslationError::Parse { line, message };
            let (lhs, rhs) = raw
                .split_once("->")
                .ok_or_else(|| err(format!("expected `<v> -> <w|omega>`, found `{raw}`")))?;
            let v: usize = lhs
                .trim()
                .parse()
                .map_err(|_| err(format!("bad vertex `{}`", lhs.trim())))?;
            let w = match rhs.trim() {
                "omega" => None,
                t => Some(VertexId(t.parse().map_err(|_| err(format!("bad image `{t}`")))?)),
            };
            match v.cmp(&image.len()) {
                std::cmp::Ordering::Less => return Err(err(format!("duplicate vertex {v}"))),
                std::cmp::Ordering::Greater => {
                    return Err(err(format!("missing vertex {}", image.len())))
                }
                std::cmp::Ordering::Equal => image.push(w),
            }
        }
        Self::new(image)
    }
}

impl FromStr for PartialVertexMap {
    type Err = TranslationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// `(g ∘ f)(v) = g(f(v))`, ω when either step hits ω.
pub fn compose(f: &PartialVertexMap, g: &PartialVertexMap) -> PartialVertexMap {
    f.then(g)
}

/// First property a map breaks, found by scanning injectivity, then the
/// neighbor rule, then edge preservation, each in ascending vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Two domain vertices share an image.
    NotInjective { first: VertexId, second: VertexId, image: VertexId },
    /// `f(v)` is not a neighbor of `v`.
    NotNeighbor { vertex: VertexId, image: VertexId },
    /// `u` and `v` are adjacent but their images are not.
    EdgeBroken { u: VertexId, v: VertexId },
    /// `u` and `v` are not adjacent but their images are.
    NonEdgeCreated { u: VertexId, v: VertexId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotInjective { first, second, image } => {
                write!(f, "not injective: {first} and {second} both map to {image}")
            }
            Violation::NotNeighbor { vertex, image } => {
                write!(f, "image {image} is not a neighbor of {vertex}")
            }
            Violation::EdgeBroken { u, v } => {
                write!(f, "edge {u}-{v} is not mapped to an edge")
            }
            Violation::NonEdgeCreated { u, v } => {
                write!(f, "non-adjacent {u}, {v} are mapped to adjacent vertices")
            }
        }
    }
}

/// Checks the candidate properties, returning the first violation.
pub fn candidate_violation(
    g: &Graph,
    f: &PartialVertexMap,
) -> Result<Option<Violation>, TranslationError> {
    f.check_size(g)?;
    let mut preimage: Vec<Option<VertexId>> = vec![None; g.num_vertices()];
    for (v, w) in f.pairs() {
        if let Some(first) = preimage[w.0] {
            return Ok(Some(Violation::NotInjective { first, second: v, image: w }));
        }
        preimage[w.0] = Some(v);
    }
    for (v, w) in f.pairs() {
        if !g.are_adjacent(v, w) {
            return Ok(Some(Violation::NotNeighbor { vertex: v, image: w }));
        }
    }
    let pairs: Vec<_> = f.pairs().collect();
    for (i, &(u, fu)) in pairs.iter().enumerate() {
        for &(v, fv) in &pairs[i + 1..] {
            match (g.are_adjacent(u, v), g.are_adjacent(fu, fv)) {
                (true, false) => return Ok(Some(Violation::EdgeBroken { u, v })),
                (false, true) => return Ok(Some(Violation::NonEdgeCreated { u, v })),
                _ => {}
            }
        }
    }
    Ok(None)
}

pub fn is_candidate(g: &Graph, f: &PartialVertexMap) -> Result<bool, TranslationError> {
    Ok(candidate_violation(g, f)?.is_none())
}

/// A candidate defined on every vertex; injective and total on a finite
/// set, hence bijective.
pub fn is_perfect(g: &Graph, f: &PartialVertexMap) -> Result<bool, TranslationError> {
    f.check_size(g)?;
    Ok(f.domain_size() == g.num_vertices() && g.num_vertices() > 0 && is_candidate(g, f)?)
}

/// Outcome of the graphical-translation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphicalCheck {
    Graphical { c: usize },
    NotCandidate(Violation),
    /// A candidate agreeing with `f` on `pinned` has a larger domain.
    NotMaximal { pinned: VertexId, larger: PartialVertexMap },
    /// The search for a larger candidate pinned at `pinned` ran out of budget.
    Undecided { pinned: Option<VertexId> },
}

impl GraphicalCheck {
    /// `None` when undecided.
    pub fn decision(&self) -> Option<bool> {
        match self {
            GraphicalCheck::Graphical { .. } => Some(true),
            GraphicalCheck::Undecided { .. } => None,
            _ => Some(false),
        }
    }
}

/// Checks that `f` is a candidate and that for every domain vertex `v`, no
/// candidate `h` with `h(v) = f(v)` has a larger domain.
pub fn is_graphical(
    g: &Graph,
    f: &PartialVertexMap,
    budget: &SearchBudget,
) -> Result<GraphicalCheck, TranslationError> {
    if let Some(violation) = candidate_violation(g, f)? {
        return Ok(GraphicalCheck::NotCandidate(violation));
    }
    let c = f.domain_size();
    if c == g.num_vertices() {
        // nothing can beat a total map
        return Ok(GraphicalCheck::Graphical { c });
    }
    if g.num_vertices() > budget.max_vertices {
        return Ok(GraphicalCheck::Undecided { pinned: None });
    }
    for (v, w) in f.pairs() {
        match search::pinned_excess(g, v, w, c, budget) {
            PinnedExcess::Found(larger) => {
                return Ok(GraphicalCheck::NotMaximal { pinned: v, larger })
            }
            PinnedExcess::None => {}
            PinnedExcess::Exhausted(_) => return Ok(GraphicalCheck::Undecided { pinned: Some(v) }),
        }
    }
    Ok(GraphicalCheck::Graphical { c })
}

/// Where a map sits in the chain perfect ⊂ graphical ⊂ candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TranslationClass {
    NotCandidate(Violation),
    /// A candidate that is not graphical, or whose maximality could not be
    /// decided within budget.
    Candidate { maximality_undecided: bool },
    Graphical { c: usize },
    Perfect,
}

impl fmt::Display for TranslationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TranslationClass::NotCandidate(v) => write!(f, "not a candidate ({v})"),
            TranslationClass::Candidate { maximality_undecided: false } => {
                write!(f, "candidate, not graphical")
            }
            TranslationClass::Candidate { maximality_undecided: true } => {
                write!(f, "candidate, maximality undecided")
            }
            TranslationClass::Graphical { c } => write!(f, "graphical, c={c}"),
            TranslationClass::Perfect => write!(f, "perfect"),
        }
    }
}

pub fn classify(
    g: &Graph,
    f: &PartialVertexMap,
    budget: &SearchBudget,
) -> Result<TranslationClass, TranslationError> {
    if is_perfect(g, f)? {
        return Ok(TranslationClass::Perfect);
    }
    Ok(match is_graphical(g, f, budget)? {
        GraphicalCheck::NotCandidate(v) => TranslationClass::NotCandidate(v),
        GraphicalCheck::Graphical { c } => TranslationClass::Graphical { c },
        GraphicalCheck::NotMaximal { .. } => TranslationClass::Candidate { maximality_undecided: false },
        GraphicalCheck::Undecided { .. } => TranslationClass::Candidate { maximality_undecided: true },
    })
}

/// Elementary grid shift `±e_dim`. Dimensions are 0-based; the text form is
/// 1-based (`+e1` shifts along the first dimension).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shift {
    pub dim: usize,
    pub forward: bool,
}

impl Shift {
    pub fn new(dim: usize, forward: bool) -> Self {
        Shift { dim, forward }
    }

    pub fn inverse(self) -> Self {
        Shift { dim: self.dim, forward: !self.forward }
    }

    /// The `2d` shifts of a `d`-dimensional grid.
    pub fn all(d: usize) -> impl Iterator<Item = Shift> {
        (0..d).flat_map(|dim| [Shift::new(dim, true), Shift::new(dim, false)])
    }
}

impl fmt::Display for Shift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}e{}", if self.forward { '+' } else { '-' }, self.dim + 1)
    }
}

impl FromStr for Shift {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("expected a shift like +e1 or -e2, found `{s}`");
        let (forward, rest) = match s.as_bytes().first() {
            Some(b'+') => (true, &s[1..]),
            Some(b'-') => (false, &s[1..]),
            _ => (true, s),
        };
        let k: usize = rest.strip_prefix('e').ok_or_else(bad)?.parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(bad());
        }
        Ok(Shift { dim: k - 1, forward })
    }
}

/// `f(v) = v + δ` when that stays on the grid, ω otherwise. On cyclic grids
/// the addition wraps and the map is total.
pub fn geometrical(spec: &GridSpec, shift: Shift) -> Result<PartialVertexMap, TranslationError> {
    if shift.dim >= spec.dims() {
        return Err(TranslationError::InvalidDimension { dim: shift.dim, d: spec.dims() });
    }
    Ok(PartialVertexMap {
        image: (0..spec.num_vertices())
            .map(|v| spec.step(VertexId(v), shift.dim, shift.forward))
            .collect(),
    })
}

/// Shifts `s` of `spec` with `geometrical(spec, s) == f`.
pub fn matching_shifts(spec: &GridSpec, f: &PartialVertexMap) -> Vec<Shift> {
    if f.len() != spec.num_vertices() {
        return Vec::new();
    }
    Shift::all(spec.dims())
        .filter(|&s| geometrical(spec, s).is_ok_and(|m| &m == f))
        .collect()
}

/// Transports `x` along `f`: `y[f(v)] = x[v]` on the domain, `fill` at
/// every vertex outside the image. Values of vertices sent to ω are lost.
pub fn apply_to_signal(
    f: &PartialVertexMap,
    x: &Signal,
    fill: f64,
) -> Result<Signal, TranslationError> {
    if x.len() != f.len() {
        return Err(TranslationError::SizeMismatch { map: f.len(), graph: x.len() });
    }
    let mut y = vec![fill; f.len()];
    for (v, w) in f.pairs() {
        y[w.0] = x.values()[v.0];
    }
    Ok(Signal::from_finite(y))
}
