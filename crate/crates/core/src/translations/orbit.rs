use crate::graph::VertexId;

use super::PartialVertexMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitKind {
    /// The iterates revisit a vertex. `entry_offset` is the index of the
    /// first revisited vertex in the orbit; for an injective map it is 0.
    Periodic { period: usize, entry_offset: usize },
    /// `f^steps(v) = ω`.
    Absorbed { steps: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub kind: OrbitKind,
    /// `v, f(v), f²(v), ..` up to the last vertex before ω or before the
    /// first repetition.
    pub visited: Vec<VertexId>,
}

impl OrbitReport {
    /// Periodic with entry offset 0, or absorbed. Always true for
    /// candidate translations.
    pub fn is_well_formed(&self) -> bool {
        !matches!(self.kind, OrbitKind::Periodic { entry_offset, .. } if entry_offset != 0)
    }
}

/// Iterates `f` from `v` until it reaches ω or repeats a vertex.
pub fn orbit(f: &PartialVertexMap, v: VertexId) -> OrbitReport {
    let mut position: Vec<Option<usize>> = vec![None; f.len()];
    let mut visited = Vec::new();
    let mut current = v;
    loop {
        position[current.0] = Some(visited.len());
        visited.push(current);
        match f.get(current) {
            None => {
                return OrbitReport { kind: OrbitKind::Absorbed { steps: visited.len() }, visited }
            }
            Some(next) => {
                if let Some(entry_offset) = position[next.0] {
                    let period = visited.len() - entry_offset;
                    return OrbitReport {
                        kind: OrbitKind::Periodic { period, entry_offset },
                        visited,
                    };
                }
                current = next;
            }
        }
    }
}

/// Orbit of every vertex, ascending.
pub fn orbits(f: &PartialVertexMap) -> Vec<OrbitReport> {
    (0..f.len()).map(|v| orbit(f, VertexId(v))).collect()
}
