//! Forcing a translation on a cyclic grid from a single assignment.
//!
//! On a cyclic grid with every length at least 5, a perfect translation
//! sending `v` to `v + δ` sends every neighbor `w` of `v` to `w + δ`; by
//! connectivity the whole map is the shift by `δ`.

use std::collections::VecDeque;

use crate::graph::{GridSpec, VertexId};

use super::{geometrical, PartialVertexMap, Shift, TranslationError};

fn seed_shift(
    spec: &GridSpec,
    seed: VertexId,
    image: VertexId,
) -> Result<Shift, TranslationError> {
    if !spec.satisfies_cyclic_hypotheses() {
        return Err(TranslationError::Hypothesis("cyclic grid with every length >= 5"));
    }
    let n = spec.num_vertices();
    for v in [seed, image] {
        if v.0 >= n {
            return Err(TranslationError::ImageOutOfRange { vertex: seed.0, image: v.0, n });
        }
    }
    Shift::all(spec.dims())
        .find(|s| spec.step(seed, s.dim, s.forward) == Some(image))
        .ok_or(TranslationError::NotAdjacent { vertex: seed, image })
}

/// The unique perfect translation with `f(seed) = image`: the shift by
/// `image - seed`.
pub fn contaminate(
    spec: &GridSpec,
    seed: VertexId,
    image: VertexId,
) -> Result<PartialVertexMap, TranslationError> {
    let shift = seed_shift(spec, seed, image)?;
    let f = geometrical(spec, shift)?;
    debug_assert_eq!(propagate_contamination(spec, seed, image).as_ref(), Ok(&f));
    Ok(f)
}

/// Builds the same map by literal breadth-first propagation: each vertex
/// whose image is known hands its displacement to its neighbors, and any
/// vertex reached twice must receive the same image both times.
pub fn propagate_contamination(
    spec: &GridSpec,
    seed: VertexId,
    image: VertexId,
) -> Result<PartialVertexMap, TranslationError> {
    let first = seed_shift(spec, seed, image)?;
    let n = spec.num_vertices();
    let mut displacement: Vec<Option<Shift>> = vec![None; n];
    let mut images: Vec<Option<VertexId>> = vec![None; n];
    displacement[seed.0] = Some(first);
    images[seed.0] = Some(image);
    let mut queue = VecDeque::from([seed]);
    while let Some(u) = queue.pop_front() {
        let delta = displacement[u.0].expect("queued vertices carry a displacement");
        for dim in 0..spec.dims() {
            for forward in [false, true] {
                let w = spec.step(u, dim, forward).expect("cyclic grids have no boundary");
                let target = spec.step(w, delta.dim, delta.forward);
                match images[w.0] {
                    None => {
                        images[w.0] = target;
                        displacement[w.0] = Some(delta);
                        queue.push_back(w);
                    }
                    Some(existing) if Some(existing) != target => {
                        return Err(TranslationError::Inconsistent { vertex: w });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    if let Some(v) = images.iter().position(Option::is_none) {
        // only possible on a disconnected graph
        return Err(TranslationError::Inconsistent { vertex: VertexId(v) });
    }
    Ok(PartialVertexMap::from_raw(images))
}
