//! Known non-geometrical candidate translations on small square noncyclic
//! grids. Black-hole vertices are the ones listed as `omega` in the map
//! files under `fixtures/`.

use crate::graph::GridSpec;
use crate::translations::PartialVertexMap;

const MAP_3X3: &str = include_str!("../fixtures/counterexample_3x3.map");
const MAP_4X4: &str = include_str!("../fixtures/counterexample_4x4.map");
const MAP_5X5: &str = include_str!("../fixtures/counterexample_5x5.map");

fn load(side: usize, text: &str) -> (GridSpec, PartialVertexMap) {
    let spec = GridSpec::noncyclic(&[side, side]).expect("valid fixture grid");
    let map = PartialVertexMap::parse(text).expect("valid fixture map");
    (spec, map)
}

/// Border walk with two interior black holes; 7 domain vertices.
pub fn counterexample_3x3() -> (GridSpec, PartialVertexMap) {
    load(3, MAP_3X3)
}

/// A 10-cycle plus two chains; 13 domain vertices.
pub fn counterexample_4x4() -> (GridSpec, PartialVertexMap) {
    load(4, MAP_4X4)
}

/// A 12-cycle plus two chains; 20 domain vertices.
pub fn counterexample_5x5() -> (GridSpec, PartialVertexMap) {
    load(5, MAP_5X5)
}

pub fn counterexamples() -> Vec<(GridSpec, PartialVertexMap)> {
    vec![counterexample_3x3(), counterexample_4x4(), counterexample_5x5()]
}
