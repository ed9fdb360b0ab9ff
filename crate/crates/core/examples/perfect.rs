//! Perfect translations: total maps on cyclic grids are exactly the 2d
//! elementary shifts, and noncyclic grids have none.

use graph_translations::search::{perfect_translations_on_grid, SearchBudget};
use graph_translations::translations::{contaminate, matching_shifts};
use graph_translations::{GridSpec, VertexId};

fn main() {
    let budget = SearchBudget::default();
    for spec in [
        GridSpec::cyclic(&[5, 5]).unwrap(),
        GridSpec::cyclic(&[6, 5, 5]).unwrap(),
        GridSpec::cyclic(&[4, 4]).unwrap(),
        GridSpec::noncyclic(&[4, 3]).unwrap(),
    ] {
        let found = perfect_translations_on_grid(&spec, &budget).unwrap();
        let names: Vec<String> = found
            .iter()
            .map(|f| matching_shifts(&spec, f).first().map_or("other".into(), ToString::to_string))
            .collect();
        println!("{spec}: {} [{}]", found.len(), names.join(" "));
    }

    // one seed pins the whole map
    let spec = GridSpec::cyclic(&[6, 5]).unwrap();
    let f = contaminate(&spec, VertexId(0), spec.index(&[0, 4])).unwrap();
    println!("seed (0,0) -> (0,4) on {spec} spreads to {}", matching_shifts(&spec, &f)[0]);
}
