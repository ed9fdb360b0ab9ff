//! Verifies and classifies the bundled non-geometrical translations on
//! square noncyclic grids, next to the ordinary shifts.

use graph_translations::fixtures::counterexamples;
use graph_translations::search::SearchBudget;
use graph_translations::grid_graph;
use graph_translations::translations::{classify, geometrical, is_graphical, matching_shifts, GraphicalCheck, Shift};

fn main() {
    let budget = SearchBudget::default();
    for (spec, f) in counterexamples() {
        let g = grid_graph(&spec);
        let shift = geometrical(&spec, Shift::new(0, true)).unwrap();
        println!("{spec}");
        println!("  fixture: c={}, geometrical: {}", f.domain_size(), !matching_shifts(&spec, &f).is_empty());
        println!("  +e1 shift: c={}", shift.domain_size());
        match is_graphical(&g, &f, &budget).unwrap() {
            GraphicalCheck::NotMaximal { pinned, larger } => println!(
                "  not maximal: keeping {} -> {} allows c={}",
                pinned,
                f.get(pinned).unwrap(),
                larger.domain_size()
            ),
            _ => println!("  {}", classify(&g, &f, &budget).unwrap()),
        }
    }
}
