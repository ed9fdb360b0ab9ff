//! Exhaustive search for the candidates with the largest domain on a
//! noncyclic grid.
//!
//!     cargo run --release --example max_domain -- 8 3
//!
//! With the seeded lower bound the search only explores branches that can
//! match the first-axis shift.

use std::time::Instant;

use graph_translations::search::{grid_lower_bound, max_domain_translations_with, SearchBudget, SearchConfig};
use graph_translations::translations::matching_shifts;
use graph_translations::{grid_graph, GridSpec};

fn main() {
    let lengths: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("grid lengths")).collect();
    let lengths = if lengths.is_empty() { vec![8, 3] } else { lengths };
    let spec = GridSpec::noncyclic(&lengths).unwrap();
    let g = grid_graph(&spec);

    let config = SearchConfig {
        budget: SearchBudget { max_vertices: 64, ..SearchBudget::default() },
        lower_bound: Some(grid_lower_bound(&spec).unwrap()),
        ..SearchConfig::default()
    };
    let start = Instant::now();
    let out = max_domain_translations_with(&g, &config);
    print!("{spec} ({:.2?})\n{out}", start.elapsed());
    for w in &out.witnesses {
        match matching_shifts(&spec, w).first() {
            Some(s) => println!("  {s}"),
            None => println!("  not geometrical:\n{}", w.to_text()),
        }
    }
}
