//! Checks, grid by grid, whether every maximum-domain candidate is a shift
//! along the first axis. A grid only counts when the search completes.
//!
//!     cargo run --release --example conjecture_scan

use graph_translations::search::{grid_lower_bound, max_domain_translations_with, SearchBudget, SearchConfig};
use graph_translations::translations::matching_shifts;
use graph_translations::{grid_graph, GridSpec};

fn main() {
    let grids: [&[usize]; 6] = [&[3, 3], &[4, 4], &[5, 5], &[6, 5], &[8, 3], &[10, 4]];
    let budget = SearchBudget { max_vertices: 64, max_nodes: 200_000_000, ..SearchBudget::default() };
    for lengths in grids {
        let spec = GridSpec::noncyclic(lengths).unwrap();
        let config = SearchConfig {
            budget: budget.clone(),
            lower_bound: Some(grid_lower_bound(&spec).unwrap()),
            ..SearchConfig::default()
        };
        let out = max_domain_translations_with(&grid_graph(&spec), &config);
        if !out.is_complete() {
            println!("{spec}: incomplete, best so far {}", out.best_c);
            continue;
        }
        let odd = out.witnesses.iter().filter(|w| matching_shifts(&spec, w).is_empty()).count();
        let hyp = if spec.satisfies_noncyclic_hypotheses() { "meets" } else { "outside" };
        println!(
            "{spec} ({hyp} the hypotheses): best_c={} vs shift {}, {} witnesses, {odd} non-geometrical",
            out.best_c,
            grid_lower_bound(&spec).unwrap(),
            out.witnesses.len()
        );
    }
}
