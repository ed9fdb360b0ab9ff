//! Prints a Graphviz drawing of the 5x5 non-geometrical translation. Pipe
//! it through `neato -n -Tsvg` to keep the grid layout.

use graph_translations::fixtures::counterexample_5x5;
use graph_translations::grid_graph;
use graph_translations::signals::{export_dot, DotOptions};

fn main() {
    let (spec, f) = counterexample_5x5();
    let options = DotOptions { include_edges: true, grid: Some(&spec) };
    print!("{}", export_dot(&grid_graph(&spec), &f, &options).unwrap());
}
