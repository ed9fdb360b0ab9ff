//! Builds cyclic and noncyclic grids, walks coordinates and slices, and
//! recovers the grid shape from a bare edge list.
//!
//!     cargo run --example grids

use graph_translations::graph::{recognize_grid, slice};
use graph_translations::{grid_graph, Graph, GridSpec};

fn main() {
    for spec in [GridSpec::noncyclic(&[6, 5]).unwrap(), GridSpec::cyclic(&[6, 5]).unwrap()] {
        let g = grid_graph(&spec);
        println!("{spec}: {} vertices, {} edges", g.num_vertices(), g.num_edges());

        let corner = spec.index(&[0, 0]);
        let centre = spec.index(&[2, 2]);
        println!("  degree at (0,0): {}, at (2,2): {}", g.degree(corner), g.degree(centre));
        let around: Vec<String> = g.neighbors(corner).iter().map(|&v| format!("{:?}", spec.coord(v))).collect();
        println!("  neighbors of (0,0): {}", around.join(" "));
    }

    let spec = GridSpec::noncyclic(&[4, 3]).unwrap();
    let last = slice(&spec, 3, 0).unwrap();
    println!("slice x=3 of {spec}: {:?}", last.iter().map(|v| v.0).collect::<Vec<_>>());

    let text = grid_graph(&spec).to_edge_list();
    let parsed = Graph::parse_edge_list(&text).unwrap();
    let shapes: Vec<String> = recognize_grid(&parsed).iter().map(ToString::to_string).collect();
    println!("edge list of {} lines is recognized as: {}", text.lines().count(), shapes.join(", "));
}
