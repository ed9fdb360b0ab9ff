//! Graphviz rendering of a translation: one arrow per domain vertex,
//! black-filled nodes for vertices sent to ω.

use std::fmt::Write;

use crate::graph::{Graph, GridSpec};
use crate::translations::{PartialVertexMap, TranslationError};

#[derive(Clone, Debug, Default)]
pub struct DotOptions<'a> {
    /// Also draw the graph's edges as undirected dotted lines.
    pub include_edges: bool,
    /// Label nodes with grid coordinates and pin them to their grid position.
    pub grid: Option<&'a GridSpec>,
}

pub fn export_dot(
    g: &Graph,
    f: &PartialVertexMap,
    options: &DotOptions<'_>,
) -> Result<String, TranslationError> {
    if f.len() != g.num_vertices() {
        return Err(TranslationError::SizeMismatch { map: f.len(), graph: g.num_vertices() });
    }
    let mut out = String::from("digraph translation {\n  node [shape=circle];\n");
    for v in g.vertices() {
        let mut attrs = Vec::new();
        if let Some(spec) = options.grid {
            let coord = spec.coord(v);
            let label: Vec<String> = coord.iter().map(usize::to_string).collect();
            attrs.push(format!("label=\"{}\"", label.join(",")));
            if coord.len() == 2 {
                attrs.push(format!("pos=\"{},{}!\"", coord[0], coord[1]));
            }
        }
        if f.get(v).is_none() {
            attrs.push("style=filled".into());
            attrs.push("fillcolor=black".into());
            attrs.push("fontcolor=white".into());
        }
        if attrs.is_empty() {
            writeln!(out, "  {v};").unwrap();
        } else {
            writeln!(out, "  {v} [{}];", attrs.join(", ")).unwrap();
        }
    }
    for (v, w) in f.pairs() {
        writeln!(out, "  {v} -> {w};").unwrap();
    }
    if options.include_edges {
        for (u, v) in g.edges() {
            writeln!(out, "  {u} -> {v} [dir=none, style=dotted, color=gray];").unwrap();
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::grid_graph;
    use crate::translations::{geometrical, Shift};

    fn arrows(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("->") && !l.contains("dir=none")).count()
    }

    fn filled(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("fillcolor=black")).count()
    }

    #[test]
    fn omega_on_an_edge() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let dot = export_dot(&g, &PartialVertexMap::omega(2), &DotOptions::default()).unwrap();
        assert_eq!((arrows(&dot), filled(&dot)), (0, 2));
    }

    #[test]
    fn counterexample_rendering() {
        let (spec, f) = fixtures::counterexample_3x3();
        let g = grid_graph(&spec);
        let dot = export_dot(&g, &f, &DotOptions { grid: Some(&spec), ..DotOptions::default() }).unwrap();
        assert_eq!((arrows(&dot), filled(&dot)), (7, 2));
        assert!(dot.contains("label=\"1,1\""));
    }

    #[test]
    fn shift_rendering_with_edges() {
        let spec = GridSpec::noncyclic(&[3, 3]).unwrap();
        let g = grid_graph(&spec);
        let f = geometrical(&spec, Shift::new(0, true)).unwrap();
        let dot = export_dot(&g, &f, &DotOptions { include_edges: true, grid: None }).unwrap();
        assert_eq!((arrows(&dot), filled(&dot)), (6, 3));
        assert_eq!(dot.lines().filter(|l| l.contains("dir=none")).count(), 12);
        assert_eq!(dot, export_dot(&g, &f, &DotOptions { include_edges: true, grid: None }).unwrap());
    }
}
