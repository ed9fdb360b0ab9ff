//! Iterates translations from every vertex. Candidates never merge two
//! paths, so each orbit is a cycle or runs into a black hole.

use graph_translations::fixtures::counterexample_4x4;
use graph_translations::translations::{geometrical, orbits, OrbitKind, PartialVertexMap, Shift};
use graph_translations::GridSpec;

fn summary(label: &str, f: &PartialVertexMap) {
    let (mut periodic, mut absorbed) = (Vec::new(), Vec::new());
    for r in orbits(f) {
        match r.kind {
            OrbitKind::Periodic { period, .. } => periodic.push(period),
            OrbitKind::Absorbed { steps } => absorbed.push(steps),
        }
    }
    println!("{label}");
    println!("  periodic vertices: {} (periods {:?})", periodic.len(), dedup(periodic));
    println!("  absorbed vertices: {} (steps {:?})", absorbed.len(), dedup(absorbed));
}

fn dedup(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}

fn main() {
    let cyclic = GridSpec::cyclic(&[6, 5]).unwrap();
    summary("+e1 on cyclic 6x5", &geometrical(&cyclic, Shift::new(0, true)).unwrap());
    let flat = GridSpec::noncyclic(&[6, 5]).unwrap();
    summary("-e2 on noncyclic 6x5", &geometrical(&flat, Shift::new(1, false)).unwrap());
    let (spec, f) = counterexample_4x4();
    summary(&format!("non-geometrical translation on {spec}"), &f);
}
