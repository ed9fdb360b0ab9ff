//! The spectral baseline: Laplacian eigenbasis, graph Fourier transform and
//! translation by convolution with a delta, set against the graphical
//! shift of the same delta.

use graph_translations::spectral::{
    compare_translations, gft, graph_basis, igft, laplacian, spectral_translate, SUPPORT_THRESHOLD,
};
use graph_translations::translations::{apply_to_signal, geometrical, Shift};
use graph_translations::{grid_graph, GridSpec, Signal};

fn main() {
    let spec = GridSpec::noncyclic(&[6, 5]).unwrap();
    let g = grid_graph(&spec);
    let basis = graph_basis(&g).unwrap();
    let l = laplacian(&g);
    println!("eigenvalues of {spec}: {:.3?} .. {:.3}", &basis.lambdas[..4], basis.lambdas[29]);
    println!("residual {:.1e}, orthonormality {:.1e}", basis.residual(&l), basis.orthonormality_error());

    let x = Signal::delta(30, spec.index(&[2, 2]));
    let back = igft(&basis, &gft(&basis, &x).unwrap()).unwrap();
    println!("round trip error {:.1e}", (back.values()[spec.index(&[2, 2]).0] - 1.0).abs());

    let shift = geometrical(&spec, Shift::new(0, true)).unwrap();
    let graphical = apply_to_signal(&shift, &x, 0.0).unwrap();
    let spectral = spectral_translate(&basis, &x, spec.index(&[3, 2]), false).unwrap();
    println!("{}", compare_translations(&x, &graphical, &spectral, SUPPORT_THRESHOLD).unwrap());
}
