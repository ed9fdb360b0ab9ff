//! Shifts a synthetic picture on its pixel grid two ways and writes the
//! results as PGM files.
//!
//!     cargo run --release --example image_demo -- /tmp/demo
//!
//! The graphical shift moves pixels and blanks the vacated columns. The
//! spectral one convolves with a translated impulse and smears the picture.

use std::fs;
use std::path::PathBuf;

use graph_translations::signals::{image_to_signal, signal_to_image, write_pgm, PgmImage};
use graph_translations::spectral::{compare_translations, grid_basis, spectral_translate, SUPPORT_THRESHOLD};
use graph_translations::translations::{apply_to_signal, geometrical, PartialVertexMap, Shift};

fn main() {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "image_demo".into()));
    fs::create_dir_all(&out).unwrap();
    let steps = 4;

    let img = PgmImage::synthetic(32, 32);
    let (spec, x) = image_to_signal(&img);
    let one = geometrical(&spec, Shift::new(0, true)).unwrap();
    let f = (1..steps).fold(one.clone(), |acc: PartialVertexMap, _| acc.then(&one));
    let graphical = apply_to_signal(&f, &x, 0.0).unwrap();

    let basis = grid_basis(&spec).unwrap();
    let spectral = spectral_translate(&basis, &x, spec.index(&[steps, 0]), false).unwrap();

    for (name, signal) in [("original", &x), ("graphical", &graphical), ("spectral", &spectral)] {
        let pgm = signal_to_image(&spec, signal, img.maxval).unwrap();
        fs::write(out.join(format!("{name}.pgm")), write_pgm(&pgm)).unwrap();
    }
    println!("{}", compare_translations(&x, &graphical, &spectral, SUPPORT_THRESHOLD).unwrap());
    println!("images written to {}", out.display());
}
