//! Plain-text (P2) PGM images and their mapping onto 2-D grid signals.
//!
//! Pixel `(row r, column c)` is grid coordinate `(c, r)`: columns run along
//! the first dimension, so a `+e1` shift moves the picture to the right.

use crate::graph::GridSpec;

use super::{Signal, SignalError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PgmImage {
    pub width: usize,
    pub height: usize,
    pub maxval: u16,
    /// Row-major pixel values in `[0, maxval]`.
    pub pixels: Vec<u16>,
}

impl PgmImage {
    pub fn new(width: usize, height: usize, maxval: u16, pixels: Vec<u16>) -> Result<Self, SignalError> {
        if width == 0 || height == 0 || maxval == 0 {
            return Err(SignalError::Shape("image dimensions and maxval must be positive".into()));
        }
        if pixels.len() != width * height {
            return Err(SignalError::Shape(format!(
                "{} pixels for a {width}x{height} image",
                pixels.len()
            )));
        }
        if let Some(p) = pixels.iter().find(|&&p| p > maxval) {
            return Err(SignalError::Shape(format!("pixel {p} exceeds maxval {maxval}")));
        }
        Ok(PgmImage { width, height, maxval, pixels })
    }

    pub fn pixel(&self, row: usize, col: usize) -> u16 {
        self.pixels[row * self.width + col]
    }

    /// Deterministic 8-bit test picture: a diagonal ramp with a bright disk
    /// and a dark bar, so shifts are easy to see.
    pub fn synthetic(width: usize, height: usize) -> Self {
        let (cx, cy) = (width as f64 * 0.4, height as f64 * 0.45);
        let radius = width.min(height) as f64 * 0.25;
        let mut pixels = Vec::with_capacity(width * height);
        for r in 0..height {
            for c in 0..width {
                let ramp = 40 + (150 * (r + c)) / (width + height).max(1);
                let (dx, dy) = (c as f64 - cx, r as f64 - cy);
                let value = if dx * dx + dy * dy <= radius * radius {
                    230 + (r + 2 * c) % 20
                } else if r >= height * 3 / 4 && c >= width / 2 {
                    10 + c % 7
                } else {
                    ramp
                };
                pixels.push(value.min(255) as u16);
            }
        }
        PgmImage { width, height, maxval: 255, pixels }
    }
}

/// Parses a P2 image. `#` starts a comment running to the end of the line.
pub fn read_pgm(text: &str) -> Result<PgmImage, SignalError> {
    let tokens: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .flat_map(|(i, line)| {
            let content = line.split('#').next().unwrap_or("");
            content.split_whitespace().map(move |t| (i + 1, t))
        })
        .collect();
    let err = |line: usize, message: String| SignalError::Pgm { line, message };
    let last_line = text.lines().count().max(1);

    match tokens.first() {
        Some((_, "P2")) => {}
        Some((line, "P5")) => return Err(err(*line, "binary PGM (P5) is not supported, use P2".into())),
        Some((line, other)) => return Err(err(*line, format!("expected magic `P2`, found `{other}`"))),
        None => return Err(err(1, "empty file".into())),
    }
    let mut it = tokens[1..].iter();
    let mut header = |what: &str| -> Result<usize, SignalError> {
        let (line, t) = it
            .next()
            .ok_or_else(|| err(last_line, format!("truncated header, missing {what}")))?;
        t.parse::<usize>()
            .map_err(|_| err(*line, format!("bad {what} `{t}`")))
    };
    let width = header("width")?;
    let height = header("height")?;
    let maxval = header("maxval")?;
    if width == 0 || height == 0 {
        return Err(err(tokens[0].0, "zero image dimension".into()));
    }
    if maxval == 0 || maxval > 65535 {
        return Err(err(tokens[0].0, format!("maxval {maxval} outside 1..=65535")));
    }
    let body = &tokens[4..];
    let count = width * height;
    if body.len() < count {
        return Err(err(
            last_line,
            format!("truncated data: {} of {count} pixels", body.len()),
        ));
    }
    if body.len() > count {
        return Err(err(body[count].0, "trailing data after the last pixel".into()));
    }
    let pixels = body
        .iter()
        .map(|&(line, t)| match t.parse::<usize>() {
            Ok(p) if p <= maxval => Ok(p as u16),
            Ok(p) => Err(err(line, format!("pixel {p} exceeds maxval {maxval}"))),
            Err(_) => Err(err(line, format!("bad pixel `{t}`"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PgmImage { width, height, maxval: maxval as u16, pixels })
}

/// Canonical P2 text: header on three lines, then one line per row.
pub fn write_pgm(img: &PgmImage) -> String {
    let mut out = format!("P2\n{} {}\n{}\n", img.width, img.height, img.maxval);
    for row in img.pixels.chunks(img.width) {
        let line: Vec<String> = row.iter().map(u16::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// The image as a signal on the noncyclic `width x height` grid.
pub fn image_to_signal(img: &PgmImage) -> (GridSpec, Signal) {
    let spec = GridSpec::noncyclic(&[img.width, img.height]).expect("positive dimensions");
    let mut values = vec![0.0; img.width * img.height];
    for r in 0..img.height {
        for c in 0..img.width {
            values[spec.index(&[c, r]).0] = f64::from(img.pixel(r, c));
        }
    }
    (spec, Signal::from_finite(values))
}

/// Inverse of [`image_to_signal`]; values are clamped to `[0, maxval]` and
/// rounded half up.
pub fn signal_to_image(spec: &GridSpec, x: &Signal, maxval: u16) -> Result<PgmImage, SignalError> {
    if spec.dims() != 2 || spec.is_cyclic() {
        return Err(SignalError::Shape(format!("{spec} is not a 2-D noncyclic grid")));
    }
    if x.len() != spec.num_vertices() {
        return Err(SignalError::WrongLength { expected: spec.num_vertices(), found: x.len() });
    }
    let (width, height) = (spec.lengths()[0], spec.lengths()[1]);
    let top = f64::from(maxval);
    let mut pixels = Vec::with_capacity(width * height);
    for r in 0..height {
        for c in 0..width {
            let v = x.values()[spec.index(&[c, r]).0];
            pixels.push((v + 0.5).floor().clamp(0.0, top) as u16);
        }
    }
    PgmImage::new(width, height, maxval, pixels)
}
