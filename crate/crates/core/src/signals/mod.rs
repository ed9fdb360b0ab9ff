//! Real-valued signals on graph vertices and their text formats.

mod dot;
mod pgm;

use thiserror::Error;

use crate::graph::VertexId;

pub use dot::{export_dot, DotOptions};
pub use pgm::{image_to_signal, read_pgm, signal_to_image, write_pgm, PgmImage};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SignalError {
    #[error("signal value at vertex {0} is not finite")]
    NotFinite(usize),
    #[error("line {line}: `{text}` is not a number")]
    NotNumeric { line: usize, text: String },
    #[error("expected {expected} values, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("pgm line {line}: {message}")]
    Pgm { line: usize, message: String },
    #[error("{0}")]
    Shape(String),
}

/// Finite real values, one per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct Signal {
    values: Vec<f64>,
}

impl Signal {
    pub fn new(values: Vec<f64>) -> Result<Self, SignalError> {
        if let Some(i) = values.iter().position(|x| !x.is_finite()) {
            return Err(SignalError::NotFinite(i));
        }
        Ok(Signal { values })
    }

    pub(crate) fn from_finite(values: Vec<f64>) -> Self {
        debug_assert!(values.iter().all(|x| x.is_finite()));
        Signal { values }
    }

    pub fn zeros(n: usize) -> Self {
        Signal { values: vec![0.0; n] }
    }

    /// Unit impulse at `v`.
    pub fn delta(n: usize, v: VertexId) -> Self {
        let mut values = vec![0.0; n];
        values[v.0] = 1.0;
        Signal { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn norm(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Number of entries with magnitude above `threshold`.
    pub fn support_size(&self, threshold: f64) -> usize {
        self.values.iter().filter(|x| x.abs() > threshold).count()
    }

    pub fn scaled(&self, factor: f64) -> Signal {
        Signal::from_finite(self.values.iter().map(|x| x * factor).collect())
    }
}

/// Parses one value per line. Blank lines are ignored. With `expected`
/// set, the count must match.
pub fn read_signal_csv(text: &str, expected: Option<usize>) -> Result<Signal, SignalError> {
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        let x: f64 = t
            .parse()
            .map_err(|_| SignalError::NotNumeric { line: i + 1, text: t.to_string() })?;
        if !x.is_finite() {
            return Err(SignalError::NotNumeric { line: i + 1, text: t.to_string() });
        }
        values.push(x);
    }
    if let Some(n) = expected {
        if values.len() != n {
            return Err(SignalError::WrongLength { expected: n, found: values.len() });
        }
    }
    Ok(Signal { values })
}

/// One value per line with 17 significant digits, so reading the text
/// back yields the same bits.
pub fn write_signal_csv(x: &Signal) -> String {
    let mut out = String::with_capacity(x.len() * 24);
    for v in &x.values {
        out.push_str(&format!("{v:.16e}\n"));
    }
    out
}
