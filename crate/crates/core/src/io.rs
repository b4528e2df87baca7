//! JSON formats for states and Bloch forms.

use std::path::Path;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{c, CMat};
use crate::states::{compose_bloch, BlochForm, DensityMatrix};

/// `{"k", "m", "matrix": [[[re, im], ...], ...]}`, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub k: usize,
    pub m: usize,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

/// `{"k", "m", "a": [...], "b": [...], "g": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlochJson {
    pub k: usize,
    pub m: usize,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub g: Vec<Vec<f64>>,
}

/// Either accepted input format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StateJson {
    Matrix(MatrixJson),
    Bloch(BlochJson),
}

impl From<&DensityMatrix> for MatrixJson {
    fn from(w: &DensityMatrix) -> Self {
        let m = w.matrix();
        Self {
            k: w.k(),
            m: w.m(),
            matrix: (0..m.nrows())
                .map(|i| {
                    (0..m.ncols())
                        .map(|j| [m[(i, j)].re, m[(i, j)].im])
                        .collect()
                })
                .collect(),
        }
    }
}

impl From<&BlochForm> for BlochJson {
    fn from(f: &BlochForm) -> Self {
        Self {
            k: f.k,
            m: f.m,
            a: f.a.iter().copied().collect(),
            b: f.b.iter().copied().collect(),
            g: (0..f.g.nrows())
                .map(|i| f.g.row(i).iter().copied().collect())
                .collect(),
        }
    }
}

impl TryFrom<&MatrixJson> for DensityMatrix {
    type Error = Error;

    fn try_from(j: &MatrixJson) -> Result<Self> {
        let n = j.matrix.len();
        if j.matrix.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidDimension("matrix must be square".into()));
        }
        let mat = CMat::from_fn(n, n, |r, col| {
            let [re, im] = j.matrix[r][col];
            c(re, im)
        });
        DensityMatrix::new(j.k, j.m, mat)
    }
}

impl TryFrom<&BlochJson> for BlochForm {
    type Error = Error;

    fn try_from(j: &BlochJson) -> Result<Self> {
        let rows = j.g.len();
        let cols = j.g.first().map_or(0, Vec::len);
        if j.g.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidDimension("g must be rectangular".into()));
        }
        let g = DMatrix::from_fn(rows, cols, |r, col| j.g[r][col]);
        BlochForm::new(
            j.k,
            j.m,
            DVector::from_vec(j.a.clone()),
            DVector::from_vec(j.b.clone()),
            g,
        )
    }
}

impl StateJson {
    /// The density matrix, without the positivity check.
    pub fn to_density(&self) -> Result<DensityMatrix> {
        match self {
            Self::Matrix(m) => m.try_into(),
            Self::Bloch(b) => compose_bloch(&b.try_into()?),
        }
    }
}

pub fn parse_state(text: &str) -> Result<StateJson> {
    Ok(serde_json::from_str(text)?)
}

pub fn read_state(path: &Path) -> Result<StateJson> {
    parse_state(&std::fs::read_to_string(path)?)
}

/// Fixed-width scientific notation with 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}
