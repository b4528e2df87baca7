//! One-stop report on a single state, as emitted by `orbit-atlas analyze`.

use serde::{Deserialize, Serialize};

use crate::canonical::{
    canonicalize_mixed_2x2, pure_stratum, schmidt_pure, PureStratum, STRATUM_TOL,
};
use crate::entanglement::{entanglement_report, EntanglementReport, PPT_TOL};
use crate::error::Result;
use crate::gram::{gram_direct, local_orbit_dim, RANK_TOL};
use crate::io::{BlochJson, StateJson};
use crate::linalg::hermitian_eigen;
use crate::states::{decompose_bloch, DensityMatrix, PureState};
use crate::strata::{weyl_cell, WeylCell, DEGENERACY_TOL};

/// States with `Tr ρ² ≥ 1 - PURE_TOL` are canonicalized as pure states.
pub const PURE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub rank: f64,
    pub ppt: f64,
    pub degeneracy: f64,
    pub stratum: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            rank: RANK_TOL,
            ppt: PPT_TOL,
            degeneracy: DEGENERACY_TOL,
            stratum: STRATUM_TOL,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GramSummary {
    /// Ascending.
    pub spectrum: Vec<f64>,
    pub local_dim: usize,
    pub max_local_dim: usize,
    pub corank: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum CanonicalSummary {
    Pure {
        theta: f64,
        stratum: PureStratum,
    },
    Mixed {
        mu: [f64; 3],
        a: [f64; 3],
        b: [f64; 3],
        det_sign: i8,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: StateJson,
    pub k: usize,
    pub m: usize,
    pub purity: f64,
    pub bloch: BlochJson,
    pub gram: GramSummary,
    pub weyl: WeylCell,
    pub entanglement: EntanglementReport,
    /// Two-qubit states only.
    pub canonical: Option<CanonicalSummary>,
}

/// Dominant eigenvector of a (numerically) rank-one state.
pub fn as_pure(w: &DensityMatrix, tol: f64) -> Option<PureState> {
    if w.purity() < 1.0 - tol {
        return None;
    }
    let (_, vecs) = hermitian_eigen(w.matrix());
    let top = vecs.column(vecs.ncols() - 1).iter().copied().collect();
    PureState::new(w.k(), w.m(), top).ok()
}

pub fn analyze(input: StateJson, tol: &Tolerances) -> Result<AnalysisReport> {
    let w = input.to_density()?;
    w.check_psd()?;
    let gram = gram_direct(&w);
    let local_dim = local_orbit_dim(&gram, tol.rank);
    let max_local_dim = gram.max_dim();
    let spectrum: Vec<f64> = w.eigenvalues().into_iter().map(|x| x.max(0.0)).collect();
    let total: f64 = spectrum.iter().sum();
    let spectrum: Vec<f64> = spectrum.iter().map(|x| x / total).collect();
    let canonical = if (w.k(), w.m()) == (2, 2) {
        Some(match as_pure(&w, PURE_TOL) {
            Some(psi) => CanonicalSummary::Pure {
                theta: schmidt_pure(&psi)?.theta,
                stratum: pure_stratum(&psi, tol.stratum)?,
            },
            None => {
                let cf = canonicalize_mixed_2x2(&decompose_bloch(&w))?;
                CanonicalSummary::Mixed {
                    mu: cf.mu,
                    a: cf.a,
                    b: cf.b,
                    det_sign: cf.det_sign,
                }
            }
        })
    } else {
        None
    };
    Ok(AnalysisReport {
        k: w.k(),
        m: w.m(),
        purity: w.purity(),
        bloch: (&decompose_bloch(&w)).into(),
        gram: GramSummary {
            spectrum: gram.spectrum.clone(),
            local_dim,
            max_local_dim,
            corank: max_local_dim - local_dim,
        },
        weyl: weyl_cell(&spectrum, tol.degeneracy)?,
        entanglement: entanglement_report(&w, tol.ppt)?,
        canonical,
        input,
    })
}
