//! Weyl-chamber cells of spectra and orbit-dimension bookkeeping.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::states::PSD_TOL;

/// Default degeneracy tolerance for grouping eigenvalues.
pub const DEGENERACY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeylCell {
    /// Descending.
    pub spectrum: Vec<f64>,
    /// Multiplicities in decreasing-eigenvalue order.
    pub pattern: Vec<usize>,
    pub label: String,
    pub global_dim: usize,
}

/// `N² - Σ mᵢ²`.
pub fn global_dim(pattern: &[usize]) -> usize {
    let n: usize = pattern.iter().sum();
    n * n - pattern.iter().map(|m| m * m).sum::<usize>()
}

pub fn pattern_label(pattern: &[usize]) -> String {
    let sep = if pattern.iter().any(|&m| m > 9) {
        "_"
    } else {
        ""
    };
    let parts: Vec<String> = pattern.iter().map(|m| m.to_string()).collect();
    format!("K_{}", parts.join(sep))
}

/// Groups neighbouring eigenvalues whose gap is at most `tol · max(range, 1)`.
pub fn weyl_cell(spectrum: &[f64], tol: f64) -> Result<WeylCell> {
    if spectrum.is_empty() {
        return Err(Error::InvalidDimension("empty spectrum".into()));
    }
    if let Some(&x) = spectrum.iter().find(|x| !x.is_finite() || **x < -PSD_TOL) {
        return Err(Error::NotPositive(x));
    }
    let sum: f64 = spectrum.iter().sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::NotNormalized(sum));
    }
    let mut sorted = spectrum.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let range = sorted[0] - sorted[sorted.len() - 1];
    let gap = tol * range.max(1.0);
    let mut pattern = vec![1usize];
    for pair in sorted.windows(2) {
        if pair[0] - pair[1] <= gap {
            *pattern.last_mut().unwrap() += 1;
        } else {
            pattern.push(1);
        }
    }
    Ok(WeylCell {
        label: pattern_label(&pattern),
        global_dim: global_dim(&pattern),
        spectrum: sorted,
        pattern,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsReport {
    pub max_local_dim: usize,
    pub generic_global_dim: usize,
    pub effective_dim: usize,
}

/// `(K² + M² - 2, (KM)² - KM, difference)`.
pub fn dims_report(k: usize, m: usize) -> Result<DimsReport> {
    if k < 2 || m < 2 {
        return Err(Error::InvalidDimension(format!(
            "subsystems must have dimension >= 2, got {k} x {m}"
        )));
    }
    let max_local_dim = k * k + m * m - 2;
    let n = k * m;
    let generic_global_dim = n * n - n;
    Ok(DimsReport {
        max_local_dim,
        generic_global_dim,
        effective_dim: generic_global_dim - max_local_dim,
    })
}

/// `D_d = D_g - D_m`.
pub fn effective_dim(global_dim: usize, max_local_dim_on_orbit: usize) -> Result<usize> {
    global_dim
        .checked_sub(max_local_dim_on_orbit)
        .ok_or_else(|| {
            Error::Precondition(format!(
                "local dimension {max_local_dim_on_orbit} exceeds global dimension {global_dim}"
            ))
        })
}
