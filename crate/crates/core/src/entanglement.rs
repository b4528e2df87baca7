//! Concurrence, entanglement of formation, PPT spectra, characteristic
//! polynomials, the maximal ball and absolute separability.

use serde::{Deserialize, Serialize};

use crate::algebra::partial_transpose;
use crate::canonical::omega;
use crate::error::{check_range, Error, Result};
use crate::linalg::{hermitian_eigen, hermitian_eigenvalues, pauli, singular_values_complex, CMat};
use crate::states::{BlochForm, DensityMatrix, PureState, PSD_TOL};

/// Partial-transpose eigenvalues at or above `-PPT_TOL` count as nonnegative.
pub const PPT_TOL: f64 = 1e-10;
/// Slack on the maximal-ball boundary, which is inclusive.
pub const BALL_TOL: f64 = 1e-12;

fn require_qubits(k: usize, m: usize) -> Result<()> {
    if (k, m) == (2, 2) {
        Ok(())
    } else {
        Err(Error::InvalidDimension(format!(
            "expected 2 x 2, got {k} x {m}"
        )))
    }
}

/// `c = 2|vz - xy|`.
pub fn concurrence_pure(w: &PureState) -> Result<f64> {
    Ok((2.0 * omega(w)?.norm()).min(1.0))
}

fn sigma_yy() -> CMat {
    let sy = pauli()[1].clone();
    sy.kronecker(&sy)
}

/// `W (σ₂⊗σ₂) W* (σ₂⊗σ₂)`.
pub fn spin_flip(w: &DensityMatrix) -> Result<CMat> {
    require_qubits(w.k(), w.m())?;
    let yy = sigma_yy();
    let m = w.matrix();
    Ok(m * &yy * m.map(|z| z.conj()) * &yy)
}

/// Eigenvalues `ξ` of the spin-flip product, descending.
///
/// Computed as squared singular values of `Xᵀ (σ₂⊗σ₂) X` with `ρ = X X†`,
/// which avoids the non-Hermitian eigenproblem and stays accurate near rank
/// deficiency.
pub fn spin_flip_spectrum(w: &DensityMatrix) -> Result<[f64; 4]> {
    require_qubits(w.k(), w.m())?;
    let (vals, vecs) = hermitian_eigen(w.matrix());
    let x = CMat::from_fn(4, 4, |r, col| vecs[(r, col)] * vals[col].max(0.0).sqrt());
    let tau = x.transpose() * sigma_yy() * &x;
    let sv = singular_values_complex(&tau);
    Ok([sv[0] * sv[0], sv[1] * sv[1], sv[2] * sv[2], sv[3] * sv[3]])
}

/// Wootters concurrence `max(0, √ξ₁ - √ξ₂ - √ξ₃ - √ξ₄)`.
pub fn concurrence_mixed(w: &DensityMatrix) -> Result<f64> {
    require_qubits(w.k(), w.m())?;
    w.check_psd()?;
    let xi = spin_flip_spectrum(w)?;
    let s = xi.map(|v| v.max(0.0).sqrt());
    Ok((s[0] - s[1] - s[2] - s[3]).clamp(0.0, 1.0))
}

fn binary_entropy(p: f64) -> f64 {
    let term = |x: f64| if x <= 0.0 { 0.0 } else { -x * x.log2() };
    term(p) + term(1.0 - p)
}

/// `E = h((1 + √(1 - c²)) / 2)`.
pub fn entanglement_of_formation(conc: f64) -> Result<f64> {
    check_range("concurrence", conc, 0.0, 1.0, "[0, 1]")?;
    Ok(binary_entropy(
        0.5 * (1.0 + (1.0 - conc * conc).max(0.0).sqrt()),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Separability {
    Separable,
    Entangled,
    PptUndecided,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PptResult {
    /// Partial-transpose eigenvalues, ascending.
    pub spectrum: Vec<f64>,
    pub verdict: Separability,
}

impl PptResult {
    pub fn min_eigenvalue(&self) -> f64 {
        self.spectrum[0]
    }
}

/// Peres-Horodecki test. Decisive for 2×2, 2×3 and 3×2.
pub fn ppt_check_with_tol(w: &DensityMatrix, tol: f64) -> PptResult {
    let spectrum = hermitian_eigenvalues(&partial_transpose(w));
    let negative = spectrum[0] < -tol;
    let decisive = matches!((w.k(), w.m()), (2, 2) | (2, 3) | (3, 2));
    let verdict = match (negative, decisive) {
        (true, _) => Separability::Entangled,
        (false, true) => Separability::Separable,
        (false, false) => Separability::PptUndecided,
    };
    PptResult { spectrum, verdict }
}

pub fn ppt_check(w: &DensityMatrix) -> PptResult {
    ppt_check_with_tol(w, PPT_TOL)
}

/// Coefficients `[1, -1, c₂, c₁, c₀]` of `det(W - ϱ)` in descending powers of
/// `ϱ`, for a two-qubit Bloch form with diagonal `G`. With `transposed` the
/// polynomial of the partial transpose is returned.
pub fn char_coeffs(f: &BlochForm, transposed: bool) -> Result<[f64; 5]> {
    require_qubits(f.k, f.m)?;
    f.check_dims()?;
    for i in 0..3 {
        for j in 0..3 {
            if i != j && f.g[(i, j)].abs() > 1e-12 {
                return Err(Error::Precondition("G must be diagonal".into()));
            }
        }
    }
    let mu = [f.g[(0, 0)], f.g[(1, 1)], f.g[(2, 2)]];
    let a = [f.a[0], f.a[1], f.a[2]];
    let b = [f.b[0], f.b[1], f.b[2]];
    let na = a.iter().map(|x| x * x).sum::<f64>();
    let nb = b.iter().map(|x| x * x).sum::<f64>();
    let tg2 = mu.iter().map(|x| x * x).sum::<f64>();
    let tg4 = mu.iter().map(|x| x.powi(4)).sum::<f64>();
    let agb = (0..3).map(|i| a[i] * mu[i] * b[i]).sum::<f64>();
    let det = mu[0] * mu[1] * mu[2];
    let ga2 = (0..3).map(|i| (mu[i] * a[i]).powi(2)).sum::<f64>();
    let gb2 = (0..3).map(|i| (mu[i] * b[i]).powi(2)).sum::<f64>();
    let cross =
        a[0] * b[0] * mu[1] * mu[2] + a[1] * b[1] * mu[0] * mu[2] + a[2] * b[2] * mu[0] * mu[1];
    let s = if transposed { -1.0 } else { 1.0 };

    let c2 = 3.0 / 8.0 - 2.0 * na - 2.0 * nb - 2.0 * tg2;
    let c1 = -1.0 / 16.0 + na + nb + tg2 + 8.0 * agb - s * 8.0 * det;
    let c0 = (na - nb).powi(2) + 2.0 * tg4 - tg2 * tg2 - (na + nb + tg2) / 8.0 - 2.0 * agb
        + s * 2.0 * det
        - 4.0 * ga2
        - 4.0 * gb2
        + 2.0 * (na + nb) * tg2
        + s * 8.0 * cross
        + 1.0 / 256.0;
    Ok([1.0, -1.0, c2, c1, c0])
}

/// `Tr ρ² - 1/N ≤ 1/(N(N-1))`, boundary included.
pub fn maximal_ball_check(w: &DensityMatrix) -> bool {
    purity_in_maximal_ball(w.purity(), w.dim())
}

/// Ball membership from the purity alone.
pub fn purity_in_maximal_ball(purity: f64, n: usize) -> bool {
    let n = n as f64;
    purity - 1.0 / n <= 1.0 / (n * (n - 1.0)) + BALL_TOL
}

fn check_spectrum(r: &[f64]) -> Result<()> {
    if r.iter().any(|x| !x.is_finite() || *x < -PSD_TOL) {
        return Err(Error::Precondition("spectrum must be nonnegative".into()));
    }
    if r.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::Precondition(
            "spectrum must be sorted descending".into(),
        ));
    }
    let sum: f64 = r.iter().sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::NotNormalized(sum));
    }
    Ok(())
}

/// `c* = max(0, r₁ - r₃ - 2√(r₂ r₄))` for a descending two-qubit spectrum.
pub fn cstar(r: &[f64]) -> Result<f64> {
    if r.len() != 4 {
        return Err(Error::InvalidDimension(format!(
            "expected 4 eigenvalues, got {}",
            r.len()
        )));
    }
    check_spectrum(r)?;
    Ok((r[0] - r[2] - 2.0 * (r[1].max(0.0) * r[3].max(0.0)).sqrt()).max(0.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AbsoluteSeparability {
    Yes,
    YesConjectural,
    No,
}

/// Verdict from `c*`: rank-deficient spectra and spectra inside the maximal
/// ball are settled, full-rank ones with `c* = 0` rest on the conjecture.
pub fn absolute_separability(r: &[f64], tol: f64) -> Result<AbsoluteSeparability> {
    let cs = cstar(r)?;
    if cs > tol {
        return Ok(AbsoluteSeparability::No);
    }
    let rank = r.iter().filter(|&&x| x > PSD_TOL).count();
    let purity: f64 = r.iter().map(|x| x * x).sum();
    Ok(if rank <= 3 || purity <= 1.0 / 3.0 + BALL_TOL {
        AbsoluteSeparability::Yes
    } else {
        AbsoluteSeparability::YesConjectural
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntanglementReport {
    /// Two-qubit only.
    pub concurrence: Option<f64>,
    pub eof: Option<f64>,
    pub spin_flip_spectrum: Option<Vec<f64>>,
    pub ppt_spectrum: Vec<f64>,
    pub separability: Separability,
    pub in_maximal_ball: bool,
    pub cstar: Option<f64>,
    pub absolutely_separable: Option<AbsoluteSeparability>,
}

pub fn entanglement_report(w: &DensityMatrix, tol: f64) -> Result<EntanglementReport> {
    w.check_psd()?;
    let ppt = ppt_check_with_tol(w, tol);
    let in_maximal_ball = maximal_ball_check(w);
    if (w.k(), w.m()) != (2, 2) {
        return Ok(EntanglementReport {
            concurrence: None,
            eof: None,
            spin_flip_spectrum: None,
            ppt_spectrum: ppt.spectrum,
            separability: ppt.verdict,
            in_maximal_ball,
            cstar: None,
            absolutely_separable: None,
        });
    }
    let conc = concurrence_mixed(w)?;
    let mut r: Vec<f64> = w
        .eigenvalues()
        .into_iter()
        .rev()
        .map(|x| x.max(0.0))
        .collect();
    let sum: f64 = r.iter().sum();
    r.iter_mut().for_each(|x| *x /= sum);
    Ok(EntanglementReport {
        concurrence: Some(conc),
        eof: Some(entanglement_of_formation(conc)?),
        spin_flip_spectrum: Some(spin_flip_spectrum(w)?.to_vec()),
        ppt_spectrum: ppt.spectrum,
        separability: ppt.verdict,
        in_maximal_ball,
        cstar: Some(cstar(&r)?),
        absolutely_separable: Some(absolute_separability(&r, tol.max(1e-12))?),
    })
}

/// Descending eigenvalues of a general complex matrix whose spectrum is known
/// to be real; imaginary parts are dropped.
pub fn real_spectrum(m: &CMat) -> Vec<f64> {
    let schur = m.clone().schur();
    let (_, t) = schur.unpack();
    let mut ev: Vec<f64> = (0..t.nrows()).map(|i| t[(i, i)].re).collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    ev
}
