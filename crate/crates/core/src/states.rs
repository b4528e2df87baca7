//! Bipartite density matrices, pure states, the Bloch (Fano) form and samplers.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::algebra::su_generators;
use crate::error::{check_range, Error, Result};
use crate::linalg::{
    c, hermitian_eigenvalues, hermiticity_defect, kron, trace, trace_product, CMat, CVec, I,
};

/// Tolerance used for the Hermitian and unit-trace checks.
pub const STRUCTURE_TOL: f64 = 1e-12;
/// Smallest eigenvalue accepted as nonnegative.
pub const PSD_TOL: f64 = 1e-10;

/// Hermitian, unit-trace matrix on `C^K ⊗ C^M`. Positivity is checked on demand.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    k: usize,
    m: usize,
    matrix: CMat,
}

impl DensityMatrix {
    /// Wraps `matrix` after checking shape, Hermiticity and trace.
    pub fn new(k: usize, m: usize, matrix: CMat) -> Result<Self> {
        if k < 2 || m < 2 {
            return Err(Error::InvalidDimension(format!(
                "subsystems must have dimension >= 2, got {k} x {m}"
            )));
        }
        if matrix.nrows() != k * m || matrix.ncols() != k * m {
            return Err(Error::InvalidBipartition {
                size: matrix.nrows(),
                k,
                m,
            });
        }
        let defect = hermiticity_defect(&matrix);
        if defect > STRUCTURE_TOL {
            return Err(Error::NotHermitian(defect));
        }
        let tr = trace(&matrix);
        if (tr - c(1.0, 0.0)).norm() > STRUCTURE_TOL {
            return Err(Error::NotNormalized(tr.re));
        }
        Ok(Self { k, m, matrix })
    }

    /// Like [`DensityMatrix::new`] but also rejects matrices with an
    /// eigenvalue below `-PSD_TOL`.
    pub fn new_validated(k: usize, m: usize, matrix: CMat) -> Result<Self> {
        let w = Self::new(k, m, matrix)?;
        w.check_psd()?;
        Ok(w)
    }

    pub(crate) fn from_parts_unchecked(k: usize, m: usize, matrix: CMat) -> Self {
        Self { k, m, matrix }
    }

    pub fn maximally_mixed(k: usize, m: usize) -> Result<Self> {
        let n = k * m;
        Self::new(k, m, CMat::identity(n, n).scale(1.0 / n as f64))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Total Hilbert-space dimension `N = K·M`.
    pub fn dim(&self) -> usize {
        self.k * self.m
    }

    pub fn matrix(&self) -> &CMat {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMat {
        self.matrix
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.matrix)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }

    pub fn is_psd(&self) -> bool {
        self.min_eigenvalue() >= -PSD_TOL
    }

    pub fn check_psd(&self) -> Result<()> {
        let min = self.min_eigenvalue();
        if min < -PSD_TOL {
            Err(Error::NotPositive(min))
        } else {
            Ok(())
        }
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        trace_product(&self.matrix, &self.matrix).re
    }

    /// `L ρ L†` for a unitary `L` of matching size.
    pub fn conjugate_by(&self, l: &CMat) -> Self {
        let out = l * &self.matrix * l.adjoint();
        let out = (&out + out.adjoint()).scale(0.5);
        Self::from_parts_unchecked(self.k, self.m, out)
    }
}

/// Unit vector on `C^K ⊗ C^M`, amplitudes in row-major (first factor major) order.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    k: usize,
    m: usize,
    amplitudes: CVec,
}

impl PureState {
    /// Normalizes `amplitudes`; fails on the zero vector.
    pub fn new(k: usize, m: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        if k < 2 || m < 2 {
            return Err(Error::InvalidDimension(format!(
                "subsystems must have dimension >= 2, got {k} x {m}"
            )));
        }
        if amplitudes.len() != k * m {
            return Err(Error::InvalidBipartition {
                size: amplitudes.len(),
                k,
                m,
            });
        }
        let v = CVec::from_vec(amplitudes);
        let norm = v.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::ZeroVector);
        }
        Ok(Self {
            k,
            m,
            amplitudes: v.unscale(norm),
        })
    }

    /// Two-qubit state `[v, x, y, z]` in the basis `|00>, |01>, |10>, |11>`.
    pub fn qubits(v: Complex64, x: Complex64, y: Complex64, z: Complex64) -> Result<Self> {
        Self::new(2, 2, vec![v, x, y, z])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn amplitudes(&self) -> &CVec {
        &self.amplitudes
    }

    pub fn amplitude(&self, i: usize) -> Complex64 {
        self.amplitudes[i]
    }

    pub fn apply(&self, l: &CMat) -> Self {
        let v = l * &self.amplitudes;
        let norm = v.norm();
        Self {
            k: self.k,
            m: self.m,
            amplitudes: v.unscale(norm),
        }
    }
}

/// Real coefficients `(a, b, G)` of
/// `W = I/(KM) + i a_k (e_k⊗I) + i b_α (I⊗f_α) + G_{kα} (e_k⊗f_α)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochForm {
    pub k: usize,
    pub m: usize,
    pub a: DVector<f64>,
    pub b: DVector<f64>,
    pub g: DMatrix<f64>,
}

impl BlochForm {
    pub fn new(
        k: usize,
        m: usize,
        a: DVector<f64>,
        b: DVector<f64>,
        g: DMatrix<f64>,
    ) -> Result<Self> {
        let form = Self { k, m, a, b, g };
        form.check_dims()?;
        Ok(form)
    }

    pub fn zeros(k: usize, m: usize) -> Self {
        let (p, q) = (k * k - 1, m * m - 1);
        Self {
            k,
            m,
            a: DVector::zeros(p),
            b: DVector::zeros(q),
            g: DMatrix::zeros(p, q),
        }
    }

    /// Two-qubit form with diagonal correlation block `G = diag(μ)`.
    pub fn qubits_diagonal(mu: [f64; 3], a: [f64; 3], b: [f64; 3]) -> Self {
        Self {
            k: 2,
            m: 2,
            a: DVector::from_column_slice(&a),
            b: DVector::from_column_slice(&b),
            g: DMatrix::from_diagonal(&DVector::from_column_slice(&mu)),
        }
    }

    pub fn check_dims(&self) -> Result<()> {
        if self.k < 2 || self.m < 2 {
            return Err(Error::InvalidDimension(format!(
                "subsystems must have dimension >= 2, got {} x {}",
                self.k, self.m
            )));
        }
        let (p, q) = (self.k * self.k - 1, self.m * self.m - 1);
        if self.a.len() != p || self.b.len() != q || self.g.nrows() != p || self.g.ncols() != q {
            return Err(Error::InvalidDimension(format!(
                "Bloch form for {} x {} needs a: {p}, b: {q}, G: {p} x {q}; got a: {}, b: {}, G: {} x {}",
                self.k,
                self.m,
                self.a.len(),
                self.b.len(),
                self.g.nrows(),
                self.g.ncols()
            )));
        }
        Ok(())
    }

    /// Largest absolute deviation from another form of the same shape.
    pub fn max_difference(&self, other: &Self) -> f64 {
        let da = (&self.a - &other.a).amax();
        let db = (&self.b - &other.b).amax();
        let dg = (&self.g - &other.g).amax();
        da.max(db).max(dg)
    }
}

pub fn compose_bloch(f: &BlochForm) -> Result<DensityMatrix> {
    f.check_dims()?;
    let (k, m) = (f.k, f.m);
    let n = k * m;
    let ek = su_generators(k)?;
    let fm = su_generators(m)?;
    let id_k = CMat::identity(k, k);
    let id_m = CMat::identity(m, m);
    let mut w = CMat::identity(n, n).scale(1.0 / n as f64);
    for (j, e) in ek.generators().iter().enumerate() {
        if f.a[j] != 0.0 {
            w += kron(e, &id_m) * (I * f.a[j]);
        }
    }
    for (al, fa) in fm.generators().iter().enumerate() {
        if f.b[al] != 0.0 {
            w += kron(&id_k, fa) * (I * f.b[al]);
        }
    }
    for (j, e) in ek.generators().iter().enumerate() {
        for (al, fa) in fm.generators().iter().enumerate() {
            let gja = f.g[(j, al)];
            if gja != 0.0 {
                w += kron(e, fa).scale(gja);
            }
        }
    }
    let w = (&w + w.adjoint()).scale(0.5);
    Ok(DensityMatrix::from_parts_unchecked(k, m, w))
}

pub fn decompose_bloch(w: &DensityMatrix) -> BlochForm {
    let (k, m) = (w.k(), w.m());
    let ek = su_generators(k).expect("k >= 2");
    let fm = su_generators(m).expect("m >= 2");
    let id_k = CMat::identity(k, k);
    let id_m = CMat::identity(m, m);
    let rho = w.matrix();
    let a = DVector::from_iterator(
        ek.len(),
        ek.generators()
            .iter()
            .map(|e| (trace_product(rho, &kron(e, &id_m)) / (I * (-2.0 * m as f64))).re),
    );
    let b = DVector::from_iterator(
        fm.len(),
        fm.generators()
            .iter()
            .map(|f| (trace_product(rho, &kron(&id_k, f)) / (I * (-2.0 * k as f64))).re),
    );
    let g = DMatrix::from_fn(ek.len(), fm.len(), |j, al| {
        trace_product(rho, &kron(ek.get(j), fm.get(al))).re / 4.0
    });
    BlochForm { k, m, a, b, g }
}

/// `|w⟩⟨w|`.
pub fn pure_density(w: &PureState) -> DensityMatrix {
    let v = w.amplitudes();
    let rho = v * v.adjoint();
    let rho = (&rho + rho.adjoint()).scale(0.5);
    DensityMatrix::from_parts_unchecked(w.k(), w.m(), rho)
}

/// `|Ψ_θ⟩ = [cos(θ/2), 0, 0, sin(θ/2)]`.
pub fn schmidt_line_state(theta: f64) -> PureState {
    PureState {
        k: 2,
        m: 2,
        amplitudes: CVec::from_vec(vec![
            c((theta / 2.0).cos(), 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c((theta / 2.0).sin(), 0.0),
        ]),
    }
}

/// Generalized Werner state `x |Ψ_θ⟩⟨Ψ_θ| + (1 - x) I/4`.
pub fn werner_state(x: f64, theta: f64) -> Result<DensityMatrix> {
    check_range("x", x, 0.0, 1.0, "[0, 1]")?;
    check_range(
        "theta",
        theta,
        0.0,
        std::f64::consts::FRAC_PI_2,
        "[0, pi/2]",
    )?;
    let psi = pure_density(&schmidt_line_state(theta));
    let mixed = CMat::identity(4, 4).scale(0.25);
    let w = psi.matrix().scale(x) + mixed.scale(1.0 - x);
    Ok(DensityMatrix::from_parts_unchecked(2, 2, w))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StateKind {
    Pure,
    Mixed,
}

impl std::str::FromStr for StateKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pure" => Ok(Self::Pure),
            "mixed" => Ok(Self::Mixed),
            other => Err(Error::Precondition(format!("unknown state kind {other:?}"))),
        }
    }
}

/// Deterministic generator used by every sampler in the crate.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream `stream` of the generator seeded with `seed`; lets
/// parallel sweeps stay reproducible regardless of scheduling.
pub fn seeded_stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn gaussian_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    c(re, im)
}

/// `n × n` matrix with i.i.d. standard complex Gaussian entries.
pub fn ginibre<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMat {
    CMat::from_fn(n, n, |_, _| gaussian_complex(rng))
}

/// Haar-distributed unitary from the QR decomposition of a Ginibre matrix,
/// with the phases of `R`'s diagonal absorbed into `Q`.
pub fn haar_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMat {
    let qr = ginibre(n, rng).qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 {
            d / d.norm()
        } else {
            c(1.0, 0.0)
        };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// `V ⊗ U` with independent Haar factors.
pub fn random_local_unitary<R: Rng + ?Sized>(k: usize, m: usize, rng: &mut R) -> CMat {
    kron(&haar_unitary(k, rng), &haar_unitary(m, rng))
}

pub fn random_pure_state<R: Rng + ?Sized>(k: usize, m: usize, rng: &mut R) -> Result<PureState> {
    let amps = (0..k * m).map(|_| gaussian_complex(rng)).collect();
    PureState::new(k, m, amps)
}

/// Hilbert-Schmidt distributed mixed state `AA†/Tr(AA†)`, `A` square Ginibre.
pub fn random_mixed_state<R: Rng + ?Sized>(
    k: usize,
    m: usize,
    rng: &mut R,
) -> Result<DensityMatrix> {
    if k < 2 || m < 2 {
        return Err(Error::InvalidDimension(format!(
            "subsystems must have dimension >= 2, got {k} x {m}"
        )));
    }
    let a = ginibre(k * m, rng);
    let aa = &a * a.adjoint();
    let tr = trace(&aa).re;
    let w = aa.unscale(tr);
    let w = (&w + w.adjoint()).scale(0.5);
    Ok(DensityMatrix::from_parts_unchecked(k, m, w))
}

pub fn random_state_with<R: Rng + ?Sized>(
    kind: StateKind,
    k: usize,
    m: usize,
    rng: &mut R,
) -> Result<DensityMatrix> {
    match kind {
        StateKind::Pure => Ok(pure_density(&random_pure_state(k, m, rng)?)),
        StateKind::Mixed => random_mixed_state(k, m, rng),
    }
}

/// Random state drawn deterministically from `seed`.
pub fn random_state(kind: StateKind, k: usize, m: usize, seed: u64) -> Result<DensityMatrix> {
    random_state_with(kind, k, m, &mut seeded_rng(seed))
}
