//! Schmidt and SVD canonical forms for two-qubit states, explicit orbit
//! parametrizations, and the stratification of pure states by concurrence.

use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::{DVector, Matrix3, SVD};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};
use crate::linalg::{c, pauli, CMat, I};
use crate::states::{BlochForm, PureState};

/// Default tolerance on the concurrence when labelling pure strata.
pub const STRATUM_TOL: f64 = 1e-8;

fn require_qubits(k: usize, m: usize) -> Result<()> {
    if k == 2 && m == 2 {
        Ok(())
    } else {
        Err(Error::InvalidDimension(format!(
            "expected a two-qubit state, got {k} x {m}"
        )))
    }
}

/// `X(w) = [[v, y], [x, z]]` for `w = [v, x, y, z]`.
pub fn x_matrix(w: &PureState) -> Result<CMat> {
    require_qubits(w.k(), w.m())?;
    let a = w.amplitudes();
    Ok(CMat::from_row_slice(2, 2, &[a[0], a[2], a[1], a[3]]))
}

/// Inverse of [`x_matrix`].
pub fn from_x_matrix(x: &CMat) -> PureState {
    PureState::qubits(x[(0, 0)], x[(1, 0)], x[(0, 1)], x[(1, 1)]).expect("nonzero by construction")
}

/// `ω(w) = vz - xy = det X(w)`.
pub fn omega(w: &PureState) -> Result<Complex64> {
    require_qubits(w.k(), w.m())?;
    let a = w.amplitudes();
    Ok(a[0] * a[3] - a[1] * a[2])
}

/// Multiplies by a global phase so the first nonzero amplitude is real and positive.
pub fn normalize_global_phase(w: &PureState) -> PureState {
    let amps: Vec<Complex64> = w.amplitudes().iter().copied().collect();
    let pivot = amps.iter().copied().find(|z| z.norm() > 1e-12);
    match pivot {
        Some(p) => {
            let phase = p.conj() / p.norm();
            PureState::new(w.k(), w.m(), amps.iter().map(|z| z * phase).collect())
                .expect("nonzero by construction")
        }
        None => w.clone(),
    }
}

/// Schmidt canonical form of a two-qubit pure state.
#[derive(Debug, Clone)]
pub struct SchmidtForm {
    /// Schmidt angle in `[0, π/2]`; `sin θ = 2|ω|` is the concurrence.
    pub theta: f64,
    /// Local factor acting on the second qubit.
    pub u: CMat,
    /// Local factor acting on the first qubit.
    pub v: CMat,
    /// Singular values of `X(w)`, `p ≥ q ≥ 0`, `p² + q² = 1`.
    pub p: f64,
    pub q: f64,
    /// Common phase left on the diagonal of `U X Vᵀ`.
    pub phase: Complex64,
    /// `[cos(θ/2), 0, 0, sin(θ/2)]`.
    pub canonical_vector: PureState,
}

impl SchmidtForm {
    /// The local unitary `V ⊗ U` that maps the input onto the canonical line.
    pub fn local_unitary(&self) -> CMat {
        self.v.kronecker(&self.u)
    }
}

fn special(u: &CMat) -> CMat {
    let det = u[(0, 0)] * u[(1, 1)] - u[(0, 1)] * u[(1, 0)];
    u / det.sqrt()
}

pub fn schmidt_pure(w: &PureState) -> Result<SchmidtForm> {
    let x = x_matrix(w)?;
    let svd = SVD::new(x.clone(), true, true);
    let mut left = svd.u.expect("requested");
    let mut right_adj = svd.v_t.expect("requested");
    let mut sv = [svd.singular_values[0], svd.singular_values[1]];
    if sv[0] < sv[1] {
        sv.swap(0, 1);
        left.swap_columns(0, 1);
        right_adj.swap_rows(0, 1);
    }
    // X = P Σ Q†  ⇒  P† X (Q†)ᵀ... with U' = P†, V'ᵀ = Q, i.e. V' = (Q†)* ᵀ = right_adjᵀ conj.
    let u_prime = left.adjoint();
    let v_prime = right_adj.map(|z| z.conj());
    let u = special(&u_prime);
    let v = special(&v_prime);
    let diag = &u * &x * v.transpose();
    let phase = if diag[(0, 0)].norm() > 1e-300 {
        diag[(0, 0)] / diag[(0, 0)].norm()
    } else if diag[(1, 1)].norm() > 1e-300 {
        diag[(1, 1)] / diag[(1, 1)].norm()
    } else {
        c(1.0, 0.0)
    };
    let norm = (sv[0] * sv[0] + sv[1] * sv[1]).sqrt();
    let (p, q) = (sv[0] / norm, sv[1] / norm);
    let theta = 2.0 * q.atan2(p);
    let canonical_vector = crate::states::schmidt_line_state(theta);
    Ok(SchmidtForm {
        theta,
        u,
        v,
        p,
        q,
        phase,
        canonical_vector,
    })
}

/// Two-qubit Bloch form rotated so that `G` is diagonal.
#[derive(Debug, Clone)]
pub struct CanonicalMixedForm {
    pub mu: [f64; 3],
    pub a: [f64; 3],
    pub b: [f64; 3],
    pub o1: Matrix3<f64>,
    pub o2: Matrix3<f64>,
    /// Sign of `det G'` (`+1` when it vanishes).
    pub det_sign: i8,
}

impl CanonicalMixedForm {
    pub fn to_bloch(&self) -> BlochForm {
        BlochForm::qubits_diagonal(self.mu, self.a, self.b)
    }

    /// `U₁ ⊗ U₂` in SU(2) ⊗ SU(2) implementing the rotations `O₁, O₂`.
    pub fn local_unitary(&self) -> CMat {
        su2_from_rotation(&self.o1).kronecker(&su2_from_rotation(&self.o2))
    }
}

/// Proper-orthogonal `O₁, O₂` with `O₁ G' O₂ᵀ = diag(μ)`, where
/// `μ₁ ≥ μ₂ ≥ μ₃ ≥ 0` if `det G' ≥ 0` and `μ₁ ≤ μ₂ ≤ μ₃ ≤ 0` otherwise;
/// `a = O₁ a'`, `b = O₂ b'`.
pub fn canonicalize_mixed_2x2(f: &BlochForm) -> Result<CanonicalMixedForm> {
    require_qubits(f.k, f.m)?;
    f.check_dims()?;
    let g = Matrix3::from_fn(|i, j| f.g[(i, j)]);
    let det = g.determinant();
    let svd = SVD::new(g, true, true);
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
    let p = svd.u.expect("requested");
    let qt = svd.v_t.expect("requested");
    let mut o1 = Matrix3::from_fn(|r, col| p[(col, order[r])]);
    let mut o2 = Matrix3::from_fn(|r, col| qt[(order[r], col)]);
    let mut sigma = order.map(|i| svd.singular_values[i]);

    if o1.determinant() < 0.0 {
        o1.row_mut(2).neg_mut();
        sigma[2] = -sigma[2];
    }
    if o2.determinant() < 0.0 {
        o2.row_mut(2).neg_mut();
        sigma[2] = -sigma[2];
    }
    let det_sign: i8 = if det < 0.0 { -1 } else { 1 };
    if sigma[2] < 0.0 {
        if det_sign < 0 {
            // diag(-1, -1, 1) is proper and turns (σ₁, σ₂, -σ₃) into all nonpositive.
            o1.row_mut(0).neg_mut();
            o1.row_mut(1).neg_mut();
            sigma[0] = -sigma[0];
            sigma[1] = -sigma[1];
        } else {
            // σ₃ = 0 up to rounding: flip its sign freely.
            o1.row_mut(2).neg_mut();
            sigma[2] = -sigma[2];
        }
    }
    let mu = if det_sign < 0 {
        // ascending: -σ₁ ≤ -σ₂ ≤ -σ₃ ≤ 0
        [sigma[0], sigma[1], sigma[2]]
    } else {
        [sigma[0], sigma[1], sigma[2].abs()]
    };
    let a_vec = o1 * nalgebra::Vector3::from_iterator(f.a.iter().copied());
    let b_vec = o2 * nalgebra::Vector3::from_iterator(f.b.iter().copied());
    Ok(CanonicalMixedForm {
        mu,
        a: [a_vec[0], a_vec[1], a_vec[2]],
        b: [b_vec[0], b_vec[1], b_vec[2]],
        o1,
        o2,
        det_sign,
    })
}

/// Element of SU(2) whose adjoint action on Pauli vectors is `r`:
/// `U σ_k U† = Σ_j r_jk σ_j`.
pub fn su2_from_rotation(r: &Matrix3<f64>) -> CMat {
    let t = r.trace();
    // Shepperd's method: pick the largest of 1+t, 1+2r_ii-t.
    let cands = [
        1.0 + t,
        1.0 + 2.0 * r[(0, 0)] - t,
        1.0 + 2.0 * r[(1, 1)] - t,
        1.0 + 2.0 * r[(2, 2)] - t,
    ];
    let best = (0..4)
        .max_by(|&i, &j| cands[i].total_cmp(&cands[j]))
        .unwrap();
    let s = 0.5 * cands[best].max(0.0).sqrt();
    let f = 0.25 / s;
    let (w, x, y, z) = match best {
        0 => (
            s,
            (r[(2, 1)] - r[(1, 2)]) * f,
            (r[(0, 2)] - r[(2, 0)]) * f,
            (r[(1, 0)] - r[(0, 1)]) * f,
        ),
        1 => (
            (r[(2, 1)] - r[(1, 2)]) * f,
            s,
            (r[(0, 1)] + r[(1, 0)]) * f,
            (r[(0, 2)] + r[(2, 0)]) * f,
        ),
        2 => (
            (r[(0, 2)] - r[(2, 0)]) * f,
            (r[(0, 1)] + r[(1, 0)]) * f,
            s,
            (r[(1, 2)] + r[(2, 1)]) * f,
        ),
        _ => (
            (r[(1, 0)] - r[(0, 1)]) * f,
            (r[(0, 2)] + r[(2, 0)]) * f,
            (r[(1, 2)] + r[(2, 1)]) * f,
            s,
        ),
    };
    let p = pauli();
    CMat::identity(2, 2).scale(w) - (&p[0] * c(x, 0.0) + &p[1] * c(y, 0.0) + &p[2] * c(z, 0.0)) * I
}

/// Which explicit orbit parametrization to sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitFamily {
    MaxEntangled,
    Separable,
}

/// `(1/√2) [cos α e^{iχ₁}, sin α e^{iχ₂}, sin α e^{-iχ₂}, -cos α e^{-iχ₁}]`.
pub fn max_entangled_sample(alpha: f64, chi1: f64, chi2: f64) -> Result<PureState> {
    check_range("alpha", alpha, 0.0, FRAC_PI_2, "[0, pi/2]")?;
    check_chi(chi1)?;
    check_chi(chi2)?;
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let e = |phi: f64| Complex64::from_polar(1.0, phi);
    PureState::qubits(
        e(chi1) * (s * alpha.cos()),
        e(chi2) * (s * alpha.sin()),
        e(-chi2) * (s * alpha.sin()),
        -e(-chi1) * (s * alpha.cos()),
    )
}

/// `[cos α cos β e^{iχ₁}, cos α sin β e^{iχ₂}, sin α cos β e^{-iχ₂}, sin α sin β e^{-iχ₁}]`.
pub fn separable_sample(alpha: f64, beta: f64, chi1: f64, chi2: f64) -> Result<PureState> {
    check_range("alpha", alpha, 0.0, FRAC_PI_2, "[0, pi/2]")?;
    check_range("beta", beta, 0.0, FRAC_PI_2, "[0, pi/2]")?;
    check_chi(chi1)?;
    check_chi(chi2)?;
    let e = |phi: f64| Complex64::from_polar(1.0, phi);
    let (ca, sa, cb, sb) = (alpha.cos(), alpha.sin(), beta.cos(), beta.sin());
    PureState::qubits(
        e(chi1) * (ca * cb),
        e(chi2) * (ca * sb),
        e(-chi2) * (sa * cb),
        e(-chi1) * (sa * sb),
    )
}

fn check_chi(chi: f64) -> Result<()> {
    if chi.is_finite() && (0.0..2.0 * PI).contains(&chi) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name: "chi",
            value: chi,
            range: "[0, 2pi)",
        })
    }
}

/// Dispatches on the family: `(α, χ₁, χ₂)` or `(α, β, χ₁, χ₂)`.
pub fn orbit_sample(family: OrbitFamily, angles: &[f64]) -> Result<PureState> {
    match (family, angles) {
        (OrbitFamily::MaxEntangled, &[alpha, chi1, chi2]) => {
            max_entangled_sample(alpha, chi1, chi2)
        }
        (OrbitFamily::Separable, &[alpha, beta, chi1, chi2]) => {
            separable_sample(alpha, beta, chi1, chi2)
        }
        (family, angles) => Err(Error::Precondition(format!(
            "{family:?} takes {} angles, got {}",
            if family == OrbitFamily::MaxEntangled {
                3
            } else {
                4
            },
            angles.len()
        ))),
    }
}

/// Local-orbit stratum of a two-qubit pure state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "stratum", rename_all = "snake_case")]
pub enum PureStratum {
    Separable4d,
    Generic5d { theta: f64 },
    MaxEntangled3d,
}

impl PureStratum {
    pub fn orbit_dim(&self) -> usize {
        match self {
            Self::Separable4d => 4,
            Self::Generic5d { .. } => 5,
            Self::MaxEntangled3d => 3,
        }
    }
}

pub fn pure_stratum(w: &PureState, tol: f64) -> Result<PureStratum> {
    let conc = (2.0 * omega(w)?.norm()).min(1.0);
    Ok(if conc < tol {
        PureStratum::Separable4d
    } else if conc > 1.0 - tol {
        PureStratum::MaxEntangled3d
    } else {
        PureStratum::Generic5d { theta: conc.asin() }
    })
}

/// Bloch vector of `U (v·σ) U†`.
pub fn rotate_pauli_vector(u: &CMat, v: &DVector<f64>) -> DVector<f64> {
    let p = pauli();
    let op = v
        .iter()
        .zip(p.iter())
        .fold(CMat::zeros(2, 2), |acc, (x, s)| acc + s * c(*x, 0.0));
    let rotated = u * op * u.adjoint();
    DVector::from_iterator(
        3,
        p.iter()
            .map(|s| 0.5 * crate::linalg::trace_product(&rotated, s).re),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gram::{gram_direct, orbit_dim_oracle};
    use crate::linalg::{max_abs, multiset_distance};
    use crate::states::{
        compose_bloch, pure_density, random_local_unitary, random_pure_state, schmidt_line_state,
        seeded_rng,
    };
    use rand::Rng;

    fn z() -> Complex64 {
        c(0.0, 0.0)
    }

    #[test]
    fn omega_examples() {
        let w = PureState::qubits(c(1.0, 0.0), z(), z(), z()).unwrap();
        assert_eq!(omega(&w).unwrap().norm(), 0.0);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let bell = PureState::qubits(c(s, 0.0), z(), z(), c(s, 0.0)).unwrap();
        assert!((omega(&bell).unwrap().norm() - 0.5).abs() < 1e-15);
        let h = c(0.5, 0.0);
        assert!(
            omega(&PureState::qubits(h, h, h, h).unwrap())
                .unwrap()
                .norm()
                < 1e-15
        );
        let wrong = PureState::new(2, 3, vec![c(1.0, 0.0); 6]).unwrap();
        assert!(omega(&wrong).is_err());
    }

    #[test]
    fn x_matrix_covariance_under_local_unitaries() {
        let mut rng = seeded_rng(2);
        for _ in 0..20 {
            let w = random_pure_state(2, 2, &mut rng).unwrap();
            let v = crate::states::haar_unitary(2, &mut rng);
            let u = crate::states::haar_unitary(2, &mut rng);
            let moved = w.apply(&v.kronecker(&u));
            let lhs = x_matrix(&moved).unwrap();
            let rhs = &u * x_matrix(&w).unwrap() * v.transpose();
            assert!(max_abs(&(lhs - rhs)) < 1e-10);
            assert!((omega(&moved).unwrap().norm() - omega(&w).unwrap().norm()).abs() < 1e-12);
        }
        let w = random_pure_state(2, 2, &mut rng).unwrap();
        assert_eq!(from_x_matrix(&x_matrix(&w).unwrap()), w);
    }

    #[test]
    fn canonical_line_is_fixed() {
        for &theta in &[0.0, 0.3, 1.0, FRAC_PI_2] {
            let w = schmidt_line_state(theta);
            let s = schmidt_pure(&w).unwrap();
            assert!((s.theta - theta).abs() < 1e-10, "{theta}");
        }
    }

    #[test]
    fn bell_has_right_angle() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let bell = PureState::qubits(c(s, 0.0), z(), z(), c(s, 0.0)).unwrap();
        assert!((schmidt_pure(&bell).unwrap().theta - FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn schmidt_maps_to_canonical_vector() {
        let mut rng = seeded_rng(4);
        for _ in 0..50 {
            let w = random_pure_state(2, 2, &mut rng).unwrap();
            let s = schmidt_pure(&w).unwrap();
            let l = s.local_unitary();
            for f in [&s.u, &s.v] {
                let det = f[(0, 0)] * f[(1, 1)] - f[(0, 1)] * f[(1, 0)];
                assert!((det - c(1.0, 0.0)).norm() < 1e-12);
                assert!(max_abs(&(f * f.adjoint() - CMat::identity(2, 2))) < 1e-12);
            }
            let mapped = normalize_global_phase(&w.apply(&l));
            assert!(
                max_abs(
                    &(mapped.amplitudes() - s.canonical_vector.amplitudes())
                        .map(|x| x)
                        .reshape_generic(nalgebra::Dyn(4), nalgebra::Dyn(1))
                ) < 1e-9
            );
            let conc = 2.0 * omega(&w).unwrap().norm();
            assert!((s.theta.sin() - conc).abs() < 1e-10);
            assert!((2.0 * s.p * s.q - conc).abs() < 1e-10);
            assert!((s.p * s.p + s.q * s.q - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn mixed_canonicalization_identity_when_already_sorted() {
        let f =
            BlochForm::qubits_diagonal([0.1, 0.05, 0.02], [0.01, 0.02, 0.03], [0.0, -0.01, 0.0]);
        let cf = canonicalize_mixed_2x2(&f).unwrap();
        assert!((cf.o1 - Matrix3::identity()).abs().max() < 1e-12);
        assert!((cf.o2 - Matrix3::identity()).abs().max() < 1e-12);
        assert_eq!(cf.mu, [0.1, 0.05, 0.02]);
    }

    #[test]
    fn negative_determinant_branch() {
        let f = BlochForm::qubits_diagonal([-1.0, -1.0, -1.0], [0.0; 3], [0.0; 3]);
        let cf = canonicalize_mixed_2x2(&f).unwrap();
        assert_eq!(cf.det_sign, -1);
        for x in cf.mu {
            assert!((x + 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn mixed_canonicalization_is_a_local_transformation() {
        let mut rng = seeded_rng(8);
        for _ in 0..30 {
            let f = BlochForm {
                k: 2,
                m: 2,
                a: DVector::from_fn(3, |_, _| rng.random_range(-0.1..0.1)),
                b: DVector::from_fn(3, |_, _| rng.random_range(-0.1..0.1)),
                g: nalgebra::DMatrix::from_fn(3, 3, |_, _| rng.random_range(-0.1..0.1)),
            };
            let cf = canonicalize_mixed_2x2(&f).unwrap();
            assert!((cf.o1.determinant() - 1.0).abs() < 1e-12);
            assert!((cf.o2.determinant() - 1.0).abs() < 1e-12);
            let d = cf.o1 * Matrix3::from_fn(|i, j| f.g[(i, j)]) * cf.o2.transpose();
            for i in 0..3 {
                for j in 0..3 {
                    let want = if i == j { cf.mu[i] } else { 0.0 };
                    assert!((d[(i, j)] - want).abs() < 1e-10);
                }
            }
            if cf.det_sign > 0 {
                assert!(cf.mu[0] >= cf.mu[1] && cf.mu[1] >= cf.mu[2] && cf.mu[2] >= 0.0);
            } else {
                assert!(cf.mu[0] <= cf.mu[1] && cf.mu[1] <= cf.mu[2] && cf.mu[2] <= 0.0);
            }
            let before = compose_bloch(&f).unwrap();
            let after = compose_bloch(&cf.to_bloch()).unwrap();
            assert!(
                multiset_distance(
                    &gram_direct(&before).spectrum,
                    &gram_direct(&after).spectrum
                ) < 1e-8
            );
            let moved = before.conjugate_by(&cf.local_unitary());
            assert!(max_abs(&(moved.matrix() - after.matrix())) < 1e-10);
        }
    }

    #[test]
    fn su2_adjoint_action_matches_rotation() {
        let mut rng = seeded_rng(12);
        for _ in 0..20 {
            let u = crate::states::haar_unitary(2, &mut rng);
            let u = special(&u);
            let r = Matrix3::from_fn(|i, j| {
                let e = DVector::from_fn(3, |t, _| if t == j { 1.0 } else { 0.0 });
                rotate_pauli_vector(&u, &e)[i]
            });
            let back = su2_from_rotation(&r);
            // Equal up to the sign ambiguity of SU(2) → SO(3).
            let diff = max_abs(&(&back - &u)).min(max_abs(&(&back + &u)));
            assert!(diff < 1e-10);
        }
    }

    #[test]
    fn orbit_parametrizations() {
        let w = orbit_sample(OrbitFamily::MaxEntangled, &[0.0, 0.0, 0.0]).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((w.amplitude(0) - c(s, 0.0)).norm() < 1e-15);
        assert!((w.amplitude(3) - c(-s, 0.0)).norm() < 1e-15);
        assert!((omega(&w).unwrap().norm() - 0.5).abs() < 1e-15);
        let w = orbit_sample(OrbitFamily::Separable, &[0.0, 0.0, 0.0, 0.0]).unwrap();
        assert!((w.amplitude(0) - c(1.0, 0.0)).norm() < 1e-15);
        assert!(orbit_sample(OrbitFamily::Separable, &[0.0, 0.0, 0.0]).is_err());
        assert!(max_entangled_sample(2.0, 0.0, 0.0).is_err());
        assert!(separable_sample(0.1, 0.1, 7.0, 0.0).is_err());

        let mut rng = seeded_rng(13);
        for _ in 0..200 {
            let me = max_entangled_sample(
                rng.random_range(0.0..FRAC_PI_2),
                rng.random_range(0.0..2.0 * PI),
                rng.random_range(0.0..2.0 * PI),
            )
            .unwrap();
            assert!((omega(&me).unwrap().norm() - 0.5).abs() < 1e-12);
            let rho = pure_density(&me);
            assert_eq!(gram_direct(&rho).local_dim, 3);
            assert_eq!(orbit_dim_oracle(&rho), 3);
            let sep = separable_sample(
                rng.random_range(0.0..FRAC_PI_2),
                rng.random_range(0.0..FRAC_PI_2),
                rng.random_range(0.0..2.0 * PI),
                rng.random_range(0.0..2.0 * PI),
            )
            .unwrap();
            assert!(omega(&sep).unwrap().norm() < 1e-12);
            assert_eq!(gram_direct(&pure_density(&sep)).local_dim, 4);
        }
    }

    #[test]
    fn stratum_labels() {
        let prod = PureState::qubits(c(1.0, 0.0), z(), z(), z()).unwrap();
        assert_eq!(
            pure_stratum(&prod, STRATUM_TOL).unwrap(),
            PureStratum::Separable4d
        );
        let bell = schmidt_line_state(FRAC_PI_2);
        assert_eq!(
            pure_stratum(&bell, STRATUM_TOL).unwrap(),
            PureStratum::MaxEntangled3d
        );
        match pure_stratum(&schmidt_line_state(PI / 4.0), STRATUM_TOL).unwrap() {
            PureStratum::Generic5d { theta } => assert!((theta - PI / 4.0).abs() < 1e-12),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn stratum_constant_along_local_orbits() {
        let mut rng = seeded_rng(21);
        for theta in [0.0, 0.4, 1.2, FRAC_PI_2] {
            let w = schmidt_line_state(theta);
            let label = pure_stratum(&w, STRATUM_TOL).unwrap();
            for _ in 0..20 {
                let moved = w.apply(&random_local_unitary(2, 2, &mut rng));
                let other = pure_stratum(&moved, STRATUM_TOL).unwrap();
                assert_eq!(label.orbit_dim(), other.orbit_dim());
            }
        }
    }
}
