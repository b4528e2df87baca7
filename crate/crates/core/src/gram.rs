//! Gram matrix of the local tangent vectors and the local-orbit dimension.
//!
//! The tangent space at `W` to the orbit of `SU(K) ⊗ SU(M)` is spanned by
//! `[e_i ⊗ I, W]` and `[I ⊗ f_α, W]`; their Hilbert-Schmidt Gram matrix
//! `C_{mn} = ½ Tr(W_m W_n)` transforms orthogonally along the orbit, so its
//! spectrum is a local invariant and its rank is the orbit dimension.

use nalgebra::{DMatrix, DVector};

use crate::algebra::{structure_constants, su_generators};
use crate::error::{check_range, Error, Result};
use crate::linalg::{
    commutator, kron, singular_values_real, symmetric_eigenvalues, trace_product, CMat, RMat,
};
use crate::states::{BlochForm, DensityMatrix};

/// Default relative threshold for counting an eigenvalue as positive.
pub const RANK_TOL: f64 = 1e-9;

/// Gram matrix of the local tangent vectors together with its spectrum and rank.
#[derive(Debug, Clone)]
pub struct GramReport {
    pub k: usize,
    pub m: usize,
    pub c: RMat,
    /// Ascending eigenvalues of `c`.
    pub spectrum: Vec<f64>,
    pub rank: usize,
    pub local_dim: usize,
    pub a_block: RMat,
    pub b_block: RMat,
    pub d_block: RMat,
}

impl GramReport {
    fn from_matrix(k: usize, m: usize, c: RMat) -> Self {
        let c = (&c + c.transpose()).scale(0.5);
        let spectrum = symmetric_eigenvalues(&c);
        let rank = count_positive(&spectrum, RANK_TOL);
        let p = k * k - 1;
        let q = m * m - 1;
        let a_block = c.view((0, 0), (p, p)).into_owned();
        let b_block = c.view((0, p), (p, q)).into_owned();
        let d_block = c.view((p, p), (q, q)).into_owned();
        Self {
            k,
            m,
            c,
            spectrum,
            rank,
            local_dim: rank,
            a_block,
            b_block,
            d_block,
        }
    }

    /// `K² + M² - 2`, the largest possible local-orbit dimension.
    pub fn max_dim(&self) -> usize {
        self.k * self.k + self.m * self.m - 2
    }

    pub fn corank(&self) -> usize {
        self.max_dim() - self.rank
    }
}

/// Number of entries above `tol · max(largest, 1)`.
pub fn count_positive(values: &[f64], tol: f64) -> usize {
    let largest = values.iter().copied().fold(0.0, f64::max);
    let threshold = tol * largest.max(1.0);
    values.iter().filter(|&&v| v > threshold).count()
}

/// `[e_i ⊗ I, W]` for every generator of su(K), then `[I ⊗ f_α, W]` for su(M).
pub fn tangent_vectors(w: &DensityMatrix) -> Vec<CMat> {
    let (k, m) = (w.k(), w.m());
    let ek = su_generators(k).expect("k >= 2");
    let fm = su_generators(m).expect("m >= 2");
    let id_k = CMat::identity(k, k);
    let id_m = CMat::identity(m, m);
    ek.generators()
        .iter()
        .map(|e| kron(e, &id_m))
        .chain(fm.generators().iter().map(|f| kron(&id_k, f)))
        .map(|l| commutator(&l, w.matrix()))
        .collect()
}

/// `C_{mn} = ½ Tr(W_m W_n)` computed from the commutators.
pub fn gram_direct(w: &DensityMatrix) -> GramReport {
    let tangents = tangent_vectors(w);
    let n = tangents.len();
    let mut c = RMat::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = 0.5 * trace_product(&tangents[i], &tangents[j]).re;
            c[(i, j)] = v;
            c[(j, i)] = v;
        }
    }
    GramReport::from_matrix(w.k(), w.m(), c)
}

/// Block formulas in terms of the structure constants:
/// `A_ij = (2 G_kα G_mα + M a_k a_m) c_ikl c_jml`,
/// `B_iα = 2 G_kβ G_mγ c_ikm d_αγβ`,
/// `D_αβ = (2 G_mγ G_mδ + K b_γ b_δ) d_αγμ d_βδμ`.
pub fn gram_closed_form(f: &BlochForm) -> Result<GramReport> {
    f.check_dims()?;
    let (k, m) = (f.k, f.m);
    let sc_k = structure_constants(&su_generators(k)?);
    let sc_m = structure_constants(&su_generators(m)?);
    let p = sc_k.dim();
    let q = sc_m.dim();
    let g = &f.g;
    let pk = (g * g.transpose()).scale(2.0) + (&f.a * f.a.transpose()).scale(m as f64);
    let pm = (g.transpose() * g).scale(2.0) + (&f.b * f.b.transpose()).scale(k as f64);

    let slices_k: Vec<RMat> = (0..p).map(|i| sc_k.slice(i)).collect();
    let slices_m: Vec<RMat> = (0..q).map(|al| sc_m.slice(al)).collect();

    // Σ_{k,m,l} X_i[k,l] P[k,m] X_j[m,l] = Tr(X_iᵀ P X_j)
    let quadratic = |slices: &[RMat], weight: &RMat| -> RMat {
        let weighted: Vec<RMat> = slices.iter().map(|x| weight * x).collect();
        let n = slices.len();
        RMat::from_fn(n, n, |i, j| slices[i].dot(&weighted[j]))
    };
    let a_block = quadratic(&slices_k, &pk);
    let d_block = quadratic(&slices_m, &pm);

    // B_iα = 2 ⟨X_i, G Y_αᵀ Gᵀ⟩_F with Y_α[γ, β] = d_αγβ
    let b_block = RMat::from_fn(p, q, |i, al| {
        let inner = g * slices_m[al].transpose() * g.transpose();
        2.0 * slices_k[i].dot(&inner)
    });

    let mut c = RMat::zeros(p + q, p + q);
    c.view_mut((0, 0), (p, p)).copy_from(&a_block);
    c.view_mut((0, p), (p, q)).copy_from(&b_block);
    c.view_mut((p, 0), (q, p)).copy_from(&b_block.transpose());
    c.view_mut((p, p), (q, q)).copy_from(&d_block);
    Ok(GramReport::from_matrix(k, m, c))
}

/// Number of eigenvalues above `tol · max(λ_max, 1)`; this is the local-orbit dimension.
pub fn local_orbit_dim(report: &GramReport, tol: f64) -> usize {
    count_positive(&report.spectrum, tol)
}

/// Rank of the real stack of vectorized tangent vectors, via singular values.
///
/// Row `i` holds `(Re vec W_i, Im vec W_i)`, so the Gram eigenvalues are
/// `σ²/2`; the threshold is applied to `σ²/2` with the same rule as
/// [`local_orbit_dim`].
pub fn orbit_dim_oracle_with_tol(w: &DensityMatrix, tol: f64) -> usize {
    let tangents = tangent_vectors(w);
    let n = w.dim();
    let n2 = n * n;
    let stack = RMat::from_fn(tangents.len(), 2 * n2, |row, col| {
        let z = tangents[row][((col % n2) / n, (col % n2) % n)];
        if col < n2 {
            z.re
        } else {
            z.im
        }
    });
    let halves: Vec<f64> = singular_values_real(&stack)
        .iter()
        .map(|s| 0.5 * s * s)
        .collect();
    count_positive(&halves, tol)
}

pub fn orbit_dim_oracle(w: &DensityMatrix) -> usize {
    orbit_dim_oracle_with_tol(w, RANK_TOL)
}

/// Gram spectrum of a two-qubit pure state with concurrence `c`:
/// `{0, 2c², 1+c, 1+c, 1-c, 1-c}`.
pub fn pure_gram_spectrum(c: f64) -> Result<[f64; 6]> {
    check_range("concurrence", c, 0.0, 1.0, "[0, 1]")?;
    Ok([0.0, 2.0 * c * c, 1.0 + c, 1.0 + c, 1.0 - c, 1.0 - c])
}

/// Two-qubit Gram matrix split as `C = C_G + C_ab` in the frame where `G` is diagonal.
#[derive(Debug, Clone)]
pub struct GramSplit2x2 {
    pub c_g: RMat,
    pub c_ab: RMat,
    /// `8(μ1+μ2)², 8(μ1+μ3)², 8(μ2+μ3)², 8(μ1-μ2)², 8(μ1-μ3)², 8(μ2-μ3)²`.
    pub rho_eigs: [f64; 6],
    /// Eigenvalues of `C_ab`, computed: `8‖a‖²` twice, `8‖b‖²` twice, two zeros.
    pub ab_eigs: [f64; 6],
    pub corank_cg: usize,
    pub corank_cab: usize,
}

fn diagonal_mu(f: &BlochForm) -> Result<[f64; 3]> {
    if f.k != 2 || f.m != 2 {
        return Err(Error::Precondition(format!(
            "expected a 2 x 2 Bloch form, got {} x {}",
            f.k, f.m
        )));
    }
    f.check_dims()?;
    let g = &f.g;
    let off = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .map(|(i, j)| g[(i, j)].abs())
        .fold(0.0, f64::max);
    let scale = g.amax().max(1.0);
    if off > 1e-12 * scale {
        return Err(Error::Precondition(format!(
            "G must be diagonal (largest off-diagonal entry {off:.3e}); canonicalize first"
        )));
    }
    Ok([g[(0, 0)], g[(1, 1)], g[(2, 2)]])
}

fn anti_projector(v: &DVector<f64>) -> RMat {
    (RMat::identity(3, 3).scale(v.norm_squared()) - v * v.transpose()).scale(8.0)
}

pub fn gram_split_2x2(f: &BlochForm) -> Result<GramSplit2x2> {
    let mu = diagonal_mu(f)?;
    let [m1, m2, m3] = mu;
    let mut c_g = RMat::zeros(6, 6);
    let diag = [m2 * m2 + m3 * m3, m1 * m1 + m3 * m3, m1 * m1 + m2 * m2];
    let coupling = [m2 * m3, m1 * m3, m1 * m2];
    for i in 0..3 {
        c_g[(i, i)] = 8.0 * diag[i];
        c_g[(i + 3, i + 3)] = 8.0 * diag[i];
        c_g[(i, i + 3)] = -16.0 * coupling[i];
        c_g[(i + 3, i)] = -16.0 * coupling[i];
    }
    let mut c_ab = RMat::zeros(6, 6);
    c_ab.view_mut((0, 0), (3, 3))
        .copy_from(&anti_projector(&f.a));
    c_ab.view_mut((3, 3), (3, 3))
        .copy_from(&anti_projector(&f.b));

    let sq = |x: f64| 8.0 * x * x;
    let rho_eigs = [
        sq(m1 + m2),
        sq(m1 + m3),
        sq(m2 + m3),
        sq(m1 - m2),
        sq(m1 - m3),
        sq(m2 - m3),
    ];
    let ab_vec = symmetric_eigenvalues(&c_ab);
    let mut ab_eigs = [0.0; 6];
    ab_eigs.copy_from_slice(&ab_vec);

    let corank_cg = 6 - count_positive(&rho_eigs, RANK_TOL);
    let corank_cab = 6 - count_positive(&ab_eigs, RANK_TOL);
    Ok(GramSplit2x2 {
        c_g,
        c_ab,
        rho_eigs,
        ab_eigs,
        corank_cg,
        corank_cab,
    })
}

/// Corank of `C_G` read off the degeneracy pattern of canonical `μ`
/// (`μ1 ≥ μ2 ≥ μ3 ≥ 0` or the all-nonpositive branch), with entries closer
/// than `tol` treated as equal.
pub fn cg_corank_from_pattern(mu: [f64; 3], tol: f64) -> usize {
    let mut s = mu.map(f64::abs);
    s.sort_by(|x, y| y.total_cmp(x));
    let eq = |x: f64, y: f64| (x - y).abs() <= tol;
    let zero = |x: f64| x.abs() <= tol;
    match s {
        [a, _, _] if zero(a) => 6,
        [a, b, c] if eq(a, b) && eq(b, c) => 3,
        [_, b, c] if zero(b) && zero(c) => 2,
        [_, b, c] if eq(b, c) => 1,
        [a, b, _] if eq(a, b) => 1,
        _ => 0,
    }
}

/// Corank of `C_ab`: 6 when `a = b = 0`, 4 when exactly one vanishes, 2 otherwise.
pub fn cab_corank_from_pattern(a: &DVector<f64>, b: &DVector<f64>, tol: f64) -> usize {
    match (a.norm() <= tol, b.norm() <= tol) {
        (true, true) => 6,
        (true, false) | (false, true) => 4,
        (false, false) => 2,
    }
}

/// Max-norms of `B G'ᵀ + 16 det(G') I` and `G'ᵀ B + 16 det(G') I` for a
/// two-qubit Bloch form with arbitrary (not necessarily diagonal) `G'`.
pub fn b_block_identity(f: &BlochForm) -> Result<(f64, f64)> {
    if f.k != 2 || f.m != 2 {
        return Err(Error::Precondition(format!(
            "expected a 2 x 2 Bloch form, got {} x {}",
            f.k, f.m
        )));
    }
    let report = gram_closed_form(f)?;
    let g: &DMatrix<f64> = &f.g;
    let shift = RMat::identity(3, 3).scale(16.0 * g.determinant());
    let right = &report.b_block * g.transpose() + &shift;
    let left = g.transpose() * &report.b_block + &shift;
    Ok((right.amax(), left.amax()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, hermiticity_defect, max_abs_real, multiset_distance};
    use crate::states::{compose_bloch, pure_density, seeded_rng, DensityMatrix, PureState};
    use rand::Rng;

    fn bell() -> DensityMatrix {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        pure_density(&PureState::qubits(c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0)).unwrap())
    }

    fn random_form(k: usize, m: usize, scale: f64, rng: &mut impl Rng) -> BlochForm {
        let (p, q) = (k * k - 1, m * m - 1);
        BlochForm {
            k,
            m,
            a: DVector::from_fn(p, |_, _| rng.random_range(-scale..scale)),
            b: DVector::from_fn(q, |_, _| rng.random_range(-scale..scale)),
            g: DMatrix::from_fn(p, q, |_, _| rng.random_range(-scale..scale)),
        }
    }

    #[test]
    fn tangent_vectors_of_maximally_mixed_vanish() {
        let w = DensityMatrix::maximally_mixed(2, 2).unwrap();
        let t = tangent_vectors(&w);
        assert_eq!(t.len(), 6);
        assert!(t.iter().all(|x| x.iter().all(|z| z.norm() == 0.0)));
        assert_eq!(gram_direct(&w).rank, 0);
        assert_eq!(orbit_dim_oracle(&w), 0);
    }

    #[test]
    fn tangent_vectors_are_hermitian_and_traceless() {
        let mut rng = seeded_rng(1);
        let w = crate::states::random_mixed_state(2, 3, &mut rng).unwrap();
        let t = tangent_vectors(&w);
        assert_eq!(t.len(), 11);
        for x in &t {
            assert!(hermiticity_defect(x) < 1e-12);
            assert!(crate::linalg::trace(x).norm() < 1e-12);
        }
    }

    #[test]
    fn bell_state_gram_spectrum() {
        let report = gram_direct(&bell());
        assert!(multiset_distance(&report.spectrum, &[0.0, 0.0, 0.0, 2.0, 2.0, 2.0]) < 1e-12);
        assert_eq!(report.rank, 3);
        assert_eq!(orbit_dim_oracle(&bell()), 3);
    }

    #[test]
    fn product_state_gram_spectrum() {
        let z = c(0.0, 0.0);
        let w = pure_density(&PureState::qubits(c(1.0, 0.0), z, z, z).unwrap());
        let report = gram_direct(&w);
        assert!(multiset_distance(&report.spectrum, &[0.0, 0.0, 1.0, 1.0, 1.0, 1.0]) < 1e-12);
        assert_eq!(local_orbit_dim(&report, RANK_TOL), 4);
    }

    #[test]
    fn closed_form_with_diagonal_g_only() {
        let mu = [0.07, -0.03, 0.05];
        let f = BlochForm::qubits_diagonal(mu, [0.0; 3], [0.0; 3]);
        let c = gram_closed_form(&f).unwrap().c;
        let [m1, m2, m3] = mu;
        assert!((c[(0, 3)] + 16.0 * m2 * m3).abs() < 1e-15);
        assert!((c[(1, 4)] + 16.0 * m1 * m3).abs() < 1e-15);
        assert!((c[(2, 5)] + 16.0 * m1 * m2).abs() < 1e-15);
        assert!((c[(0, 0)] - 8.0 * (m2 * m2 + m3 * m3)).abs() < 1e-15);
        assert!((c[(4, 4)] - 8.0 * (m1 * m1 + m3 * m3)).abs() < 1e-15);
        assert_eq!(c[(0, 1)], 0.0);
        assert!(gram_closed_form(&BlochForm::zeros(2, 2)).unwrap().c.amax() == 0.0);
    }

    #[test]
    fn closed_form_matches_general_ccc_layout() {
        // Entries of the full two-qubit Gram matrix with a, b and diagonal G.
        let mu = [0.05, 0.02, -0.04];
        let a = [0.03, -0.06, 0.01];
        let b = [-0.02, 0.04, 0.05];
        let c = gram_closed_form(&BlochForm::qubits_diagonal(mu, a, b))
            .unwrap()
            .c;
        let e = 8.0 * (a[1] * a[1] + a[2] * a[2] + mu[1] * mu[1] + mu[2] * mu[2]);
        assert!((c[(0, 0)] - e).abs() < 1e-15);
        assert!((c[(0, 1)] + 8.0 * a[0] * a[1]).abs() < 1e-15);
        assert!((c[(3, 5)] + 8.0 * b[0] * b[2]).abs() < 1e-15);
        assert!(
            (c[(5, 5)] - 8.0 * (b[0] * b[0] + b[1] * b[1] + mu[0] * mu[0] + mu[1] * mu[1])).abs()
                < 1e-15
        );
    }

    #[test]
    fn closed_form_matches_direct_on_random_forms() {
        let mut rng = seeded_rng(5);
        for &(k, m) in &[(2, 2), (2, 3), (3, 2), (3, 3)] {
            for _ in 0..10 {
                let f = random_form(k, m, 0.1, &mut rng);
                let direct = gram_direct(&compose_bloch(&f).unwrap());
                let closed = gram_closed_form(&f).unwrap();
                assert!(max_abs_real(&(&direct.c - &closed.c)) < 1e-10, "{k}x{m}");
            }
        }
    }

    #[test]
    fn generic_mixed_states_have_maximal_orbits() {
        let mut rng = seeded_rng(9);
        for &(k, m) in &[(2, 2), (2, 3)] {
            for _ in 0..20 {
                let w = crate::states::random_mixed_state(k, m, &mut rng).unwrap();
                let report = gram_direct(&w);
                assert_eq!(report.local_dim, k * k + m * m - 2);
                assert_eq!(orbit_dim_oracle(&w), report.local_dim);
                assert!(report.spectrum[0] >= -1e-9 * report.spectrum.last().unwrap());
            }
        }
    }

    #[test]
    fn pure_gram_spectrum_values() {
        assert_eq!(
            pure_gram_spectrum(0.0).unwrap(),
            [0.0, 0.0, 1.0, 1.0, 1.0, 1.0]
        );
        assert_eq!(
            pure_gram_spectrum(1.0).unwrap(),
            [0.0, 2.0, 2.0, 2.0, 0.0, 0.0]
        );
        assert_eq!(
            pure_gram_spectrum(0.5).unwrap(),
            [0.0, 0.5, 1.5, 1.5, 0.5, 0.5]
        );
        assert!(pure_gram_spectrum(1.5).is_err());
        assert!(pure_gram_spectrum(-0.1).is_err());
    }

    #[test]
    fn split_of_isotropic_correlations() {
        let mu = 0.1;
        let s = gram_split_2x2(&BlochForm::qubits_diagonal([mu; 3], [0.0; 3], [0.0; 3])).unwrap();
        assert_eq!(s.corank_cg, 3);
        let expected = [
            32.0 * mu * mu,
            32.0 * mu * mu,
            32.0 * mu * mu,
            0.0,
            0.0,
            0.0,
        ];
        assert!(multiset_distance(&s.rho_eigs, &expected) < 1e-15);
        assert_eq!(s.corank_cab, 6);
    }

    #[test]
    fn split_with_only_b() {
        let s = gram_split_2x2(&BlochForm::qubits_diagonal(
            [0.0; 3],
            [0.0; 3],
            [0.1, 0.0, -0.05],
        ))
        .unwrap();
        assert_eq!(s.corank_cab, 4);
        assert_eq!(s.corank_cg, 6);
        let nb2 = 0.1f64 * 0.1 + 0.05 * 0.05;
        assert!(multiset_distance(&s.ab_eigs, &[0.0, 0.0, 0.0, 0.0, 8.0 * nb2, 8.0 * nb2]) < 1e-15);
    }

    #[test]
    fn split_sums_to_full_gram_and_summands_are_psd() {
        let mut rng = seeded_rng(17);
        for _ in 0..20 {
            let mu = [0; 3].map(|_| rng.random_range(-0.1..0.1));
            let a = [0; 3].map(|_| rng.random_range(-0.1..0.1));
            let b = [0; 3].map(|_| rng.random_range(-0.1..0.1));
            let f = BlochForm::qubits_diagonal(mu, a, b);
            let s = gram_split_2x2(&f).unwrap();
            let full = gram_closed_form(&f).unwrap();
            assert!(max_abs_real(&(&s.c_g + &s.c_ab - &full.c)) < 1e-10);
            let cg = symmetric_eigenvalues(&s.c_g);
            assert!(cg[0] > -1e-12);
            assert!(multiset_distance(&cg, &s.rho_eigs) < 1e-12);
            assert!(s.ab_eigs[0] > -1e-12);
        }
    }

    #[test]
    fn split_requires_diagonal_g() {
        let mut f = BlochForm::qubits_diagonal([0.1; 3], [0.0; 3], [0.0; 3]);
        f.g[(0, 1)] = 0.05;
        assert!(matches!(gram_split_2x2(&f), Err(Error::Precondition(_))));
        assert!(gram_split_2x2(&BlochForm::zeros(2, 3)).is_err());
    }

    #[test]
    fn corank_tables_match_counted_zeros() {
        let cases: [[f64; 3]; 7] = [
            [0.0, 0.0, 0.0],
            [0.1, 0.1, 0.1],
            [0.1, 0.0, 0.0],
            [0.1, 0.05, 0.05],
            [0.1, 0.1, 0.03],
            [0.1, 0.07, 0.03],
            [-0.03, -0.02, -0.02],
        ];
        let expected = [6, 3, 2, 1, 1, 0, 1];
        for (mu, want) in cases.iter().zip(expected) {
            let s = gram_split_2x2(&BlochForm::qubits_diagonal(*mu, [0.0; 3], [0.0; 3])).unwrap();
            assert_eq!(s.corank_cg, want, "{mu:?}");
            assert_eq!(cg_corank_from_pattern(*mu, 1e-12), want, "{mu:?}");
        }
        for (a, b, want) in [
            ([0.0; 3], [0.0; 3], 6),
            ([0.1, 0.0, 0.0], [0.0; 3], 4),
            ([0.0; 3], [0.0, 0.2, 0.0], 4),
            ([0.1, 0.0, 0.0], [0.0, 0.2, 0.0], 2),
        ] {
            let f = BlochForm::qubits_diagonal([0.0; 3], a, b);
            assert_eq!(gram_split_2x2(&f).unwrap().corank_cab, want);
            assert_eq!(cab_corank_from_pattern(&f.a, &f.b, 1e-12), want);
        }
    }

    #[test]
    fn b_block_identity_cases() {
        let mut rng = seeded_rng(23);
        for _ in 0..20 {
            let f = random_form(2, 2, 0.2, &mut rng);
            let (r, l) = b_block_identity(&f).unwrap();
            assert!(r < 1e-10 && l < 1e-10);
        }
        // G' = I gives B = -16 I.
        let f = BlochForm::qubits_diagonal([1.0; 3], [0.0; 3], [0.0; 3]);
        let report = gram_closed_form(&f).unwrap();
        assert!(max_abs_real(&(&report.b_block + RMat::identity(3, 3).scale(16.0))) < 1e-12);
        // Singular G' annihilates the product.
        let mut f = random_form(2, 2, 0.2, &mut rng);
        let col = f.g.column(0).clone_owned();
        f.g.set_column(2, &(col * 2.0));
        let report = gram_closed_form(&f).unwrap();
        assert!((&report.b_block * f.g.transpose()).amax() < 1e-12);
    }
}
