//! su(n) generator bases, structure constants and the partial transpose.
//!
//! Generators are `i` times the generalized Gell-Mann matrices, so that every
//! basis element is antihermitian, traceless, and `Tr(e_j e_k) = -2 δ_jk`.
//! The ordering is fixed: symmetric off-diagonal pairs `(j, k)` with `j < k`
//! in lexicographic order, then the antisymmetric pairs in the same order,
//! then the `n - 1` diagonal elements. For `n = 2` this gives
//! `{iσ₁, iσ₂, iσ₃}`.

use crate::error::{Error, Result};
use crate::linalg::{c, commutator, trace_product, CMat, I};

/// Basis of su(n) normalized to `Tr(e_j e_k) = -2 δ_jk`.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    n: usize,
    generators: Vec<CMat>,
}

impl GeneratorSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[CMat] {
        &self.generators
    }

    pub fn get(&self, j: usize) -> &CMat {
        &self.generators[j]
    }

    /// Largest deviation of `Tr(e_j e_k)` from `-2 δ_jk`.
    pub fn normalization_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (j, ej) in self.generators.iter().enumerate() {
            for (k, ek) in self.generators.iter().enumerate() {
                let target = if j == k { -2.0 } else { 0.0 };
                worst = worst.max((trace_product(ej, ek) - c(target, 0.0)).norm());
            }
        }
        worst
    }
}

/// Real structure constants `c_{jkl}` with `[e_j, e_k] = Σ_l c_{jkl} e_l`.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    n: usize,
    dim: usize,
    data: Vec<f64>,
}

impl StructureConstants {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of generators, `n² - 1`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, j: usize, k: usize, l: usize) -> f64 {
        self.data[(j * self.dim + k) * self.dim + l]
    }

    /// The slice `(k, l) ↦ c_{jkl}` for fixed `j` as a dense matrix.
    pub fn slice(&self, j: usize) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_fn(self.dim, self.dim, |k, l| self.get(j, k, l))
    }

    /// Max-norm of `[e_j, e_k] - Σ_l c_{jkl} e_l` over all pairs.
    pub fn reconstruction_residual(&self, gens: &GeneratorSet) -> f64 {
        let mut worst: f64 = 0.0;
        for j in 0..self.dim {
            for k in 0..self.dim {
                let mut diff = commutator(gens.get(j), gens.get(k));
                for l in 0..self.dim {
                    diff -= gens.get(l).scale(self.get(j, k, l));
                }
                worst = worst.max(crate::linalg::max_abs(&diff));
            }
        }
        worst
    }

    /// Max-norm residual of the Jacobi identity written in structure constants:
    /// `Σ_m (c_{jkm} c_{mlp} + c_{klm} c_{mjp} + c_{ljm} c_{mkp}) = 0`.
    pub fn jacobi_residual(&self) -> f64 {
        let d = self.dim;
        let mut worst: f64 = 0.0;
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    for p in 0..d {
                        let s: f64 = (0..d)
                            .map(|m| {
                                self.get(j, k, m) * self.get(m, l, p)
                                    + self.get(k, l, m) * self.get(m, j, p)
                                    + self.get(l, j, m) * self.get(m, k, p)
                            })
                            .sum();
                        worst = worst.max(s.abs());
                    }
                }
            }
        }
        worst
    }
}

pub fn su_generators(n: usize) -> Result<GeneratorSet> {
    if n < 2 {
        return Err(Error::InvalidDimension(format!(
            "su(n) needs n >= 2, got {n}"
        )));
    }
    let zero = CMat::zeros(n, n);
    let mut generators = Vec::with_capacity(n * n - 1);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|j| (j + 1..n).map(move |k| (j, k)))
        .collect();
    for &(j, k) in &pairs {
        // i (E_jk + E_kj)
        let mut e = zero.clone();
        e[(j, k)] = I;
        e[(k, j)] = I;
        generators.push(e);
    }
    for &(j, k) in &pairs {
        // i (-i E_jk + i E_kj) = E_jk - E_kj
        let mut e = zero.clone();
        e[(j, k)] = c(1.0, 0.0);
        e[(k, j)] = c(-1.0, 0.0);
        generators.push(e);
    }
    for l in 1..n {
        let scale = (2.0 / (l * (l + 1)) as f64).sqrt();
        let mut e = zero.clone();
        for j in 0..l {
            e[(j, j)] = I * scale;
        }
        e[(l, l)] = I * (-(l as f64) * scale);
        generators.push(e);
    }
    Ok(GeneratorSet { n, generators })
}

/// `c_{jkl} = -½ Tr([e_j, e_k] e_l)`, valid for the `-2 δ` normalization.
pub fn structure_constants(gens: &GeneratorSet) -> StructureConstants {
    let dim = gens.len();
    let mut data = vec![0.0; dim * dim * dim];
    for j in 0..dim {
        for k in (j + 1)..dim {
            let comm = commutator(gens.get(j), gens.get(k));
            for l in 0..dim {
                let value = -0.5 * trace_product(&comm, gens.get(l)).re;
                data[(j * dim + k) * dim + l] = value;
                data[(k * dim + j) * dim + l] = -value;
            }
        }
    }
    StructureConstants {
        n: gens.n(),
        dim,
        data,
    }
}

/// Transposes the indices of the second tensor factor of a `(K·M)²` matrix.
pub fn partial_transpose_raw(w: &CMat, k: usize, m: usize) -> Result<CMat> {
    let size = k * m;
    if w.nrows() != size || w.ncols() != size || k == 0 || m == 0 {
        return Err(Error::InvalidBipartition {
            size: w.nrows(),
            k,
            m,
        });
    }
    Ok(CMat::from_fn(size, size, |row, col| {
        let (ia, ib) = (row / m, row % m);
        let (ja, jb) = (col / m, col % m);
        w[(ia * m + jb, ja * m + ib)]
    }))
}

/// Partial transpose on the second subsystem of a bipartite density matrix.
pub fn partial_transpose(w: &crate::states::DensityMatrix) -> CMat {
    partial_transpose_raw(w.matrix(), w.k(), w.m())
        .expect("DensityMatrix always carries a consistent bipartition")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{hermitian_eigenvalues, max_abs, pauli, trace};
    use crate::states::DensityMatrix;

    #[test]
    fn qubit_generators_are_i_pauli() {
        let gens = su_generators(2).unwrap();
        let p = pauli();
        for (e, s) in gens.generators().iter().zip(p.iter()) {
            assert!(max_abs(&(e - s * I)) < 1e-15);
        }
    }

    #[test]
    fn normalization_and_antihermiticity() {
        for n in 2..=4 {
            let gens = su_generators(n).unwrap();
            assert_eq!(gens.len(), n * n - 1);
            assert!(gens.normalization_defect() < 1e-12, "n = {n}");
            for e in gens.generators() {
                assert!(max_abs(&(e.adjoint() + e)) < 1e-15);
                assert!(trace(e).norm() < 1e-12);
            }
        }
        let g2 = su_generators(2).unwrap();
        assert!((trace_product(g2.get(0), g2.get(0)).re + 2.0).abs() < 1e-15);
        assert!(trace_product(g2.get(0), g2.get(1)).norm() < 1e-15);
    }

    #[test]
    fn rejects_trivial_dimension() {
        assert!(matches!(su_generators(1), Err(Error::InvalidDimension(_))));
        assert!(su_generators(0).is_err());
    }

    #[test]
    fn qubit_structure_constants_are_minus_two_epsilon() {
        let gens = su_generators(2).unwrap();
        let sc = structure_constants(&gens);
        let eps = |j: usize, k: usize, l: usize| -> f64 {
            match (j, k, l) {
                (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
                (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
                _ => 0.0,
            }
        };
        for j in 0..3 {
            for k in 0..3 {
                for l in 0..3 {
                    assert!((sc.get(j, k, l) + 2.0 * eps(j, k, l)).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn structure_constants_reconstruct_and_satisfy_jacobi() {
        for n in 2..=4 {
            let gens = su_generators(n).unwrap();
            let sc = structure_constants(&gens);
            assert!(sc.reconstruction_residual(&gens) < 1e-12, "n = {n}");
            for j in 0..sc.dim() {
                for l in 0..sc.dim() {
                    assert_eq!(sc.get(j, j, l), 0.0);
                }
            }
        }
        let gens = su_generators(3).unwrap();
        assert!(structure_constants(&gens).jacobi_residual() < 1e-12);
    }

    #[test]
    fn jacobi_identity_by_direct_commutators() {
        // Independent of the structure-constant tensor: nested commutators.
        let gens = su_generators(3).unwrap();
        let g = gens.generators();
        let mut worst: f64 = 0.0;
        for a in g {
            for b in g {
                for d in g {
                    let s = commutator(a, &commutator(b, d))
                        + commutator(b, &commutator(d, a))
                        + commutator(d, &commutator(a, b));
                    worst = worst.max(max_abs(&s));
                }
            }
        }
        assert!(worst < 1e-12);
    }

    #[test]
    fn partial_transpose_of_bell_state() {
        let s = 0.5;
        let mut w = CMat::zeros(4, 4);
        for &(i, j) in &[(0, 0), (0, 3), (3, 0), (3, 3)] {
            w[(i, j)] = c(s, 0.0);
        }
        let rho = DensityMatrix::new(2, 2, w).unwrap();
        let pt = partial_transpose(&rho);
        let ev = hermitian_eigenvalues(&pt);
        let expected = [-0.5, 0.5, 0.5, 0.5];
        for (x, y) in ev.iter().zip(expected) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn partial_transpose_fixes_diagonal_and_is_involution() {
        let d = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![
            c(0.1, 0.0),
            c(0.2, 0.0),
            c(0.3, 0.0),
            c(0.15, 0.0),
            c(0.05, 0.0),
            c(0.2, 0.0),
        ]));
        let pt = partial_transpose_raw(&d, 2, 3).unwrap();
        assert_eq!(pt, d);
        let mut w = CMat::zeros(6, 6);
        for r in 0..6 {
            for col in 0..6 {
                w[(r, col)] = c((r * 7 + col) as f64, (r as f64) - (col as f64));
            }
        }
        let twice = partial_transpose_raw(&partial_transpose_raw(&w, 3, 2).unwrap(), 3, 2).unwrap();
        assert_eq!(twice, w);
    }

    #[test]
    fn partial_transpose_rejects_bad_bipartition() {
        let w = CMat::identity(4, 4);
        assert!(matches!(
            partial_transpose_raw(&w, 2, 3),
            Err(Error::InvalidBipartition { .. })
        ));
    }
}
