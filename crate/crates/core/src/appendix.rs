//! The nine families of two-qubit states with submaximal local orbits, their
//! printed closed forms, and a harness that checks them against numerics.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::entanglement::{
    concurrence_mixed, ppt_check_with_tol, spin_flip_spectrum, Separability,
};
use crate::error::{Error, Result};
use crate::gram::{gram_closed_form, gram_direct, local_orbit_dim, orbit_dim_oracle, RANK_TOL};
use crate::linalg::{c, max_abs_real, multiset_distance, CMat};
use crate::states::{decompose_bloch, seeded_stream, BlochForm, DensityMatrix, PSD_TOL};

/// Default agreement tolerance between printed formulas and numerics.
pub const CASE_TOL: f64 = 1e-9;

/// Two-qubit state in the basis where `G = diag(μ)`, entry by entry.
pub fn rotated_basis_state(mu: [f64; 3], a: [f64; 3], b: [f64; 3]) -> Result<DensityMatrix> {
    let [m1, m2, m3] = mu;
    let [a1, a2, a3] = a;
    let [b1, b2, b3] = b;
    let q = 0.25;
    #[rustfmt::skip]
    let entries = [
        c(q - a3 - b3 - m3, 0.0), c(-b1, -b2),               c(-a1, -a2),               c(-m1 + m2, 0.0),
        c(-b1, b2),               c(q - a3 + b3 + m3, 0.0),  c(-m1 - m2, 0.0),          c(-a1, -a2),
        c(-a1, a2),               c(-m1 - m2, 0.0),          c(q + a3 - b3 + m3, 0.0),  c(-b1, -b2),
        c(-m1 + m2, 0.0),         c(-a1, a2),                c(-b1, b2),                c(q + a3 + b3 - m3, 0.0),
    ];
    DensityMatrix::new(2, 2, CMat::from_row_slice(4, 4, &entries))
}

/// Case number with an optional exchange of `a` and `b` (only 2 and 6).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CaseId {
    pub number: u8,
    pub swapped: bool,
}

impl CaseId {
    pub fn new(number: u8, swapped: bool) -> Result<Self> {
        if !(1..=9).contains(&number) {
            return Err(Error::Precondition(format!(
                "no case {number}, expected 1..9"
            )));
        }
        if swapped && number != 2 && number != 6 {
            return Err(Error::Precondition(format!(
                "case {number} has no exchanged variant"
            )));
        }
        Ok(Self { number, swapped })
    }

    pub fn plain(number: u8) -> Result<Self> {
        Self::new(number, false)
    }

    pub fn all() -> Vec<Self> {
        (1..=9)
            .map(|n| Self {
                number: n,
                swapped: false,
            })
            .collect()
    }

    /// Expected number of zero Gram eigenvalues.
    pub fn predicted_corank(&self) -> usize {
        match self.number {
            1 => 6,
            2 => 4,
            3 => 3,
            4 | 5 => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.number, if self.swapped { "'" } else { "" })
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (digits, swapped) = match s.strip_suffix('\'') {
            Some(rest) => (rest, true),
            None => (s, false),
        };
        let number = digits
            .parse::<u8>()
            .map_err(|_| Error::Precondition(format!("cannot parse case id {s:?}")))?;
        Self::new(number, swapped)
    }
}

impl Serialize for CaseId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CaseId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a comma-separated list such as `1,2,6'` or the range `1-9`.
pub fn parse_case_list(s: &str) -> Result<Vec<CaseId>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((lo, hi)) = part.split_once('-') {
            let lo: u8 = lo
                .trim()
                .parse()
                .map_err(|_| Error::Precondition(format!("bad range {part:?}")))?;
            let hi: u8 = hi
                .trim()
                .parse()
                .map_err(|_| Error::Precondition(format!("bad range {part:?}")))?;
            for n in lo..=hi {
                out.push(CaseId::plain(n)?);
            }
        } else {
            out.push(part.parse()?);
        }
    }
    if out.is_empty() {
        return Err(Error::Precondition("empty case list".into()));
    }
    Ok(out)
}

/// Free parameters of each family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "case")]
pub enum CaseParams {
    #[serde(rename = "1")]
    Case1,
    #[serde(rename = "2")]
    Case2 { a: [f64; 3] },
    #[serde(rename = "3")]
    Case3 { mu: f64 },
    #[serde(rename = "4")]
    Case4 { a: [f64; 3], b: [f64; 3] },
    #[serde(rename = "5")]
    Case5 { mu: f64, a: f64, b: f64 },
    #[serde(rename = "6")]
    Case6 { mu: f64, a: f64, b: [f64; 3] },
    /// `G = μI`, `b = ratio · a`.
    #[serde(rename = "7")]
    Case7 { mu: f64, a: [f64; 3], ratio: f64 },
    #[serde(rename = "8")]
    Case8 { mu1: f64, mu2: f64, a: f64, b: f64 },
    #[serde(rename = "9")]
    Case9 { mu1: f64, mu2: f64, a: f64, b: f64 },
}

fn norm(v: &[f64; 3]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn scaled(v: &[f64; 3], s: f64) -> [f64; 3] {
    v.map(|x| x * s)
}

impl CaseParams {
    pub fn number(&self) -> u8 {
        match self {
            Self::Case1 => 1,
            Self::Case2 { .. } => 2,
            Self::Case3 { .. } => 3,
            Self::Case4 { .. } => 4,
            Self::Case5 { .. } => 5,
            Self::Case6 { .. } => 6,
            Self::Case7 { .. } => 7,
            Self::Case8 { .. } => 8,
            Self::Case9 { .. } => 9,
        }
    }

    /// `(diag G, a, b)` in the rotated basis.
    pub fn layout(&self) -> ([f64; 3], [f64; 3], [f64; 3]) {
        let z = [0.0; 3];
        match *self {
            Self::Case1 => (z, z, z),
            Self::Case2 { a } => (z, a, z),
            Self::Case3 { mu } => ([mu; 3], z, z),
            Self::Case4 { a, b } => (z, a, b),
            Self::Case5 { mu, a, b } => ([mu, 0.0, 0.0], [a, 0.0, 0.0], [b, 0.0, 0.0]),
            Self::Case6 { mu, a, b } => ([mu, 0.0, 0.0], [a, 0.0, 0.0], b),
            Self::Case7 { mu, a, ratio } => ([mu; 3], a, scaled(&a, ratio)),
            Self::Case8 { mu1, mu2, a, b } => ([mu1, mu2, mu2], [a, 0.0, 0.0], [b, 0.0, 0.0]),
            Self::Case9 { mu1, mu2, a, b } => ([mu1, mu1, mu2], [0.0, 0.0, a], [0.0, 0.0, b]),
        }
    }

    pub fn bloch(&self, swapped: bool) -> BlochForm {
        let (mu, a, b) = self.layout();
        if swapped {
            BlochForm::qubits_diagonal(mu, b, a)
        } else {
            BlochForm::qubits_diagonal(mu, a, b)
        }
    }
}

/// Builds the family member; positivity is not enforced so boundary and
/// out-of-domain points stay constructible.
pub fn case_state(id: CaseId, params: &CaseParams) -> Result<DensityMatrix> {
    if params.number() != id.number {
        return Err(Error::Precondition(format!(
            "parameters for case {} passed to case {id}",
            params.number()
        )));
    }
    let (mu, a, b) = params.layout();
    if id.swapped {
        rotated_basis_state(mu, b, a)
    } else {
        rotated_basis_state(mu, a, b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeparabilityClaim {
    Separable,
    Entangled,
    /// The printed condition does not apply; nothing is asserted.
    Unclaimed,
}

/// The quantities printed for each family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Quantities {
    /// Gram eigenvalues.
    pub lambda: Vec<f64>,
    /// Eigenvalues of `W`.
    pub rho: Vec<f64>,
    /// Eigenvalues of the partial transpose.
    pub rho_pt: Vec<f64>,
    /// Spin-flip eigenvalues.
    pub xi: Vec<f64>,
    pub concurrence: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CasePrediction {
    pub quantities: Quantities,
    pub separability: SeparabilityClaim,
}

/// Evaluates the printed closed forms literally. Square roots of negative
/// numbers come out as NaN.
pub fn case_predictions(params: &CaseParams) -> CasePrediction {
    let q = 0.25;
    let sq = f64::sqrt;
    use SeparabilityClaim::*;
    let (lambda, rho, rho_pt, xi, concurrence, separability) = match *params {
        CaseParams::Case1 => (
            vec![0.0; 6],
            vec![q; 4],
            vec![q; 4],
            vec![1.0 / 16.0; 4],
            Some(0.0),
            Separable,
        ),
        CaseParams::Case2 { a } => {
            let na = norm(&a);
            let r = vec![q + na, q + na, q - na, q - na];
            let l = 8.0 * na * na;
            (
                vec![l, l, 0.0, 0.0, 0.0, 0.0],
                r.clone(),
                r,
                vec![1.0 / 16.0 - na * na; 4],
                Some(0.0),
                Separable,
            )
        }
        CaseParams::Case3 { mu } => {
            let l = 32.0 * mu * mu;
            let x2 = (1.0 - 4.0 * mu).powi(2) / 16.0;
            (
                vec![l, l, l, 0.0, 0.0, 0.0],
                vec![q - mu, q - mu, q - mu, q + 3.0 * mu],
                vec![q + mu, q + mu, q + mu, q - 3.0 * mu],
                vec![(12.0 * mu + 1.0).powi(2) / 16.0, x2, x2, x2],
                Some(if mu <= 1.0 / 12.0 {
                    0.0
                } else {
                    6.0 * mu - 0.5
                }),
                if mu.abs() <= 1.0 / 12.0 + 1e-12 {
                    Separable
                } else {
                    Entangled
                },
            )
        }
        CaseParams::Case4 { a, b } => {
            let (na, nb) = (norm(&a), norm(&b));
            let d = (na - nb).abs();
            let r = vec![q + na + nb, q - na - nb, q + d, q - d];
            let (la, lb) = (8.0 * na * na, 8.0 * nb * nb);
            let (x1, x3) = (
                1.0 / 16.0 + (na + nb).powi(2),
                1.0 / 16.0 + (na - nb).powi(2),
            );
            (
                vec![la, la, lb, lb, 0.0, 0.0],
                r.clone(),
                r,
                vec![x1, x1, x3, x3],
                Some(0.0),
                Separable,
            )
        }
        CaseParams::Case5 { mu, a, b } => {
            let r = vec![
                q + a + b - mu,
                q - a + b + mu,
                q - a - b - mu,
                q + a - b + mu,
            ];
            let (la, lb) = (8.0 * (a * a + mu * mu), 8.0 * (b * b + mu * mu));
            let x1 = (q + mu).powi(2) - (a - b).powi(2);
            let x3 = (q - mu).powi(2) - (a + b).powi(2);
            (
                vec![la, la, lb, lb, 0.0, 0.0],
                r.clone(),
                r,
                vec![x1, x1, x3, x3],
                Some(0.0),
                Separable,
            )
        }
        CaseParams::Case6 { mu, a, b } => {
            let nb2 = b.iter().map(|x| x * x).sum::<f64>();
            let b1 = b[0];
            let root = sq((mu * mu - nb2).powi(2) + 4.0 * mu * mu * b1 * b1);
            let la = 8.0 * (a * a + mu * mu);
            let lambda = vec![
                4.0 * (nb2 + mu * mu + root),
                4.0 * (nb2 + mu * mu - root),
                8.0 * (nb2 + mu * mu),
                la,
                la,
                0.0,
            ];
            let p = sq(mu * mu + nb2 - 2.0 * b1 * mu);
            let m = sq(mu * mu + nb2 + 2.0 * b1 * mu);
            let r = vec![q + a + p, q + a - p, q - a + m, q - a - m];
            let inner =
                sq(4.0 * (a * a - mu * mu) * nb2 + 4.0 * mu * mu * b1 * b1 + 2.0 * mu * a * b1);
            let base = 1.0 / 16.0 + mu * mu - a * a - nb2;
            (
                lambda,
                r.clone(),
                r,
                vec![base + inner, base + inner, base - inner, base - inner],
                Some(0.0),
                Separable,
            )
        }
        CaseParams::Case7 { mu, a, ratio: x } => {
            let na = norm(&a);
            let k = (x * x - 1.0) * na * na;
            let root = sq(16.0 * mu.powi(4) + (x * x - 1.0).powi(2) * na * na);
            let lambda = vec![
                4.0 * (k + sq(mu * mu + root)),
                4.0 * (k + sq(mu * mu - root)),
                4.0 * (k - sq(mu * mu + root)),
                4.0 * (k - sq(mu * mu - root)),
                32.0 * mu * mu,
                0.0,
            ];
            let sm = sq(4.0 * mu * mu + (x - 1.0).powi(2) * na * na);
            let sp = sq(4.0 * mu * mu + (x + 1.0).powi(2) * na * na);
            let rho = vec![
                q - mu + (x + 1.0).abs() * na,
                q - mu - (x + 1.0).abs() * na,
                q + mu + sm,
                q + mu - sm,
            ];
            let rho_pt = vec![
                q + mu + (x - 1.0).abs() * na,
                q + mu - (x - 1.0).abs() * na,
                q - mu + sp,
                q - mu - sp,
            ];
            let base = 1.0 / 16.0 + mu / 2.0 + 5.0 * mu * mu - (x - 1.0).powi(2) * na * na;
            let rr = sq(4.0 * (mu + 1.0).powi(2) - 16.0 * (x - 1.0).powi(2) * na * na);
            let x34 = (q - mu).powi(2) - (x + 1.0).powi(2) * na * na;
            let xi = vec![base + mu * rr, base - mu * rr, x34, x34];
            let entangled =
                (sp > q - mu && q - mu >= (x + 1.0).abs() * na) || q < (x - 1.0).abs() * na;
            (
                lambda,
                rho,
                rho_pt,
                xi,
                None,
                if entangled { Entangled } else { Unclaimed },
            )
        }
        CaseParams::Case8 { mu1, mu2, a, b } => {
            let (lambda, rho, rho_pt, xi, entangled) =
                two_mu_family(mu1, mu2, a, b, (b - a - mu1) > q);
            (
                lambda,
                rho,
                rho_pt,
                xi,
                None,
                if entangled { Entangled } else { Unclaimed },
            )
        }
        CaseParams::Case9 { mu1, mu2, a, b } => {
            // Same printed structure with the roles of μ₁ and μ₂ exchanged.
            let (lambda, rho, rho_pt, xi, entangled) =
                two_mu_family(mu2, mu1, a, b, (b - a - mu2) > q);
            (
                lambda,
                rho,
                rho_pt,
                xi,
                None,
                if entangled { Entangled } else { Unclaimed },
            )
        }
    };
    CasePrediction {
        quantities: Quantities {
            lambda,
            rho,
            rho_pt,
            xi,
            concurrence,
        },
        separability,
    }
}

/// Printed forms of case 8, written for `G = diag(s, d, d)` with `s` the
/// single and `d` the doubled diagonal entry.
#[allow(clippy::type_complexity)]
fn two_mu_family(
    s: f64,
    d: f64,
    a: f64,
    b: f64,
    second: bool,
) -> (Vec<f64>, Vec<f64>, Vec<f64>, Vec<f64>, bool) {
    let q = 0.25;
    let root = (16.0 * s * s * d * d + (a * a - b * b).powi(2)).sqrt();
    let base = a * a + b * b + 2.0 * s * s + 2.0 * d * d;
    let lambda = vec![
        4.0 * (base + root),
        4.0 * (base + root),
        4.0 * (base - root),
        4.0 * (base - root),
        32.0 * d * d,
        0.0,
    ];
    let sm = (4.0 * d * d + (a - b).powi(2)).sqrt();
    let sp = (4.0 * d * d + (a + b).powi(2)).sqrt();
    let rho = vec![q - s + a + b, q - s - a - b, q + s + sm, q + s - sm];
    let rho_pt = vec![q + s - a + b, q + s + a - b, q - s + sp, q - s - sp];
    let t = ((q + s).powi(2) - (a - b).powi(2)).sqrt();
    let x12 = (q - s).powi(2) - (a + b).powi(2);
    let xi = vec![x12, x12, (t + 2.0 * d).powi(2), (t - 2.0 * d).powi(2)];
    let entangled = (sp > q - s && q - s >= (a + b).abs()) || second;
    (lambda, rho, rho_pt, xi, entangled)
}

fn residual(predicted: &[f64], numeric: &[f64]) -> f64 {
    if predicted.iter().any(|x| !x.is_finite()) {
        return f64::INFINITY;
    }
    multiset_distance(predicted, numeric)
}

/// Comparison of one parameter point against direct numerics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseVerdict {
    pub gram_eig_residual: f64,
    pub w_eig_residual: f64,
    pub pt_eig_residual: f64,
    pub xi_residual: f64,
    /// `None` where no concurrence is printed.
    pub concurrence_residual: Option<f64>,
    pub corank: usize,
    pub corank_match: bool,
    pub separability_claim: SeparabilityClaim,
    pub ppt_verdict: Separability,
    pub separability_match: bool,
    pub psd: bool,
    /// Largest entry of `gram_direct - gram_closed_form`.
    pub closed_form_residual: f64,
    pub rank_oracle_match: bool,
    pub predicted: Quantities,
    pub numeric: Quantities,
    /// Printed quantities off by more than the tolerance passed to [`verify_case`].
    pub mismatches: Vec<String>,
}

impl CaseVerdict {
    /// Names of printed quantities whose residual exceeds `tol`.
    pub fn mismatches_at(&self, tol: f64) -> Vec<&'static str> {
        let mut out = Vec::new();
        // `!(r <= tol)` also catches NaN.
        let bad = |r: f64| r.is_nan() || r > tol;
        if bad(self.gram_eig_residual) {
            out.push("lambda");
        }
        if bad(self.w_eig_residual) {
            out.push("rho");
        }
        if bad(self.pt_eig_residual) {
            out.push("rho_pt");
        }
        if bad(self.xi_residual) {
            out.push("xi");
        }
        if self.concurrence_residual.is_some_and(bad) {
            out.push("concurrence");
        }
        if !self.corank_match {
            out.push("corank");
        }
        if !self.separability_match {
            out.push("separability");
        }
        out
    }

    pub fn formulas_match(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// Numerical self-consistency that must hold whatever the printed forms say.
    pub fn self_consistent(&self) -> bool {
        self.closed_form_residual <= 1e-10 && self.rank_oracle_match
    }
}

pub fn verify_case(id: CaseId, params: &CaseParams, tol: f64) -> Result<CaseVerdict> {
    let w = case_state(id, params)?;
    let pred = case_predictions(params);

    let gram = gram_direct(&w);
    let closed = gram_closed_form(&decompose_bloch(&w))?;
    let closed_form_residual = max_abs_real(&(&gram.c - &closed.c));
    let local_dim = local_orbit_dim(&gram, RANK_TOL);
    let rank_oracle_match = local_dim == orbit_dim_oracle(&w);
    let corank = gram.max_dim() - local_dim;

    let psd = w.min_eigenvalue() >= -PSD_TOL;
    let ppt = ppt_check_with_tol(&w, PSD_TOL);
    let xi = spin_flip_spectrum(&w)?.to_vec();
    let conc = if psd {
        Some(concurrence_mixed(&w)?)
    } else {
        None
    };
    let numeric = Quantities {
        lambda: gram.spectrum.clone(),
        rho: w.eigenvalues(),
        rho_pt: ppt.spectrum.clone(),
        xi,
        concurrence: conc,
    };
    let concurrence_residual = match (pred.quantities.concurrence, conc) {
        (Some(p), Some(n)) => Some((p - n).abs()),
        (Some(_), None) => Some(f64::INFINITY),
        _ => None,
    };
    let separability_match = match pred.separability {
        SeparabilityClaim::Separable => ppt.verdict == Separability::Separable,
        SeparabilityClaim::Entangled => ppt.verdict == Separability::Entangled,
        SeparabilityClaim::Unclaimed => true,
    };
    let mut verdict = CaseVerdict {
        gram_eig_residual: residual(&pred.quantities.lambda, &numeric.lambda),
        w_eig_residual: residual(&pred.quantities.rho, &numeric.rho),
        pt_eig_residual: residual(&pred.quantities.rho_pt, &numeric.rho_pt),
        xi_residual: residual(&pred.quantities.xi, &numeric.xi),
        concurrence_residual,
        corank,
        corank_match: corank == id.predicted_corank(),
        separability_claim: pred.separability,
        ppt_verdict: ppt.verdict,
        separability_match,
        psd,
        closed_form_residual,
        rank_oracle_match,
        predicted: pred.quantities,
        numeric,
        mismatches: Vec::new(),
    };
    verdict.mismatches = verdict
        .mismatches_at(tol)
        .into_iter()
        .map(String::from)
        .collect();
    Ok(verdict)
}

fn uniform3<R: Rng + ?Sized>(rng: &mut R, half: f64) -> [f64; 3] {
    [0; 3].map(|_| rng.random_range(-half..=half))
}

/// Uniform draw over the positive part of a bounding box, by rejection.
pub fn sample_params<R: Rng + ?Sized>(number: u8, rng: &mut R) -> Result<CaseParams> {
    let q = 0.25;
    for _ in 0..100_000 {
        let p = match number {
            1 => CaseParams::Case1,
            2 => CaseParams::Case2 {
                a: uniform3(rng, q),
            },
            3 => CaseParams::Case3 {
                mu: rng.random_range(-1.0 / 12.0..=q),
            },
            4 => CaseParams::Case4 {
                a: uniform3(rng, q),
                b: uniform3(rng, q),
            },
            5 => CaseParams::Case5 {
                mu: rng.random_range(-q..=q),
                a: rng.random_range(-q..=q),
                b: rng.random_range(-q..=q),
            },
            6 => CaseParams::Case6 {
                mu: rng.random_range(-q..=q),
                a: rng.random_range(-q..=q),
                b: uniform3(rng, q),
            },
            7 => CaseParams::Case7 {
                mu: rng.random_range(-q..=q),
                a: uniform3(rng, q),
                ratio: rng.random_range(-2.0..=2.0),
            },
            8 => CaseParams::Case8 {
                mu1: rng.random_range(-q..=q),
                mu2: rng.random_range(-q..=q),
                a: rng.random_range(-0.5..=0.5),
                b: rng.random_range(-0.5..=0.5),
            },
            9 => CaseParams::Case9 {
                mu1: rng.random_range(-q..=q),
                mu2: rng.random_range(-q..=q),
                a: rng.random_range(-0.5..=0.5),
                b: rng.random_range(-0.5..=0.5),
            },
            n => return Err(Error::Precondition(format!("no case {n}"))),
        };
        let (mu, a, b) = p.layout();
        if rotated_basis_state(mu, a, b)?.is_psd() {
            return Ok(p);
        }
    }
    Err(Error::Precondition(format!(
        "rejection sampling for case {number} did not converge"
    )))
}

/// Points on the boundary of each positivity domain.
pub fn boundary_params(number: u8) -> Vec<CaseParams> {
    let q = 0.25;
    match number {
        2 => vec![
            CaseParams::Case2 { a: [q, 0.0, 0.0] },
            CaseParams::Case2 {
                a: [0.0, 0.15, -0.2],
            },
        ],
        3 => vec![
            CaseParams::Case3 { mu: -1.0 / 12.0 },
            CaseParams::Case3 { mu: 1.0 / 12.0 },
            CaseParams::Case3 { mu: q },
        ],
        4 => vec![CaseParams::Case4 {
            a: [0.1, 0.0, 0.0],
            b: [0.0, 0.09, 0.12],
        }],
        5 => vec![
            CaseParams::Case5 {
                mu: 0.1,
                a: 0.05,
                b: 0.1,
            },
            CaseParams::Case5 {
                mu: -0.05,
                a: 0.25,
                b: 0.05,
            },
        ],
        6 => {
            let (mu, b): (f64, [f64; 3]) = (0.1, [0.06, 0.08, 0.0]);
            let reach = ((b[0] + mu) * (b[0] + mu) + b[1] * b[1]).sqrt();
            vec![CaseParams::Case6 {
                mu,
                a: q - reach,
                b,
            }]
        }
        7 => vec![CaseParams::Case7 {
            mu: 0.05,
            a: [0.06, 0.08, 0.0],
            ratio: 1.0,
        }],
        8 => vec![CaseParams::Case8 {
            mu1: 0.05,
            mu2: 0.05,
            a: 0.12,
            b: 0.08,
        }],
        9 => vec![CaseParams::Case9 {
            mu1: 0.05,
            mu2: 0.05,
            a: 0.12,
            b: 0.08,
        }],
        _ => Vec::new(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointReport {
    pub params: CaseParams,
    pub boundary: bool,
    pub verdict: CaseVerdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: CaseId,
    pub predicted_corank: usize,
    pub points: usize,
    pub max_gram_eig_residual: f64,
    pub max_w_eig_residual: f64,
    pub max_pt_eig_residual: f64,
    pub max_xi_residual: f64,
    pub max_concurrence_residual: Option<f64>,
    pub corank_matches: bool,
    pub separability_matches: bool,
    pub self_consistent: bool,
    /// Printed quantities that disagree with numerics at some point.
    pub typo_candidates: Vec<String>,
    pub all_match: bool,
    pub details: Vec<PointReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AppendixReport {
    pub seed: u64,
    pub samples: usize,
    pub tol: f64,
    pub cases: Vec<CaseReport>,
    pub all_match: bool,
}

fn fmax(values: impl Iterator<Item = f64>) -> f64 {
    // NaN and infinity both propagate as infinity.
    values.fold(0.0, |acc, x| {
        if x.is_nan() {
            f64::INFINITY
        } else {
            acc.max(x)
        }
    })
}

/// Verifies one case on `samples` random points (one for the parameter-free
/// case 1) plus its boundary points. Each case draws from its own stream.
pub fn verify_case_batch(id: CaseId, samples: usize, seed: u64, tol: f64) -> Result<CaseReport> {
    let mut rng = seeded_stream(seed, u64::from(id.number) * 2 + u64::from(id.swapped));
    let random = if id.number == 1 { 1 } else { samples };
    let mut points: Vec<(CaseParams, bool)> = Vec::with_capacity(random + 3);
    for _ in 0..random {
        points.push((sample_params(id.number, &mut rng)?, false));
    }
    points.extend(boundary_params(id.number).into_iter().map(|p| (p, true)));

    let details = points
        .into_iter()
        .map(|(params, boundary)| {
            let verdict = verify_case(id, &params, tol)?;
            Ok(PointReport {
                params,
                boundary,
                verdict,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut typo_candidates: Vec<String> = Vec::new();
    for d in &details {
        for m in &d.verdict.mismatches {
            if !typo_candidates.contains(m) {
                typo_candidates.push(m.clone());
            }
        }
    }
    let conc: Vec<f64> = details
        .iter()
        .filter_map(|d| d.verdict.concurrence_residual)
        .collect();
    Ok(CaseReport {
        case: id,
        predicted_corank: id.predicted_corank(),
        points: details.len(),
        max_gram_eig_residual: fmax(details.iter().map(|d| d.verdict.gram_eig_residual)),
        max_w_eig_residual: fmax(details.iter().map(|d| d.verdict.w_eig_residual)),
        max_pt_eig_residual: fmax(details.iter().map(|d| d.verdict.pt_eig_residual)),
        max_xi_residual: fmax(details.iter().map(|d| d.verdict.xi_residual)),
        max_concurrence_residual: (!conc.is_empty()).then(|| fmax(conc.into_iter())),
        corank_matches: details.iter().all(|d| d.verdict.corank_match),
        separability_matches: details.iter().all(|d| d.verdict.separability_match),
        self_consistent: details.iter().all(|d| d.verdict.self_consistent()),
        all_match: typo_candidates.is_empty(),
        typo_candidates,
        details,
    })
}

/// Runs [`verify_case_batch`] over several cases in parallel; report order
/// follows `ids`.
pub fn verify_cases(ids: &[CaseId], samples: usize, seed: u64, tol: f64) -> Result<AppendixReport> {
    let cases = ids
        .par_iter()
        .map(|&id| verify_case_batch(id, samples, seed, tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(AppendixReport {
        seed,
        samples,
        tol,
        all_match: cases.iter().all(|c| c.all_match),
        cases,
    })
}
