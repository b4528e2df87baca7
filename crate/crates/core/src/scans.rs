//! Parameter sweeps: the generalized Werner grid and random-state ensembles.

use std::f64::consts::FRAC_PI_2;
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::entanglement::{
    concurrence_mixed, entanglement_of_formation, maximal_ball_check, ppt_check_with_tol,
    Separability,
};
use crate::error::{Error, Result};
use crate::gram::{count_positive, gram_direct};
use crate::io::fmt_f64;
use crate::states::{random_state_with, seeded_stream, werner_state, StateKind};

pub const WERNER_X_STEPS: usize = 101;
pub const WERNER_THETA_STEPS: usize = 91;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WernerRow {
    pub x: f64,
    pub theta: f64,
    pub concurrence: f64,
    pub eof: f64,
    pub min_pt_eigenvalue: f64,
    pub in_ball: bool,
}

fn grid(steps: usize, hi: f64, i: usize) -> f64 {
    if i + 1 == steps {
        hi
    } else {
        hi * i as f64 / (steps - 1) as f64
    }
}

/// `x ∈ [0, 1]` by `θ ∈ [0, π/2]`, rows in x-major order.
pub fn werner_scan(x_steps: usize, theta_steps: usize, ppt_tol: f64) -> Result<Vec<WernerRow>> {
    if x_steps < 2 || theta_steps < 2 {
        return Err(Error::Precondition(
            "grid needs at least 2 steps per axis".into(),
        ));
    }
    (0..x_steps * theta_steps)
        .into_par_iter()
        .map(|idx| {
            let x = grid(x_steps, 1.0, idx / theta_steps);
            let theta = grid(theta_steps, FRAC_PI_2, idx % theta_steps);
            let w = werner_state(x, theta)?;
            let concurrence = concurrence_mixed(&w)?;
            Ok(WernerRow {
                x,
                theta,
                concurrence,
                eof: entanglement_of_formation(concurrence)?,
                min_pt_eigenvalue: ppt_check_with_tol(&w, ppt_tol).min_eigenvalue(),
                in_ball: maximal_ball_check(&w),
            })
        })
        .collect()
}

pub fn write_werner_csv<W: Write>(rows: &[WernerRow], out: W) -> Result<()> {
    let mut wr = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    wr.write_record([
        "x",
        "theta",
        "concurrence",
        "eof",
        "min_pt_eigenvalue",
        "in_ball",
    ])?;
    for r in rows {
        wr.write_record([
            fmt_f64(r.x),
            fmt_f64(r.theta),
            fmt_f64(r.concurrence),
            fmt_f64(r.eof),
            fmt_f64(r.min_pt_eigenvalue),
            r.in_ball.to_string(),
        ])?;
    }
    wr.flush()?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomRow {
    pub index: usize,
    pub local_dim: usize,
    pub max_local_dim: usize,
    pub lambda_min: f64,
    pub lambda_max: f64,
    /// Smallest eigenvalue counted as nonzero.
    pub lambda_smallest_positive: f64,
    pub ppt_min_eigenvalue: f64,
    pub ppt_verdict: Separability,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomScan {
    pub k: usize,
    pub m: usize,
    pub kind: StateKind,
    pub seed: u64,
    pub rows: Vec<RandomRow>,
    pub fraction_maximal: f64,
}

/// Sample `i` uses stream `i` of `seed`, so the output does not depend on
/// thread scheduling.
pub fn random_scan(
    kind: StateKind,
    k: usize,
    m: usize,
    count: usize,
    seed: u64,
    rank_tol: f64,
    ppt_tol: f64,
) -> Result<RandomScan> {
    if count == 0 {
        return Err(Error::Precondition("count must be at least 1".into()));
    }
    let rows = (0..count)
        .into_par_iter()
        .map(|index| {
            let mut rng = seeded_stream(seed, index as u64);
            let w = random_state_with(kind, k, m, &mut rng)?;
            let gram = gram_direct(&w);
            let local_dim = count_positive(&gram.spectrum, rank_tol);
            let ppt = ppt_check_with_tol(&w, ppt_tol);
            let n = gram.spectrum.len();
            Ok(RandomRow {
                index,
                local_dim,
                max_local_dim: gram.max_dim(),
                lambda_min: gram.spectrum[0],
                lambda_max: gram.spectrum[n - 1],
                lambda_smallest_positive: if local_dim == 0 {
                    0.0
                } else {
                    gram.spectrum[n - local_dim]
                },
                ppt_min_eigenvalue: ppt.min_eigenvalue(),
                ppt_verdict: ppt.verdict,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let maximal = rows
        .iter()
        .filter(|r| r.local_dim == r.max_local_dim)
        .count();
    Ok(RandomScan {
        k,
        m,
        kind,
        seed,
        fraction_maximal: maximal as f64 / rows.len() as f64,
        rows,
    })
}

pub fn write_random_csv<W: Write>(scan: &RandomScan, out: W) -> Result<()> {
    let mut wr = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    wr.write_record([
        "index",
        "local_dim",
        "max_local_dim",
        "lambda_min",
        "lambda_max",
        "lambda_smallest_positive",
        "ppt_min_eigenvalue",
        "ppt_verdict",
    ])?;
    for r in &scan.rows {
        let verdict = match r.ppt_verdict {
            Separability::Separable => "separable",
            Separability::Entangled => "entangled",
            Separability::PptUndecided => "ppt_undecided",
        };
        wr.write_record([
            r.index.to_string(),
            r.local_dim.to_string(),
            r.max_local_dim.to_string(),
            fmt_f64(r.lambda_min),
            fmt_f64(r.lambda_max),
            fmt_f64(r.lambda_smallest_positive),
            fmt_f64(r.ppt_min_eigenvalue),
            verdict.to_string(),
        ])?;
    }
    wr.flush()?;
    Ok(())
}
