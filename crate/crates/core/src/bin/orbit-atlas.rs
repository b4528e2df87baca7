use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use orbit_atlas::analysis::{analyze, Tolerances};
use orbit_atlas::appendix::{parse_case_list, verify_cases, CaseId, CASE_TOL};
use orbit_atlas::entanglement::{
    absolute_separability, cstar, maximal_ball_check, purity_in_maximal_ball, AbsoluteSeparability,
    PPT_TOL,
};
use orbit_atlas::gram::RANK_TOL;
use orbit_atlas::io::read_state;
use orbit_atlas::scans::{
    random_scan, werner_scan, write_random_csv, write_werner_csv, WERNER_THETA_STEPS,
    WERNER_X_STEPS,
};
use orbit_atlas::states::StateKind;
use orbit_atlas::strata::{dims_report, DEGENERACY_TOL};

const DEFAULT_SEED: u64 = 2000;

#[derive(Parser)]
#[command(
    name = "orbit-atlas",
    version,
    about = "Local-orbit geometry of bipartite quantum states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full JSON report on one state (density matrix or Bloch form)
    Analyze {
        file: PathBuf,
        /// Relative rank tolerance for the Gram spectrum
        #[arg(long, default_value_t = RANK_TOL)]
        tol: f64,
        #[arg(long, default_value_t = PPT_TOL)]
        ppt_tol: f64,
        #[arg(long, default_value_t = DEGENERACY_TOL)]
        degeneracy_tol: f64,
    },
    /// Concurrence, EoF and PPT data on the generalized Werner grid (CSV)
    WernerScan {
        #[arg(long, default_value_t = WERNER_X_STEPS)]
        x_steps: usize,
        #[arg(long, default_value_t = WERNER_THETA_STEPS)]
        theta_steps: usize,
        /// PPT tolerance
        #[arg(long, default_value_t = PPT_TOL)]
        tol: f64,
        /// Output file; stdout if omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the printed closed forms of the submaximal families
    AppendixVerify {
        /// Comma-separated ids or ranges, e.g. `1-5` or `2,6'`
        #[arg(long, default_value = "1-9")]
        cases: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, env = "ORBIT_ATLAS_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = CASE_TOL)]
        tol: f64,
        /// JSON report file; stdout if omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Gram rank and PPT data for random states (CSV)
    RandomScan {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, env = "ORBIT_ATLAS_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value = "mixed")]
        kind: StateKind,
        /// Relative rank tolerance
        #[arg(long, default_value_t = RANK_TOL)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximal local, generic global and effective dimensions
    Dims { k: usize, m: usize },
    /// Maximal-ball membership of a state file or a spectrum
    BallCheck {
        file: Option<PathBuf>,
        /// Comma-separated eigenvalues instead of a file
        #[arg(long, value_delimiter = ',', conflicts_with = "file")]
        spectrum: Option<Vec<f64>>,
        /// Slack on c* when judging absolute separability
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
}

enum Failure {
    Input(String),
    Mismatch(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn sink(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

#[derive(Serialize)]
struct BallReport {
    n: usize,
    purity: f64,
    radius: f64,
    distance: f64,
    in_maximal_ball: bool,
    implies: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    cstar: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    absolutely_separable: Option<AbsoluteSeparability>,
}

fn ball_report(spectrum: &[f64], in_ball: bool, tol: f64) -> Result<BallReport, Failure> {
    let n = spectrum.len();
    let nf = n as f64;
    let purity: f64 = spectrum.iter().map(|x| x * x).sum();
    let mut sorted = spectrum.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let (cs, abs) = if n == 4 {
        (
            Some(cstar(&sorted)?),
            Some(absolute_separability(&sorted, tol)?),
        )
    } else {
        (None, None)
    };
    Ok(BallReport {
        n,
        purity,
        radius: (nf * (nf - 1.0)).sqrt().recip(),
        distance: (purity - 1.0 / nf).max(0.0).sqrt(),
        in_maximal_ball: in_ball,
        implies: match (in_ball, n) {
            (false, _) => "nothing",
            (true, 4 | 6) => "separable",
            (true, _) => "non_distillable",
        },
        cstar: cs,
        absolutely_separable: abs,
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze {
            file,
            tol,
            ppt_tol,
            degeneracy_tol,
        } => {
            let input = read_state(&file)?;
            let tols = Tolerances {
                rank: tol,
                ppt: ppt_tol,
                degeneracy: degeneracy_tol,
                ..Tolerances::default()
            };
            print_json(&analyze(input, &tols)?)
        }
        Command::WernerScan {
            x_steps,
            theta_steps,
            tol,
            out,
        } => {
            let rows = werner_scan(x_steps, theta_steps, tol)?;
            write_werner_csv(&rows, sink(out.as_deref())?)?;
            Ok(())
        }
        Command::AppendixVerify {
            cases,
            samples,
            seed,
            tol,
            out,
        } => {
            let ids: Vec<CaseId> = parse_case_list(&cases)?;
            let report = verify_cases(&ids, samples, seed, tol)?;
            let mut w = sink(out.as_deref())?;
            serde_json::to_writer_pretty(&mut w, &report)?;
            writeln!(w)?;
            w.flush()?;
            drop(w);
            for c in &report.cases {
                eprintln!(
                    "case {:<3} points {:>4}  corank {}  {}",
                    c.case.to_string(),
                    c.points,
                    if c.corank_matches { "ok" } else { "MISMATCH" },
                    if c.typo_candidates.is_empty() {
                        "all printed formulas agree".to_string()
                    } else {
                        format!("typo candidates: {}", c.typo_candidates.join(", "))
                    }
                );
            }
            if report.all_match {
                Ok(())
            } else {
                Err(Failure::Mismatch(
                    "printed formulas disagree with numerics".into(),
                ))
            }
        }
        Command::RandomScan {
            k,
            m,
            count,
            seed,
            kind,
            tol,
            out,
        } => {
            let scan = random_scan(kind, k, m, count, seed, tol, PPT_TOL)?;
            let to_file = out.is_some();
            write_random_csv(&scan, sink(out.as_deref())?)?;
            let max = k * k + m * m - 2;
            let line = format!("fraction at D_l = {max}: {}", scan.fraction_maximal);
            if to_file {
                println!("{line}");
            } else {
                eprintln!("{line}");
            }
            Ok(())
        }
        Command::Dims { k, m } => print_json(&dims_report(k, m)?),
        Command::BallCheck {
            file,
            spectrum,
            tol,
        } => {
            let report = match (file, spectrum) {
                (Some(path), None) => {
                    let w = read_state(&path)?.to_density()?;
                    w.check_psd()?;
                    let ev: Vec<f64> = w.eigenvalues().into_iter().map(|x| x.max(0.0)).collect();
                    ball_report(&ev, maximal_ball_check(&w), tol)?
                }
                (None, Some(ev)) => {
                    let sum: f64 = ev.iter().sum();
                    if ev.len() < 2 || ev.iter().any(|x| *x < 0.0) || (sum - 1.0).abs() > 1e-9 {
                        return Err(Failure::Input(
                            "spectrum must be nonnegative and sum to 1".into(),
                        ));
                    }
                    let purity: f64 = ev.iter().map(|x| x * x).sum();
                    ball_report(&ev, purity_in_maximal_ball(purity, ev.len()), tol)?
                }
                _ => return Err(Failure::Input("give a state file or --spectrum".into())),
            };
            print_json(&report)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
    }
}
