//! Local orbit dimension from the Gram matrix, with the SVD oracle alongside.

use orbit_atlas::gram::{
    gram_closed_form, gram_direct, local_orbit_dim, orbit_dim_oracle, RANK_TOL,
};
use orbit_atlas::linalg::max_abs_real;
use orbit_atlas::states::{
    decompose_bloch, random_mixed_state, seeded_rng, werner_state, DensityMatrix,
};

fn show(label: &str, w: &DensityMatrix) {
    let report = gram_direct(w);
    let spectrum: Vec<String> = report.spectrum.iter().map(|x| format!("{x:.4}")).collect();
    println!(
        "{label}: D_l = {} of {} (oracle {}), spectrum [{}]",
        local_orbit_dim(&report, RANK_TOL),
        report.max_dim(),
        orbit_dim_oracle(w),
        spectrum.join(", ")
    );
}

fn main() -> orbit_atlas::Result<()> {
    let mut rng = seeded_rng(2);
    show("maximally mixed", &DensityMatrix::maximally_mixed(2, 2)?);
    show(
        "Werner x=0.8",
        &werner_state(0.8, std::f64::consts::FRAC_PI_2)?,
    );
    let w = random_mixed_state(2, 3, &mut rng)?;
    show("random 2x3", &w);
    let closed = gram_closed_form(&decompose_bloch(&w))?;
    println!(
        "closed form vs direct: {:.1e}",
        max_abs_real(&(closed.c - gram_direct(&w).c))
    );
    Ok(())
}
