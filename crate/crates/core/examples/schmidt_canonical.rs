use orbit_atlas::canonical::{
    normalize_global_phase, omega, pure_stratum, schmidt_pure, STRATUM_TOL,
};
use orbit_atlas::states::{random_pure_state, seeded_rng};

fn main() -> orbit_atlas::Result<()> {
    let mut rng = seeded_rng(3);
    let w = random_pure_state(2, 2, &mut rng)?;
    let s = schmidt_pure(&w)?;
    println!(
        "|omega| = {:.6}, theta = {:.6}, sin theta = {:.6}",
        omega(&w)?.norm(),
        s.theta,
        s.theta.sin()
    );
    let mapped = normalize_global_phase(&w.apply(&s.local_unitary()));
    for (i, (got, want)) in mapped
        .amplitudes()
        .iter()
        .zip(s.canonical_vector.amplitudes().iter())
        .enumerate()
    {
        println!("  amplitude {i}: {got:.6} -> canonical {want:.6}");
    }
    println!("stratum: {:?}", pure_stratum(&w, STRATUM_TOL)?);
    Ok(())
}
