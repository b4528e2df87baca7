//! Bring a random two-qubit state to diagonal correlation form.

use orbit_atlas::canonical::canonicalize_mixed_2x2;
use orbit_atlas::linalg::max_abs;
use orbit_atlas::states::{compose_bloch, decompose_bloch, random_mixed_state, seeded_rng};

fn main() -> orbit_atlas::Result<()> {
    let w = random_mixed_state(2, 2, &mut seeded_rng(4))?;
    let form = canonicalize_mixed_2x2(&decompose_bloch(&w))?;
    println!("mu = {:?}", form.mu);
    println!("a  = {:?}", form.a.as_slice());
    println!("b  = {:?}", form.b.as_slice());
    println!("det sign of G = {}", form.det_sign);
    let moved = w.conjugate_by(&form.local_unitary());
    let canon = compose_bloch(&form.to_bloch())?;
    println!(
        "L W L^dag vs canonical: {:.1e}",
        max_abs(&(moved.matrix() - canon.matrix()))
    );
    Ok(())
}
