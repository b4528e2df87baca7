use orbit_atlas::linalg::max_abs;
use orbit_atlas::states::{compose_bloch, decompose_bloch, random_mixed_state, seeded_rng};

fn main() -> orbit_atlas::Result<()> {
    let mut rng = seeded_rng(1);
    for (k, m) in [(2, 2), (2, 3), (3, 3)] {
        let w = random_mixed_state(k, m, &mut rng)?;
        let f = decompose_bloch(&w);
        let back = compose_bloch(&f)?;
        println!(
            "{k}x{m}: |a| = {:.4}, |b| = {:.4}, |G| = {:.4}, round trip error {:.1e}",
            f.a.norm(),
            f.b.norm(),
            f.g.norm(),
            max_abs(&(back.matrix() - w.matrix()))
        );
    }
    Ok(())
}
