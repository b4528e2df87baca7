//! Build the su(n) basis and check it against its own structure constants.

use orbit_atlas::algebra::{structure_constants, su_generators};

fn main() -> orbit_atlas::Result<()> {
    for n in 2..=4 {
        let gens = su_generators(n)?;
        let f = structure_constants(&gens);
        println!(
            "su({n}): {} generators, normalization defect {:.1e}, reconstruction {:.1e}, jacobi {:.1e}",
            gens.len(),
            gens.normalization_defect(),
            f.reconstruction_residual(&gens),
            f.jacobi_residual()
        );
    }
    // for qubits c_jkl = -2 eps_jkl
    let f = structure_constants(&su_generators(2)?);
    println!("c_123 = {}", f.get(0, 1, 2));
    Ok(())
}
