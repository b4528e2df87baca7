use orbit_atlas::strata::{dims_report, global_dim, pattern_label, weyl_cell, DEGENERACY_TOL};

fn main() -> orbit_atlas::Result<()> {
    for pattern in [
        vec![1, 1, 1, 1],
        vec![2, 1, 1],
        vec![2, 2],
        vec![3, 1],
        vec![4],
    ] {
        println!(
            "{:<8} D_g = {}",
            pattern_label(&pattern),
            global_dim(&pattern)
        );
    }
    let cell = weyl_cell(&[0.4, 0.2, 0.2, 0.2], DEGENERACY_TOL)?;
    println!(
        "spectrum {:?} lies in {} (D_g = {})",
        cell.spectrum, cell.label, cell.global_dim
    );
    for (k, m) in [(2, 2), (2, 3), (3, 3)] {
        let d = dims_report(k, m)?;
        println!(
            "{k}x{m}: max D_l {}, generic D_g {}, effective {}",
            d.max_local_dim, d.generic_global_dim, d.effective_dim
        );
    }
    Ok(())
}
