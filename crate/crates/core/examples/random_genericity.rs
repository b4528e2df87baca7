use orbit_atlas::entanglement::PPT_TOL;
use orbit_atlas::gram::RANK_TOL;
use orbit_atlas::scans::random_scan;
use orbit_atlas::states::StateKind;

fn main() -> orbit_atlas::Result<()> {
    for kind in [StateKind::Mixed, StateKind::Pure] {
        for (k, m) in [(2, 2), (2, 3), (3, 3)] {
            let scan = random_scan(kind, k, m, 200, 6, RANK_TOL, PPT_TOL)?;
            let dims: std::collections::BTreeSet<usize> =
                scan.rows.iter().map(|r| r.local_dim).collect();
            println!(
                "{kind:?} {k}x{m}: observed D_l {dims:?}, fraction maximal {}",
                scan.fraction_maximal
            );
        }
    }
    Ok(())
}
