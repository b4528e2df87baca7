use orbit_atlas::entanglement::{concurrence_mixed, entanglement_of_formation, ppt_check};
use orbit_atlas::states::werner_state;

fn main() -> orbit_atlas::Result<()> {
    println!(
        "{:>5} {:>10} {:>10} {:>12} {:>10}",
        "x", "C", "(3x-1)/2", "E_F", "PPT"
    );
    for i in 0..=10 {
        let x = i as f64 / 10.0;
        let w = werner_state(x, std::f64::consts::FRAC_PI_2)?;
        let conc = concurrence_mixed(&w)?;
        println!(
            "{x:>5.2} {conc:>10.6} {:>10.6} {:>12.6} {:>10?}",
            (1.5 * x - 0.5).max(0.0),
            entanglement_of_formation(conc)?,
            ppt_check(&w).verdict
        );
    }
    Ok(())
}
