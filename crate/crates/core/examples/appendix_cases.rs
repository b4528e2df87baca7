//! Check the printed closed forms for the nine diagonal-correlation families.

use orbit_atlas::appendix::{parse_case_list, verify_cases, CASE_TOL};

fn main() -> orbit_atlas::Result<()> {
    let report = verify_cases(&parse_case_list("1-9,2',6'")?, 25, 5, CASE_TOL)?;
    for case in &report.cases {
        let flagged = if case.typo_candidates.is_empty() {
            "-".to_string()
        } else {
            case.typo_candidates.join(",")
        };
        println!(
            "case {:<3} corank {} matches {:<5} self-consistent {:<5} disagreeing: {flagged}",
            case.case.to_string(),
            case.predicted_corank,
            case.corank_matches,
            case.self_consistent
        );
    }
    println!("all printed formulas agree: {}", report.all_match);
    Ok(())
}
