//! Full report for a state given as JSON, the same path the CLI takes.

use orbit_atlas::analysis::{analyze, Tolerances};
use orbit_atlas::io::parse_state;

const RHO: &str = r#"{"k": 2, "m": 2,
  "a": [0.0, 0.0, 0.04], "b": [0.0, 0.0, -0.03],
  "g": [[-0.1, 0.0, 0.0], [0.0, 0.05, 0.0], [0.0, 0.0, 0.02]]}"#;

fn main() -> orbit_atlas::Result<()> {
    let report = analyze(parse_state(RHO)?, &Tolerances::default())?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    Ok(())
}
