//! Builds certificates, serialises them and checks them again from JSON,
//! including a tampered one.

use linecover::experiments::{cmd_cover_build, cmd_verify, BuildKind, RunConfig};
use linecover::graph::{generate, GraphKind};

fn main() -> linecover::Result<()> {
    let g = generate(GraphKind::Complete, 5, None, None)?;
    let cfg = RunConfig::new("example");
    for kind in [BuildKind::Equivalence, BuildKind::InElbow, BuildKind::Elbow] {
        let json = cmd_cover_build(&cfg, &g, kind)?.to_json();
        let v = cmd_verify(&json, false)?;
        println!("{kind}: {} {} ({})", v.artifact, if v.pass { "PASS" } else { "FAIL" }, v.summary);
    }

    let built = cmd_cover_build(&cfg, &g, BuildKind::Elbow)?.to_json();
    let mut doc: serde_json::Value = serde_json::from_str(&built).expect("valid json");
    doc["orientations"].as_array_mut().expect("array").truncate(1);
    let v = cmd_verify(&doc.to_string(), false)?;
    println!("tampered: {} ({})", if v.pass { "PASS" } else { "FAIL" }, v.summary);
    for p in v.problems.iter().take(3) {
        println!("  {p}");
    }
    Ok(())
}
