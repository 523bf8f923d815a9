//! The chromatic lower bound and verified covers along the Mycielski iterates.

use linecover::experiments::{cmd_mycielski_trend, RunConfig};

fn main() -> linecover::Result<()> {
    let mut cfg = RunConfig::new("example-trend");
    cfg.budgets.vertices = 32;
    let report = cmd_mycielski_trend(&cfg, &[2, 3, 4, 5])?;
    print!("{}", report.to_text());
    Ok(())
}
