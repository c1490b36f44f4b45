//! The acceptance suite with reduced sample counts.

use holant3::verify::{run_all, AcceptanceConfig};

pub fn main() -> anyhow::Result<()> {
    for r in run_all(&AcceptanceConfig::quick()) {
        println!("{}", r.summary());
        for f in r.failures.iter().take(3) {
            println!("    {f}");
        }
    }
    Ok(())
}
