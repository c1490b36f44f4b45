//! The polynomial condition systems behind the hardness proofs: the listed
//! solutions, and seeded searches for further ones.

use holant3::classify::{falsify_emptiness, verify_paper_solutions, FalsifySystem};

pub fn main() -> anyhow::Result<()> {
    let report = verify_paper_solutions();
    println!("listed solutions: {} checks, passed = {}", report.checks.len(), report.passed());
    for system in [FalsifySystem::AbsorbLhsPrinted, FalsifySystem::AbsorbLhs, FalsifySystem::AbsorbRhs, FalsifySystem::RAndS] {
        let r = falsify_emptiness(system, 2_000, 4, 7);
        println!(
            "{system}: {} of {} samples satisfy the system, {} of them on expected solutions",
            r.hit_samples, r.samples, r.expected_hit_samples
        );
        for h in r.hits.iter().take(3) {
            println!("    {} ({})", h.point, h.detail);
        }
    }
    Ok(())
}
