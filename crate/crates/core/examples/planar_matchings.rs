//! Perfect matchings of embedded planar graphs by a Pfaffian orientation,
//! and the planar family evaluated through them.

use holant3::arith::{int, rat};
use holant3::fixtures::{cube_grid, cycle_graph, k4_graph};
use holant3::grid::eval_brute;
use holant3::planar::{count_pm, count_pm_brute, family_signature, planar_family_eval, PlanarGraph};
use holant3::signature::SymSig3;

pub fn main() -> anyhow::Result<()> {
    let q3 = PlanarGraph::from_grid(&cube_grid(&SymSig3::equality()))?;
    for (name, g) in [("C6", cycle_graph(6)), ("K4", k4_graph()), ("Q3", q3)] {
        println!("{name}: {} perfect matchings (enumeration: {})", count_pm(&g)?, count_pm_brute(&g)?);
    }
    for (a, b) in [(rat(1, 2), rat(-1, 2)), (int(-2), int(3))] {
        let f = family_signature(&a, &b);
        let g = cube_grid(&f);
        let e = planar_family_eval(&a, &b, &g)?;
        println!(
            "cube with {f}: {} = ledger {} * ({})^{} * {} matchings; enumeration {}",
            e.value,
            e.ledger,
            e.weight,
            e.lhs_count,
            e.perfect_matchings,
            eval_brute(&g)?
        );
    }
    Ok(())
}
