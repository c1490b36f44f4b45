//! Exact Holant values of signature grids by enumeration and by variable
//! elimination, and invariance under a holographic transformation.

use holant3::arith::{Mat2, QuadExt};
use holant3::fixtures::{cube_grid, k33_grid};
use holant3::grid::{apply_holo_to_grid, eval_brute, eval_dp};
use holant3::signature::SymSig3;

pub fn main() -> anyhow::Result<()> {
    for v in [[1, 0, -1, 2], [0, 1, 0, 0], [1, 2, 3, 5]] {
        let f = SymSig3::from_ints(v);
        let g = k33_grid(&f);
        println!("Holant(K33, {f}) = {} (elimination: {})", eval_brute(&g)?, eval_dp(&g)?);
    }
    let f = SymSig3::from_ints([2, -1, 1, 3]);
    let g = cube_grid(&f);
    let direct = eval_brute(&g)?;
    let (t, ledger) = apply_holo_to_grid(&g, &Mat2::from_ints(1, 2, -1, 3))?;
    let transformed = QuadExt::from(ledger.collapse()) * eval_dp(&t)?;
    println!("cube with {f}: {direct}; ledger {ledger} times transformed Holant: {transformed}");
    Ok(())
}
