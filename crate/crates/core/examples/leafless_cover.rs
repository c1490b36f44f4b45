//! Counting leafless covers of a 3-regular set system through the cover
//! signature [1, 0, -1, 2].

use holant3::fixtures::triple_system;
use holant3::grid::{cover_signature, cover_value, eval_brute, from_set_system, SetSystem};

pub fn main() -> anyhow::Result<()> {
    println!("cover signature: {}", cover_signature());
    let triple = triple_system();
    println!("triple system: {}", cover_value(&triple)?);

    let s = SetSystem::numbered(6, vec![[0, 1, 2], [3, 4, 5], [0, 3, 4], [1, 2, 5], [0, 1, 5], [2, 3, 4]])?;
    let by_sets = cover_value(&s)?;
    let by_grid = eval_brute(&from_set_system(&s)?)?;
    println!("6 sets over 6 elements: {by_sets} (grid Holant {by_grid})");
    Ok(())
}
