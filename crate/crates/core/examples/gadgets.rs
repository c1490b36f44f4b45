//! Contract every library gadget with a signature and compare with its
//! closed form, then run the G4 calibrations.

use holant3::arith::{int, rat, QuadExt};
use holant3::gadget::{closed_form, g4_calibrations, gadget_by_name, needs_parameter, GADGET_NAMES};
use holant3::signature::SymSig3;

pub fn main() -> anyhow::Result<()> {
    let f = SymSig3::from_ints([1, 2, 3, 4]);
    let param = QuadExt::from(rat(-1, 2));
    for name in GADGET_NAMES {
        let p = needs_parameter(name).then_some(&param);
        let sig = gadget_by_name(name, p)?.contract(&f)?;
        let same = sig.dense.values == closed_form(name, &f, p)?.values;
        println!("{name:>8} on {f}: {sig}  (closed form agrees: {same})");
    }
    for c in g4_calibrations(&[int(2)]) {
        println!("G4 {}: output {}, matched = {}", c.label, c.output, c.matched);
    }
    Ok(())
}
