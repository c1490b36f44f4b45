//! The dichotomy: a verdict for any rational symmetric ternary signature,
//! with a replayable certificate for the hard cases.

use holant3::classify::{certificate_check, dichotomy};
use holant3::signature::SymSig3;

pub fn main() -> anyhow::Result<()> {
    for v in [[1, 2, 4, 8], [0, 0, 0, 0], [1, -1, 1, -1], [3, -1, -1, 3], [1, 0, -1, 2], [1, 2, 3, 5]] {
        let f = SymSig3::from_ints(v);
        println!("{f}: {}", dichotomy(&f));
    }
    let v = dichotomy(&SymSig3::from_ints([1, 1, -1, 1]));
    if let Some(cert) = v.certificate() {
        print!("{cert}");
        println!("replays: {}", certificate_check(cert));
    }
    Ok(())
}
