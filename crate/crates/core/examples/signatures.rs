//! Symmetric ternary signatures: tractable-class recognition, flipping
//! and holographic transformation.

use holant3::arith::Mat2;
use holant3::signature::{classify_form, flip, sym3_transform_row, SymSig3};

pub fn main() -> anyhow::Result<()> {
    for v in [[1, 2, 4, 8], [1, 0, 0, 5], [1, 1, -1, -1], [1, 0, -1, 2], [1, 2, 3, 5]] {
        let f = SymSig3::from_ints(v);
        println!("{f}: {}", classify_form(&f));
    }
    let f = SymSig3::from_ints([1, 2, 3, 5]);
    println!("flip({f}) = {}", flip(&f));

    let h = Mat2::hadamard();
    let image: Vec<String> = sym3_transform_row(&SymSig3::from_ints([3, -1, -1, 3]), &h)
        .iter()
        .map(|v| v.to_string())
        .collect();
    println!("[3, -1, -1, 3] under H: [{}]", image.join(", "));
    Ok(())
}
