//! Rationals, the real quadratic fields they generate, and the
//! root-of-unity test on 2×2 eigenvalue ratios.

use holant3::arith::{eigen2, int, parse_rat, ratio_is_root_of_unity, Mat2, QuadExt, Spectrum};

pub fn main() -> anyhow::Result<()> {
    let half = parse_rat("1/2")?;
    let s = QuadExt::sqrt_rat(&int(10))?;
    let x = &(&s + QuadExt::from(half.clone())) * &(&s - QuadExt::from(half));
    println!("(sqrt(10) + 1/2)(sqrt(10) - 1/2) = {x}");

    // G1's matrix for [1, 2, 3, 5]
    let m = Mat2::from_ints(1, 3, 2, 5);
    match eigen2(&m)? {
        Spectrum::Real(e) => println!("eigenvalues of {m}: {} and {}", e.lambda, e.mu),
        Spectrum::Complex { trace, discriminant } => println!("complex pair, A = {trace}, B = {discriminant}"),
    }
    for m in [Mat2::from_ints(1, 3, 2, 5), Mat2::from_ints(1, -1, 1, 1), Mat2::from_ints(0, 1, -1, 0)] {
        let r = ratio_is_root_of_unity(&m)?;
        println!("{m}: root of unity = {}, order {:?}, routes agree = {}", r.is_root, r.order, r.routes_agree);
    }
    Ok(())
}
