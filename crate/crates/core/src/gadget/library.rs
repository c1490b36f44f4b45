//! Named gadget wirings, their closed-form signatures, and a randomized
//! cross-check of the two.
//!
//! Closed forms are written for a general (not necessarily normalized)
//! `f = [f0, f1, f2, f3]`; with `f0 = 1` they reduce to the familiar
//! polynomials in `a, b, c`.

use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{Gadget, GadgetError, VertexRef};
use crate::arith::rat::random_rat;
use crate::arith::{int, Mat2, QuadExt, Rat};
use crate::signature::{flip, DenseSig, Side, SymSig3, Unary};

pub const GADGET_NAMES: [&str; 13] = [
    "G1", "G2", "G3", "G4", "Gaux", "nonlin", "absorbL1", "absorbL2", "absorbL3", "absorbL4",
    "absorbR1", "absorbR2", "absorbR3",
];

fn l(i: usize) -> VertexRef {
    VertexRef::lhs(i)
}

fn r(i: usize) -> VertexRef {
    VertexRef::rhs(i)
}

/// One square with a double edge to one circle; each keeps one dangling edge.
pub fn g1_gadget() -> Gadget {
    Gadget::new("G1", 1, 1)
        .edges(&[(0, 0), (0, 0)])
        .dangle(l(0))
        .dangle(r(0))
}

/// `k` copies of G1 composed in sequence.
pub fn g1_chain(k: usize) -> Gadget {
    assert!(k >= 1);
    let mut g = Gadget::new(&format!("G1^{k}"), k, k);
    for i in 0..k {
        g = g.edges(&[(i, i), (i, i)]);
        if i + 1 < k {
            g = g.edge(i + 1, i);
        }
    }
    g.dangle(l(0)).dangle(r(k - 1))
}

/// `K_{3,3}` with the edge between square 0 and circle 0 removed.
pub fn g2_gadget() -> Gadget {
    Gadget::new("G2", 3, 3)
        .edges(&[(0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)])
        .dangle(l(0))
        .dangle(r(0))
}

/// Square A: circles C and D. Square B: C and a double edge to D.
/// Dangling edges on A and C.
pub fn g3_gadget() -> Gadget {
    Gadget::new("G3", 2, 2)
        .edges(&[(0, 0), (0, 1), (1, 0), (1, 1), (1, 1)])
        .dangle(l(0))
        .dangle(r(0))
}

/// Three outer squares, each joined to two of three circles, and a central
/// square joined to all three circles.
pub fn g4_gadget() -> Gadget {
    Gadget::new("G4", 4, 3)
        .edges(&[
            (0, 0),
            (0, 1),
            (1, 0),
            (1, 2),
            (2, 1),
            (2, 2),
            (3, 0),
            (3, 1),
            (3, 2),
        ])
        .dangle(l(0))
        .dangle(l(1))
        .dangle(l(2))
}

/// Two circles, each joined to the same three squares.
pub fn gaux_gadget() -> Gadget {
    Gadget::new("Gaux", 3, 2)
        .edges(&[(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)])
        .dangle(l(0))
        .dangle(l(1))
        .dangle(l(2))
}

/// Circle C1 with `[y, 1]` and a double edge to the square; the square's
/// third edge goes to circle C2, which carries `[y, 1]` and the dangling edge.
pub fn nonlinearity_gadget(y: &QuadExt) -> Gadget {
    let u = Unary::y_one(y.clone());
    Gadget::new("nonlin", 1, 2)
        .edges(&[(0, 0), (0, 0), (0, 1)])
        .dangle(r(1))
        .attach(r(0), u.clone())
        .attach(r(1), u)
}

/// Absorption gadgets with `[1, x]` attached to squares, `k ∈ 1..=4`.
pub fn absorb_lhs_gadget(k: usize, x: &QuadExt) -> Option<Gadget> {
    let u = Unary::one_x(x.clone());
    let g = match k {
        1 => Gadget::new("absorbL1", 1, 0)
            .attach(l(0), u.clone())
            .attach(l(0), u.clone())
            .attach(l(0), u),
        // A: T1, T2, C. B: double edge to C, T3.
        2 => Gadget::new("absorbL2", 2, 1)
            .edges(&[(0, 0), (1, 0), (1, 0)])
            .attach(l(0), u.clone())
            .attach(l(0), u.clone())
            .attach(l(1), u),
        // three squares each with one unary, each joined to both circles
        3 => Gadget::new("absorbL3", 3, 2)
            .edges(&[(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)])
            .attach(l(0), u.clone())
            .attach(l(1), u.clone())
            .attach(l(2), u),
        // A: double edge to C1, edge to C2. B: C1, T1, T2. D: double edge to C2, T3.
        4 => Gadget::new("absorbL4", 3, 2)
            .edges(&[(0, 0), (0, 0), (0, 1), (1, 0), (2, 1), (2, 1)])
            .attach(l(1), u.clone())
            .attach(l(1), u.clone())
            .attach(l(2), u),
        _ => return None,
    };
    Some(g)
}

/// Absorption gadgets with `[y, 1]` attached to circles, `k ∈ 1..=3`.
pub fn absorb_rhs_gadget(k: usize, y: &QuadExt) -> Option<Gadget> {
    let u = Unary::y_one(y.clone());
    let g = match k {
        1 => Gadget::new("absorbR1", 0, 1)
            .attach(r(0), u.clone())
            .attach(r(0), u.clone())
            .attach(r(0), u),
        // C1: two unaries and the square. C2: one unary and a double edge.
        2 => Gadget::new("absorbR2", 1, 2)
            .edges(&[(0, 0), (0, 1), (0, 1)])
            .attach(r(0), u.clone())
            .attach(r(0), u.clone())
            .attach(r(1), u),
        3 => Gadget::new("absorbR3", 2, 3)
            .edges(&[(0, 0), (1, 0), (0, 1), (1, 1), (0, 2), (1, 2)])
            .attach(r(0), u.clone())
            .attach(r(1), u.clone())
            .attach(r(2), u),
        _ => return None,
    };
    Some(g)
}

/// Looks a gadget up by its CLI name. `nonlin` and the absorption gadgets need `param`.
pub fn gadget_by_name(name: &str, param: Option<&QuadExt>) -> Result<Gadget, GadgetError> {
    let need = || GadgetError::MissingParameter(name.to_string());
    let unknown = || GadgetError::UnknownGadget(name.to_string());
    match name {
        "G1" => Ok(g1_gadget()),
        "G2" => Ok(g2_gadget()),
        "G3" => Ok(g3_gadget()),
        "G4" => Ok(g4_gadget()),
        "Gaux" => Ok(gaux_gadget()),
        "nonlin" => Ok(nonlinearity_gadget(param.ok_or_else(need)?)),
        _ => {
            if let Some(k) = name.strip_prefix("absorbL") {
                let k: usize = k.parse().map_err(|_| unknown())?;
                absorb_lhs_gadget(k, param.ok_or_else(need)?).ok_or_else(unknown)
            } else if let Some(k) = name.strip_prefix("absorbR") {
                let k: usize = k.parse().map_err(|_| unknown())?;
                absorb_rhs_gadget(k, param.ok_or_else(need)?).ok_or_else(unknown)
            } else {
                Err(unknown())
            }
        }
    }
}

pub fn needs_parameter(name: &str) -> bool {
    name == "nonlin" || name.starts_with("absorb")
}

fn fq(f: &SymSig3, i: usize) -> QuadExt {
    QuadExt::from(f.get(i))
}

/// `[[f0, f2], [f1, f3]]`; for `[1, a, b, c]` this is `[[1, b], [a, c]]`.
pub fn g1_matrix(f: &SymSig3) -> Mat2 {
    let [f0, f1, f2, f3] = f.entries().clone();
    Mat2::from_rats(f0, f2, f1, f3)
}

/// `[[w, b'], [a', c']]`.
pub fn g2_matrix(f: &SymSig3) -> Mat2 {
    let [f0, f1, f2, f3] = f.entries();
    let two = int(2);
    let w = f0 * f0 * f0 + &two * f1 * f1 * f1 + f2 * f2 * f2;
    let a = f0 * f0 * f1 + &two * f1 * f1 * f2 + f2 * f2 * f3;
    let b = f1 * f1 * f0 + &two * f2 * f2 * f1 + f3 * f3 * f2;
    let c = f1 * f1 * f1 + &two * f2 * f2 * f2 + f3 * f3 * f3;
    Mat2::from_rats(w, b, a, c)
}

/// For `[1, a, b, c]`: `[[1 + ab, a² + bc], [a + b², ab + c²]]`.
pub fn g3_matrix(f: &SymSig3) -> Mat2 {
    let [f0, f1, f2, f3] = f.entries();
    Mat2::from_rats(
        f0 * f0 + f1 * f2,
        f1 * f1 + f2 * f3,
        f1 * f0 + f2 * f2,
        f2 * f1 + f3 * f3,
    )
}

pub fn g4_closed_form(f: &SymSig3) -> SymSig3 {
    let [f0, f1, f2, f3] = f.entries();
    let (two, three) = (int(2), int(3));
    let p = |x: &Rat, k: u32| num_traits::pow(x.clone(), k as usize);
    SymSig3::new(
        p(f0, 4) + &three * f0 * p(f1, 3) + &three * p(f1, 2) * p(f2, 2) + p(f2, 3) * f3,
        p(f0, 3) * f1
            + &two * f0 * p(f1, 2) * f2
            + p(f1, 4)
            + p(f1, 2) * f2 * f3
            + &two * f1 * p(f2, 3)
            + p(f2, 2) * p(f3, 2),
        p(f0, 2) * p(f1, 2)
            + f0 * f1 * p(f2, 2)
            + &two * p(f1, 3) * f2
            + &two * f1 * p(f2, 2) * f3
            + p(f2, 4)
            + f2 * p(f3, 3),
        f0 * p(f1, 3) + &three * p(f1, 2) * p(f2, 2) + &three * p(f2, 3) * f3 + p(f3, 4),
    )
}

/// The G4 output signature.
pub fn g4_apply(f: &SymSig3) -> SymSig3 {
    g4_closed_form(f)
}

/// For `[w, x, y, z]`: `[w³ + 2x³ + y³, w²x + 2x²y + y²z, wx² + 2xy² + yz², x³ + 2y³ + z³]`.
pub fn gaux_apply(f: &SymSig3) -> SymSig3 {
    let [w, x, y, z] = f.entries();
    let two = int(2);
    SymSig3::new(
        w * w * w + &two * x * x * x + y * y * y,
        w * w * x + &two * x * x * y + y * y * z,
        w * x * x + &two * x * y * y + y * z * z,
        x * x * x + &two * y * y * y + z * z * z,
    )
}

/// `[y²f0 + y·f2, y·f1 + f3]`; for `[1, a, b, c]` this is `[y² + yb, ya + c]`.
pub fn nonlinearity_apply(f: &SymSig3, y: &QuadExt) -> Unary {
    Unary::new(
        y * y * fq(f, 0) + y * fq(f, 2),
        y * fq(f, 1) + fq(f, 3),
    )
}

/// The global factors `f1..f4` of the LHS absorption gadgets at `[1, x]`.
pub fn absorb_factor_lhs(f: &SymSig3, x: &QuadExt) -> [QuadExt; 4] {
    let fv = |i: usize| fq(f, i);
    let x2 = x * x;
    let f1 = fv(0) + x * fv(1) * QuadExt::from_int(3) + &x2 * fv(2) * QuadExt::from_int(3)
        + &x2 * x * fv(3);
    // pair of unaries on a square whose remaining edge carries k
    let pair = |k: usize| fv(k) + x * fv(k + 1) * QuadExt::from_int(2) + &x2 * fv(k + 2);
    // one unary on a square with a double edge carrying k
    let single_double = |k: usize| fv(2 * k) + x * fv(2 * k + 1);
    let f2 = pair(0) * single_double(0) + pair(1) * single_double(1);
    let p = |s: usize| fv(s) + x * fv(s + 1);
    let f3 = p(0).pow(3) + p(1).pow(3) * QuadExt::from_int(2) + p(2).pow(3);
    let mut f4 = QuadExt::zero();
    for k1 in 0..2 {
        for k2 in 0..2 {
            f4 = f4 + fv(2 * k1 + k2) * pair(k1) * single_double(k2);
        }
    }
    [f1, f2, f3, f4]
}

/// The global factors `g1..g3` of the RHS absorption gadgets at `[y, 1]`.
pub fn absorb_factor_rhs(f: &SymSig3, y: &QuadExt) -> [QuadExt; 3] {
    let fv = |i: usize| fq(f, i);
    let y2 = y * y;
    let y3 = &y2 * y;
    let g1 = &y3 + QuadExt::one();
    let g2 = &y3 * fv(0) + &y2 * fv(2) + y * fv(1) + fv(3);
    let three = QuadExt::from_int(3);
    let g3 = &y3 * fv(0).pow(2) + &y2 * fv(1).pow(2) * &three + y * fv(2).pow(2) * &three
        + fv(3).pow(2);
    [g1, g2, g3]
}

/// Closed-form signature of a named gadget, shaped like its contraction.
pub fn closed_form(name: &str, f: &SymSig3, param: Option<&QuadExt>) -> Result<DenseSig, GadgetError> {
    let mat = |m: Mat2| {
        let [[a, b], [c, d]] = m.m;
        DenseSig::new(2, vec![a, b, c, d], Side::Straddled { m: 1, n: 1 })
    };
    let sym = |s: SymSig3| s.to_dense(Side::Lhs);
    let scalar = |v: QuadExt| DenseSig::new(0, vec![v], Side::Lhs);
    let need = || GadgetError::MissingParameter(name.to_string());
    let unknown = || GadgetError::UnknownGadget(name.to_string());
    Ok(match name {
        "G1" => mat(g1_matrix(f)),
        "G2" => mat(g2_matrix(f)),
        "G3" => mat(g3_matrix(f)),
        "G4" => sym(g4_closed_form(f)),
        "Gaux" => sym(gaux_apply(f)),
        "nonlin" => DenseSig::unary(&nonlinearity_apply(f, param.ok_or_else(need)?), Side::Rhs),
        _ => {
            if let Some(k) = name.strip_prefix("absorbL") {
                let k: usize = k.parse().map_err(|_| unknown())?;
                let v = absorb_factor_lhs(f, param.ok_or_else(need)?);
                scalar(v.get(k.wrapping_sub(1)).ok_or_else(unknown)?.clone())
            } else if let Some(k) = name.strip_prefix("absorbR") {
                let k: usize = k.parse().map_err(|_| unknown())?;
                let v = absorb_factor_rhs(f, param.ok_or_else(need)?);
                scalar(v.get(k.wrapping_sub(1)).ok_or_else(unknown)?.clone())
            } else {
                return Err(unknown());
            }
        }
    })
}

/// `Some((scalar, reversed))` when `got = scalar · expected` or `got = scalar · flip(expected)`.
pub fn proportional_up_to_reversal(got: &SymSig3, expected: &SymSig3) -> Option<(Rat, bool)> {
    if let Some(s) = got.proportional_to(expected) {
        return Some((s, false));
    }
    got.proportional_to(&flip(expected)).map(|s| (s, true))
}

/// One calibration case for the G4 wiring.
#[derive(Clone, Debug, Serialize)]
pub struct G4Calibration {
    pub label: String,
    pub input: SymSig3,
    pub expected: SymSig3,
    pub output: SymSig3,
    pub matched: bool,
    pub scalar: Option<String>,
    pub reversed: bool,
}

fn calibrate(label: &str, input: SymSig3, expected: SymSig3) -> G4Calibration {
    let output = g4_apply(&input);
    let m = proportional_up_to_reversal(&output, &expected);
    G4Calibration {
        label: label.to_string(),
        input,
        expected,
        output,
        matched: m.is_some(),
        scalar: m.as_ref().map(|(s, _)| s.to_string()),
        reversed: m.map(|(_, r)| r).unwrap_or(false),
    }
}

/// Reference outputs for G4, evaluated at the given parameter values.
pub fn g4_calibrations(params: &[Rat]) -> Vec<G4Calibration> {
    let mut out = vec![calibrate(
        "[1,1,1,-1] -> [1,1,3,3]",
        SymSig3::from_ints([1, 1, 1, -1]),
        SymSig3::from_ints([1, 1, 3, 3]),
    )];
    let one = Rat::one();
    for a in params.iter().filter(|a| !num_traits::Zero::is_zero(*a)) {
        let inv = a.recip();
        let a2 = a * a;
        let a3 = &a2 * a;
        let a4 = &a3 * a;
        out.push(calibrate(
            &format!("[1,a,-1/a,0] at a={a}"),
            SymSig3::new(one.clone(), a.clone(), -inv.clone(), int(0)),
            SymSig3::new(
                int(3) * &a3 + int(4),
                &a4 - a - int(2) * &inv * &inv,
                -&a2 + &inv + &inv * &inv * &inv * &inv,
                &a3 + int(3),
            ),
        ));
    }
    for a in params {
        let u = &one - a + a * a;
        let v = a * (&one - a * a);
        let s = &one + a;
        out.push(calibrate(
            &format!("[1,a,-a,-1] at a={a}"),
            SymSig3::new(one.clone(), a.clone(), -a.clone(), -one.clone()),
            SymSig3::new(&s * &u, &s * &v, &s * &v, &s * &u),
        ));
    }
    out
}

/// Result of comparing closed forms with generic contraction.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ClosedFormReport {
    pub checks: usize,
    pub mismatches: Vec<String>,
}

impl ClosedFormReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn check(&mut self, name: &str, f: &SymSig3, param: Option<&QuadExt>) {
        self.checks += 1;
        let result = gadget_by_name(name, param)
            .and_then(|g| g.contract(f))
            .and_then(|sig| Ok((sig, closed_form(name, f, param)?)));
        match result {
            Ok((sig, expected)) if sig.dense.values == expected.values => {}
            Ok((sig, expected)) => self.mismatches.push(format!(
                "{name} on {f} (param {param:?}): contraction {} vs closed form {}",
                sig.dense, expected
            )),
            Err(e) => self.mismatches.push(format!("{name} on {f}: {e}")),
        }
    }

    fn check_all(&mut self, f: &SymSig3, x: &QuadExt, y: &QuadExt) {
        for name in GADGET_NAMES {
            let param = if name.starts_with("absorbL") {
                Some(x)
            } else if needs_parameter(name) {
                Some(y)
            } else {
                None
            };
            self.check(name, f, param);
        }
        for k in 1..=3 {
            self.checks += 1;
            let chain = g1_chain(k).contract(f).ok().and_then(|s| s.as_matrix());
            let power = crate::arith::mat_pow(&g1_matrix(f), k as u32);
            if chain.as_ref() != Some(&power) {
                self.mismatches
                    .push(format!("G1 chain of length {k} on {f} differs from the matrix power"));
            }
        }
    }
}

/// Compares every closed form with contraction on `trials` random signatures
/// (entry height ≤ 50) plus fixed edge cases. Parameters include quadratic surds.
pub fn verify_closed_forms(trials: usize, seed: u64) -> ClosedFormReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ClosedFormReport::default();
    let sqrt2 = QuadExt::sqrt_rat(&int(2)).expect("2 > 0");
    let fixed = [
        SymSig3::from_ints([1, 0, 3, 5]),
        SymSig3::from_ints([1, -1, 1, -1]),
        SymSig3::from_ints([0, 0, 0, 0]),
        SymSig3::from_ints([1, 1, 1, 1]),
    ];
    for f in &fixed {
        report.check_all(f, &QuadExt::from_int(2), &(&sqrt2 + QuadExt::one()));
    }
    for t in 0..trials {
        let f = SymSig3::new(
            random_rat(&mut rng, 50),
            random_rat(&mut rng, 50),
            random_rat(&mut rng, 50),
            random_rat(&mut rng, 50),
        );
        let x = QuadExt::from(random_rat(&mut rng, 50));
        let y = if t % 2 == 0 {
            QuadExt::from(random_rat(&mut rng, 50))
        } else {
            &sqrt2 * QuadExt::from(random_rat(&mut rng, 50)) + QuadExt::from(random_rat(&mut rng, 50))
        };
        report.check_all(&f, &x, &y);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn s(v: [i64; 4]) -> SymSig3 {
        SymSig3::from_ints(v)
    }

    #[test]
    fn g1_examples() {
        let f = s([1, 2, 3, 5]);
        assert_eq!(g1_matrix(&f), Mat2::from_ints(1, 3, 2, 5));
        let m = g1_gadget().contract(&f).unwrap().as_matrix().unwrap();
        assert_eq!(m, g1_matrix(&f));
    }

    #[test]
    fn g2_and_g3_examples() {
        assert_eq!(g2_matrix(&s([1, 1, 1, 1])), Mat2::from_ints(4, 4, 4, 4));
        assert_eq!(g3_matrix(&s([1, -1, 0, 2])), Mat2::from_ints(1, 1, -1, 4));
        let c = g3_gadget().contract(&s([1, -1, 0, 2])).unwrap();
        assert_eq!(c.as_matrix().unwrap(), Mat2::from_ints(1, 1, -1, 4));
    }

    #[test]
    fn gaux_examples() {
        assert_eq!(gaux_apply(&s([0, 1, 1, 0])), s([3, 2, 2, 3]));
        assert_eq!(gaux_apply(&s([1, 0, 0, 0])), s([1, 0, 0, 0]));
        assert_eq!(gaux_apply(&s([1, 2, 3, 4])), s([44, 62, 88, 126]));
        let c = gaux_gadget().contract(&s([1, 2, 3, 4])).unwrap();
        assert_eq!(c.as_sym3().unwrap(), s([44, 62, 88, 126]));
    }

    #[test]
    fn nonlinearity_examples() {
        let u = nonlinearity_apply(&s([1, 2, 3, 7]), &QuadExt::zero());
        assert_eq!(u, Unary::from_rats(int(0), int(7)));
        let u = nonlinearity_apply(&s([1, 0, 0, 1]), &QuadExt::one());
        assert_eq!(u, Unary::from_rats(int(1), int(1)));
        let r2 = QuadExt::sqrt_rat(&int(2)).unwrap();
        let u = nonlinearity_apply(&s([1, 1, 1, 1]), &r2);
        assert_eq!(u.0[0], &r2 + QuadExt::from_int(2));
        assert_eq!(u.0[1], &r2 + QuadExt::one());
        let c = nonlinearity_gadget(&r2).contract(&s([1, 1, 1, 1])).unwrap();
        assert_eq!(c.as_unary().unwrap(), u);
    }

    #[test]
    fn absorption_examples() {
        let (a, b, c) = (rat(2, 3), int(-5), rat(7, 2));
        let f = SymSig3::normalized(a.clone(), b.clone(), c.clone());
        let v = absorb_factor_lhs(&f, &QuadExt::zero());
        let one = Rat::one();
        assert_eq!(v[0], QuadExt::one());
        assert_eq!(v[1], QuadExt::from(&a * &b + &one));
        assert_eq!(v[2], QuadExt::from(&one + int(2) * &a * &a * &a + &b * &b * &b));
        assert_eq!(v[3], QuadExt::from(&one + int(2) * &a * &b + &a * &b * &c));
        let v = absorb_factor_lhs(&s([1, 1, 1, 1]), &QuadExt::one());
        assert_eq!(v[0], QuadExt::from_int(8));
        let v = absorb_factor_rhs(&s([1, 2, 2, 1]), &QuadExt::from_int(-1));
        assert!(v.iter().all(QuadExt::is_zero));
    }

    #[test]
    fn absorption_polynomials_in_normalized_form() {
        // f1 = cx³ + 3bx² + 3ax + 1, g2 = y³ + by² + ay + c, g3 = y³ + 3a²y² + 3b²y + c²
        let (a, b, c) = (int(2), int(-3), rat(1, 2));
        let f = SymSig3::normalized(a.clone(), b.clone(), c.clone());
        let x = rat(-4, 3);
        let v = absorb_factor_lhs(&f, &QuadExt::from(&x));
        let want = &c * &x * &x * &x + int(3) * &b * &x * &x + int(3) * &a * &x + int(1);
        assert_eq!(v[0], QuadExt::from(want));
        let y = rat(5, 2);
        let g = absorb_factor_rhs(&f, &QuadExt::from(&y));
        let y3 = &y * &y * &y;
        assert_eq!(g[0], QuadExt::from(&y3 + int(1)));
        assert_eq!(g[1], QuadExt::from(&y3 + &b * &y * &y + &a * &y + &c));
        assert_eq!(
            g[2],
            QuadExt::from(&y3 + int(3) * &a * &a * &y * &y + int(3) * &b * &b * &y + &c * &c)
        );
    }

    #[test]
    fn g4_known_outputs() {
        assert_eq!(g4_apply(&s([1, 1, 1, -1])), s([6, 6, 2, 2]));
        assert_eq!(g4_apply(&s([1, 1, -1, 1])), s([6, -2, 2, 2]));
        assert_eq!(g4_apply(&s([6, -2, 2, 2])), s([1216, -320, 64, 64]));
        assert_eq!(g4_apply(&s([1, 1, -1, 3])), s([4, 4, -20, 76]));
        let c = g4_gadget().contract(&s([1, 1, -1, 1])).unwrap();
        assert_eq!(c.as_sym3().unwrap(), s([6, -2, 2, 2]));
    }

    #[test]
    fn g4_first_two_calibrations_hold() {
        let cals = g4_calibrations(&[int(2), rat(-3, 2), int(5)]);
        for c in cals.iter().filter(|c| !c.label.starts_with("[1,a,-a,-1]")) {
            assert!(c.matched, "{}", c.label);
        }
    }

    #[test]
    fn closed_forms_agree_with_contraction() {
        let report = verify_closed_forms(10, 7);
        assert!(report.passed(), "{:?}", report.mismatches);
    }

    #[test]
    fn lookup_by_name() {
        for name in GADGET_NAMES {
            let p = QuadExt::from_int(3);
            assert!(gadget_by_name(name, Some(&p)).is_ok(), "{name}");
        }
        assert!(matches!(
            gadget_by_name("nonlin", None),
            Err(GadgetError::MissingParameter(_))
        ));
        assert!(matches!(
            gadget_by_name("G9", None),
            Err(GadgetError::UnknownGadget(_))
        ));
        assert!(gadget_by_name("absorbL7", Some(&QuadExt::one())).is_err());
    }
}
