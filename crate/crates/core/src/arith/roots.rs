//! Is the eigenvalue ratio of a rational 2×2 matrix a root of unity?
//!
//! With trace `A` and discriminant `B`, the ratio `r = λ/μ` has degree at
//! most two over ℚ, so the only possible orders are 1, 2, 3, 4 and 6. Two
//! independent routes answer the question: closed-form conditions on `(A, B)`,
//! and direct evaluation of cyclotomic polynomials at `r` inside ℚ(√B).

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::mat2::{trace_and_discriminant, Mat2};
use super::rat::{int, rat_sqrt, Rat};
use super::ArithError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RouCondition {
    /// `B = 0`: equal eigenvalues.
    DiscriminantZero,
    /// `A = 0`: ratio −1.
    TraceZero,
    /// `A² + B = 0`: ratio ±i.
    SumOfSquaresZero,
    /// `3A² + B = 0`: primitive cube root.
    CubeRootCondition,
    /// `A² + 3B = 0`: primitive sixth root.
    SixthRootCondition,
}

impl RouCondition {
    pub const ALL: [RouCondition; 5] = [
        RouCondition::DiscriminantZero,
        RouCondition::TraceZero,
        RouCondition::SumOfSquaresZero,
        RouCondition::CubeRootCondition,
        RouCondition::SixthRootCondition,
    ];

    pub fn order(self) -> u32 {
        match self {
            RouCondition::DiscriminantZero => 1,
            RouCondition::TraceZero => 2,
            RouCondition::SumOfSquaresZero => 4,
            RouCondition::CubeRootCondition => 3,
            RouCondition::SixthRootCondition => 6,
        }
    }

    pub fn from_order(order: u32) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.order() == order)
    }

    /// The condition specialized to the G1 matrix `[[1, b], [a, c]]`.
    pub fn g1_line(self) -> &'static str {
        match self {
            RouCondition::DiscriminantZero => "4ab + c^2 - 2c + 1 = 0",
            RouCondition::TraceZero => "c + 1 = 0",
            RouCondition::SumOfSquaresZero => "2ab + c^2 + 1 = 0",
            RouCondition::CubeRootCondition => "ab + c^2 + c + 1 = 0",
            RouCondition::SixthRootCondition => "3ab + c^2 - c + 1 = 0",
        }
    }

    pub fn holds(self, a: &Rat, b: &Rat) -> bool {
        let a2 = a * a;
        let v = match self {
            RouCondition::DiscriminantZero => b.clone(),
            RouCondition::TraceZero => a.clone(),
            RouCondition::SumOfSquaresZero => &a2 + b,
            RouCondition::CubeRootCondition => int(3) * &a2 + b,
            RouCondition::SixthRootCondition => &a2 + int(3) * b,
        };
        v.is_zero()
    }
}

impl fmt::Display for RouCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RouCondition::DiscriminantZero => "B = 0",
            RouCondition::TraceZero => "A = 0",
            RouCondition::SumOfSquaresZero => "A^2 + B = 0",
            RouCondition::CubeRootCondition => "3A^2 + B = 0",
            RouCondition::SixthRootCondition => "A^2 + 3B = 0",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootOfUnity {
    pub is_root: bool,
    pub matched: Option<RouCondition>,
    /// Multiplicative order of the ratio when it is a root of unity.
    pub order: Option<u32>,
    pub routes_agree: bool,
}

/// Route 1: the five closed-form conditions. Returns the order.
pub fn order_by_conditions(a: &Rat, b: &Rat) -> Result<Option<u32>, ArithError> {
    check_nonsingular(a, b)?;
    Ok(RouCondition::ALL
        .into_iter()
        .find(|c| c.holds(a, b))
        .map(RouCondition::order))
}

/// Route 2: evaluate Φ₁, Φ₂, Φ₃, Φ₄, Φ₆ at `r = p + q√B`. Returns the order.
pub fn order_by_cyclotomic(a: &Rat, b: &Rat) -> Result<Option<u32>, ArithError> {
    check_nonsingular(a, b)?;
    let den = a * a - b;
    let p = (a * a + b) / &den;
    let q = -(int(2) * a) / &den;
    if let Some(s) = rat_sqrt(b) {
        let r = p + q * s;
        return Ok(if r.is_one() {
            Some(1)
        } else if (-&r).is_one() {
            Some(2)
        } else {
            None
        });
    }
    let r = Surd::new(p, q, b.clone());
    let one = Surd::constant(Rat::one(), b);
    let r2 = r.mul(&r);
    let candidates: [(u32, Surd); 5] = [
        (1, r.sub(&one)),
        (2, r.add(&one)),
        (3, r2.add(&r).add(&one)),
        (4, r2.add(&one)),
        (6, r2.sub(&r).add(&one)),
    ];
    Ok(candidates
        .into_iter()
        .find(|(_, v)| v.is_zero())
        .map(|(n, _)| n))
}

/// Decides whether `λ/μ` is a root of unity for a rational, nonsingular matrix.
/// Both routes are run; `routes_agree` records whether they concur.
pub fn ratio_is_root_of_unity(m: &Mat2) -> Result<RootOfUnity, ArithError> {
    let (a, b) = trace_and_discriminant(m)?;
    root_of_unity_from_invariants(&a, &b)
}

pub fn root_of_unity_from_invariants(a: &Rat, b: &Rat) -> Result<RootOfUnity, ArithError> {
    let by_cond = order_by_conditions(a, b)?;
    let by_cyclo = order_by_cyclotomic(a, b)?;
    Ok(RootOfUnity {
        is_root: by_cond.is_some(),
        matched: by_cond.and_then(RouCondition::from_order),
        order: by_cond,
        routes_agree: by_cond == by_cyclo,
    })
}

/// The determinant equals `(A² − B)/4`.
fn check_nonsingular(a: &Rat, b: &Rat) -> Result<(), ArithError> {
    if (a * a - b).is_zero() {
        Err(ArithError::Singular)
    } else {
        Ok(())
    }
}

/// `p + q·√d` with `d` any non-square rational, including negative ones.
struct Surd {
    p: Rat,
    q: Rat,
    d: Rat,
}

impl Surd {
    fn new(p: Rat, q: Rat, d: Rat) -> Self {
        Surd { p, q, d }
    }

    fn constant(p: Rat, d: &Rat) -> Self {
        Surd::new(p, Rat::zero(), d.clone())
    }

    fn add(&self, o: &Surd) -> Surd {
        Surd::new(&self.p + &o.p, &self.q + &o.q, self.d.clone())
    }

    fn sub(&self, o: &Surd) -> Surd {
        Surd::new(&self.p - &o.p, &self.q - &o.q, self.d.clone())
    }

    fn mul(&self, o: &Surd) -> Surd {
        Surd::new(
            &self.p * &o.p + &self.q * &o.q * &self.d,
            &self.p * &o.q + &self.q * &o.p,
            self.d.clone(),
        )
    }

    fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::rat;

    #[test]
    fn rotations_and_companions() {
        // eigenvalues ±i, ratio −1
        let quarter = Mat2::from_ints(0, 1, -1, 0);
        let r = ratio_is_root_of_unity(&quarter).unwrap();
        assert_eq!(r.order, Some(2));
        assert!(r.routes_agree);

        // eigenvalues 1 ± i, ratio ±i
        let m = Mat2::from_ints(1, 1, -1, 1);
        let r = ratio_is_root_of_unity(&m).unwrap();
        assert_eq!(r.order, Some(4));
        assert_eq!(r.matched.unwrap().g1_line(), "2ab + c^2 + 1 = 0");

        // characteristic polynomial t² + t + 1
        let third = Mat2::from_ints(0, -1, 1, -1);
        assert_eq!(ratio_is_root_of_unity(&third).unwrap().order, Some(3));

        // t² − 3t + 3: eigenvalues √3·e^{±iπ/6}, ratio of order 6
        let sixth = Mat2::from_ints(0, -3, 1, 3);
        assert_eq!(ratio_is_root_of_unity(&sixth).unwrap().order, Some(6));
    }

    #[test]
    fn real_ratios() {
        let swap = Mat2::from_ints(0, 1, 1, 0);
        let r = ratio_is_root_of_unity(&swap).unwrap();
        assert_eq!(r.order, Some(2));
        assert_eq!(r.matched, Some(RouCondition::TraceZero));
        let scalar = Mat2::from_ints(3, 0, 0, 3);
        assert_eq!(ratio_is_root_of_unity(&scalar).unwrap().order, Some(1));
        let generic = Mat2::from_ints(1, 3, 2, 5);
        let r = ratio_is_root_of_unity(&generic).unwrap();
        assert!(!r.is_root && r.routes_agree);
    }

    #[test]
    fn singular_is_rejected() {
        assert!(ratio_is_root_of_unity(&Mat2::from_ints(1, 2, 2, 4)).is_err());
    }

    #[test]
    fn routes_agree_on_a_grid() {
        for a in -6..=6 {
            for b in -12..=12 {
                let (a, b) = (rat(a, 2), int(b));
                if (&a * &a - &b).is_zero() {
                    continue;
                }
                let r = root_of_unity_from_invariants(&a, &b).unwrap();
                assert!(r.routes_agree, "A={a} B={b}");
            }
        }
    }
}
