//! One-parameter signature families that the flowchart treats separately.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{int, Rat};
use crate::signature::SymSig3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SpecialForm {
    /// `[1, a, a, 1]`.
    EqualMiddle,
    /// `[1, a, −2a − 1, 3a + 2]`, the normalized planar family.
    PlanarFamily,
    /// `[1, a, b, ab]`.
    ProductLast,
    /// `[1, −b², b, −b³]`.
    NegSquareCube,
    /// `[1, a, −1/a, −1]`.
    InverseMiddle,
    /// `[1, a, −a, −1]`.
    AntiMiddle,
}

impl SpecialForm {
    pub const ALL: [SpecialForm; 6] = [
        SpecialForm::EqualMiddle,
        SpecialForm::PlanarFamily,
        SpecialForm::ProductLast,
        SpecialForm::NegSquareCube,
        SpecialForm::InverseMiddle,
        SpecialForm::AntiMiddle,
    ];

    pub fn pattern(self) -> &'static str {
        match self {
            SpecialForm::EqualMiddle => "[1, a, a, 1]",
            SpecialForm::PlanarFamily => "[1, a, -2a-1, 3a+2]",
            SpecialForm::ProductLast => "[1, a, b, ab]",
            SpecialForm::NegSquareCube => "[1, -b^2, b, -b^3]",
            SpecialForm::InverseMiddle => "[1, a, -1/a, -1]",
            SpecialForm::AntiMiddle => "[1, a, -a, -1]",
        }
    }

    /// The defining parameter (`a`, or `b` for the cube form) when `f`
    /// has `f0 = 1` and lies in the family.
    pub fn params(self, f: &SymSig3) -> Option<Rat> {
        let [f0, a, b, c] = f.entries();
        if !f0.is_one() {
            return None;
        }
        let one = Rat::one();
        let hit = match self {
            SpecialForm::EqualMiddle => a == b && *c == one,
            SpecialForm::PlanarFamily => *b == -(int(2) * a) - &one && *c == int(3) * a + int(2),
            SpecialForm::ProductLast => *c == a * b,
            SpecialForm::NegSquareCube => *a == -(b * b) && *c == -(b * b * b),
            SpecialForm::InverseMiddle => !a.is_zero() && *b == -a.recip() && *c == -one,
            SpecialForm::AntiMiddle => *b == -a.clone() && *c == -one,
        };
        let p = if self == SpecialForm::NegSquareCube { b } else { a };
        hit.then(|| p.clone())
    }
}

impl fmt::Display for SpecialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.pattern())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn membership() {
        let s = |v: [i64; 4]| SymSig3::from_ints(v);
        assert_eq!(SpecialForm::EqualMiddle.params(&s([1, 2, 2, 1])), Some(int(2)));
        assert_eq!(SpecialForm::PlanarFamily.params(&s([1, 0, -1, 2])), Some(int(0)));
        assert_eq!(SpecialForm::NegSquareCube.params(&s([1, -4, 2, -8])), Some(int(2)));
        let f = SymSig3::new(int(1), int(2), rat(-1, 2), int(-1));
        assert_eq!(SpecialForm::InverseMiddle.params(&f), Some(int(2)));
        assert_eq!(SpecialForm::AntiMiddle.params(&s([1, 3, -3, -1])), Some(int(3)));
        assert!(SpecialForm::ProductLast.params(&s([1, 2, 3, 6])).is_some());
        assert!(SpecialForm::EqualMiddle.params(&s([2, 2, 2, 2])).is_none());
    }
}
