//! Whole-grid holographic transformation and closed-form evaluation of
//! degenerate and Gen-Eq grids.

use std::fmt;

use num_traits::{One, Zero};

use super::{GridError, SignatureGrid};
use crate::arith::rat::rat_pow;
use crate::arith::{Mat2, Rat};
use crate::signature::{classify_form, holo_transform_col, holo_transform_row, SigClass};

/// Exact scalar `rational_factor · Π base^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarLedger {
    pub rational_factor: Rat,
    pub power_terms: Vec<(Rat, i64)>,
}

impl Default for ScalarLedger {
    fn default() -> Self {
        Self::one()
    }
}

impl ScalarLedger {
    pub fn one() -> Self {
        ScalarLedger {
            rational_factor: Rat::one(),
            power_terms: Vec::new(),
        }
    }

    pub fn mul_rat(&mut self, r: &Rat) {
        self.rational_factor *= r;
    }

    /// Multiplies by `base^exp`, merging with an existing term of the same base.
    pub fn push_power(&mut self, base: Rat, exp: i64) {
        if exp == 0 || base.is_one() {
            return;
        }
        match self.power_terms.iter_mut().find(|(b, _)| *b == base) {
            Some((_, e)) => *e += exp,
            None => self.power_terms.push((base, exp)),
        }
        self.power_terms.retain(|(_, e)| *e != 0);
    }

    pub fn merge(&mut self, other: &ScalarLedger) {
        self.mul_rat(&other.rational_factor);
        for (b, e) in &other.power_terms {
            self.push_power(b.clone(), *e);
        }
    }

    pub fn collapse(&self) -> Rat {
        self.power_terms
            .iter()
            .fold(self.rational_factor.clone(), |acc, (b, e)| acc * rat_pow(b, *e))
    }

    pub fn is_one(&self) -> bool {
        self.collapse().is_one()
    }
}

impl fmt::Display for ScalarLedger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rational_factor)?;
        for (b, e) in &self.power_terms {
            write!(f, " * ({b})^{e}")?;
        }
        Ok(())
    }
}

/// Transforms LHS signatures by `M^⊗arity` and RHS signatures by
/// `(M⁻¹)^⊗arity`; RHS content scalars go to the ledger, so that
/// `Holant(g) = ledger · Holant(transformed)`.
pub fn apply_holo_to_grid(g: &SignatureGrid, m: &Mat2) -> Result<(SignatureGrid, ScalarLedger), GridError> {
    let mut out = g.clone();
    let mut ledger = ScalarLedger::one();
    for s in out.lhs.iter_mut() {
        *s = holo_transform_row(s, m);
    }
    for s in out.rhs.iter_mut() {
        let (t, scalar) = holo_transform_col(s, m)?;
        *s = t;
        ledger.push_power(scalar, 1);
    }
    Ok((out, ledger))
}

/// Closed-form Holant for a grid whose common LHS signature is degenerate
/// or Gen-Eq and whose RHS vertices are all `=3`.
pub fn tractable_eval(g: &SignatureGrid) -> Result<Rat, GridError> {
    let f = g
        .common_lhs_sym3()
        .ok_or_else(|| GridError::WrongClass("a common rational symmetric LHS signature".into()))?;
    if !g.rhs_all_equality3() {
        return Err(GridError::WrongClass("=3 on every RHS vertex".into()));
    }
    match classify_form(&f) {
        SigClass::Degenerate(d) => {
            let [u0, u1] = &d.factor;
            let per_rhs = u0 * u0 * u0 + u1 * u1 * u1;
            Ok(num_traits::pow(d.scale.clone(), g.lhs.len()) * num_traits::pow(per_rhs, g.rhs.len()))
        }
        SigClass::GenEq => {
            let [f0, _, _, f3] = f.entries();
            Ok(g.components()
                .iter()
                .map(|(ls, _)| num_traits::pow(f0.clone(), ls.len()) + num_traits::pow(f3.clone(), ls.len()))
                .fold(Rat::one(), |acc, v| acc * v))
        }
        other => Err(GridError::WrongClass(format!(
            "a degenerate or Gen-Eq signature, got {}",
            other.name()
        ))),
    }
}

/// `true` when the Holant of every grid with this degenerate LHS signature is zero.
pub fn degenerate_holant_vanishes(f: &crate::signature::SymSig3) -> bool {
    match classify_form(f) {
        SigClass::Degenerate(d) => {
            let [u0, u1] = &d.factor;
            (u0 * u0 * u0 + u1 * u1 * u1).is_zero() || d.scale.is_zero()
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, QuadExt};
    use crate::fixtures;
    use crate::grid::eval_brute;
    use crate::signature::SymSig3;

    fn s(v: [i64; 4]) -> SymSig3 {
        SymSig3::from_ints(v)
    }

    #[test]
    fn identity_transform() {
        let g = fixtures::k33_grid(&s([1, 0, -1, 2]));
        let (t, ledger) = apply_holo_to_grid(&g, &Mat2::identity()).unwrap();
        assert_eq!(t, g);
        assert!(ledger.is_one());
    }

    #[test]
    fn hadamard_on_k33() {
        let g = fixtures::k33_grid(&s([1, 0, -1, 2]));
        let (t, ledger) = apply_holo_to_grid(&g, &Mat2::hadamard()).unwrap();
        assert_eq!(t.lhs[0].to_sym3().unwrap(), s([0, 0, 4, -4]));
        assert_eq!(t.rhs[0].symmetric_weights().unwrap(), [1, 0, 1, 0].map(QuadExt::from_int).to_vec());
        assert_eq!(ledger.collapse(), rat(1, 64));
        assert_eq!(ledger.power_terms, vec![(rat(1, 4), 3)]);
        let v = eval_brute(&t).unwrap() * QuadExt::from(ledger.collapse());
        assert_eq!(v, QuadExt::from_int(6));
    }

    #[test]
    fn double_hadamard_scales() {
        let g = fixtures::k33_grid(&s([1, 0, -1, 2]));
        let (t1, l1) = apply_holo_to_grid(&g, &Mat2::hadamard()).unwrap();
        let (t2, l2) = apply_holo_to_grid(&t1, &Mat2::hadamard()).unwrap();
        // H² = 2I: LHS scales by 8, RHS returns to =3 after content extraction
        assert_eq!(t2.lhs[0].to_sym3().unwrap(), s([8, 0, -8, 16]));
        assert!(t2.rhs_all_equality3());
        let mut ledger = l1;
        ledger.merge(&l2);
        assert_eq!(
            eval_brute(&t2).unwrap() * QuadExt::from(ledger.collapse()),
            QuadExt::from_int(6)
        );
    }

    #[test]
    fn tractable_examples() {
        assert_eq!(tractable_eval(&fixtures::k33_grid(&s([1, 2, 4, 8]))).unwrap(), int(729));
        assert_eq!(tractable_eval(&fixtures::k33_grid(&s([1, 0, 0, 5]))).unwrap(), int(126));
        let prism = fixtures::prism_grid(&s([1, 0, 0, 1]), 3);
        assert_eq!(tractable_eval(&prism).unwrap(), int(2));
        assert!(tractable_eval(&fixtures::k33_grid(&s([1, 0, -1, 2]))).is_err());
        assert!(degenerate_holant_vanishes(&s([1, -1, 1, -1])));
        assert!(!degenerate_holant_vanishes(&s([1, 2, 4, 8])));
    }
}
