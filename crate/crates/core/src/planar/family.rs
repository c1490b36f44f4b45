//! Planar evaluation of `[3a+b, −a−b, −a+b, 3a−b]`.
//!
//! Under the Hadamard transform the LHS signature becomes `[0, 0, 8a, 8b]`
//! and `=3` becomes `[1, 0, 1, 0]` after extracting content `1/4`. Weight
//! counting then forces exactly two chosen edges at every vertex, so the
//! unchosen edges form a perfect matching and the Holant is
//! `ledger · (8a)^|U| · PM`.

use num_traits::Zero;
use serde::Serialize;

use super::{count_pm, PlanarError, PlanarGraph};
use crate::arith::{int, Mat2, QuadExt, Rat};
use crate::grid::{apply_holo_to_grid, ScalarLedger, SignatureGrid};
use crate::signature::SymSig3;

pub fn family_signature(a: &Rat, b: &Rat) -> SymSig3 {
    let three = int(3);
    SymSig3::new(
        &three * a + b,
        -a - b,
        -a + b,
        &three * a - b,
    )
}

/// Recovers `(a, b)` when `f` lies in the family.
pub fn family_params(f: &SymSig3) -> Option<(Rat, Rat)> {
    let [f0, _, _, f3] = f.entries();
    let a = (f0 + f3) / int(6);
    let b = (f0 - f3) / int(2);
    (family_signature(&a, &b) == *f).then_some((a, b))
}

#[derive(Clone, Debug, Serialize)]
pub struct PlanarEvaluation {
    #[serde(serialize_with = "ser_display")]
    pub value: Rat,
    #[serde(serialize_with = "ser_display")]
    pub ledger: ScalarLedger,
    #[serde(serialize_with = "ser_display")]
    pub weight: Rat,
    pub lhs_count: usize,
    #[serde(serialize_with = "ser_display")]
    pub perfect_matchings: num_bigint::BigInt,
}

fn ser_display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn expect_weights(label: &str, got: Option<Vec<QuadExt>>, zero_at: &[usize]) -> Result<Vec<Rat>, PlanarError> {
    let w = got.ok_or_else(|| PlanarError::UnexpectedTransform(format!("{label} is not symmetric")))?;
    let w: Vec<Rat> = w
        .iter()
        .map(|x| x.as_rat().cloned())
        .collect::<Option<_>>()
        .ok_or_else(|| PlanarError::UnexpectedTransform(format!("{label} is not rational")))?;
    if zero_at.iter().any(|&i| !w[i].is_zero()) {
        return Err(PlanarError::UnexpectedTransform(format!(
            "{label} has support outside the expected weights: {w:?}"
        )));
    }
    Ok(w)
}

/// Exact Holant of a planar grid whose LHS vertices all carry the family signature.
pub fn planar_family_eval(a: &Rat, b: &Rat, g: &SignatureGrid) -> Result<PlanarEvaluation, PlanarError> {
    let f = family_signature(a, b);
    if g.common_lhs_sym3().as_ref() != Some(&f) || !g.rhs_all_equality3() {
        return Err(PlanarError::FamilyMismatch);
    }
    let graph = PlanarGraph::from_grid(g)?;
    graph.faces()?;
    let (t, ledger) = apply_holo_to_grid(g, &Mat2::hadamard())?;

    let mut weight = None;
    for s in &t.lhs {
        let w = expect_weights("transformed LHS signature", s.symmetric_weights(), &[0, 1])?;
        weight = Some(w[2].clone());
    }
    for s in &t.rhs {
        let w = expect_weights("transformed RHS signature", s.symmetric_weights(), &[1, 3])?;
        if w[0] != w[2] || w[0] != int(1) {
            return Err(PlanarError::UnexpectedTransform(format!(
                "transformed RHS signature is not [1, 0, 1, 0]: {w:?}"
            )));
        }
    }
    let weight = weight.unwrap_or_else(|| int(8) * a);
    let pm = count_pm(&graph)?;
    let value = ledger.collapse() * num_traits::pow(weight.clone(), g.lhs.len()) * Rat::from_integer(pm.clone());
    Ok(PlanarEvaluation {
        value,
        ledger,
        weight,
        lhs_count: g.lhs.len(),
        perfect_matchings: pm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::fixtures;
    use crate::grid::eval_brute;

    #[test]
    fn params_of_cover_signature() {
        let f = SymSig3::from_ints([1, 0, -1, 2]);
        assert_eq!(family_params(&f), Some((rat(1, 2), rat(-1, 2))));
        assert_eq!(family_params(&SymSig3::from_ints([1, 2, 3, 4])), None);
    }

    #[test]
    fn cube_counts_matchings() {
        let f = SymSig3::from_ints([1, 0, -1, 2]);
        let g = fixtures::cube_grid(&f);
        let e = planar_family_eval(&rat(1, 2), &rat(-1, 2), &g).unwrap();
        assert_eq!(e.value, int(9));
        assert_eq!(QuadExt::from(e.value.clone()), eval_brute(&g).unwrap());
        // (1/4)^4 · 4^4 · 9
        assert_eq!(e.ledger.collapse(), rat(1, 256));
        assert_eq!(e.weight, int(4));
    }

    #[test]
    fn matches_brute_force_on_fixtures() {
        for (a, b) in [(rat(1, 2), rat(-1, 2)), (int(1), int(0)), (int(1), int(1)), (int(-2), int(3)), (int(0), int(5))] {
            let f = family_signature(&a, &b);
            for (name, g) in fixtures::planar_grids(&f, 24) {
                let e = planar_family_eval(&a, &b, &g).unwrap();
                assert_eq!(QuadExt::from(e.value), eval_brute(&g).unwrap(), "{name} at ({a}, {b})");
            }
        }
    }

    #[test]
    fn rejects_other_signatures() {
        let g = fixtures::cube_grid(&SymSig3::from_ints([1, 2, 3, 4]));
        assert!(matches!(
            planar_family_eval(&int(1), &int(0), &g),
            Err(PlanarError::FamilyMismatch)
        ));
    }
}
