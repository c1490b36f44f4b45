//! Symmetric and dense signatures, tractable-form predicates, the binary
//! dichotomy and holographic transformations.
//!
//! Dense signatures are indexed big-endian: variable 0 is the most
//! significant bit of the index.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::arith::rat::content;
use crate::arith::{int, ArithError, Mat2, QuadExt, Rat};

/// Symmetric ternary signature `[f0, f1, f2, f3]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymSig3(pub [Rat; 4]);

impl SymSig3 {
    pub fn new(f0: Rat, f1: Rat, f2: Rat, f3: Rat) -> Self {
        SymSig3([f0, f1, f2, f3])
    }

    pub fn from_ints(v: [i64; 4]) -> Self {
        SymSig3(v.map(int))
    }

    /// `[1, a, b, c]`.
    pub fn normalized(a: Rat, b: Rat, c: Rat) -> Self {
        SymSig3([Rat::one(), a, b, c])
    }

    pub fn equality() -> Self {
        Self::from_ints([1, 0, 0, 1])
    }

    pub fn get(&self, i: usize) -> &Rat {
        &self.0[i]
    }

    pub fn entries(&self) -> &[Rat; 4] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        SymSig3(self.0.clone().map(|v| v * s))
    }

    /// Divides by `f0`, returning `(f0, [1, a, b, c])`.
    pub fn normalize(&self) -> Option<(Rat, SymSig3)> {
        let f0 = self.0[0].clone();
        if f0.is_zero() {
            return None;
        }
        let inv = f0.recip();
        Some((f0, self.scale(&inv)))
    }

    /// `Some(s)` with `self = s · other`, if such a nonzero scalar exists.
    pub fn proportional_to(&self, other: &SymSig3) -> Option<Rat> {
        let pivot = other.0.iter().position(|v| !v.is_zero())?;
        let s = &self.0[pivot] / &other.0[pivot];
        if s.is_zero() {
            return None;
        }
        (other.scale(&s) == *self).then_some(s)
    }

    pub fn to_dense(&self, side: Side) -> DenseSig {
        DenseSig::symmetric(
            &self.0.iter().map(QuadExt::from).collect::<Vec<_>>(),
            side,
        )
    }

    /// Value on an input of Hamming weight `w`.
    pub fn at_weight(&self, w: usize) -> &Rat {
        &self.0[w]
    }
}

impl fmt::Display for SymSig3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}]", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

impl Serialize for SymSig3 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|v| v.to_string()))
    }
}

/// Symmetric binary signature `[g0, g1, g2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymSig2(pub [QuadExt; 3]);

impl SymSig2 {
    pub fn new(g0: QuadExt, g1: QuadExt, g2: QuadExt) -> Self {
        SymSig2([g0, g1, g2])
    }

    pub fn from_rats(g: [Rat; 3]) -> Self {
        SymSig2(g.map(QuadExt::from))
    }
}

impl fmt::Display for SymSig2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.0[0], self.0[1], self.0[2])
    }
}

impl Serialize for SymSig2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|v| v.to_string()))
    }
}

/// Unary signature `[u0, u1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unary(pub [QuadExt; 2]);

impl Unary {
    pub fn new(u0: QuadExt, u1: QuadExt) -> Self {
        Unary([u0, u1])
    }

    pub fn from_rats(u0: Rat, u1: Rat) -> Self {
        Unary([u0.into(), u1.into()])
    }

    /// `[y, 1]`.
    pub fn y_one(y: QuadExt) -> Self {
        Unary([y, QuadExt::one()])
    }

    /// `[1, x]`.
    pub fn one_x(x: QuadExt) -> Self {
        Unary([QuadExt::one(), x])
    }

    /// Proportional as vectors (including the zero vector case).
    pub fn is_parallel(&self, other: &Unary) -> bool {
        (&self.0[0] * &other.0[1] - &self.0[1] * &other.0[0]).is_zero()
    }
}

impl fmt::Display for Unary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.0[0], self.0[1])
    }
}

impl Serialize for Unary {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|v| v.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    Lhs,
    Rhs,
    /// `m` LHS-exposed and `n` RHS-exposed variables.
    Straddled { m: usize, n: usize },
}

/// Full truth table over `arity` Boolean variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseSig {
    pub arity: usize,
    pub values: Vec<QuadExt>,
    pub side: Side,
}

impl DenseSig {
    pub fn new(arity: usize, values: Vec<QuadExt>, side: Side) -> Self {
        assert_eq!(values.len(), 1 << arity, "truth table length");
        DenseSig {
            arity,
            values,
            side,
        }
    }

    /// Expands `[s0, ..., sn]` to a truth table on `n` variables.
    pub fn symmetric(weights: &[QuadExt], side: Side) -> Self {
        assert!(!weights.is_empty());
        let arity = weights.len() - 1;
        let values = (0..1usize << arity)
            .map(|idx| weights[idx.count_ones() as usize].clone())
            .collect();
        DenseSig::new(arity, values, side)
    }

    /// The equality signature `=n`.
    pub fn equality(arity: usize, side: Side) -> Self {
        let mut w = vec![QuadExt::zero(); arity + 1];
        w[0] = QuadExt::one();
        w[arity] = QuadExt::one();
        DenseSig::symmetric(&w, side)
    }

    pub fn unary(u: &Unary, side: Side) -> Self {
        DenseSig::new(1, u.0.to_vec(), side)
    }

    /// Bit of variable `var` in `idx` under the big-endian convention.
    pub fn bit(&self, idx: usize, var: usize) -> usize {
        (idx >> (self.arity - 1 - var)) & 1
    }

    /// Value on an explicit assignment, variable 0 first.
    pub fn eval(&self, assignment: &[u8]) -> &QuadExt {
        let idx = assignment
            .iter()
            .fold(0usize, |acc, &b| (acc << 1) | b as usize);
        &self.values[idx]
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric_weights().is_some()
    }

    /// `[s0, ..., sn]` if the value depends only on the Hamming weight.
    pub fn symmetric_weights(&self) -> Option<Vec<QuadExt>> {
        let mut w: Vec<Option<&QuadExt>> = vec![None; self.arity + 1];
        for (idx, v) in self.values.iter().enumerate() {
            let k = idx.count_ones() as usize;
            match w[k] {
                None => w[k] = Some(v),
                Some(prev) if prev == v => {}
                Some(_) => return None,
            }
        }
        Some(w.into_iter().map(|v| v.unwrap().clone()).collect())
    }

    /// Symmetric ternary signature with rational entries, if applicable.
    pub fn to_sym3(&self) -> Option<SymSig3> {
        if self.arity != 3 {
            return None;
        }
        let w = self.symmetric_weights()?;
        let r: Option<Vec<Rat>> = w.iter().map(|v| v.as_rat().cloned()).collect();
        let r = r?;
        Some(SymSig3([r[0].clone(), r[1].clone(), r[2].clone(), r[3].clone()]))
    }

    pub fn scale(&self, s: &QuadExt) -> Self {
        DenseSig::new(
            self.arity,
            self.values.iter().map(|v| v * s).collect(),
            self.side,
        )
    }

    /// Applies the 2×2 matrix `m` along one variable: `out[.., y, ..] = Σ_x s[.., x, ..]·m[x][y]`.
    fn apply_axis(&self, var: usize, m: &Mat2) -> Vec<QuadExt> {
        let shift = self.arity - 1 - var;
        let mut out = vec![QuadExt::zero(); self.values.len()];
        for (idx, slot) in out.iter_mut().enumerate() {
            let y = (idx >> shift) & 1;
            let base = idx & !(1 << shift);
            let mut acc = QuadExt::zero();
            for x in 0..2 {
                let v = &self.values[base | (x << shift)];
                if !v.is_zero() && !m.m[x][y].is_zero() {
                    acc = acc + v * &m.m[x][y];
                }
            }
            *slot = acc;
        }
        out
    }

    fn apply_all_axes(&self, m: &Mat2) -> DenseSig {
        let mut cur = self.clone();
        for var in 0..self.arity {
            cur.values = cur.apply_axis(var, m);
        }
        cur
    }
}

impl fmt::Display for DenseSig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(w) = self.symmetric_weights() {
            let parts: Vec<String> = w.iter().map(|v| v.to_string()).collect();
            return write!(f, "sym[{}]", parts.join(", "));
        }
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `s · M^⊗arity` for a row (LHS) signature.
pub fn holo_transform_row(s: &DenseSig, m: &Mat2) -> DenseSig {
    s.apply_all_axes(m)
}

/// `(M⁻¹)^⊗arity · s` for a column (RHS) signature, with the content scalar
/// factored out: returns `(t, g)` such that the transformed signature is `g·t`.
pub fn holo_transform_col(s: &DenseSig, m: &Mat2) -> Result<(DenseSig, Rat), ArithError> {
    let inv = m.inverse()?;
    let raw = s.apply_all_axes(&inv.transpose());
    Ok(extract_content(&raw))
}

/// Splits `s = g · t` with `g` the positive rational content of all coordinates.
pub fn extract_content(s: &DenseSig) -> (DenseSig, Rat) {
    let coords: Vec<Rat> = s
        .values
        .iter()
        .flat_map(|v| {
            let (p, q) = v.coordinates();
            [p.clone(), q.clone()]
        })
        .collect();
    let g = content(&coords);
    let inv = g.recip();
    let t = DenseSig::new(
        s.arity,
        s.values.iter().map(|v| v.scale(&inv)).collect(),
        s.side,
    );
    (t, g)
}

/// Symmetric ternary transformed by `M^⊗3` on the row side.
pub fn sym3_transform_row(s: &SymSig3, m: &Mat2) -> Vec<QuadExt> {
    holo_transform_row(&s.to_dense(Side::Lhs), m)
        .symmetric_weights()
        .expect("symmetric input stays symmetric")
}

pub fn flip(s: &SymSig3) -> SymSig3 {
    let [a, b, c, d] = s.0.clone();
    SymSig3([d, c, b, a])
}

/// Degenerate decomposition `s = scale · [u0, u1]^⊗3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerateFactor {
    pub factor: [Rat; 2],
    pub scale: Rat,
}

impl DegenerateFactor {
    pub fn expand(&self) -> SymSig3 {
        let [u0, u1] = &self.factor;
        SymSig3([
            &self.scale * u0 * u0 * u0,
            &self.scale * u0 * u0 * u1,
            &self.scale * u0 * u1 * u1,
            &self.scale * u1 * u1 * u1,
        ])
    }
}

pub fn is_degenerate(s: &SymSig3) -> Option<DegenerateFactor> {
    let [f0, f1, f2, f3] = &s.0;
    let minors_vanish = (f0 * f2 - f1 * f1).is_zero()
        && (f0 * f3 - f1 * f2).is_zero()
        && (f1 * f3 - f2 * f2).is_zero();
    if !minors_vanish {
        return None;
    }
    if s.is_zero() {
        return Some(DegenerateFactor {
            factor: [Rat::zero(), Rat::zero()],
            scale: Rat::one(),
        });
    }
    Some(if !f0.is_zero() {
        DegenerateFactor {
            factor: [Rat::one(), f1 / f0],
            scale: f0.clone(),
        }
    } else {
        DegenerateFactor {
            factor: [Rat::zero(), Rat::one()],
            scale: f3.clone(),
        }
    })
}

pub fn is_gen_eq(s: &SymSig3) -> bool {
    s.0[1].is_zero() && s.0[2].is_zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AffineForm {
    /// `[1, 0, 0, 1]`
    EqualityPlus,
    /// `[1, 0, 0, -1]`
    EqualityMinus,
    /// `[1, 0, 1, 0]`
    EvenPlus,
    /// `[1, 0, -1, 0]`
    EvenMinus,
    /// `[1, 1, -1, -1]`
    PlusPlusMinusMinus,
    /// `[1, -1, -1, 1]`
    PlusMinusMinusPlus,
}

impl AffineForm {
    pub const ALL: [AffineForm; 6] = [
        AffineForm::EqualityPlus,
        AffineForm::EqualityMinus,
        AffineForm::EvenPlus,
        AffineForm::EvenMinus,
        AffineForm::PlusPlusMinusMinus,
        AffineForm::PlusMinusMinusPlus,
    ];

    pub fn entries(self) -> [i64; 4] {
        match self {
            AffineForm::EqualityPlus => [1, 0, 0, 1],
            AffineForm::EqualityMinus => [1, 0, 0, -1],
            AffineForm::EvenPlus => [1, 0, 1, 0],
            AffineForm::EvenMinus => [1, 0, -1, 0],
            AffineForm::PlusPlusMinusMinus => [1, 1, -1, -1],
            AffineForm::PlusMinusMinusPlus => [1, -1, -1, 1],
        }
    }

    pub fn signature(self) -> SymSig3 {
        SymSig3::from_ints(self.entries())
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signature())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMatch {
    pub form: AffineForm,
    pub scalar: Rat,
    pub reversed: bool,
}

impl AffineMatch {
    pub fn expand(&self) -> SymSig3 {
        let base = self.form.signature().scale(&self.scalar);
        if self.reversed {
            flip(&base)
        } else {
            base
        }
    }
}

/// Matches `s` against the affine forms and their reversals, up to a nonzero scalar.
/// The zero signature never matches.
pub fn is_affine(s: &SymSig3) -> Option<AffineMatch> {
    for reversed in [false, true] {
        let t = if reversed { flip(s) } else { s.clone() };
        for form in AffineForm::ALL {
            if let Some(scalar) = t.proportional_to(&form.signature()) {
                return Some(AffineMatch {
                    form,
                    scalar,
                    reversed,
                });
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SigClass {
    Degenerate(DegenerateFactor),
    GenEq,
    Affine(AffineMatch),
    NotTractableForm,
}

impl SigClass {
    pub fn is_tractable(&self) -> bool {
        !matches!(self, SigClass::NotTractableForm)
    }

    pub fn name(&self) -> &'static str {
        match self {
            SigClass::Degenerate(_) => "degenerate",
            SigClass::GenEq => "Gen-Eq",
            SigClass::Affine(_) => "affine",
            SigClass::NotTractableForm => "not tractable",
        }
    }
}

impl fmt::Display for SigClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigClass::Degenerate(d) => write!(
                f,
                "degenerate: {} * [{}, {}]^3",
                d.scale, d.factor[0], d.factor[1]
            ),
            SigClass::GenEq => write!(f, "Gen-Eq"),
            SigClass::Affine(m) => write!(
                f,
                "affine: {} * {}{}",
                m.scalar,
                m.form,
                if m.reversed { " reversed" } else { "" }
            ),
            SigClass::NotTractableForm => write!(f, "not a tractable form"),
        }
    }
}

impl Serialize for SigClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn classify_form(s: &SymSig3) -> SigClass {
    if let Some(d) = is_degenerate(s) {
        SigClass::Degenerate(d)
    } else if is_gen_eq(s) {
        SigClass::GenEq
    } else if let Some(m) = is_affine(s) {
        SigClass::Affine(m)
    } else {
        SigClass::NotTractableForm
    }
}

/// The tractable cases of the binary dichotomy for `[a, 1, b]`, with
/// `X = ab` and `Z = ((a³ + b³)/2)²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BinaryCase {
    XIsOne,
    XAndZZero,
    XMinusOneZZero,
    XMinusOneZMinusOne,
}

impl fmt::Display for BinaryCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BinaryCase::XIsOne => "X = 1",
            BinaryCase::XAndZZero => "X = Z = 0",
            BinaryCase::XMinusOneZZero => "X = -1, Z = 0",
            BinaryCase::XMinusOneZMinusOne => "X = -1, Z = -1",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BinaryVerdict {
    Tractable(BinaryCase),
    Hard,
    Unnormalizable,
}

impl BinaryVerdict {
    pub fn is_hard(self) -> bool {
        self == BinaryVerdict::Hard
    }
}

impl fmt::Display for BinaryVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryVerdict::Tractable(c) => write!(f, "tractable ({c})"),
            BinaryVerdict::Hard => write!(f, "#P-hard"),
            BinaryVerdict::Unnormalizable => write!(f, "unnormalizable (middle entry 0)"),
        }
    }
}

/// `(X, Z)` for `[g0, g1, g2]` with `g1 ≠ 0`.
pub fn binary_invariants(g: &SymSig2) -> Option<(QuadExt, QuadExt)> {
    if g.0[1].is_zero() {
        return None;
    }
    let a = g.0[0].try_div(&g.0[1]).ok()?;
    let b = g.0[2].try_div(&g.0[1]).ok()?;
    let x = &a * &b;
    let half = Rat::new(1.into(), 2.into());
    let z = (a.pow(3) + b.pow(3)).scale(&half).pow(2);
    Some((x, z))
}

pub fn binary_tractable(g: &SymSig2) -> BinaryVerdict {
    let Some((x, z)) = binary_invariants(g) else {
        return BinaryVerdict::Unnormalizable;
    };
    let minus_one = QuadExt::from_int(-1);
    let case = if x.is_one() {
        Some(BinaryCase::XIsOne)
    } else if x.is_zero() && z.is_zero() {
        Some(BinaryCase::XAndZZero)
    } else if x == minus_one && z.is_zero() {
        Some(BinaryCase::XMinusOneZZero)
    } else if x == minus_one && z == minus_one {
        Some(BinaryCase::XMinusOneZMinusOne)
    } else {
        None
    };
    case.map_or(BinaryVerdict::Hard, BinaryVerdict::Tractable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn s(v: [i64; 4]) -> SymSig3 {
        SymSig3::from_ints(v)
    }

    #[test]
    fn degenerate_examples() {
        let d = is_degenerate(&s([1, 2, 4, 8])).unwrap();
        assert_eq!(d.factor, [int(1), int(2)]);
        let d = is_degenerate(&s([1, -1, 1, -1])).unwrap();
        assert_eq!(d.factor, [int(1), int(-1)]);
        assert!(is_degenerate(&s([1, 1, -1, -1])).is_none());
        let d = is_degenerate(&s([0, 0, 0, 5])).unwrap();
        assert_eq!(d.expand(), s([0, 0, 0, 5]));
        let z = is_degenerate(&s([0, 0, 0, 0])).unwrap();
        assert_eq!(z.factor, [int(0), int(0)]);
    }

    #[test]
    fn gen_eq_examples() {
        assert!(is_gen_eq(&s([1, 0, 0, 1])));
        assert!(is_gen_eq(&s([1, 0, 0, 5])));
        assert!(!is_gen_eq(&s([1, 0, -1, 2])));
    }

    #[test]
    fn affine_examples() {
        let m = is_affine(&s([2, 2, -2, -2])).unwrap();
        assert_eq!(m.form, AffineForm::PlusPlusMinusMinus);
        assert_eq!(m.scalar, int(2));
        let m = is_affine(&s([-3, 0, 3, 0])).unwrap();
        assert_eq!(m.form, AffineForm::EvenMinus);
        assert_eq!(m.scalar, int(-3));
        assert!(is_affine(&s([1, 2, 3, 4])).is_none());
        let m = is_affine(&s([0, 1, 0, 1])).unwrap();
        assert!(m.reversed);
        assert_eq!(m.expand(), s([0, 1, 0, 1]));
        assert!(is_affine(&s([0, 0, 0, 0])).is_none());
    }

    #[test]
    fn classify_dispatch() {
        assert!(matches!(classify_form(&s([1, 2, 4, 8])), SigClass::Degenerate(_)));
        assert_eq!(classify_form(&s([1, 0, 0, 5])), SigClass::GenEq);
        assert!(matches!(classify_form(&s([1, 1, -1, -1])), SigClass::Affine(_)));
        assert_eq!(classify_form(&s([1, 0, -1, 2])), SigClass::NotTractableForm);
    }

    #[test]
    fn binary_examples() {
        let g = SymSig2::from_rats([int(2), int(1), rat(1, 2)]);
        assert_eq!(binary_tractable(&g), BinaryVerdict::Tractable(BinaryCase::XIsOne));
        let g = SymSig2::from_rats([int(0), int(1), int(0)]);
        assert_eq!(
            binary_tractable(&g),
            BinaryVerdict::Tractable(BinaryCase::XAndZZero)
        );
        let g = SymSig2::from_rats([int(1), int(1), int(2)]);
        assert_eq!(binary_tractable(&g), BinaryVerdict::Hard);
        let g = SymSig2::from_rats([int(1), int(0), int(2)]);
        assert_eq!(binary_tractable(&g), BinaryVerdict::Unnormalizable);
        // a = 1, b = -1: X = -1, Z = 0
        let g = SymSig2::from_rats([int(1), int(1), int(-1)]);
        assert_eq!(
            binary_tractable(&g),
            BinaryVerdict::Tractable(BinaryCase::XMinusOneZZero)
        );
    }

    #[test]
    fn flip_examples() {
        assert_eq!(flip(&s([1, 0, -1, 2])), s([2, -1, 0, 1]));
        assert_eq!(flip(&s([1, 3, 3, 1])), s([1, 3, 3, 1]));
        assert_eq!(flip(&s([0, 1, 0, 0])), s([0, 0, 1, 0]));
    }

    #[test]
    fn hadamard_row_examples() {
        let h = Mat2::hadamard();
        let out = sym3_transform_row(&s([3, -1, -1, 3]), &h);
        assert_eq!(out, [0, 0, 8, 0].map(QuadExt::from_int).to_vec());
        let out = sym3_transform_row(&s([1, 0, -1, 2]), &h);
        assert_eq!(out, [0, 0, 4, -4].map(QuadExt::from_int).to_vec());
        let out = sym3_transform_row(&s([1, 0, -1, 2]), &Mat2::identity());
        assert_eq!(out, [1, 0, -1, 2].map(QuadExt::from_int).to_vec());
    }

    #[test]
    fn column_transform_examples() {
        let h = Mat2::hadamard();
        let eq = DenseSig::equality(3, Side::Rhs);
        let (t, g) = holo_transform_col(&eq, &h).unwrap();
        assert_eq!(g, rat(1, 4));
        assert_eq!(
            t.symmetric_weights().unwrap(),
            [1, 0, 1, 0].map(QuadExt::from_int).to_vec()
        );
        let (t, g) = holo_transform_col(&eq, &Mat2::identity()).unwrap();
        assert_eq!((t, g), (eq.clone(), int(1)));
        let u = DenseSig::unary(&Unary::from_rats(int(1), int(0)), Side::Rhs);
        let (t, g) = holo_transform_col(&u, &h).unwrap();
        assert_eq!(g, rat(1, 2));
        assert_eq!(t.values, vec![QuadExt::one(), QuadExt::one()]);
        assert!(holo_transform_col(&u, &Mat2::from_ints(1, 1, 1, 1)).is_err());
    }

    #[test]
    fn asymmetric_row_transform_follows_big_endian() {
        // s = e_{01}: value 1 on (x0, x1) = (0, 1)
        let mut values = vec![QuadExt::zero(); 4];
        values[1] = QuadExt::one();
        let sig = DenseSig::new(2, values, Side::Lhs);
        let m = Mat2::from_ints(1, 2, 3, 4);
        let out = holo_transform_row(&sig, &m);
        // out[y0,y1] = M[0][y0] * M[1][y1]
        let expect = [3, 4, 6, 8].map(QuadExt::from_int).to_vec();
        assert_eq!(out.values, expect);
    }
}
