//! Elements `p + q·√d` of a real quadratic extension of ℚ.
//!
//! The radicand is stored as a positive integer that is not a perfect square.
//! Small square factors are pulled out eagerly, so most values compare
//! syntactically; radicands that still differ by a square factor are
//! reconciled on demand. A value whose surd part vanishes is always stored
//! as a plain rational with radicand zero.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::{int_sqrt_exact, Rat};
use super::ArithError;

const TRIAL_PRIMES_BELOW: u32 = 1000;

#[derive(Clone, Debug)]
pub struct QuadExt {
    rational: Rat,
    surd: Rat,
    radicand: BigInt,
}

impl QuadExt {
    pub fn zero() -> Self {
        Self::from_rat(Rat::zero())
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        QuadExt {
            rational: r,
            surd: Rat::zero(),
            radicand: BigInt::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    /// Builds `p + q·√d`, normalizing the radicand.
    pub fn new(rational: Rat, surd: Rat, radicand: Rat) -> Result<Self, ArithError> {
        if radicand.is_negative() {
            return Err(ArithError::NegativeRadicand(radicand));
        }
        if surd.is_zero() || radicand.is_zero() {
            return Ok(Self::from_rat(rational));
        }
        // √(n/m) = √(n·m) / m
        let n = radicand.numer() * radicand.denom();
        let surd = surd / Rat::from_integer(radicand.denom().clone());
        let (outside, inside) = pull_square_factors(n);
        let surd = surd * Rat::from_integer(outside);
        if let Some(root) = int_sqrt_exact(&inside) {
            return Ok(Self::from_rat(rational + surd * Rat::from_integer(root)));
        }
        Ok(QuadExt {
            rational,
            surd,
            radicand: inside,
        })
    }

    /// `√r` for a nonnegative rational.
    pub fn sqrt_rat(r: &Rat) -> Result<Self, ArithError> {
        Self::new(Rat::zero(), Rat::one(), r.clone())
    }

    pub fn rational_part(&self) -> &Rat {
        &self.rational
    }

    pub fn surd_part(&self) -> &Rat {
        &self.surd
    }

    /// Zero for pure rationals.
    pub fn radicand(&self) -> Rat {
        Rat::from_integer(self.radicand.clone())
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        if self.is_rational() {
            Some(&self.rational)
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.surd.is_zero() && self.rational.is_one()
    }

    /// `p − q·√d`.
    pub fn conjugate(&self) -> Self {
        QuadExt {
            rational: self.rational.clone(),
            surd: -self.surd.clone(),
            radicand: self.radicand.clone(),
        }
    }

    /// Field norm `p² − q²·d`.
    pub fn norm(&self) -> Rat {
        &self.rational * &self.rational
            - &self.surd * &self.surd * Rat::from_integer(self.radicand.clone())
    }

    /// Sign of the real number represented.
    pub fn signum(&self) -> Ordering {
        let p = self.rational.signum();
        let q = self.surd.signum();
        if q.is_zero() {
            return p.cmp(&Rat::zero());
        }
        if p.is_zero() || p == q {
            return q.cmp(&Rat::zero());
        }
        // opposite signs: compare p² with q²d
        let p2 = &self.rational * &self.rational;
        let q2d = &self.surd * &self.surd * Rat::from_integer(self.radicand.clone());
        match p2.cmp(&q2d) {
            Ordering::Greater => p.cmp(&Rat::zero()),
            Ordering::Less => q.cmp(&Rat::zero()),
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    /// Brings two values onto a common radicand, if they share a field.
    fn align(&self, other: &Self) -> Result<(Self, Self), ArithError> {
        if self.is_rational() || other.is_rational() || self.radicand == other.radicand {
            let d = if self.is_rational() {
                other.radicand.clone()
            } else {
                self.radicand.clone()
            };
            let mut a = self.clone();
            let mut b = other.clone();
            if !d.is_zero() {
                a.radicand = d.clone();
                b.radicand = d;
            }
            return Ok((a, b));
        }
        // √d2 = k/√d1 · ... = (k/d1)·√d1 when d1·d2 = k²
        let prod = &self.radicand * &other.radicand;
        match int_sqrt_exact(&prod) {
            Some(k) => {
                let scale = Rat::new(k, self.radicand.clone());
                let b = QuadExt {
                    rational: other.rational.clone(),
                    surd: &other.surd * scale,
                    radicand: self.radicand.clone(),
                };
                Ok((self.clone(), b))
            }
            None => Err(ArithError::RadicandMismatch(
                self.radicand.to_string(),
                other.radicand.to_string(),
            )),
        }
    }

    fn renormalize(mut self) -> Self {
        if self.surd.is_zero() {
            self.radicand = BigInt::zero();
        }
        self
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        let (a, b) = self.align(other)?;
        Ok(QuadExt {
            rational: a.rational + b.rational,
            surd: a.surd + b.surd,
            radicand: a.radicand,
        }
        .renormalize())
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        if self.is_rational() {
            return Ok(other.scale(&self.rational));
        }
        if other.is_rational() {
            return Ok(self.scale(&other.rational));
        }
        let (a, b) = self.align(other)?;
        let d = Rat::from_integer(a.radicand.clone());
        Ok(QuadExt {
            rational: &a.rational * &b.rational + &a.surd * &b.surd * d,
            surd: &a.rational * &b.surd + &a.surd * &b.rational,
            radicand: a.radicand,
        }
        .renormalize())
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        // d is not a square, so the norm of a nonzero element is nonzero
        let n = self.norm();
        Ok(QuadExt {
            rational: &self.rational / &n,
            surd: -(&self.surd / &n),
            radicand: self.radicand.clone(),
        }
        .renormalize())
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ArithError> {
        self.try_mul(&other.inv()?)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        QuadExt {
            rational: &self.rational * r,
            surd: &self.surd * r,
            radicand: self.radicand.clone(),
        }
        .renormalize()
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = QuadExt::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    /// Rational coordinates `(p, q)` with respect to the stored radicand.
    pub fn coordinates(&self) -> (&Rat, &Rat) {
        (&self.rational, &self.surd)
    }
}

/// Splits `n = outside² · inside` using trial division by small primes.
fn pull_square_factors(n: BigInt) -> (BigInt, BigInt) {
    let mut outside = BigInt::one();
    let mut inside = n;
    let mut p = 2u32;
    while p < TRIAL_PRIMES_BELOW {
        let pp = BigInt::from(p) * BigInt::from(p);
        if pp > inside {
            break;
        }
        while inside.is_multiple_of(&pp) {
            inside /= &pp;
            outside *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (outside, inside)
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        match self.try_sub(other) {
            Ok(d) => d.is_zero(),
            // different real quadratic fields meet only in ℚ
            Err(_) => false,
        }
    }
}

impl Eq for QuadExt {}

impl From<Rat> for QuadExt {
    fn from(r: Rat) -> Self {
        QuadExt::from_rat(r)
    }
}

impl From<&Rat> for QuadExt {
    fn from(r: &Rat) -> Self {
        QuadExt::from_rat(r.clone())
    }
}

impl From<i64> for QuadExt {
    fn from(n: i64) -> Self {
        QuadExt::from_int(n)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.rational);
        }
        let sqrt = format!("sqrt({})", self.radicand);
        let surd = if self.surd.is_one() {
            sqrt
        } else if self.surd == -Rat::one() {
            format!("-{sqrt}")
        } else {
            format!("{}*{sqrt}", self.surd)
        };
        if self.rational.is_zero() {
            write!(f, "{surd}")
        } else if let Some(abs) = surd.strip_prefix('-') {
            write!(f, "{} - {}", self.rational, abs)
        } else {
            write!(f, "{} + {}", self.rational, surd)
        }
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            rational: -self.rational,
            surd: -self.surd,
            radicand: self.radicand,
        }
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&QuadExt> for &QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                (&self).$method(rhs)
            }
        }
        impl $trait<QuadExt> for &QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl std::iter::Sum for QuadExt {
    fn sum<I: Iterator<Item = QuadExt>>(iter: I) -> QuadExt {
        iter.fold(QuadExt::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for QuadExt {
    fn product<I: Iterator<Item = QuadExt>>(iter: I) -> QuadExt {
        iter.fold(QuadExt::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{int, rat};

    fn q(p: Rat, s: Rat, d: i64) -> QuadExt {
        QuadExt::new(p, s, int(d)).unwrap()
    }

    #[test]
    fn square_radicands_collapse() {
        let v = QuadExt::sqrt_rat(&rat(9, 4)).unwrap();
        assert!(v.is_rational());
        assert_eq!(v, QuadExt::from_rat(rat(3, 2)));
        assert_eq!(QuadExt::sqrt_rat(&int(0)).unwrap(), QuadExt::zero());
    }

    #[test]
    fn radicand_canonical_form() {
        // √40 = 2√10
        let v = QuadExt::sqrt_rat(&int(40)).unwrap();
        assert_eq!(v.radicand(), int(10));
        assert_eq!(v.surd_part(), &int(2));
        // √(1/2) = (1/2)√2
        let h = QuadExt::sqrt_rat(&rat(1, 2)).unwrap();
        assert_eq!(h.radicand(), int(2));
        assert_eq!(h.surd_part(), &rat(1, 2));
        assert_eq!(&h * &h, QuadExt::from_rat(rat(1, 2)));
    }

    #[test]
    fn negative_radicand_rejected() {
        assert!(matches!(
            QuadExt::sqrt_rat(&int(-3)),
            Err(ArithError::NegativeRadicand(_))
        ));
    }

    #[test]
    fn mismatched_fields_error() {
        let a = QuadExt::sqrt_rat(&int(2)).unwrap();
        let b = QuadExt::sqrt_rat(&int(3)).unwrap();
        assert!(matches!(a.try_add(&b), Err(ArithError::RadicandMismatch(..))));
        assert_ne!(a, b);
    }

    #[test]
    fn large_square_factor_reconciled() {
        // 1009 is past the trial-division bound, so √(1009²·2) keeps its factor
        let big = BigInt::from(1009 * 1009 * 2);
        let a = QuadExt::new(int(0), int(1), Rat::from_integer(big)).unwrap();
        let b = QuadExt::sqrt_rat(&int(2)).unwrap();
        let r = a.try_div(&b).unwrap();
        assert_eq!(r, QuadExt::from_int(1009));
    }

    #[test]
    fn inverse_and_norm() {
        let v = q(int(1), int(1), 5);
        assert_eq!(v.norm(), int(-4));
        let w = v.inv().unwrap();
        assert!((&v * &w).is_one());
        assert!(QuadExt::zero().inv().is_err());
    }

    #[test]
    fn sign_of_mixed_terms() {
        assert_eq!(q(int(3), int(-1), 5).signum(), Ordering::Greater);
        assert_eq!(q(int(2), int(-1), 5).signum(), Ordering::Less);
        assert_eq!(q(int(-3), int(1), 5).signum(), Ordering::Less);
        assert_eq!(q(int(0), int(-1), 5).signum(), Ordering::Less);
        assert_eq!(q(int(-3), int(2), 5).abs(), q(int(3), int(-2), 5).neg().neg().abs());
    }

    #[test]
    fn display() {
        assert_eq!(q(rat(3, 2), rat(1, 2), 5).to_string(), "3/2 + 1/2*sqrt(5)");
        assert_eq!(q(int(0), int(-1), 5).to_string(), "-sqrt(5)");
        assert_eq!(q(int(1), int(-2), 5).to_string(), "1 - 2*sqrt(5)");
    }
}
