//! Dense univariate polynomials over ℚ, enough for common-root tests.

use std::fmt;

use num_traits::{One, Zero};

use super::Rat;

/// Coefficients from the constant term upward, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(Vec<Rat>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.0.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn monic(&self) -> Self {
        match self.0.last() {
            None => Poly::zero(),
            Some(lead) => Poly(self.0.iter().map(|c| c / lead).collect()),
        }
    }

    /// Remainder of `self` modulo a nonzero `d`.
    pub fn rem(&self, d: &Poly) -> Poly {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.0[dd].clone();
        let mut r = self.0.clone();
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let q = &r[r.len() - 1] / &lead;
            for (i, c) in d.0.iter().enumerate() {
                r[k + i] -= &q * c;
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Poly::new(r)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn gcd_all<'a>(polys: impl IntoIterator<Item = &'a Poly>) -> Poly {
        polys.into_iter().fold(Poly::zero(), |acc, p| acc.gcd(p))
    }

    /// `true` for nonzero constants.
    pub fn is_unit(&self) -> bool {
        self.degree() == Some(0)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.rem(self).is_zero()
    }

    /// The linear polynomial `x − r`.
    pub fn root_factor(r: &Rat) -> Poly {
        Poly::new(vec![-r.clone(), Rat::one()])
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn p(v: &[i64]) -> Poly {
        Poly::new(v.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn gcd_of_cubics() {
        // (y + 1)(y − 2) and (y + 1)(y² + 1)
        let a = p(&[-2, -1, 1]);
        let b = p(&[1, 1, 1, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert!(p(&[1, 1]).divides(&a));
        assert!(p(&[1, 0, 1]).gcd(&p(&[-1, 1])).is_unit());
        assert_eq!(Poly::gcd_all([&a, &b, &p(&[0, 0, 0])]), p(&[1, 1]));
    }

    #[test]
    fn eval_and_trim() {
        let q = Poly::new(vec![int(1), rat(1, 2), int(0), int(0)]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(q.eval(&int(-2)), int(0));
        assert_eq!(Poly::root_factor(&int(-2)).monic(), Poly::new(vec![int(2), int(1)]));
    }
}
