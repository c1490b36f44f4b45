//! 2×2 matrices over `QuadExt` and the eigen data of straddled signature
//! matrices `[[w, b'], [a', c']]`.

use std::fmt;
use std::ops::Mul;

use num_traits::{Signed, Zero};

use super::quad::QuadExt;
use super::rat::{int, Rat};
use super::ArithError;

/// Row-major: `m[i][j]` is row `i`, column `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub m: [[QuadExt; 2]; 2],
}

impl Mat2 {
    pub fn new(a: QuadExt, b: QuadExt, c: QuadExt, d: QuadExt) -> Self {
        Mat2 {
            m: [[a, b], [c, d]],
        }
    }

    pub fn from_rats(a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::from_rats(int(a), int(b), int(c), int(d))
    }

    pub fn identity() -> Self {
        Self::from_ints(1, 0, 0, 1)
    }

    /// `[[1, 1], [1, -1]]`
    pub fn hadamard() -> Self {
        Self::from_ints(1, 1, 1, -1)
    }

    pub fn diag(a: QuadExt, d: QuadExt) -> Self {
        Self::new(a, QuadExt::zero(), QuadExt::zero(), d)
    }

    pub fn get(&self, i: usize, j: usize) -> &QuadExt {
        &self.m[i][j]
    }

    pub fn det(&self) -> QuadExt {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn trace(&self) -> QuadExt {
        &self.m[0][0] + &self.m[1][1]
    }

    pub fn transpose(&self) -> Self {
        Self::new(
            self.m[0][0].clone(),
            self.m[1][0].clone(),
            self.m[0][1].clone(),
            self.m[1][1].clone(),
        )
    }

    pub fn scale(&self, s: &QuadExt) -> Self {
        Self::new(
            &self.m[0][0] * s,
            &self.m[0][1] * s,
            &self.m[1][0] * s,
            &self.m[1][1] * s,
        )
    }

    pub fn inverse(&self) -> Result<Self, ArithError> {
        let det = self.det();
        if det.is_zero() {
            return Err(ArithError::Singular);
        }
        let inv = det.inv()?;
        Ok(Self::new(
            &self.m[1][1] * &inv,
            -(&self.m[0][1] * &inv),
            -(&self.m[1][0] * &inv),
            &self.m[0][0] * &inv,
        ))
    }

    pub fn is_rational(&self) -> bool {
        self.m.iter().flatten().all(QuadExt::is_rational)
    }

    pub fn rational_entries(&self) -> Result<[[Rat; 2]; 2], ArithError> {
        let r = |i: usize, j: usize| {
            self.m[i][j]
                .as_rat()
                .cloned()
                .ok_or(ArithError::NotRational)
        };
        Ok([[r(0, 0)?, r(0, 1)?], [r(1, 0)?, r(1, 1)?]])
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[QuadExt; 2]) -> [QuadExt; 2] {
        [
            &v[0] * &self.m[0][0] + &v[1] * &self.m[1][0],
            &v[0] * &self.m[0][1] + &v[1] * &self.m[1][1],
        ]
    }

    /// Matrix times column vector.
    pub fn right_apply(&self, v: &[QuadExt; 2]) -> [QuadExt; 2] {
        [
            &self.m[0][0] * &v[0] + &self.m[0][1] * &v[1],
            &self.m[1][0] * &v[0] + &self.m[1][1] * &v[1],
        ]
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, o: &Mat2) -> Mat2 {
        let e = |i: usize, j: usize| &self.m[i][0] * &o.m[0][j] + &self.m[i][1] * &o.m[1][j];
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        &self * &o
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]
        )
    }
}

/// Exact `s`-fold product; `s = 0` gives the identity.
pub fn mat_pow(m: &Mat2, s: u32) -> Mat2 {
    let mut result = Mat2::identity();
    let mut base = m.clone();
    let mut e = s;
    while e > 0 {
        if e & 1 == 1 {
            result = &result * &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    result
}

/// Eigen data of a rational 2×2 matrix with real spectrum.
///
/// `x` and `y` are only defined when the lower-left entry is nonzero. When
/// additionally `delta ≠ 0`, `M = P·diag(λ, μ)·P⁻¹` with `P = [[−x, y], [1, 1]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenData {
    pub delta: QuadExt,
    pub lambda: QuadExt,
    pub mu: QuadExt,
    pub x: Option<QuadExt>,
    pub y: Option<QuadExt>,
    pub degenerate: bool,
}

impl EigenData {
    /// `P = [[−x, y], [1, 1]]`, whose columns are eigenvectors for λ and μ.
    pub fn jordan_basis(&self) -> Option<Mat2> {
        if self.delta.is_zero() {
            return None;
        }
        let x = self.x.as_ref()?;
        let y = self.y.as_ref()?;
        Some(Mat2::new(-x, y.clone(), QuadExt::one(), QuadExt::one()))
    }

    /// `P·diag(λ, μ)·P⁻¹`, when the basis exists.
    pub fn reassemble(&self) -> Option<Mat2> {
        let p = self.jordan_basis()?;
        let pinv = p.inverse().ok()?;
        let d = Mat2::diag(self.lambda.clone(), self.mu.clone());
        Some(&(&p * &d) * &pinv)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Spectrum {
    Real(EigenData),
    /// Negative discriminant: the eigenvalues are a complex-conjugate pair.
    Complex { trace: Rat, discriminant: Rat },
}

impl Spectrum {
    pub fn real(&self) -> Option<&EigenData> {
        match self {
            Spectrum::Real(e) => Some(e),
            Spectrum::Complex { .. } => None,
        }
    }
}

/// Trace `A = w + c'` and discriminant `B = (w − c')² + 4a'b'` of a rational matrix.
pub fn trace_and_discriminant(m: &Mat2) -> Result<(Rat, Rat), ArithError> {
    let [[w, b], [a, c]] = m.rational_entries()?;
    let trace = &w + &c;
    let diff = &w - &c;
    let disc = &diff * &diff + int(4) * &a * &b;
    Ok((trace, disc))
}

/// Eigen decomposition of `[[w, b'], [a', c']]` with rational entries.
pub fn eigen2(m: &Mat2) -> Result<Spectrum, ArithError> {
    let [[w, b], [a, c]] = m.rational_entries()?;
    let (trace, disc) = trace_and_discriminant(m)?;
    if disc.is_negative() {
        return Ok(Spectrum::Complex {
            trace,
            discriminant: disc,
        });
    }
    let delta = QuadExt::sqrt_rat(&disc)?;
    let half = Rat::new(1.into(), 2.into());
    let tr = QuadExt::from_rat(trace);
    let lambda = (&tr - &delta).scale(&half);
    let mu = (&tr + &delta).scale(&half);
    let (x, y) = if a.is_zero() {
        (None, None)
    } else {
        let diff = QuadExt::from_rat(&w - &c);
        let denom = (int(2) * &a).recip();
        (
            Some((&delta - &diff).scale(&denom)),
            Some((&delta + &diff).scale(&denom)),
        )
    };
    let degenerate = (&w * &c - &a * &b).is_zero();
    Ok(Spectrum::Real(EigenData {
        delta,
        lambda,
        mu,
        x,
        y,
        degenerate,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::rat;

    #[test]
    fn pow_examples() {
        let m = Mat2::from_ints(1, 3, 2, 5);
        assert_eq!(mat_pow(&m, 0), Mat2::identity());
        assert_eq!(mat_pow(&m, 2), Mat2::from_ints(7, 18, 12, 31));
        let shear = Mat2::from_ints(1, 1, 0, 1);
        assert_eq!(mat_pow(&shear, 3), Mat2::from_ints(1, 3, 0, 1));
    }

    #[test]
    fn lower_triangular_has_rational_delta() {
        // [[1,0],[a,c]]: Δ = |1 − c|, eigenvalues {1, c}
        for (a, c) in [(2, 5), (-3, -4), (1, 1)] {
            let m = Mat2::from_ints(1, 0, a, c);
            let e = eigen2(&m).unwrap();
            let e = e.real().unwrap();
            assert_eq!(e.delta, QuadExt::from_int((1 - c).abs()));
            let ratio = e.lambda.try_div(&e.mu).unwrap();
            let c = QuadExt::from_int(c);
            assert!(ratio == c || ratio == c.inv().unwrap());
        }
    }

    #[test]
    fn identity_spectrum() {
        let e = eigen2(&Mat2::identity()).unwrap();
        let e = e.real().unwrap().clone();
        assert!(e.delta.is_zero());
        assert!(e.lambda.is_one() && e.mu.is_one());
        assert!(e.jordan_basis().is_none());
    }

    #[test]
    fn jordan_factorization_reassembles() {
        let m = Mat2::from_ints(1, 3, 2, 5);
        let e = eigen2(&m).unwrap();
        let e = e.real().unwrap();
        assert_eq!(&e.lambda * &e.mu, QuadExt::from_int(-1));
        assert_eq!(&e.lambda + &e.mu, QuadExt::from_int(6));
        assert_eq!(e.reassemble().unwrap(), m);
        assert!(!e.degenerate);
    }

    #[test]
    fn complex_spectrum_is_flagged() {
        let m = Mat2::from_ints(0, 1, -1, 0);
        match eigen2(&m).unwrap() {
            Spectrum::Complex {
                trace,
                discriminant,
            } => {
                assert_eq!(trace, int(0));
                assert_eq!(discriminant, int(-4));
            }
            Spectrum::Real(_) => panic!("expected complex eigenvalues"),
        }
    }

    #[test]
    fn degenerate_flag() {
        let m = Mat2::from_rats(int(1), rat(1, 2), int(2), int(1));
        assert!(eigen2(&m).unwrap().real().unwrap().degenerate);
    }

    #[test]
    fn inverse_roundtrip() {
        let h = Mat2::hadamard();
        let hi = h.inverse().unwrap();
        assert_eq!(&h * &hi, Mat2::identity());
        assert!(Mat2::from_ints(1, 2, 2, 4).inverse().is_err());
    }
}
