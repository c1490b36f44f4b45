//! Exact linear algebra: Gauss-Jordan elimination over `QuadExt` and the
//! fraction-free Bareiss determinant over ℤ.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::quad::QuadExt;
use super::ArithError;

/// Solves `A·x = b` for square, nonsingular `A`.
pub fn solve(a: &[Vec<QuadExt>], b: &[QuadExt]) -> Result<Vec<QuadExt>, ArithError> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n), "matrix must be square");
    assert_eq!(b.len(), n, "right-hand side length");
    let mut m: Vec<Vec<QuadExt>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(ArithError::Singular)?;
        m.swap(col, pivot);
        let inv = m[col][col].inv()?;
        for k in col..=n {
            m[col][k] = m[col][k].try_mul(&inv)?;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for k in col..=n {
                let t = factor.try_mul(&m[col][k])?;
                m[r][k] = m[r][k].try_sub(&t)?;
            }
        }
    }
    Ok(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Determinant by Bareiss elimination; every intermediate is an exact integer.
pub fn det_bareiss(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{int, rat};

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    /// Permutation expansion, for checking.
    fn det_leibniz(m: &[Vec<BigInt>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for c in 0..n {
            let minor: Vec<Vec<BigInt>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != c)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][c] * det_leibniz(&minor);
            if c % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    #[test]
    fn bareiss_matches_expansion() {
        let cases = [
            big(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]),
            big(&[&[0, 1, 2], &[3, 0, 5], &[7, 8, 0]]),
            big(&[&[0, 0, 1, 0], &[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]),
            big(&[&[1, 2], &[2, 4]]),
        ];
        for m in &cases {
            assert_eq!(det_bareiss(m), det_leibniz(m));
        }
        assert_eq!(det_bareiss(&[]), BigInt::one());
    }

    #[test]
    fn solve_rational_system() {
        let q = |v: i64| QuadExt::from_int(v);
        let a = vec![vec![q(1), q(1), q(1)], vec![q(1), q(2), q(4)], vec![q(1), q(3), q(9)]];
        let b = vec![q(6), q(17), q(34)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![q(1), q(2), q(3)]);
    }

    #[test]
    fn solve_in_quadratic_field() {
        let s = QuadExt::sqrt_rat(&int(5)).unwrap();
        let a = vec![
            vec![QuadExt::one(), s.clone()],
            vec![s.clone(), QuadExt::from_int(2)],
        ];
        let x_true = vec![QuadExt::from_rat(rat(1, 2)), &s + QuadExt::one()];
        let b: Vec<QuadExt> = a
            .iter()
            .map(|row| row.iter().zip(&x_true).map(|(u, v)| u * v).sum())
            .collect();
        assert_eq!(solve(&a, &b).unwrap(), x_true);
    }

    #[test]
    fn singular_system() {
        let q = |v: i64| QuadExt::from_int(v);
        let a = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(solve(&a, &[q(1), q(2)]), Err(ArithError::Singular));
    }
}
