//! Arbitrary-precision rationals.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator, so it is used directly; this module only adds the parsing and
//! formatting conventions used by instance files and the CLI (`"p/q"` or a
//! bare integer, never a decimal).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ArithError;

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, `"p"`, with optional sign. Decimal points are rejected.
pub fn parse_rat(s: &str) -> Result<Rat, ArithError> {
    let t = s.trim();
    let bad = || ArithError::Parse(s.to_string());
    if t.is_empty() || t.contains('.') || t.contains('e') || t.contains('E') {
        return Err(bad());
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    Ok(Rat::new(n, d))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

/// Exact rational square root, if one exists.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = int_sqrt_exact(r.numer())?;
    let d = int_sqrt_exact(r.denom())?;
    Some(Rat::new(n, d))
}

pub fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    if &(&s * &s) == n {
        Some(s)
    } else {
        None
    }
}

pub fn is_rat_square(r: &Rat) -> bool {
    rat_sqrt(r).is_some()
}

/// `base^exp` for a possibly negative exponent. Panics on `0^negative`.
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        assert!(!base.is_zero(), "zero raised to a negative power");
        num_traits::pow(base.recip(), (-exp) as usize)
    }
}

/// Positive rational `g` such that every entry divided by `g` is an integer
/// and the integers are jointly coprime. Returns one for the all-zero list.
pub fn content(values: &[Rat]) -> Rat {
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for v in values.iter().filter(|v| !v.is_zero()) {
        num_gcd = num_gcd.gcd(v.numer());
        den_lcm = den_lcm.lcm(v.denom());
    }
    if num_gcd.is_zero() {
        Rat::one()
    } else {
        Rat::new(num_gcd, den_lcm)
    }
}

/// Uniform-ish random rational `p/q` with `|p| ≤ h` and `1 ≤ q ≤ h`.
pub fn random_rat<R: rand::Rng + ?Sized>(rng: &mut R, h: i64) -> Rat {
    let p = rng.gen_range(-h..=h);
    let q = rng.gen_range(1..=h);
    rat(p, q)
}

/// Height of a rational: max(|p|, q).
pub fn height(r: &Rat) -> BigInt {
    let n = r.numer().abs();
    let d = r.denom().clone();
    if n > d {
        n
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rat("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("-7").unwrap(), int(-7));
        assert_eq!(parse_rat(" 4/-8 ").unwrap(), rat(-1, 2));
        assert!(parse_rat("0.5").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn format_is_canonical() {
        assert_eq!(format_rat(&rat(6, -4)), "-3/2");
        assert_eq!(format_rat(&int(5)), "5");
    }

    #[test]
    fn sqrt_and_content() {
        assert_eq!(rat_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rat_sqrt(&rat(2, 1)), None);
        assert_eq!(rat_sqrt(&rat(-1, 1)), None);
        assert_eq!(content(&[rat(1, 4), int(0), rat(1, 4)]), rat(1, 4));
        assert_eq!(content(&[int(6), int(-9)]), int(3));
        assert_eq!(content(&[]), int(1));
    }

    #[test]
    fn powers() {
        assert_eq!(rat_pow(&rat(1, 4), 3), rat(1, 64));
        assert_eq!(rat_pow(&int(2), -2), rat(1, 4));
        assert_eq!(rat_pow(&int(0), 0), int(1));
    }
}
