//! Seeded sampling in place of a decision procedure for the polynomial systems.
//!
//! Nothing here proves emptiness. Each system is sampled either uniformly
//! or on a surface where one of its equations already holds, and every
//! satisfying point is reported and compared with the expected solutions.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::conditions::{
    eval_all, in_r_t_v_family, listed_r_s, listed_r_t_u, listed_r_t_v, ConditionSystemId, MatrixGadget, Point,
    R_AND_S, R_AND_T_AND_U, R_AND_T_AND_V,
};
use crate::arith::rat::random_rat;
use crate::arith::{int, rat, Poly, Rat, RouCondition};

pub const DEFAULT_SEED: u64 = 20240;
pub const DEFAULT_HEIGHT: i64 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FalsifySystem {
    /// `f1 = f2 = f3 = f4 = 0` in `x ∈ ℂ`, with factors taken from the gadget contractions.
    AbsorbLhs,
    /// The same system as printed, where the leading coefficients of `f2`
    /// and `f3` read `ab + c` and `a³ + b³ + c³`.
    AbsorbLhsPrinted,
    /// `g1 = g2 = g3 = 0` in `y`.
    AbsorbRhs,
    RAndS,
    RAndTAndU,
    RAndTAndV,
    /// `con1 ∧ con2a` with each G3 exception or G3 failure condition.
    Con1Con2a,
    /// `con1 ∧ con2b-reduced` with the same third conditions.
    Con1Con2b,
}

impl FalsifySystem {
    pub const ALL: [FalsifySystem; 8] = [
        FalsifySystem::AbsorbLhs,
        FalsifySystem::AbsorbLhsPrinted,
        FalsifySystem::AbsorbRhs,
        FalsifySystem::RAndS,
        FalsifySystem::RAndTAndU,
        FalsifySystem::RAndTAndV,
        FalsifySystem::Con1Con2a,
        FalsifySystem::Con1Con2b,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FalsifySystem::AbsorbLhs => "absorb-lhs",
            FalsifySystem::AbsorbLhsPrinted => "absorb-lhs-printed",
            FalsifySystem::AbsorbRhs => "absorb-rhs",
            FalsifySystem::RAndS => "r-s",
            FalsifySystem::RAndTAndU => "r-t-u",
            FalsifySystem::RAndTAndV => "r-t-v",
            FalsifySystem::Con1Con2a => "con1-con2a",
            FalsifySystem::Con1Con2b => "con1-con2b",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|x| x.name() == s)
    }
}

impl fmt::Display for FalsifySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FalsifyHit {
    pub point: Point,
    pub detail: String,
    /// On a listed solution or a known exceptional family.
    pub expected: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FalsifyReport {
    pub system: FalsifySystem,
    pub samples: usize,
    pub seed: u64,
    pub height: i64,
    pub strategy: &'static str,
    /// Samples that satisfied the system.
    pub hit_samples: usize,
    pub expected_hit_samples: usize,
    /// Distinct satisfying points, at most [`MAX_LISTED_HITS`].
    pub hits: Vec<FalsifyHit>,
    /// Complex evaluations cross-checked between the real/imaginary
    /// encoding and direct arithmetic in ℚ(i).
    pub encoding_checks: usize,
    pub encoding_mismatches: usize,
}

pub const MAX_LISTED_HITS: usize = 50;

impl FalsifyReport {
    pub fn new_hit_samples(&self) -> usize {
        self.hit_samples - self.expected_hit_samples
    }

    /// No unexpected solution and no encoding disagreement.
    pub fn clean(&self) -> bool {
        self.new_hit_samples() == 0 && self.encoding_mismatches == 0
    }
}

/// `u + v·i` with rational parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gaussian {
    pub re: Rat,
    pub im: Rat,
}

impl Gaussian {
    fn mul(&self, o: &Gaussian) -> Gaussian {
        Gaussian {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Horner evaluation of a rational polynomial.
    pub fn eval(p: &[Rat; 4], x: &Gaussian) -> Gaussian {
        p.iter().rev().fold(
            Gaussian {
                re: Rat::zero(),
                im: Rat::zero(),
            },
            |acc, c| {
                let m = acc.mul(x);
                Gaussian { re: m.re + c, im: m.im }
            },
        )
    }
}

/// Real and imaginary parts of `k0 + k1·x + k2·x² + k3·x³` at `x = u + v·i`
/// through the power encoding `r3 = u³ − 3uv²`, `i3 = 3u²v − v³`, `r2 = u² − v²`, `i2 = 2uv`.
pub fn encoded_parts(k: &[Rat; 4], u: &Rat, v: &Rat) -> (Rat, Rat) {
    let r3 = u * u * u - int(3) * u * v * v;
    let i3 = int(3) * u * u * v - v * v * v;
    let r2 = u * u - v * v;
    let i2 = int(2) * u * v;
    let re = &k[0] + &k[1] * u + &k[2] * &r2 + &k[3] * &r3;
    let im = &k[1] * v + &k[2] * &i2 + &k[3] * &i3;
    (re, im)
}

/// Coefficients in `x` (constant first) of the four LHS absorption factors at `[1, a, b, c]`.
pub fn absorb_lhs_coeffs(p: &Point, printed: bool) -> [[Rat; 4]; 4] {
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let (two, three) = (int(2), int(3));
    let one = Rat::one();
    let ab = a * b;
    let cube = |x: &Rat| x * x * x;
    let (f2_top, f3_top) = if printed {
        (&ab + c, cube(a) + cube(b) + cube(c))
    } else {
        (&ab + c * c, cube(a) + &two * cube(b) + cube(c))
    };
    [
        [one.clone(), &three * a, &three * b, c.clone()],
        [
            &ab + &one,
            &two * b * b + a * c + &three * a,
            &three * b * c + &two * a * a + b,
            f2_top,
        ],
        [
            &one + &two * cube(a) + cube(b),
            &three * (a + &two * a * a * b + b * b * c),
            &three * (a * a + &two * a * b * b + b * c * c),
            f3_top,
        ],
        [
            &one + &two * &ab + &ab * c,
            &three * a + &three * a * a * b + a * c + &two * b * b + &two * b * b * c + a * c * c,
            &two * a * a + b + &three * a * b * b + &two * a * a * c + b * c + &three * b * c * c,
            &ab + &two * &ab * c + cube(c),
        ],
    ]
}

/// Coefficients in `y` of the three RHS absorption factors at `[1, a, b, c]`.
pub fn absorb_rhs_coeffs(p: &Point) -> [[Rat; 4]; 3] {
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let three = int(3);
    let (one, zero) = (Rat::one(), Rat::zero());
    [
        [one.clone(), zero.clone(), zero, one.clone()],
        [c.clone(), a.clone(), b.clone(), one.clone()],
        [c * c, &three * b * b, &three * a * a, one],
    ]
}

fn poly(k: &[Rat; 4]) -> Poly {
    Poly::new(k.to_vec())
}

fn nonzero_rat<R: Rng>(rng: &mut R, h: i64) -> Rat {
    loop {
        let r = random_rat(rng, h);
        if !r.is_zero() {
            return r;
        }
    }
}

struct Tally {
    hit_samples: usize,
    expected: usize,
    distinct: BTreeMap<String, FalsifyHit>,
    encoding_checks: usize,
    encoding_mismatches: usize,
}

impl Tally {
    fn new() -> Self {
        Tally {
            hit_samples: 0,
            expected: 0,
            distinct: BTreeMap::new(),
            encoding_checks: 0,
            encoding_mismatches: 0,
        }
    }

    fn hit(&mut self, point: Point, detail: String, expected: bool) {
        self.hit_samples += 1;
        if expected {
            self.expected += 1;
        }
        if self.distinct.len() < MAX_LISTED_HITS {
            self.distinct.entry(format!("{point} {detail}")).or_insert(FalsifyHit {
                point,
                detail,
                expected,
            });
        }
    }
}

/// Samples `samples` points for `system` with a `ChaCha8` stream seeded by `seed`;
/// rationals have numerator and denominator bounded by `height`.
pub fn falsify_emptiness(system: FalsifySystem, samples: usize, height: i64, seed: u64) -> FalsifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = height.max(1);
    let mut t = Tally::new();
    let strategy = match system {
        FalsifySystem::AbsorbLhs | FalsifySystem::AbsorbLhsPrinted => {
            let printed = system == FalsifySystem::AbsorbLhsPrinted;
            for i in 0..samples {
                absorb_lhs_sample(&mut rng, h, printed, i % 2 == 1, &mut t);
            }
            "alternating: uniform (a, b, c) with a common-root gcd test over Q[x] and a random complex x; \
             (a, b, c) solved so that f1 vanishes at a random complex x"
        }
        FalsifySystem::AbsorbRhs => {
            for i in 0..samples {
                absorb_rhs_sample(&mut rng, h, i % 2 == 1, &mut t);
            }
            "alternating: uniform (a, b, c); (a, b) uniform with c chosen so that g2(-1) = 0; common-root gcd over Q[y]"
        }
        FalsifySystem::RAndS | FalsifySystem::RAndTAndU | FalsifySystem::RAndTAndV => {
            for _ in 0..samples {
                r_surface_sample(&mut rng, h, system, &mut t);
            }
            "points on a random R_i surface with abc != 0: c and a uniform, b solved (R1: b uniform)"
        }
        FalsifySystem::Con1Con2a | FalsifySystem::Con1Con2b => {
            for _ in 0..samples {
                con_curve_sample(&mut rng, h, system == FalsifySystem::Con1Con2b, &mut t);
            }
            "rational parametrization b = t*a of the con2 curve, c from con1, t uniform"
        }
    };
    FalsifyReport {
        system,
        samples,
        seed,
        height: h,
        strategy,
        hit_samples: t.hit_samples,
        expected_hit_samples: t.expected,
        hits: t.distinct.into_values().collect(),
        encoding_checks: t.encoding_checks,
        encoding_mismatches: t.encoding_mismatches,
    }
}

fn absorb_lhs_sample(rng: &mut ChaCha8Rng, h: i64, printed: bool, on_surface: bool, t: &mut Tally) {
    let u = random_rat(rng, h);
    let v = random_rat(rng, h);
    let a = nonzero_rat(rng, h);
    let (b, c) = if on_surface {
        // f1(u + vi) = 0 is linear in (b, c): [[3 r2, r3], [3 i2, i3]]·(b, c) = (−1 − 3au, −3av)
        let r3 = &u * &u * &u - int(3) * &u * &v * &v;
        let i3 = int(3) * &u * &u * &v - &v * &v * &v;
        let r2 = &u * &u - &v * &v;
        let i2 = int(2) * &u * &v;
        let rhs0 = -(Rat::one() + int(3) * &a * &u);
        let rhs1 = -(int(3) * &a * &v);
        let det = int(3) * (&r2 * &i3 - &r3 * &i2);
        if !det.is_zero() {
            let b = (&rhs0 * &i3 - &r3 * &rhs1) / &det;
            let c = (int(3) * &r2 * &rhs1 - int(3) * &i2 * &rhs0) / &det;
            (b, c)
        } else if v.is_zero() && !u.is_zero() {
            let b = random_rat(rng, h);
            let c = (rhs0 - int(3) * &b * &u * &u) / (&u * &u * &u);
            (b, c)
        } else {
            (random_rat(rng, h), random_rat(rng, h))
        }
    } else {
        (random_rat(rng, h), random_rat(rng, h))
    };
    let p = Point::new(a, b, c);
    let coeffs = absorb_lhs_coeffs(&p, printed);
    let x = Gaussian { re: u.clone(), im: v.clone() };
    let mut all_vanish = true;
    for k in &coeffs {
        let direct = Gaussian::eval(k, &x);
        let (re, im) = encoded_parts(k, &u, &v);
        t.encoding_checks += 1;
        if direct.re != re || direct.im != im {
            t.encoding_mismatches += 1;
        }
        all_vanish &= direct.is_zero();
    }
    let g = Poly::gcd_all(coeffs.iter().map(poly).collect::<Vec<_>>().iter());
    if all_vanish || !g.is_unit() {
        let detail = if g.is_unit() {
            format!("all factors vanish at x = {u} + ({v})i")
        } else {
            format!("common factor {g}")
        };
        let expected = absorb_lhs_exception_roots(&p)
            .iter()
            .any(|r| Poly::root_factor(r).divides(&g));
        t.hit(p, detail, expected);
    }
}

/// Common roots of the contraction factors on the families where they exist:
/// `x = −1` on `[1, a, a, 1]`, `x = 1` on `[1, a, −2a − 1, 3a + 2]` and
/// `x = −1/t` on the degenerate `[1, t, t², t³]`.
pub fn absorb_lhs_exception_roots(p: &Point) -> Vec<Rat> {
    let mut roots = Vec::new();
    if p.a == p.b && p.c.is_one() {
        roots.push(int(-1));
    }
    if p.b == -(int(2) * &p.a) - int(1) && p.c == int(3) * &p.a + int(2) {
        roots.push(int(1));
    }
    let t = &p.a;
    if !t.is_zero() && p.b == t * t && p.c == t * t * t {
        roots.push(-t.recip());
    }
    roots
}

/// `[1, a, a, 1]` or `[1, a, −2a − 1, 3a + 2]`.
pub fn in_absorb_rhs_exception(p: &Point) -> bool {
    let easy = p.a == p.b && p.c.is_one();
    let other = p.b == -(int(2) * &p.a) - int(1) && p.c == int(3) * &p.a + int(2);
    easy || other
}

fn absorb_rhs_sample(rng: &mut ChaCha8Rng, h: i64, on_surface: bool, t: &mut Tally) {
    let a = random_rat(rng, h);
    let b = random_rat(rng, h);
    let c = if on_surface {
        Rat::one() + &a - &b
    } else {
        random_rat(rng, h)
    };
    let p = Point::new(a, b, c);
    let coeffs = absorb_rhs_coeffs(&p);
    let g = Poly::gcd_all(coeffs.iter().map(poly).collect::<Vec<_>>().iter());
    if !g.is_unit() {
        let minus_one_root = Poly::root_factor(&int(-1)).divides(&g);
        let expected = minus_one_root && in_absorb_rhs_exception(&p);
        t.hit(p, format!("common factor {g}"), expected);
    }
}

fn r_surface_sample(rng: &mut ChaCha8Rng, h: i64, system: FalsifySystem, t: &mut Tally) {
    let p = loop {
        let i = rng.gen_range(1..=5u8);
        let a = nonzero_rat(rng, h);
        let (b, c) = if i == 1 {
            (nonzero_rat(rng, h), int(-1))
        } else {
            let c = nonzero_rat(rng, h);
            let (k, q) = match i {
                2 => (1, &c * &c + &c + int(1)),
                3 => (2, &c * &c + int(1)),
                4 => (3, &c * &c - &c + int(1)),
                _ => (4, &c * &c - int(2) * &c + int(1)),
            };
            (-q / (int(k) * &a), c)
        };
        let p = Point::new(a, b, c);
        if p.abc_nonzero() {
            break p;
        }
    };
    let (ids, expected): (&[ConditionSystemId], bool) = match system {
        FalsifySystem::RAndS => (&R_AND_S, listed_r_s().contains(&p)),
        FalsifySystem::RAndTAndU => (&R_AND_T_AND_U, listed_r_t_u().contains(&p)),
        _ => (&R_AND_T_AND_V, listed_r_t_v().contains(&p) || in_r_t_v_family(&p)),
    };
    if eval_all(ids, &p) {
        let detail = super::conditions::witnesses(ids, &p).join(" & ");
        t.hit(p, detail, expected);
    }
}

/// The third conditions paired with `con1 ∧ con2`.
pub fn con_third_conditions() -> Vec<ConditionSystemId> {
    let mut v: Vec<ConditionSystemId> = (1..=4).map(ConditionSystemId::G3Works).collect();
    v.extend(RouCondition::ALL.map(|c| ConditionSystemId::C3eq(MatrixGadget::G3, c)));
    v.push(ConditionSystemId::Singular(MatrixGadget::G3));
    v
}

/// `[1, −1, 1, −1]` and `[1, −1/3, −1/3, 1]`.
pub fn con_expected(p: &Point) -> bool {
    *p == Point::ints(-1, 1, -1) || *p == Point::new(rat(-1, 3), rat(-1, 3), int(1))
}

fn con_curve_sample(rng: &mut ChaCha8Rng, h: i64, reduced: bool, t: &mut Tally) {
    let p = loop {
        let s = nonzero_rat(rng, h);
        let denom = if reduced {
            Rat::one() + num_traits::pow(s.clone(), 6) + num_traits::pow(s.clone(), 9)
        } else {
            Rat::one() + int(2) * num_traits::pow(s.clone(), 3)
        };
        if denom.is_zero() {
            continue;
        }
        let a = if reduced {
            -num_traits::pow(s.clone(), 4) / denom
        } else {
            -s.clone() / denom
        };
        let b = &s * &a;
        let c = Rat::one() - (&a * &a * &a - &b * &b * &b) / (&a * &b);
        break Point::new(a, b, c);
    };
    let second = if reduced {
        ConditionSystemId::Con2bReduced
    } else {
        ConditionSystemId::Con2a
    };
    debug_assert!(eval_all(&[ConditionSystemId::Con1, second], &p));
    let held: Vec<String> = con_third_conditions()
        .into_iter()
        .filter(|&id| super::conditions::eval_condition(id, &p))
        .map(|id| id.to_string())
        .collect();
    if !held.is_empty() {
        let expected = con_expected(&p);
        t.hit(p, held.join(", "), expected);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::QuadExt;
    use crate::gadget::{absorb_factor_lhs, absorb_factor_rhs};
    use crate::signature::SymSig3;

    #[test]
    fn coefficient_lists_match_contractions() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..50 {
            let p = Point::new(random_rat(&mut rng, 5), random_rat(&mut rng, 5), random_rat(&mut rng, 5));
            let x = random_rat(&mut rng, 5);
            let lhs = absorb_factor_lhs(&p.signature(), &QuadExt::from(x.clone()));
            for (k, coeffs) in absorb_lhs_coeffs(&p, false).iter().enumerate() {
                assert_eq!(QuadExt::from(poly(coeffs).eval(&x)), lhs[k], "f{} at {p}", k + 1);
            }
            let rhs = absorb_factor_rhs(&p.signature(), &QuadExt::from(x.clone()));
            for (k, coeffs) in absorb_rhs_coeffs(&p).iter().enumerate() {
                assert_eq!(QuadExt::from(poly(coeffs).eval(&x)), rhs[k], "g{} at {p}", k + 1);
            }
        }
    }

    #[test]
    fn printed_system_differs_in_two_leading_coefficients() {
        let p = Point::ints(1, 2, 3);
        let v = absorb_lhs_coeffs(&p, false);
        let w = absorb_lhs_coeffs(&p, true);
        assert_eq!(v[0], w[0]);
        assert_eq!(v[3], w[3]);
        assert_eq!(v[1][..3], w[1][..3]);
        assert_eq!(v[2][..3], w[2][..3]);
        assert_eq!(&v[1][3] - &w[1][3], int(6));
        assert_eq!(&v[2][3] - &w[2][3], int(8));
    }

    #[test]
    fn equal_middle_kills_every_lhs_factor() {
        for a in [int(2), rat(-1, 2), int(-3)] {
            let f = SymSig3::new(int(1), a.clone(), a, int(1));
            let v = absorb_factor_lhs(&f, &QuadExt::from(int(-1)));
            assert!(v.iter().all(|x| x.is_zero()));
        }
        let t = rat(-2, 3);
        let p = Point::new(t.clone(), &t * &t, &t * &t * &t);
        let x = absorb_lhs_exception_roots(&p).pop().unwrap();
        assert!(absorb_factor_lhs(&p.signature(), &QuadExt::from(x)).iter().all(|v| v.is_zero()));
        for a in [rat(-1, 2), int(2)] {
            let q = Point::new(a.clone(), -(int(2) * &a) - int(1), int(3) * &a + int(2));
            assert_eq!(absorb_lhs_exception_roots(&q), vec![int(1)]);
            assert!(absorb_factor_lhs(&q.signature(), &QuadExt::one()).iter().all(|v| v.is_zero()));
        }
    }

    #[test]
    fn encoding_matches_gaussian_arithmetic() {
        let k = [int(1), int(-2), rat(1, 2), int(3)];
        let x = Gaussian { re: rat(2, 3), im: int(-1) };
        let d = Gaussian::eval(&k, &x);
        assert_eq!(encoded_parts(&k, &x.re, &x.im), (d.re, d.im));
    }

    #[test]
    fn example_rhs_exception() {
        let p = Point::of(&SymSig3::from_ints([1, 2, 2, 1])).unwrap();
        let g = Poly::gcd_all(absorb_rhs_coeffs(&p).iter().map(poly).collect::<Vec<_>>().iter());
        assert_eq!(g, Poly::root_factor(&int(-1)));
        assert!(in_absorb_rhs_exception(&p));
    }

    #[test]
    fn absorb_lhs_small_run_is_clean() {
        for sys in [FalsifySystem::AbsorbLhs, FalsifySystem::AbsorbLhsPrinted] {
            let r = falsify_emptiness(sys, 2000, DEFAULT_HEIGHT, 1);
            assert!(r.clean(), "{:?}", r.hits);
            assert_eq!(r.encoding_checks, 8000);
        }
    }

    #[test]
    fn absorb_rhs_rediscovers_both_families() {
        let r = falsify_emptiness(FalsifySystem::AbsorbRhs, 4000, 3, 2);
        assert!(r.clean(), "{:?}", r.hits);
        let pts: Vec<&Point> = r.hits.iter().map(|h| &h.point).collect();
        assert!(pts.iter().any(|p| p.a == p.b && !p.a.is_zero()));
        assert!(pts.iter().any(|p| p.b == -(int(2) * &p.a) - int(1)));
    }

    #[test]
    fn r_systems_small_runs() {
        for sys in [FalsifySystem::RAndS, FalsifySystem::RAndTAndU, FalsifySystem::RAndTAndV] {
            let r = falsify_emptiness(sys, 1500, 3, 3);
            assert!(r.clean(), "{sys}: {:?}", r.hits);
        }
    }

    #[test]
    fn con_curves_hit_expected_points() {
        let r = falsify_emptiness(FalsifySystem::Con1Con2a, 1500, 3, 4);
        assert!(r.clean(), "{:?}", r.hits);
        assert!(r.hits.iter().any(|h| h.point == Point::new(rat(-1, 3), rat(-1, 3), int(1))));
        let r = falsify_emptiness(FalsifySystem::Con1Con2b, 800, 3, 4);
        assert!(r.clean(), "{:?}", r.hits);
    }
}
