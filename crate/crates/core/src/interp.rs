//! Polynomial interpolation made executable.
//!
//! A straddled slot is an edge of a grid that can be cut open and filled
//! with a 2×2 straddled signature. Filling every slot with `G1^s` for
//! `s = 0..=n` and solving the resulting Vandermonde system recovers the
//! Holant with the rank-one projector `D` in every slot. Unary
//! interpolation shows that iterates of a non-eigenvector unary span all
//! unaries.

use serde::Serialize;
use thiserror::Error;

use crate::arith::linalg::solve;
use crate::arith::{eigen2, int, mat_pow, ratio_is_root_of_unity, ArithError, EigenData, Mat2, QuadExt};
use crate::fixtures;
use crate::gadget::g1_matrix;
use crate::grid::{eval_brute, Edge, GridError, SignatureGrid};
use crate::signature::{DenseSig, Side, SymSig3, Unary};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterpError {
    #[error("G1 does not work for {f}: {reason}")]
    G1DoesNotWork { f: String, reason: String },
    #[error("Vandermonde nodes {i} and {j} coincide")]
    RepeatedNode { i: usize, j: usize },
    #[error("slot {0} does not name an edge of the grid")]
    BadSlot(usize),
    #[error("seed unary is a row eigenvector of M (eigenvalue {eigenvalue})")]
    SeedIsEigenvector { eigenvalue: String },
    #[error("M has a repeated eigenvalue")]
    RepeatedEigenvalue,
    #[error("M is singular")]
    Singular,
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// The edge of the base grid that is cut open; its LHS end meets the
/// RHS-exposed port of the inserted signature and its RHS end the
/// LHS-exposed port.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StraddledSlot {
    pub edge: usize,
}

fn check_slots(g: &SignatureGrid, slots: &[StraddledSlot]) -> Result<(), InterpError> {
    for s in slots {
        if s.edge >= g.edges.len() {
            return Err(InterpError::BadSlot(s.edge));
        }
    }
    Ok(())
}

/// Every slot replaced by a chain of `s` copies of G1 built from `f`;
/// `s = 0` leaves the edge in place.
pub fn with_g1_chains(
    g: &SignatureGrid,
    slots: &[StraddledSlot],
    f: &SymSig3,
    s: usize,
) -> Result<SignatureGrid, InterpError> {
    check_slots(g, slots)?;
    let mut out = g.clone();
    out.rotation = None;
    if s == 0 {
        return Ok(out);
    }
    for slot in slots {
        let Edge { l, lport, r, rport } = g.edges[slot.edge];
        let first_l = out.lhs.len();
        let first_r = out.rhs.len();
        for _ in 0..s {
            out.lhs.push(f.to_dense(Side::Lhs));
            out.rhs.push(DenseSig::equality(3, Side::Rhs));
        }
        out.edges[slot.edge] = Edge {
            l: first_l,
            lport: 0,
            r,
            rport,
        };
        for t in 0..s {
            let (ft, et) = (first_l + t, first_r + t);
            out.edges.push(Edge { l: ft, lport: 1, r: et, rport: 0 });
            out.edges.push(Edge { l: ft, lport: 2, r: et, rport: 1 });
            let next = if t + 1 < s { (ft + 1, 0) } else { (l, lport) };
            out.edges.push(Edge {
                l: next.0,
                lport: next.1,
                r: et,
                rport: 2,
            });
        }
    }
    out.validate()?;
    Ok(out)
}

/// Every slot filled with the straddled signature `m` (row index on the
/// LHS-exposed port, which faces the slot's RHS vertex).
pub fn with_binary(g: &SignatureGrid, slots: &[StraddledSlot], m: &Mat2) -> Result<SignatureGrid, InterpError> {
    check_slots(g, slots)?;
    let mut out = g.clone();
    out.rotation = None;
    let values = vec![m.get(0, 0).clone(), m.get(0, 1).clone(), m.get(1, 0).clone(), m.get(1, 1).clone()];
    for slot in slots {
        let Edge { l, lport, r, rport } = g.edges[slot.edge];
        let (nl, nr) = (out.lhs.len(), out.rhs.len());
        out.lhs.push(DenseSig::new(2, values.clone(), Side::Straddled { m: 1, n: 1 }));
        out.rhs.push(DenseSig::equality(2, Side::Rhs));
        out.edges[slot.edge] = Edge { l: nl, lport: 0, r, rport };
        out.edges.push(Edge { l: nl, lport: 1, r: nr, rport: 0 });
        out.edges.push(Edge { l, lport, r: nr, rport: 1 });
    }
    out.validate()?;
    Ok(out)
}

/// Eigen data of G1's matrix when G1 works: nonsingular, real spectrum,
/// eigenvalue ratio not a root of unity and an eigenbasis `[[−x, y], [1, 1]]`.
pub fn g1_eigen(f: &SymSig3) -> Result<EigenData, InterpError> {
    let fail = |reason: String| InterpError::G1DoesNotWork { f: f.to_string(), reason };
    let m = g1_matrix(f);
    if m.det().is_zero() {
        return Err(fail("G1 is degenerate".into()));
    }
    let rou = ratio_is_root_of_unity(&m)?;
    if let Some(order) = rou.order {
        return Err(fail(format!("eigenvalue ratio is a root of unity of order {order}")));
    }
    let spectrum = eigen2(&m)?;
    let e = spectrum
        .real()
        .ok_or_else(|| fail("complex eigenvalues lie outside a real quadratic field".into()))?;
    if e.x.is_none() {
        return Err(fail("lower-left entry is zero, no eigenbasis of the form [[-x, y], [1, 1]]".into()));
    }
    Ok(e.clone())
}

/// The unnormalized projector `[[y, xy], [1, x]]` and its prefactor `(x + y)⁻¹`.
pub fn degenerate_projector(e: &EigenData) -> Result<(Mat2, QuadExt), InterpError> {
    let x = e.x.clone().ok_or(ArithError::Singular)?;
    let y = e.y.clone().ok_or(ArithError::Singular)?;
    let prefactor = x.try_add(&y)?.inv()?;
    let xy = x.try_mul(&y)?;
    Ok((Mat2::new(y, xy, QuadExt::one(), x), prefactor))
}

/// Holant with `D = (x + y)⁻¹·[[y, xy], [1, x]]` in every slot.
pub fn direct_with_d(g: &SignatureGrid, slots: &[StraddledSlot], f: &SymSig3) -> Result<QuadExt, InterpError> {
    let e = g1_eigen(f)?;
    let (unnormalized, prefactor) = degenerate_projector(&e)?;
    let d = unnormalized.scale(&prefactor);
    Ok(eval_brute(&with_binary(g, slots, &d)?)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct VandermondeRecovery {
    #[serde(serialize_with = "ser_all")]
    pub nodes: Vec<QuadExt>,
    /// `Holant(Ω_s)` for `s = 0..=n`.
    #[serde(serialize_with = "ser_all")]
    pub samples: Vec<QuadExt>,
    /// `c_{i, n−i}`, indexed by the number `i` of λ-projector slots.
    #[serde(serialize_with = "ser_all")]
    pub coefficients: Vec<QuadExt>,
    /// `c_{0, n}`: the Holant with `D` in every slot.
    #[serde(serialize_with = "ser_one")]
    pub recovered: QuadExt,
    /// `(x + y)^{−n}`, so that `recovered = scaling · (value with [[y, xy], [1, x]])`.
    #[serde(serialize_with = "ser_one")]
    pub scaling: QuadExt,
}

fn ser_all<S: serde::Serializer>(v: &[QuadExt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

fn ser_one<S: serde::Serializer>(v: &QuadExt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Recovers the Holant with `D` in every slot from `n + 1` grids built only from `f`.
pub fn vandermonde_recover(
    g: &SignatureGrid,
    slots: &[StraddledSlot],
    f: &SymSig3,
) -> Result<VandermondeRecovery, InterpError> {
    check_slots(g, slots)?;
    let n = slots.len();
    if n == 0 {
        let v = eval_brute(g)?;
        return Ok(VandermondeRecovery {
            nodes: vec![QuadExt::one()],
            samples: vec![v.clone()],
            coefficients: vec![v.clone()],
            recovered: v,
            scaling: QuadExt::one(),
        });
    }
    let e = g1_eigen(f)?;
    let nodes: Vec<QuadExt> = (0..=n)
        .map(|i| e.lambda.pow(i as u32).try_mul(&e.mu.pow((n - i) as u32)))
        .collect::<Result<_, _>>()?;
    for i in 0..=n {
        for j in i + 1..=n {
            if nodes[i] == nodes[j] {
                return Err(InterpError::RepeatedNode { i, j });
            }
        }
    }
    let samples: Vec<QuadExt> = (0..=n)
        .map(|s| Ok(eval_brute(&with_g1_chains(g, slots, f, s)?)?))
        .collect::<Result<_, InterpError>>()?;
    let system: Vec<Vec<QuadExt>> = (0..=n)
        .map(|s| nodes.iter().map(|x| x.pow(s as u32)).collect())
        .collect();
    let coefficients = solve(&system, &samples)?;
    let (_, prefactor) = degenerate_projector(&e)?;
    Ok(VandermondeRecovery {
        nodes,
        samples,
        recovered: coefficients[0].clone(),
        coefficients,
        scaling: prefactor.pow(n as u32),
    })
}

/// A replayable witness that `target` lies in the span of `s·M^{j1}` and `s·M^{j2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnaryInterpCertificate {
    pub j1: u32,
    pub j2: u32,
    pub rows: [Unary; 2],
    #[serde(serialize_with = "ser_all")]
    pub coefficients: Vec<QuadExt>,
    pub target: Unary,
}

impl UnaryInterpCertificate {
    /// Recomputes both iterates and the combination from scratch.
    pub fn replay(&self, m: &Mat2, s: &Unary) -> bool {
        let r1 = mat_pow(m, self.j1).transpose().right_apply(&s.0);
        let r2 = mat_pow(m, self.j2).transpose().right_apply(&s.0);
        if r1 != self.rows[0].0 || r2 != self.rows[1].0 {
            return false;
        }
        let (a, b) = (&self.coefficients[0], &self.coefficients[1]);
        (0..2).all(|k| &(a * &r1[k]) + &(b * &r2[k]) == self.target.0[k])
    }
}

/// Writes `target` as a combination of `s` and `s·M`.
pub fn unary_interp_coeffs(m: &Mat2, s: &Unary, target: &Unary) -> Result<UnaryInterpCertificate, InterpError> {
    let det = m.det();
    if det.is_zero() {
        return Err(InterpError::Singular);
    }
    let tr = m.trace();
    let disc = tr.try_mul(&tr)?.try_sub(&det.scale(&int(4)))?;
    if disc.is_zero() {
        return Err(InterpError::RepeatedEigenvalue);
    }
    let s1 = m.left_apply(&s.0);
    let cross = s.0[0].try_mul(&s1[1])?.try_sub(&s.0[1].try_mul(&s1[0])?)?;
    if cross.is_zero() {
        let k = if s.0[0].is_zero() { 1 } else { 0 };
        let eigenvalue = s1[k].try_div(&s.0[k])?;
        return Err(InterpError::SeedIsEigenvector {
            eigenvalue: eigenvalue.to_string(),
        });
    }
    let system = vec![
        vec![s.0[0].clone(), s1[0].clone()],
        vec![s.0[1].clone(), s1[1].clone()],
    ];
    let coefficients = solve(&system, &target.0)?;
    Ok(UnaryInterpCertificate {
        j1: 0,
        j2: 1,
        rows: [s.clone(), Unary::new(s1[0].clone(), s1[1].clone())],
        coefficients,
        target: target.clone(),
    })
}

/// Certificates for the pinning unaries `[1, 0]` and `[0, 1]`.
pub fn pinning_certificates(m: &Mat2, s: &Unary) -> Result<[UnaryInterpCertificate; 2], InterpError> {
    let d0 = Unary::from_rats(int(1), int(0));
    let d1 = Unary::from_rats(int(0), int(1));
    Ok([unary_interp_coeffs(m, s, &d0)?, unary_interp_coeffs(m, s, &d1)?])
}

/// A grid with designated slots and the signature used to fill them.
#[derive(Clone, Debug)]
pub struct InterpFixture {
    pub id: &'static str,
    pub grid: SignatureGrid,
    pub slots: Vec<StraddledSlot>,
    pub f: SymSig3,
}

pub const INTERP_FIXTURE_IDS: [&str; 5] = ["theta-1", "cycle4-0", "cycle4-1", "cycle4-2", "theta-pair-2"];

/// Built on `f = [1, 2, 3, 5]`, whose G1 eigenvalues live in ℚ(√10).
pub fn interp_fixture(id: &str) -> Option<InterpFixture> {
    let f = SymSig3::from_ints([1, 2, 3, 5]);
    let slots = |edges: &[usize]| edges.iter().map(|&edge| StraddledSlot { edge }).collect::<Vec<_>>();
    let (id, grid, slots) = match id {
        "theta-1" => ("theta-1", fixtures::theta_grid(&f), slots(&[0])),
        "cycle4-0" => ("cycle4-0", fixtures::doubled_cycle_grid(&f, 2), slots(&[])),
        "cycle4-1" => ("cycle4-1", fixtures::doubled_cycle_grid(&f, 2), slots(&[2])),
        "cycle4-2" => ("cycle4-2", fixtures::doubled_cycle_grid(&f, 2), slots(&[0, 5])),
        "theta-pair-2" => {
            let t = fixtures::theta_grid(&f);
            ("theta-pair-2", t.disjoint_union(&t), slots(&[0, 3]))
        }
        _ => return None,
    };
    Some(InterpFixture { id, grid, slots, f })
}

pub fn interp_fixtures() -> Vec<InterpFixture> {
    INTERP_FIXTURE_IDS.iter().filter_map(|id| interp_fixture(id)).collect()
}
