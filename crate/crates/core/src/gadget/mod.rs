//! Bipartite gadgets with dangling edges and their exact contraction.
//!
//! A gadget has LHS vertices (default signature: the working ternary `f`),
//! RHS vertices (default `=3`), internal edges between the two sides, unary
//! signatures attached to vertices, and an ordered list of dangling edges.
//! Contraction sums over all internal assignments and returns the signature
//! on the dangling edges, in declared order.
//!
//! Ports of a vertex are numbered in the order internal edges, dangling
//! edges, then unary attachments appear in the gadget description.

pub mod library;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::arith::{Mat2, QuadExt};
use crate::signature::{DenseSig, Side, SymSig3, Unary};
use crate::tensor::{self, Factor, TensorError, DEFAULT_WIDTH_CAP};

pub use library::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum VertexSide {
    Lhs,
    Rhs,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Slot {
    /// The ternary signature supplied at contraction time.
    Working,
    /// `=3`.
    Equality,
    Fixed(DenseSig),
}

impl Slot {
    fn arity(&self) -> usize {
        match self {
            Slot::Working | Slot::Equality => 3,
            Slot::Fixed(d) => d.arity,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexRef {
    pub side: VertexSide,
    pub index: usize,
}

impl VertexRef {
    pub fn lhs(index: usize) -> Self {
        VertexRef {
            side: VertexSide::Lhs,
            index,
        }
    }

    pub fn rhs(index: usize) -> Self {
        VertexRef {
            side: VertexSide::Rhs,
            index,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnaryAttachment {
    pub vertex: VertexRef,
    pub unary: Unary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    pub name: String,
    pub lhs: Vec<Slot>,
    pub rhs: Vec<Slot>,
    /// `(lhs vertex, rhs vertex)`; repeated pairs are parallel edges.
    pub edges: Vec<(usize, usize)>,
    pub dangling: Vec<VertexRef>,
    pub unaries: Vec<UnaryAttachment>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("gadget {gadget}: {side:?} vertex {index} has degree {degree}, expected {expected}")]
    Degree {
        gadget: String,
        side: VertexSide,
        index: usize,
        degree: usize,
        expected: usize,
    },
    #[error("gadget {gadget}: vertex reference {side:?} {index} out of range")]
    BadVertex {
        gadget: String,
        side: VertexSide,
        index: usize,
    },
    #[error("gadget {gadget}: exposed LHS count {m} and RHS count {n} differ modulo 3")]
    SideParity { gadget: String, m: usize, n: usize },
    #[error("unknown gadget {0:?}")]
    UnknownGadget(String),
    #[error("gadget {0} needs a parameter")]
    MissingParameter(String),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

/// Contracted gadget signature over the dangling edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetSignature {
    pub dense: DenseSig,
    /// `(m, n)`: dangling edges on LHS and on RHS vertices.
    pub side_profile: (usize, usize),
}

impl GadgetSignature {
    /// The 2×2 matrix `G(i, j)` of a straddled signature, `i` on the LHS-exposed edge.
    pub fn as_matrix(&self) -> Option<Mat2> {
        if self.side_profile != (1, 1) || self.dense.arity != 2 {
            return None;
        }
        let v = &self.dense.values;
        Some(Mat2::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()))
    }

    pub fn as_sym3(&self) -> Option<SymSig3> {
        self.dense.to_sym3()
    }

    pub fn as_unary(&self) -> Option<Unary> {
        (self.dense.arity == 1)
            .then(|| Unary::new(self.dense.values[0].clone(), self.dense.values[1].clone()))
    }

    pub fn as_scalar(&self) -> Option<QuadExt> {
        (self.dense.arity == 0).then(|| self.dense.values[0].clone())
    }
}

impl fmt::Display for GadgetSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_matrix() {
            Some(m) => write!(f, "{m}"),
            None => write!(f, "{}", self.dense),
        }
    }
}

impl Gadget {
    pub fn new(name: &str, lhs: usize, rhs: usize) -> Self {
        Gadget {
            name: name.to_string(),
            lhs: vec![Slot::Working; lhs],
            rhs: vec![Slot::Equality; rhs],
            edges: Vec::new(),
            dangling: Vec::new(),
            unaries: Vec::new(),
        }
    }

    pub fn edge(mut self, l: usize, r: usize) -> Self {
        self.edges.push((l, r));
        self
    }

    pub fn edges(mut self, list: &[(usize, usize)]) -> Self {
        self.edges.extend_from_slice(list);
        self
    }

    pub fn dangle(mut self, v: VertexRef) -> Self {
        self.dangling.push(v);
        self
    }

    pub fn attach(mut self, v: VertexRef, u: Unary) -> Self {
        self.unaries.push(UnaryAttachment { vertex: v, unary: u });
        self
    }

    fn slot(&self, v: VertexRef) -> Option<&Slot> {
        match v.side {
            VertexSide::Lhs => self.lhs.get(v.index),
            VertexSide::Rhs => self.rhs.get(v.index),
        }
    }

    /// `(m, n)`: dangling edges on LHS and on RHS vertices.
    pub fn side_profile(&self) -> (usize, usize) {
        let m = self
            .dangling
            .iter()
            .filter(|d| d.side == VertexSide::Lhs)
            .count();
        (m, self.dangling.len() - m)
    }

    pub fn validate(&self) -> Result<(), GadgetError> {
        let bad = |v: VertexRef| GadgetError::BadVertex {
            gadget: self.name.clone(),
            side: v.side,
            index: v.index,
        };
        for &(l, r) in &self.edges {
            self.slot(VertexRef::lhs(l)).ok_or_else(|| bad(VertexRef::lhs(l)))?;
            self.slot(VertexRef::rhs(r)).ok_or_else(|| bad(VertexRef::rhs(r)))?;
        }
        for v in self.dangling.iter().chain(self.unaries.iter().map(|u| &u.vertex)) {
            self.slot(*v).ok_or_else(|| bad(*v))?;
        }
        let ports = self.port_lists();
        for (side, slots, lists) in [
            (VertexSide::Lhs, &self.lhs, &ports.0),
            (VertexSide::Rhs, &self.rhs, &ports.1),
        ] {
            for (index, (slot, list)) in slots.iter().zip(lists).enumerate() {
                if list.len() != slot.arity() {
                    return Err(GadgetError::Degree {
                        gadget: self.name.clone(),
                        side,
                        index,
                        degree: list.len(),
                        expected: slot.arity(),
                    });
                }
            }
        }
        let (m, n) = self.side_profile();
        let ul = self
            .unaries
            .iter()
            .filter(|u| u.vertex.side == VertexSide::Lhs)
            .count();
        let ur = self.unaries.len() - ul;
        if (m + ul) % 3 != (n + ur) % 3 {
            return Err(GadgetError::SideParity {
                gadget: self.name.clone(),
                m: m + ul,
                n: n + ur,
            });
        }
        Ok(())
    }

    /// Variable ids on each vertex's ports: internal edges first, then
    /// dangling, then unary attachments.
    fn port_lists(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let mut lhs = vec![Vec::new(); self.lhs.len()];
        let mut rhs = vec![Vec::new(); self.rhs.len()];
        let mut push = |v: VertexRef, var: usize| match v.side {
            VertexSide::Lhs => {
                if let Some(l) = lhs.get_mut(v.index) {
                    l.push(var)
                }
            }
            VertexSide::Rhs => {
                if let Some(r) = rhs.get_mut(v.index) {
                    r.push(var)
                }
            }
        };
        let mut var = 0;
        for &(l, r) in &self.edges {
            push(VertexRef::lhs(l), var);
            push(VertexRef::rhs(r), var);
            var += 1;
        }
        for d in &self.dangling {
            push(*d, var);
            var += 1;
        }
        for u in &self.unaries {
            push(u.vertex, var);
            var += 1;
        }
        (lhs, rhs)
    }

    /// Contracts the gadget with `f` in every working slot.
    pub fn contract(&self, f: &SymSig3) -> Result<GadgetSignature, GadgetError> {
        self.validate()?;
        let (lhs_ports, rhs_ports) = self.port_lists();
        let working = f.to_dense(Side::Lhs);
        let eq = DenseSig::equality(3, Side::Rhs);
        let mut factors = Vec::new();
        for (slots, ports) in [(&self.lhs, &lhs_ports), (&self.rhs, &rhs_ports)] {
            for (slot, vars) in slots.iter().zip(ports) {
                let table = match slot {
                    Slot::Working => &working,
                    Slot::Equality => &eq,
                    Slot::Fixed(d) => d,
                };
                factors.push(Factor::new(vars.clone(), table.values.clone()));
            }
        }
        let first_unary = self.edges.len() + self.dangling.len();
        for (k, u) in self.unaries.iter().enumerate() {
            factors.push(Factor::new(vec![first_unary + k], u.unary.0.to_vec()));
        }
        let open: Vec<usize> = (self.edges.len()..first_unary).collect();
        let out = tensor::contract(factors, &open, DEFAULT_WIDTH_CAP)?;
        let (m, n) = self.side_profile();
        let side = match (m, n) {
            (_, 0) => Side::Lhs,
            (0, _) => Side::Rhs,
            (m, n) => Side::Straddled { m, n },
        };
        Ok(GadgetSignature {
            dense: DenseSig::new(open.len(), out.values, side),
            side_profile: (m, n),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_is_identity() {
        let g = Gadget::new("id", 1, 0)
            .dangle(VertexRef::lhs(0))
            .dangle(VertexRef::lhs(0))
            .dangle(VertexRef::lhs(0));
        let f = SymSig3::from_ints([1, 2, 3, 5]);
        assert_eq!(g.contract(&f).unwrap().as_sym3().unwrap(), f);
    }

    #[test]
    fn degree_violation_is_rejected() {
        let g = Gadget::new("bad", 1, 1).edge(0, 0).dangle(VertexRef::lhs(0));
        assert!(matches!(
            g.contract(&SymSig3::equality()),
            Err(GadgetError::Degree { .. })
        ));
    }

    #[test]
    fn side_parity_is_checked() {
        // one LHS ternary with a fixed binary RHS vertex: m = 2, n = 1
        let g = Gadget {
            name: "parity".into(),
            lhs: vec![Slot::Working],
            rhs: vec![Slot::Fixed(DenseSig::equality(2, Side::Rhs))],
            edges: vec![(0, 0)],
            dangling: vec![VertexRef::lhs(0), VertexRef::lhs(0), VertexRef::rhs(0)],
            unaries: vec![],
        };
        assert!(matches!(
            g.contract(&SymSig3::equality()),
            Err(GadgetError::SideParity { .. })
        ));
    }

    #[test]
    fn out_of_range_vertex() {
        let g = Gadget::new("oops", 1, 1).edge(0, 3);
        assert!(matches!(g.validate(), Err(GadgetError::BadVertex { .. })));
    }
}
