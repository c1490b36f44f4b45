//! Signature grids and exact Holant evaluation.
//!
//! A grid is a bipartite multigraph. Every vertex carries a dense
//! signature whose variables are the vertex's ports, and every edge joins
//! one LHS port to one RHS port.

mod holo;
mod sets;

pub use holo::{apply_holo_to_grid, degenerate_holant_vanishes, tractable_eval, ScalarLedger};
pub use sets::{cover_signature, cover_value, from_set_system, SetSystem, DEFAULT_SET_CAP};

use std::collections::VecDeque;

use thiserror::Error;

use crate::arith::{ArithError, QuadExt};
use crate::signature::{DenseSig, Side, SymSig3};
use crate::tensor::{self, Factor, TensorError, DEFAULT_WIDTH_CAP};

pub const DEFAULT_BRUTE_CAP: usize = 28;
pub const BRUTE_CAP_ENV: &str = "HOLANT3_BRUTE_CAP";

/// Brute-force edge cap, overridable through `HOLANT3_BRUTE_CAP`.
pub fn brute_cap() -> usize {
    std::env::var(BRUTE_CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_BRUTE_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("grid has {edges} edges, above the brute-force cap of {cap}")]
    CapExceeded { edges: usize, cap: usize },
    #[error("vertex {side} {index}: {detail}")]
    Malformed {
        side: &'static str,
        index: usize,
        detail: String,
    },
    #[error("edge {0} refers to a missing vertex")]
    BadEdge(usize),
    #[error("set system: {0}")]
    SetSystem(String),
    #[error("{count} sets exceed the enumeration cap of {cap}")]
    SetCapExceeded { count: usize, cap: usize },
    #[error("closed-form evaluation needs {0}")]
    WrongClass(String),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub l: usize,
    pub lport: usize,
    pub r: usize,
    pub rport: usize,
}

/// Cyclic port order at each vertex; used by planar algorithms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rotation {
    pub lhs: Vec<Vec<usize>>,
    pub rhs: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureGrid {
    pub lhs: Vec<DenseSig>,
    pub rhs: Vec<DenseSig>,
    pub edges: Vec<Edge>,
    pub rotation: Option<Rotation>,
}

impl SignatureGrid {
    /// Grid with `f` on every LHS vertex and `=3` on every RHS vertex.
    /// Ports are numbered in order of appearance in `edges`.
    pub fn ternary(f: &SymSig3, n_lhs: usize, n_rhs: usize, edges: &[(usize, usize)]) -> Result<Self, GridError> {
        let sig = f.to_dense(Side::Lhs);
        let eq = DenseSig::equality(3, Side::Rhs);
        Self::with_signatures(vec![sig; n_lhs], vec![eq; n_rhs], edges)
    }

    pub fn with_signatures(
        lhs: Vec<DenseSig>,
        rhs: Vec<DenseSig>,
        edges: &[(usize, usize)],
    ) -> Result<Self, GridError> {
        let mut lcount = vec![0usize; lhs.len()];
        let mut rcount = vec![0usize; rhs.len()];
        let mut out = Vec::with_capacity(edges.len());
        for (k, &(l, r)) in edges.iter().enumerate() {
            if l >= lhs.len() || r >= rhs.len() {
                return Err(GridError::BadEdge(k));
            }
            out.push(Edge {
                l,
                lport: lcount[l],
                r,
                rport: rcount[r],
            });
            lcount[l] += 1;
            rcount[r] += 1;
        }
        let g = SignatureGrid {
            lhs,
            rhs,
            edges: out,
            rotation: None,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn with_rotation(mut self, rotation: Rotation) -> Result<Self, GridError> {
        let check = |side: &'static str, sigs: &[DenseSig], rot: &[Vec<usize>]| {
            if rot.len() != sigs.len() {
                return Err(GridError::Malformed {
                    side,
                    index: rot.len(),
                    detail: "rotation has the wrong number of vertices".into(),
                });
            }
            for (i, (s, r)) in sigs.iter().zip(rot).enumerate() {
                let mut sorted = r.clone();
                sorted.sort_unstable();
                if sorted != (0..s.arity).collect::<Vec<_>>() {
                    return Err(GridError::Malformed {
                        side,
                        index: i,
                        detail: format!("rotation {r:?} is not a permutation of the ports"),
                    });
                }
            }
            Ok(())
        };
        check("lhs", &self.lhs, &rotation.lhs)?;
        check("rhs", &self.rhs, &rotation.rhs)?;
        self.rotation = Some(rotation);
        Ok(self)
    }

    /// Every port of every vertex is used by exactly one edge.
    pub fn validate(&self) -> Result<(), GridError> {
        for (side, sigs, is_lhs) in [("lhs", &self.lhs, true), ("rhs", &self.rhs, false)] {
            let mut used: Vec<Vec<bool>> = sigs.iter().map(|s| vec![false; s.arity]).collect();
            for (k, e) in self.edges.iter().enumerate() {
                let (v, p) = if is_lhs { (e.l, e.lport) } else { (e.r, e.rport) };
                let slot = used
                    .get_mut(v)
                    .and_then(|ports| ports.get_mut(p))
                    .ok_or(GridError::BadEdge(k))?;
                if *slot {
                    return Err(GridError::Malformed {
                        side,
                        index: v,
                        detail: format!("port {p} used twice"),
                    });
                }
                *slot = true;
            }
            for (i, ports) in used.iter().enumerate() {
                if ports.iter().any(|u| !u) {
                    return Err(GridError::Malformed {
                        side,
                        index: i,
                        detail: format!(
                            "degree {} does not match signature arity {}",
                            ports.iter().filter(|u| **u).count(),
                            ports.len()
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.l, e.r)).collect()
    }

    /// Edge ids on the ports of each vertex.
    pub fn port_edges(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let mut l: Vec<Vec<usize>> = self.lhs.iter().map(|s| vec![usize::MAX; s.arity]).collect();
        let mut r: Vec<Vec<usize>> = self.rhs.iter().map(|s| vec![usize::MAX; s.arity]).collect();
        for (k, e) in self.edges.iter().enumerate() {
            l[e.l][e.lport] = k;
            r[e.r][e.rport] = k;
        }
        (l, r)
    }

    /// The common LHS signature, if every LHS vertex carries the same rational symmetric ternary.
    pub fn common_lhs_sym3(&self) -> Option<SymSig3> {
        let first = self.lhs.first()?.to_sym3()?;
        self.lhs
            .iter()
            .all(|s| s.to_sym3().as_ref() == Some(&first))
            .then_some(first)
    }

    pub fn rhs_all_equality3(&self) -> bool {
        let eq = DenseSig::equality(3, Side::Rhs);
        self.rhs.iter().all(|s| s.values == eq.values)
    }

    /// Replaces every LHS signature with `f`.
    pub fn with_lhs_signature(&self, f: &SymSig3) -> Self {
        let mut g = self.clone();
        let d = f.to_dense(Side::Lhs);
        for s in g.lhs.iter_mut() {
            *s = d.clone();
        }
        g
    }

    /// Connected components as `(lhs vertices, rhs vertices)`.
    pub fn components(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let nl = self.lhs.len();
        let n = nl + self.rhs.len();
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.l].push(nl + e.r);
            adj[nl + e.r].push(e.l);
        }
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            let (mut ls, mut rs) = (Vec::new(), Vec::new());
            while let Some(v) = queue.pop_front() {
                if v < nl {
                    ls.push(v);
                } else {
                    rs.push(v - nl);
                }
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push((ls, rs));
        }
        out
    }

    /// Disjoint union; vertices of `other` are renumbered after those of `self`.
    pub fn disjoint_union(&self, other: &SignatureGrid) -> SignatureGrid {
        let (nl, nr) = (self.lhs.len(), self.rhs.len());
        let mut g = self.clone();
        g.lhs.extend(other.lhs.iter().cloned());
        g.rhs.extend(other.rhs.iter().cloned());
        g.edges.extend(other.edges.iter().map(|e| Edge {
            l: e.l + nl,
            lport: e.lport,
            r: e.r + nr,
            rport: e.rport,
        }));
        g.rotation = match (&self.rotation, &other.rotation) {
            (Some(a), Some(b)) => Some(Rotation {
                lhs: a.lhs.iter().chain(&b.lhs).cloned().collect(),
                rhs: a.rhs.iter().chain(&b.rhs).cloned().collect(),
            }),
            _ => None,
        };
        g
    }
}

/// Exact Holant by enumeration, with the default (or environment) cap.
pub fn eval_brute(g: &SignatureGrid) -> Result<QuadExt, GridError> {
    eval_brute_with_cap(g, brute_cap())
}

/// Depth-first enumeration over the nonzero patterns of each RHS vertex,
/// pruning as soon as a fully assigned LHS vertex evaluates to zero.
pub fn eval_brute_with_cap(g: &SignatureGrid, cap: usize) -> Result<QuadExt, GridError> {
    if g.edges.len() > cap {
        return Err(GridError::CapExceeded {
            edges: g.edges.len(),
            cap,
        });
    }
    g.validate()?;
    let (lports, rports) = g.port_edges();
    // Visit RHS vertices in BFS order so LHS vertices complete early.
    let order = bfs_rhs_order(g);
    let mut remaining = vec![0usize; g.lhs.len()];
    for (v, ports) in lports.iter().enumerate() {
        remaining[v] = ports.len();
    }
    // LHS vertices that become complete after the k-th RHS vertex is assigned.
    let mut completes: Vec<Vec<usize>> = vec![Vec::new(); order.len()];
    for (k, &r) in order.iter().enumerate() {
        for &e in &rports[r] {
            let l = g.edges[e].l;
            remaining[l] -= 1;
            if remaining[l] == 0 {
                completes[k].push(l);
            }
        }
    }
    let mut ctx = BruteCtx {
        g,
        lports: &lports,
        rports: &rports,
        order: &order,
        completes: &completes,
        assignment: vec![0u8; g.edges.len()],
        patterns: g
            .rhs
            .iter()
            .map(|s| {
                s.values
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(i, v)| (i, v.clone()))
                    .collect()
            })
            .collect(),
    };
    // LHS vertices with no edges (arity 0) contribute a constant factor.
    let mut base = QuadExt::one();
    for (l, ports) in lports.iter().enumerate() {
        if ports.is_empty() {
            base = base * &g.lhs[l].values[0];
        }
    }
    Ok(base * ctx.dfs(0, QuadExt::one()))
}

struct BruteCtx<'a> {
    g: &'a SignatureGrid,
    lports: &'a [Vec<usize>],
    rports: &'a [Vec<usize>],
    order: &'a [usize],
    completes: &'a [Vec<usize>],
    assignment: Vec<u8>,
    patterns: Vec<Vec<(usize, QuadExt)>>,
}

impl BruteCtx<'_> {
    fn lhs_value(&self, l: usize) -> &QuadExt {
        let idx = self.lports[l]
            .iter()
            .fold(0usize, |acc, &e| (acc << 1) | self.assignment[e] as usize);
        &self.g.lhs[l].values[idx]
    }

    fn dfs(&mut self, k: usize, acc: QuadExt) -> QuadExt {
        if k == self.order.len() {
            return acc;
        }
        let r = self.order[k];
        let arity = self.rports[r].len();
        let mut total = QuadExt::zero();
        for p in 0..self.patterns[r].len() {
            let idx = self.patterns[r][p].0;
            let w = self.patterns[r][p].1.clone();
            for (j, &e) in self.rports[r].iter().enumerate() {
                self.assignment[e] = ((idx >> (arity - 1 - j)) & 1) as u8;
            }
            let mut val = &acc * &w;
            for &l in &self.completes[k] {
                if val.is_zero() {
                    break;
                }
                val = val * self.lhs_value(l);
            }
            if val.is_zero() {
                continue;
            }
            total = total + self.dfs(k + 1, val);
        }
        total
    }
}

fn bfs_rhs_order(g: &SignatureGrid) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.rhs.len());
    let mut seen = vec![false; g.rhs.len()];
    let mut lhs_nbrs: Vec<Vec<usize>> = vec![Vec::new(); g.lhs.len()];
    let mut rhs_nbrs: Vec<Vec<usize>> = vec![Vec::new(); g.rhs.len()];
    for e in &g.edges {
        lhs_nbrs[e.l].push(e.r);
        rhs_nbrs[e.r].push(e.l);
    }
    for s in 0..g.rhs.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(r) = queue.pop_front() {
            order.push(r);
            for &l in &rhs_nbrs[r] {
                for &r2 in &lhs_nbrs[l] {
                    if !seen[r2] {
                        seen[r2] = true;
                        queue.push_back(r2);
                    }
                }
            }
        }
    }
    order
}

/// Exact Holant by variable elimination over the edge variables.
pub fn eval_dp(g: &SignatureGrid) -> Result<QuadExt, GridError> {
    eval_dp_with_cap(g, DEFAULT_WIDTH_CAP)
}

pub fn eval_dp_with_cap(g: &SignatureGrid, cap: usize) -> Result<QuadExt, GridError> {
    g.validate()?;
    let (lports, rports) = g.port_edges();
    let mut factors = Vec::new();
    for (sigs, ports) in [(&g.lhs, &lports), (&g.rhs, &rports)] {
        for (s, p) in sigs.iter().zip(ports) {
            factors.push(Factor::new(p.clone(), s.values.clone()));
        }
    }
    let out = tensor::contract(factors, &[], cap)?;
    Ok(out.values[0].clone())
}
