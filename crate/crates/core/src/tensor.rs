//! Exact tensor-network contraction by variable elimination.
//!
//! Every variable is Boolean and is shared by at most the factors that
//! mention it. Internal variables are summed out greedily, always choosing
//! the one whose merged factor has the smallest arity; open variables are
//! kept and returned in the requested order.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::arith::QuadExt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("intermediate tensor of arity {arity} exceeds the cap of {cap}")]
    WidthExceeded { arity: usize, cap: usize },
    #[error("open variable {0} does not occur in any factor")]
    UnknownOpenVariable(usize),
}

pub const DEFAULT_WIDTH_CAP: usize = 20;

/// A dense table over Boolean variables, big-endian in `vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub vars: Vec<usize>,
    pub values: Vec<QuadExt>,
}

impl Factor {
    pub fn new(vars: Vec<usize>, values: Vec<QuadExt>) -> Self {
        assert_eq!(values.len(), 1 << vars.len(), "factor table length");
        let distinct: BTreeSet<_> = vars.iter().collect();
        assert_eq!(distinct.len(), vars.len(), "repeated variable in factor");
        Factor { vars, values }
    }

    pub fn scalar(v: QuadExt) -> Self {
        Factor {
            vars: Vec::new(),
            values: vec![v],
        }
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    /// Reorders to the given variable order (a permutation of `vars`).
    pub fn permuted(&self, order: &[usize]) -> Factor {
        assert_eq!(order.len(), self.vars.len());
        let n = order.len();
        let pos: Vec<usize> = order
            .iter()
            .map(|v| self.vars.iter().position(|w| w == v).expect("variable present"))
            .collect();
        let values = (0..1usize << n)
            .map(|idx| {
                let mut src = 0usize;
                for (k, &p) in pos.iter().enumerate() {
                    let bit = (idx >> (n - 1 - k)) & 1;
                    src |= bit << (n - 1 - p);
                }
                self.values[src].clone()
            })
            .collect();
        Factor {
            vars: order.to_vec(),
            values,
        }
    }
}

/// Product of `factors`, with `sum_var` (if any) summed out.
fn merge(factors: &[Factor], sum_var: Option<usize>) -> Factor {
    let mut union: Vec<usize> = Vec::new();
    for f in factors {
        for &v in &f.vars {
            if Some(v) != sum_var && !union.contains(&v) {
                union.push(v);
            }
        }
    }
    let mut all = union.clone();
    if let Some(s) = sum_var {
        all.push(s);
    }
    let n = all.len();
    // For each factor: the bit shift inside `all`-indexed assignments of each of its vars.
    let maps: Vec<Vec<usize>> = factors
        .iter()
        .map(|f| {
            f.vars
                .iter()
                .map(|v| n - 1 - all.iter().position(|w| w == v).unwrap())
                .collect()
        })
        .collect();
    let out_len = 1usize << union.len();
    let inner = if sum_var.is_some() { 2 } else { 1 };
    let mut values = Vec::with_capacity(out_len);
    for out_idx in 0..out_len {
        let mut acc = QuadExt::zero();
        for s in 0..inner {
            let full = (out_idx << (inner - 1)) | s;
            let mut prod: Option<QuadExt> = None;
            let mut zero = false;
            for (f, shifts) in factors.iter().zip(&maps) {
                let k = f.vars.len();
                let mut idx = 0usize;
                for (j, &sh) in shifts.iter().enumerate() {
                    idx |= ((full >> sh) & 1) << (k - 1 - j);
                }
                let v = &f.values[idx];
                if v.is_zero() {
                    zero = true;
                    break;
                }
                prod = Some(match prod {
                    None => v.clone(),
                    Some(p) => p * v,
                });
            }
            if !zero {
                acc = acc + prod.unwrap_or_else(QuadExt::one);
            }
        }
        values.push(acc);
    }
    Factor {
        vars: union,
        values,
    }
}

/// Contracts every variable not listed in `open`; the result is ordered as `open`.
pub fn contract(factors: Vec<Factor>, open: &[usize], cap: usize) -> Result<Factor, TensorError> {
    let mut pool = factors;
    let open_set: BTreeSet<usize> = open.iter().copied().collect();
    for &v in open {
        if !pool.iter().any(|f| f.vars.contains(&v)) {
            return Err(TensorError::UnknownOpenVariable(v));
        }
    }
    loop {
        let internal: BTreeSet<usize> = pool
            .iter()
            .flat_map(|f| f.vars.iter().copied())
            .filter(|v| !open_set.contains(v))
            .collect();
        let Some((var, width)) = internal
            .iter()
            .map(|&v| {
                let mut u: BTreeSet<usize> = BTreeSet::new();
                for f in pool.iter().filter(|f| f.vars.contains(&v)) {
                    u.extend(f.vars.iter().copied());
                }
                (v, u.len())
            })
            .min_by_key(|&(v, w)| (w, v))
        else {
            break;
        };
        if width > cap {
            return Err(TensorError::WidthExceeded { arity: width, cap });
        }
        let (touching, rest): (Vec<Factor>, Vec<Factor>) =
            pool.into_iter().partition(|f| f.vars.contains(&var));
        pool = rest;
        let merged = merge(&touching, Some(var));
        pool.push(merged);
        // Fold scalars eagerly.
        let (scalars, others): (Vec<Factor>, Vec<Factor>) =
            pool.into_iter().partition(|f| f.vars.is_empty());
        pool = others;
        if !scalars.is_empty() {
            pool.push(merge(&scalars, None));
        }
    }
    let width: BTreeSet<usize> = pool.iter().flat_map(|f| f.vars.iter().copied()).collect();
    if width.len() > cap {
        return Err(TensorError::WidthExceeded {
            arity: width.len(),
            cap,
        });
    }
    let result = if pool.is_empty() {
        Factor::scalar(QuadExt::one())
    } else {
        merge(&pool, None)
    };
    Ok(result.permuted(open))
}
